"""Constructive bijections behind the enumerations, plus a cyclic-order oracle.

Three maps live here:

* an equivalence between cyclic permutations avoiding the three totally
  vincular patterns [1~3~2], [2~1~3], [3~2~1] and total cyclic orders on
  [n+2] that contain every cyclically consecutive value triple;
* the delete-the-maximum refinement map for the class of [1~4,2,3], graded
  by the value directly before the maximum;
* the delete-the-maximum refinement map for the class of [1~4,3,2], graded
  by the reverse Zeilberger statistic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .matcher import avoids_set, contains_cyclic
from .patterns import PatternSet, parse_pattern
from .perms import CyclicPerm, LinearPerm, canonicalize

TRIPLE_CHAIN_AVOIDED = PatternSet.from_texts("[1~3~2]", "[2~1~3]", "[3~2~1]")
_PAT_14_23 = parse_pattern("[1~4,2,3]")
_PAT_14_32 = parse_pattern("[1~4,3,2]")


@dataclass(frozen=True)
class TotalCyclicOrder:
    """A total cyclic order on [m], stored as a circular arrangement with 1 first.

    (x, y, z) is in the order iff, reading counterclockwise from x, one meets
    y before z.
    """

    arrangement: tuple[int, ...]

    def __post_init__(self) -> None:
        arr = tuple(self.arrangement)
        object.__setattr__(self, "arrangement", arr)
        m = len(arr)
        if m < 3:
            raise ValueError("a total cyclic order needs at least 3 elements")
        if sorted(arr) != list(range(1, m + 1)):
            raise ValueError(f"arrangement {arr} is not a permutation of 1..{m}")
        if arr[0] != 1:
            raise ValueError("arrangement must start with element 1")

    @property
    def m(self) -> int:
        return len(self.arrangement)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.arrangement) + ")"

    def triple_in(self, x: int, y: int, z: int) -> bool:
        """True iff y is encountered before z when reading from x."""
        if len({x, y, z}) != 3:
            raise ValueError("triple elements must be distinct")
        arr = self.arrangement
        m = len(arr)
        px, py, pz = arr.index(x), arr.index(y), arr.index(z)
        return (py - px) % m < (pz - px) % m

    def triples(self) -> set[tuple[int, int, int]]:
        """The full ternary relation (used only by axiom checks; O(m^3))."""
        out = set()
        m = self.m
        for x in range(1, m + 1):
            for y in range(1, m + 1):
                for z in range(1, m + 1):
                    if len({x, y, z}) == 3 and self.triple_in(x, y, z):
                        out.add((x, y, z))
        return out


def contains_consecutive_triples(order: TotalCyclicOrder) -> bool:
    """Does the order contain (i, i+1, i+2) for every i, cyclically on values?"""
    m = order.m
    for i in range(1, m + 1):
        a, b, c = i, i % m + 1, (i + 1) % m + 1
        if not order.triple_in(a, b, c):
            return False
    return True


def to_cyclic_order(sigma: CyclicPerm) -> TotalCyclicOrder:
    """Map an avoider of {[1~3~2],[2~1~3],[3~2~1]} to a total cyclic order.

    The order on positions has (i, j, k) iff the values at those positions
    are circularly increasing (order isomorphic to 123, 231 or 312); this is
    exactly the arrangement of the positions 1..m sorted by their values.
    """
    if not avoids_set(sigma, TRIPLE_CHAIN_AVOIDED):
        raise ValueError(f"{sigma} does not avoid {TRIPLE_CHAIN_AVOIDED}")
    word = sigma.canonical.values
    m = len(word)
    pos_by_value = [0] * (m + 1)
    for i, v in enumerate(word):
        pos_by_value[v] = i + 1
    return TotalCyclicOrder(tuple(pos_by_value[1:]))


def from_cyclic_order(order: TotalCyclicOrder) -> CyclicPerm:
    """Inverse of to_cyclic_order, defined on orders with all consecutive triples.

    Builds the comparison relation sigma_i < sigma_j iff (1, i, j), checks it
    for consistency, and ranks the positions.
    """
    if not contains_consecutive_triples(order):
        raise ValueError(f"{order} does not contain all consecutive value triples")
    m = order.m
    # number of positions j with sigma_j < sigma_i determines the rank of i
    smaller = {i: 0 for i in range(2, m + 1)}
    for i in range(2, m + 1):
        for j in range(2, m + 1):
            if i != j and order.triple_in(1, j, i):
                smaller[i] += 1
    word = [0] * m
    word[0] = 1
    ranked = sorted(smaller, key=lambda i: smaller[i])
    for rank, i in enumerate(ranked):
        if smaller[i] != rank:
            raise ValueError("comparison relation is not a total order")
        word[i - 1] = rank + 2
    result = CyclicPerm(LinearPerm(tuple(word)))
    if not avoids_set(result, TRIPLE_CHAIN_AVOIDED):
        raise ValueError("order does not describe an avoider")
    return result


def triple_chain_orders(n: int) -> list[TotalCyclicOrder]:
    """All total cyclic orders on [n+2] containing every consecutive value triple.

    Brute force over the (n+1)! arrangements with 1 first; budget n <= 7.
    """
    if not 1 <= n <= 7:
        raise ValueError("brute-force budget is 1 <= n <= 7")
    m = n + 2
    out = []
    for rest in permutations(range(2, m + 1)):
        z = TotalCyclicOrder((1,) + rest)
        if contains_consecutive_triples(z):
            out.append(z)
    return out


def count_triple_chain_orders(n: int) -> int:
    return len(triple_chain_orders(n))


def delete_max(sigma: CyclicPerm) -> CyclicPerm:
    """Remove the maximum value from a cyclic permutation."""
    word = sigma.canonical.values
    n = len(word)
    if n < 2:
        raise ValueError("cannot delete from a singleton")
    return canonicalize(LinearPerm(tuple(v for v in word if v != n)))


def _insert_after(sigma: CyclicPerm, anchor: int, value: int) -> CyclicPerm:
    word = sigma.canonical.values
    i = word.index(anchor)
    return canonicalize(LinearPerm(word[: i + 1] + (value,) + word[i + 1 :]))


def insert_max_pred(tau: CyclicPerm, i: int) -> CyclicPerm:
    """Insert a new maximum n directly after the value i.

    tau must avoid [1~4,2,3] with its own maximum preceded by some j <= i;
    the result is an avoider of length n with i directly before n.
    """
    n = len(tau) + 1
    if not 1 <= i <= n - 1:
        raise ValueError(f"need 1 <= i <= {n - 1}")
    if contains_cyclic(tau, _PAT_14_23):
        raise ValueError(f"{tau} does not avoid {_PAT_14_23}")
    word = tau.canonical.values
    j = word[word.index(n - 1) - 1] if n - 1 >= 2 else 1
    if j > i:
        raise ValueError(f"predecessor of the maximum is {j} > {i}")
    return _insert_after(tau, i, n)


def insert_max_chain(tau: CyclicPerm, i: int) -> CyclicPerm:
    """Insert a new maximum n so the reverse Zeilberger statistic becomes n - i.

    tau must avoid [1~4,3,2] with reverse Zeilberger statistic (n-1) - j for
    some j <= i. For j = i the maximum goes directly after n-1; for j < i it
    goes directly after i.
    """
    n = len(tau) + 1
    if not 0 <= i <= n - 2:
        raise ValueError(f"need 0 <= i <= {n - 2}")
    if contains_cyclic(tau, _PAT_14_32):
        raise ValueError(f"{tau} does not avoid {_PAT_14_32}")
    j = (n - 1) - tau.zeil_reverse()
    if j > i:
        raise ValueError(f"reverse Zeilberger statistic {n - 1 - j} is too small for i={i}")
    anchor = n - 1 if j == i else i
    return _insert_after(tau, anchor, n)
