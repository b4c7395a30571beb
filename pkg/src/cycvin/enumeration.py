"""Exact enumeration of cyclic avoidance classes.

The search backtracks over sigma_2..sigma_n with sigma_1 = 1 fixed, so the
leaves are exactly the (n-1)! canonical cyclic permutations in lexicographic
order. A prefix is rejected as soon as it contains a linear occurrence of any
wrap-free representative of a forbidden pattern: appending at the end never
disturbs adjacencies or relative order already present, so such an occurrence
survives into every completion. Occurrences crossing the rotation seam are
only checkable once the permutation is complete; they are found on the
doubled word under a span guard (an occurrence may go around the circle at
most once), which the tests validate against the rotation-scanning matcher.

The search forest is split into n-1 shards by the value of sigma_2; shard
results are combined in shard order, so counts are independent of the number
of worker processes.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, NamedTuple, Sequence

from .matcher import _blocks_of, avoids_set
from .patterns import PatternSet, CYCLIC
from .perms import CyclicPerm, LinearPerm, all_cyclic_perms

DEFAULT_BUDGET = 100_000_000

STAT_NAMES = ("predecessor_of_n", "zeil_reverse")


class BudgetExceededError(RuntimeError):
    """Search node budget exhausted; carries how far the run got."""

    def __init__(self, message: str, nodes: int, n_reached: int | None = None,
                 partial: "CountTable | None" = None):
        super().__init__(message)
        self.nodes = nodes
        self.n_reached = n_reached
        self.partial = partial


class _Rep(NamedTuple):
    """One linear representative, preprocessed for the occurrence searches."""

    blocks: tuple[tuple[int, ...], ...]
    k: int
    rest: tuple[tuple[int, ...], ...]  # blocks without the final one
    rest_rooms: tuple[int, ...]
    tail: tuple[tuple[int, ...], ...]  # blocks without the first one
    tail_rooms: tuple[int, ...]


def _rooms(blocks: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    acc = 0
    out = [0] * len(blocks)
    for bi in range(len(blocks) - 1, -1, -1):
        out[bi] = acc
        acc += len(blocks[bi])
    return tuple(out)


def _compile_rep(values: tuple[int, ...], bonds: frozenset[int]) -> _Rep:
    blocks = tuple(_blocks_of(values, bonds))
    rest = blocks[:-1]
    tail = blocks[1:]
    return _Rep(blocks, len(values), rest, _rooms(rest), tail, _rooms(tail))


def _compile_prune_reps(pset: PatternSet) -> list[_Rep]:
    """Every wrap-free linear representative of every pattern."""
    seen: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    reps: list[_Rep] = []
    for p in sorted(pset.patterns, key=lambda q: (q.values, sorted(q.bonds))):
        for values, bonds in p.wrap_free_reps():
            key = (values, tuple(sorted(bonds)))
            if key in seen:
                continue
            seen.add(key)
            reps.append(_compile_rep(values, bonds))
    return reps


def _place_blocks(word: Sequence[int], blocks: tuple[tuple[int, ...], ...],
                  bi: int, start: int, stop: int,
                  pv_list: list[int], hv_list: list[int],
                  min_last: int, rooms: tuple[int, ...]) -> bool:
    """Place blocks[bi:] into word[start:stop] consistently with chosen pairs.

    min_last, when positive, requires the last position used to be at least
    that index (the seam check uses it to force a crossing).
    """
    block = blocks[bi]
    width = len(block)
    is_last = bi + 1 == len(blocks)
    lo = start
    if is_last and min_last > 0 and lo < min_last - width + 1:
        lo = min_last - width + 1
    for s in range(lo, stop - width - rooms[bi] + 1):
        added = 0
        ok = True
        for t in range(width):
            pv = block[t]
            hv = word[s + t]
            for i in range(len(pv_list)):
                if (pv < pv_list[i]) != (hv < hv_list[i]):
                    ok = False
                    break
            if not ok:
                break
            pv_list.append(pv)
            hv_list.append(hv)
            added += 1
        if ok and (is_last or _place_blocks(word, blocks, bi + 1, s + width, stop,
                                            pv_list, hv_list, min_last, rooms)):
            return True
        if added:
            del pv_list[-added:]
            del hv_list[-added:]
    return False


def _block_fits(word: Sequence[int], block: tuple[int, ...], s: int,
                pv_list: list[int], hv_list: list[int]) -> bool:
    """Is the block, laid down at position s, order-consistent with the chosen
    pairs and internally? Does not mutate the pair lists."""
    for t in range(len(block)):
        pv = block[t]
        hv = word[s + t]
        for i in range(len(pv_list)):
            if (pv < pv_list[i]) != (hv < hv_list[i]):
                return False
        for u in range(t):
            if (pv < block[u]) != (hv < word[s + u]):
                return False
    return True


def _completes_at_end(word: Sequence[int], rep: _Rep) -> bool:
    """Does an occurrence of the representative end at the last element of word?"""
    m = len(word)
    if m < rep.k:
        return False
    last = rep.blocks[-1]
    s0 = m - len(last)
    pv_list: list[int] = []
    hv_list: list[int] = []
    for t in range(len(last)):
        pv = last[t]
        hv = word[s0 + t]
        for i in range(len(pv_list)):
            if (pv < pv_list[i]) != (hv < hv_list[i]):
                return False
        pv_list.append(pv)
        hv_list.append(hv)
    rest = rep.rest
    nrest = len(rest)
    if nrest == 0:
        return True
    b0 = rest[0]
    w0 = len(b0)
    if nrest == 1:
        for s in range(0, s0 - w0 + 1):
            if _block_fits(word, b0, s, pv_list, hv_list):
                return True
        return False
    if nrest == 2:
        b1 = rest[1]
        w1 = len(b1)
        for s in range(0, s0 - w0 - w1 + 1):
            if _block_fits(word, b0, s, pv_list, hv_list):
                for t in range(w0):
                    pv_list.append(b0[t])
                    hv_list.append(word[s + t])
                for s2 in range(s + w0, s0 - w1 + 1):
                    if _block_fits(word, b1, s2, pv_list, hv_list):
                        del pv_list[-w0:]
                        del hv_list[-w0:]
                        return True
                del pv_list[-w0:]
                del hv_list[-w0:]
        return False
    return _place_blocks(word, rest, 0, 0, s0, pv_list, hv_list, 0, rep.rest_rooms)


def _has_seam_occurrence(word: tuple[int, ...], rep: _Rep) -> bool:
    """Occurrence of the representative that crosses the rotation seam.

    Searched on the doubled word: first position in 1..n-1, last position at
    least n, total span at most n-1 so the circle is traversed at most once.
    Occurrences with the first position at 0 lie inside the word itself and
    are someone else's responsibility.
    """
    n = len(word)
    if n < rep.k:
        return False
    word2 = word + word
    first = rep.blocks[0]
    w0 = len(first)
    # a single-block occurrence ends at s1 + k - 1, so it can only cross when
    # s1 >= n - k + 1; multi-block occurrences can start anywhere after 0
    lo = 1 if rep.tail else max(1, n - rep.k + 1)
    pv_list: list[int] = []
    hv_list: list[int] = []
    for s1 in range(lo, n):
        ok = True
        added = 0
        for t in range(w0):
            pv = first[t]
            hv = word2[s1 + t]
            for i in range(len(pv_list)):
                if (pv < pv_list[i]) != (hv < hv_list[i]):
                    ok = False
                    break
            if not ok:
                break
            pv_list.append(pv)
            hv_list.append(hv)
            added += 1
        if ok:
            if not rep.tail:
                if s1 + w0 - 1 >= n:
                    del pv_list[:]
                    del hv_list[:]
                    return True
            elif _place_blocks(word2, rep.tail, 0, s1 + w0, s1 + n,
                               pv_list, hv_list, n, rep.tail_rooms):
                del pv_list[:]
                del hv_list[:]
                return True
        if added:
            del pv_list[-added:]
            del hv_list[-added:]
    return False


def _seam_clean(word: tuple[int, ...], seam_reps: Sequence[_Rep]) -> bool:
    for rep in seam_reps:
        if _has_seam_occurrence(word, rep):
            return False
    return True


class _Search:
    """One shard of the backtracking search (sigma_2 fixed, or free for n<=1)."""

    def __init__(self, pset: PatternSet, n: int, budget: int | None):
        self.n = n
        self.prune_reps = _compile_prune_reps(pset)
        self.seam_reps = [_compile_rep(p.values, p.bonds) for p in pset]
        self.budget = budget if budget is not None else DEFAULT_BUDGET
        self.nodes = 0

    def run(self, v2: int | None, emit: Callable[[tuple[int, ...]], None]) -> None:
        n = self.n
        word = [1]
        used = [False] * (n + 1)
        used[1] = True
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError("node budget exceeded", self.nodes, n)
        for rep in self.prune_reps:
            if _completes_at_end(word, rep):
                return
        if n == 1:
            emit((1,))
            return
        assert v2 is not None
        self._extend(word, used, v2, emit)

    def _extend(self, word: list[int], used: list[bool], forced: int | None,
                emit: Callable[[tuple[int, ...]], None]) -> None:
        n = self.n
        reps = self.prune_reps
        candidates = (forced,) if forced is not None else range(2, n + 1)
        for v in candidates:
            if used[v]:
                continue
            word.append(v)
            used[v] = True
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceededError("node budget exceeded", self.nodes, n)
            hit = False
            for rep in reps:
                if _completes_at_end(word, rep):
                    hit = True
                    break
            if not hit:
                if len(word) == n:
                    w = tuple(word)
                    if _seam_clean(w, self.seam_reps):
                        emit(w)
                else:
                    self._extend(word, used, None, emit)
            word.pop()
            used[v] = False


def _validate(pset: PatternSet, n: int) -> None:
    if n < 1:
        raise ValueError("n must be >= 1")
    if pset.patterns and pset.kind != CYCLIC:
        raise ValueError("enumeration requires cyclic patterns")


def _shards(n: int) -> list[int | None]:
    return [None] if n == 1 else list(range(2, n + 1))


def _count_shard(pset: PatternSet, n: int, v2: int | None, budget: int | None) -> tuple[int, int]:
    search = _Search(pset, n, budget)
    hits = 0

    def emit(_word: tuple[int, ...]) -> None:
        nonlocal hits
        hits += 1

    search.run(v2, emit)
    return hits, search.nodes


def count_avoiders(pset: PatternSet, n: int, *, jobs: int = 1,
                   budget: int | None = None) -> int:
    """|Av_n| for a set of cyclic patterns: canonical cyclic permutations avoiding all."""
    _validate(pset, n)
    shards = _shards(n)
    total = 0
    nodes = 0
    if jobs > 1 and len(shards) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_count_shard, *zip(*[(pset, n, v2, budget) for v2 in shards])))
    else:
        results = []
        for v2 in shards:
            remaining = None if budget is None else budget - nodes
            if remaining is not None and remaining <= 0:
                raise BudgetExceededError("node budget exceeded", nodes, n)
            hits, used = _count_shard(pset, n, v2, remaining)
            results.append((hits, used))
            nodes += used
    for hits, _used in results:
        total += hits
    return total


def enumerate_avoiders(pset: PatternSet, n: int, *, budget: int | None = None) -> Iterator[CyclicPerm]:
    """Yield the avoiders in lexicographic order of canonical form."""
    _validate(pset, n)
    for v2 in _shards(n):
        out: list[tuple[int, ...]] = []
        _Search(pset, n, budget).run(v2, out.append)
        for word in out:
            yield CyclicPerm(LinearPerm(word))


def count_avoiders_naive(pset: PatternSet, n: int) -> int:
    """Pruning-free oracle: filter all (n-1)! canonical permutations with the matcher."""
    _validate(pset, n)
    return sum(1 for c in all_cyclic_perms(n) if avoids_set(c, pset))


def predecessor_of_n(c: CyclicPerm) -> int:
    """The value cyclically preceding the maximum."""
    word = c.canonical.values
    return word[word.index(len(word)) - 1]


def count_refined(pset: PatternSet, n: int, stat: str, *,
                  budget: int | None = None) -> dict[int, int]:
    """Counts of avoiders refined by a named statistic."""
    if stat == "predecessor_of_n":
        key = predecessor_of_n
    elif stat == "zeil_reverse":
        key = CyclicPerm.zeil_reverse
    else:
        raise ValueError(f"unknown statistic {stat!r}; expected one of {STAT_NAMES}")
    if n < 3:
        raise ValueError("refined counts need n >= 3")
    out: dict[int, int] = {}
    for c in enumerate_avoiders(pset, n, budget=budget):
        v = key(c)
        out[v] = out.get(v, 0) + 1
    return dict(sorted(out.items()))


@dataclass
class CountTable:
    """Results of an enumeration (or formula evaluation) over a range of n."""

    patterns: tuple[str, ...]
    n_min: int
    n_max: int
    counts: dict[int, int]
    elapsed_ms: dict[int, float] = field(default_factory=dict)
    method: str = "enumeration"
    refinement: tuple[str, dict[int, dict[int, int]]] | None = None

    def to_csv(self) -> str:
        lines = ["n,count,elapsed_ms"]
        for n in range(self.n_min, self.n_max + 1):
            ms = self.elapsed_ms.get(n, 0.0)
            lines.append(f"{n},{self.counts[n]},{ms:.1f}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        rows = []
        for n in range(self.n_min, self.n_max + 1):
            row: dict = {
                "patterns": list(self.patterns),
                "n": n,
                "count": str(self.counts[n]),
            }
            if self.refinement is not None:
                name, per_n = self.refinement
                if n in per_n:
                    row["refinement"] = {
                        "stat": name,
                        "counts": {str(k): str(v) for k, v in sorted(per_n[n].items())},
                    }
            rows.append(row)
        return json.dumps(rows, indent=2) + "\n"


def count_range(pset: PatternSet, n_min: int, n_max: int, *, jobs: int = 1,
                budget: int | None = None, stat: str | None = None) -> CountTable:
    """Count avoiders for each n in a range; budget failures carry partial results."""
    if not 1 <= n_min <= n_max:
        raise ValueError("need 1 <= n_min <= n_max")
    counts: dict[int, int] = {}
    elapsed: dict[int, float] = {}
    refined: dict[int, dict[int, int]] = {}
    for n in range(n_min, n_max + 1):
        t0 = time.perf_counter()
        try:
            if stat is not None:
                refined[n] = count_refined(pset, n, stat, budget=budget)
                counts[n] = sum(refined[n].values())
            else:
                counts[n] = count_avoiders(pset, n, jobs=jobs, budget=budget)
        except BudgetExceededError as exc:
            partial = CountTable(
                patterns=tuple(pset.texts()),
                n_min=n_min,
                n_max=n - 1,
                counts=counts,
                elapsed_ms=elapsed,
                refinement=(stat, refined) if stat is not None else None,
            )
            raise BudgetExceededError(
                f"budget exhausted at n={n}", exc.nodes, n_reached=n - 1, partial=partial
            ) from exc
        elapsed[n] = (time.perf_counter() - t0) * 1000.0
    return CountTable(
        patterns=tuple(pset.texts()),
        n_min=n_min,
        n_max=n_max,
        counts=counts,
        elapsed_ms=elapsed,
        refinement=(stat, refined) if stat is not None else None,
    )
