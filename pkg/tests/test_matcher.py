from itertools import permutations

import pytest

from cycvin.matcher import (
    _contains_cyclic_rep,
    avoids_set,
    contains_cyclic,
    contains_linear,
    occurrences_linear,
)
from cycvin.patterns import CYCLIC, Pattern, PatternSet, parse_pattern
from cycvin.perms import CyclicPerm, LinearPerm, all_cyclic_perms, canonicalize
from cycvin.verify import verify_devincularization, verify_representative_independence, verify_symmetry


def test_vincular_occurrence_requires_adjacency():
    host = LinearPerm((3, 4, 2, 5, 1))
    assert occurrences_linear(host, parse_pattern("2,1,3")) == [(1, 3, 4), (2, 3, 4)]
    assert occurrences_linear(host, parse_pattern("2~1,3")) == [(2, 3, 4)]
    assert occurrences_linear(host, parse_pattern("2~1~3")) == [(2, 3, 4)]


def test_contains_linear_examples():
    assert contains_linear(LinearPerm((3, 4, 2, 5, 1)), parse_pattern("2~1,3"))
    assert not contains_linear(LinearPerm((1, 4, 2, 3)), parse_pattern("1~2,3"))
    assert not contains_linear(LinearPerm((1, 2)), parse_pattern("1,2,3"))


def test_occurrences_trivia():
    assert occurrences_linear(LinearPerm((1, 2, 3)), parse_pattern("1~2~3")) == [(1, 2, 3)]
    assert occurrences_linear(LinearPerm((3, 2, 1)), parse_pattern("1,2")) == []


def test_occurrences_match_contains():
    pats = [parse_pattern(t) for t in ("1~2,3", "2,1,3", "1~3~2", "2~1")]
    for n in range(1, 6):
        for vals in permutations(range(1, n + 1)):
            host = LinearPerm(vals)
            for p in pats:
                assert bool(occurrences_linear(host, p)) == contains_linear(host, p)


def test_contains_cyclic_examples():
    assert contains_cyclic(CyclicPerm.from_text("[1,2,3,4,5]"), parse_pattern("[1~2~3]"))
    assert not contains_cyclic(CyclicPerm.from_text("[1,3,2]"), parse_pattern("[1~2~3]"))
    delta = canonicalize(LinearPerm((7, 6, 5, 4, 3, 2, 1)))
    assert not contains_cyclic(delta, parse_pattern("[1~2,3]"))
    assert not contains_cyclic(CyclicPerm.from_text("[1,2]"), parse_pattern("[1~2,3]"))


def test_kind_mismatch_raises():
    with pytest.raises(ValueError):
        contains_linear(LinearPerm((1, 2)), parse_pattern("[1~2]"))
    with pytest.raises(ValueError):
        contains_cyclic(CyclicPerm.from_text("[1,2]"), parse_pattern("1~2"))


def test_avoids_set_examples():
    assert not avoids_set(CyclicPerm.from_text("[1,2,3,4]"),
                          PatternSet.from_texts("[1~2~3]", "[3~2~1]"))
    # only one cyclic permutation of length 2 exists; it avoids any length-3 set
    two = CyclicPerm.from_text("[1,2]")
    assert avoids_set(two, PatternSet.from_texts("[1~2~3]", "[1~3~2]"))
    delta6 = canonicalize(LinearPerm((6, 5, 4, 3, 2, 1)))
    assert avoids_set(delta6, PatternSet.from_texts("[1,2,3]"))


def test_window_scan_agrees_with_general_matcher():
    # totally vincular containment is exactly a consecutive-window match
    def pats_of(k):
        return [Pattern(vals, frozenset(range(1, k)), CYCLIC)
                for vals in permutations(range(1, k + 1))]

    for n in range(1, 8):
        for c in all_cyclic_perms(n):
            for p in pats_of(2) + pats_of(3) + pats_of(4):
                assert contains_cyclic(c, p) == _contains_cyclic_rep(c, p.values, p.bonds)
    for c in all_cyclic_perms(8):
        for p in pats_of(3):
            assert contains_cyclic(c, p) == _contains_cyclic_rep(c, p.values, p.bonds)


def test_symmetry_suite_small():
    assert verify_symmetry(5) == []


def test_devincularization_suite_small():
    assert verify_devincularization(6) == []


def test_representative_independence_small():
    assert verify_representative_independence(5) == []
