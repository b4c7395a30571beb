import json
import math

import pytest

from cycvin.enumeration import (
    BudgetExceededError,
    count_avoiders,
    count_avoiders_naive,
    count_range,
    count_refined,
    enumerate_avoiders,
    predecessor_of_n,
)
from cycvin.formulas import catalan
from cycvin.patterns import PatternSet
from cycvin.perms import CyclicPerm
from cycvin.verify import verify_pruning, verify_wilf_orbits


def test_count_known_values():
    assert count_avoiders(PatternSet.from_texts("[1~3,2,4]"), 8) == 429
    assert count_avoiders(PatternSet.from_texts("[1~2~3]", "[2~3~1]"), 9) == 1524
    assert count_avoiders(PatternSet.from_texts("[1~2]"), 5) == 0


def test_count_small_n_equals_all():
    # patterns longer than the host cannot occur
    s = PatternSet.from_texts("[1~3,2,4]")
    for n in range(1, 4):
        assert count_avoiders(s, n) == math.factorial(n - 1)


def test_enumerate_matches_count_and_order():
    s = PatternSet.from_texts("[1~4,2,3]")
    for n in range(1, 8):
        avs = list(enumerate_avoiders(s, n))
        assert len(avs) == count_avoiders(s, n)
        keys = [c.canonical.values for c in avs]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)


def test_enumerate_unique_avoider():
    avs = list(enumerate_avoiders(PatternSet.from_texts("[1~2,3]"), 5))
    assert [str(c) for c in avs] == ["[1,5,4,3,2]"]


def test_enumerate_empty_set_yields_everything():
    avs = list(enumerate_avoiders(PatternSet(frozenset()), 4))
    assert len(avs) == 6


def test_enumerate_ascent_descent_doubleton_is_empty():
    assert list(enumerate_avoiders(PatternSet.from_texts("[1~2]", "[2~1]"), 3)) == []


def test_oracle_agreement():
    for texts in (("[1~2,3,4]",), ("[2~3,4,1]",), ("[1~2~3]",), ("[1~3~2]", "[2~1~3]")):
        s = PatternSet.from_texts(*texts)
        for n in range(1, 8):
            assert count_avoiders(s, n) == count_avoiders_naive(s, n)


def test_pruning_suite():
    assert verify_pruning(7) == []


def test_wilf_orbit_counts_agree():
    assert verify_wilf_orbits(8) == []


def test_refined_counts_example():
    refined = count_refined(PatternSet.from_texts("[1~4,2,3]"), 5, "predecessor_of_n")
    assert refined == {1: 1, 2: 3, 3: 5, 4: 5}
    assert sum(refined.values()) == count_avoiders(PatternSet.from_texts("[1~4,2,3]"), 5)


def test_refined_zeil_reverse_sums_to_catalan():
    refined = count_refined(PatternSet.from_texts("[1~4,3,2]"), 5, "zeil_reverse")
    assert sum(refined.values()) == catalan(4) == 14


def test_refined_unknown_stat():
    with pytest.raises(ValueError, match="unknown statistic"):
        count_refined(PatternSet.from_texts("[1~4,3,2]"), 5, "descents")


def test_predecessor_of_n():
    assert predecessor_of_n(CyclicPerm.from_text("[1,3,6,2,5,4]")) == 3
    assert predecessor_of_n(CyclicPerm.from_text("[1,2]")) == 1


def test_budget_exceeded():
    s = PatternSet.from_texts("[1~3,2,4]")
    with pytest.raises(BudgetExceededError) as info:
        count_avoiders(s, 9, budget=50)
    assert info.value.nodes > 50


def test_budget_partial_table():
    s = PatternSet.from_texts("[1~3,2,4]")
    with pytest.raises(BudgetExceededError) as info:
        count_range(s, 1, 9, budget=2000)
    err = info.value
    assert err.partial is not None
    assert err.n_reached == err.partial.n_max >= 1
    for n in range(1, err.n_reached + 1):
        assert err.partial.counts[n] == catalan(n - 1)


def test_jobs_do_not_change_counts():
    s = PatternSet.from_texts("[2~3,4,1]")
    assert count_avoiders(s, 7, jobs=1) == count_avoiders(s, 7, jobs=2) == 180


def test_count_table_shapes():
    s = PatternSet.from_texts("[1~3,2,4]")
    table = count_range(s, 1, 6)
    assert table.patterns == ("[1~3,2,4]",)
    for n in range(1, 7):
        assert table.counts[n] <= math.factorial(n - 1)
    csv_text = table.to_csv()
    lines = csv_text.strip().splitlines()
    assert lines[0] == "n,count,elapsed_ms"
    assert [int(line.split(",")[1]) for line in lines[1:]] == [1, 1, 2, 5, 14, 42]

    rows = json.loads(table.to_json())
    assert [row["n"] for row in rows] == list(range(1, 7))
    assert rows[5]["count"] == "42"
    assert rows[0]["patterns"] == ["[1~3,2,4]"]


def test_count_table_refinement_partitions_count():
    s = PatternSet.from_texts("[1~4,2,3]")
    table = count_range(s, 4, 7, stat="predecessor_of_n")
    name, per_n = table.refinement
    assert name == "predecessor_of_n"
    for n in range(4, 8):
        assert sum(per_n[n].values()) == table.counts[n]
    rows = json.loads(table.to_json())
    assert rows[0]["refinement"]["stat"] == "predecessor_of_n"


def test_json_output_deterministic():
    s = PatternSet.from_texts("[1~3,2,4]")
    a = count_range(s, 1, 5).to_json()
    b = count_range(s, 1, 5).to_json()
    assert a == b


def test_requires_cyclic_patterns():
    with pytest.raises(ValueError, match="cyclic"):
        count_avoiders(PatternSet.from_texts("1~2,3"), 4)
    with pytest.raises(ValueError, match="n must be"):
        count_avoiders(PatternSet.from_texts("[1~2,3]"), 0)


def test_seam_search_agrees_with_rotation_matcher():
    # cyclic containment decomposes into an in-word occurrence plus a
    # seam-crossing one; the doubled-word search (with its span guard) must
    # account for exactly the second kind on every host, not just pruned
    # leaves, when compared against the rotation-scanning matcher
    from cycvin.enumeration import _compile_rep, _has_seam_occurrence
    from cycvin.matcher import _contains_cyclic_rep, _occurrences_word
    from cycvin.perms import all_cyclic_perms
    from cycvin.patterns import parse_pattern

    pats = [parse_pattern(t) for t in (
        "[1~2,3]", "[1~3,2]", "[1~2~3]", "[1~3~2]", "[1,2,3]",
        "[1~2,3,4]", "[1~3,4,2]", "[2~3,1,4]", "[1~2~3,4]", "[1~2,3~4]", "[1~2~3~4]",
    )]
    for n in range(1, 8):
        for c in all_cyclic_perms(n):
            word = c.canonical.values
            for p in pats:
                rep = _compile_rep(p.values, p.bonds)
                by_rotations = _contains_cyclic_rep(c, p.values, p.bonds)
                interior = next(_occurrences_word(word, p.values, p.bonds), None) is not None
                assert by_rotations == (interior or _has_seam_occurrence(word, rep)), (
                    str(c), str(p))
