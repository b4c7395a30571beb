from itertools import permutations

import pytest

from cycvin.perms import CyclicPerm, LinearPerm, all_cyclic_perms, canonicalize, reduce


def test_reduce_examples():
    assert reduce((3, 6, 2, 5, 4)).values == (2, 5, 1, 4, 3)
    assert reduce((1, 2, 3)).values == (1, 2, 3)
    assert reduce((4, 2, 5)).values == (2, 1, 3)


def test_reduce_rejects_duplicates():
    with pytest.raises(ValueError, match="duplicate element 4"):
        reduce((4, 2, 4))


def test_reduce_idempotent_on_permutations():
    for n in range(1, 7):
        for vals in permutations(range(1, n + 1)):
            p = LinearPerm(vals)
            assert reduce(p.values) == p


def test_linear_perm_validation():
    with pytest.raises(ValueError):
        LinearPerm(())
    with pytest.raises(ValueError, match="duplicate"):
        LinearPerm((1, 1))
    with pytest.raises(ValueError, match="outside"):
        LinearPerm((1, 5, 2))


def test_rotations():
    assert [r.values for r in LinearPerm((1, 2, 3)).rotations()] == [
        (1, 2, 3), (2, 3, 1), (3, 1, 2)]
    assert [r.values for r in LinearPerm((1,)).rotations()] == [(1,)]
    assert [r.values for r in LinearPerm((2, 1)).rotations()] == [(2, 1), (1, 2)]


def test_canonicalize():
    assert canonicalize(LinearPerm((3, 1, 2))).canonical.values == (1, 2, 3)
    assert canonicalize(LinearPerm((1, 3, 6, 2, 5, 4))).canonical.values == (1, 3, 6, 2, 5, 4)
    assert canonicalize(LinearPerm((6, 2, 5, 4, 1, 3))).canonical.values == (1, 3, 6, 2, 5, 4)


def test_canonicalize_rotation_invariant():
    for n in range(1, 7):
        for vals in permutations(range(1, n + 1)):
            p = LinearPerm(vals)
            classes = {canonicalize(r) for r in p.rotations()}
            assert len(classes) == 1


def test_cyclic_perm_requires_canonical_form():
    with pytest.raises(ValueError):
        CyclicPerm(LinearPerm((2, 1)))


def test_symmetry_maps():
    assert LinearPerm((1, 3, 2)).reverse().values == (2, 3, 1)
    assert LinearPerm((1, 3, 2)).complement().values == (3, 1, 2)
    rc = canonicalize(LinearPerm((1, 2, 3, 4))).reverse_complement()
    assert rc.canonical.values == (1, 2, 3, 4)


def test_symmetries_are_involutions():
    for n in range(1, 7):
        for vals in permutations(range(1, n + 1)):
            p = LinearPerm(vals)
            assert p.reverse().reverse() == p
            assert p.complement().complement() == p
            assert p.reverse_complement() == p.reverse().complement() == p.complement().reverse()
            c = canonicalize(p)
            assert c.reverse().reverse() == c
            assert c.complement().complement() == c


def test_zeil_examples():
    assert CyclicPerm.from_text("[1,3,6,2,5,4]").zeil() == 4
    assert LinearPerm((1, 3, 6, 2, 5, 4)).zeil() == 3
    for n in range(2, 9):
        iota = CyclicPerm(LinearPerm(tuple(range(1, n + 1))))
        assert iota.zeil_reverse() == n


def test_cyclic_zeil_is_max_over_rotations():
    for n in range(1, 9):
        for c in all_cyclic_perms(n):
            expected = max(r.zeil() for r in c.rotations())
            assert c.zeil() == expected


def test_zeil_reverse_is_zeil_of_reverse():
    for n in range(1, 8):
        for vals in permutations(range(1, n + 1)):
            p = LinearPerm(vals)
            assert p.zeil_reverse() == p.reverse().zeil()
        for c in all_cyclic_perms(n):
            assert c.zeil_reverse() == c.reverse().zeil()


def test_text_round_trip():
    assert str(LinearPerm((1, 3, 6, 2, 5, 4))) == "1,3,6,2,5,4"
    assert str(CyclicPerm.from_text("[ 1, 3,6,2,5,4 ]")) == "[1,3,6,2,5,4]"
    assert LinearPerm.from_text("2,1").values == (2, 1)
    with pytest.raises(ValueError):
        CyclicPerm.from_text("1,2,3")


def test_all_cyclic_perms_count():
    import math

    for n in range(1, 7):
        perms = all_cyclic_perms(n)
        assert len(perms) == math.factorial(n - 1)
        assert perms == sorted(perms, key=lambda c: c.canonical.values)
