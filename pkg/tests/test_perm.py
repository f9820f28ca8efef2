import pytest

import solvcover as sc
from solvcover.perm import Permutation, format_cycles, min_degree_of, parse_cycles


def test_cycle_roundtrip():
    p = parse_cycles("(1,2,3)(4,5)", 6)
    assert p.images.tolist() == [1, 2, 0, 4, 3, 5]
    assert format_cycles(p) == "(1,2,3)(4,5)"
    assert parse_cycles(format_cycles(p), 6) == p


def test_identity_forms():
    assert parse_cycles("()", 4).is_identity()
    assert format_cycles(Permutation.identity(5)) == "()"


def test_composition_is_right_to_left():
    p = parse_cycles("(1,2)", 3)
    q = parse_cycles("(2,3)", 3)
    # (p * q)(x) = p(q(x)): point 3 -> q -> 2 -> p -> 1
    assert (p * q)(2) == 0


def test_inverse_and_order():
    p = parse_cycles("(1,2,3,4,5)", 5)
    assert (p * p.inverse()).is_identity()
    assert p.order() == 5
    assert parse_cycles("(1,2)(3,4,5)", 5).order() == 6


def test_rejects_non_bijection():
    with pytest.raises(sc.BadParameter):
        Permutation([0, 0, 1])
    with pytest.raises(sc.BadParameter):
        parse_cycles("(1,7)", 3)


def test_min_degree_of():
    assert min_degree_of("(1,2)(5,9)") == 9
    assert min_degree_of("()") == 0
