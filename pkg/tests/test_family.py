import itertools
from fractions import Fraction

import pytest

from fstirling.algebra import ShiftPoly, UniPoly
from fstirling.errors import ModeError, UsageError
from fstirling.family import (
    Z,
    E_f,
    H_f,
    ShiftVector,
    build_triangle,
    eval_f,
    jacobi_recurrence_table,
    named_triangle,
    q_bracket,
    q_E,
    q_H,
    symbolic_E,
    symbolic_H,
)

GOLDEN_Q = UniPoly([2, 4, 5, 4, 2, 1], "q")


def test_eval_f():
    assert eval_f(ShiftVector((0, 1)), 2) == 6
    assert eval_f(ShiftVector((1, 2)), 1) == 6
    assert eval_f(ShiftVector((0,)), 5) == 5
    with pytest.raises(UsageError):
        eval_f(ShiftVector((0,)), 0)


def test_f_is_positive_and_increasing():
    for fv in (ShiftVector((0,)), ShiftVector((0, 1)), ShiftVector(("1/2", 2))):
        values = fv.values(8)
        assert all(v > 0 for v in values)
        assert values == sorted(set(values))


def test_H_E_examples():
    assert H_f(2, 3, ShiftVector((0, 1))) == 8
    assert H_f(5, 3, ShiftVector((0, 1))) == 0
    assert H_f(2, 3, ShiftVector((0,))) == 3
    assert E_f(2, 3, ShiftVector((0, 1))) == 8
    assert E_f(0, 0, ShiftVector((0, 1))) == 1
    assert E_f(2, 3, ShiftVector((0,))) == 3
    for j in range(6):
        assert H_f(j, j, ShiftVector((1, 2))) == 1


def test_q_examples():
    f = ShiftVector((1, 2))
    assert q_H(2, 3, f) == GOLDEN_Q
    assert q_E(2, 3, f) == GOLDEN_Q
    assert q_H(3, 3, f) == 1
    assert q_H(0, 2, f).is_zero()
    assert q_E(0, 0, f) == 1
    assert q_E(1, 1, f) == 1


def test_q_bracket():
    assert q_bracket(0).is_zero()
    assert q_bracket(3) == UniPoly([1, 1, 1])
    with pytest.raises(UsageError):
        q_bracket(-1)


def test_q_needs_integer_shifts():
    with pytest.raises(ModeError):
        q_H(2, 3, ShiftVector(("1/2", 2)))
    with pytest.raises(ModeError):
        q_E(3, 2, ShiftVector(("1/2",)))


def test_symbolic_examples():
    a1, a2 = ShiftPoly.variable(2, 0), ShiftPoly.variable(2, 1)
    expected = 5 + 3 * a1 + 3 * a2 + 2 * a1 * a2
    assert symbolic_H(2, 3, 2) == expected
    assert symbolic_E(2, 3, 2) == expected
    for r in (1, 2, 3):
        assert symbolic_H(4, 4, r) == 1


def test_named_triangles():
    assert named_triangle("Jc", 3).entry(2, 3) == UniPoly([5, 3], "z")
    assert named_triangle("LS", 3).entry(2, 3) == 8
    assert named_triangle("Lc", 3).entry(2, 3) == 8
    assert named_triangle("S", 3).row(3) == (0, 1, 3, 1)
    assert named_triangle("c", 3).row(3) == (0, 2, 3, 1)
    with pytest.raises(UsageError):
        named_triangle("X", 3)


def test_jacobi_specialization_matches_recurrence():
    for kind in ("JS", "Jc"):
        named, direct = named_triangle(kind, 10), jacobi_recurrence_table(kind, 10)
        for n, j, value in named.cells():
            assert value == direct.entry(j, n)


@pytest.mark.parametrize("shifts", [s for r in (1, 2, 3) for s in itertools.combinations_with_replacement(range(4), r)])
def test_q_at_one(shifts):
    f = ShiftVector(shifts)
    for n in range(7):
        for j in range(n + 1):
            assert q_H(j, n, f).eval(1) == H_f(j, n, f)
            assert q_E(j, n, f).eval(1) == E_f(j, n, f)


def test_substitution_coherence():
    for values in ((0, 0), (1, 2), (Fraction(1, 2), 3), (Fraction(2, 3), Fraction(5, 7))):
        f = ShiftVector(values)
        for n in range(7):
            for j in range(n + 1):
                assert _scalar(symbolic_H(j, n, 2), f) == H_f(j, n, f)
                assert _scalar(symbolic_E(j, n, 2), f) == E_f(j, n, f)


def _scalar(value, f):
    return value.substitute(f.shifts) if isinstance(value, ShiftPoly) else value


def test_row_sum_of_E():
    for f in (ShiftVector((0,)), ShiftVector((1, 2)), ShiftVector(("1/2", 2))):
        for n in range(1, 9):
            prod = 1
            for i in range(1, n):
                prod *= 1 + f.f(i)
            assert sum(E_f(j, n, f) for j in range(n + 1)) == prod


def test_rational_shifts():
    f = ShiftVector(("1/2", 2))
    assert f.f(1) == Fraction(9, 2)
    assert H_f(1, 2, f) == Fraction(9, 2)


def test_shift_vector_parsing():
    assert ShiftVector.parse("1,0").shifts == (0, 1)
    assert ShiftVector.parse("1/2, 2").shifts == (Fraction(1, 2), 2)
    assert ShiftVector.parse("0,z").shifts == (0, Z)
    assert ShiftVector.parse("0,2").integer_mode
    assert not ShiftVector.parse("1/2").integer_mode
    for bad in ("", "1,,2", "-1", "z,0", "0,z,1", "a", "1/0"):
        with pytest.raises(UsageError):
            ShiftVector.parse(bad)


def test_z_shift_gives_jacobi_values():
    f = ShiftVector.parse("0,z")
    assert E_f(2, 3, f) == UniPoly([5, 3], "z")
    assert H_f(1, 2, f) == UniPoly([1, 1], "z")


def test_build_triangle_dispatch():
    f = ShiftVector((1, 2))
    assert build_triangle("qH", 3, fv=f).entry(2, 3) == GOLDEN_Q
    assert build_triangle("H", 3, fv=f).entry(2, 3) == 18
    assert build_triangle("symbolicE", 3, r=2).entry(2, 3) == symbolic_E(2, 3, 2)
    with pytest.raises(UsageError):
        build_triangle("H", 3)
    with pytest.raises(UsageError):
        build_triangle("symbolicH", 3)


def test_table_boundaries():
    table = build_triangle("E", 6, fv=ShiftVector((0, 1)))
    assert table.entry(0, 0) == 1
    assert all(table.entry(0, n) == 0 for n in range(1, 7))
    assert table.entry(5, 3) == 0
    with pytest.raises(UsageError):
        table.entry(1, 7)
