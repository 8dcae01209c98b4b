from fractions import Fraction

import pytest
import sympy
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix
from hypothesis import given
from hypothesis import strategies as st

from heckeann.linalg import (ExactMatrix, bareiss_rref, determinant, in_span, inverse, kernel, rank,
                             row_basis, span_equal)
from heckeann.rings import LaurentPoly, ModInt, RationalFunction, RingSpec

Q = RingSpec.rationals(1)
GF2 = RingSpec.gfp(2, 1)
GF5 = RingSpec.gfp(5, 1)
LAURENT = RingSpec.laurent()
QV = RingSpec.qv()
V = LaurentPoly.v()
vs = sympy.Symbol("v")

int_matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=r, max_size=r)))


def to_ring(rows, ring):
    return [[ring.from_int(x) for x in r] for r in rows]


def laurent_sympy(p):
    return sum(sympy.Integer(c) * vs ** e for e, c in p.terms())


@given(int_matrices)
def test_rank_and_kernel_over_q_match_sympy(rows):
    m = sympy.Matrix(rows)
    ours = to_ring(rows, Q)
    assert rank(ours, Q) == m.rank()
    ker = kernel(ours, Q, len(rows[0]))
    assert len(ker) == len(m.nullspace())
    for vec in ker:
        assert all(sum(a * b for a, b in zip(r, vec)) == 0 for r in ours)


@given(int_matrices)
def test_rank_over_gf5_matches_sympy(rows):
    theirs = DomainMatrix([[GF(5)(x) for x in r] for r in rows], (len(rows), len(rows[0])), GF(5)).rank()
    ours = to_ring(rows, GF5)
    ker = kernel(ours, GF5, len(rows[0]))
    assert rank(ours, GF5) == theirs
    assert theirs + len(ker) == len(rows[0])
    for vec in ker:
        assert all(not sum((a * b for a, b in zip(r, vec)), ModInt(0, 5)) for r in ours)


@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3))
def test_determinant_and_inverse_over_q(rows):
    m = sympy.Matrix(rows)
    ours = to_ring(rows, Q)
    assert determinant(ours, Q) == m.det()
    if m.det():
        inv = inverse(ours, Q)
        assert [[Fraction(int(x.p), int(x.q)) for x in row] for row in m.inv().tolist()] == inv


def test_kernel_examples():
    assert kernel(to_ring([[1, 0], [0, 1]], Q), Q, 2) == []
    ker = kernel(to_ring([[1, 1]], GF2), GF2, 2)
    assert ker == [[ModInt(1, 2), ModInt(1, 2)]]
    assert len(kernel([], Q, 3)) == 3


def test_laurent_matrix_against_sympy():
    q = V * V
    rows = [[q, 1 + V, LaurentPoly.zero()],
            [V ** -1, q - 1, V],
            [1 + q, V ** 3, 1 - V]]
    det = determinant(rows, LAURENT)
    m = sympy.Matrix([[laurent_sympy(x) for x in r] for r in rows])
    assert sympy.simplify(laurent_sympy(det) - m.det()) == 0
    assert rank(rows, LAURENT) == 3
    singular = rows[:2] + [[a + b for a, b in zip(rows[0], rows[1])]]
    assert rank(singular, LAURENT) == 2
    ker = kernel(singular, LAURENT, 3)
    assert len(ker) == 1
    for r in singular:
        assert sum((a * b for a, b in zip(r, ker[0])), LaurentPoly.zero()) == LaurentPoly.zero()


def test_qv_kernel_and_span():
    one = RationalFunction(1)
    vv = RationalFunction(V)
    rows = [[one, vv, vv * vv], [vv, vv * vv, vv * vv * vv]]
    ker = kernel(rows, QV, 3)
    assert len(ker) == 2
    assert in_span([rows[0]], rows[1], QV)
    assert not in_span([rows[0]], [one, one, one], QV)
    assert span_equal([rows[0]], [rows[1]], QV)


def test_row_basis_and_rref():
    rows = to_ring([[1, 2, 3], [2, 4, 6], [0, 1, 1]], Q)
    assert row_basis(rows, Q) == [0, 2]
    _, pivots, *_ = bareiss_rref(rows, Q)
    assert len(pivots) == 2


def test_exact_matrix_ops():
    a = ExactMatrix(to_ring([[1, 2], [3, 4]], Q), Q)
    b = ExactMatrix(to_ring([[0, 1], [1, 0]], Q), Q)
    assert (a @ b).rows == to_ring([[2, 1], [4, 3]], Q)
    assert (a @ a.inverse()) == ExactMatrix.identity(2, Q)
    assert a.det() == -2 and a.transpose().rows == to_ring([[1, 3], [2, 4]], Q)
    assert (a - a).is_zero() and (a + a) == a.scale(Fraction(2))
    lm = ExactMatrix([[1 + V, V]], LAURENT)
    assert lm.specialize(GF2).rows == [[ModInt(0, 2), ModInt(1, 2)]]
    assert a.vector_matrix(to_ring([[1, 1]], Q)[0]) == to_ring([[4, 6]], Q)[0]
    with pytest.raises(ValueError):
        a @ ExactMatrix(to_ring([[1, 2, 3]], Q), Q)
