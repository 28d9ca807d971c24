from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from drgwb.exact import (
    IntPolynomial,
    RationalMatrix,
    as_fraction,
    char_poly,
    det,
    isolate_real_roots,
    nullspace,
    poly_inverse_mod,
    poly_mod,
    poly_mul,
    rank,
    rational_roots,
    rref,
    solve_linear_combination,
    squarefree_decomposition,
)

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
ints = st.integers(min_value=-6, max_value=6)


def matrices(rows, cols, elems=small):
    return st.lists(st.lists(elems, min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(RationalMatrix)


def poly_from_roots(roots, lead=1):
    coeffs = [Fraction(lead)]
    for r in roots:
        coeffs = poly_mul(coeffs, [-Fraction(r), Fraction(1)])
    return IntPolynomial.from_rational(coeffs)


def test_as_fraction_rejects_floats():
    assert as_fraction("3/6") == Fraction(1, 2)
    with pytest.raises(TypeError):
        as_fraction(0.5)


def test_rref_identity_and_proportional_rows():
    eye = RationalMatrix.identity(2)
    assert rref(eye) == (eye, 2)
    m, r = rref(RationalMatrix([[1, 2], [2, 4]]))
    assert m == RationalMatrix([[1, 2], [0, 0]]) and r == 1


def _minor_rank(m: RationalMatrix) -> int:
    for size in range(min(m.shape), 0, -1):
        for rows in combinations(range(m.nrows), size):
            for cols in combinations(range(m.ncols), size):
                if det(m.submatrix(rows, cols)):
                    return size
    return 0


@settings(max_examples=40, deadline=None)
@given(matrices(5, 5, st.sampled_from([Fraction(0), Fraction(1), Fraction(-2), Fraction(1, 3)])))
def test_rank_agrees_with_minors(m):
    assert rank(m) == rref(m)[1] == _minor_rank(m)


@settings(max_examples=60, deadline=None)
@given(matrices(4, 5))
def test_rref_idempotent(m):
    once, r = rref(m)
    assert rref(once) == (once, r)


@settings(max_examples=60, deadline=None)
@given(matrices(4, 6))
def test_nullspace_vectors_are_killed(m):
    basis = nullspace(m)
    assert len(basis) == m.ncols - rank(m)
    for v in basis:
        assert all(x == 0 for x in m.apply(v))


def test_solve_linear_combination_examples():
    M = RationalMatrix([[1, 2], [3, 4]])
    sol = solve_linear_combination([M], M)
    assert sol.particular == (1,) and sol.unique
    assert solve_linear_combination([M], M.scale(2)).particular == (2,)
    sol = solve_linear_combination([M, RationalMatrix.zeros(2, 2)], M)
    assert sol.particular == (1, 0) and sol.homogeneous == ((0, 1),)
    assert solve_linear_combination([M], RationalMatrix.identity(2)) is None
    with pytest.raises(ValueError):
        solve_linear_combination([M], RationalMatrix.identity(3))


@settings(max_examples=60, deadline=None)
@given(st.lists(matrices(2, 3), min_size=1, max_size=4), st.lists(small, min_size=4, max_size=4))
def test_solve_resubstitution(targets, coeffs):
    rhs = RationalMatrix.zeros(2, 3)
    for c, t in zip(coeffs, targets):
        rhs = rhs + t.scale(c)
    sol = solve_linear_combination(targets, rhs)
    assert sol is not None
    for params in ([0] * sol.dimension, [1] * sol.dimension):
        x = sol.point(params)
        total = RationalMatrix.zeros(2, 3)
        for c, t in zip(x, targets):
            total = total + t.scale(c)
        assert total == rhs


def test_char_poly_examples():
    assert str(char_poly(RationalMatrix([[5]]))) == "t - 5"
    assert str(char_poly(RationalMatrix([[0, 1], [1, 0]]))) == "t^2 - 1"
    c5 = RationalMatrix([[1 if abs(i - j) in (1, 4) else 0 for j in range(5)] for i in range(5)])
    p = char_poly(c5)
    assert p.degree == 5
    assert [r for r, _ in rational_roots(p).roots] == [2]
    with pytest.raises(ValueError):
        char_poly(RationalMatrix([[1, 2, 3]]))


@settings(max_examples=40, deadline=None)
@given(matrices(4, 4, ints), st.fractions(min_value=-10, max_value=10, max_denominator=3))
def test_char_poly_matches_determinant(m, t):
    p = char_poly(m)
    shifted = RationalMatrix.identity(4).scale(t) - m
    assert p(t) == det(shifted) * p.leading


@settings(max_examples=30, deadline=None)
@given(matrices(3, 3, small))
def test_char_poly_rational_input(m):
    p = char_poly(m)
    for t in (Fraction(0), Fraction(1), Fraction(-7, 2)):
        assert p(t) == det(RationalMatrix.identity(3).scale(t) - m) * p.leading


def test_rational_roots_examples():
    r = rational_roots(IntPolynomial((-1, 0, 1)))
    assert r.roots == ((1, 1), (-1, 1)) and r.remainder.degree == 0
    r = rational_roots(poly_from_roots([3, 3, -1]))
    assert r.roots == ((3, 2), (-1, 1))
    petersen = RationalMatrix([[0, 3, 0], [1, 0, 2], [0, 1, 2]])
    assert [x for x, _ in rational_roots(char_poly(petersen)).roots] == [3, 1, -2]
    with pytest.raises(ValueError):
        rational_roots(IntPolynomial((0,)))


@settings(max_examples=80, deadline=None)
@given(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=6), min_size=1, max_size=6),
       st.integers(min_value=0, max_value=2))
def test_rational_roots_recovers_roots(roots, extra):
    # multiply by an irreducible quadratic factor t^2 - 2 a few times
    coeffs = [Fraction(1)]
    for r in roots:
        coeffs = poly_mul(coeffs, [-r, Fraction(1)])
    for _ in range(extra):
        coeffs = poly_mul(coeffs, [Fraction(-2), Fraction(0), Fraction(1)])
    report = rational_roots(IntPolynomial.from_rational(coeffs))
    expected = {}
    for r in roots:
        expected[r] = expected.get(r, 0) + 1
    assert dict(report.roots) == expected
    assert report.total_multiplicity + report.remainder.degree == len(roots) + 2 * extra
    assert len(report.remainder_intervals) == (2 if extra else 0)
    for lo, hi in report.remainder_intervals:
        # intervals never contain a rational root
        assert not any(lo < r <= hi and r != hi for r in expected)


def test_isolating_intervals_bracket_sqrt2():
    p = IntPolynomial((-2, 0, 1))
    intervals = isolate_real_roots(p)
    assert len(intervals) == 2
    for lo, hi in intervals:
        assert lo < hi and p(lo) * p(hi) < 0
    (_, b), (c, _) = intervals
    assert b <= c


def test_squarefree_decomposition():
    p = poly_from_roots([1, 1, 1, 2, 2, -3])
    parts = {e: g for g, e in squarefree_decomposition(p)}
    assert set(parts) == {1, 2, 3}
    assert [r for r, _ in rational_roots(parts[3]).roots] == [1]
    assert [r for r, _ in rational_roots(parts[2]).roots] == [2]


def test_remainder_multiplicities_of_repeated_irrational_factor():
    quad = [Fraction(-1), Fraction(1), Fraction(1)]
    p = IntPolynomial.from_rational(poly_mul(poly_mul(quad, quad), [Fraction(-2), Fraction(1)]))
    r = rational_roots(p)
    assert r.roots == ((2, 1),)
    assert r.remainder_multiplicities == (2, 2)


def test_poly_inverse_mod():
    m = [Fraction(-1), Fraction(1), Fraction(1)]  # t^2 + t - 1
    a = [Fraction(3), Fraction(2)]
    inv = poly_inverse_mod(a, m)
    assert poly_mod(poly_mul(a, inv), m) == [1]
    with pytest.raises(ValueError):
        poly_inverse_mod(m, m)


def test_matrix_is_immutable():
    m = RationalMatrix([[1, 2]])
    with pytest.raises(AttributeError):
        m.nrows = 3
    assert m.transpose().shape == (2, 1)
    assert (m @ m.transpose()) == RationalMatrix([[5]])
