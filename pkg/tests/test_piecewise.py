"""Tests for polynomials, piecewise polynomials and root isolation."""

import random
from fractions import Fraction

import pytest

from wdp_delta.errors import DomainExceeded
from wdp_delta.piecewise import Irrational, NoRoot, PiecewisePoly, Poly, integrate, smallest_root_in

# Volume of -K - uF on the degree 5 surface with one (-2)-curve.
F_VOLUME = PiecewisePoly((0, 1, 2), (Poly.of(5, 0, -2), Poly.of(8, -6, 1)))


def test_integrate_two_pieces():
    assert integrate(F_VOLUME, 0, 2) == Fraction(17, 3)
    assert integrate(F_VOLUME, 0, 2) / 5 == Fraction(17, 15)


def test_integrate_zero():
    assert integrate(PiecewisePoly((0, 2), (Poly.zero(),)), 0, 2) == 0


def test_integrate_monomial():
    assert integrate(PiecewisePoly((0, 2), (Poly.of(0, 0, 1),)), 0, 2) == Fraction(8, 3)


def test_integrate_partial_range():
    assert integrate(F_VOLUME, Fraction(1, 2), Fraction(3, 2)) == (
        Poly.of(5, 0, -2).integral(Fraction(1, 2), 1) + Poly.of(8, -6, 1).integral(1, Fraction(3, 2))
    )


@pytest.mark.parametrize("lo, hi", [(-1, 1), (0, 3), (2, 1)])
def test_integrate_outside_domain(lo, hi):
    with pytest.raises(DomainExceeded):
        integrate(F_VOLUME, lo, hi)


def test_discontinuous_pieces_rejected():
    with pytest.raises(ValueError):
        PiecewisePoly((0, 1, 2), (Poly.of(5), Poly.of(4)))


def test_breakpoints_must_increase():
    with pytest.raises(ValueError):
        PiecewisePoly((0, 0), (Poly.of(1),))


def test_degree_above_two_rejected():
    with pytest.raises(ValueError):
        Poly.of(0, 0, 0, 1)


def test_poly_arithmetic():
    left, right = Poly.of(1, 1), Poly.of(-1, 1)
    assert left * right == Poly.of(-1, 0, 1)
    assert left - left == Poly.zero()
    assert (left + right).degree == 1
    assert Poly.of(8, -6, 1).deflate(2) == Poly.of(-4, 1)
    assert str(Poly.of(8, -6, 1)) == "8 - 6u + u^2"
    assert str(Poly.of(Fraction(-1, 2), 0, -1)) == "-1/2 - u^2"


def test_piecewise_evaluation():
    assert F_VOLUME(1) == 3
    assert F_VOLUME(2) == 0
    with pytest.raises(DomainExceeded):
        F_VOLUME(3)


def test_smallest_rational_root():
    assert smallest_root_in(Poly.of(8, -6, 1), 1, 3) == 2
    assert smallest_root_in(Poly.of(8, -6, 1), 3, 5) == 4
    assert smallest_root_in(Poly.of(-1, 2), 0, 1) == Fraction(1, 2)


def test_no_root():
    assert smallest_root_in(Poly.of(1), 0, 5) == NoRoot()
    assert smallest_root_in(Poly.of(1, 0, 1), -5, 5) == NoRoot()
    assert smallest_root_in(Poly.of(8, -6, 1), 5, 6) == NoRoot()


def test_irrational_root_is_isolated():
    root = smallest_root_in(Poly.of(5, 0, -2), 0, 2)
    assert isinstance(root, Irrational)
    assert 0 <= root.lo < root.hi <= 2 and root.hi - root.lo <= Fraction(1, 10)
    assert Poly.of(5, 0, -2)(root.lo) > 0 > Poly.of(5, 0, -2)(root.hi)


def test_irrational_root_left_of_vertex():
    # u^2 - 2 on [-2, 0]: the smaller root is -sqrt(2).
    root = smallest_root_in(Poly.of(-2, 0, 1), -2, 0)
    assert isinstance(root, Irrational)
    assert root.lo < root.hi and root.hi - root.lo <= Fraction(1, 10)
    assert root.lo * root.lo >= 2 >= root.hi * root.hi


def test_zero_polynomial_vanishes_at_lo():
    assert smallest_root_in(Poly.zero(), Fraction(1, 3), 2) == Fraction(1, 3)


GRID = Fraction(1, 4)
# Volume of -K - u Gamma on the plane blown up at one point.
GAMMA_VOLUME = PiecewisePoly((0, 1, 3), (Poly.of(8, -4), Poly.of(9, -6, 1)))


def scan_for_root(function, lo, hi):
    """First point of the quarter grid in ``[lo, hi]`` where ``function`` vanishes."""
    for step in range(int((hi - lo) / GRID) + 1):
        u = lo + step * GRID
        if function(u) == 0:
            return u
    return None


@pytest.mark.parametrize("volume", [F_VOLUME, GAMMA_VOLUME])
def test_integrate_is_additive(volume):
    rng = random.Random(str(volume))
    start, end = volume.domain
    for _ in range(20):
        a, b, c = sorted(start + (end - start) * Fraction(rng.randint(0, 60), 60) for _ in range(3))
        assert integrate(volume, a, b) + integrate(volume, b, c) == integrate(volume, a, c)


def test_smallest_root_matches_grid_scan():
    rng = random.Random(1729)
    for _ in range(200):
        poly = Poly.of(Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3)))
        for _ in range(rng.randint(1, 2)):
            poly = poly * Poly.of(-GRID * rng.randint(-12, 12), 1)
        lo = GRID * rng.randint(-12, 8)
        hi = lo + GRID * rng.randint(0, 12)
        expected = scan_for_root(poly, lo, hi)
        assert smallest_root_in(poly, lo, hi) == (NoRoot() if expected is None else expected)


@pytest.mark.parametrize("n", [2, 3, 5, 7, 10])
def test_irrational_root_is_the_first_sign_change(n):
    poly = Poly.of(-n, 0, 1)
    root = smallest_root_in(poly, -4, 4)
    assert isinstance(root, Irrational)
    assert root.hi - root.lo <= Fraction(1, 10)
    assert poly(root.lo) > 0 > poly(root.hi)
    assert all(poly(-4 + (root.lo + 4) * Fraction(k, 64)) > 0 for k in range(65))
