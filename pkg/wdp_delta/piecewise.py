"""Exact polynomials of degree at most 2 and continuous piecewise polynomials in u.

Volumes of surface divisors along a ray are piecewise quadratic, so nothing here goes past
degree 2. Roots are only ever reported when they are rational; an irrational root is reported
as an isolating interval instead of an approximation.
"""

from dataclasses import dataclass
from fractions import Fraction

import sympy

from wdp_delta.errors import DomainExceeded
from wdp_delta.exact import rat_str, to_rat

MAX_DEGREE = 2
ISOLATION_WIDTH = Fraction(1, 10)
_U = sympy.Symbol("u")


@dataclass(frozen=True)
class Poly:
    """Polynomial in u with ascending rational coefficients and degree at most 2.

    Examples:
        >>> Poly.of(5, 0, -2)(1)
        Fraction(3, 1)
        >>> str(Poly.of(8, -6, 1))
        '8 - 6u + u^2'
    """

    coefficients: tuple

    def __post_init__(self):
        coefficients = [to_rat(c) for c in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        if len(coefficients) - 1 > MAX_DEGREE:
            raise ValueError(f"degree {len(coefficients) - 1} exceeds {MAX_DEGREE}")
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @classmethod
    def of(cls, *coefficients):
        """Build from positional ascending coefficients."""
        return cls(tuple(coefficients))

    @classmethod
    def zero(cls):
        """The zero polynomial."""
        return cls(())

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self):
        """True for the zero polynomial."""
        return not self.coefficients

    def coefficient(self, power):
        """Coefficient of ``u**power`` (zero past the degree)."""
        return self.coefficients[power] if power < len(self.coefficients) else Fraction(0)

    def __call__(self, u):
        u = to_rat(u)
        value = Fraction(0)
        for coefficient in reversed(self.coefficients):
            value = value * u + coefficient
        return value

    def __add__(self, other):
        size = max(len(self.coefficients), len(other.coefficients))
        return Poly(tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    def __sub__(self, other):
        return self + other.scaled(-1)

    def __mul__(self, other):
        if self.is_zero or other.is_zero:
            return Poly.zero()
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, left in enumerate(self.coefficients):
            for j, right in enumerate(other.coefficients):
                product[i + j] += left * right
        return Poly(tuple(product))

    def scaled(self, factor):
        """Multiply every coefficient by ``factor``."""
        factor = to_rat(factor)
        return Poly(tuple(factor * c for c in self.coefficients))

    def integral(self, lo, hi):
        """Exact definite integral over ``[lo, hi]``."""
        lo, hi = to_rat(lo), to_rat(hi)
        return sum(
            (c * (hi ** (k + 1) - lo ** (k + 1)) / (k + 1) for k, c in enumerate(self.coefficients)),
            Fraction(0),
        )

    def deflate(self, root):
        """Divide by ``(u - root)``; ``root`` must be a root."""
        root = to_rat(root)
        if self(root) != 0:
            raise ValueError(f"{root} is not a root of {self}")
        quotient = []
        carry = Fraction(0)
        for coefficient in reversed(self.coefficients[1:]):
            carry = carry * root + coefficient
            quotient.append(carry)
        return Poly(tuple(reversed(quotient)))

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for power, coefficient in enumerate(self.coefficients):
            if coefficient == 0:
                continue
            magnitude = abs(coefficient)
            monomial = {0: "", 1: "u"}.get(power, f"u^{power}")
            text = str(magnitude) if (magnitude != 1 or not monomial) else ""
            term = f"{text}{monomial}"
            if not parts:
                parts.append(f"-{term}" if coefficient < 0 else term)
            else:
                parts.append(f"- {term}" if coefficient < 0 else f"+ {term}")
        return " ".join(parts)

    def to_json(self):
        """Coefficients as "num/den" strings."""
        return [rat_str(c) for c in self.coefficients]


@dataclass(frozen=True)
class PiecewisePoly:
    """Continuous piecewise polynomial over ``[breakpoints[0], breakpoints[-1]]``.

    ``pieces[i]`` is valid on ``[breakpoints[i], breakpoints[i + 1]]``.
    """

    breakpoints: tuple
    pieces: tuple

    def __post_init__(self):
        breakpoints = tuple(to_rat(b) for b in self.breakpoints)
        object.__setattr__(self, "breakpoints", breakpoints)
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if len(self.pieces) != len(breakpoints) - 1 or not self.pieces:
            raise ValueError(f"{len(self.pieces)} pieces do not fit {len(breakpoints)} breakpoints")
        if any(lo >= hi for lo, hi in zip(breakpoints, breakpoints[1:])):
            raise ValueError(f"breakpoints {[str(b) for b in breakpoints]} are not strictly increasing")
        for i, point in enumerate(breakpoints[1:-1]):
            left, right = self.pieces[i](point), self.pieces[i + 1](point)
            if left != right:
                raise ValueError(f"discontinuity at u={point}: {left} != {right}")

    @property
    def domain(self):
        """``(first breakpoint, last breakpoint)``."""
        return self.breakpoints[0], self.breakpoints[-1]

    def intervals(self):
        """Yield ``(lo, hi, piece)`` triples in order."""
        for i, piece in enumerate(self.pieces):
            yield self.breakpoints[i], self.breakpoints[i + 1], piece

    def __call__(self, u):
        u = to_rat(u)
        lo, hi = self.domain
        if not lo <= u <= hi:
            raise DomainExceeded(u, u, self.domain)
        for start, end, piece in self.intervals():
            if start <= u <= end:
                return piece(u)
        raise AssertionError("unreachable")  # pragma: no cover

    def __str__(self):
        return ", ".join(f"[{lo}, {hi}]: {piece}" for lo, hi, piece in self.intervals())


def integrate(function, lo, hi):
    """Exact integral of a piecewise polynomial over ``[lo, hi]``.

    Args:
        function (PiecewisePoly): The integrand.
        lo (Fraction): Lower limit, at least the first breakpoint.
        hi (Fraction): Upper limit, at most the last breakpoint.

    Raises:
        DomainExceeded: if ``[lo, hi]`` is not inside the domain, or ``lo > hi``.

    Examples:
        >>> volume = PiecewisePoly((0, 1, 2), (Poly.of(5, 0, -2), Poly.of(8, -6, 1)))
        >>> integrate(volume, 0, 2)
        Fraction(17, 3)
    """
    lo, hi = to_rat(lo), to_rat(hi)
    start, end = function.domain
    if lo > hi or lo < start or hi > end:
        raise DomainExceeded(lo, hi, function.domain)
    total = Fraction(0)
    for piece_lo, piece_hi, piece in function.intervals():
        left, right = max(lo, piece_lo), min(hi, piece_hi)
        if left < right:
            total += piece.integral(left, right)
    return total


@dataclass(frozen=True)
class NoRoot:
    """No real root in the searched interval."""

    def __str__(self):
        return "no root"


@dataclass(frozen=True)
class Irrational:
    """An irrational root isolated in ``[lo, hi]`` (the only root there)."""

    lo: Fraction
    hi: Fraction

    def __str__(self):
        return f"irrational root in [{self.lo}, {self.hi}]"


def _to_sympy(value):
    return sympy.Rational(value.numerator, value.denominator)


def _to_fraction(value):
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _sympy_poly(function):
    """The polynomial as a ``sympy.Poly`` over QQ in the symbol u."""
    return sympy.Poly([_to_sympy(c) for c in reversed(function.coefficients)], _U, domain="QQ")


def smallest_root_in(function, lo, hi):
    """Smallest root of a polynomial of degree at most 2 inside ``[lo, hi]``.

    Rational roots come from factoring over QQ. When there are none, sympy's Sturm-based root
    counting decides whether a real root lies in the interval and ``Poly.intervals`` isolates it.

    Args:
        function (Poly): The polynomial.
        lo (Fraction): Left end of the search interval.
        hi (Fraction): Right end of the search interval.

    Returns:
        Fraction | NoRoot | Irrational: the smallest rational root, ``NoRoot()`` when there is no
        real root in the interval, or ``Irrational(a, b)`` isolating the smallest real root when
        it is irrational. The zero polynomial vanishes everywhere, so ``lo`` is returned.

    Examples:
        >>> smallest_root_in(Poly.of(8, -6, 1), 1, 3)
        Fraction(2, 1)
        >>> isinstance(smallest_root_in(Poly.of(5, 0, -2), 0, 2), Irrational)
        True
    """
    lo, hi = to_rat(lo), to_rat(hi)
    if lo > hi:
        return NoRoot()
    if function.is_zero:
        return lo
    if function.degree == 0:
        return NoRoot()

    poly = _sympy_poly(function)
    rational = sorted(_to_fraction(root) for root in poly.ground_roots())
    if rational:
        # Over QQ a quadratic with one rational root splits, so every root is listed.
        return next((root for root in rational if lo <= root <= hi), NoRoot())

    if poly.count_roots(_to_sympy(lo), _to_sympy(hi)) == 0:
        return NoRoot()
    isolating = poly.intervals(eps=_to_sympy(ISOLATION_WIDTH), inf=_to_sympy(lo), sup=_to_sympy(hi))
    if not isolating:
        return NoRoot()
    (left, right), _ = min(isolating, key=lambda interval: interval[0][0])
    return Irrational(max(lo, _to_fraction(left)), min(hi, _to_fraction(right)))
