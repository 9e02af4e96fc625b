"""Exact rational arithmetic and dense linear algebra.

Rationals are ``fractions.Fraction`` values, always in lowest terms with a positive
denominator. Vectors are tuples of Fractions and matrices are tuples of row tuples, so every
value here is immutable and can be shared between threads or processes.

Examples:
    >>> solve_linear(((Fraction(-2),),), (Fraction(-1, 2),))
    (Fraction(1, 4),)
    >>> is_negative_definite(((-2, 1), (1, -2)))
    True
"""

from fractions import Fraction
from math import lcm

from wdp_delta.errors import DimensionMismatch, SingularMatrix

Rat = Fraction
RatVector = tuple
RatMatrix = tuple


def to_rat(value):
    """Convert an int, Fraction or "num/den" string into a Fraction.

    Args:
        value (int | str | Fraction): The value to convert.

    Examples:
        >>> to_rat("3/6")
        Fraction(1, 2)
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (bool, float)):
        raise TypeError(f"refusing inexact value `{value!r}`")
    return Fraction(value)


def rat_str(value):
    """Render a rational as the canonical "num/den" string (integers keep "/1")."""
    value = to_rat(value)
    return f"{value.numerator}/{value.denominator}"


def vector(values):
    """Build a RatVector from any iterable of exact values."""
    return tuple(to_rat(value) for value in values)


def matrix(rows):
    """Build a RatMatrix from nested iterables of exact values."""
    return tuple(vector(row) for row in rows)


def identity(size):
    """Return the ``size`` x ``size`` identity matrix."""
    return tuple(tuple(Fraction(int(i == j)) for j in range(size)) for i in range(size))


def is_symmetric(mat):
    """Check that ``mat`` is square and equal to its transpose."""
    size = len(mat)
    if any(len(row) != size for row in mat):
        return False
    return all(mat[i][j] == mat[j][i] for i in range(size) for j in range(i + 1, size))


def _check_length(expected, got):
    if expected != got:
        raise DimensionMismatch(expected, got)


def dot(left, right):
    """Euclidean dot product of two vectors."""
    _check_length(len(left), len(right))
    return sum((a * b for a, b in zip(left, right)), Fraction(0))


def mat_vec(mat, vec):
    """Matrix-vector product."""
    return tuple(dot(row, vec) for row in mat)


def bilinear(left, mat, right):
    """Evaluate ``left^T . mat . right``."""
    _check_length(len(mat), len(left))
    return dot(left, mat_vec(mat, right))


def add(left, right):
    """Componentwise sum."""
    _check_length(len(left), len(right))
    return tuple(a + b for a, b in zip(left, right))


def sub(left, right):
    """Componentwise difference."""
    _check_length(len(left), len(right))
    return tuple(a - b for a, b in zip(left, right))


def scale(factor, vec):
    """Multiply every entry of ``vec`` by ``factor``."""
    factor = to_rat(factor)
    return tuple(factor * a for a in vec)


def combine(terms, size):
    """Sum ``coefficient * vec`` over ``terms``, a sequence of (coefficient, vec) pairs."""
    total = [Fraction(0)] * size
    for coefficient, vec in terms:
        _check_length(size, len(vec))
        for i, entry in enumerate(vec):
            total[i] += coefficient * entry
    return tuple(total)


def submatrix(mat, indices):
    """Principal submatrix on ``indices``."""
    return tuple(tuple(mat[i][j] for j in indices) for i in indices)


def _integer_rows(rows):
    """Scale each row by the lcm of its denominators; the solution set is unchanged."""
    scaled = []
    for row in rows:
        factor = lcm(*(to_rat(entry).denominator for entry in row)) if row else 1
        scaled.append([int(to_rat(entry) * factor) for entry in row])
    return scaled


def _bareiss_pivots(rows):
    """Yield the Bareiss pivots of a square integer matrix without row exchanges.

    The k-th pivot is the k-th leading principal minor of the (row-scaled) matrix. Iteration
    stops after the first zero pivot.
    """
    work = [list(row) for row in rows]
    size = len(work)
    previous = 1
    for k in range(size):
        pivot = work[k][k]
        yield pivot
        if pivot == 0:
            return
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                work[i][j] = (work[i][j] * pivot - work[i][k] * work[k][j]) // previous
            work[i][k] = 0
        previous = pivot


def determinant(mat):
    """Exact determinant via fraction-free elimination."""
    size = len(mat)
    if any(len(row) != size for row in mat):
        raise DimensionMismatch(size, len(mat[0]) if mat else 0)
    if size == 0:
        return Fraction(1)
    row_factors = [lcm(*(to_rat(entry).denominator for entry in row)) for row in mat]
    work = _integer_rows(mat)
    sign = 1
    previous = 1
    for k in range(size):
        if work[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if work[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            work[k], work[swap] = work[swap], work[k]
            sign = -sign
        pivot = work[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                work[i][j] = (work[i][j] * pivot - work[i][k] * work[k][j]) // previous
            work[i][k] = 0
        previous = pivot
    scale_down = 1
    for factor in row_factors:
        scale_down *= factor
    return Fraction(sign * work[size - 1][size - 1], scale_down)


def solve_linear(mat, rhs):
    """Solve ``mat . x = rhs`` exactly.

    Fraction-free (Bareiss) elimination runs on the row-scaled integer augmented matrix; only
    the back substitution works with Fractions.

    Args:
        mat (RatMatrix): Square nonsingular matrix.
        rhs (RatVector): Right-hand side.

    Returns:
        RatVector: The unique solution.

    Raises:
        SingularMatrix: when ``det(mat) == 0``.
        DimensionMismatch: when the shapes disagree.
    """
    size = len(mat)
    _check_length(size, len(rhs))
    if any(len(row) != size for row in mat):
        raise DimensionMismatch(size, min(len(row) for row in mat))
    if size == 0:
        return ()
    work = _integer_rows([list(row) + [rhs[i]] for i, row in enumerate(mat)])
    previous = 1
    for k in range(size):
        if work[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if work[i][k] != 0), None)
            if swap is None:
                raise SingularMatrix(f"matrix of size {size} is singular")
            work[k], work[swap] = work[swap], work[k]
        pivot = work[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size + 1):
                work[i][j] = (work[i][j] * pivot - work[i][k] * work[k][j]) // previous
            work[i][k] = 0
        previous = pivot

    solution = [Fraction(0)] * size
    for i in reversed(range(size)):
        acc = Fraction(work[i][size])
        for j in range(i + 1, size):
            acc -= work[i][j] * solution[j]
        solution[i] = acc / work[i][i]
    return tuple(solution)


def leading_minors(mat):
    """Signs-preserving leading principal minors (up to positive row scalings).

    Stops at the first vanishing minor, so the result may be shorter than the matrix.
    """
    return tuple(_bareiss_pivots(_integer_rows(mat)))


def is_negative_definite(mat):
    """Sylvester's criterion: leading minors alternate in sign starting negative.

    The empty matrix is negative definite.
    """
    size = len(mat)
    for k, minor in enumerate(_bareiss_pivots(_integer_rows(mat))):
        expected_sign = -1 if k % 2 == 0 else 1
        if minor * expected_sign <= 0:
            return False
    return True
