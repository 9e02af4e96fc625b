"""Shared fixtures and helpers."""

from fractions import Fraction

import pytest

from wdp_delta.catalog import get_surface
from wdp_delta.cli import program


def rats(*values):
    """Tuple of Fractions from ints and "num/den" strings."""
    return tuple(Fraction(value) for value in values)


def run_cli(*args):
    """Run the command line and return its exit code."""
    try:
        program.run(["wdp-delta", *args])
    except SystemExit as error:
        return error.code or 0
    return 0


@pytest.fixture
def dp5_1():
    """Degree 5 with one (-2)-curve F and seven (-1)-curves."""
    return get_surface("dp5-1")


@pytest.fixture
def sigma1():
    """The plane blown up at one point, as a ruled surface."""
    return get_surface("dp8-sigma1")
