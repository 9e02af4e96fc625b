"""Exact delta invariants of weak del Pezzo surfaces of degree at least 5."""

__version__ = "0.1.0"
