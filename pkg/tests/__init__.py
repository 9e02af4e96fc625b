"""Tests for wdp-delta."""
