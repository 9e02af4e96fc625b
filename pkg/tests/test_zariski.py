"""Tests for Zariski decompositions at a point and along rays."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from wdp_delta.catalog import get_surface, list_surfaces
from wdp_delta.errors import NotPseudoEffective
from wdp_delta.exact import combine, is_negative_definite, solve_linear, sub
from wdp_delta.picard import gram_of, is_nef, pair
from wdp_delta.piecewise import Poly
from wdp_delta.zariski import decompose_at, decomposition_to_dict, ray_to_dict, walk_ray

from .conftest import rats

ORACLE_SAMPLES = 25

# surface, ray, tau, [(lo, hi, support, {label: N(u) as (constant, slope)})]
FIXTURES = [
    ("dp5-1", "F", 2, [(0, 1, (), {}), (1, 2, ("E1", "E2", "E3"), {"E1": (-1, 1), "E2": (-1, 1), "E3": (-1, 1)})]),
    ("dp5-1", "E1", 2, [(0, 1, ("F",), {"F": (0, "1/2")}), (1, 2, ("E4", "F"), {"E4": (-1, 1), "F": (0, "1/2")})]),
    (
        "dp5-3",
        "E3",
        4,
        [
            (0, 3, ("F1", "F2", "F3"), {"F1": (0, "1/3"), "F2": (0, "2/3"), "F3": (0, "1/2")}),
            (3, 4, ("E2", "F1", "F2", "F3"), {"E2": (-3, 1), "F1": (-2, 1), "F2": (-1, 1), "F3": (0, "1/2")}),
        ],
    ),
    (
        "dp5-6",
        "E1",
        5,
        [(0, 5, ("F1", "F2", "F3", "F4"), {"F1": (0, "2/5"), "F2": (0, "4/5"), "F3": (0, "6/5"), "F4": (0, "3/5")})],
    ),
    ("dp6-5", "E", 6, [(0, 6, ("F1", "F2", "F3"), {"F1": (0, "1/3"), "F2": (0, "2/3"), "F3": (0, "1/2")})]),
    ("dp6-6", "E1", 2, [(0, 1, (), {}), (1, 2, ("E2", "E6"), {"E2": (-1, 1), "E6": (-1, 1)})]),
    ("dp7-2", "E1", 2, [(0, 1, (), {}), (1, 2, ("E2",), {"E2": (-1, 1)})]),
    ("dp7-2", "E2", 3, [(0, 1, (), {}), (1, 3, ("E1", "E3"), {"E1": (-1, 1), "E3": (-1, 1)})]),
    ("dp8-sigma0", "C0", 2, [(0, 2, (), {})]),
    ("dp8-sigma1", "C0", 2, [(0, 2, (), {})]),
    ("dp8-sigma1", "Gamma", 3, [(0, 1, (), {}), (1, 3, ("C0",), {"C0": (-1, 1)})]),
    ("dp8-sigma2", "C0", 2, [(0, 2, (), {})]),
    ("dp8-sigma2", "Gamma", 4, [(0, 4, ("C0",), {"C0": (0, "1/2")})]),
]

# Volume pieces of a few of the rays above, as ascending coefficients.
VOLUMES = [
    ("dp5-1", "F", [(5, 0, -2), (8, -6, 1)]),
    ("dp5-1", "E1", [(5, -2, "-1/2"), (6, -4, "1/2")]),
    ("dp5-3", "E3", [(5, -2, "1/6"), (8, -4, "1/2")]),
    ("dp5-6", "E1", [(5, -2, "1/5")]),
    ("dp8-sigma1", "Gamma", [(8, -4), (9, -6, 1)]),
    ("dp8-sigma2", "C0", [(8, 0, -2)]),
]


def generator_rays():
    """Every (surface id, generator label) pair of the catalog."""
    return [(surface_id, label) for surface_id in list_surfaces() for label in get_surface(surface_id).model.labels]


def walk(surface_id, label):
    model = get_surface(surface_id).model
    return model, walk_ray(model, model.class_of(label))


def oracle(model, divisor):
    """Brute force: the unique support, over all negative definite sets of negative curves, that works."""
    negatives = model.negative_labels
    for size in range(len(negatives) + 1):
        for support in combinations(negatives, size):
            gram = gram_of(model, support)
            if not is_negative_definite(gram):
                continue
            classes = [model.class_of(label) for label in support]
            coefficients = solve_linear(gram, tuple(pair(model, divisor, cls) for cls in classes))
            if any(c <= 0 for c in coefficients):
                continue
            positive = sub(divisor, combine(zip(coefficients, classes), model.rank))
            if is_nef(model, positive):
                return positive, dict(zip(support, coefficients))
    raise AssertionError("no support satisfies the decomposition conditions")


@pytest.mark.parametrize("surface_id, label, tau, chambers", FIXTURES, ids=[f"{f[0]}/{f[1]}" for f in FIXTURES])
def test_chamber_fixtures(surface_id, label, tau, chambers):
    _, ray = walk(surface_id, label)
    assert ray.tau == tau
    assert len(ray.chambers) == len(chambers)
    for chamber, (lo, hi, support, negative) in zip(ray.chambers, chambers):
        assert (chamber.lo, chamber.hi) == rats(lo, hi)
        assert chamber.support == support
        for name, (constant, slope) in negative.items():
            assert chamber.negative_poly(name) == Poly.of(Fraction(constant), Fraction(slope))


@pytest.mark.parametrize("surface_id, label, pieces", VOLUMES)
def test_volume_fixtures(surface_id, label, pieces):
    model, ray = walk(surface_id, label)
    volume = ray.volume(model)
    assert volume.pieces == tuple(Poly(tuple(Fraction(c) for c in piece)) for piece in pieces)
    assert volume(ray.tau) == 0


def test_sigma1_fibre_at_two():
    model, ray = walk("dp8-sigma1", "Gamma")
    decomposition = ray.decomposition_at(2)
    assert decomposition.positive == rats(1, 1)
    assert decomposition.negative == (("C0", Fraction(1)),)
    assert decompose_at(model, rats(2, 1)) == decomposition


def test_first_quintic_e1_ray_at_half(dp5_1):
    model = dp5_1.model
    divisor = sub(model.anti_canonical, tuple(Fraction(1, 2) * c for c in model.class_of("E1")))
    assert decompose_at(model, divisor).negative == (("F", Fraction(1, 4)),)


def test_nef_divisor_has_empty_support(dp5_1):
    decomposition = decompose_at(dp5_1.model, dp5_1.model.anti_canonical)
    assert decomposition.support == ()
    assert decomposition.positive == dp5_1.model.anti_canonical


def test_beyond_threshold_is_refused(dp5_1):
    model = dp5_1.model
    divisor = sub(model.anti_canonical, tuple(3 * c for c in model.class_of("F")))
    with pytest.raises(NotPseudoEffective):
        decompose_at(model, divisor)
    _, ray = walk("dp5-1", "F")
    with pytest.raises(NotPseudoEffective):
        ray.chamber_at(3)


def test_negative_anchor_is_refused(dp5_1):
    model = dp5_1.model
    with pytest.raises(NotPseudoEffective):
        walk_ray(model, model.class_of("F"), anchor=tuple(-c for c in model.anti_canonical))


@pytest.mark.parametrize("surface_id, label", generator_rays())
def test_walk_agrees_with_oracle(surface_id, label):
    model, ray = walk(surface_id, label)
    rng = random.Random(f"{surface_id}/{label}")
    for _ in range(ORACLE_SAMPLES):
        u = ray.tau * Fraction(rng.randint(0, 997), 997)
        divisor = sub(model.anti_canonical, tuple(u * c for c in model.class_of(label)))
        positive, negative = oracle(model, divisor)
        decomposition = decompose_at(model, divisor)
        assert decomposition.positive == positive
        assert dict(decomposition.negative) == negative
        assert ray.decomposition_at(u) == decomposition


@pytest.mark.parametrize("surface_id, label", generator_rays())
def test_chamber_invariants(surface_id, label):
    model, ray = walk(surface_id, label)
    assert ray.chambers[0].lo == 0
    assert ray.chambers[-1].hi == ray.tau
    for left, right in zip(ray.chambers, ray.chambers[1:]):
        assert left.hi == right.lo
        assert left.positive_at(left.hi) == right.positive_at(right.lo)
    for chamber in ray.chambers:
        assert is_negative_definite(gram_of(model, chamber.support))
        for u in (chamber.lo, (chamber.lo + chamber.hi) / 2, chamber.hi):
            positive = chamber.positive_at(u)
            assert is_nef(model, positive)
            for name in chamber.support:
                assert pair(model, positive, model.class_of(name)) == 0
                assert chamber.negative_poly(name)(u) >= 0
        for name in chamber.support:
            assert chamber.negative_poly(name)((chamber.lo + chamber.hi) / 2) > 0
    final = ray.chambers[-1].positive_at(ray.tau)
    assert pair(model, final, final) == 0


def test_ray_json():
    model, ray = walk("dp5-1", "F")
    data = ray_to_dict(model, ray)
    assert data["tau"] == "2/1"
    assert data["zeroVolumeFrom"] is None
    assert [chamber["support"] for chamber in data["chambers"]] == [[], ["E1", "E2", "E3"]]
    assert data["chambers"][1]["negative"]["E1"] == {"constant": "-1/1", "slope": "1/1"}
    assert data["chambers"][0]["volume"] == ["5/1", "0/1", "-2/1"]


def test_decomposition_json(sigma1):
    model = sigma1.model
    divisor = rats(2, 1)
    data = decomposition_to_dict(model, divisor, decompose_at(model, divisor))
    assert data == {
        "surface": "dp8-sigma1",
        "divisor": ["2/1", "1/1"],
        "positive": ["1/1", "1/1"],
        "negative": {"C0": "1/1"},
        "volume": "1/1",
    }


@pytest.mark.parametrize("surface_id, label", generator_rays())
def test_negative_part_grows_along_the_ray(surface_id, label):
    # The curve of the ray direction itself is exempt.
    _, ray = walk(surface_id, label)
    for chamber in ray.chambers:
        for name, slope in zip(chamber.support, chamber.negative_slope):
            assert name == label or slope >= 0
    for left, right in zip(ray.chambers, ray.chambers[1:]):
        for name in set(left.support) - {label}:
            assert left.negative_poly(name)(left.hi) <= right.negative_poly(name)(right.lo)
