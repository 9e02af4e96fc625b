"""Tests for lattice models, class expressions, negative curves and blow-ups."""

import random
from fractions import Fraction

import pytest

from wdp_delta.catalog import get_surface, list_surfaces
from wdp_delta.errors import ClassParseError, DimensionMismatch, InvalidRoot, ModelFormatError, UnknownLabel
from wdp_delta.picard import (
    SurfaceModel,
    blowup,
    class_label,
    enumerate_negative_curves,
    is_big_nef,
    is_nef,
    model_from_dict,
    model_to_dict,
    pair,
    parse_class,
    pullback,
    strata_of,
)

from .conftest import rats


def test_pairings_on_first_quintic(dp5_1):
    model = dp5_1.model
    assert pair(model, model.anti_canonical, model.anti_canonical) == 5
    assert pair(model, model.class_of("F"), model.class_of("F")) == -2
    assert pair(model, model.class_of("h"), model.class_of("e1")) == 0


def test_pair_dimension_mismatch(dp5_1):
    with pytest.raises(DimensionMismatch):
        pair(dp5_1.model, rats(1, 0), dp5_1.model.anti_canonical)


@pytest.mark.parametrize("surface_id", list_surfaces())
def test_anti_canonical_is_big_and_nef(surface_id):
    model = get_surface(surface_id).model
    assert is_big_nef(model, model.anti_canonical)


def test_negative_curve_is_not_nef(dp5_1):
    assert not is_nef(dp5_1.model, dp5_1.model.class_of("F"))


def test_sigma2_nef_after_removing_section():
    model = get_surface("dp8-sigma2").model
    assert is_nef(model, rats(1, 4))


def test_strata_of_f(dp5_1):
    labels = [spec.label for spec in strata_of(dp5_1.model, "F")]
    assert labels == ["F ∩ E1", "F ∩ E2", "F ∩ E3", "F generic"]


def test_strata_of_isolated_curve():
    model = SurfaceModel(
        id="two-points",
        basis=("h", "e1", "e2"),
        gram=((1, 0, 0), (0, -1, 0), (0, 0, -1)),
        generators=(("E1", (0, 1, 0)),),
        anti_canonical=(3, -1, -1),
    )
    (stratum,) = strata_of(model, "E1")
    assert stratum.is_generic


@pytest.mark.parametrize(
    "text, expected",
    [
        ("F", (1, 0, -1, -1, -1)),
        ("h-e0-e1", (1, -1, -1, 0, 0)),
        ("2E1+F", (1, 0, 1, -1, -1)),
        ("1/2*E7", (0, "1/2", 0, 0, 0)),
        ("(1,0,-1,-1,-1)", (1, 0, -1, -1, -1)),
        (" h - e0 ", (1, -1, 0, 0, 0)),
    ],
)
def test_parse_class(dp5_1, text, expected):
    # Basis (h, e0, e1, e2, e3); F = h-e1-e2-e3, E1 = e1, E7 = e0.
    assert parse_class(dp5_1.model, text) == tuple(Fraction(value) for value in expected)


@pytest.mark.parametrize("text, error", [("", ClassParseError), ("F+*", ClassParseError), ("G9", UnknownLabel)])
def test_parse_class_errors(dp5_1, text, error):
    with pytest.raises(error):
        parse_class(dp5_1.model, text)


def test_parse_class_tuple_of_wrong_length(dp5_1):
    with pytest.raises(DimensionMismatch):
        parse_class(dp5_1.model, "(1,0)")


def test_class_label():
    basis = ("h", "e1", "ep")
    assert class_label(basis, rats(1, -1, -1)) == "h-e1-ep"
    assert class_label(basis, rats(2, 0, "-1/2")) == "2h-1/2*ep"
    assert class_label(basis, rats(0, 0, 0)) == "0"


def test_ten_lines_on_quintic_del_pezzo():
    curves = enumerate_negative_curves(5, ())
    assert len(curves) == 10
    assert {curve[0] for curve in curves} == {0, 1}


def test_chain_on_two_point_blowup():
    assert set(enumerate_negative_curves(3, ())) == {rats(0, 1, 0), rats(0, 0, 1), rats(1, -1, -1)}


def test_collinear_points_reproduce_first_quintic(dp5_1):
    model = dp5_1.model
    curves = enumerate_negative_curves(model.rank, [model.class_of("F")])
    assert len(curves) == 8
    assert set(curves) == {cls for _, cls in model.generators}


def test_invalid_root():
    with pytest.raises(InvalidRoot):
        enumerate_negative_curves(3, [rats(0, 1, 0)])


def test_blowup_of_general_point(dp5_1):
    aux = blowup(dp5_1.model, model_id="aux")
    assert aux.rank == 6
    assert aux.degree == 4
    assert aux.exceptional == "ep"
    assert aux.class_of("F") == pullback(aux, dp5_1.model.class_of("F"))
    assert "h-e0-ep" in aux.labels


def test_blowup_on_a_curve(dp5_1):
    aux = blowup(dp5_1.model, {"E1"})
    transform = aux.class_of("E1")
    assert pair(aux, transform, transform) == -2
    assert pair(aux, transform, aux.class_of("ep")) == 1


def test_blowup_on_a_root_is_not_weak_del_pezzo(dp5_1):
    with pytest.raises(ModelFormatError):
        blowup(dp5_1.model, {"F"})


def test_blowup_unknown_label(dp5_1):
    with pytest.raises(UnknownLabel):
        blowup(dp5_1.model, {"nope"})


def test_model_round_trip(dp5_1):
    data = model_to_dict(dp5_1.model)
    assert data["degree"] == "5/1"
    assert model_from_dict(data) == dp5_1.model


def test_model_round_trip_keeps_exceptional(dp5_1):
    aux = blowup(dp5_1.model)
    assert model_from_dict(model_to_dict(aux)).exceptional == "ep"


def test_model_degree_must_match(dp5_1):
    data = model_to_dict(dp5_1.model)
    data["degree"] = "6/1"
    with pytest.raises(ModelFormatError):
        model_from_dict(data)


def test_model_rejects_non_nef_anti_canonical():
    with pytest.raises(ModelFormatError):
        SurfaceModel(
            id="bad",
            basis=("h", "e1"),
            gram=((1, 0), (0, -1)),
            generators=(("C", (0, -1)),),
            anti_canonical=(3, -1),
        )


def random_class(rng, rank):
    return tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(rank))


@pytest.mark.parametrize("surface_id", list_surfaces())
def test_pair_is_symmetric_and_bilinear(surface_id):
    model = get_surface(surface_id).model
    rng = random.Random(surface_id)
    for _ in range(20):
        x, y, z = (random_class(rng, model.rank) for _ in range(3))
        a = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        assert pair(model, x, y) == pair(model, y, x)
        combined = tuple(a * xi + zi for xi, zi in zip(x, z))
        assert pair(model, combined, y) == a * pair(model, x, y) + pair(model, z, y)


@pytest.mark.parametrize("surface_id", ["dp5-1", "dp5-7", "dp6-2", "dp7-2"])
def test_blowup_lowers_squares(surface_id):
    model = get_surface(surface_id).model
    aux = blowup(model)
    assert aux.degree == model.degree - 1
    e_class = aux.class_of(aux.exceptional)
    rng = random.Random(surface_id)
    for _ in range(20):
        cls = tuple(Fraction(rng.randint(-4, 4)) for _ in range(model.rank))
        multiplicity = rng.randint(0, 3)
        transform = tuple(c - multiplicity * e for c, e in zip(pullback(aux, cls), e_class))
        assert pair(aux, transform, transform) == pair(model, cls, cls) - multiplicity**2
