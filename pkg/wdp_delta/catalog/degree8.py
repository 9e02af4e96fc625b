"""Weak del Pezzo surfaces of degree 8: the Hirzebruch surfaces of index 0, 1 and 2."""

from wdp_delta.catalog.entry import (
    CatalogEntry,
    DeltaTable,
    DivisorRef,
    Override,
    PrintedData,
    curve_region,
    ruled_surface,
)


def through_fibre():
    """The point where the section meets the fibre, evaluated along the fibre."""
    return (Override(frozenset({"Gamma"}), DivisorRef("Gamma"), DivisorRef("Gamma")),)


def sigma2():
    """Index 2: the section C0 is a (-2)-curve."""
    return CatalogEntry(
        model=ruled_surface("dp8-sigma2", -2, (2, 4)),
        description="A1, ruled",
        regions=(
            curve_region("S", "C0", overrides=through_fibre()),
            curve_region("S", "Gamma", excluded=("C0",)),
        ),
        table=DeltaTable(rows=(("S", "3/4"),)),
        printed=PrintedData(gram=((-2, 1), (1, 0)), anti_canonical=(2, 4)),
    )


def sigma1():
    """Index 1: the plane blown up at one point."""
    return CatalogEntry(
        model=ruled_surface("dp8-sigma1", -1, (2, 3)),
        description="smooth, ruled",
        regions=(
            curve_region("C0", "C0"),
            curve_region("S\\C0", "Gamma", excluded=("C0",)),
        ),
        table=DeltaTable(rows=(("C0", "6/7"), ("S\\C0", "12/13"))),
        printed=PrintedData(gram=((-1, 1), (1, 0)), anti_canonical=(2, 3)),
    )


def sigma0():
    """Index 0: the product of two lines."""
    return CatalogEntry(
        model=ruled_surface("dp8-sigma0", 0, (2, 2)),
        description="smooth, two rulings",
        regions=(curve_region("S", "C0", overrides=through_fibre()),),
        table=DeltaTable(rows=(("S", "1"),)),
        printed=PrintedData(gram=((0, 1), (1, 0)), anti_canonical=(2, 2)),
    )


SURFACES = {"dp8-sigma0": sigma0, "dp8-sigma1": sigma1, "dp8-sigma2": sigma2}
