"""Weak del Pezzo surfaces of degree 7: blow-ups of the plane at two points."""

from wdp_delta.catalog.entry import (
    CatalogEntry,
    DeltaTable,
    PrintedData,
    blown_up_plane,
    curve_region,
    movable_region,
)

POINTS = ("e1", "e2")


def dp7_1():
    """The second point infinitely near the first: one (-2)-curve."""
    model = blown_up_plane("dp7-1", POINTS, (("E1", "h-e1-e2"), ("E2", "e2"), ("F", "e1-e2")))
    return CatalogEntry(
        model=model,
        description="A1, two (-1)-curves",
        regions=(
            curve_region("E1\\E2", "E1", excluded=("E2",)),
            curve_region("E2", "E2"),
            curve_region("F\\E2", "F", excluded=("E2",)),
            movable_region("L"),
        ),
        movable=(("L", "E1+E2"),),
        table=DeltaTable(rows=(("E1\\E2", "21/25"), ("E2", "21/31"), ("F\\E2", "7/9"), ("off-curves", "21/23"))),
        printed=PrintedData(
            gram=((-1, 1, 0), (1, -2, 1), (0, 1, -2)),
            anti_canonical=(3, 4, 2),
            errata=((1, 1, -2, -1),),
        ),
    )


def dp7_2():
    """The del Pezzo surface of degree 7: a chain of three (-1)-curves."""
    model = blown_up_plane("dp7-2", POINTS, (("E1", "e1"), ("E2", "h-e1-e2"), ("E3", "e2")))
    return CatalogEntry(
        model=model,
        description="smooth, three (-1)-curves",
        regions=(
            curve_region("E1\\E2", "E1", excluded=("E2",)),
            curve_region("E1\\E2", "E3", excluded=("E2",)),
            curve_region("E2", "E2"),
            movable_region("L"),
        ),
        movable=(("L", "E2+E3"),),
        # P(u)^2 on [0, 1] is 7-4u, continuous with (3-u)^2-1 at u = 1, so S(L) = 19/21.
        table=DeltaTable(
            rows=(("E1\\E2", "21/23"), ("E2", "21/25"), ("off-curves", "21/22")),
            errata=(("off-curves", "21/22", "21/19"),),
        ),
        printed=PrintedData(gram=((-1, 1, 0), (1, -1, 1), (0, 1, -1)), anti_canonical=(2, 3, 2)),
    )


SURFACES = {"dp7-1": dp7_1, "dp7-2": dp7_2}
