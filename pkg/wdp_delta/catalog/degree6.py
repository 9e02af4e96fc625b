"""Weak del Pezzo surfaces of degree 6: blow-ups of the plane at three points."""

from wdp_delta.catalog.entry import (
    AuxSpec,
    CatalogEntry,
    DeltaTable,
    DivisorRef,
    Override,
    PrintedData,
    blowup_region,
    blown_up_plane,
    curve_region,
    movable_region,
)

POINTS = ("e1", "e2", "e3")
G_ALIASES = (("h-e1-ep", "G1"), ("h-e2-ep", "G2"), ("h-e3-ep", "G3"))


def dp6_1():
    """Three collinear points: one (-2)-curve meeting three (-1)-curves."""
    model = blown_up_plane(
        "dp6-1",
        POINTS,
        (("E1", "e1"), ("E2", "e2"), ("E3", "e3"), ("F", "h-e1-e2-e3")),
    )
    return CatalogEntry(
        model=model,
        description="A1, three (-1)-curves",
        regions=(
            curve_region("Ei\\F (i=1,2,3)", "E1", excluded=("F",)),
            curve_region("Ei\\F (i=1,2,3)", "E2", excluded=("F",)),
            curve_region("Ei\\F (i=1,2,3)", "E3", excluded=("F",)),
            curve_region("F", "F"),
            blowup_region(),
        ),
        table=DeltaTable(rows=(("Ei\\F (i=1,2,3)", "9/10"), ("F", "3/4"), ("off-curves", "6/5"))),
        auxiliary=(AuxSpec(name="blowup", aliases=G_ALIASES),),
        printed=PrintedData(
            gram=(
                (-1, 0, 0, 1),
                (0, -1, 1, 1),
                (0, 1, -1, 1),
                (1, 1, 1, -2),
            ),
            anti_canonical=(2, 2, 2, 3),
            errata=((1, 2, 1, 0), (2, 1, 1, 0)),
        ),
    )


def dp6_2():
    """One (-2)-curve meeting two (-1)-curves, each met by a further (-1)-curve."""
    model = blown_up_plane(
        "dp6-2",
        POINTS,
        (
            ("E1", "h-e1-e2"),
            ("E2", "e2"),
            ("E3", "h-e1-e3"),
            ("E4", "e3"),
            ("F", "e1-e2"),
        ),
    )
    return CatalogEntry(
        model=model,
        description="A1, four (-1)-curves",
        regions=(
            curve_region("E1\\E2, E4\\E3", "E1", excluded=("E2",)),
            curve_region("E1\\E2, E4\\E3", "E4", excluded=("E3",)),
            curve_region("E2, E3", "E2"),
            curve_region("E2, E3", "E3"),
            curve_region("F\\(E2 u E3)", "F", excluded=("E2", "E3")),
            movable_region("L"),
        ),
        movable=(("L", "E1+E2"),),
        table=DeltaTable(
            rows=(
                ("E1\\E2, E4\\E3", "9/10"),
                ("E2, E3", "9/11"),
                ("F\\(E2 u E3)", "9/11"),
                ("off-curves", "9/8"),
            ),
            # P(u)^2 on [1, 2] is (2-u)(4-u), not 5-2u, so S(E1) = 1.
            errata=(("E1\\E2, E4\\E3", "9/10", "1"),),
        ),
        printed=PrintedData(
            gram=(
                (-1, 1, 0, 0, 0),
                (1, -1, 0, 0, 1),
                (0, 0, -1, 1, 1),
                (0, 0, 1, -1, 0),
                (0, 1, 1, 0, -2),
            ),
            anti_canonical=(2, 3, 1, 0, 2),
        ),
    )


def dp6_3():
    """An A2 chain of (-2)-curves."""
    model = blown_up_plane(
        "dp6-3",
        POINTS,
        (("E1", "e2"), ("E2", "e3"), ("F1", "e1-e2"), ("F2", "h-e1-e2-e3")),
    )
    return CatalogEntry(
        model=model,
        description="A2, two (-1)-curves",
        regions=(
            curve_region("F1\\E1", "F1", excluded=("E1",)),
            curve_region("E1", "E1"),
            curve_region(
                "F2\\E1",
                "F2",
                excluded=("E1",),
                overrides=(Override(frozenset({"E2"}), DivisorRef("E2"), DivisorRef("F2")),),
            ),
            curve_region("E2\\F2", "E2", excluded=("F2",)),
            movable_region("L"),
        ),
        movable=(("L", "E1+E2+F2"),),
        table=DeltaTable(
            rows=(
                ("F1\\E1", "9/11"),
                ("E1", "9/14"),
                ("F2\\E1", "3/4"),
                ("E2\\F2", "9/10"),
                ("off-curves", "9/8"),
            )
        ),
        printed=PrintedData(
            gram=(
                (-1, 0, 1, 1),
                (0, -1, 0, 1),
                (1, 0, -2, 0),
                (1, 1, 0, -2),
            ),
            anti_canonical=(4, 2, 2, 3),
        ),
    )


def dp6_4():
    """An A2 chain of (-2)-curves, the other configuration."""
    model = blown_up_plane(
        "dp6-4",
        POINTS,
        (("E1", "e3"), ("E2", "h-e1-e2"), ("F1", "e1-e2"), ("F2", "e2-e3")),
    )
    return CatalogEntry(
        model=model,
        description="A2, two (-1)-curves",
        regions=(
            curve_region("F1\\F2", "F1", excluded=("F2",)),
            curve_region("F2", "F2"),
            curve_region("E1\\F2, E2\\F2", "E1", excluded=("F2",)),
            curve_region("E1\\F2, E2\\F2", "E2", excluded=("F2",)),
            movable_region("L"),
        ),
        movable=(("L", "E1+E2+F2"),),
        table=DeltaTable(
            rows=(
                ("F1\\F2", "3/4"),
                ("F2", "3/5"),
                ("E1\\F2, E2\\F2", "4/5"),
                ("off-curves", "1"),
            )
        ),
        printed=PrintedData(
            gram=(
                (-1, 0, 0, 1),
                (0, -1, 0, 1),
                (0, 0, -2, 1),
                (1, 1, 1, -2),
            ),
            anti_canonical=(3, 3, 2, 4),
        ),
    )


def dp6_5():
    """An A2+A1 configuration of (-2)-curves."""
    model = blown_up_plane(
        "dp6-5",
        POINTS,
        (("E", "e3"), ("F1", "e1-e2"), ("F2", "e2-e3"), ("F3", "h-e1-e2-e3")),
    )
    return CatalogEntry(
        model=model,
        description="A2+A1, one (-1)-curve",
        regions=(
            curve_region("F1\\F2", "F1", excluded=("F2",)),
            curve_region("F2\\E", "F2", excluded=("E",)),
            curve_region("E", "E"),
            curve_region("F3\\E", "F3", excluded=("E",)),
            movable_region("L"),
        ),
        movable=(("L", "2E+F2+F3"),),
        table=DeltaTable(
            rows=(
                ("F1\\F2", "3/4"),
                ("F2\\E", "3/5"),
                ("E", "1/2"),
                ("F3\\E", "3/4"),
                ("off-curves", "1"),
            )
        ),
        printed=PrintedData(
            gram=(
                (-1, 0, 1, 1),
                (0, -2, 1, 0),
                (1, 1, -2, 0),
                (1, 0, 0, -2),
            ),
            anti_canonical=(6, 2, 4, 3),
        ),
    )


def dp6_6():
    """The del Pezzo surface of degree 6: a hexagon of (-1)-curves."""
    model = blown_up_plane(
        "dp6-6",
        POINTS,
        (
            ("E1", "e1"),
            ("E2", "h-e1-e2"),
            ("E3", "e2"),
            ("E4", "h-e2-e3"),
            ("E5", "e3"),
            ("E6", "h-e1-e3"),
        ),
    )
    return CatalogEntry(
        model=model,
        description="smooth, six (-1)-curves",
        regions=tuple(curve_region("Ei (i=1..6)", f"E{i}") for i in range(1, 7)) + (blowup_region(),),
        table=DeltaTable(rows=(("Ei (i=1..6)", "1"), ("off-curves", "6/5"))),
        auxiliary=(AuxSpec(name="blowup", aliases=G_ALIASES),),
        printed=PrintedData(
            gram=(
                (-1, 1, 0, 0, 0, 1),
                (1, -1, 1, 0, 0, 0),
                (0, 1, -1, 1, 0, 0),
                (0, 0, 1, -1, 1, 0),
                (0, 0, 0, 1, -1, 1),
                (1, 0, 0, 0, 1, -1),
            ),
            anti_canonical=(2, 2, 1, 0, 0, 1),
        ),
    )


SURFACES = {
    "dp6-1": dp6_1,
    "dp6-2": dp6_2,
    "dp6-3": dp6_3,
    "dp6-4": dp6_4,
    "dp6-5": dp6_5,
    "dp6-6": dp6_6,
}
