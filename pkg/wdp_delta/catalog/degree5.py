"""Weak del Pezzo surfaces of degree 5.

Each surface is the blow-up of the plane at four points, possibly infinitely near (a root
``ei-ej``) or with three of them collinear (the root ``h-ei-ej-ek``).
"""

from wdp_delta.catalog.entry import (
    AuxSpec,
    CatalogEntry,
    DeltaTable,
    DivisorRef,
    PrintedData,
    blowup_region,
    blown_up_plane,
    curve_region,
    movable_region,
)

POINTS = ("e1", "e2", "e3", "e4")


def dp5_1():
    """One (-2)-curve: three of the four points on a line."""
    model = blown_up_plane(
        "dp5-1",
        ("e0", "e1", "e2", "e3"),
        (
            ("E1", "e1"),
            ("E2", "e2"),
            ("E3", "e3"),
            ("E4", "h-e0-e1"),
            ("E5", "h-e0-e2"),
            ("E6", "h-e0-e3"),
            ("E7", "e0"),
            ("F", "h-e1-e2-e3"),
        ),
    )
    return CatalogEntry(
        model=model,
        description="A1, seven (-1)-curves",
        regions=(
            curve_region("F", "F"),
            curve_region("Ei\\F (i=1,2,3)", "E1", excluded=("F",)),
            curve_region("Ei\\F (i=1,2,3)", "E2", excluded=("F",)),
            curve_region("Ei\\F (i=1,2,3)", "E3", excluded=("F",)),
            curve_region("E(i+3)\\Ei (i=1,2,3)", "E4", excluded=("E1",)),
            curve_region("E(i+3)\\Ei (i=1,2,3)", "E5", excluded=("E2",)),
            curve_region("E(i+3)\\Ei (i=1,2,3)", "E6", excluded=("E3",)),
            curve_region("E7", "E7", excluded=("E4", "E5", "E6")),
            blowup_region(),
        ),
        table=DeltaTable(
            rows=(
                ("F", "15/17"),
                ("Ei\\F (i=1,2,3)", "1"),
                ("E(i+3)\\Ei (i=1,2,3)", "15/13"),
                ("E7", "15/13"),
                ("off-curves", "4/3"),
            )
        ),
        auxiliary=(
            AuxSpec(
                name="blowup",
                aliases=(("h-e0-ep", "G0"), ("h-e1-ep", "G1"), ("h-e2-ep", "G2"), ("h-e3-ep", "G3")),
                relations=("G0+G2+F+E2+2ep",),
            ),
        ),
        printed=PrintedData(
            gram=(
                (-1, 0, 0, 1, 0, 0, 0, 1),
                (0, -1, 0, 0, 1, 0, 0, 1),
                (0, 0, -1, 0, 0, 1, 0, 1),
                (1, 0, 0, -1, 0, 0, 1, 0),
                (0, 1, 0, 0, -1, 0, 1, 0),
                (0, 0, 1, 0, 0, -1, 1, 0),
                (0, 0, 0, 1, 1, 1, -1, 0),
                (1, 1, 1, 0, 0, 0, 0, -2),
            ),
            anti_canonical=(0, 0, 0, 1, 1, 1, 2, 0),
        ),
    )


def dp5_2():
    """Two disjoint (-2)-curves."""
    model = blown_up_plane(
        "dp5-2",
        POINTS,
        (
            ("E1", "e4"),
            ("E2", "e2"),
            ("E3", "h-e2-e3"),
            ("E4", "e3"),
            ("E5", "h-e1-e3"),
            ("F1", "h-e1-e2-e4"),
            ("F2", "e1-e4"),
        ),
    )
    return CatalogEntry(
        model=model,
        description="2A1, five (-1)-curves",
        regions=(
            curve_region("E1", "E1"),
            curve_region("F1\\E1, F2\\E1", "F1", excluded=("E1",)),
            curve_region("F1\\E1, F2\\E1", "F2", excluded=("E1",)),
            curve_region("E2\\F1, E5\\F2", "E2", excluded=("F1",)),
            curve_region("E2\\F1, E5\\F2", "E5", excluded=("F2",)),
            curve_region("E3\\E2, E4\\E5", "E3", excluded=("E2",)),
            curve_region("E3\\E2, E4\\E5", "E4", excluded=("E5", "E3")),
            blowup_region(),
        ),
        table=DeltaTable(
            rows=(
                ("E1", "15/19"),
                ("F1\\E1, F2\\E1", "15/17"),
                ("E2\\F1, E5\\F2", "1"),
                ("E3\\E2, E4\\E5", "15/13"),
                ("off-curves", "4/3"),
            )
        ),
        auxiliary=(AuxSpec(name="blowup", aliases=(("h-e1-ep", "G1"), ("h-e2-ep", "G2"), ("h-e3-ep", "G3"))),),
        printed=PrintedData(
            gram=(
                (-1, 0, 0, 0, 0, 1, 1),
                (0, -1, 1, 0, 0, 1, 0),
                (0, 1, -1, 1, 0, 0, 0),
                (0, 0, 1, -1, 1, 0, 0),
                (0, 0, 0, 1, -1, 0, 1),
                (1, 1, 0, 0, 0, -2, 0),
                (1, 0, 0, 0, 1, 0, -2),
            ),
            anti_canonical=(1, 1, 1, 1, 1, 1, 1),
        ),
    )


def dp5_3():
    """A chain of two (-2)-curves and a third disjoint one."""
    model = blown_up_plane(
        "dp5-3",
        POINTS,
        (
            ("E1", "e4"),
            ("E2", "h-e1-e4"),
            ("E3", "e3"),
            ("F1", "e1-e2"),
            ("F2", "e2-e3"),
            ("F3", "h-e1-e2-e3"),
        ),
    )
    return CatalogEntry(
        model=model,
        description="A2+A1, three (-1)-curves",
        regions=(
            curve_region("E1\\E2", "E1", excluded=("E2",)),
            curve_region("E2\\F1, F3\\E3", "E2", excluded=("F1",)),
            curve_region("E2\\F1, F3\\E3", "F3", excluded=("E3",)),
            curve_region("F1\\F2", "F1", excluded=("F2",)),
            curve_region("F2\\E3", "F2", excluded=("E3",)),
            curve_region("E3", "E3"),
            blowup_region(witness=DivisorRef.on_aux("blowup", "G2")),
        ),
        table=DeltaTable(
            rows=(
                ("E1\\E2", "15/13"),
                ("E2\\F1, F3\\E3", "15/17"),
                ("F1\\F2", "15/19"),
                ("F2\\E3", "5/7"),
                ("E3", "15/23"),
                ("off-curves", "30/23"),
            )
        ),
        auxiliary=(AuxSpec(name="blowup", aliases=(("h-e4-ep", "G1"), ("h-e1-ep", "G2"))),),
        printed=PrintedData(
            gram=(
                (-1, 1, 0, 0, 0, 0),
                (1, -1, 0, 1, 0, 0),
                (0, 0, -1, 0, 1, 1),
                (0, 1, 0, -2, 1, 0),
                (0, 0, 1, 1, -2, 0),
                (0, 0, 1, 0, 0, -2),
            ),
            anti_canonical=(2, 3, 0, 2, 1, 0),
        ),
    )


def dp5_4():
    """An A3 chain of (-2)-curves."""
    model = blown_up_plane(
        "dp5-4",
        POINTS,
        (
            ("E1", "h-e1-e2"),
            ("E2", "e2"),
            ("E3", "e3"),
            ("E4", "e4"),
            ("F1", "e1-e2"),
            ("F2", "h-e1-e3-e4"),
        ),
    )
    return CatalogEntry(
        model=model,
        description="A2, four (-1)-curves",
        regions=(
            curve_region("E1\\E2", "E1", excluded=("E2",)),
            curve_region("E2\\F1", "E2", excluded=("F1",)),
            curve_region("F1\\F2", "F1", excluded=("F2",)),
            curve_region("F2", "F2"),
            curve_region("Ei\\F2 (i=3,4)", "E3", excluded=("F2",)),
            curve_region("Ei\\F2 (i=3,4)", "E4", excluded=("F2",)),
            movable_region("L"),
        ),
        movable=(("L", "E1+E2"),),
        table=DeltaTable(
            rows=(
                ("E1\\E2", "15/13"),
                ("E2\\F1", "15/17"),
                ("F1\\F2", "15/19"),
                ("F2", "5/7"),
                ("Ei\\F2 (i=3,4)", "30/31"),
                ("off-curves", "30/23"),
            )
        ),
        printed=PrintedData(
            gram=(
                (-1, 1, 0, 0, 0, 0),
                (1, -1, 0, 0, 1, 0),
                (0, 0, -1, 0, 0, 1),
                (0, 0, 0, -1, 0, 1),
                (0, 1, 0, 0, -2, 1),
                (0, 0, 1, 1, 1, -2),
            ),
            anti_canonical=(2, 3, 0, 0, 2, 1),
        ),
    )


def dp5_5():
    """An A3 chain of (-2)-curves."""
    model = blown_up_plane(
        "dp5-5",
        POINTS,
        (
            ("E1", "e4"),
            ("E2", "e3"),
            ("F1", "h-e1-e2-e4"),
            ("F2", "e2-e3"),
            ("F3", "e1-e2"),
        ),
    )
    return CatalogEntry(
        model=model,
        description="A3, two (-1)-curves",
        regions=(
            curve_region("E1\\F1", "E1", excluded=("F1",)),
            curve_region("F1\\F2", "F1", excluded=("F2",)),
            curve_region("F2", "F2"),
            curve_region("F3\\F2", "F3", excluded=("F2",)),
            curve_region("E2\\F2", "E2", excluded=("F2",)),
            movable_region("L"),
        ),
        movable=(("L", "E1+E2+F1+F2"),),
        table=DeltaTable(
            rows=(
                ("E1\\F1", "15/16"),
                ("F1\\F2", "30/43"),
                ("F2", "5/9"),
                ("F3\\F2", "15/19"),
                ("E2\\F2", "10/13"),
                ("off-curves", "5/4"),
            ),
            errata=(("F3\\F2", "15/19", "10/13"), ("E2\\F2", "10/13", "15/19")),
        ),
        printed=PrintedData(
            gram=(
                (-1, 0, 1, 0, 0),
                (0, -1, 0, 1, 0),
                (1, 0, -2, 1, 0),
                (0, 1, 1, -2, 1),
                (0, 0, 0, 1, -2),
            ),
            anti_canonical=(2, 3, 3, 4, 2),
        ),
    )


def dp5_6():
    """An A4 chain of (-2)-curves."""
    model = blown_up_plane(
        "dp5-6",
        POINTS,
        (
            ("E1", "e4"),
            ("F1", "e1-e2"),
            ("F2", "e2-e3"),
            ("F3", "e3-e4"),
            ("F4", "h-e1-e2-e3"),
        ),
    )
    return CatalogEntry(
        model=model,
        description="A4, one (-1)-curve",
        regions=(
            curve_region("F1\\F2", "F1", excluded=("F2",)),
            curve_region("F2\\F3", "F2", excluded=("F3",)),
            curve_region("F3", "F3"),
            curve_region("F4\\F3", "F4", excluded=("F3",)),
            curve_region("E1\\F3", "E1", excluded=("F3",)),
            movable_region("L"),
        ),
        movable=(("L", "2E1+F2+2F3+F4"),),
        table=DeltaTable(
            rows=(
                ("F1\\F2", "3/4"),
                ("F2\\F3", "6/11"),
                ("F3", "3/7"),
                ("F4\\F3", "9/13"),
                ("E1\\F3", "3/5"),
                ("off-curves", "6/5"),
            )
        ),
        printed=PrintedData(
            gram=(
                (-1, 0, 0, 1, 0),
                (0, -2, 1, 0, 0),
                (0, 1, -2, 1, 0),
                (1, 0, 1, -2, 1),
                (0, 0, 0, 1, -2),
            ),
            anti_canonical=(5, 2, 4, 6, 3),
        ),
    )


def dp5_7():
    """The del Pezzo surface of degree 5: four general points, ten (-1)-curves."""
    model = blown_up_plane(
        "dp5-7",
        POINTS,
        (
            ("E1", "e1"),
            ("E2", "h-e1-e2"),
            ("E3", "e2"),
            ("E4", "h-e2-e3"),
            ("E5", "e3"),
            ("E6", "h-e3-e4"),
            ("E7", "e4"),
            ("E8", "h-e1-e4"),
            ("E9", "h-e1-e3"),
            ("E10", "h-e2-e4"),
        ),
    )
    return CatalogEntry(
        model=model,
        description="smooth, ten (-1)-curves",
        regions=tuple(curve_region("(-1)-curves", f"E{i}") for i in range(1, 11)) + (blowup_region(),),
        # The printed P(u)^2 = 21-18u+4u^2 does not vanish at tau = 5/2; S(ep) = 3/2 gives 2/(3/2).
        table=DeltaTable(
            rows=(("(-1)-curves", "15/13"), ("off-curves", "40/31")),
            errata=(("off-curves", "40/31", "4/3"),),
        ),
        auxiliary=(
            AuxSpec(
                name="blowup",
                aliases=(
                    ("2h-e1-e2-e3-e4-ep", "C"),
                    ("h-e1-ep", "L1"),
                    ("h-e2-ep", "L2"),
                    ("h-e3-ep", "L3"),
                    ("h-e4-ep", "L4"),
                ),
                relations=("3/2C+1/2E1+1/2E3+1/2E5+1/2E7+3/2ep",),
            ),
        ),
        printed=PrintedData(
            gram=(
                (-1, 1, 0, 0, 0, 0, 0, 1, 1, 0),
                (1, -1, 1, 0, 0, 1, 0, 0, 0, 0),
                (0, 1, -1, 1, 0, 0, 0, 0, 0, 1),
                (0, 0, 1, -1, 1, 0, 0, 1, 0, 0),
                (0, 1, 0, 1, -1, 1, 0, 0, 1, 0),
                (0, 1, 0, 0, 1, -1, 1, 0, 0, 0),
                (0, 0, 0, 0, 0, 1, -1, 1, 0, 0),
                (1, 0, 0, 1, 0, 0, 1, -1, 0, 1),
                (1, 0, 0, 0, 1, 0, 0, 0, -1, 1),
                (0, 0, 1, 0, 0, 0, 1, 0, 1, -1),
            ),
            errata=((4, 1, 1, 0), (6, 9, 0, 1), (7, 9, 1, 0)),
        ),
    )


SURFACES = {
    "dp5-1": dp5_1,
    "dp5-2": dp5_2,
    "dp5-3": dp5_3,
    "dp5-4": dp5_4,
    "dp5-5": dp5_5,
    "dp5-6": dp5_6,
    "dp5-7": dp5_7,
}
