"""Catalog entry types: regions of a delta table, auxiliary blow-ups, printed data and errata.

A catalog entry pairs a ``SurfaceModel`` with the regions of its delta table. Each region names
the divisor used as extraction at its points (a curve, a movable curve through a general point,
or the exceptional curve of an auxiliary blow-up) and the witness giving the upper bound.
``CatalogEntry.plans`` expands regions into one ``Plan`` per stratum.
"""

import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property

from wdp_delta.delta import Extraction, Plan
from wdp_delta.errors import CatalogError, ModelFormatError, UnknownLabel
from wdp_delta.exact import combine, matrix, rat_str, to_rat, vector
from wdp_delta.picard import (
    StratumSpec,
    SurfaceModel,
    blowup,
    gram_of,
    lorentzian_anti_canonical,
    lorentzian_gram,
    model_from_dict,
    model_to_dict,
    pair,
    parse_class,
    strata_of,
    with_aliases,
)

logger = logging.getLogger(__name__)

OFF_CURVES = "off-curves"


@dataclass(frozen=True)
class DivisorRef:
    """Reference to a divisor of an entry.

    ``label`` is a generator of the surface, a movable curve of the entry, or (with ``aux``) a
    curve of the named auxiliary blow-up. ``exceptional`` selects the exceptional curve of
    ``aux`` itself.
    """

    label: str
    aux: str = None
    exceptional: bool = False

    @classmethod
    def blowup_exceptional(cls, aux):
        """The exceptional curve of the auxiliary model ``aux``."""
        return cls("ep", aux=aux, exceptional=True)

    @classmethod
    def on_aux(cls, aux, label):
        """A curve of the auxiliary model ``aux``."""
        return cls(label, aux=aux)


@dataclass(frozen=True)
class Override:
    """Evaluate the point where the region curve meets ``incident`` with another extraction."""

    incident: frozenset
    divisor: DivisorRef
    witness: DivisorRef


@dataclass(frozen=True)
class Region:
    """Points of one table row, reached through one divisor.

    For a curve region the points are the strata of the curve, minus those lying on an
    ``excluded`` curve. Movable and exceptional regions cover the general points of the surface.
    """

    row: str
    divisor: DivisorRef
    excluded: frozenset = frozenset()
    witness: DivisorRef = None
    overrides: tuple = ()

    @property
    def witness_ref(self):
        """The witness, defaulting to the region's own divisor."""
        return self.witness or self.divisor


@dataclass(frozen=True)
class AuxSpec:
    """Blow-up of the surface at one point, lying on the generators in ``incidence``.

    ``aliases`` renames the basis-expression labels the blow-up assigns; ``relations`` are
    linear equivalences ``expression == sigma*(-K)`` quoted for the blow-up.
    """

    name: str
    incidence: frozenset = frozenset()
    aliases: tuple = ()
    relations: tuple = ()


@dataclass(frozen=True)
class DeltaTable:
    """A printed delta table: ``rows`` are (row label, printed value); errata fix misprints."""

    rows: tuple
    errata: tuple = ()  # ((row label, printed, corrected), ...)

    @cached_property
    def values(self):
        """Row values with errata applied, as a dict in printed order."""
        values = {row: to_rat(value) for row, value in self.rows}
        for row, printed, corrected in self.errata:
            if values.get(row) != to_rat(printed):
                raise CatalogError(f"erratum for row {row} expects printed value {printed}")
            values[row] = to_rat(corrected)
        return values

    @property
    def global_delta(self):
        """Minimum of the corrected rows."""
        return min(self.values.values())

    def __iter__(self):
        return iter(self.values.items())


@dataclass(frozen=True)
class PrintedData:
    """Intersection matrix and -K tuple as printed, with entry errata ``(i, j, printed, corrected)``."""

    gram: tuple = None
    anti_canonical: tuple = None
    errata: tuple = ()

    @cached_property
    def corrected_gram(self):
        """Printed matrix with the errata applied."""
        if self.gram is None:
            return None
        rows = [list(row) for row in matrix(self.gram)]
        for i, j, printed, corrected in self.errata:
            if rows[i][j] != printed:
                raise CatalogError(f"erratum ({i},{j}) expects printed value {printed}, found {rows[i][j]}")
            rows[i][j] = Fraction(corrected)
        return tuple(tuple(row) for row in rows)


@dataclass(frozen=True)
class CatalogEntry:  # pylint: disable=too-many-instance-attributes
    """One surface of the catalog.

    Attributes:
        model (SurfaceModel): The surface.
        regions (tuple[Region]): Regions of the delta table.
        table (DeltaTable): The printed table.
        movable (tuple[tuple[str, str]]): Named movable curves ``(label, class expression)``.
        auxiliary (tuple[AuxSpec]): Auxiliary blow-ups.
        printed (PrintedData): Printed matrix and -K tuple.
        description (str): One-line description of the configuration.
    """

    model: object
    regions: tuple
    table: DeltaTable
    movable: tuple = ()
    auxiliary: tuple = ()
    printed: PrintedData = field(default_factory=PrintedData)
    description: str = ""

    @property
    def id(self):
        """Surface id."""
        return self.model.id

    @cached_property
    def aux_models(self):
        """Auxiliary blow-up models by name."""
        models = {}
        for spec in self.auxiliary:
            aux = blowup(self.model, spec.incidence, model_id=f"{self.model.id}+{spec.name}")
            models[spec.name] = with_aliases(aux, dict(spec.aliases))
        return models

    def aux_model(self, name):
        """The auxiliary model ``name``."""
        if name not in self.aux_models:
            raise UnknownLabel(name, f"{self.id} auxiliary models")
        return self.aux_models[name]

    def extraction(self, ref):
        """Resolve a DivisorRef into an Extraction."""
        if ref.aux is not None:
            aux = self.aux_model(ref.aux)
            return Extraction.exceptional(aux) if ref.exceptional else Extraction.on_blowup(aux, ref.label)
        movable = dict(self.movable)
        if ref.label in movable:
            return Extraction.curve(self.model, ref.label, expression=movable[ref.label])
        return Extraction.curve(self.model, ref.label)

    def _region_plans(self, region):
        extraction = self.extraction(region.divisor)
        witness = self.extraction(region.witness_ref)
        if region.divisor.aux is not None or region.divisor.label in dict(self.movable):
            stratum = StratumSpec.generic(extraction.label, label="general point")
            yield Plan(region.row, stratum, extraction, witness)
            return
        overrides = {override.incident: override for override in region.overrides}
        for spec in strata_of(self.model, region.divisor.label):
            if spec.incident & region.excluded:
                continue
            override = overrides.get(spec.incident)
            if override is None:
                yield Plan(region.row, spec, extraction, witness)
                continue
            other = override.divisor.label
            stratum = next(
                (s for s in strata_of(self.model, other) if s.incident == frozenset({region.divisor.label})),
                None,
            )
            if stratum is None:
                raise CatalogError(f"{self.id}: override on {spec.label} has no stratum on {other}")
            yield Plan(region.row, stratum, self.extraction(override.divisor), self.extraction(override.witness))

    @cached_property
    def plans(self):
        """One Plan per stratum of every region, in region order."""
        return tuple(plan for region in self.regions for plan in self._region_plans(region))

    def plans_for(self, label):
        """Plans whose row or stratum label is ``label``."""
        plans = tuple(plan for plan in self.plans if label in (plan.row, plan.stratum.label))
        if not plans:
            raise UnknownLabel(label, f"{self.id} strata")
        return plans

    # --------------------------------------------------------------------------
    # STRUCTURE CHECKS
    # --------------------------------------------------------------------------
    def computed_gram(self):
        """Gram matrix of the generators computed from their classes."""
        return gram_of(self.model, self.model.labels)

    def gram_differences(self):
        """Entries where the computed matrix and the corrected printed matrix differ."""
        printed = self.printed.corrected_gram
        if printed is None:
            return ()
        computed = self.computed_gram()
        if len(printed) != len(computed):
            return (("size", len(printed), len(computed)),)
        labels = self.model.labels
        return tuple(
            (f"({labels[i]},{labels[j]})", printed[i][j], computed[i][j])
            for i in range(len(computed))
            for j in range(len(computed))
            if printed[i][j] != computed[i][j]
        )

    def check_anti_canonical(self):
        """The printed -K tuple in the curve basis reproduces the model's -K."""
        if self.printed.anti_canonical is None:
            return
        expansion = combine(
            zip(vector(self.printed.anti_canonical), (cls for _, cls in self.model.generators)), self.model.rank
        )
        if expansion != self.model.anti_canonical:
            raise CatalogError(f"{self.id}: printed -K tuple expands to {expansion}")

    def check_relations(self):
        """Every quoted linear equivalence on an auxiliary model holds."""
        for spec in self.auxiliary:
            aux = self.aux_model(spec.name)
            anchor = Extraction.exceptional(aux).anchor
            for expression in spec.relations:
                if parse_class(aux, expression) != anchor:
                    raise CatalogError(f"{self.id}: relation {expression} != sigma*(-K) on {aux.id}")

    def _covers(self, curve, other):
        for region in self.regions:
            if region.divisor.aux is not None or region.divisor.label != curve:
                continue
            if other in region.excluded and not any(o.incident == {other} for o in region.overrides):
                continue
            yield region.row

    def check_partition(self):
        """Regions cover every negative curve, every meeting point and the general points.

        Meeting points covered from both curves must carry equal table values.
        """
        values = self.table.values
        for region in self.regions:
            if region.row not in values:
                raise CatalogError(f"{self.id}: region row {region.row} is not in the table")
        region_curves = {region.divisor.label for region in self.regions if region.divisor.aux is None}
        for label in self.model.negative_labels:
            if label not in region_curves:
                raise CatalogError(f"{self.id}: negative curve {label} has no region")
        negatives = self.model.negative_labels
        for i, first in enumerate(negatives):
            for second in negatives[i + 1 :]:
                if pair(self.model, self.model.class_of(first), self.model.class_of(second)) <= 0:
                    continue
                rows = list(self._covers(first, second)) + list(self._covers(second, first))
                if not rows:
                    raise CatalogError(f"{self.id}: point {first} ∩ {second} is not covered")
                if len({values[row] for row in rows}) > 1:
                    raise CatalogError(f"{self.id}: point {first} ∩ {second} has conflicting rows {rows}")
        general = any(
            region.divisor.aux is not None
            or region.divisor.label in dict(self.movable)
            or pair(self.model, self.model.class_of(region.divisor.label), self.model.class_of(region.divisor.label))
            >= 0
            for region in self.regions
        )
        if not general:
            raise CatalogError(f"{self.id}: no region covers the general points")

    def check(self):
        """Run every structural check; printed-matrix differences are only logged."""
        self.check_anti_canonical()
        self.check_relations()
        if self.table.rows:
            self.check_partition()
        for position, printed, computed in self.gram_differences():
            logger.warning(f"{self.id}: printed intersection {position} = {printed}, computed {computed}")
        for i, j, printed, corrected in self.printed.errata:
            logger.debug(f"{self.id}: matrix erratum ({i},{j}) {printed} -> {corrected}")
        for row, printed, corrected in self.table.errata:
            logger.debug(f"{self.id}: table erratum {row} {printed} -> {corrected}")
        return self


# ------------------------------------------------------------------------------
# JSON
# ------------------------------------------------------------------------------
def _ref_to_dict(ref):
    data = {"label": ref.label}
    if ref.aux is not None:
        data["aux"] = ref.aux
    if ref.exceptional:
        data["exceptional"] = True
    return data


def _ref_from_dict(data):
    return DivisorRef(data["label"], aux=data.get("aux"), exceptional=data.get("exceptional", False))


def entry_to_dict(entry):
    """Serialize an entry as a model document extended with its regions and table."""
    data = model_to_dict(entry.model)
    data["description"] = entry.description
    data["movable"] = dict(entry.movable)
    data["auxiliary"] = [
        {
            "name": spec.name,
            "incidence": sorted(spec.incidence),
            "aliases": dict(spec.aliases),
            "relations": list(spec.relations),
        }
        for spec in entry.auxiliary
    ]
    data["regions"] = [
        {
            "row": region.row,
            "divisor": _ref_to_dict(region.divisor),
            "excluded": sorted(region.excluded),
            "witness": _ref_to_dict(region.witness_ref),
            "overrides": [
                {
                    "incident": sorted(override.incident),
                    "divisor": _ref_to_dict(override.divisor),
                    "witness": _ref_to_dict(override.witness),
                }
                for override in region.overrides
            ],
        }
        for region in entry.regions
    ]
    data["expected"] = {row: rat_str(value) for row, value in entry.table.rows}
    data["expectedErrata"] = [[row, rat_str(p), rat_str(c)] for row, p, c in entry.table.errata]
    if entry.printed.gram is not None:
        data["printedGram"] = [[int(x) for x in row] for row in entry.printed.gram]
    if entry.printed.anti_canonical is not None:
        data["printedAntiCanonical"] = [rat_str(x) for x in entry.printed.anti_canonical]
    data["errata"] = [list(erratum) for erratum in entry.printed.errata]
    return data


def entry_from_dict(data):
    """Build an entry from ``entry_to_dict`` output (or a bare model document).

    A bare model document gets one region per negative curve, each its own witness, and a table
    with no rows; such entries can be decomposed but not verified.

    Raises:
        ModelFormatError: on malformed documents.
    """
    model = model_from_dict(data)
    try:
        regions = tuple(
            Region(
                row=region["row"],
                divisor=_ref_from_dict(region["divisor"]),
                excluded=frozenset(region.get("excluded", ())),
                witness=_ref_from_dict(region["witness"]) if "witness" in region else None,
                overrides=tuple(
                    Override(
                        frozenset(override["incident"]),
                        _ref_from_dict(override["divisor"]),
                        _ref_from_dict(override["witness"]),
                    )
                    for override in region.get("overrides", ())
                ),
            )
            for region in data.get("regions", ())
        )
        if not regions:
            regions = tuple(Region(label, DivisorRef(label)) for label in model.negative_labels)
        auxiliary = tuple(
            AuxSpec(
                name=spec["name"],
                incidence=frozenset(spec.get("incidence", ())),
                aliases=tuple(spec.get("aliases", {}).items()),
                relations=tuple(spec.get("relations", ())),
            )
            for spec in data.get("auxiliary", ())
        )
        table = DeltaTable(
            rows=tuple(data.get("expected", {}).items()),
            errata=tuple(tuple(erratum) for erratum in data.get("expectedErrata", ())),
        )
        printed = PrintedData(
            gram=tuple(tuple(row) for row in data["printedGram"]) if "printedGram" in data else None,
            anti_canonical=tuple(data["printedAntiCanonical"]) if "printedAntiCanonical" in data else None,
            errata=tuple(tuple(erratum) for erratum in data.get("errata", ())),
        )
    except (KeyError, TypeError, AttributeError, ValueError) as error:
        raise ModelFormatError(f"malformed entry document: {error!r}") from error
    return CatalogEntry(
        model=model,
        regions=regions,
        table=table,
        movable=tuple(data.get("movable", {}).items()),
        auxiliary=auxiliary,
        printed=printed,
        description=data.get("description", ""),
    )


# ------------------------------------------------------------------------------
# BUILDERS
# ------------------------------------------------------------------------------
def blown_up_plane(surface_id, points, curves, strata=()):
    """Model of a blow-up of the plane in the Lorentzian basis ``(h, *points)``.

    Args:
        surface_id (str): Id of the model.
        points (Iterable[str]): Labels of the exceptional basis classes, e.g. ``("e1", "e2")``.
        curves (Iterable[tuple[str, str]]): ``(label, class expression)`` per generator.
        strata (Iterable): Optional stratum overrides.
    """
    basis = ("h",) + tuple(points)
    bare = SurfaceModel(
        id=surface_id,
        basis=basis,
        gram=lorentzian_gram(len(basis)),
        generators=(),
        anti_canonical=lorentzian_anti_canonical(len(basis)),
    )
    generators = tuple((label, parse_class(bare, expression)) for label, expression in curves)
    return replace(bare, generators=generators, strata=tuple(strata))


def ruled_surface(surface_id, section_square, anti_canonical):
    """Hirzebruch surface in the basis ``(C0, Gamma)`` of the negative section and a fibre."""
    return SurfaceModel(
        id=surface_id,
        basis=("C0", "Gamma"),
        gram=((section_square, 1), (1, 0)),
        generators=(("C0", (1, 0)), ("Gamma", (0, 1))),
        anti_canonical=anti_canonical,
    )


def curve_region(row, label, excluded=(), witness=None, overrides=()):
    """Region along the curve ``label`` without the points on ``excluded`` curves."""
    return Region(
        row=row,
        divisor=DivisorRef(label),
        excluded=frozenset(excluded),
        witness=DivisorRef(witness) if isinstance(witness, str) else witness,
        overrides=tuple(overrides),
    )


def movable_region(label, row=OFF_CURVES):
    """General points, reached through the movable curve ``label``."""
    return Region(row=row, divisor=DivisorRef(label))


def blowup_region(aux="blowup", witness=None, row=OFF_CURVES):
    """General points, reached through the exceptional curve of the blow-up ``aux``."""
    return Region(row=row, divisor=DivisorRef.blowup_exceptional(aux), witness=witness)
