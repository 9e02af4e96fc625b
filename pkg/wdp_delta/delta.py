"""S-invariants, adjunction lower bounds and local delta invariants.

An ``Extraction`` is a divisor over the surface together with the ray it defines: a curve on the
surface (log discrepancy 1, ray ``-K - uE``) or the exceptional curve of a point blow-up (log
discrepancy 2, ray ``sigma*(-K) - u e`` on the auxiliary model).
"""

import enum
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from wdp_delta.errors import NegativePartContainsExtraction, PlanMismatch
from wdp_delta.exact import rat_str, to_rat
from wdp_delta.picard import StratumSpec, pair, parse_class, strata_of
from wdp_delta.piecewise import Poly, integrate
from wdp_delta.zariski import walk_ray

logger = logging.getLogger(__name__)


class ExtractionKind(enum.Enum):
    """What the extracted divisor is; the value is its log discrepancy."""

    CURVE = 1
    EXCEPTIONAL = 2


@dataclass(frozen=True)
class Extraction:
    """A divisor over the surface and the ray ``anchor - u * divisor`` it is measured on.

    Attributes:
        kind (ExtractionKind): Curve on a model or exceptional curve of a blow-up.
        model (SurfaceModel): Model the ray lives on (the auxiliary blow-up for exceptionals).
        label (str): Name used in reports and in support checks.
        divisor (RatVector): Class of the divisor on ``model``.
        anchor (RatVector): The class at u = 0, -K or its pullback.
    """

    kind: ExtractionKind
    model: object = field(repr=False)
    label: str
    divisor: tuple
    anchor: tuple

    @property
    def log_discrepancy(self):
        """A(E): 1 for curves, 2 for the exceptional curve of an ordinary blow-up."""
        return Fraction(self.kind.value)

    @property
    def degree(self):
        """Self-intersection of the anchor, the volume normalisation."""
        return pair(self.model, self.anchor, self.anchor)

    @classmethod
    def curve(cls, model, label, expression=None, anchor=None):
        """A curve on ``model``: a generator label, or a named movable class given by ``expression``."""
        divisor = parse_class(model, expression) if expression else model.class_of(label)
        anchor = model.anti_canonical if anchor is None else anchor
        return cls(ExtractionKind.CURVE, model, label, tuple(divisor), tuple(anchor))

    @classmethod
    def exceptional(cls, aux):
        """The exceptional curve of ``aux``, measured from the pullback of -K."""
        e_class = aux.class_of(aux.exceptional)
        anchor = tuple(k + e for k, e in zip(aux.anti_canonical, e_class))
        return cls(ExtractionKind.EXCEPTIONAL, aux, aux.exceptional, e_class, anchor)

    @classmethod
    def on_blowup(cls, aux, label):
        """A curve of the auxiliary model ``aux``, measured from the pullback of -K."""
        e_class = aux.class_of(aux.exceptional)
        anchor = tuple(k + e for k, e in zip(aux.anti_canonical, e_class))
        return cls(ExtractionKind.CURVE, aux, label, aux.class_of(label), anchor)

    def describe(self):
        """Short human-readable name, e.g. ``F`` or ``ep@dp5-1+ep``."""
        if self.model.exceptional is None:
            return self.label
        return f"{self.label}@{self.model.id}"


@lru_cache(maxsize=512)
def ray_of(extraction):
    """The (cached) Zariski walk of the ray of ``extraction``."""
    return walk_ray(extraction.model, extraction.divisor, anchor=extraction.anchor)


def s_divisor(extraction):
    """S(E): the normalised integral of the volume over ``[0, tau]``.

    Examples:
        The curve F on the degree 5 surface with a (-2)-curve and seven (-1)-curves has
        S(F) = 17/15.
    """
    ray = ray_of(extraction)
    value = integrate(ray.volume(extraction.model), 0, ray.tau) / extraction.degree
    logger.debug(f"S({extraction.describe()}) = {value} (tau = {ray.tau})")
    return value


def s_filtration(extraction, stratum):
    """S(W; q) of the refined filtration on E at a point of the given stratum.

    The integrand is ``2 (P.E) ord_q(N|E) + (P.E)^2`` where ``ord_q(N|E)`` sums ``N_C(u) C.E``
    over the support curves C through q.

    Raises:
        NegativePartContainsExtraction: when E enters the negative part of its own ray.
    """
    model = extraction.model
    ray = ray_of(extraction)
    total = Fraction(0)
    for chamber in ray.chambers:
        if extraction.label in chamber.support:
            raise NegativePartContainsExtraction(extraction.label, chamber)
        restricted = chamber.pairing_poly(model, extraction.divisor)
        order = Poly.zero()
        for label in stratum.incident:
            if label in chamber.support:
                meeting = pair(model, model.class_of(label), extraction.divisor)
                order = order + chamber.negative_poly(label).scaled(meeting)
        integrand = restricted * order.scaled(2) + restricted * restricted
        total += integrand.integral(chamber.lo, chamber.hi)
    return total / extraction.degree


def lower_bound(extraction, s_e, s_w_values):
    """Adjunction lower bound ``min(A/S(E), min_q 1/S(W; q))``.

    For a curve through the point the minimum runs over the one stratum of the point; for the
    exceptional curve of a blow-up it runs over every stratum of that curve. Zero S-values carry
    no constraint.
    """
    bounds = [extraction.log_discrepancy / to_rat(s_e)] if s_e else []
    bounds.extend(1 / to_rat(s_w) for s_w in s_w_values if s_w)
    return min(bounds)


@dataclass(frozen=True)
class Plan:
    """How one stratum of a table row is evaluated.

    ``stratum`` is the kind of point on the extraction divisor, ``witness`` the divisor whose
    ``A/S`` gives the matching upper bound.
    """

    row: str
    stratum: StratumSpec
    extraction: Extraction
    witness: Extraction


@dataclass(frozen=True)
class StratumResult:
    """Evaluated bounds at one stratum; ``delta`` is the common value of both bounds."""

    row: str
    stratum: str
    extraction: str
    s_e: Fraction
    s_w: Fraction
    lower: Fraction
    upper: Fraction
    witness: str

    @property
    def delta(self):
        """Local delta invariant at points of the stratum."""
        return self.lower

    def to_dict(self):
        """JSON-ready record with "num/den" rationals."""
        return {
            "label": self.row,
            "stratum": self.stratum,
            "extraction": self.extraction,
            "witness": self.witness,
            "S_E": rat_str(self.s_e),
            "S_W": rat_str(self.s_w),
            "lower": rat_str(self.lower),
            "upper": rat_str(self.upper),
            "delta": rat_str(self.delta),
        }


@dataclass(frozen=True)
class DeltaReport:
    """All evaluated strata of one surface."""

    surface: str
    degree: Fraction
    strata: tuple

    @property
    def global_delta(self):
        """delta(S), the minimum over the strata."""
        return global_delta(self)

    def rows(self):
        """``(row, delta)`` pairs in first-seen order, each row at its minimal stratum value."""
        values = {}
        for result in self.strata:
            values[result.row] = min(values.get(result.row, result.delta), result.delta)
        return tuple(values.items())

    def to_dict(self):
        """JSON-ready report."""
        return {
            "surface": self.surface,
            "degree": rat_str(self.degree),
            "strata": [result.to_dict() for result in self.strata],
            "global_delta": rat_str(self.global_delta),
        }


def _s_w_for(plan):
    extraction = plan.extraction
    if extraction.kind is ExtractionKind.EXCEPTIONAL:
        values = [s_filtration(extraction, spec) for spec in strata_of(extraction.model, extraction.label)]
        for spec, value in zip(strata_of(extraction.model, extraction.label), values):
            logger.debug(f"S(W; {spec.label}) = {value}")
        return max(values)
    return s_filtration(extraction, plan.stratum)


def evaluate_stratum(plan):
    """Evaluate one plan and insist that the lower and upper bounds agree.

    Raises:
        PlanMismatch: carrying both bounds when they differ.
    """
    extraction = plan.extraction
    s_e = s_divisor(extraction)
    s_w = _s_w_for(plan)
    lower = lower_bound(extraction, s_e, [s_w])
    upper = plan.witness.log_discrepancy / s_divisor(plan.witness)
    if lower != upper:
        raise PlanMismatch(plan.row, plan.stratum.label, lower, upper)
    logger.debug(f"{plan.row} / {plan.stratum.label}: S(E)={s_e} S(W)={s_w} delta={lower}")
    return StratumResult(
        row=plan.row,
        stratum=plan.stratum.label,
        extraction=extraction.describe(),
        s_e=s_e,
        s_w=s_w,
        lower=lower,
        upper=upper,
        witness=plan.witness.describe(),
    )


def global_delta(report):
    """Minimum of the stratum deltas of ``report``."""
    return min(result.delta for result in report.strata)


def evaluate_plans(surface, degree, plans):
    """Evaluate every plan of a surface into a DeltaReport."""
    results = tuple(evaluate_stratum(plan) for plan in plans)
    report = DeltaReport(surface, to_rat(degree), results)
    logger.info(f"{surface}: {len(results)} strata, delta = {report.global_delta}")
    return report
