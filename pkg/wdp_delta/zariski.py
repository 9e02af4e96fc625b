"""Zariski decompositions at a point and along a ray ``A - uB``.

``decompose_at`` runs the greedy support algorithm: solve for the negative part on the current
support, add every generator the positive part meets negatively, repeat until the positive part
is nef. ``walk_ray`` cuts ``[0, tau]`` into chambers of constant support on which the positive
and negative parts are affine in u.
"""

import logging
from dataclasses import dataclass, replace
from fractions import Fraction

from wdp_delta.errors import IrrationalBreakpoint, NotPseudoEffective, UnboundedRay, ZariskiError
from wdp_delta.exact import combine, is_negative_definite, rat_str, solve_linear, sub, to_rat
from wdp_delta.picard import gram_of, pair
from wdp_delta.piecewise import Irrational, NoRoot, PiecewisePoly, Poly, smallest_root_in

logger = logging.getLogger(__name__)

MAX_CHAMBERS = 64


@dataclass(frozen=True)
class Decomposition:
    """``D = P + sum(N[C] * C)`` with ``P`` nef and the support negative definite."""

    positive: tuple
    negative: tuple  # ((label, coefficient), ...) in generator order, coefficients > 0

    @property
    def support(self):
        """Labels with a positive coefficient."""
        return tuple(label for label, _ in self.negative)

    def coefficient(self, label):
        """Coefficient of ``label`` in the negative part (zero off the support)."""
        return dict(self.negative).get(label, Fraction(0))


@dataclass(frozen=True)
class Chamber:
    """Interval ``[lo, hi]`` on which the support is fixed.

    ``P(u) = positive_constant + u * positive_slope`` and
    ``N_C(u) = negative_constant[C] + u * negative_slope[C]`` for C in the support.
    """

    lo: Fraction
    hi: Fraction
    support: tuple
    positive_constant: tuple
    positive_slope: tuple
    negative_constant: tuple
    negative_slope: tuple

    def positive_at(self, u):
        """P(u)."""
        u = to_rat(u)
        return tuple(c + u * s for c, s in zip(self.positive_constant, self.positive_slope))

    def negative_poly(self, label):
        """N_C(u) as a polynomial (zero when C is off the support)."""
        if label not in self.support:
            return Poly.zero()
        index = self.support.index(label)
        return Poly.of(self.negative_constant[index], self.negative_slope[index])

    def decomposition_at(self, u):
        """The Decomposition obtained by evaluating the affine maps at ``u``."""
        u = to_rat(u)
        negative = tuple(
            (label, c + u * s)
            for label, c, s in zip(self.support, self.negative_constant, self.negative_slope)
            if c + u * s != 0
        )
        return Decomposition(self.positive_at(u), negative)

    def pairing_poly(self, model, cls):
        """P(u).cls as a polynomial."""
        return Poly.of(pair(model, self.positive_constant, cls), pair(model, self.positive_slope, cls))

    def volume_poly(self, model):
        """P(u)^2 as a polynomial."""
        return Poly.of(
            pair(model, self.positive_constant, self.positive_constant),
            2 * pair(model, self.positive_constant, self.positive_slope),
            pair(model, self.positive_slope, self.positive_slope),
        )


@dataclass(frozen=True)
class RayDecomposition:
    """Chambers covering ``[0, tau]`` for the ray ``anchor - u * direction``."""

    anchor: tuple
    direction: tuple
    chambers: tuple
    tau: Fraction
    zero_volume_from: Fraction = None

    def chamber_at(self, u):
        """The first chamber containing ``u``."""
        u = to_rat(u)
        for chamber in self.chambers:
            if chamber.lo <= u <= chamber.hi:
                return chamber
        raise NotPseudoEffective(u, f"u={u} is outside [0, {self.tau}]")

    def decomposition_at(self, u):
        """Decomposition at ``u`` from the affine chamber data."""
        return self.chamber_at(u).decomposition_at(u)

    def _piecewise(self, pieces):
        breakpoints = (self.chambers[0].lo,) + tuple(chamber.hi for chamber in self.chambers)
        return PiecewisePoly(breakpoints, tuple(pieces))

    def volume(self, model):
        """u -> P(u)^2 over [0, tau]."""
        return self._piecewise(chamber.volume_poly(model) for chamber in self.chambers)

    def positive_pairing(self, model, cls):
        """u -> P(u).cls over [0, tau]."""
        return self._piecewise(chamber.pairing_poly(model, cls) for chamber in self.chambers)

    def negative_coefficient(self, label):
        """u -> N_label(u) over [0, tau]."""
        return self._piecewise(chamber.negative_poly(label) for chamber in self.chambers)


# ------------------------------------------------------------------------------
# DECOMPOSITION AT A POINT
# ------------------------------------------------------------------------------
def _ordered(model, labels):
    return tuple(label for label in model.labels if label in labels)


def decompose_at(model, divisor):
    """Zariski decomposition of ``divisor`` against the declared generators.

    Args:
        model (SurfaceModel): The surface.
        divisor (RatVector): Class to decompose.

    Returns:
        Decomposition: The unique decomposition.

    Raises:
        NotPseudoEffective: when a support Gram matrix stops being negative definite or a
            negative-part coefficient turns negative.
    """
    divisor = tuple(to_rat(c) for c in divisor)
    support = ()
    while True:
        if not is_negative_definite(gram_of(model, support)):
            raise NotPseudoEffective(divisor, f"support {list(support)} is not negative definite")
        coefficients = solve_linear(
            gram_of(model, support), tuple(pair(model, divisor, model.class_of(label)) for label in support)
        )
        positive = sub(
            divisor, combine(zip(coefficients, (model.class_of(label) for label in support)), model.rank)
        )
        offending = {
            label
            for label, cls in model.generators
            if label not in support and pair(model, positive, cls) < 0
        }
        if not offending:
            break
        support = _ordered(model, set(support) | offending)

    negative = []
    for label, coefficient in zip(support, coefficients):
        if coefficient < 0:
            raise NotPseudoEffective(divisor, f"negative coefficient {coefficient} on {label}")
        if coefficient > 0:
            negative.append((label, coefficient))
    return Decomposition(positive, tuple(negative))


# ------------------------------------------------------------------------------
# RAY WALK
# ------------------------------------------------------------------------------
def _solve_affine(model, support, anchor, direction):
    """Negative-part coefficients on ``support`` as (constant, slope) pairs for ``anchor - u * direction``."""
    gram = gram_of(model, support)
    classes = [model.class_of(label) for label in support]
    constant = solve_linear(gram, tuple(pair(model, anchor, cls) for cls in classes))
    slope = tuple(-x for x in solve_linear(gram, tuple(pair(model, direction, cls) for cls in classes)))
    return constant, slope


def _lex_sign(value, derivative):
    """Sign of ``value + eps * derivative`` for an infinitesimal eps > 0."""
    if value != 0:
        return 1 if value > 0 else -1
    return (derivative > 0) - (derivative < 0)


def _support_after(model, anchor, direction, lo):
    """Support of the decomposition at ``lo + eps``, or None when the ray is not pseudo-effective there.

    Same greedy algorithm as ``decompose_at``, run on first-order values ``a + eps * b``.
    """
    base = sub(anchor, tuple(lo * c for c in direction))
    support = ()
    while True:
        if not is_negative_definite(gram_of(model, support)):
            return None
        constant, slope = _solve_affine(model, support, base, direction)
        classes = [model.class_of(label) for label in support]
        positive = sub(base, combine(zip(constant, classes), model.rank))
        positive_slope = tuple(-d - s for d, s in zip(direction, combine(zip(slope, classes), model.rank)))
        offending = {
            label
            for label, cls in model.generators
            if label not in support
            and _lex_sign(pair(model, positive, cls), pair(model, positive_slope, cls)) < 0
        }
        if not offending:
            break
        support = _ordered(model, set(support) | offending)

    kept = []
    for label, value, derivative in zip(support, constant, slope):
        sign = _lex_sign(value, derivative)
        if sign < 0:
            return None
        if sign > 0:
            kept.append(label)
    return tuple(kept)


def _chamber(model, support, anchor, direction, lo):
    negative_constant, negative_slope = _solve_affine(model, support, anchor, direction)
    classes = [model.class_of(label) for label in support]
    positive_constant = sub(anchor, combine(zip(negative_constant, classes), model.rank))
    positive_slope = tuple(
        -d - s for d, s in zip(direction, combine(zip(negative_slope, classes), model.rank))
    )
    return Chamber(lo, lo, support, positive_constant, positive_slope, negative_constant, negative_slope)


def _root_bound(poly):
    """Cauchy bound on the absolute value of the roots."""
    lead = poly.coefficients[-1]
    return 1 + max((abs(c / lead) for c in poly.coefficients[:-1]), default=Fraction(0))


def _first_root_after(poly, lo, hi):
    """Smallest root of ``poly`` in ``(lo, hi]``; NoRoot or Irrational otherwise."""
    if poly.is_zero or poly.degree == 0:
        return NoRoot()
    root = smallest_root_in(poly, lo, hi)
    while root == lo:
        poly = poly.deflate(lo)
        if poly.degree <= 0:
            return NoRoot()
        root = smallest_root_in(poly, lo, hi)
    return root


def _next_event(model, chamber):
    """End of the chamber: the first zero of a decreasing validity function or of the volume."""
    lo = chamber.lo
    events = []
    for constant, slope in zip(chamber.negative_constant, chamber.negative_slope):
        if slope < 0:
            events.append(-constant / slope)
    for label, cls in model.generators:
        if label in chamber.support:
            continue
        validity = chamber.pairing_poly(model, cls)
        if validity.coefficient(1) < 0:
            events.append(-validity.coefficient(0) / validity.coefficient(1))
    limit = min(events) if events else None
    if limit is not None and limit <= lo:
        raise ZariskiError(f"degenerate chamber at u={lo}")

    volume = chamber.volume_poly(model)
    search_to = limit if limit is not None else (lo + _root_bound(volume) if not volume.is_zero else lo)
    vanishing = _first_root_after(volume, lo, search_to) if search_to > lo else NoRoot()
    if isinstance(vanishing, Irrational):
        raise IrrationalBreakpoint((vanishing.lo, vanishing.hi))
    if isinstance(vanishing, NoRoot):
        if limit is None:
            raise UnboundedRay(f"the ray stays pseudo-effective past u={lo}")
        return limit
    return min(vanishing, limit) if limit is not None else vanishing


def walk_ray(model, direction, anchor=None):
    """Walk the ray ``anchor - u * direction`` from u = 0 to the pseudo-effective threshold.

    After each breakpoint the support just to its right is resolved by the perturbed greedy
    algorithm; each chamber is then cross-checked with ``decompose_at`` at its midpoint.

    Args:
        model (SurfaceModel): The surface.
        direction (RatVector): The class B subtracted along the ray.
        anchor (RatVector): The class A at u = 0; defaults to -K of the model.

    Returns:
        RayDecomposition: Chambers covering [0, tau].

    Raises:
        IrrationalBreakpoint: when the threshold is irrational.
        UnboundedRay: when the ray never leaves the pseudo-effective cone.
        ZariskiError: on an inconsistent walk.
    """
    anchor = tuple(to_rat(c) for c in (model.anti_canonical if anchor is None else anchor))
    direction = tuple(to_rat(c) for c in direction)
    chambers = []
    zero_volume_from = None
    lo = Fraction(0)
    while True:
        support = _support_after(model, anchor, direction, lo)
        if support is None:
            break
        if len(chambers) >= MAX_CHAMBERS:
            raise ZariskiError(f"more than {MAX_CHAMBERS} chambers")
        if chambers and chambers[-1].volume_poly(model)(lo) == 0 and zero_volume_from is None:
            zero_volume_from = lo
            logger.warning(f"zero-volume pseudo-effective segment from u={lo}")
        chamber = _chamber(model, support, anchor, direction, lo)
        hi = _next_event(model, chamber)
        chamber = replace(chamber, hi=hi)
        probe = decompose_at(model, sub(anchor, tuple((lo + hi) / 2 * c for c in direction)))
        if set(probe.support) != set(support):
            raise ZariskiError(
                f"probe at u={(lo + hi) / 2} found support {list(probe.support)}, expected {list(support)}"
            )
        if chambers and chambers[-1].support == support:
            chamber = replace(chamber, lo=chambers[-1].lo)
            chambers[-1] = chamber
        else:
            chambers.append(chamber)
        logger.debug(f"chamber [{chamber.lo}, {chamber.hi}] support {list(support)}")
        lo = hi

    if not chambers:
        raise NotPseudoEffective(anchor, "the anchor is not pseudo-effective")
    tau = lo
    final = chambers[-1]
    if final.volume_poly(model)(tau) != 0:
        raise ZariskiError(f"the ray leaves the pseudo-effective cone at u={tau} with positive volume")
    logger.debug(f"walked {len(chambers)} chambers, tau={tau}")
    return RayDecomposition(anchor, direction, tuple(chambers), tau, zero_volume_from)


# ------------------------------------------------------------------------------
# JSON
# ------------------------------------------------------------------------------
def _rats(values):
    return [rat_str(value) for value in values]


def ray_to_dict(model, ray):
    """Ray walk as a JSON-ready dict with "num/den" rationals."""
    return {
        "surface": model.id,
        "anchor": _rats(ray.anchor),
        "direction": _rats(ray.direction),
        "tau": rat_str(ray.tau),
        "zeroVolumeFrom": None if ray.zero_volume_from is None else rat_str(ray.zero_volume_from),
        "chambers": [
            {
                "lo": rat_str(chamber.lo),
                "hi": rat_str(chamber.hi),
                "support": list(chamber.support),
                "positive": {
                    "constant": _rats(chamber.positive_constant),
                    "slope": _rats(chamber.positive_slope),
                },
                "negative": {
                    label: {"constant": rat_str(c), "slope": rat_str(s)}
                    for label, c, s in zip(chamber.support, chamber.negative_constant, chamber.negative_slope)
                },
                "volume": chamber.volume_poly(model).to_json(),
            }
            for chamber in ray.chambers
        ],
    }


def decomposition_to_dict(model, divisor, decomposition):
    """Point decomposition as a JSON-ready dict."""
    return {
        "surface": model.id,
        "divisor": _rats(divisor),
        "positive": _rats(decomposition.positive),
        "negative": {label: rat_str(c) for label, c in decomposition.negative},
        "volume": rat_str(pair(model, decomposition.positive, decomposition.positive)),
    }
