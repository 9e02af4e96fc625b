"""Picard-lattice surface models.

A ``SurfaceModel`` is a basis, an integer Gram matrix, the declared generators of the
effective cone, and the anti-canonical class. Classes are coefficient tuples over the basis.
Surfaces obtained by blowing up the plane use the Lorentzian basis ``(h; e1, ..., ek)`` with
Gram matrix ``diag(1, -1, ..., -1)``; their curve classes are written in that basis and the
intersection numbers follow from it.
"""

import logging
import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property

from wdp_delta.errors import (
    ClassParseError,
    DimensionMismatch,
    InvalidRoot,
    ModelFormatError,
    UnknownLabel,
)
from wdp_delta.exact import bilinear, is_symmetric, matrix, rat_str, sub, to_rat, vector

logger = logging.getLogger(__name__)

MODEL_FORMAT_VERSION = 1


@dataclass(frozen=True)
class StratumSpec:
    """A kind of point on a curve: the generators through it besides the curve itself.

    An empty ``incident`` set is the generic point of ``curve``.
    """

    curve: str
    incident: frozenset
    label: str

    @property
    def is_generic(self):
        """True for the generic point of the curve."""
        return not self.incident

    @classmethod
    def generic(cls, curve, label=None):
        """The generic stratum of ``curve``."""
        return cls(curve, frozenset(), label or f"{curve} generic")

    @classmethod
    def meeting(cls, curve, *others):
        """The point of ``curve`` where it meets all of ``others``."""
        return cls(curve, frozenset(others), " ∩ ".join((curve,) + others))


@dataclass(frozen=True)
class SurfaceModel:  # pylint: disable=too-many-instance-attributes
    """A weak del Pezzo surface (or an auxiliary blow-up of one) as lattice data.

    Attributes:
        id (str): Catalog id or user-chosen name.
        basis (tuple[str]): Basis labels.
        gram (RatMatrix): Symmetric integer intersection matrix of the basis.
        generators (tuple[tuple[str, RatVector]]): Declared effective-cone generators, in order.
        anti_canonical (RatVector): The class of -K.
        strata (tuple[tuple[str, tuple[StratumSpec]]]): Per-curve stratum overrides.
        exceptional (str | None): Exceptional basis label when the model is a point blow-up.
    """

    id: str
    basis: tuple
    gram: tuple
    generators: tuple
    anti_canonical: tuple
    strata: tuple = field(default=())
    exceptional: str = None

    def __post_init__(self):
        rank = len(self.basis)
        object.__setattr__(self, "basis", tuple(self.basis))
        object.__setattr__(self, "gram", matrix(self.gram))
        object.__setattr__(self, "anti_canonical", self._coerce(self.anti_canonical))
        object.__setattr__(self, "generators", tuple((label, self._coerce(cls)) for label, cls in self.generators))
        object.__setattr__(self, "strata", tuple((curve, tuple(specs)) for curve, specs in self.strata))
        if len(set(self.basis)) != rank:
            raise ModelFormatError(f"{self.id}: duplicate basis labels")
        if len(self.gram) != rank or not is_symmetric(self.gram):
            raise ModelFormatError(f"{self.id}: gram must be a symmetric {rank}x{rank} matrix")
        if any(entry.denominator != 1 for row in self.gram for entry in row):
            raise ModelFormatError(f"{self.id}: gram entries must be integers")
        if len(set(self.labels)) != len(self.labels):
            raise ModelFormatError(f"{self.id}: duplicate generator labels")
        self._validate_weak_del_pezzo()
        self._validate_strata()

    def _coerce(self, cls):
        cls = vector(cls)
        if len(cls) != len(self.basis):
            raise DimensionMismatch(len(self.basis), len(cls))
        return cls

    def _validate_weak_del_pezzo(self):
        if self.degree <= 0:
            raise ModelFormatError(f"{self.id}: (-K)^2 = {self.degree} is not positive")
        for label, cls in self.generators:
            k_pairing = pair(self, self.anti_canonical, cls)
            if k_pairing < 0:
                raise ModelFormatError(f"{self.id}: -K is not nef, -K.{label} = {k_pairing}")
            if pair(self, cls, cls) < 0 and k_pairing not in (0, 1):
                raise ModelFormatError(f"{self.id}: negative curve {label} has -K.{label} = {k_pairing}")

    def _validate_strata(self):
        for curve, specs in self.strata:
            curve_class = self.class_of(curve)
            seen = set()
            for spec in specs:
                if spec.incident in seen:
                    raise ModelFormatError(f"{self.id}: repeated stratum {set(spec.incident)} on {curve}")
                seen.add(spec.incident)
                for other in spec.incident:
                    if pair(self, curve_class, self.class_of(other)) <= 0:
                        raise ModelFormatError(f"{self.id}: {other} does not meet {curve}")

    @property
    def rank(self):
        """Rank of the lattice."""
        return len(self.basis)

    @cached_property
    def degree(self):
        """Anti-canonical degree (-K)^2."""
        return pair(self, self.anti_canonical, self.anti_canonical)

    @cached_property
    def labels(self):
        """Generator labels in declaration order."""
        return tuple(label for label, _ in self.generators)

    @cached_property
    def _generator_index(self):
        return dict(self.generators)

    @cached_property
    def negative_labels(self):
        """Generators of negative self-intersection."""
        return tuple(label for label, cls in self.generators if pair(self, cls, cls) < 0)

    @cached_property
    def is_lorentzian(self):
        """True when the Gram matrix is diag(1, -1, ..., -1)."""
        return self.gram == lorentzian_gram(self.rank)

    def class_of(self, label):
        """Class of a generator label, or the unit vector of a basis label."""
        if label in self._generator_index:
            return self._generator_index[label]
        if label in self.basis:
            index = self.basis.index(label)
            return tuple(Fraction(int(i == index)) for i in range(self.rank))
        raise UnknownLabel(label, self.id)

    def has_label(self, label):
        """True if ``label`` names a generator or a basis vector."""
        return label in self._generator_index or label in self.basis

    def strata_overrides(self, curve):
        """Stratum overrides declared for ``curve``, or None."""
        for name, specs in self.strata:
            if name == curve:
                return specs
        return None

    def label_of(self, cls):
        """Generator label of a class, falling back to a basis expression."""
        for label, generator in self.generators:
            if generator == cls:
                return label
        return class_label(self.basis, cls)


def lorentzian_gram(rank):
    """Gram matrix diag(1, -1, ..., -1) of the blown-up plane."""
    return tuple(
        tuple(Fraction(0 if i != j else (1 if i == 0 else -1)) for j in range(rank)) for i in range(rank)
    )


def lorentzian_anti_canonical(rank):
    """-K = 3h - e1 - ... - ek in the Lorentzian basis."""
    return (Fraction(3),) + (Fraction(-1),) * (rank - 1)


def pair(model, left, right):
    """Intersection number of two classes.

    Raises:
        DimensionMismatch: when a class does not match the rank of ``model``.
    """
    if len(left) != model.rank:
        raise DimensionMismatch(model.rank, len(left))
    if len(right) != model.rank:
        raise DimensionMismatch(model.rank, len(right))
    return bilinear(left, model.gram, right)


def gram_of(model, labels):
    """Intersection matrix of the named classes, in the given order."""
    classes = [model.class_of(label) for label in labels]
    return tuple(tuple(pair(model, a, b) for b in classes) for a in classes)


def is_nef(model, divisor):
    """True iff ``divisor`` meets every declared generator nonnegatively."""
    return all(pair(model, divisor, cls) >= 0 for _, cls in model.generators)


def is_big_nef(model, divisor):
    """True iff ``divisor`` is nef with positive self-intersection (nef and big)."""
    return is_nef(model, divisor) and pair(model, divisor, divisor) > 0


def strata_of(model, curve):
    """Point strata of a generator.

    One stratum per generator meeting ``curve`` positively, then the generic stratum. A model
    may override the list for a curve (for instance to merge points of a moving pencil).
    """
    overrides = model.strata_overrides(curve)
    if overrides is not None:
        return overrides
    curve_class = model.class_of(curve)
    specs = [
        StratumSpec.meeting(curve, label)
        for label, cls in model.generators
        if label != curve and pair(model, curve_class, cls) > 0
    ]
    specs.append(StratumSpec.generic(curve))
    return tuple(specs)


# ------------------------------------------------------------------------------
# CLASS EXPRESSIONS
# ------------------------------------------------------------------------------
_TERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?\*?([A-Za-z][A-Za-z0-9_']*)")


def class_label(basis, cls):
    """Render a class as a basis expression such as ``h-e1-ep`` or ``2h-e1-e2``."""
    text = ""
    for name, coefficient in zip(basis, cls):
        if coefficient == 0:
            continue
        magnitude = abs(coefficient)
        if magnitude == 1:
            body = name
        elif magnitude.denominator == 1:
            body = f"{magnitude}{name}"
        else:
            body = f"{magnitude}*{name}"
        sign = "-" if coefficient < 0 else ("+" if text else "")
        text += f"{sign}{body}"
    return text or "0"


def parse_class(model, text):
    """Parse a class given as a label, a label expression or a coefficient tuple.

    Args:
        model (SurfaceModel): Model whose labels and basis resolve names.
        text (str): ``F``, ``h-e1-e2``, ``2E1+F2``, ``1/2*C0`` or ``(1,0,-1,-1,-1)``.

    Raises:
        ClassParseError: on malformed input.
        UnknownLabel: on names that are neither generators nor basis labels.
        DimensionMismatch: on tuples of the wrong length.
    """
    compact = "".join(text.split())
    if not compact:
        raise ClassParseError("empty class expression")
    if compact.startswith("(") or "," in compact or re.fullmatch(r"[+-]?\d+(/\d+)?", compact):
        try:
            coefficients = vector(part for part in compact.strip("()").split(",") if part)
        except ValueError as error:
            raise ClassParseError(f"cannot parse `{text}`: {error}") from error
        if len(coefficients) != model.rank:
            raise DimensionMismatch(model.rank, len(coefficients))
        return coefficients

    total = (Fraction(0),) * model.rank
    position = 0
    for match in _TERM.finditer(compact):
        if match.start() != position or (position and not match.group(1)):
            raise ClassParseError(f"cannot parse `{text}` at `{compact[position:]}`")
        sign, coefficient, name = match.groups()
        factor = to_rat(coefficient) if coefficient else Fraction(1)
        if sign == "-":
            factor = -factor
        total = tuple(t + factor * c for t, c in zip(total, model.class_of(name)))
        position = match.end()
    if position != len(compact):
        raise ClassParseError(f"cannot parse `{text}` at `{compact[position:]}`")
    return total


# ------------------------------------------------------------------------------
# NEGATIVE CURVES AND BLOW-UPS
# ------------------------------------------------------------------------------
def _minus_one_vectors(points, degree):
    """Yield multiplicity vectors b with sum(b) = 3d - 1 and sum(b^2) = d^2 + 1, 0 <= b_i <= d."""
    target_sum, target_squares = 3 * degree - 1, degree * degree + 1

    def extend(prefix, remaining_sum, remaining_squares):
        slots = points - len(prefix)
        if slots == 0:
            if remaining_sum == 0 and remaining_squares == 0:
                yield tuple(prefix)
            return
        for value in range(min(degree, remaining_sum), -1, -1):
            rest_sum, rest_squares = remaining_sum - value, remaining_squares - value * value
            rest_slots = slots - 1
            if rest_slots == 0:
                feasible = rest_sum == 0 and rest_squares == 0
            else:
                # b <= b^2 <= degree * b per slot, and Cauchy-Schwarz across the slots.
                feasible = (
                    rest_sum <= rest_squares <= degree * rest_sum
                    and rest_sum * rest_sum <= rest_squares * rest_slots
                )
            if feasible:
                yield from extend(prefix + [value], rest_sum, rest_squares)

    yield from extend([], target_sum, target_squares)


def _minus_one_classes(rank):
    """All (-1)-classes C with -K.C = 1 in the Lorentzian lattice of the given rank."""
    points = rank - 1
    if not 0 <= points <= 8:
        raise ValueError(f"(-1)-classes are only finite for up to 8 points, got {points}")
    classes = []
    for i in range(points):
        classes.append(tuple(Fraction(0) if j != i + 1 else Fraction(1) for j in range(rank)))
    degree = 1
    while (9 - points) * degree * degree - 6 * degree + 1 - points <= 0:
        for multiplicities in _minus_one_vectors(points, degree):
            classes.append((Fraction(degree),) + tuple(Fraction(-b) for b in multiplicities))
        degree += 1
    return classes


def enumerate_negative_curves(rank, roots):
    """Irreducible negative curves of a blown-up plane with the given effective (-2)-roots.

    A (-1)-class is kept when it meets every declared root nonnegatively; a class that splits
    off a chain of roots meets one of them negatively.

    Args:
        rank (int): Rank of the Lorentzian lattice (1 + number of points).
        roots (Iterable[RatVector]): Declared irreducible (-2)-curves.

    Returns:
        tuple[RatVector]: The roots followed by the surviving (-1)-classes.

    Raises:
        InvalidRoot: when a root is not a (-2)-class orthogonal to K.
        DimensionMismatch: when a root has the wrong length.
    """
    gram = lorentzian_gram(rank)
    anti_canonical = lorentzian_anti_canonical(rank)
    roots = tuple(vector(root) for root in roots)
    for root in roots:
        if len(root) != rank:
            raise DimensionMismatch(rank, len(root))
        square, k_pairing = bilinear(root, gram, root), -bilinear(root, gram, anti_canonical)
        if square != -2 or k_pairing != 0:
            raise InvalidRoot(root, square, k_pairing)
    curves = tuple(
        cls for cls in _minus_one_classes(rank) if all(bilinear(cls, gram, root) >= 0 for root in roots)
    )
    logger.debug(f"rank {rank}: {len(roots)} roots, {len(curves)} (-1)-curves")
    return roots + curves


def blowup(model, incidence=frozenset(), exceptional="ep", model_id=None):
    """Blow up ``model`` at one point lying on the generators in ``incidence``.

    Pulled-back classes keep their coordinates with a zero appended; the proper transform of a
    curve through the point is ``pullback - e``. On Lorentzian models the generator list is
    rebuilt by ``enumerate_negative_curves`` (old labels survive on their transforms, new classes
    get basis-expression labels); otherwise the transforms plus ``e`` are the generators.

    Args:
        model (SurfaceModel): Surface to blow up.
        incidence (Iterable[str]): Generators through the blown-up point.
        exceptional (str): Basis label of the exceptional curve.
        model_id (str): Id of the result (defaults to ``<id>+<exceptional>``).
    """
    incidence = frozenset(incidence)
    for label in incidence:
        if label not in model.labels:
            raise UnknownLabel(label, model.id)
    if exceptional in model.basis:
        raise ModelFormatError(f"{model.id}: basis label {exceptional} already in use")
    rank = model.rank + 1
    basis = model.basis + (exceptional,)
    gram = tuple(row + (Fraction(0),) for row in model.gram) + (
        (Fraction(0),) * model.rank + (Fraction(-1),),
    )
    e_class = (Fraction(0),) * model.rank + (Fraction(1),)

    transforms = []
    for label, cls in model.generators:
        pulled = cls + (Fraction(0),)
        transforms.append((label, sub(pulled, e_class) if label in incidence else pulled))
    generators = list(transforms)
    known = {cls for _, cls in transforms}
    if model.is_lorentzian:
        roots = [cls for _, cls in transforms if bilinear(cls, gram, cls) == -2]
        for cls in enumerate_negative_curves(rank, roots):
            if cls not in known:
                generators.append((exceptional if cls == e_class else class_label(basis, cls), cls))
                known.add(cls)
    if e_class not in known:
        generators.append((exceptional, e_class))

    anti_canonical = sub(model.anti_canonical + (Fraction(0),), e_class)
    result = SurfaceModel(
        id=model_id or f"{model.id}+{exceptional}",
        basis=basis,
        gram=gram,
        generators=tuple(generators),
        anti_canonical=anti_canonical,
        exceptional=exceptional,
    )
    logger.debug(f"blew up {model.id} at {sorted(incidence) or 'a general point'}: {len(generators)} generators")
    return result


def pullback(model, cls):
    """σ*(cls) on a blow-up of the model the class came from (zero exceptional coefficient)."""
    return vector(cls) + (Fraction(0),) * (model.rank - len(cls))


def with_aliases(model, aliases):
    """Rename generators, e.g. the basis-expression labels a blow-up assigns."""
    for old in aliases:
        if old not in model.labels:
            raise UnknownLabel(old, model.id)
    generators = tuple((aliases.get(label, label), cls) for label, cls in model.generators)
    return replace(model, generators=generators)


# ------------------------------------------------------------------------------
# JSON
# ------------------------------------------------------------------------------
def model_to_dict(model):
    """Serialize a model to the versioned JSON document layout."""
    return {
        "version": MODEL_FORMAT_VERSION,
        "id": model.id,
        "basis": list(model.basis),
        "gram": [[int(entry) for entry in row] for row in model.gram],
        "generators": {label: [rat_str(c) for c in cls] for label, cls in model.generators},
        "antiCanonical": [rat_str(c) for c in model.anti_canonical],
        "degree": rat_str(model.degree),
        "strata": {
            curve: [{"incident": sorted(spec.incident), "label": spec.label} for spec in specs]
            for curve, specs in model.strata
        },
        **({"exceptional": model.exceptional} if model.exceptional else {}),
    }


def model_from_dict(data):
    """Build a model from its JSON document.

    Raises:
        ModelFormatError: on a missing key, a wrong version or a degree that disagrees with -K.
    """
    try:
        if data.get("version", MODEL_FORMAT_VERSION) != MODEL_FORMAT_VERSION:
            raise ModelFormatError(f"unsupported model version {data['version']}")
        strata = tuple(
            (
                curve,
                tuple(
                    StratumSpec(curve, frozenset(spec["incident"]), spec.get("label") or curve)
                    for spec in specs
                ),
            )
            for curve, specs in data.get("strata", {}).items()
        )
        model = SurfaceModel(
            id=data["id"],
            basis=tuple(data["basis"]),
            gram=data["gram"],
            generators=tuple(data["generators"].items()),
            anti_canonical=data["antiCanonical"],
            strata=strata,
            exceptional=data.get("exceptional"),
        )
    except (KeyError, TypeError, AttributeError, ValueError, ZeroDivisionError) as error:
        raise ModelFormatError(f"malformed model document: {error!r}") from error
    if "degree" in data and to_rat(data["degree"]) != model.degree:
        raise ModelFormatError(f"{model.id}: declared degree {data['degree']} but (-K)^2 = {model.degree}")
    return model
