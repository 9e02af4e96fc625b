"""Exception hierarchy for wdp-delta.

Every error carries the process exit code the CLI maps it to. Usage problems (bad ids, bad
labels, malformed classes or files) exit with 2; computational refusals exit with 3.
"""

USAGE = 2
REFUSAL = 3


class DeltaError(Exception):
    """Base class of all wdp-delta errors."""

    exit_code = REFUSAL


class UsageError(DeltaError):
    """The request itself is malformed."""

    exit_code = USAGE


class RefusalError(DeltaError):
    """The request is well formed but the engine refuses to answer it exactly."""

    exit_code = REFUSAL


# ------------------------------------------------------------------------------
# USAGE
# ------------------------------------------------------------------------------
class UnknownSurface(UsageError):
    """No catalog entry or loaded model has this id."""

    def __init__(self, surface_id):
        super().__init__(f"unknown surface `{surface_id}`")
        self.surface_id = surface_id


class UnknownLabel(UsageError):
    """A generator, basis or stratum label does not exist on the model."""

    def __init__(self, label, where):
        super().__init__(f"unknown label `{label}` on {where}")
        self.label = label


class ClassParseError(UsageError):
    """A divisor class expression could not be parsed."""


class DimensionMismatch(UsageError):
    """A class or matrix does not match the rank of the lattice it is used with."""

    def __init__(self, expected, got):
        super().__init__(f"expected dimension {expected}, got {got}")
        self.expected = expected
        self.got = got


class InvalidRoot(UsageError):
    """A declared root class is not a (-2)-class orthogonal to the canonical class."""

    def __init__(self, root, square, canonical_pairing):
        super().__init__(f"root {root} has square {square} and K-pairing {canonical_pairing}")
        self.root = root


class ModelFormatError(UsageError):
    """A model JSON document is malformed."""


# ------------------------------------------------------------------------------
# REFUSALS
# ------------------------------------------------------------------------------
class SingularMatrix(RefusalError):
    """A linear system has a singular matrix."""


class DomainExceeded(RefusalError):
    """An integration interval leaves the domain of a piecewise polynomial."""

    def __init__(self, lo, hi, domain):
        super().__init__(f"[{lo}, {hi}] is not inside the domain [{domain[0]}, {domain[1]}]")
        self.interval = (lo, hi)
        self.domain = domain


class NotPseudoEffective(RefusalError):
    """The divisor has no Zariski decomposition against the declared generators."""

    def __init__(self, divisor, reason):
        super().__init__(reason)
        self.divisor = divisor
        self.reason = reason


class IrrationalBreakpoint(RefusalError):
    """A breakpoint or threshold of a ray walk is irrational."""

    def __init__(self, interval):
        super().__init__(f"irrational root isolated in [{interval[0]}, {interval[1]}]")
        self.interval = interval


class UnboundedRay(RefusalError):
    """The ray never leaves the pseudo-effective cone."""


class ZariskiError(RefusalError):
    """A ray walk hit an internal inconsistency (probe disagreement, runaway walk)."""


class NegativePartContainsExtraction(RefusalError):
    """The extraction curve enters the negative part of its own ray."""

    def __init__(self, label, chamber):
        super().__init__(f"`{label}` is in the negative part on [{chamber.lo}, {chamber.hi}]")
        self.label = label


class PlanMismatch(RefusalError):
    """The lower bound and the witness upper bound of a stratum differ."""

    def __init__(self, row, stratum, lower, upper):
        super().__init__(f"{row} / {stratum}: lower bound {lower} != upper bound {upper}")
        self.row = row
        self.stratum = stratum
        self.lower = lower
        self.upper = upper


class CatalogError(RefusalError):
    """A catalog entry fails one of its structural checks."""
