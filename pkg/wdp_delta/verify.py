"""Recompute catalog tables and matrices and diff them against the printed values."""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from wdp_delta.catalog import get_surface
from wdp_delta.delta import evaluate_plans
from wdp_delta.errors import DeltaError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VerifyOutcome:
    """Result of verifying one surface.

    ``mismatches`` holds ``(label, expected, computed)`` for table strata and matrix entries;
    ``error`` names a refusal that stopped the computation.
    """

    surface: str
    mismatches: tuple = ()
    notes: tuple = ()
    error: str = None

    @property
    def passed(self):
        """True iff nothing differs and nothing was refused."""
        return not self.mismatches and self.error is None


def _notes(entry):
    notes = [f"printed intersection ({i},{j}) = {p}, read as {c}" for i, j, p, c in entry.printed.errata]
    notes.extend(f"printed row {row} = {p}, read as {c}" for row, p, c in entry.table.errata)
    return tuple(notes)


def verify_entry(entry):
    """Recompute every stratum of ``entry`` and compare with its corrected table and matrix.

    Returns:
        VerifyOutcome: mismatches for every stratum whose delta differs from its row value and
        for every matrix entry that differs from the corrected printed matrix.

    Raises:
        DeltaError: refusals from the computation propagate.
    """
    expected = entry.table.values
    report = evaluate_plans(entry.id, entry.model.degree, entry.plans)
    mismatches = []
    for result in report.strata:
        if result.row not in expected:
            mismatches.append((f"{result.row} / {result.stratum}", None, result.delta))
        elif result.delta != expected[result.row]:
            mismatches.append((f"{result.row} / {result.stratum}", expected[result.row], result.delta))
    mismatches.extend(
        (f"gram {position}", printed, computed) for position, printed, computed in entry.gram_differences()
    )
    outcome = VerifyOutcome(entry.id, tuple(mismatches), _notes(entry))
    if outcome.passed:
        logger.info(f"{entry.id}: {len(report.strata)} strata match")
    else:
        logger.warning(f"{entry.id}: {len(mismatches)} mismatches")
    return outcome


def verify_surface(surface_id):
    """Verify one catalog surface, turning refusals into a failed outcome."""
    try:
        return verify_entry(get_surface(surface_id))
    except DeltaError as error:
        logger.error(f"{surface_id}: {type(error).__name__}: {error}")
        return VerifyOutcome(surface_id, error=f"{type(error).__name__}: {error}")


def verify_surfaces(surface_ids, jobs=1):
    """Verify surfaces, in parallel when ``jobs > 1``; outcomes come back in input order."""
    surface_ids = list(surface_ids)
    workers = min(jobs, len(surface_ids))
    if workers <= 1:
        return [verify_surface(surface_id) for surface_id in surface_ids]
    logger.info(f"verifying {len(surface_ids)} surfaces on {workers} workers")
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(verify_surface, surface_ids))
