"""The 18 weak del Pezzo surfaces of degree at least 5 and their delta tables."""

import logging
from functools import lru_cache

from wdp_delta.catalog import degree5, degree6, degree7, degree8
from wdp_delta.catalog.entry import CatalogEntry, DeltaTable, entry_from_dict, entry_to_dict
from wdp_delta.errors import UnknownSurface

logger = logging.getLogger(__name__)

_BUILDERS = {**degree5.SURFACES, **degree6.SURFACES, **degree7.SURFACES, **degree8.SURFACES}

__all__ = (
    "CatalogEntry",
    "DeltaTable",
    "entry_from_dict",
    "entry_to_dict",
    "expected_table",
    "get_surface",
    "list_surfaces",
)


def list_surfaces():
    """Catalog ids, ordered by degree and then by configuration."""
    return tuple(_BUILDERS)


@lru_cache(maxsize=None)
def get_surface(surface_id):
    """Build and check the catalog entry ``surface_id``.

    Raises:
        UnknownSurface: for ids outside ``list_surfaces()``.
        CatalogError: when the entry fails a structural check.
    """
    if surface_id not in _BUILDERS:
        raise UnknownSurface(surface_id)
    entry = _BUILDERS[surface_id]().check()
    logger.info(f"loaded {surface_id}: degree {entry.model.degree}, {len(entry.model.generators)} curves")
    return entry


def expected_table(surface_id):
    """The printed delta table of ``surface_id`` (errata applied through ``DeltaTable.values``)."""
    return get_surface(surface_id).table
