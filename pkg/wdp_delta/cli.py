"""The ``wdp-delta`` command line.

Exit codes: 0 success, 1 verification mismatch, 2 usage error or unknown id, 3 refusal.
"""

import functools
import json
import logging
import os

from invoke import Collection, Program, task
from invoke.exceptions import Exit, ParseError

from wdp_delta import __version__
from wdp_delta.catalog import entry_from_dict, entry_to_dict, get_surface, list_surfaces
from wdp_delta.config import DeltaConfig, configure_logging, job_count
from wdp_delta.delta import evaluate_plans
from wdp_delta.errors import REFUSAL, USAGE, DeltaError, ModelFormatError, UnknownSurface
from wdp_delta.exact import to_rat
from wdp_delta.picard import enumerate_negative_curves, pair, parse_class
from wdp_delta.report import (
    FORMATS,
    dumps,
    render_curves,
    render_decomposition,
    render_listing,
    render_outcome,
    render_ray,
    render_ray_json,
    render_report,
)
from wdp_delta.verify import verify_entry, verify_surfaces
from wdp_delta.zariski import decompose_at, walk_ray

logger = logging.getLogger(__name__)

MISMATCH = 1
# Flags of ``verify`` that take a value, so their value is not mistaken for the surface id.
_VERIFY_VALUE_FLAGS = ("--jobs", "-j", "--model", "-m", "--surface", "-s")


def reporting(function):
    """Configure logging, then turn library errors into exits with their exit code."""

    @functools.wraps(function)
    def wrapper(context, *args, **kwargs):
        configure_logging(context.config)
        try:
            return function(context, *args, **kwargs)
        except DeltaError as error:
            logger.error(f"{type(error).__name__}: {error}")
            raise Exit(f"{type(error).__name__}: {error}", code=error.exit_code) from error
        except (ValueError, OSError) as error:
            raise Exit(f"UsageError: {error}", code=USAGE) from error

    return wrapper


def load_entry(surface, model=None):
    """Catalog entry ``surface``, or the entry document in the file ``model``."""
    if model is None:
        return get_surface(surface)
    try:
        with open(model, "r", encoding="utf8") as handle:
            data = json.load(handle)
    except OSError as error:
        raise ModelFormatError(f"cannot read {model}: {error.strerror}") from error
    except json.JSONDecodeError as error:
        raise ModelFormatError(f"{model} is not JSON: {error}") from error
    entry = entry_from_dict(data).check()
    if surface is not None and surface != entry.id:
        raise UnknownSurface(surface)
    return entry


def _check_format(output_format):
    if output_format not in FORMATS:
        raise ValueError(f"unknown format `{output_format}`, expected one of {', '.join(FORMATS)}")


# ------------------------------------------------------------------------------
# TASKS
# ------------------------------------------------------------------------------
@reporting
def list_task(context):  # pylint: disable=unused-argument
    """List the catalog surfaces with degree, curve count and global delta."""
    print(render_listing(get_surface(surface_id) for surface_id in list_surfaces()))


@task(
    positional=["surface"],
    help={
        "surface": "Catalog id, e.g. dp5-1",
        "format": "Output format: table, json or csv",
        "stratum": "Only the strata of this row or stratum label",
        "model": "Entry JSON file to use instead of the catalog",
    },
)
@reporting
def compute(context, surface, format_="table", stratum=None, model=None):  # pylint: disable=unused-argument
    """Compute the local delta invariants of a surface."""
    _check_format(format_)
    entry = load_entry(surface, model)
    plans = entry.plans_for(stratum) if stratum else entry.plans
    report = evaluate_plans(entry.id, entry.model.degree, plans)
    print(render_report(report, format_))


@task(
    positional=["surface"],
    help={
        "surface": "Catalog id",
        "ray": "Generator label, class expression (h-e1-e2, 2E1+F2) or tuple (1,0,-1)",
        "at": "Decompose at this u only",
        "format": "Output format: table or json",
        "model": "Entry JSON file to use instead of the catalog",
    },
)
@reporting
def decompose(context, surface, ray, at=None, format_="table", model=None):  # pylint: disable=unused-argument
    """Zariski chambers of the ray -K - uB, or the decomposition at one u."""
    entry = load_entry(surface, model)
    direction = parse_class(entry.model, ray)
    if at is not None:
        u = to_rat(at)
        divisor = tuple(k - u * b for k, b in zip(entry.model.anti_canonical, direction))
        print(render_decomposition(entry.model, divisor, decompose_at(entry.model, divisor), format_))
        return
    walk = walk_ray(entry.model, direction)
    print(render_ray_json(entry.model, walk) if format_ == "json" else render_ray(entry.model, walk, ray))


@task(
    help={
        "surface": "Catalog id, also accepted bare as in `verify dp5-1` (omit, or use --all, for every surface)",
        "all": "Verify every catalog surface",
        "jobs": "Worker processes (default: WDP_DELTA_JOBS, else one per CPU)",
        "model": "Verify the entry JSON file instead of the catalog",
    },
)
@reporting
def verify(context, surface=None, all_=False, jobs=None, model=None):
    """Recompute tables and matrices and diff them against the printed values."""
    if model is not None:
        outcomes = [verify_entry(load_entry(surface, model))]
    else:
        surface_ids = list_surfaces() if all_ or surface is None else [get_surface(surface).id]
        outcomes = verify_surfaces(surface_ids, job_count(context.config, jobs))
    for outcome in outcomes:
        print(render_outcome(outcome))
    passed = sum(outcome.passed for outcome in outcomes)
    print(f"{passed}/{len(outcomes)} pass")
    if any(outcome.error for outcome in outcomes):
        raise Exit(code=REFUSAL)
    if passed != len(outcomes):
        raise Exit(code=MISMATCH)


@task(
    positional=["surface"],
    help={
        "surface": "Catalog id of a plane blow-up",
        "roots": "Comma-separated (-2)-classes, e.g. e1-e2,h-e1-e2-e3 (default: the surface's (-2)-curves)",
        "model": "Entry JSON file to use instead of the catalog",
    },
)
@reporting
def curves(context, surface, roots=None, model=None):  # pylint: disable=unused-argument
    """Enumerate the negative curves of a plane blow-up and print their dual graph."""
    entry = load_entry(surface, model)
    lattice = entry.model
    if not lattice.is_lorentzian:
        raise ValueError(f"{lattice.id} is not a blow-up of the plane in the basis (h; e1, ...)")
    if roots:
        root_classes = [parse_class(lattice, root) for root in roots.split(",")]
    else:
        root_classes = [cls for _, cls in lattice.generators if pair(lattice, cls, cls) == -2]
    print(render_curves(lattice, enumerate_negative_curves(lattice.rank, root_classes)))


@task(
    positional=["surface"],
    help={"surface": "Catalog id", "output": "Write to this file instead of stdout"},
)
@reporting
def export(context, surface, output=None):  # pylint: disable=unused-argument
    """Write a catalog entry as a JSON document usable with --model."""
    document = dumps(entry_to_dict(get_surface(surface)))
    if output is None:
        print(document)
        return
    with open(output, "w", encoding="utf8") as handle:
        handle.write(document + "\n")
    logger.info(f"wrote {surface} to {output}")


namespace = Collection()
namespace.add_task(task(list_task), name="list")
for _task in (compute, decompose, verify, curves, export):
    namespace.add_task(_task)


# ------------------------------------------------------------------------------
# PROGRAM
# ------------------------------------------------------------------------------
def _verify_argv(argv):
    """Turn the bare surface id of ``verify dp5-1`` into ``verify --surface dp5-1``."""
    if not argv or argv[0] != "verify":
        return argv
    rewritten = [argv[0]]
    rest = iter(argv[1:])
    for token in rest:
        if token.startswith("-"):
            rewritten.append(token)
            if token in _VERIFY_VALUE_FLAGS:
                value = next(rest, None)
                if value is not None:
                    rewritten.append(value)
            continue
        rewritten.extend(("--surface", token))
    return rewritten


class DeltaProgram(Program):
    """Invoke program whose parse errors exit with the usage code.

    The working directory is the project location, so a ./wdp_delta.yml there is loaded.
    """

    def parse_core(self, argv):
        try:
            super().parse_core(argv)
        except ParseError as error:
            raise Exit(str(error), code=USAGE) from error

    def parse_tasks(self):
        self.core.unparsed = _verify_argv(self.core.unparsed)
        try:
            super().parse_tasks()
        except ParseError as error:
            raise Exit(str(error), code=USAGE) from error

    def update_config(self, merge=True):
        self.config.set_project_location(os.getcwd())
        self.config.load_project(merge=False)
        super().update_config(merge)


program = DeltaProgram(
    name="wdp-delta",
    binary="wdp-delta",
    version=__version__,
    namespace=namespace,
    config_class=DeltaConfig,
)
