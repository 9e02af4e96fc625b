"""Text, JSON and CSV rendering of delta reports, ray walks and verify outcomes."""

import csv
import io
import json

from wdp_delta.exact import rat_str
from wdp_delta.picard import class_label, pair
from wdp_delta.piecewise import Poly
from wdp_delta.zariski import decomposition_to_dict, ray_to_dict

FORMATS = ("table", "json", "csv")
CSV_COLUMNS = ("surface", "stratum", "S_E", "S_W", "lower", "upper", "delta")


def dumps(data):
    """Canonical JSON: sorted keys, two-space indent, trailing newline omitted."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)


# ------------------------------------------------------------------------------
# DELTA REPORTS
# ------------------------------------------------------------------------------
def _table(report):
    header = ("row", "stratum", "extraction", "S(E)", "S(W)", "lower", "upper", "delta")
    body = [
        (r.row, r.stratum, r.extraction, str(r.s_e), str(r.s_w), str(r.lower), str(r.upper), str(r.delta))
        for r in report.strata
    ]
    widths = [max(len(line[i]) for line in [header] + body) for i in range(len(header))]
    lines = [f"{report.surface} (degree {report.degree})"]
    for line in [header] + body:
        lines.append("  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip())
    lines.append("")
    lines.extend(f"{row} → {value}" for row, value in report.rows())
    lines.append(f"global delta → {report.global_delta}")
    return "\n".join(lines)


def _csv(report):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for result in report.strata:
        writer.writerow(
            (
                report.surface,
                result.stratum,
                rat_str(result.s_e),
                rat_str(result.s_w),
                rat_str(result.lower),
                rat_str(result.upper),
                rat_str(result.delta),
            )
        )
    return buffer.getvalue().rstrip("\n")


def render_report(report, output_format="table"):
    """Render a DeltaReport as ``table``, ``json`` or ``csv``."""
    if output_format == "json":
        return dumps(report.to_dict())
    if output_format == "csv":
        return _csv(report)
    if output_format == "table":
        return _table(report)
    raise ValueError(f"unknown format `{output_format}`, expected one of {', '.join(FORMATS)}")


# ------------------------------------------------------------------------------
# RAY WALKS
# ------------------------------------------------------------------------------
def _affine_class(basis, constant, slope):
    terms = []
    for name, c, s in zip(basis, constant, slope):
        piece = Poly.of(c, s)
        if piece.is_zero:
            continue
        text = str(piece)
        terms.append(f"{text}*{name}" if piece.degree == 0 else f"({text})*{name}")
    return " + ".join(terms) or "0"


def render_ray(model, ray, label):
    """Chamber-by-chamber description of a ray walk."""
    lines = [f"{model.id}: ray -K - u*{label}, tau = {ray.tau}"]
    for chamber in ray.chambers:
        lines.append(f"[{chamber.lo}, {chamber.hi}]  support: {', '.join(chamber.support) or '-'}")
        lines.append(
            f"  P(u) = {_affine_class(model.basis, chamber.positive_constant, chamber.positive_slope)}"
        )
        for name in chamber.support:
            lines.append(f"  N_{name}(u) = {chamber.negative_poly(name)}")
        lines.append(f"  vol(u) = {chamber.volume_poly(model)}")
    if ray.zero_volume_from is not None:
        lines.append(f"zero volume from u = {ray.zero_volume_from}")
    return "\n".join(lines)


def render_ray_json(model, ray):
    """Ray walk JSON."""
    return dumps(ray_to_dict(model, ray))


def render_decomposition(model, divisor, decomposition, output_format="table"):
    """The decomposition of one divisor."""
    if output_format == "json":
        return dumps(decomposition_to_dict(model, divisor, decomposition))
    lines = [
        f"D = {class_label(model.basis, divisor)}",
        f"P = {class_label(model.basis, decomposition.positive)}",
        "N = " + (", ".join(f"{label}: {value}" for label, value in decomposition.negative) or "0"),
        f"P^2 = {pair(model, decomposition.positive, decomposition.positive)}",
    ]
    return "\n".join(lines)


# ------------------------------------------------------------------------------
# CATALOG AND VERIFY
# ------------------------------------------------------------------------------
def render_listing(entries):
    """One line per catalog entry."""
    return "\n".join(
        f"{entry.id} degree={entry.model.degree} curves={len(entry.model.generators)} "
        f"delta={entry.table.global_delta}  {entry.description}".rstrip()
        for entry in entries
    )


def render_outcome(outcome):
    """PASS / FAIL line, then mismatches and notes."""
    status = "PASS" if outcome.passed else "FAIL"
    lines = [f"{outcome.surface} {status}"]
    if outcome.error:
        lines.append(f"  refused: {outcome.error}")
    lines.extend(
        f"  {label}: expected {expected}, computed {computed}" for label, expected, computed in outcome.mismatches
    )
    lines.extend(f"  note: {note}" for note in outcome.notes)
    return "\n".join(lines)


def render_curves(model, classes):
    """Negative curves with labels, then the dual graph."""
    labels = [model.label_of(cls) for cls in classes]
    lines = [
        f"{label}: {class_label(model.basis, cls)} (square {pair(model, cls, cls)})"
        for label, cls in zip(labels, classes)
    ]
    lines.append("dual graph:")
    for i, first in enumerate(classes):
        for j in range(i + 1, len(classes)):
            meeting = pair(model, first, classes[j])
            if meeting > 0:
                lines.append(f"  {labels[i]} - {labels[j]}" + (f" ({meeting})" if meeting != 1 else ""))
    return "\n".join(lines)
