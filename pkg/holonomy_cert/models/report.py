# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

import csv
import io
import json
import logging

from holonomy_cert_base.exceptions import UserError
from holonomy_cert_base.models.rational import display, to_rational

from .certificate import dump_certificates

_logger = logging.getLogger(__name__)

TEXT_COLUMNS = ("kind", "inputs", "verdict", "summary")
SLOPE_COLUMNS = ("n", "verdict", "root_count", "witness_lo", "witness_hi")
SLOPE_KINDS = ("certify", "witness")


def _witness(result):
    witnesses = result.get("witnesses") or []
    if not witnesses:
        return None, None
    return witnesses[0]["lo"], witnesses[0]["hi"]


def _summary_slope(result):
    lo, hi = _witness(result)
    text = "%d root(s) in V" % result.get("root_count_in_V", 0)
    if lo is not None:
        text += ", witness in [%s, %s]" % (display(to_rational(lo), 6), display(to_rational(hi), 6))
    return text


def _summary_threshold(result):
    return "N0=%d q=%s c5=%s c6=%s" % (
        result["N0"],
        display(to_rational(result["q"])),
        display(to_rational(result["c5"])),
        display(to_rational(result["c6"])),
    )


SUMMARIES = {
    "derive-curve": lambda r: "P = %s (%s)" % (r["curve"]["poly"], r["curve"]["method"]),
    "irreducibility": lambda r: "contradiction %s != 0" % r["contradiction"],
    "domains": lambda r: "U = %s; V = %s" % (r["U_text"], r["V_text"]),
    "classify": lambda r: "%d point(s) above s = %s" % (len(r["points"]), r["s"]),
    "certify": _summary_slope,
    "witness": _summary_slope,
    "threshold": _summary_threshold,
    "apoly-validate": lambda r: "%s = 0" % r["expanded"],
    "alexander": lambda r: "%s: all coefficients +-1 is %s" % (r["poly"], r["verdict"]),
    "groebner": lambda r: "%d generator(s) under %s" % (len(r["basis"]), r["order"]),
}


def summarize(certificate):
    summary = SUMMARIES.get(certificate.kind)
    if summary is None or not certificate.result:
        return "%d fact(s)" % len(certificate.facts)
    return summary(certificate.result)


def render_text(certificates):
    """Tabular summary, one row per certificate in the given order."""
    rows = [TEXT_COLUMNS]
    for certificate in certificates:
        rows.append(
            (
                certificate.kind,
                json.dumps(certificate.inputs, sort_keys=True),
                certificate.verdict,
                summarize(certificate),
            )
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(TEXT_COLUMNS) - 1)]
    lines = []
    for row in rows:
        cells = [cell.ljust(width) for cell, width in zip(row, widths)]
        lines.append("  ".join(cells + [row[-1]]).rstrip())
    lines.insert(1, "  ".join("-" * width for width in widths + [len(TEXT_COLUMNS[-1])]))
    return "\n".join(lines) + "\n"


def render_csv(certificates):
    """Slope certificates use the scan columns; anything else falls back
    to the text columns."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if all(c.kind in SLOPE_KINDS for c in certificates):
        writer.writerow(SLOPE_COLUMNS)
        for certificate in certificates:
            lo, hi = _witness(certificate.result)
            writer.writerow(
                (
                    certificate.inputs["n"],
                    certificate.verdict,
                    certificate.result.get("root_count_in_V", 0),
                    lo or "",
                    hi or "",
                )
            )
    else:
        writer.writerow(TEXT_COLUMNS)
        for certificate in certificates:
            writer.writerow(
                (
                    certificate.kind,
                    json.dumps(certificate.inputs, sort_keys=True),
                    certificate.verdict,
                    summarize(certificate),
                )
            )
    return buffer.getvalue()


RENDERERS = {"json": dump_certificates, "csv": render_csv, "text": render_text}


def render(certificates, fmt="text"):
    if fmt not in RENDERERS:
        raise UserError("Unknown output format %r." % fmt)
    _logger.debug("Rendering %d certificates as %s", len(certificates), fmt)
    return RENDERERS[fmt](certificates)
