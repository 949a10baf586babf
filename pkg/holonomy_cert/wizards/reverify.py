# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

import logging

from holonomy_cert_base.exceptions import UserError, ValidationError

from ..models.certificate import load_certificates
from ..models.input_file import read_input
from .commands import COMMANDS
from .selftest import run_selftest

_logger = logging.getLogger(__name__)

# scans are recorded as one ``certify`` certificate per slope
RERUNNABLE = dict({k: v for k, v in COMMANDS.items() if k != "scan"}, selftest=run_selftest)


def reverify_certificate(certificate):
    """Re-run the operation named by ``certificate`` on its inputs and
    return the fresh certificate; raise :class:`ValidationError` when the
    facts or the verdict differ."""
    if certificate.kind not in RERUNNABLE:
        raise UserError("Cannot re-run a certificate of kind %r." % certificate.kind)
    rerun = RERUNNABLE[certificate.kind](certificate.inputs)
    if len(rerun) != 1:
        raise ValidationError(
            "Re-running %s produced %d certificates instead of one."
            % (certificate.kind, len(rerun))
        )
    fresh = rerun[0]
    if fresh.verdict != certificate.verdict:
        raise ValidationError(
            "%s: re-run verdict %s differs from the recorded %s."
            % (certificate.kind, fresh.verdict, certificate.verdict)
        )
    if fresh.facts != certificate.facts:
        changed = sum(1 for a, b in zip(fresh.facts, certificate.facts) if a != b)
        changed += abs(len(fresh.facts) - len(certificate.facts))
        raise ValidationError(
            "%s: %d fact(s) differ from the recorded certificate."
            % (certificate.kind, changed)
        )
    _logger.info("Re-verified %s (%s)", certificate.kind, certificate.verdict)
    return fresh


def reverify(inputs):
    """``inputs["input"]`` names a JSON file with one or more certificates."""
    certificates = load_certificates(read_input(inputs["input"]))
    return [reverify_certificate(c) for c in certificates]
