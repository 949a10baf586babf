# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).
"""``holonomy-cert`` command line.

Exit codes: 0 when every certificate verifies, 1 when an exact check
fails or a Groebner cap is exceeded, 2 on bad input.
"""

import argparse
import logging
import sys
from concurrent.futures import ProcessPoolExecutor

from holonomy_cert_base.exceptions import ResourceCapError, UserError, ValidationError
from holonomy_cert_base.models.rational import rational_str, to_rational
from holonomy_cert_filling.models.threshold import DEFAULT_CROSS_CHECK

from .models.certificate import tool_version
from .models.config import FORMATS, CliConfig
from .models.input_file import read_input
from .models.report import render
from .wizards.commands import run_command
from .wizards.reverify import reverify
from .wizards.selftest import SELFTEST_CHECKS, run_selftest

_logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")
EXIT_OK, EXIT_FAILED, EXIT_BAD_INPUT = 0, 1, 2


def build_parser():
    parser = argparse.ArgumentParser(
        prog="holonomy-cert",
        description="Exact certificates for the SL(2) character variety of m137 "
        "and the real solutions of its filling equations.",
    )
    parser.add_argument("--version", action="version", version=tool_version())
    parser.add_argument("--output", help="Write the report here instead of stdout.")
    parser.add_argument("--format", choices=FORMATS, default="text")
    parser.add_argument("--jobs", type=int, default=1, help="Worker processes for scan.")
    parser.add_argument(
        "--tolerance",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="Override a tolerance (enclosure, witness, bound) with p/q or an integer.",
    )
    parser.add_argument("--log-level", choices=LOG_LEVELS, default="WARNING")
    parser.add_argument("--seed", type=int, default=0, help="Seed of every sampled check.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    cmd = sub.add_parser("derive-curve", help="Derive and certify the character curve.")
    cmd.add_argument(
        "--full-elimination",
        action="store_true",
        help="Eliminate from the matrix entry equations instead of the trace equations.",
    )
    sub.add_parser("irreducibility", help="Replay the irreducibility certificate.")
    sub.add_parser("domains", help="Compute the real domains U and V.")

    cmd = sub.add_parser("classify", help="Classify the real points above s.")
    cmd.add_argument("--s", required=True, help="Rational s, e.g. 3 or -7/4.")
    cmd.add_argument("--t", help="Select the root of P(s, t) within 1e-4 of this value.")

    cmd = sub.add_parser("certify", help="Certify the filling equation of one slope.")
    cmd.add_argument("--n", type=int, required=True)

    cmd = sub.add_parser("scan", help="Certify every nonzero slope in a range.")
    cmd.add_argument("--from", dest="start", type=int, required=True)
    cmd.add_argument("--to", dest="stop", type=int, required=True)
    cmd.add_argument("--jobs", type=int, default=argparse.SUPPRESS)

    cmd = sub.add_parser("threshold", help="Derive the negative-slope threshold N0.")
    cmd.add_argument("--cross-check", type=int, default=DEFAULT_CROSS_CHECK)

    cmd = sub.add_parser("witness", help="Certified real solution for a positive slope.")
    cmd.add_argument("--n", type=int, required=True)

    cmd = sub.add_parser("apoly-validate", help="Validate the A-polynomial.")
    cmd.add_argument("--samples", type=int, default=20)
    cmd.add_argument("--derive", action="store_true", help="Also re-derive it by elimination.")

    cmd = sub.add_parser("alexander", help="Check the Alexander polynomial coefficients.")
    cmd.add_argument("--poly", required=True)

    cmd = sub.add_parser("groebner", help="Reduced Groebner basis of a basis file.")
    cmd.add_argument("--input", required=True, help="One generator per line.")
    cmd.add_argument("--order", choices=("lex", "grevlex"), default="grevlex")
    cmd.add_argument("--vars", help="Comma separated variables, largest first.")
    cmd.add_argument("--member", help="Decide membership of this polynomial.")

    cmd = sub.add_parser("reverify", help="Re-run the operations behind certificates.")
    cmd.add_argument("--input", required=True, help="JSON certificate file.")

    cmd = sub.add_parser("selftest", help="Run the invariant suite.")
    cmd.add_argument("--quick", action="store_true", help="Reduced sample sizes.")
    cmd.add_argument("--check", choices=tuple(SELFTEST_CHECKS), help="Run one check only.")
    return parser


def _basis_lines(path):
    lines = []
    for line in read_input(path).splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def build_inputs(args, config):
    """The JSON-ready inputs recorded in the certificates of ``args.command``."""
    max_pairs = config.caps.max_pairs
    command = args.command
    if command == "derive-curve":
        return {"full_elimination": args.full_elimination, "max_pairs": max_pairs}
    if command == "domains":
        return {"width": rational_str(config.tolerance("enclosure"))}
    if command == "classify":
        t = None if args.t is None else rational_str(to_rational(args.t))
        return {"s": rational_str(to_rational(args.s)), "t": t}
    if command in ("certify", "witness"):
        return {"n": args.n, "width": rational_str(config.tolerance("witness"))}
    if command == "scan":
        return {
            "start": args.start,
            "stop": args.stop,
            "width": rational_str(config.tolerance("witness")),
        }
    if command == "threshold":
        if args.cross_check < 0:
            raise UserError("--cross-check must be non-negative, got %d." % args.cross_check)
        return {
            "tolerance": rational_str(config.tolerance("bound")),
            "cross_check": args.cross_check,
        }
    if command == "apoly-validate":
        if args.samples < 0:
            raise UserError("--samples must be non-negative, got %d." % args.samples)
        return {
            "samples": args.samples,
            "seed": config.seed,
            "derive": args.derive,
            "max_pairs": max_pairs,
        }
    if command == "alexander":
        return {"poly": args.poly}
    if command == "groebner":
        variables = None
        if args.vars:
            variables = [v.strip() for v in args.vars.split(",") if v.strip()]
        return {
            "basis": _basis_lines(args.input),
            "order": args.order,
            "vars": variables,
            "member": args.member,
            "max_pairs": max_pairs,
        }
    if command == "reverify":
        return {"input": args.input}
    if command == "selftest":
        return {"quick": args.quick, "seed": config.seed, "check": args.check}
    return {}


def execute(args, config):
    inputs = build_inputs(args, config)
    if args.command == "selftest":
        return run_selftest(inputs)
    if args.command == "reverify":
        return reverify(inputs)
    if args.command == "scan" and config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as executor:
            return run_command("scan", inputs, executor)
    return run_command(args.command, inputs)


def _write(text, path):
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as err:
        raise UserError("Cannot write %s: %s." % (path, err.strerror or err)) from err
    _logger.info("Wrote %s", path)


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level), format=LOG_FORMAT)
    try:
        config = CliConfig.from_env(
            jobs=args.jobs, output=args.output, format=args.format, seed=args.seed
        ).with_tolerances(args.tolerance)
        certificates = execute(args, config)
        _write(render(certificates, config.format), config.output)
    except UserError as err:
        _logger.debug("Bad input", exc_info=True)
        sys.stderr.write("error: %s\n" % err)
        return EXIT_BAD_INPUT
    except (ValidationError, ResourceCapError) as err:
        sys.stderr.write("verification failed: %s\n" % err)
        return EXIT_FAILED
    failed = [c for c in certificates if c.verdict == "FAIL" or not c.holds]
    if failed:
        _logger.warning("%d certificate(s) failed", len(failed))
        return EXIT_FAILED
    return EXIT_OK
