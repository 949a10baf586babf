# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).
"""One function per subcommand.

Each takes the JSON-ready ``inputs`` of its certificate (and, for scans, an
optional executor) and returns a list of
:class:`~holonomy_cert.models.certificate.Certificate`; re-running a
function on the inputs stored in a certificate reproduces its facts.
"""

import logging
from fractions import Fraction

from holonomy_cert_base.exceptions import DomainError, UserError, ValidationError
from holonomy_cert_base.models.proof import ProofRecord
from holonomy_cert_base.models.rational import rational_str, to_rational
from holonomy_cert_base.models.text_format import parse_basis, parse_poly
from holonomy_cert_filling.models.alexander import AlexanderPoly, l_space_report
from holonomy_cert_filling.models.certify import (
    certify_slope,
    positive_slope_witness,
    scan_slopes,
)
from holonomy_cert_filling.models.threshold import derive_threshold
from holonomy_cert_ideal.models.groebner import (
    GroebnerCaps,
    groebner_basis,
    normal_form,
    verify_groebner,
)
from holonomy_cert_ideal.models.monomial_order import MonomialOrder
from holonomy_cert_realroots.models.domain import compute_s_domain, compute_z_domain
from holonomy_cert_variety.models.a_polynomial import (
    a_polynomial_form,
    validate_a_polynomial,
)
from holonomy_cert_variety.models.character_curve import (
    CharacterPoint,
    derive_character_curve,
    section_roots,
    verify_generators,
)
from holonomy_cert_variety.models.irreducibility import irreducibility_certificate
from holonomy_cert_variety.models.reconstruction import reconstruct_representation
from holonomy_cert_variety.models.unitarity import classify_character_point

from ..models.certificate import Certificate

_logger = logging.getLogger(__name__)

VERIFIED = "VERIFIED"
SNAP_DISTANCE = Fraction(1, 10 ** 4)


def _caps(inputs):
    return GroebnerCaps(max_pairs=inputs.get("max_pairs", GroebnerCaps.max_pairs))


def _int_input(inputs, key):
    value = inputs.get(key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise UserError("Input %s must be an integer, got %r." % (key, value))
    return value


def derive_curve(inputs):
    full = bool(inputs.get("full_elimination", False))
    caps = _caps(inputs)
    curve = derive_character_curve(caps=caps, full_elimination=full)
    generators = verify_generators(caps).require()
    return [
        Certificate.from_records(
            "derive-curve",
            inputs,
            [curve.record, generators],
            VERIFIED,
            result={"curve": curve.to_json()},
        )
    ]


def irreducibility(inputs):
    certificate = irreducibility_certificate()
    return [
        Certificate.from_records(
            "irreducibility",
            inputs,
            [certificate.case_2_2, certificate.case_1_3],
            VERIFIED,
            result={"contradiction": certificate.contradiction},
        )
    ]


def domains(inputs):
    width = to_rational(inputs["width"])
    s_domain, z_domain = compute_s_domain(width), compute_z_domain(width)
    records = [d.record for d in (s_domain, z_domain) if d.record is not None]
    for record in records:
        record.require()
    return [
        Certificate.from_records(
            "domains",
            inputs,
            records,
            VERIFIED,
            result={
                "U": s_domain.to_json(),
                "V": z_domain.to_json(),
                "U_text": str(s_domain),
                "V_text": str(z_domain),
            },
        )
    ]


def _points_above(s, t):
    roots = section_roots(s)
    if not roots:
        raise ValidationError(
            "s = %s lies in a gap of U; the character curve has no real point above it." % s
        )
    if t is None:
        return roots
    t = to_rational(t)
    close = [
        r for r in roots if r.compare(t - SNAP_DISTANCE) > 0 and r.compare(t + SNAP_DISTANCE) < 0
    ]
    if not close:
        raise DomainError(
            "t = %s is not within %s of a root of P(%s, t)." % (t, SNAP_DISTANCE, s)
        )
    return close[:1]


def classify(inputs):
    s = to_rational(inputs["s"])
    record = ProofRecord("classify s=%s" % s)
    points = []
    verdicts = set()
    for root in _points_above(s, inputs.get("t")):
        point = CharacterPoint(s, root)
        record.check(
            "P(%s, t) = 0 for t in (%s, %s)" % (s, root.lo, root.hi),
            "Sturm isolation of the section P(s, t)",
            point.is_on_curve(),
            t=root.to_json(),
        )
        classification = classify_character_point(point)
        verdicts.add(classification.value)
        mode = "real" if s * s > 4 else "complex"
        params = reconstruct_representation(point, mode)
        record.check(
            "the %s reconstruction satisfies the relator" % mode,
            "numeric relator residual below 1e-9",
            params.certified,
            residual=params.residual,
        )
        points.append(
            {
                "point": point.to_json(),
                "classification": classification.value,
                "representation": params.to_json(),
            }
        )
    record.require()
    if len(verdicts) != 1:
        raise ValidationError("Points above s = %s classify differently: %s." % (s, verdicts))
    return [
        Certificate.from_records(
            "classify",
            inputs,
            [record],
            verdicts.pop(),
            result={"s": rational_str(s), "points": points},
        )
    ]


def _slope_certificate(kind, certificate, width):
    return Certificate.from_records(
        kind,
        {"n": certificate.n, "width": rational_str(width)},
        [certificate.record],
        certificate.verdict.value,
        result=certificate.to_json(),
    )


def certify(inputs):
    width = to_rational(inputs["width"])
    certificate = certify_slope(_int_input(inputs, "n"), width)
    return [_slope_certificate("certify", certificate, width)]


def scan(inputs, executor=None):
    """Certificates of kind ``certify``, one per slope, so each re-runs
    on its own."""
    width = to_rational(inputs["width"])
    certificates = scan_slopes(
        _int_input(inputs, "start"), _int_input(inputs, "stop"), executor, width
    )
    return [_slope_certificate("certify", c, width) for c in certificates]


def witness(inputs):
    width = to_rational(inputs["width"])
    certificate = positive_slope_witness(_int_input(inputs, "n"), width)
    return [_slope_certificate("witness", certificate, width)]


def threshold(inputs):
    certificate = derive_threshold(
        to_rational(inputs["tolerance"]), _int_input(inputs, "cross_check")
    )
    if not certificate.reverify():
        raise ValidationError("The threshold inequality trace does not re-verify.")
    return [
        Certificate.from_records(
            "threshold", inputs, [certificate.record], VERIFIED, result=certificate.to_json()
        )
    ]


def apoly_validate(inputs):
    record = validate_a_polynomial(
        samples=_int_input(inputs, "samples"),
        seed=_int_input(inputs, "seed"),
        derive=bool(inputs.get("derive", False)),
        caps=_caps(inputs),
    )
    return [
        Certificate.from_records(
            "apoly-validate",
            inputs,
            [record],
            VERIFIED,
            result=a_polynomial_form().to_json(),
            seed=inputs["seed"],
        )
    ]


def alexander(inputs):
    poly = AlexanderPoly.parse(inputs["poly"])
    report = l_space_report(poly)
    verdict = "true" if report["all_coefficients_unit"] else "false"
    record = ProofRecord("alexander")
    record.check(
        "the coefficients of %s are %s" % (poly, report["coefficients"]),
        "coefficient inspection",
        True,
        all_coefficients_unit=report["all_coefficients_unit"],
    )
    return [
        Certificate.from_records(
            "alexander", inputs, [record], verdict, result=dict(report, verdict=verdict)
        )
    ]


def groebner(inputs):
    variables = inputs.get("vars")
    gens = parse_basis("\n".join(inputs["basis"]), variables)
    order = MonomialOrder.parse(inputs.get("order", "grevlex"), variables or gens[0].variables)
    basis = groebner_basis(gens, order, _caps(inputs))
    failing = verify_groebner(basis)
    record = ProofRecord("groebner")
    record.check(
        "every S-polynomial of the basis reduces to zero",
        "exhaustive S-polynomial reduction",
        not failing,
        failing_pairs=failing,
    )
    verdict = VERIFIED
    result = {"basis": [str(g) for g in basis], "order": str(order)}
    member = inputs.get("member")
    if member is not None:
        remainder = normal_form(parse_poly(member, variables), basis)
        record.check(
            "normal form of %s computed" % member,
            "division by the reduced Groebner basis",
            True,
            remainder=remainder,
        )
        verdict = "MEMBER" if remainder.is_zero else "NOT_MEMBER"
        result["normal_form"] = str(remainder)
    record.require()
    return [Certificate.from_records("groebner", inputs, [record], verdict, result=result)]


COMMANDS = {
    "derive-curve": derive_curve,
    "irreducibility": irreducibility,
    "domains": domains,
    "classify": classify,
    "certify": certify,
    "scan": scan,
    "threshold": threshold,
    "witness": witness,
    "apoly-validate": apoly_validate,
    "alexander": alexander,
    "groebner": groebner,
}


def run_command(name, inputs, executor=None):
    if name not in COMMANDS:
        raise UserError("Unknown command %r." % name)
    _logger.info("Running %s with %s", name, inputs)
    if name == "scan":
        return COMMANDS[name](inputs, executor)
    return COMMANDS[name](inputs)
