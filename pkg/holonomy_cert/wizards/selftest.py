# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).
"""The invariant suite behind ``selftest``: one certificate per check."""

import logging
from fractions import Fraction

import numpy as np
import sympy

from holonomy_cert_base.data import m137
from holonomy_cert_base.exceptions import HolonomyCertError, UserError
from holonomy_cert_base.models.poly import MultiPoly
from holonomy_cert_base.models.proof import ProofRecord
from holonomy_cert_base.models.text_format import parse_poly
from holonomy_cert_filling.models.alexander import alexander_coefficient_check
from holonomy_cert_filling.models.certify import (
    Verdict,
    certify_slope,
    positive_slope_witness,
)
from holonomy_cert_filling.models.slope import verify_palindrome_symmetries
from holonomy_cert_filling.models.threshold import derive_threshold
from holonomy_cert_ideal.models.groebner import groebner_basis, verify_groebner
from holonomy_cert_ideal.models.monomial_order import MonomialOrder
from holonomy_cert_realroots.models.bounds import bound_on_interval
from holonomy_cert_realroots.models.domain import compute_s_domain, compute_z_domain
from holonomy_cert_realroots.models.sturm import count_real_roots, isolate_real_roots
from holonomy_cert_variety.models.a_polynomial import validate_a_polynomial
from holonomy_cert_variety.models.character_curve import (
    COMPONENTS,
    derive_character_curve,
    sample_character_points,
    verify_generators,
)
from holonomy_cert_variety.models.irreducibility import irreducibility_certificate
from holonomy_cert_variety.models.reconstruction import reconstruct_representation
from holonomy_cert_variety.models.unitarity import (
    Classification,
    classify_character_point,
    triangle_gap,
    verify_unitarity_reduction,
)

from ..models.certificate import Certificate

_logger = logging.getLogger(__name__)

PRINTED_TOLERANCE = 1e-4
# s-windows away from the pole of t at s = 2, per piece of U
UNITARITY_WINDOWS = {0: (Fraction(-4), Fraction(-2)), 1: None, 2: (Fraction(5, 2), Fraction(4))}
GRID_STEP = Fraction(1, 14)
GRID_BOUND = Fraction(81, 14)


def _sizes(quick, full, reduced):
    return reduced if quick else full


def check_curve(quick, seed):
    return [derive_character_curve().record]


def check_generators(quick, seed):
    return [verify_generators()]


def check_irreducibility(quick, seed):
    certificate = irreducibility_certificate()
    return [certificate.case_2_2, certificate.case_1_3]


def _match_printed(record, label, roots, printed):
    approx = [float(r) for r in roots]
    record.check(
        "%s match %s to 1e-4" % (label, ", ".join(printed)),
        "isolating intervals compared with the printed decimals",
        len(approx) == len(printed)
        and all(abs(a - float(p)) <= PRINTED_TOLERANCE for a, p in zip(approx, printed)),
        approx=approx,
    )


def check_domains(quick, seed):
    s_domain, z_domain = compute_s_domain(), compute_z_domain()
    record = ProofRecord("domain numerics")
    _match_printed(
        record,
        "the roots of s^3 + 2s^2 - 4s - 4",
        [s_domain.points[k] for k in ("p1", "p2", "p3")],
        m137.CUBIC_ROOTS_PRINTED,
    )
    _match_printed(record, "the roots of B", isolate_real_roots(m137.poly_b()), m137.B_ROOTS_PRINTED)
    v1, v2 = z_domain.points["v1"], z_domain.points["v2"]
    _match_printed(record, "the finite endpoints of V", [v1, v2], m137.V_ENDPOINTS_PRINTED)
    products = [a * b for a in (v1.lo, v1.hi) for b in (v2.lo, v2.hi)]
    lo, hi = min(products), max(products)
    record.check(
        "v1 v2 = 1 within the enclosure width",
        "product of the isolating intervals",
        lo <= 1 <= hi,
        product=[lo, hi],
    )
    return [r for r in (s_domain.record, z_domain.record) if r is not None] + [record]


def check_unitarity(quick, seed):
    count = _sizes(quick, 100, 5)
    record = ProofRecord("classification suite")
    for component, (piece, sign) in enumerate(COMPONENTS):
        failures = []
        for point in sample_character_points(
            component, count, seed, UNITARITY_WINDOWS[piece]
        ):
            s, t, w = point.numeric()
            classification = classify_character_point(point)
            if piece == 1:
                ok = classification is Classification.SU2 and triangle_gap(s, t, w) >= 0
            else:
                representation = reconstruct_representation(point, "real")
                ok = (
                    classification is Classification.SL2R
                    and triangle_gap(s, t, w) < 0
                    and representation.certified
                )
            if not ok:
                failures.append([s, t])
        record.check(
            "%d sampled points on component (piece %d, sign %+d) classify as %s"
            % (count, piece, sign, "SU2" if piece == 1 else "SL2R with a real representation"),
            "triangle criterion and real reconstruction with relator residual below 1e-9",
            not failures,
            failures=failures,
        )
    return [verify_unitarity_reduction(), record]


def check_a_polynomial(quick, seed):
    return [validate_a_polynomial(samples=_sizes(quick, 20, 6), seed=seed)]


def check_symmetries(quick, seed):
    return [verify_palindrome_symmetries(-n) for n in (2, 3, 10)]


def check_threshold(quick, seed):
    certificate = derive_threshold(cross_check=_sizes(quick, 26, 2))
    record = ProofRecord("threshold trace")
    record.check(
        "the inequality trace re-verifies",
        "exact recomputation of every step",
        certificate.reverify(),
        n0=certificate.N0,
    )
    return [certificate.record, record]


def check_positive_slopes(quick, seed):
    record = ProofRecord("positive slopes")
    for n in range(1, _sizes(quick, 50, 3) + 1):
        witness = positive_slope_witness(n)
        certificate = certify_slope(n)
        record.extend(witness.record)
        record.check(
            "(1, %d) has a real solution in V" % n,
            "exact slope certificate",
            certificate.verdict is Verdict.REAL_SOLUTION_FOUND,
        )
    return [record]


def check_alexander(quick, seed):
    record = ProofRecord("alexander")
    record.check(
        "x^4 - 2x^3 + 3x^2 - 2x + 1 has a coefficient other than +-1",
        "coefficient inspection",
        not alexander_coefficient_check(m137.ALEXANDER_8_20),
    )
    record.check(
        "the Alexander polynomial 1 has only unit coefficients",
        "coefficient inspection",
        alexander_coefficient_check(m137.ALEXANDER_M137),
    )
    return [record]


def _random_dense(rng, max_degree):
    degree = int(rng.integers(0, max_degree + 1))
    coefficients = [int(c) for c in rng.integers(-9, 10, degree + 1)]
    if not coefficients[-1]:
        coefficients[-1] = 1
    return coefficients


def _random_endpoints(rng):
    a, b = (Fraction(int(v), 7) for v in rng.integers(-35, 36, 2))
    if a == b:
        b += 1
    return min(a, b), max(a, b)


def check_sturm_oracle(quick, seed):
    """Sturm counts against sympy on random integer polynomials of degree
    at most 12."""
    rng = np.random.default_rng(seed)
    x = sympy.Symbol("x")
    record = ProofRecord("sturm oracle")
    mismatches = []
    trials = _sizes(quick, 500, 25)
    done = 0
    while done < trials:
        coefficients = _random_dense(rng, 12)
        if len(coefficients) < 2:
            continue
        lo, hi = _random_endpoints(rng)
        poly = MultiPoly.from_dense([Fraction(c) for c in coefficients], "x")
        if not poly.evaluate({"x": lo}) or not poly.evaluate({"x": hi}):
            continue
        oracle = sympy.Poly(list(reversed(coefficients)), x).sqf_part()
        expected = (
            oracle.count_roots(),
            oracle.count_roots(sympy.Rational(str(lo)), sympy.Rational(str(hi))),
        )
        observed = (count_real_roots(poly), count_real_roots(poly, lo, hi))
        isolated = len(isolate_real_roots(poly))
        if observed != expected or isolated != expected[0]:
            mismatches.append({"coefficients": coefficients, "lo": lo, "hi": hi})
        done += 1
    record.check(
        "%d random Sturm counts agree with sympy" % trials,
        "sympy count_roots on the square-free part",
        not mismatches,
        mismatches=mismatches,
    )
    return [record]


def _random_separated(rng, max_degree):
    """Polynomial in x whose real roots are distinct multiples of 1/7 in
    [-5, 5]; any remaining degree goes to quadratics without real roots."""
    x = MultiPoly.gen("x")
    roots = rng.choice(np.arange(-35, 36), size=int(rng.integers(0, max_degree + 1)), replace=False)
    poly = MultiPoly.constant(int(rng.choice([-3, -2, -1, 1, 2, 3])), ("x",))
    for k in roots:
        poly = poly * (7 * x - int(k))
    while poly.degree() + 2 <= max_degree and rng.random() < 0.5:
        shift, offset = int(rng.integers(-5, 6)), int(rng.integers(1, 10))
        poly = poly * ((x - shift) ** 2 + offset)
    return poly


def _grid_sign_changes(poly, lo, hi):
    """Sign changes along ``lo, lo + 1/7, ..., hi``; grid points are odd
    multiples of 1/14, so none of them is a root."""
    changes, previous = 0, None
    point = lo
    while point <= hi:
        sign = poly.evaluate({"x": point}) > 0
        if previous is not None and sign != previous:
            changes += 1
        previous = sign
        point += 2 * GRID_STEP
    return changes


def check_sturm_grid_oracle(quick, seed):
    """Sturm counts against sign changes on a grid finer than the root
    separation, for random polynomials of degree at most 12."""
    rng = np.random.default_rng(seed)
    record = ProofRecord("sturm grid oracle")
    mismatches = []
    trials = _sizes(quick, 500, 25)
    for _ in range(trials):
        poly = _random_separated(rng, 12)
        a, b = sorted(int(v) for v in rng.integers(-45, 45, 2))
        lo, hi = (2 * a + 1) * GRID_STEP, (2 * b + 1) * GRID_STEP
        expected = (
            _grid_sign_changes(poly, -GRID_BOUND, GRID_BOUND),
            _grid_sign_changes(poly, lo, hi),
        )
        observed = (count_real_roots(poly), count_real_roots(poly, lo, hi))
        if observed != expected or len(isolate_real_roots(poly)) != expected[0]:
            mismatches.append({"poly": str(poly), "lo": lo, "hi": hi})
    record.check(
        "%d random Sturm counts agree with grid sign changes" % trials,
        "sign changes on the 1/7 grid through odd multiples of 1/14",
        not mismatches,
        mismatches=mismatches,
    )
    return [record]


def check_groebner_oracle(quick, seed):
    rng = np.random.default_rng(seed)
    symbols = sympy.symbols("x y")
    variables = ("x", "y")
    record = ProofRecord("groebner oracle")
    mismatches = []
    trials = _sizes(quick, 20, 5)
    done = 0
    while done < trials:
        gens, exprs = [], []
        for _ in range(int(rng.integers(2, 4))):
            terms = {
                (i, j): Fraction(int(rng.integers(-3, 4)))
                for i in range(3)
                for j in range(3 - i)
            }
            poly = MultiPoly(terms={k: v for k, v in terms.items() if v}, variables=variables)
            if poly:
                gens.append(poly)
                exprs.append(
                    sum(int(c) * symbols[0] ** i * symbols[1] ** j for (i, j), c in poly.terms.items())
                )
        if not gens:
            continue
        order = MonomialOrder("grevlex", variables)
        basis = groebner_basis(gens, order)
        expected = sympy.groebner(exprs, *symbols, order="grevlex")
        ours = {g.primitive()[1] for g in basis}
        theirs = {
            parse_poly(str(e).replace("**", "^"), variables).primitive()[1] for e in expected.exprs
        }
        if verify_groebner(basis) or ours != theirs:
            mismatches.append([str(g) for g in gens])
        done += 1
    record.check(
        "%d random bases pass S-polynomial reduction and agree with sympy" % trials,
        "exhaustive S-polynomial reduction; sympy groebner up to units",
        not mismatches,
        mismatches=mismatches,
    )
    return [record]


def check_bounds_oracle(quick, seed):
    rng = np.random.default_rng(seed)
    record = ProofRecord("bounds oracle")
    violations = []
    trials = _sizes(quick, 500, 25)
    for _ in range(trials):
        coefficients = _random_dense(rng, 8)
        poly = MultiPoly.from_dense([Fraction(c) for c in coefficients], "z")
        lo, hi = _random_endpoints(rng)
        lower, upper = bound_on_interval(poly, lo, hi)
        sample = lo + (hi - lo) * Fraction(int(rng.integers(0, 1001)), 1000)
        value = poly.evaluate({"z": sample})
        if not lower <= value <= upper:
            violations.append({"coefficients": coefficients, "sample": sample})
    record.check(
        "bound_on_interval encloses the value at %d random samples" % trials,
        "exact evaluation at a rational sample",
        not violations,
        violations=violations,
    )
    return [record]


SELFTEST_CHECKS = {
    "curve": check_curve,
    "generators": check_generators,
    "irreducibility": check_irreducibility,
    "domains": check_domains,
    "unitarity": check_unitarity,
    "a-polynomial": check_a_polynomial,
    "symmetries": check_symmetries,
    "threshold": check_threshold,
    "positive-slopes": check_positive_slopes,
    "alexander": check_alexander,
    "sturm-oracle": check_sturm_oracle,
    "sturm-grid-oracle": check_sturm_grid_oracle,
    "groebner-oracle": check_groebner_oracle,
    "bounds-oracle": check_bounds_oracle,
}


def run_selftest(inputs):
    """PASS or FAIL per check; a check that raises is a FAIL, not an abort."""
    quick = bool(inputs.get("quick", False))
    seed = inputs.get("seed", 0)
    names = [inputs["check"]] if inputs.get("check") else list(SELFTEST_CHECKS)
    unknown = [name for name in names if name not in SELFTEST_CHECKS]
    if unknown:
        raise UserError("Unknown selftest check %s." % ", ".join(unknown))
    certificates = []
    for name in names:
        _logger.info("selftest: %s", name)
        try:
            records = SELFTEST_CHECKS[name](quick, seed)
        except HolonomyCertError as err:
            _logger.warning("selftest %s failed: %s", name, err)
            failed = ProofRecord(name)
            failed.check(str(err), "raised %s" % type(err).__name__, False)
            records = [failed]
        verdict = "PASS" if all(r.holds for r in records) else "FAIL"
        certificates.append(
            Certificate.from_records(
                "selftest",
                {"check": name, "quick": quick, "seed": seed},
                records,
                verdict,
                seed=seed,
            )
        )
    return certificates
