"""Acceptance suite: ten go/no-go criteria for the verification engine.

Each criterion is a standalone function returning a list of failure
descriptions (empty means the criterion holds). The pytest wrappers print
one ``criterion NN (label): PASS|FAIL`` line each, so a verbose run shows
the full scoreboard; ``scripts/run_acceptance.py`` reuses the same
functions outside pytest.

Pinned tolerances: everything is exact rational equality except criterion 7
(unit- and half-argument sums checked in floats at 1e-10 relative) and
criterion 8 (float cross-checks of the exact matches at 1e-9 relative).
"""

import random
import time
from fractions import Fraction

from hypident.hyper import HypSpec, pfq_series
from hypident.identities import (
    IdentityParams,
    equal_parameter_rhs,
    expand_lowered,
    expand_raised,
    gauss_terminating_sides,
    get,
    product_expansion_rhs,
)
from hypident.reports import compare_series
from hypident.series import TruncatedSeries, exp_series
from hypident.verify import check_admissible, report_for_sides, verify_identity

GRID_ALPHA = Fraction(3, 7)
GRID_BETA = Fraction(2, 5)
VARIANT_TAGS = (("PP", "2.1"), ("MM", "2.2"), ("PM", "2.3"))
RNG_SEED = 20260816

FLOAT_SUM_TOL = 1e-10   # criterion 7
FLOAT_CROSS_TOL = 1e-9  # criterion 8
GRID_BUDGET_SECONDS = 60.0


def _mismatch_text(tag, params, report):
    return f"{tag} at {params.describe()}: status {report.status}"


# -- criterion 1 ------------------------------------------------------------

def criterion_01_product_grid():
    """All three product variants match on the (i, j) in {0..4}^2 grid."""
    failures = []
    start = time.perf_counter()
    for _, tag in VARIANT_TAGS:
        for i in range(5):
            for j in range(5):
                params = IdentityParams(alpha=GRID_ALPHA, beta=GRID_BETA, i=i, j=j)
                if params.effective_cap != 2 * (i + j) + 16:
                    failures.append(f"cap policy broke at i={i}, j={j}")
                report = verify_identity(tag, params, float_points=())
                if report.status != "exact_match":
                    failures.append(_mismatch_text(tag, params, report))
    elapsed = time.perf_counter() - start
    if elapsed >= GRID_BUDGET_SECONDS:
        failures.append(f"grid took {elapsed:.1f}s, budget {GRID_BUDGET_SECONDS:.0f}s")
    return failures


# -- criterion 2 ------------------------------------------------------------

def criterion_02_bailey_reduction():
    """The matched product RHS at zero shift equals the single-series form."""
    failures = []
    for alpha, beta in ((GRID_ALPHA, GRID_BETA), (Fraction(7, 3), Fraction(9, 4))):
        params = IdentityParams(alpha=alpha, beta=beta, cap=30)
        double_sum = product_expansion_rhs("PP", params)
        direct = get("1.10").build_rhs(params)
        for bad in compare_series(double_sum, direct):
            failures.append(
                f"alpha={alpha}, beta={beta}, degree {bad.degree}: "
                f"{bad.lhs} != {bad.rhs}"
            )
    return failures


# -- criterion 3 ------------------------------------------------------------

def criterion_03_preece_reduction():
    """The alternating product collapses to its one-parameter form at beta=alpha."""
    failures = []
    for alpha in (GRID_ALPHA, Fraction(2, 5), Fraction(7, 3)):
        two_param = get("1.7").build_rhs(IdentityParams(alpha=alpha, beta=alpha, cap=30))
        one_param = get("1.6").build_rhs(IdentityParams(alpha=alpha, cap=30))
        if compare_series(two_param, one_param):
            failures.append(f"RHS reduction failed at alpha={alpha}")
        lhs = get("1.6").build_lhs(IdentityParams(alpha=alpha, cap=30))
        odd = [d for d in range(1, lhs.cap + 1, 2) if lhs.coefficient(d) != 0]
        if odd:
            failures.append(f"alternating product has odd terms {odd} at alpha={alpha}")
    return failures


# -- criterion 4 ------------------------------------------------------------

def criterion_04_equal_parameter_consistency():
    """The one-parameter expansions agree with the two-parameter ones at beta=alpha."""
    failures = []
    for variant, _ in VARIANT_TAGS:
        for i in range(4):
            for j in range(4):
                specialized = equal_parameter_rhs(variant, GRID_ALPHA, i, j, cap=24)
                general = product_expansion_rhs(
                    variant,
                    IdentityParams(alpha=GRID_ALPHA, beta=GRID_ALPHA, i=i, j=j, cap=24),
                )
                if compare_series(specialized, general):
                    failures.append(f"{variant} diverges at i={i}, j={j}")
    return failures


# -- criterion 5 ------------------------------------------------------------

def criterion_05_expansion_lemmas():
    """Both single-series expansions match the damped-product oracle."""
    failures = []
    cap = 30
    for alpha in (GRID_ALPHA, Fraction(2, 5), Fraction(7, 3)):
        damping = exp_series(cap, sign=-1, half=True)
        for i in range(5):
            for name, build, lower in (
                ("raised", expand_raised, 2 * alpha + i),
                ("lowered", expand_lowered, 2 * alpha - i),
            ):
                oracle = damping * pfq_series(HypSpec((alpha,), (lower,)), cap)
                if compare_series(build(alpha, i, cap), oracle):
                    failures.append(f"{name} expansion off at alpha={alpha}, i={i}")
        even = pfq_series(HypSpec((), (alpha + Fraction(1, 2),)), cap).substitute_even(16)
        for name, build in (("raised", expand_raised), ("lowered", expand_lowered)):
            if compare_series(build(alpha, 0, cap), even):
                failures.append(f"{name} expansion at i=0 is not the even series, alpha={alpha}")
    return failures


# -- criterion 6 ------------------------------------------------------------

def _sample_rational(rng):
    return Fraction(rng.randint(-50, 50), rng.randint(1, 50))


def _sample_admissible_pairs(rng, tags, count):
    pairs = []
    while len(pairs) < count:
        params = IdentityParams(alpha=_sample_rational(rng), beta=_sample_rational(rng))
        if all(not check_admissible(tag, params) for tag in tags):
            pairs.append(params)
    return pairs


def criterion_06_transformation_checks():
    """Exponential-shift and product transformations hold at random points."""
    failures = []
    rng = random.Random(RNG_SEED)
    for params in _sample_admissible_pairs(rng, ("1.1", "1.2", "1.5"), 20):
        for tag in ("1.1", "1.2", "1.5"):
            point = IdentityParams(alpha=params.alpha, beta=params.beta, cap=40)
            report = verify_identity(tag, point, float_points=())
            if report.status != "exact_match":
                failures.append(_mismatch_text(tag, point, report))
    for params in _sample_admissible_pairs(rng, ("1.11",), 10):
        point = IdentityParams(alpha=params.alpha, beta=params.beta, cap=24)
        report = verify_identity("1.11", point, float_points=())
        if report.status != "exact_match":
            failures.append(_mismatch_text("1.11", point, report))
    for tag in ("1.12", "1.13"):
        for alpha in (GRID_ALPHA, Fraction(2, 5)):
            point = IdentityParams(alpha=alpha, cap=30)
            report = verify_identity(tag, point, float_points=())
            if report.status != "exact_match":
                failures.append(_mismatch_text(tag, point, report))
    return failures


# -- criterion 7 ------------------------------------------------------------

GAUSS_HALF_SAMPLES = (
    (Fraction(1, 3), Fraction(2, 5)),
    (Fraction(1, 2), Fraction(1, 4)),
    (Fraction(-3, 2), Fraction(7, 5)),
    (Fraction(2, 7), Fraction(9, 4)),
    (Fraction(1, 5), Fraction(-1, 3)),
)
UNIT_SUM_SAMPLES = (
    (Fraction(-2), Fraction(1, 3), Fraction(5, 4)),
    (Fraction(-4), Fraction(2, 5), Fraction(7, 3)),
    (Fraction(-6), Fraction(1, 2), Fraction(9, 5)),
    (Fraction(1, 3), Fraction(1, 4), Fraction(4)),
    (Fraction(1, 2), Fraction(3, 2), Fraction(3)),
)


def criterion_07_classical_sums():
    """Terminating sums are exact; evaluation-point sums pass at 1e-10."""
    failures = []
    for n in range(31):
        lhs, rhs = gauss_terminating_sides(n, Fraction(1, 2), Fraction(5, 3))
        if lhs != rhs:
            failures.append(f"terminating sum off at n={n}: {lhs} != {rhs}")
    for a, b in GAUSS_HALF_SAMPLES:
        report = verify_identity(
            "1.4", IdentityParams(alpha=a, beta=b), tol=FLOAT_SUM_TOL
        )
        if report.status != "float_only_pass":
            failures.append(f"half-argument sum failed at a={a}, b={b}")
    for a, b, c in UNIT_SUM_SAMPLES:
        report = verify_identity(
            "1.8", IdentityParams(alpha=a, beta=b, gamma=c), tol=FLOAT_SUM_TOL
        )
        if report.status != "float_only_pass":
            failures.append(f"unit-argument sum failed at a={a}, b={b}, c={c}")
    return failures


# -- criterion 8 ------------------------------------------------------------

def criterion_08_float_consistency():
    """Both sides agree numerically at the standard sample points."""
    failures = []
    for _, tag in VARIANT_TAGS:
        for i in range(3):
            for j in range(3):
                params = IdentityParams(alpha=GRID_ALPHA, beta=GRID_BETA, i=i, j=j)
                report = verify_identity(tag, params)
                if report.status != "exact_match":
                    failures.append(_mismatch_text(tag, params, report))
                    continue
                if not all(r.converged for r in report.float_residuals):
                    failures.append(f"{tag} at i={i}, j={j}: float side did not converge")
                elif report.max_float_residual > FLOAT_CROSS_TOL:
                    failures.append(
                        f"{tag} at i={i}, j={j}: residual "
                        f"{report.max_float_residual:.3e} > {FLOAT_CROSS_TOL:.0e}"
                    )
    return failures


# -- criterion 9 ------------------------------------------------------------

def criterion_09_fault_sensitivity():
    """A single perturbed coefficient is flagged at exactly its degree."""
    failures = []
    rng = random.Random(RNG_SEED)
    for trial in range(10):
        variant, tag = VARIANT_TAGS[rng.randrange(3)]
        params = IdentityParams(
            alpha=GRID_ALPHA, beta=GRID_BETA, i=rng.randint(0, 3), j=rng.randint(0, 3)
        )
        define = get(tag)
        lhs = define.build_lhs(params)
        rhs = define.build_rhs(params)
        degree = rng.randint(0, rhs.cap)
        bumped = list(rhs.coeffs)
        bumped[degree] += Fraction(1, rng.randint(2, 99))
        report = report_for_sides(tag, params, lhs, TruncatedSeries(rhs.cap, tuple(bumped)))
        flagged = [m.degree for m in report.mismatches]
        if report.status != "mismatch" or flagged != [degree]:
            failures.append(
                f"trial {trial}: perturbed degree {degree} of {tag}, "
                f"got status {report.status} with flags {flagged}"
            )
    return failures


# -- criterion 10 -----------------------------------------------------------

def criterion_10_reading_adjudication():
    """The index-matched reading verifies; the printed transcription does not."""
    failures = []
    for i in range(5):
        for j in range(5):
            params = IdentityParams(alpha=GRID_ALPHA, beta=GRID_BETA, i=i, j=j)
            report = verify_identity("2.3", params, float_points=())
            if report.status != "exact_match":
                failures.append(_mismatch_text("2.3", params, report))
            if not any("indexed by n" in note for note in report.notes):
                failures.append(f"report at i={i}, j={j} does not name the reading")
    printed_mismatches = 0
    for i in range(5):
        for j in range(1, 5):
            params = IdentityParams(
                alpha=GRID_ALPHA, beta=GRID_BETA, i=i, j=j, printed_form=True
            )
            report = verify_identity("2.3", params, float_points=())
            if report.status == "mismatch":
                printed_mismatches += 1
            if not any("indexed by m" in note for note in report.notes):
                failures.append(f"printed run at i={i}, j={j} does not name the reading")
    if printed_mismatches == 0:
        failures.append("printed transcription never produced a mismatch for j >= 1")
    return failures


# -- harness ----------------------------------------------------------------

CRITERIA = (
    (1, "product grid, 75 exact cases", criterion_01_product_grid),
    (2, "matched-product reduction at zero shift", criterion_02_bailey_reduction),
    (3, "alternating-product reduction at beta=alpha", criterion_03_preece_reduction),
    (4, "equal-parameter forms match the general ones", criterion_04_equal_parameter_consistency),
    (5, "single-series expansions match the damped product", criterion_05_expansion_lemmas),
    (6, "transformations at random admissible points", criterion_06_transformation_checks),
    (7, "classical sums, exact and 1e-10 float", criterion_07_classical_sums),
    (8, "float cross-check of exact matches at 1e-9", criterion_08_float_consistency),
    (9, "fault injection flags the exact degree", criterion_09_fault_sensitivity),
    (10, "shift-factor reading adjudication", criterion_10_reading_adjudication),
)


def _run(number):
    label, fn = next((lbl, f) for n, lbl, f in CRITERIA if n == number)
    failures = fn()
    verdict = "PASS" if not failures else "FAIL"
    print(f"criterion {number:02d} ({label}): {verdict}")
    assert not failures, f"criterion {number:02d}: " + "; ".join(failures)


def test_criterion_01_product_grid():
    _run(1)


def test_criterion_02_bailey_reduction():
    _run(2)


def test_criterion_03_preece_reduction():
    _run(3)


def test_criterion_04_equal_parameter_consistency():
    _run(4)


def test_criterion_05_expansion_lemmas():
    _run(5)


def test_criterion_06_transformation_checks():
    _run(6)


def test_criterion_07_classical_sums():
    _run(7)


def test_criterion_08_float_consistency():
    _run(8)


def test_criterion_09_fault_sensitivity():
    _run(9)


def test_criterion_10_reading_adjudication():
    _run(10)
