"""The identity catalog: every checkable equation this package knows about.

Each catalog entry pairs two independent constructions of the same object.
For the series identities both sides are produced as exact
:class:`~hypident.series.TruncatedSeries`, the left side by raw Cauchy
products of the factor series and the right side from its structured
closed form, so a single coefficient comparison settles the claim up to
the cap. Two entries are fixed-argument summation theorems whose closed
form is a Gamma-function ratio; those are checked in floating point. One
entry is a terminating sum checked as a single exact scalar equation.

Entries are addressed by stable catalog tags ("1.1" through "3.3"). The
tags are opaque identifiers used by the command line and in reports; the
enum member names say what each identity does.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from time import perf_counter
from typing import Callable

from .hyper import DegenerateParameterError, HypSpec, bailey_product_series, pfq_eval_float, pfq_series
from .rationals import factorial, format_rational, is_nonpositive_integer, pochhammer
from .reports import (
    STATUS_EXACT_MATCH,
    STATUS_FLOAT_ONLY_FAIL,
    STATUS_FLOAT_ONLY_PASS,
    STATUS_MISMATCH,
    CoefficientMismatch,
    FloatResidual,
    ParameterRequirement,
    VerifyReport,
    compare_series,
)
from .series import TruncatedSeries, exp_series

__all__ = [
    "IdentityDef",
    "IdentityId",
    "IdentityParams",
    "VARIANTS",
    "catalog",
    "classical_sum_checks",
    "default_cap",
    "equal_parameter_rhs",
    "expand_lowered",
    "expand_raised",
    "get",
    "kummer_first_check",
    "kummer_second_alt_check",
    "kummer_second_check",
    "preece_bailey_checks",
    "product_expansion_lhs",
    "product_expansion_rhs",
    "contiguous_product_checks",
]

HALF = Fraction(1, 2)

#: Variant labels for the shifted-product family: first letter says whether
#: the first factor's lower parameter is raised (P) or lowered (M) by i,
#: second letter the same for j.
VARIANTS = ("PP", "MM", "PM")

_FLOAT_TOL = 1e-16
_FLOAT_TERMS = 800


class IdentityId(str, Enum):
    """Catalog tags. The value is the stable tag used in CLI and reports."""

    KUMMER_FIRST = "1.1"
    KUMMER_SECOND = "1.2"
    GAUSS_TERMINATING = "1.3"
    GAUSS_SECOND = "1.4"
    KUMMER_SECOND_SCALED = "1.5"
    PREECE_ALTERNATING = "1.6"
    BAILEY_ALTERNATING = "1.7"
    WATSON_UNIT = "1.8"
    PREECE_SQUARED = "1.9"
    BAILEY_MATCHED = "1.10"
    F01_PRODUCT = "1.11"
    CONTIG_RAISED = "1.12"
    CONTIG_LOWERED = "1.13"
    EXPAND_RAISED = "1.17"
    EXPAND_LOWERED = "1.18"
    PRODUCT_PP = "2.1"
    PRODUCT_MM = "2.2"
    PRODUCT_PM = "2.3"
    EQUAL_PARAM_PP = "3.1"
    EQUAL_PARAM_MM = "3.2"
    EQUAL_PARAM_PM = "3.3"


def default_cap(i: int = 0, j: int = 0) -> int:
    """Default truncation degree, comfortably past the x**(m+n) prefactors."""
    return 2 * (i + j) + 16


@dataclass(frozen=True)
class IdentityParams:
    """Parameter bundle for one verification run.

    ``alpha`` and ``beta`` are the free rational parameters (``beta`` is
    ignored by the one-parameter identities), ``i`` and ``j`` the
    nonnegative integer shifts, ``cap`` the truncation degree (None means
    ``default_cap(i, j)``). ``gamma`` is the third rational of the
    unit-argument summation check. ``printed_form`` switches the mixed
    product variant to its alternate transcription; see
    :func:`product_expansion_rhs`.
    """

    alpha: Fraction
    beta: Fraction | None = None
    i: int = 0
    j: int = 0
    cap: int | None = None
    gamma: Fraction | None = None
    printed_form: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.beta is not None:
            object.__setattr__(self, "beta", Fraction(self.beta))
        if self.gamma is not None:
            object.__setattr__(self, "gamma", Fraction(self.gamma))
        if self.i < 0 or self.j < 0:
            raise ValueError("shifts i and j must be nonnegative")
        if self.cap is not None and self.cap < 0:
            raise ValueError("cap must be nonnegative")

    @property
    def effective_cap(self) -> int:
        return self.cap if self.cap is not None else default_cap(self.i, self.j)

    def describe(self) -> str:
        bits = [f"alpha={format_rational(self.alpha)}"]
        if self.beta is not None:
            bits.append(f"beta={format_rational(self.beta)}")
        if self.gamma is not None:
            bits.append(f"gamma={format_rational(self.gamma)}")
        bits.append(f"i={self.i}")
        bits.append(f"j={self.j}")
        bits.append(f"cap={self.effective_cap}")
        if self.printed_form:
            bits.append("printed_form")
        return " ".join(bits)

    def to_json_dict(self) -> dict:
        doc = {
            "alpha": format_rational(self.alpha),
            "beta": format_rational(self.beta) if self.beta is not None else None,
            "i": self.i,
            "j": self.j,
            "cap": self.effective_cap,
        }
        if self.gamma is not None:
            doc["gamma"] = format_rational(self.gamma)
        if self.printed_form:
            doc["printed_form"] = True
        return doc


# --------------------------------------------------------------------------
# small builders shared by several identities


def _f1_series(upper: Fraction, lower: Fraction, cap: int) -> TruncatedSeries:
    return pfq_series(HypSpec((upper,), (lower,)), cap)


def _f01_series(lower: Fraction, cap: int) -> TruncatedSeries:
    return pfq_series(HypSpec((), (lower,)), cap)


def _nonzero_poch(expr: str, base: Fraction, count: int) -> Fraction:
    """Rising factorial that must not vanish (a denominator weight)."""
    value = pochhammer(base, count)
    if value == 0:
        raise DegenerateParameterError(expr, base, int(-base) + 1)
    return value


def _float_pfq(spec: HypSpec, x: float, max_terms: int = _FLOAT_TERMS) -> tuple[float, bool]:
    result = pfq_eval_float(spec, x, tol=_FLOAT_TOL, max_terms=max_terms)
    return result.value, result.converged


def _f1_float(upper: Fraction, lower: Fraction, x: float) -> tuple[float, bool]:
    return _float_pfq(HypSpec((upper,), (lower,)), x)


# A structured right-hand side is a list of (weight, power, spec) terms:
# weight * x**power * pFq(spec; x**2 / divisor), optionally times e**(±x).
# Building the exact series and the float value from the same term list
# keeps the two evaluations of one side consistent by construction; the
# other side of each identity is built along a different route entirely.

Terms = list[tuple[Fraction, int, HypSpec]]


def _terms_series(terms: Terms, cap: int, divisor: int, exp_sign: int | None = None) -> TruncatedSeries:
    total = TruncatedSeries.zero(cap)
    for weight, power, spec in terms:
        if weight == 0:
            continue
        block = pfq_series(spec, cap).substitute_even(divisor).shift(power).scale(weight)
        total = total + block
    if exp_sign is not None:
        total = exp_series(cap, exp_sign) * total
    return total


def _terms_float(terms: Terms, x: float, divisor: int, exp_sign: int | None = None) -> tuple[float, bool]:
    arg = x * x / divisor
    total = 0.0
    ok = True
    for weight, power, spec in terms:
        value, converged = _float_pfq(spec, arg)
        ok = ok and converged
        total += float(weight) * x**power * value
    if exp_sign is not None:
        total *= math.exp(exp_sign * x)
    return total, ok


# --------------------------------------------------------------------------
# expansion of e**(-x/2) 1F1 into shifted 0F1 blocks


def _expand_raised_terms(alpha: Fraction, i: int) -> Terms:
    terms: Terms = []
    for m in range(i + 1):
        # denominator guards run before the zero-numerator shortcut so that
        # a 0/0 weight raises instead of being silently dropped
        den = (
            _nonzero_poch("(2*alpha + i)_m", 2 * alpha + i, m)
            * _nonzero_poch("(alpha - 1/2)_m", alpha - HALF, m)
            * factorial(m)
            * Fraction(4) ** m
        )
        num = pochhammer(Fraction(-i), m) * pochhammer(2 * alpha - 1, m)
        if num == 0:
            continue
        terms.append((num / den, m, HypSpec((), (alpha + m + HALF,))))
    return terms


def _expand_lowered_terms(alpha: Fraction, i: int) -> Terms:
    terms: Terms = []
    for m in range(i + 1):
        den = (
            _nonzero_poch("(2*alpha - i)_m", 2 * alpha - i, m)
            * _nonzero_poch("(alpha - i - 1/2)_m", alpha - i - HALF, m)
            * factorial(m)
            * Fraction(4) ** m
        )
        num = (
            Fraction(-1) ** m
            * pochhammer(Fraction(-i), m)
            * pochhammer(2 * alpha - 2 * i - 1, m)
        )
        if num == 0:
            continue
        terms.append((num / den, m, HypSpec((), (alpha + m - i + HALF,))))
    return terms


def expand_raised(alpha: Fraction | int, i: int, cap: int) -> TruncatedSeries:
    """Structured form of ``e**(-x/2) * 1F1(alpha; 2*alpha + i; x)``.

    A sum over ``m <= i`` of weighted ``x**m * 0F1(; alpha + m + 1/2;
    x**2/16)`` blocks. Degenerate weights raise before any series work.
    """
    if i < 0:
        raise ValueError("shift i must be nonnegative")
    return _terms_series(_expand_raised_terms(Fraction(alpha), i), cap, 16)


def expand_lowered(alpha: Fraction | int, i: int, cap: int) -> TruncatedSeries:
    """Structured form of ``e**(-x/2) * 1F1(alpha; 2*alpha - i; x)``."""
    if i < 0:
        raise ValueError("shift i must be nonnegative")
    return _terms_series(_expand_lowered_terms(Fraction(alpha), i), cap, 16)


# --------------------------------------------------------------------------
# the shifted-product family: 1F1(alpha; 2*alpha +/- i; x) * 1F1(beta; 2*beta +/- j; x)


def _product_lower_params(variant: str, alpha: Fraction, beta: Fraction, i: int, j: int) -> tuple[Fraction, Fraction]:
    first = 2 * alpha + i if variant[0] == "P" else 2 * alpha - i
    second = 2 * beta + j if variant[1] == "P" else 2 * beta - j
    return first, second


def _product_term(
    variant: str,
    alpha: Fraction,
    beta: Fraction,
    i: int,
    j: int,
    m: int,
    n: int,
    printed_form: bool = False,
) -> tuple[Fraction, HypSpec]:
    """Weight and inner-series parameters of one (m, n) summand.

    The mixed variant carries two transcriptions of its second shift
    factor: the default indexes it by n (the reading the raw-product
    comparison confirms); printed_form indexes it by m instead, which is
    only useful for demonstrating the disagreement.
    """
    if variant == "PP":
        sign = Fraction(1)
        num = (
            pochhammer(Fraction(-i), m)
            * pochhammer(Fraction(-j), n)
            * pochhammer(2 * alpha - 1, m)
            * pochhammer(2 * beta - 1, n)
        )
        den = (
            _nonzero_poch("(2*alpha + i)_m", 2 * alpha + i, m)
            * _nonzero_poch("(2*beta + j)_n", 2 * beta + j, n)
            * _nonzero_poch("(alpha - 1/2)_m", alpha - HALF, m)
            * _nonzero_poch("(beta - 1/2)_n", beta - HALF, n)
        )
        shift_sum = m + n
        first_lower = alpha + m + HALF
        second_lower = beta + n + HALF
    elif variant == "MM":
        sign = Fraction(-1) ** (m + n)
        num = (
            pochhammer(Fraction(-i), m)
            * pochhammer(Fraction(-j), n)
            * pochhammer(2 * alpha - 2 * i - 1, m)
            * pochhammer(2 * beta - 2 * j - 1, n)
        )
        den = (
            _nonzero_poch("(2*alpha - i)_m", 2 * alpha - i, m)
            * _nonzero_poch("(2*beta - j)_n", 2 * beta - j, n)
            * _nonzero_poch("(alpha - i - 1/2)_m", alpha - i - HALF, m)
            * _nonzero_poch("(beta - j - 1/2)_n", beta - j - HALF, n)
        )
        shift_sum = m + n - i - j
        first_lower = alpha + m - i + HALF
        second_lower = beta + n - j + HALF
    elif variant == "PM":
        sign = Fraction(-1) ** n
        second_shift = pochhammer(Fraction(-j), m if printed_form else n)
        num = (
            pochhammer(Fraction(-i), m)
            * second_shift
            * pochhammer(2 * alpha - 1, m)
            * pochhammer(2 * beta - 2 * j - 1, n)
        )
        den = (
            _nonzero_poch("(2*alpha + i)_m", 2 * alpha + i, m)
            * _nonzero_poch("(2*beta - j)_n", 2 * beta - j, n)
            * _nonzero_poch("(alpha - 1/2)_m", alpha - HALF, m)
            * _nonzero_poch("(beta - j - 1/2)_n", beta - j - HALF, n)
        )
        shift_sum = m + n - j
        first_lower = alpha + m + HALF
        second_lower = beta + n - j + HALF
    else:
        raise ValueError(f"unknown variant {variant!r}, expected one of {VARIANTS}")

    weight = sign * num / (den * factorial(m) * factorial(n) * Fraction(4) ** (m + n))
    s = alpha + beta + shift_sum
    spec = HypSpec(
        upper=((s + 1) / 2, s / 2),
        lower=(first_lower, second_lower, s),
    )
    return weight, spec


def _product_terms(variant: str, params: IdentityParams, beta: Fraction | None = None) -> Terms:
    alpha = params.alpha
    if beta is None:
        beta = params.beta
    terms: Terms = []
    for m in range(params.i + 1):
        for n in range(params.j + 1):
            weight, spec = _product_term(
                variant, alpha, beta, params.i, params.j, m, n, params.printed_form
            )
            if weight != 0:
                terms.append((weight, m + n, spec))
    return terms


def product_expansion_lhs(variant: str, params: IdentityParams) -> TruncatedSeries:
    """Raw product side: the two confluent factors Cauchy-multiplied.

    No structure from the closed form is reused here; this is the oracle
    the structured side is judged against.
    """
    cap = params.effective_cap
    first, second = _product_lower_params(variant, params.alpha, params.beta, params.i, params.j)
    return _f1_series(params.alpha, first, cap) * _f1_series(params.beta, second, cap)


def product_expansion_rhs(variant: str, params: IdentityParams) -> TruncatedSeries:
    """Structured side: e**x times the double sum of weighted 2F3 blocks.

    The mixed variant defaults to the transcription whose second shift
    factor is indexed by n, which is the reading the raw product confirms;
    ``params.printed_form`` selects the m-indexed transcription instead,
    which disagrees with the product at every nonzero shift.
    """
    cap = params.effective_cap
    return _terms_series(_product_terms(variant, params), cap, 4, exp_sign=1)


def _product_lhs_float(variant: str, params: IdentityParams, x: float) -> tuple[float, bool]:
    first, second = _product_lower_params(variant, params.alpha, params.beta, params.i, params.j)
    a_val, a_ok = _f1_float(params.alpha, first, x)
    b_val, b_ok = _f1_float(params.beta, second, x)
    return a_val * b_val, a_ok and b_ok


def _product_rhs_float(variant: str, params: IdentityParams, x: float) -> tuple[float, bool]:
    return _terms_float(_product_terms(variant, params), x, 4, exp_sign=1)


# --------------------------------------------------------------------------
# equal-parameter forms of the shifted products (beta = alpha), written out
# from their own single-parameter closed forms rather than by substitution


def _equal_param_term(
    variant: str,
    alpha: Fraction,
    i: int,
    j: int,
    m: int,
    n: int,
    printed_form: bool = False,
) -> tuple[Fraction, HypSpec]:
    if variant == "PP":
        sign = Fraction(1)
        num = (
            pochhammer(Fraction(-i), m)
            * pochhammer(Fraction(-j), n)
            * pochhammer(2 * alpha - 1, m)
            * pochhammer(2 * alpha - 1, n)
        )
        den = (
            _nonzero_poch("(2*alpha + i)_m", 2 * alpha + i, m)
            * _nonzero_poch("(2*alpha + j)_n", 2 * alpha + j, n)
            * _nonzero_poch("(alpha - 1/2)_m", alpha - HALF, m)
            * _nonzero_poch("(alpha - 1/2)_n", alpha - HALF, n)
        )
        shift_sum = m + n
        first_lower = alpha + m + HALF
        second_lower = alpha + n + HALF
    elif variant == "MM":
        sign = Fraction(-1) ** (m + n)
        num = (
            pochhammer(Fraction(-i), m)
            * pochhammer(Fraction(-j), n)
            * pochhammer(2 * alpha - 2 * i - 1, m)
            * pochhammer(2 * alpha - 2 * j - 1, n)
        )
        den = (
            _nonzero_poch("(2*alpha - i)_m", 2 * alpha - i, m)
            * _nonzero_poch("(2*alpha - j)_n", 2 * alpha - j, n)
            * _nonzero_poch("(alpha - i - 1/2)_m", alpha - i - HALF, m)
            * _nonzero_poch("(alpha - j - 1/2)_n", alpha - j - HALF, n)
        )
        shift_sum = m + n - i - j
        first_lower = alpha + m - i + HALF
        second_lower = alpha + n - j + HALF
    elif variant == "PM":
        sign = Fraction(-1) ** n
        second_shift = pochhammer(Fraction(-j), m if printed_form else n)
        num = (
            pochhammer(Fraction(-i), m)
            * second_shift
            * pochhammer(2 * alpha - 1, m)
            * pochhammer(2 * alpha - 2 * j - 1, n)
        )
        den = (
            _nonzero_poch("(2*alpha + i)_m", 2 * alpha + i, m)
            * _nonzero_poch("(2*alpha - j)_n", 2 * alpha - j, n)
            * _nonzero_poch("(alpha - 1/2)_m", alpha - HALF, m)
            * _nonzero_poch("(alpha - j - 1/2)_n", alpha - j - HALF, n)
        )
        shift_sum = m + n - j
        first_lower = alpha + m + HALF
        second_lower = alpha + n - j + HALF
    else:
        raise ValueError(f"unknown variant {variant!r}, expected one of {VARIANTS}")

    weight = sign * num / (den * factorial(m) * factorial(n) * Fraction(4) ** (m + n))
    s = 2 * alpha + shift_sum
    spec = HypSpec(
        upper=((s + 1) / 2, s / 2),
        lower=(first_lower, second_lower, s),
    )
    return weight, spec


def _equal_param_terms(variant: str, params: IdentityParams) -> Terms:
    terms: Terms = []
    for m in range(params.i + 1):
        for n in range(params.j + 1):
            weight, spec = _equal_param_term(
                variant, params.alpha, params.i, params.j, m, n, params.printed_form
            )
            if weight != 0:
                terms.append((weight, m + n, spec))
    return terms


def equal_parameter_rhs(
    variant: str,
    alpha: Fraction | int,
    i: int,
    j: int,
    cap: int,
    printed_form: bool = False,
) -> TruncatedSeries:
    """Single-parameter closed form of the shifted product at beta = alpha.

    Written out from its own formula (only alpha appears), so comparing it
    against the two-parameter structured side at beta = alpha is a real
    consistency check rather than a tautology.
    """
    params = IdentityParams(alpha=alpha, i=i, j=j, cap=cap, printed_form=printed_form)
    return _terms_series(_equal_param_terms(variant, params), cap, 4, exp_sign=1)


def _equal_param_lhs(variant: str, params: IdentityParams) -> TruncatedSeries:
    cap = params.effective_cap
    first, second = _product_lower_params(variant, params.alpha, params.alpha, params.i, params.j)
    return _f1_series(params.alpha, first, cap) * _f1_series(params.alpha, second, cap)


def _equal_param_lhs_float(variant: str, params: IdentityParams, x: float) -> tuple[float, bool]:
    first, second = _product_lower_params(variant, params.alpha, params.alpha, params.i, params.j)
    a_val, a_ok = _f1_float(params.alpha, first, x)
    b_val, b_ok = _f1_float(params.alpha, second, x)
    return a_val * b_val, a_ok and b_ok


def _equal_param_rhs_float(variant: str, params: IdentityParams, x: float) -> tuple[float, bool]:
    return _terms_float(_equal_param_terms(variant, params), x, 4, exp_sign=1)


# --------------------------------------------------------------------------
# scalar closed forms checked at a fixed argument


def _gamma_ratio(numerators: list[Fraction], denominators: list[Fraction]) -> float:
    """Ratio of Gamma factors in double precision.

    A pole in a denominator factor contributes a zero to the ratio, so the
    whole value is 0.0; a pole in a numerator factor leaves the ratio
    undefined and raises.
    """
    for g in numerators:
        if is_nonpositive_integer(g):
            raise DegenerateParameterError(f"Gamma({format_rational(g)})", g, 0)
    for g in denominators:
        if is_nonpositive_integer(g):
            return 0.0
    value = 1.0
    for g in numerators:
        value *= math.gamma(float(g))
    for g in denominators:
        value /= math.gamma(float(g))
    return value


def gauss_terminating_sides(n: int, b: Fraction, c: Fraction) -> tuple[Fraction, Fraction]:
    """Both sides of the terminating unit-argument sum, exactly.

    Left: sum_{k<=n} (-n)_k (b)_k / ((c)_k k!). Right: (c-b)_n / (c)_n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    b = Fraction(b)
    c = Fraction(c)
    _nonzero_poch("(c)_n", c, n)
    lhs = Fraction(0)
    for k in range(n + 1):
        lhs += (
            pochhammer(Fraction(-n), k)
            * pochhammer(b, k)
            / (_nonzero_poch("(c)_k", c, k) * factorial(k))
        )
    rhs = pochhammer(c - b, n) / pochhammer(c, n)
    return lhs, rhs


def gauss_second_sides_float(a: Fraction, b: Fraction) -> tuple[float, float, bool]:
    """Half-argument 2F1 sum against its Gamma-ratio closed form."""
    a = Fraction(a)
    b = Fraction(b)
    spec = HypSpec((a, b), ((a + b + 1) / 2,))
    lhs = pfq_eval_float(spec, 0.5, tol=_FLOAT_TOL, max_terms=600)
    rhs = _gamma_ratio(
        [HALF, (a + b + 1) / 2],
        [(a + 1) / 2, (b + 1) / 2],
    )
    return lhs.value, rhs, lhs.converged


def watson_unit_sides_float(a: Fraction, b: Fraction, c: Fraction) -> tuple[float, float, bool]:
    """Unit-argument 3F2 sum against its Gamma-ratio closed form.

    The sum converges only polynomially at the unit argument, so the term
    budget is generous; terminating parameter choices (a or b a nonpositive
    integer) finish quickly.
    """
    a = Fraction(a)
    b = Fraction(b)
    c = Fraction(c)
    spec = HypSpec((a, b, c), ((a + b + 1) / 2, 2 * c))
    lhs = pfq_eval_float(spec, 1.0, tol=_FLOAT_TOL, max_terms=400_000)
    rhs = _gamma_ratio(
        [HALF, c + HALF, (a + b + 1) / 2, c - (a + b) / 2 + HALF],
        [(a + 1) / 2, (b + 1) / 2, c - a / 2 + HALF, c - b / 2 + HALF],
    )
    return lhs.value, rhs, lhs.converged


# --------------------------------------------------------------------------
# requirement enumerations (admissibility, checked before any building)


def _req_lower(expr: str, value: Fraction, where: str = "") -> ParameterRequirement:
    return ParameterRequirement("lower", expr, value, where=where)


def _req_poch(expr: str, value: Fraction, max_index: int) -> ParameterRequirement:
    return ParameterRequirement("poch", expr, value, max_index=max_index)


def _expand_requirements(params: IdentityParams, raised: bool) -> list[ParameterRequirement]:
    alpha, i = params.alpha, params.i
    if raised:
        reqs = [
            _req_lower("2*alpha + i", 2 * alpha + i),
            _req_poch("(2*alpha + i)_m", 2 * alpha + i, i),
            _req_poch("(alpha - 1/2)_m", alpha - HALF, i),
        ]
        reqs += [
            _req_lower("alpha + m + 1/2", alpha + m + HALF, where=f"summand m={m}")
            for m in range(i + 1)
        ]
    else:
        reqs = [
            _req_lower("2*alpha - i", 2 * alpha - i),
            _req_poch("(2*alpha - i)_m", 2 * alpha - i, i),
            _req_poch("(alpha - i - 1/2)_m", alpha - i - HALF, i),
        ]
        reqs += [
            _req_lower("alpha + m - i + 1/2", alpha + m - i + HALF, where=f"summand m={m}")
            for m in range(i + 1)
        ]
    return reqs


def _product_requirements(variant: str, params: IdentityParams, equal_param: bool = False) -> list[ParameterRequirement]:
    alpha = params.alpha
    beta = alpha if equal_param else params.beta
    i, j = params.i, params.j
    b_name = "alpha" if equal_param else "beta"
    reqs: list[ParameterRequirement] = []

    if variant[0] == "P":
        reqs.append(_req_lower("2*alpha + i", 2 * alpha + i))
        reqs.append(_req_poch("(2*alpha + i)_m", 2 * alpha + i, i))
        reqs.append(_req_poch("(alpha - 1/2)_m", alpha - HALF, i))
        first_lowers = [("alpha + m + 1/2", alpha + m + HALF, f"summand m={m}") for m in range(i + 1)]
    else:
        reqs.append(_req_lower("2*alpha - i", 2 * alpha - i))
        reqs.append(_req_poch("(2*alpha - i)_m", 2 * alpha - i, i))
        reqs.append(_req_poch("(alpha - i - 1/2)_m", alpha - i - HALF, i))
        first_lowers = [("alpha + m - i + 1/2", alpha + m - i + HALF, f"summand m={m}") for m in range(i + 1)]

    if variant[1] == "P":
        reqs.append(_req_lower(f"2*{b_name} + j", 2 * beta + j))
        reqs.append(_req_poch(f"(2*{b_name} + j)_n", 2 * beta + j, j))
        reqs.append(_req_poch(f"({b_name} - 1/2)_n", beta - HALF, j))
        second_lowers = [(f"{b_name} + n + 1/2", beta + n + HALF, f"summand n={n}") for n in range(j + 1)]
    else:
        reqs.append(_req_lower(f"2*{b_name} - j", 2 * beta - j))
        reqs.append(_req_poch(f"(2*{b_name} - j)_n", 2 * beta - j, j))
        reqs.append(_req_poch(f"({b_name} - j - 1/2)_n", beta - j - HALF, j))
        second_lowers = [(f"{b_name} + n - j + 1/2", beta + n - j + HALF, f"summand n={n}") for n in range(j + 1)]

    for expr, value, where in first_lowers + second_lowers:
        reqs.append(_req_lower(expr, value, where=where))

    # third lower parameter of every 2F3 block: alpha + beta plus a shift
    # that runs over m (P: 0..i, M: m-i) and n (P: 0..j, M: n-j)
    s_name = "2*alpha" if equal_param else "alpha + beta"
    s_base = alpha + beta
    s_values = set()
    for m in range(i + 1):
        for n in range(j + 1):
            shift = (m if variant[0] == "P" else m - i) + (n if variant[1] == "P" else n - j)
            s_values.add(shift)
    for shift in sorted(s_values):
        sign = "+" if shift >= 0 else "-"
        expr = f"{s_name} {sign} {abs(shift)}" if shift != 0 else s_name
        reqs.append(_req_lower(expr, s_base + shift, where=f"summand shift {shift}"))
    return reqs


def _watson_requirements(params: IdentityParams) -> list[ParameterRequirement]:
    a, b, c = params.alpha, params.beta, params.gamma
    reqs = [
        _req_lower("(alpha + beta + 1)/2", (a + b + 1) / 2),
        _req_lower("2*gamma", 2 * c),
        ParameterRequirement("gamma", "gamma + 1/2", c + HALF),
        ParameterRequirement("gamma", "gamma - (alpha + beta)/2 + 1/2", c - (a + b) / 2 + HALF),
    ]
    terminating = any(is_nonpositive_integer(u) for u in (a, b, c))
    if not terminating:
        reqs.append(
            ParameterRequirement("positive", "2*gamma - alpha - beta + 1", 2 * c - a - b + 1)
        )
    return reqs


# --------------------------------------------------------------------------
# the catalog


@dataclass(frozen=True)
class IdentityDef:
    """One catalog entry: how to build, evaluate, and sanity-check it.

    ``kind`` is "series" (both sides are exact truncated series, float
    evaluation is advisory), "exact_sum" (one exact scalar equation), or
    "float_sum" (scalar closed form checked in floating point at
    ``fixed_argument``).
    """

    id: IdentityId
    name: str
    summary: str
    uses: tuple[str, ...]
    kind: str
    build_lhs: Callable[[IdentityParams], TruncatedSeries] | None = None
    build_rhs: Callable[[IdentityParams], TruncatedSeries] | None = None
    lhs_float: Callable[[IdentityParams, float], tuple[float, bool]] | None = None
    rhs_float: Callable[[IdentityParams, float], tuple[float, bool]] | None = None
    scalar_exact: Callable[[IdentityParams], tuple[Fraction, Fraction]] | None = None
    scalar_float: Callable[[IdentityParams], tuple[float, float, bool]] | None = None
    requirements: Callable[[IdentityParams], list[ParameterRequirement]] = lambda params: []
    notes: Callable[[IdentityParams], tuple[str, ...]] | None = None
    fixed_argument: float | None = None

    @property
    def tag(self) -> str:
        return self.id.value

    def validate_params(self, params: IdentityParams) -> None:
        if "beta" in self.uses and params.beta is None:
            raise ValueError(f"identity {self.tag} needs beta")
        if "gamma" in self.uses and params.gamma is None:
            raise ValueError(f"identity {self.tag} needs gamma")


_PM_NOTE_DEFAULT = (
    "mixed variant built with the second shift factor indexed by n "
    "(the reading the raw-product comparison confirms)"
)
_PM_NOTE_PRINTED = (
    "printed-form run: second shift factor indexed by m instead of n; "
    "disagrees with the raw product at every shift except i = j = 0"
)


def _pm_notes(params: IdentityParams) -> tuple[str, ...]:
    return (_PM_NOTE_PRINTED if params.printed_form else _PM_NOTE_DEFAULT,)


def _build_registry() -> dict[IdentityId, IdentityDef]:
    defs: list[IdentityDef] = []

    def cap_of(params: IdentityParams) -> int:
        return params.effective_cap

    # ---- two-parameter exponential-shift transformation

    def kummer_first_lhs(p: IdentityParams) -> TruncatedSeries:
        return exp_series(cap_of(p), -1) * _f1_series(p.alpha, p.beta, cap_of(p))

    def kummer_first_rhs(p: IdentityParams) -> TruncatedSeries:
        return _f1_series(p.beta - p.alpha, p.beta, cap_of(p)).scale_argument(-1)

    def kummer_first_lhs_float(p: IdentityParams, x: float) -> tuple[float, bool]:
        value, ok = _f1_float(p.alpha, p.beta, x)
        return math.exp(-x) * value, ok

    def kummer_first_rhs_float(p: IdentityParams, x: float) -> tuple[float, bool]:
        return _f1_float(p.beta - p.alpha, p.beta, -x)

    defs.append(IdentityDef(
        id=IdentityId.KUMMER_FIRST,
        name="kummer-first",
        summary="e^(-x) 1F1(alpha; beta; x) = 1F1(beta - alpha; beta; -x)",
        uses=("alpha", "beta"),
        kind="series",
        build_lhs=kummer_first_lhs,
        build_rhs=kummer_first_rhs,
        lhs_float=kummer_first_lhs_float,
        rhs_float=kummer_first_rhs_float,
        requirements=lambda p: [_req_lower("beta", p.beta)],
    ))

    # ---- half-exponential square-argument transformations

    def halved_reqs(p: IdentityParams) -> list[ParameterRequirement]:
        return [
            _req_lower("2*alpha", 2 * p.alpha),
            _req_lower("alpha + 1/2", p.alpha + HALF),
        ]

    def kummer_second_lhs(p: IdentityParams) -> TruncatedSeries:
        return exp_series(cap_of(p), -1, half=True) * _f1_series(p.alpha, 2 * p.alpha, cap_of(p))

    def kummer_second_rhs(p: IdentityParams) -> TruncatedSeries:
        return _f01_series(p.alpha + HALF, cap_of(p)).substitute_even(16)

    def kummer_second_lhs_float(p: IdentityParams, x: float) -> tuple[float, bool]:
        value, ok = _f1_float(p.alpha, 2 * p.alpha, x)
        return math.exp(-x / 2) * value, ok

    def kummer_second_rhs_float(p: IdentityParams, x: float) -> tuple[float, bool]:
        return _float_pfq(HypSpec((), (p.alpha + HALF,)), x * x / 16)

    defs.append(IdentityDef(
        id=IdentityId.KUMMER_SECOND,
        name="kummer-second",
        summary="e^(-x/2) 1F1(alpha; 2*alpha; x) = 0F1(; alpha + 1/2; x^2/16)",
        uses=("alpha",),
        kind="series",
        build_lhs=kummer_second_lhs,
        build_rhs=kummer_second_rhs,
        lhs_float=kummer_second_lhs_float,
        rhs_float=kummer_second_rhs_float,
        requirements=halved_reqs,
    ))

    def kummer_scaled_lhs(p: IdentityParams) -> TruncatedSeries:
        return _f1_series(p.alpha, 2 * p.alpha, cap_of(p)).scale_argument(2)

    def kummer_scaled_rhs(p: IdentityParams) -> TruncatedSeries:
        return _terms_series(
            [(Fraction(1), 0, HypSpec((), (p.alpha + HALF,)))], cap_of(p), 4, exp_sign=1
        )

    def kummer_scaled_lhs_float(p: IdentityParams, x: float) -> tuple[float, bool]:
        return _f1_float(p.alpha, 2 * p.alpha, 2 * x)

    def kummer_scaled_rhs_float(p: IdentityParams, x: float) -> tuple[float, bool]:
        return _terms_float(
            [(Fraction(1), 0, HypSpec((), (p.alpha + HALF,)))], x, 4, exp_sign=1
        )

    defs.append(IdentityDef(
        id=IdentityId.KUMMER_SECOND_SCALED,
        name="kummer-second-scaled",
        summary="1F1(alpha; 2*alpha; 2x) = e^x 0F1(; alpha + 1/2; x^2/4)",
        uses=("alpha",),
        kind="series",
        build_lhs=kummer_scaled_lhs,
        build_rhs=kummer_scaled_rhs,
        lhs_float=kummer_scaled_lhs_float,
        rhs_float=kummer_scaled_rhs_float,
        requirements=halved_reqs,
    ))

    # ---- alternating and matched products of two confluent factors

    def preece_terms(p: IdentityParams) -> Terms:
        return [(Fraction(1), 0, HypSpec((p.alpha,), (p.alpha + HALF, 2 * p.alpha)))]

    def preece_alt_lhs(p: IdentityParams) -> TruncatedSeries:
        factor = _f1_series(p.alpha, 2 * p.alpha, cap_of(p))
        return factor * factor.scale_argument(-1)

    def preece_alt_rhs(p: IdentityParams) -> TruncatedSeries:
        return _terms_series(preece_terms(p), cap_of(p), 4)

    def preece_alt_lhs_float(p: IdentityParams, x: float) -> tuple[float, bool]:
        a_val, a_ok = _f1_float(p.alpha, 2 * p.alpha, x)
        b_val, b_ok = _f1_float(p.alpha, 2 * p.alpha, -x)
        return a_val * b_val, a_ok and b_ok

    def preece_alt_rhs_float(p: IdentityParams, x: float) -> tuple[float, bool]:
        return _terms_float(preece_terms(p), x, 4)

    defs.append(IdentityDef(
        id=IdentityId.PREECE_ALTERNATING,
        name="preece-alternating",
        summary="1F1(alpha; 2*alpha; x) 1F1(alpha; 2*alpha; -x) = 1F2(alpha; alpha + 1/2, 2*alpha; x^2/4)",
        uses=("alpha",),
        kind="series",
        build_lhs=preece_alt_lhs,
        build_rhs=preece_alt_rhs,
        lhs_float=preece_alt_lhs_float,
        rhs_float=preece_alt_rhs_float,
        requirements=halved_reqs,
    ))

    def preece_sq_lhs(p: IdentityParams) -> TruncatedSeries:
        factor = _f1_series(p.alpha, 2 * p.alpha, cap_of(p))
        return factor * factor

    def preece_sq_rhs(p: IdentityParams) -> TruncatedSeries:
        return _terms_series(preece_terms(p), cap_of(p), 4, exp_sign=1)

    def preece_sq_lhs_float(p: IdentityParams, x: float) -> tuple[float, bool]:
        value, ok = _f1_float(p.alpha, 2 * p.alpha, x)
        return value * value, ok

    def preece_sq_rhs_float(p: IdentityParams, x: float) -> tuple[float, bool]:
        return _terms_float(preece_terms(p), x, 4, exp_sign=1)

    defs.append(IdentityDef(
        id=IdentityId.PREECE_SQUARED,
        name="preece-squared",
        summary="[1F1(alpha; 2*alpha; x)]^2 = e^x 1F2(alpha; alpha + 1/2, 2*alpha; x^2/4)",
        uses=("alpha",),
        kind="series",
        build_lhs=preece_sq_lhs,
        build_rhs=preece_sq_rhs,
        lhs_float=preece_sq_lhs_float,
        rhs_float=preece_sq_rhs_float,
        requirements=halved_reqs,
    ))

    def bailey_reqs(p: IdentityParams) -> list[ParameterRequirement]:
        return [
            _req_lower("2*alpha", 2 * p.alpha),
            _req_lower("2*beta", 2 * p.beta),
            _req_lower("alpha + 1/2", p.alpha + HALF),
            _req_lower("beta + 1/2", p.beta + HALF),
            _req_lower("alpha + beta", p.alpha + p.beta),
        ]

    def bailey_terms(p: IdentityParams) -> Terms:
        s = p.alpha + p.beta
        spec = HypSpec(
            upper=(s / 2, (s + 1) / 2),
            lower=(p.alpha + HALF, p.beta + HALF, s),
        )
        return [(Fraction(1), 0, spec)]

    def bailey_alt_lhs(p: IdentityParams) -> TruncatedSeries:
        return (
            _f1_series(p.alpha, 2 * p.alpha, cap_of(p))
            * _f1_series(p.beta, 2 * p.beta, cap_of(p)).scale_argument(-1)
        )

    def bailey_alt_rhs(p: IdentityParams) -> TruncatedSeries:
        return _terms_series(bailey_terms(p), cap_of(p), 4)

    def bailey_alt_lhs_float(p: IdentityParams, x: float) -> tuple[float, bool]:
        a_val, a_ok = _f1_float(p.alpha, 2 * p.alpha, x)
        b_val, b_ok = _f1_float(p.beta, 2 * p.beta, -x)
        return a_val * b_val, a_ok and b_ok

    def bailey_alt_rhs_float(p: IdentityParams, x: float) -> tuple[float, bool]:
        return _terms_float(bailey_terms(p), x, 4)

    defs.append(IdentityDef(
        id=IdentityId.BAILEY_ALTERNATING,
        name="bailey-alternating",
        summary="1F1(alpha; 2*alpha; x) 1F1(beta; 2*beta; -x) = 2F3((alpha+beta)/2, (alpha+beta+1)/2; alpha + 1/2, beta + 1/2, alpha + beta; x^2/4)",
        uses=("alpha", "beta"),
        kind="series",
        build_lhs=bailey_alt_lhs,
        build_rhs=bailey_alt_rhs,
        lhs_float=bailey_alt_lhs_float,
        rhs_float=bailey_alt_rhs_float,
        requirements=bailey_reqs,
    ))

    def bailey_matched_lhs(p: IdentityParams) -> TruncatedSeries:
        return (
            _f1_series(p.alpha, 2 * p.alpha, cap_of(p))
            * _f1_series(p.beta, 2 * p.beta, cap_of(p))
        )

    def bailey_matched_rhs(p: IdentityParams) -> TruncatedSeries:
        return _terms_series(bailey_terms(p), cap_of(p), 4, exp_sign=1)

    def bailey_matched_lhs_float(p: IdentityParams, x: float) -> tuple[float, bool]:
        a_val, a_ok = _f1_float(p.alpha, 2 * p.alpha, x)
        b_val, b_ok = _f1_float(p.beta, 2 * p.beta, x)
        return a_val * b_val, a_ok and b_ok

    def bailey_matched_rhs_float(p: IdentityParams, x: float) -> tuple[float, bool]:
        return _terms_float(bailey_terms(p), x, 4, exp_sign=1)

    defs.append(IdentityDef(
        id=IdentityId.BAILEY_MATCHED,
        name="bailey-matched",
        summary="1F1(alpha; 2*alpha; x) 1F1(beta; 2*beta; x) = e^x 2F3(...; x^2/4), same block as 1.7",
        uses=("alpha", "beta"),
        kind="series",
        build_lhs=bailey_matched_lhs,
        build_rhs=bailey_matched_rhs,
        lhs_float=bailey_matched_lhs_float,
        rhs_float=bailey_matched_rhs_float,
        requirements=bailey_reqs,
    ))

    # ---- product of two 0F1 factors as one 2F3

    def f01_product_lhs(p: IdentityParams) -> TruncatedSeries:
        return _f01_series(p.alpha, cap_of(p)) * _f01_series(p.beta, cap_of(p))

    def f01_product_rhs(p: IdentityParams) -> TruncatedSeries:
        return bailey_product_series(p.alpha, p.beta, cap_of(p))

    def f01_product_lhs_float(p: IdentityParams, x: float) -> tuple[float, bool]:
        a_val, a_ok = _float_pfq(HypSpec((), (p.alpha,)), x)
        b_val, b_ok = _float_pfq(HypSpec((), (p.beta,)), x)
        return a_val * b_val, a_ok and b_ok

    def f01_product_rhs_float(p: IdentityParams, x: float) -> tuple[float, bool]:
        s = p.alpha + p.beta
        spec = HypSpec(upper=(s / 2, (s - 1) / 2), lower=(p.alpha, p.beta, s - 1))
        return _float_pfq(spec, 4 * x)

    defs.append(IdentityDef(
        id=IdentityId.F01_PRODUCT,
        name="f01-product",
        summary="0F1(; alpha; t) 0F1(; beta; t) = 2F3((alpha+beta)/2, (alpha+beta-1)/2; alpha, beta, alpha+beta-1; 4t)",
        uses=("alpha", "beta"),
        kind="series",
        build_lhs=f01_product_lhs,
        build_rhs=f01_product_rhs,
        lhs_float=f01_product_lhs_float,
        rhs_float=f01_product_rhs_float,
        requirements=lambda p: [
            _req_lower("alpha", p.alpha),
            _req_lower("beta", p.beta),
            _req_lower("alpha + beta - 1", p.alpha + p.beta - 1),
        ],
    ))

    # ---- contiguous products (lower parameter off by one)

    def contig_raised_terms(p: IdentityParams) -> Terms:
        a = p.alpha
        head = HypSpec((a,), (a + HALF, 2 * a))
        tail = HypSpec((a + 1,), (a + Fraction(3, 2), 2 * a + 1))
        return [
            (Fraction(1), 0, head),
            (Fraction(-1) / (2 * (2 * a + 1)), 1, tail),
        ]

    def contig_raised_lhs(p: IdentityParams) -> TruncatedSeries:
        return (
            _f1_series(p.alpha, 2 * p.alpha, cap_of(p))
            * _f1_series(p.alpha, 2 * p.alpha + 1, cap_of(p))
        )

    def contig_raised_rhs(p: IdentityParams) -> TruncatedSeries:
        return _terms_series(contig_raised_terms(p), cap_of(p), 4, exp_sign=1)

    def contig_raised_lhs_float(p: IdentityParams, x: float) -> tuple[float, bool]:
        a_val, a_ok = _f1_float(p.alpha, 2 * p.alpha, x)
        b_val, b_ok = _f1_float(p.alpha, 2 * p.alpha + 1, x)
        return a_val * b_val, a_ok and b_ok

    def contig_raised_rhs_float(p: IdentityParams, x: float) -> tuple[float, bool]:
        return _terms_float(contig_raised_terms(p), x, 4, exp_sign=1)

    defs.append(IdentityDef(
        id=IdentityId.CONTIG_RAISED,
        name="contiguous-raised",
        summary="1F1(alpha; 2*alpha; x) 1F1(alpha; 2*alpha+1; x) = e^x (1F2 block - x/(2(2*alpha+1)) 1F2 block)",
        uses=("alpha",),
        kind="series",
        build_lhs=contig_raised_lhs,
        build_rhs=contig_raised_rhs,
        lhs_float=contig_raised_lhs_float,
        rhs_float=contig_raised_rhs_float,
        requirements=lambda p: [
            _req_lower("2*alpha", 2 * p.alpha),
            _req_lower("2*alpha + 1", 2 * p.alpha + 1),
            _req_lower("alpha + 1/2", p.alpha + HALF),
            _req_lower("alpha + 3/2", p.alpha + Fraction(3, 2)),
        ],
    ))

    def contig_lowered_terms(p: IdentityParams) -> Terms:
        a = p.alpha
        head = HypSpec((a,), (a + HALF, 2 * a - 1))
        tail = HypSpec((a,), (a + HALF, 2 * a))
        return [
            (Fraction(1), 0, head),
            (Fraction(1) / (2 * (2 * a - 1)), 1, tail),
        ]

    def contig_lowered_lhs(p: IdentityParams) -> TruncatedSeries:
        return (
            _f1_series(p.alpha, 2 * p.alpha, cap_of(p))
            * _f1_series(p.alpha, 2 * p.alpha - 1, cap_of(p))
        )

    def contig_lowered_rhs(p: IdentityParams) -> TruncatedSeries:
        return _terms_series(contig_lowered_terms(p), cap_of(p), 4, exp_sign=1)

    def contig_lowered_lhs_float(p: IdentityParams, x: float) -> tuple[float, bool]:
        a_val, a_ok = _f1_float(p.alpha, 2 * p.alpha, x)
        b_val, b_ok = _f1_float(p.alpha, 2 * p.alpha - 1, x)
        return a_val * b_val, a_ok and b_ok

    def contig_lowered_rhs_float(p: IdentityParams, x: float) -> tuple[float, bool]:
        return _terms_float(contig_lowered_terms(p), x, 4, exp_sign=1)

    defs.append(IdentityDef(
        id=IdentityId.CONTIG_LOWERED,
        name="contiguous-lowered",
        summary="1F1(alpha; 2*alpha; x) 1F1(alpha; 2*alpha-1; x) = e^x (1F2 block + x/(2(2*alpha-1)) 1F2 block)",
        uses=("alpha",),
        kind="series",
        build_lhs=contig_lowered_lhs,
        build_rhs=contig_lowered_rhs,
        lhs_float=contig_lowered_lhs_float,
        rhs_float=contig_lowered_rhs_float,
        requirements=lambda p: [
            _req_lower("2*alpha", 2 * p.alpha),
            _req_lower("2*alpha - 1", 2 * p.alpha - 1),
            _req_lower("alpha + 1/2", p.alpha + HALF),
        ],
    ))

    # ---- expansion of e^(-x/2) 1F1 with shifted lower parameter

    def expand_raised_lhs(p: IdentityParams) -> TruncatedSeries:
        return exp_series(cap_of(p), -1, half=True) * _f1_series(p.alpha, 2 * p.alpha + p.i, cap_of(p))

    def expand_raised_rhs(p: IdentityParams) -> TruncatedSeries:
        return expand_raised(p.alpha, p.i, cap_of(p))

    def expand_raised_lhs_float(p: IdentityParams, x: float) -> tuple[float, bool]:
        value, ok = _f1_float(p.alpha, 2 * p.alpha + p.i, x)
        return math.exp(-x / 2) * value, ok

    def expand_raised_rhs_float(p: IdentityParams, x: float) -> tuple[float, bool]:
        return _terms_float(_expand_raised_terms(p.alpha, p.i), x, 16)

    defs.append(IdentityDef(
        id=IdentityId.EXPAND_RAISED,
        name="expand-raised",
        summary="e^(-x/2) 1F1(alpha; 2*alpha+i; x) as a sum of i+1 weighted x^m 0F1(; alpha+m+1/2; x^2/16) blocks",
        uses=("alpha", "i"),
        kind="series",
        build_lhs=expand_raised_lhs,
        build_rhs=expand_raised_rhs,
        lhs_float=expand_raised_lhs_float,
        rhs_float=expand_raised_rhs_float,
        requirements=lambda p: _expand_requirements(p, raised=True),
    ))

    def expand_lowered_lhs(p: IdentityParams) -> TruncatedSeries:
        return exp_series(cap_of(p), -1, half=True) * _f1_series(p.alpha, 2 * p.alpha - p.i, cap_of(p))

    def expand_lowered_rhs(p: IdentityParams) -> TruncatedSeries:
        return expand_lowered(p.alpha, p.i, cap_of(p))

    def expand_lowered_lhs_float(p: IdentityParams, x: float) -> tuple[float, bool]:
        value, ok = _f1_float(p.alpha, 2 * p.alpha - p.i, x)
        return math.exp(-x / 2) * value, ok

    def expand_lowered_rhs_float(p: IdentityParams, x: float) -> tuple[float, bool]:
        return _terms_float(_expand_lowered_terms(p.alpha, p.i), x, 16)

    defs.append(IdentityDef(
        id=IdentityId.EXPAND_LOWERED,
        name="expand-lowered",
        summary="e^(-x/2) 1F1(alpha; 2*alpha-i; x) as a sum of i+1 weighted x^m 0F1(; alpha+m-i+1/2; x^2/16) blocks",
        uses=("alpha", "i"),
        kind="series",
        build_lhs=expand_lowered_lhs,
        build_rhs=expand_lowered_rhs,
        lhs_float=expand_lowered_lhs_float,
        rhs_float=expand_lowered_rhs_float,
        requirements=lambda p: _expand_requirements(p, raised=False),
    ))

    # ---- the shifted-product family and its equal-parameter forms

    for variant, prod_id, equal_id in (
        ("PP", IdentityId.PRODUCT_PP, IdentityId.EQUAL_PARAM_PP),
        ("MM", IdentityId.PRODUCT_MM, IdentityId.EQUAL_PARAM_MM),
        ("PM", IdentityId.PRODUCT_PM, IdentityId.EQUAL_PARAM_PM),
    ):
        first_desc = "2*alpha+i" if variant[0] == "P" else "2*alpha-i"
        second_desc = "2*beta+j" if variant[1] == "P" else "2*beta-j"

        def make_product(variant: str = variant) -> dict:
            return dict(
                build_lhs=lambda p: product_expansion_lhs(variant, p),
                build_rhs=lambda p: product_expansion_rhs(variant, p),
                lhs_float=lambda p, x: _product_lhs_float(variant, p, x),
                rhs_float=lambda p, x: _product_rhs_float(variant, p, x),
                requirements=lambda p: _product_requirements(variant, p),
            )

        defs.append(IdentityDef(
            id=prod_id,
            name=f"product-{variant.lower()}",
            summary=(
                f"1F1(alpha; {first_desc}; x) 1F1(beta; {second_desc}; x) "
                "= e^x times a double sum of weighted x^(m+n) 2F3(...; x^2/4) blocks"
            ),
            uses=("alpha", "beta", "i", "j"),
            kind="series",
            notes=_pm_notes if variant == "PM" else None,
            **make_product(),
        ))

        def make_equal(variant: str = variant) -> dict:
            return dict(
                build_lhs=lambda p: _equal_param_lhs(variant, p),
                build_rhs=lambda p: equal_parameter_rhs(
                    variant, p.alpha, p.i, p.j, p.effective_cap, p.printed_form
                ),
                lhs_float=lambda p, x: _equal_param_lhs_float(variant, p, x),
                rhs_float=lambda p, x: _equal_param_rhs_float(variant, p, x),
                requirements=lambda p: _product_requirements(variant, p, equal_param=True),
            )

        second_desc_eq = second_desc.replace("beta", "alpha")
        defs.append(IdentityDef(
            id=equal_id,
            name=f"equal-param-{variant.lower()}",
            summary=(
                f"beta = alpha form: 1F1(alpha; {first_desc}; x) 1F1(alpha; {second_desc_eq}; x) "
                "as e^x times a double sum written with alpha only"
            ),
            uses=("alpha", "i", "j"),
            kind="series",
            notes=_pm_notes if variant == "PM" else None,
            **make_equal(),
        ))

    # ---- scalar closed forms

    defs.append(IdentityDef(
        id=IdentityId.GAUSS_TERMINATING,
        name="gauss-terminating",
        summary="2F1(-n, b; c; 1) = (c - b)_n / (c)_n, exact, with n = i, b = alpha, c = beta",
        uses=("alpha", "beta", "i"),
        kind="exact_sum",
        scalar_exact=lambda p: gauss_terminating_sides(p.i, p.alpha, p.beta),
        requirements=lambda p: [_req_poch("(beta)_k, k <= i", p.beta, p.i)],
    ))

    defs.append(IdentityDef(
        id=IdentityId.GAUSS_SECOND,
        name="gauss-second",
        summary="2F1(a, b; (a+b+1)/2; 1/2) equals a Gamma ratio (float check), a = alpha, b = beta",
        uses=("alpha", "beta"),
        kind="float_sum",
        scalar_float=lambda p: gauss_second_sides_float(p.alpha, p.beta),
        requirements=lambda p: [_req_lower("(alpha + beta + 1)/2", (p.alpha + p.beta + 1) / 2)],
        fixed_argument=0.5,
    ))

    defs.append(IdentityDef(
        id=IdentityId.WATSON_UNIT,
        name="watson-unit",
        summary="3F2(a, b, c; (a+b+1)/2, 2c; 1) equals a Gamma ratio (float check), a = alpha, b = beta, c = gamma",
        uses=("alpha", "beta", "gamma"),
        kind="float_sum",
        scalar_float=lambda p: watson_unit_sides_float(p.alpha, p.beta, p.gamma),
        requirements=_watson_requirements,
        fixed_argument=1.0,
    ))

    return {d.id: d for d in defs}


_REGISTRY = _build_registry()

_ORDER = [
    "1.1", "1.2", "1.3", "1.4", "1.5", "1.6", "1.7", "1.8", "1.9", "1.10",
    "1.11", "1.12", "1.13", "1.17", "1.18", "2.1", "2.2", "2.3", "3.1", "3.2", "3.3",
]


def get(identity: IdentityId | str) -> IdentityDef:
    """Look up a catalog entry by enum member or tag string."""
    if isinstance(identity, str) and not isinstance(identity, IdentityId):
        try:
            identity = IdentityId(identity)
        except ValueError:
            known = ", ".join(_ORDER)
            raise ValueError(f"unknown identity tag {identity!r} (known: {known})") from None
    return _REGISTRY[identity]


def catalog() -> tuple[IdentityDef, ...]:
    """All entries in tag order."""
    return tuple(get(tag) for tag in _ORDER)


# --------------------------------------------------------------------------
# exact check runners (admissibility is the caller's business; degenerate
# parameters raise here, they do not produce reports)


def _series_check(identity: IdentityId, params: IdentityParams) -> VerifyReport:
    define = get(identity)
    define.validate_params(params)
    start = perf_counter()
    lhs = define.build_lhs(params)
    rhs = define.build_rhs(params)
    mismatches = compare_series(lhs, rhs)
    return VerifyReport(
        identity=define.tag,
        params=params,
        cap=min(lhs.cap, rhs.cap),
        status=STATUS_EXACT_MATCH if not mismatches else STATUS_MISMATCH,
        mismatches=mismatches,
        notes=define.notes(params) if define.notes else (),
        elapsed_seconds=perf_counter() - start,
    )


def _scalar_exact_check(identity: IdentityId, params: IdentityParams) -> VerifyReport:
    define = get(identity)
    define.validate_params(params)
    start = perf_counter()
    lhs, rhs = define.scalar_exact(params)
    mismatches = () if lhs == rhs else (CoefficientMismatch(0, lhs, rhs),)
    return VerifyReport(
        identity=define.tag,
        params=params,
        cap=params.i,
        status=STATUS_EXACT_MATCH if not mismatches else STATUS_MISMATCH,
        mismatches=mismatches,
        elapsed_seconds=perf_counter() - start,
    )


def _scalar_float_check(identity: IdentityId, params: IdentityParams, tol: float) -> VerifyReport:
    define = get(identity)
    define.validate_params(params)
    start = perf_counter()
    lhs, rhs, converged = define.scalar_float(params)
    scale = max(abs(lhs), abs(rhs))
    rel = abs(lhs - rhs) / scale if scale > 0 else 0.0
    residual = FloatResidual(define.fixed_argument, rel, lhs, rhs, converged)
    passed = converged and rel <= tol
    return VerifyReport(
        identity=define.tag,
        params=params,
        cap=None,
        status=STATUS_FLOAT_ONLY_PASS if passed else STATUS_FLOAT_ONLY_FAIL,
        float_residuals=(residual,),
        elapsed_seconds=perf_counter() - start,
    )


# --------------------------------------------------------------------------
# named check operations for the classical chain


def kummer_first_check(alpha: Fraction | int, beta: Fraction | int, cap: int | None = None) -> VerifyReport:
    """Exact two-route check of the 1.1 transformation."""
    return _series_check(IdentityId.KUMMER_FIRST, IdentityParams(alpha=alpha, beta=beta, cap=cap))


def kummer_second_check(alpha: Fraction | int, cap: int | None = None) -> VerifyReport:
    """Exact two-route check of the 1.2 transformation."""
    return _series_check(IdentityId.KUMMER_SECOND, IdentityParams(alpha=alpha, cap=cap))


def kummer_second_alt_check(alpha: Fraction | int, cap: int | None = None) -> VerifyReport:
    """Exact two-route check of the doubled-argument form 1.5."""
    return _series_check(IdentityId.KUMMER_SECOND_SCALED, IdentityParams(alpha=alpha, cap=cap))


def preece_bailey_checks(
    alpha: Fraction | int, beta: Fraction | int, cap: int | None = None
) -> list[VerifyReport]:
    """Exact checks of the four product identities 1.6, 1.7, 1.9, 1.10.

    One report each, in tag order. The single-parameter entries use alpha
    alone; the two-parameter entries use both.
    """
    return [
        _series_check(IdentityId.PREECE_ALTERNATING, IdentityParams(alpha=alpha, cap=cap)),
        _series_check(IdentityId.BAILEY_ALTERNATING, IdentityParams(alpha=alpha, beta=beta, cap=cap)),
        _series_check(IdentityId.PREECE_SQUARED, IdentityParams(alpha=alpha, cap=cap)),
        _series_check(IdentityId.BAILEY_MATCHED, IdentityParams(alpha=alpha, beta=beta, cap=cap)),
    ]


def contiguous_product_checks(alpha: Fraction | int, cap: int | None = None) -> list[VerifyReport]:
    """Exact checks of the contiguous products 1.12 and 1.13, in tag order."""
    return [
        _series_check(IdentityId.CONTIG_RAISED, IdentityParams(alpha=alpha, cap=cap)),
        _series_check(IdentityId.CONTIG_LOWERED, IdentityParams(alpha=alpha, cap=cap)),
    ]


def classical_sum_checks(
    a: Fraction | int,
    b: Fraction | int,
    c: Fraction | int | None = None,
    tol: float = 1e-10,
) -> list[VerifyReport]:
    """Check the classical summation theorems at one parameter point.

    Always checks the half-argument sum 1.4 with (a, b). When a is a
    nonpositive integer and c is given, also checks the terminating sum
    1.3 with n = -a. When c is given, also checks the unit-argument sum
    1.8 with (a, b, c). Reports come back in tag order.
    """
    a = Fraction(a)
    b = Fraction(b)
    out = []
    if c is not None and is_nonpositive_integer(a):
        out.append(_scalar_exact_check(
            IdentityId.GAUSS_TERMINATING,
            IdentityParams(alpha=b, beta=Fraction(c), i=int(-a)),
        ))
    out.append(_scalar_float_check(
        IdentityId.GAUSS_SECOND, IdentityParams(alpha=a, beta=b), tol
    ))
    if c is not None:
        out.append(_scalar_float_check(
            IdentityId.WATSON_UNIT, IdentityParams(alpha=a, beta=b, gamma=Fraction(c)), tol
        ))
    return out
