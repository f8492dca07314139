"""Truncated formal power series over exact rationals.

A :class:`TruncatedSeries` stores coefficients ``c_0 .. c_cap`` of a series
in one indeterminate. All arithmetic is exact. Operations never invent
coefficients above the cap: binary operations truncate to the smaller of
the two caps and the result records the cap that survived, so intermediate
results of different depths compose without bookkeeping at call sites.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .rationals import factorial, format_rational

__all__ = ["TruncatedSeries", "exp_series"]


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients ``c_0 .. c_cap`` of a power series, exact and immutable."""

    cap: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.cap < 0:
            raise ValueError("series cap must be nonnegative")
        if len(self.coeffs) != self.cap + 1:
            raise ValueError(
                f"expected {self.cap + 1} coefficients for cap {self.cap}, "
                f"got {len(self.coeffs)}"
            )

    @staticmethod
    def from_coeffs(values: Iterable[Fraction | int], cap: int | None = None) -> "TruncatedSeries":
        """Build a series from leading coefficients, zero-padding to the cap."""
        coeffs = [Fraction(v) for v in values]
        if cap is None:
            cap = len(coeffs) - 1
        if cap < 0:
            raise ValueError("series cap must be nonnegative")
        if len(coeffs) > cap + 1:
            coeffs = coeffs[: cap + 1]
        else:
            coeffs.extend([Fraction(0)] * (cap + 1 - len(coeffs)))
        return TruncatedSeries(cap, tuple(coeffs))

    @staticmethod
    def zero(cap: int) -> "TruncatedSeries":
        return TruncatedSeries(cap, (Fraction(0),) * (cap + 1))

    @staticmethod
    def one(cap: int) -> "TruncatedSeries":
        return TruncatedSeries.from_coeffs([1], cap)

    def coefficient(self, degree: int) -> Fraction:
        """Coefficient of ``x**degree``; degrees above the cap are unknown,
        not zero, so asking for one is an error."""
        if not 0 <= degree <= self.cap:
            raise IndexError(f"degree {degree} outside truncation range 0..{self.cap}")
        return self.coeffs[degree]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        cap = min(self.cap, other.cap)
        return TruncatedSeries(
            cap,
            tuple(self.coeffs[k] + other.coeffs[k] for k in range(cap + 1)),
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        cap = min(self.cap, other.cap)
        return TruncatedSeries(
            cap,
            tuple(self.coeffs[k] - other.coeffs[k] for k in range(cap + 1)),
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.cap, tuple(-c for c in self.coeffs))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Cauchy product truncated to the smaller cap."""
        cap = min(self.cap, other.cap)
        out = []
        for k in range(cap + 1):
            acc = Fraction(0)
            for t in range(k + 1):
                acc += self.coeffs[t] * other.coeffs[k - t]
            out.append(acc)
        return TruncatedSeries(cap, tuple(out))

    def scale(self, factor: Fraction | int) -> "TruncatedSeries":
        factor = Fraction(factor)
        return TruncatedSeries(self.cap, tuple(factor * c for c in self.coeffs))

    def scale_argument(self, factor: Fraction | int) -> "TruncatedSeries":
        """Substitute ``x -> factor * x``: coefficient k picks up factor**k.

        With factor -1 this flips the signs of the odd coefficients, which
        is how every ``f(-x)`` in the catalog is built.
        """
        factor = Fraction(factor)
        return TruncatedSeries(
            self.cap,
            tuple(c * factor**k for k, c in enumerate(self.coeffs)),
        )

    def shift(self, power: int) -> "TruncatedSeries":
        """Multiply by ``x**power``, keeping the cap (top coefficients fall off)."""
        if power < 0:
            raise ValueError("shift power must be nonnegative")
        kept = self.coeffs[: max(self.cap + 1 - power, 0)]
        return TruncatedSeries(self.cap, (Fraction(0),) * min(power, self.cap + 1) + kept)

    def substitute_even(self, divisor: Fraction | int) -> "TruncatedSeries":
        """Read ``self`` as a series in t and substitute ``t = x**2 / divisor``.

        The result lives on the same cap: input coefficient c_k lands on
        degree 2k scaled by divisor**-k, and everything past the cap is
        dropped. Output odd coefficients are all zero by construction.
        """
        divisor = Fraction(divisor)
        if divisor == 0:
            raise ValueError("substitute_even divisor must be nonzero")
        out = [Fraction(0)] * (self.cap + 1)
        for k, c in enumerate(self.coeffs):
            if 2 * k > self.cap:
                break
            out[2 * k] = c / divisor**k
        return TruncatedSeries(self.cap, tuple(out))

    def truncate(self, cap: int) -> "TruncatedSeries":
        """Drop to a smaller cap (a larger one would need unknown coefficients)."""
        if cap > self.cap:
            raise ValueError(f"cannot extend cap {self.cap} to {cap}")
        return TruncatedSeries(cap, self.coeffs[: cap + 1])

    def eval_float(self, x: float) -> float:
        """Horner evaluation of the truncated polynomial in double precision."""
        acc = 0.0
        for c in reversed(self.coeffs):
            try:
                acc = acc * x + float(c)
            except OverflowError as exc:
                raise OverflowError(
                    f"coefficient {format_rational(c)} does not fit in a float"
                ) from exc
        return acc

    def coefficient_strings(self) -> list[str]:
        """Coefficients rendered as exact p/q strings, index = degree."""
        return [format_rational(c) for c in self.coeffs]

    def to_text(self) -> str:
        """Human-readable form like ``1 - 1/2*x + 1/8*x^2``; zero prints as 0."""
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            term = format_rational(abs(c))
            if k == 1:
                term += "*x"
            elif k > 1:
                term += f"*x^{k}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts) if parts else "0"


def exp_series(cap: int, sign: int = 1, half: bool = False) -> TruncatedSeries:
    """Exact series of ``e**(sign*x)``, or of ``e**(sign*x/2)`` when half is set.

    Coefficient k is ``sign**k / (k! * 2**k)`` with the ``2**k`` only in the
    half case. Example: ``exp_series(2, -1, half=True)`` is
    ``1 - 1/2*x + 1/8*x^2``.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    coeffs = []
    for k in range(cap + 1):
        den = Fraction(factorial(k))
        if half:
            den *= Fraction(2) ** k
        coeffs.append(Fraction(sign**k) / den)
    return TruncatedSeries(cap, tuple(coeffs))
