"""van der Put basis, coefficient extraction, and coefficient criteria.

``e_0`` is identically 1; for n >= 1, ``e_n`` is the indicator of the ball
of all x agreeing with n on every base-p digit of n, i.e.
|x - n|_p <= p**-(s+1) with s = floor(log_p n).  Coefficients are read off
as a_0 = f(0) and a_n = f(n) - f(n_) where n_ drops the most significant
base-p digit of n.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .core import DEFAULT_PRECISION, DomainError, InsufficientPrecision, \
    PadicNumber
from .quotients import PadicFunction


def _ilog(n: int, p: int) -> int:
    """floor(log_p n) for n >= 1, computed without floats."""
    s, q = 0, n
    while q >= p:
        q //= p
        s += 1
    return s


def ball_exponent(n: int, p: int) -> int:
    """|x - n|_p < 1/n is decided as |x - n|_p <= p**-ball_exponent(n, p)."""
    return _ilog(n, p) + 1


def drop_leading_digit(n: int, p: int) -> int:
    """n with its most significant base-p digit removed (n >= 1)."""
    if n < 1:
        raise DomainError("defined for n >= 1 only")
    s = _ilog(n, p)
    return n - (n // p ** s) * p ** s


def basis_eval(n: int, x: PadicNumber) -> int:
    """e_n(x) for x in Z_p; 0/1 indicator values."""
    if n < 0:
        raise DomainError("basis index must be nonnegative")
    if n == 0:
        return 1
    p = x.prime
    k = ball_exponent(n, p)
    if not x.is_zero_like and x.valuation < 0:
        raise DomainError("basis functions live on Z_p")
    if x.is_exact_zero:
        return 0  # n >= 1 never matches 0 on its leading digit
    if x.is_bounded_zero:
        if x.abs_precision >= k:
            return 0
        raise InsufficientPrecision(
            f"membership in the ball of e_{n} needs {k} digits")
    return 1 if x.residue(k) == n % p ** k else 0


@dataclass
class VdPSeries:
    """Lazily computed van der Put coefficients of a function on Z_p."""

    prime: int
    coefficient_fn: Callable[[int], PadicNumber]
    _cache: dict = field(default_factory=dict)

    def coeff(self, n: int) -> PadicNumber:
        if n not in self._cache:
            self._cache[n] = self.coefficient_fn(n)
        return self._cache[n]

    def norm(self, n: int) -> Fraction:
        return self.coeff(n).norm_upper()


def decompose(f: PadicFunction, p: int,
              precision: int = DEFAULT_PRECISION) -> VdPSeries:
    """Coefficient stream of f with respect to the van der Put basis."""

    def coefficient(n: int) -> PadicNumber:
        if n == 0:
            return f(PadicNumber.zero(p, precision))
        m = drop_leading_digit(n, p)
        fn = f(PadicNumber.from_int(n, p, precision))
        fm = f(PadicNumber.from_int(m, p, precision))
        return fn - fm

    return VdPSeries(p, coefficient)


def partial_sum(series: VdPSeries, n_max: int, x: PadicNumber) -> PadicNumber:
    """Sum of a_n e_n(x) over n <= n_max."""
    total = PadicNumber.zero(series.prime, DEFAULT_PRECISION)
    for n in range(n_max + 1):
        if basis_eval(n, x):
            total = total + series.coeff(n)
    return total


@dataclass(frozen=True)
class CriterionRow:
    index: int
    coeff_norm: Fraction
    product: Fraction


@dataclass
class CriterionReport:
    """Windowed maxima / running suprema of coefficient-norm products."""

    kind: str  # "n1" or "lip"
    alpha: Optional[Fraction]
    prime: int
    rows: list[CriterionRow]
    window_maxima: list[tuple[int, int, Fraction]]  # (lo, hi, max) per window
    running_sup: Fraction

    def tends_to_zero(self) -> bool:
        """Heuristic decay check on the dyadic window maxima."""
        maxima = [m for _, _, m in self.window_maxima if m > 0]
        if len(maxima) < 2:
            return True
        return maxima[-1] < maxima[0] and maxima[-1] <= min(maxima)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["n", "coeff_norm", "coeff_norm_decimal", "product"])
        for r in self.rows:
            w.writerow([r.index, power_str(self.prime, r.coeff_norm),
                        _as_float(r.coeff_norm), _as_float(r.product)])
        return buf.getvalue()


def _as_float(q: Fraction) -> float:
    try:
        return float(q)
    except OverflowError:
        return math.inf


def power_str(p: int, norm: Fraction) -> str:
    """Render an exact power of p (or 0) as e.g. "2^-5"."""
    if norm == 0:
        return "0"
    if norm >= 1:
        k = _ilog(norm.numerator, p)
    else:
        k = -_ilog(norm.denominator, p)
    return f"{p}^{k}"


def _criterion(rows: Iterable[tuple[int, Fraction]], alpha: Optional[Fraction],
               kind: str, p: int) -> CriterionReport:
    out_rows: list[CriterionRow] = []
    windows: dict[int, Fraction] = {}
    sup = Fraction(0)
    for n, norm in rows:
        if alpha is None:
            product = norm * n
        elif alpha.denominator == 1:
            product = norm * Fraction(n) ** int(alpha)
        else:
            product = Fraction(float(norm) * float(n) ** float(alpha))
        out_rows.append(CriterionRow(n, norm, product))
        sup = max(sup, product)
        if n >= 1:
            j = n.bit_length() - 1
            windows[j] = max(windows.get(j, Fraction(0)), product)
    maxima = [(2 ** j, 2 ** (j + 1) - 1, m) for j, m in sorted(windows.items())]
    return CriterionReport(kind, alpha, p, out_rows, maxima, sup)


def n1_criterion(rows: Iterable[tuple[int, Fraction]],
                 p: int) -> CriterionReport:
    """Dyadic window maxima of |a_n| * n; decay supports zero-derivative
    strict differentiability."""
    return _criterion(rows, None, "n1", p)


def lip_criterion(rows: Iterable[tuple[int, Fraction]], alpha: Fraction,
                  p: int) -> CriterionReport:
    """Running supremum of |a_n| * n**alpha; boundedness characterizes a
    Lipschitz class of order alpha."""
    if alpha <= 0:
        raise DomainError("alpha must be positive")
    return _criterion(rows, Fraction(alpha), "lip", p)


def series_rows(series: VdPSeries, n_max: int) -> Iterable[tuple[int, Fraction]]:
    """(n, |a_n|) rows of a coefficient stream, for the criteria above."""
    for n in range(n_max + 1):
        yield n, series.norm(n)


def schedule_exponent(k: int, p: int) -> int:
    """The coefficient-decay schedule m_k = floor(ln(k ln k)/ln p).

    Undefined at k = 1; m_1 = 1 by convention, and the sequence is made
    nondecreasing by a cumulative max (k may be huge, so logs are taken of
    the integer directly).
    """
    if k < 1:
        raise DomainError("schedule index must be >= 1")
    if k == 1:
        return 1
    lk = math.log(k)
    raw = math.floor((lk + math.log(lk)) / math.log(p))
    return max(1, raw)
