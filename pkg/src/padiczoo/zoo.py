"""The gallery of pathological p-adic functions, one entry per construction.

Each entry packages an evaluable function with its known derivative (when a
closed form exists), canonical witness generators, and machine-checkable
claims.  Entries are registered under short stable names for the CLI.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional, Sequence

from .core import DEFAULT_PRECISION, DomainError, InsufficientPrecision, \
    PadicNumber, pow_one_plus
from .families import IndexSet, CellEnumerator
from .quotients import PadicFunction, probe_derivative, probe_strict, \
    probe_strict_order2
from .vanderput import ball_exponent, schedule_exponent


# ---------------------------------------------------------------------------
# entry scaffolding

@dataclass(frozen=True)
class ClaimResult:
    claim: str
    passed: bool
    details: dict

    def to_json_dict(self) -> dict:
        return {"schema": 1, "claim": self.claim, "passed": self.passed,
                "details": self.details}


@dataclass
class ZooEntry:
    name: str
    function: PadicFunction
    derivative: Optional[PadicFunction] = None
    witnesses: dict = field(default_factory=dict)
    claims: dict = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    def run_claim(self, name: str, **kwargs) -> ClaimResult:
        if name not in self.claims:
            raise DomainError(
                f"unknown claim {name!r}; have {sorted(self.claims)}")
        return self.claims[name](**kwargs)


def _expand(x: PadicNumber, precision: int) -> PadicNumber:
    if x.exact is not None and x.abs_precision < precision:
        return x.at_precision(precision)
    return x


def _congruent(x: PadicNumber, c: PadicNumber, k: int) -> bool:
    """Whether x == c (mod p**k); raises when the digits cannot decide."""
    d = x - c
    if d.is_exact_zero:
        return True
    if d.unit != 0:
        return d.valuation >= k
    if d.abs_precision >= k:
        return True
    raise InsufficientPrecision(
        f"congruence mod p^{k} needs more digits than are known")


def _resolved_valuation(x: PadicNumber) -> Optional[int]:
    """The valuation, or None when x is zero-like."""
    return None if x.is_zero_like else x.valuation


# ---------------------------------------------------------------------------
# locally constant step on the disjoint balls inside spheres |x| = p^-n

def thm34i_fN(N: IndexSet, p: int,
              precision: int = DEFAULT_PRECISION) -> ZooEntry:
    """Step function equal to p**2n on the ball of radius p**-2n at p**n
    for n in N; zero elsewhere.  Continuously differentiable with zero
    derivative, but first difference quotients stay away from 0 along the
    canonical pair witness."""

    def evaluate(x: PadicNumber) -> PadicNumber:
        x = _expand(x, precision)
        if x.is_exact_zero:
            return PadicNumber.zero(p, 2 * precision)
        if x.is_bounded_zero:
            # any ball x could lie in has index >= abs_precision
            return PadicNumber.bounded_zero(p, 2 * max(1, x.abs_precision))
        n = x.valuation
        if n < 1 or n not in N:
            return PadicNumber.zero(p, 2 * precision)
        center = PadicNumber.from_rational(p ** n, 1, p, x.abs_precision)
        if _congruent(x, center, 2 * n + 1):
            return PadicNumber.from_rational(p ** (2 * n), 1, p, 2 * precision)
        return PadicNumber.zero(p, 2 * precision)

    def derivative(x: PadicNumber) -> PadicNumber:
        if x.is_exact_zero or x.is_bounded_zero:
            # derivative 0 at the origin too, via |f(x)/x| = p^-n -> 0
            return PadicNumber.zero(p, precision)
        return PadicNumber.zero(p, precision)

    fn = PadicFunction(evaluate, modulus=lambda m: m, domain_tag="Qp")

    def pair_witness(cell: CellEnumerator, limit: int = 40) -> Iterator:
        for n in cell:
            if n > limit:
                return
            w = max(precision, 2 * n + 4)
            x = PadicNumber.from_rational(p ** n, 1, p, w)
            y = PadicNumber.from_rational(p ** n - p ** (2 * n), 1, p, w)
            yield n, (x, y)

    def seq_witness(cell: CellEnumerator, limit: int = 40) -> Iterator:
        for n in cell:
            if n > limit:
                return
            w = max(precision, 2 * n + 4)
            yield n, PadicNumber.from_rational(p ** n, 1, p, w)

    entry = ZooEntry(
        name="thm34i",
        function=fn,
        derivative=PadicFunction(derivative, domain_tag="Qp"),
        witnesses={"pairs": pair_witness, "sequence": seq_witness},
        meta={"prime": p, "index_set": N, "precision": precision},
    )

    def claim_strict_fail(limit: int = 40) -> ClaimResult:
        cell = CellEnumerator([N], [1])
        trace = probe_strict(fn, pair_witness(cell, limit), steps=limit)
        one = PadicNumber.one(p, precision)
        ok = bool(trace.rows) and all(
            r.quotient.agrees_with(one) for r in trace.rows)
        return ClaimResult("strict-fail", ok, {
            "steps": len(trace.rows),
            "verdict": trace.verdict.kind,
        })

    def claim_derivative_at_zero(limit: int = 40) -> ClaimResult:
        cell = CellEnumerator([N], [1])
        trace = probe_derivative(
            fn, PadicNumber.zero(p, precision), seq_witness(cell, limit),
            steps=limit)
        ok = bool(trace.rows) and all(
            r.norm == Fraction(p) ** (-r.index) for r in trace.rows)
        ok = ok and trace.verdict.kind == "converges_to"
        return ClaimResult("derivative-at-zero", ok, {
            "steps": len(trace.rows),
            "verdict": trace.verdict.kind,
        })

    entry.claims = {
        "strict-fail": claim_strict_fail,
        "derivative-at-zero": claim_derivative_at_zero,
    }
    return entry


# ---------------------------------------------------------------------------
# digit-spreading contraction x_n -> x_n p^{2n}

def thm34ii_gN(N: IndexSet, p: int,
               precision: int = DEFAULT_PRECISION) -> ZooEntry:
    """Digit-spreading map: digit a_n of x (n in N, n >= 0) contributes
    a_n * p**2n.  Satisfies |g(x)-g(y)| <= |x-y|**2, hence is strictly
    differentiable with zero derivative; second difference quotients along
    the canonical triples have constant norm."""

    def evaluate(x: PadicNumber) -> PadicNumber:
        x = _expand(x, precision)
        if x.is_exact_zero:
            return PadicNumber.zero(p, 2 * precision)
        if x.is_bounded_zero:
            if x.abs_precision < 1:
                raise InsufficientPrecision("no nonnegative digits known")
            return PadicNumber.bounded_zero(p, 2 * x.abs_precision)
        hi = x.abs_precision
        if hi <= 0:
            raise InsufficientPrecision("no nonnegative digits known")
        total = 0
        for n in range(max(0, x.valuation), hi):
            if n in N:
                d = x.digit(n)
                if d:
                    total += d * p ** (2 * n)
        if total == 0:
            return PadicNumber.bounded_zero(p, 2 * hi)
        out = PadicNumber.from_int(total, p, 2 * hi)
        return out.truncated(2 * hi)

    fn = PadicFunction(evaluate, modulus=lambda m: (m + 1) // 2,
                       domain_tag="Qp")

    def derivative(x: PadicNumber) -> PadicNumber:
        return PadicNumber.zero(p, precision)

    def triple_witness(cell: CellEnumerator, limit: int = 40) -> Iterator:
        for n in cell:
            if n > limit:
                return
            n_plus = cell.next_after(n)
            w = max(precision, 2 * n_plus + 4)
            x = PadicNumber.from_rational(p ** n, 1, p, w)
            y = PadicNumber.zero(p, w)
            z = PadicNumber.from_rational(p ** n + p ** n_plus, 1, p, w)
            yield n, (x, y, z)

    entry = ZooEntry(
        name="thm34ii",
        function=fn,
        derivative=PadicFunction(derivative, domain_tag="Qp"),
        witnesses={"triples": triple_witness},
        meta={"prime": p, "index_set": N, "precision": precision},
    )

    def claim_contraction(pairs: int = 10_000, seed: int = 0) -> ClaimResult:
        import random
        rng = random.Random(seed)
        worst = Fraction(0)
        for _ in range(pairs):
            x = _random_zp(rng, p, precision)
            y = _random_zp(rng, p, precision)
            d = x - y
            if d.is_zero_like:
                continue
            lhs = (evaluate(x) - evaluate(y)).norm_upper()
            rhs = d.abs_value() ** 2
            if rhs > 0:
                worst = max(worst, lhs / rhs)
            if lhs > rhs:
                return ClaimResult("contraction", False,
                                   {"x": x.render(), "y": y.render()})
        return ClaimResult("contraction", True,
                           {"pairs": pairs, "worst_ratio": float(worst)})

    def claim_order2_witness(limit: int = 40) -> ClaimResult:
        cell = CellEnumerator([N], [1])
        trace = probe_strict_order2(fn, triple_witness(cell, limit),
                                    steps=limit)
        ok = bool(trace.rows) and all(r.norm == 1 for r in trace.rows)
        return ClaimResult("order2-witness", ok, {
            "steps": len(trace.rows),
            "norms": [str(r.norm) for r in trace.rows[:5]],
        })

    entry.claims = {
        "contraction": claim_contraction,
        "order2-witness": claim_order2_witness,
    }
    return entry


# ---------------------------------------------------------------------------
# disjoint van der Put balls and the sparse coefficient schedule

@dataclass(frozen=True)
class BallSystem:
    """Pairwise disjoint van der Put balls n_k + p**t_k Z_p, enumerated by
    the increasing bijection sigma."""

    prime: int

    def sigma(self, n: int) -> int:
        """The (n+1)-st center, in increasing order."""
        if n < 0:
            raise DomainError("sigma is defined on N_0")
        p = self.prime
        q = max(p - 1, 1)
        return (n % q + 1) * p ** (n // q)

    def sigma_inverse_of_point(self, x: PadicNumber) -> Optional[int]:
        """Index n with x in the ball around sigma(n), or None for x = 0.

        Every nonzero p-adic integer lies in exactly one ball: the one
        whose center shares x's lowest nonzero digit position and value.
        """
        if x.is_exact_zero:
            return None
        if x.is_bounded_zero:
            raise InsufficientPrecision(
                "ball membership needs a resolved leading digit")
        if x.valuation < 0:
            raise DomainError("ball system lives on Z_p")
        p = self.prime
        j, u = x.valuation, x.digit(x.valuation)
        return j * (p - 1) + (u - 1) if p > 2 else j

    def center(self, n: int) -> int:
        return self.sigma(n)

    def radius_exponent(self, n: int) -> int:
        return ball_exponent(self.sigma(n), self.prime)


def greedy_disjoint_balls(p: int, scan_limit: int) -> list[int]:
    """Reference construction: scan 1..scan_limit, keeping each n whose van
    der Put ball avoids every ball kept so far."""
    chosen: list[tuple[int, int]] = []  # (center, modulus exponent)
    out: list[int] = []
    for n in range(1, scan_limit + 1):
        t = ball_exponent(n, p)
        if all(n % p ** tj != cj % p ** tj for cj, tj in chosen):
            chosen.append((n, t))
            out.append(n)
    return out


def build_disjoint_balls(p: int) -> BallSystem:
    """The greedy system in closed form: centers u * p**k, 1 <= u < p.

    The scan in ``greedy_disjoint_balls`` provably selects exactly these
    centers; the closed form is used so that sigma stays cheap at large
    indices, and tests cross-check it against the scan.
    """
    return BallSystem(p)


def lip_coefficient_rows(N: IndexSet, p: int,
                         n_limit: int) -> Iterator[tuple[int, int, int, Fraction]]:
    """Rows (n, sigma(n), m_sigma(n), |a_sigma(n)|) of the sparse van der
    Put series; the schedule exponent is made nondecreasing along sigma."""
    balls = build_disjoint_balls(p)
    m_running = 0
    for n in range(n_limit + 1):
        k = balls.sigma(n)
        m_running = max(m_running, schedule_exponent(k, p))
        norm = Fraction(p) ** (-m_running) if n in N else Fraction(0)
        yield n, k, m_running, norm


def lip_fN(N: IndexSet, p: int,
           precision: int = DEFAULT_PRECISION) -> ZooEntry:
    """Sparse van der Put series with coefficient p**m_sigma(n) on the ball
    around sigma(n) for n in N: zero-derivative strictly differentiable but
    not Lipschitz of any order above 1."""
    balls = build_disjoint_balls(p)

    def coefficient_exponent(n: int) -> int:
        m = 0
        for j in range(n + 1):
            m = max(m, schedule_exponent(balls.sigma(j), p))
        return m

    def evaluate(x: PadicNumber) -> PadicNumber:
        x = _expand(x, precision)
        if x.is_exact_zero:
            return PadicNumber.zero(p, precision)
        n = balls.sigma_inverse_of_point(x)
        k = balls.sigma(n)
        t = balls.radius_exponent(n)
        if x.abs_precision < t:
            raise InsufficientPrecision(
                f"ball membership at index {n} needs {t} digits")
        if x.residue(t) != k % p ** t or n not in N:
            return PadicNumber.zero(p, precision)
        m = coefficient_exponent(n)
        return PadicNumber.from_rational(p ** m, 1, p, precision + m)

    fn = PadicFunction(evaluate, domain_tag="Zp")

    def derivative(x: PadicNumber) -> PadicNumber:
        return PadicNumber.zero(p, precision)

    entry = ZooEntry(
        name="lip_fN",
        function=fn,
        derivative=PadicFunction(derivative, domain_tag="Zp"),
        meta={"prime": p, "index_set": N, "precision": precision,
              "balls": balls},
    )

    def claim_n1_decay(n_limit: int = 10_000) -> ClaimResult:
        worst = Fraction(0)
        for n, k, m, norm in lip_coefficient_rows(N, p, n_limit):
            if n < 2 or norm == 0:
                continue
            product = norm * k
            bound = Fraction(p) / Fraction(math.log(n))
            if product > bound:
                return ClaimResult("n1-decay", False, {"n": n})
            worst = max(worst, product)
        return ClaimResult("n1-decay", True, {
            "n_limit": n_limit, "max_product": float(worst)})

    def claim_lip2_unbounded(n_limit: int = 10_000,
                             threshold: int = 100) -> ClaimResult:
        sup = Fraction(0)
        first_cross = None
        for n, k, m, norm in lip_coefficient_rows(N, p, n_limit):
            if norm == 0:
                continue
            sup = max(sup, norm * Fraction(k) ** 2)
            if first_cross is None and sup > threshold:
                first_cross = n
        return ClaimResult("lip2-unbounded", first_cross is not None, {
            "n_limit": n_limit, "threshold": threshold,
            "first_crossing": first_cross})

    entry.claims = {
        "n1-decay": claim_n1_decay,
        "lip2-unbounded": claim_lip2_unbounded,
    }
    return entry


# ---------------------------------------------------------------------------
# analytic branch functions with unbounded derivative

def _head_and_offset(x: PadicNumber, p: int) -> Optional[tuple]:
    """Split x with |x| >= 1 as head + y: head collects the digits at
    positions <= 0 and y lies in pZ_p.  None when x is in pZ_p."""
    if x.is_exact_zero or x.is_bounded_zero:
        # all of pZ_p (and any zero-like x in it) maps to the zero branch
        if x.is_bounded_zero and x.abs_precision < 1:
            raise InsufficientPrecision("sign of the valuation is unknown")
        return None
    if x.valuation >= 1:
        return None
    n = -x.valuation
    head = Fraction(0)
    for i in range(x.valuation, 1):
        head += x.digit(i) * Fraction(p) ** i
    y = x - PadicNumber.from_rational(
        head.numerator, head.denominator, p, x.abs_precision)
    return n, y


def thm16_fbeta(beta: PadicNumber, p: int,
                precision: int = DEFAULT_PRECISION) -> ZooEntry:
    """On each shell x = head + y with |head| = p**n >= 1 and y in pZ_p the
    value is p**-n (1+y)**beta; zero on pZ_p.  Differentiable everywhere
    with derivative p**-n beta (1+y)**(beta-1), unbounded as n grows."""
    if beta.is_zero_like:
        raise DomainError("exponent must be nonzero")
    if beta.valuation < 0:
        raise DomainError("exponent must lie in Z_p")
    one = PadicNumber.one(p, precision)

    def evaluate(x: PadicNumber) -> PadicNumber:
        x = _expand(x, precision)
        split = _head_and_offset(x, p)
        if split is None:
            return PadicNumber.zero(p, precision)
        n, y = split
        scale = PadicNumber.from_rational(1, p ** n, p, precision)
        return scale * pow_one_plus(y, beta, precision)

    def derivative(x: PadicNumber) -> PadicNumber:
        x = _expand(x, precision)
        split = _head_and_offset(x, p)
        if split is None:
            return PadicNumber.zero(p, precision)
        n, y = split
        scale = PadicNumber.from_rational(1, p ** n, p, precision)
        return scale * beta * pow_one_plus(y, beta - one, precision)

    fn = PadicFunction(evaluate, domain_tag="Qp")
    dfn = PadicFunction(derivative, domain_tag="Qp")

    def shell_witness(y0: Optional[PadicNumber] = None,
                      limit: int = 20) -> Iterator:
        y0 = y0 if y0 is not None else PadicNumber.zero(p, precision)
        for n in range(1, limit + 1):
            x = PadicNumber.from_rational(1, p ** n, p, precision) + y0
            yield n, x

    entry = ZooEntry(
        name="thm16",
        function=fn,
        derivative=dfn,
        witnesses={"shells": shell_witness},
        meta={"prime": p, "beta": beta, "precision": precision},
    )

    def claim_unbounded_derivative(limit: int = 20) -> ClaimResult:
        beta_norm = beta.abs_value()
        for n, x in shell_witness(limit=limit):
            want = beta_norm * Fraction(p) ** n
            got = derivative(x).abs_value()
            if got != want:
                return ClaimResult("unbounded-derivative", False,
                                   {"n": n, "got": str(got)})
        return ClaimResult("unbounded-derivative", True, {"limit": limit})

    def claim_zero_on_pzp(samples: int = 100, seed: int = 0) -> ClaimResult:
        import random
        rng = random.Random(seed)
        for _ in range(samples):
            y = _random_zp(rng, p, precision, min_valuation=1)
            if not evaluate(y).is_exact_zero:
                return ClaimResult("zero-on-pzp", False, {"y": y.render()})
        return ClaimResult("zero-on-pzp", True, {"samples": samples})

    entry.claims = {
        "unbounded-derivative": claim_unbounded_derivative,
        "zero-on-pzp": claim_zero_on_pzp,
    }
    return entry


def check_nonconstant_combination(gammas: Sequence[PadicNumber],
                                  alphas: Sequence[PadicNumber],
                                  search_depth: int,
                                  precision: int = DEFAULT_PRECISION
                                  ) -> Optional[PadicNumber]:
    """Search for y in pZ_p with sum gamma_i (1+y)**alpha_i different from
    its value at y = 0.  Returns the first witness in the search order, or
    None when the budget is exhausted (inconclusive, never a disproof)."""
    if len(gammas) != len(alphas):
        raise DomainError("coefficient and exponent lists must match")
    if not gammas:
        raise DomainError("need at least one term")
    p = gammas[0].prime
    for i, a in enumerate(alphas):
        for b in alphas[i + 1:]:
            if (a - b).is_zero_like:
                raise DomainError(
                    "exponents must be pairwise distinct at working precision")
    base = _sum_of_powers(gammas, alphas, PadicNumber.zero(p, precision),
                          precision)
    for y in _pzp_patterns(p, search_depth, precision):
        val = _sum_of_powers(gammas, alphas, y, precision)
        if not (val - base).is_zero_like:
            return y
    return None


def find_nonvanishing_offset(gammas: Sequence[PadicNumber],
                             alphas: Sequence[PadicNumber],
                             search_depth: int,
                             precision: int = DEFAULT_PRECISION
                             ) -> Optional[PadicNumber]:
    """y in pZ_p with sum gamma_i (1+y)**alpha_i certified nonzero."""
    p = gammas[0].prime
    zero = PadicNumber.zero(p, precision)
    if not _sum_of_powers(gammas, alphas, zero, precision).is_zero_like:
        return zero
    return check_nonconstant_combination(gammas, alphas, search_depth,
                                         precision)


def _sum_of_powers(gammas, alphas, y: PadicNumber,
                   precision: int) -> PadicNumber:
    p = y.prime
    total = PadicNumber.zero(p, precision)
    for g, a in zip(gammas, alphas):
        total = total + g * pow_one_plus(y, a, precision)
    return total


def _pzp_patterns(p: int, depth: int, precision: int) -> Iterator[PadicNumber]:
    """Nonzero y = sum c_j p**j, 1 <= j <= depth, in increasing pattern order."""
    for total in range(1, p ** depth):
        digits, t = [], total
        for _ in range(depth):
            t, d = divmod(t, p)
            digits.append(d)
        yield PadicNumber.from_digits(p, 1, digits, precision)


@dataclass(frozen=True)
class Monomial:
    coefficient: PadicNumber
    exponents: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.exponents)


def poly_combine(entries: Sequence[ZooEntry], monomials: Sequence[Monomial],
                 precision: int = DEFAULT_PRECISION,
                 search_depth: int = 2) -> ZooEntry:
    """Polynomial (no free term) in zoo functions, evaluated pointwise.

    For entries of the analytic shell family the composed derivative is
    attached in closed form; the aggregate exponents must be pairwise
    distinct and nonzero at working precision, otherwise the combination
    is rejected.
    """
    if not monomials:
        raise DomainError("polynomial must have at least one monomial")
    if len(monomials) == 1 and monomials[0].degree == 1 \
            and monomials[0].coefficient.exact == 1:
        i = monomials[0].exponents.index(1)
        return entries[i]
    seen = set()
    for m in monomials:
        if len(m.exponents) != len(entries):
            raise DomainError("exponent tuple length must match entries")
        if m.degree < 1:
            raise DomainError("free term is not allowed")
        if m.coefficient.is_zero_like:
            raise DomainError("monomial coefficients must be nonzero")
        if m.exponents in seen:
            raise DomainError("exponent tuples must be pairwise distinct")
        seen.add(m.exponents)
    p = entries[0].meta["prime"]

    def evaluate(x: PadicNumber) -> PadicNumber:
        vals = [e.function(x) for e in entries]
        total = PadicNumber.zero(p, precision)
        for m in monomials:
            term = m.coefficient
            for v, k in zip(vals, m.exponents):
                term = term * v ** k
            total = total + term
        return total

    fn = PadicFunction(evaluate, domain_tag="Qp")
    entry = ZooEntry(name="poly", function=fn,
                     meta={"prime": p, "precision": precision,
                           "monomials": list(monomials)})

    betas = [e.meta.get("beta") for e in entries]
    if all(b is not None for b in betas):
        _attach_shell_derivative(entry, entries, monomials, betas, p,
                                 precision, search_depth)
    return entry


def _attach_shell_derivative(entry, entries, monomials, betas, p,
                             precision, search_depth) -> None:
    one = PadicNumber.one(p, precision)
    agg = []
    for m in monomials:
        beta_r = PadicNumber.zero(p, precision)
        for b, k in zip(betas, m.exponents):
            beta_r = beta_r + PadicNumber.from_int(k, p, precision) * b
        agg.append(beta_r)
    for i, a in enumerate(agg):
        if a.is_zero_like:
            raise DomainError("aggregate exponents must be nonzero")
        for b in agg[i + 1:]:
            if (a - b).is_zero_like:
                raise DomainError(
                    "aggregate exponents must be pairwise distinct")

    def derivative(x: PadicNumber) -> PadicNumber:
        x = _expand(x, precision)
        split = _head_and_offset(x, p)
        if split is None:
            return PadicNumber.zero(p, precision)
        n, y = split
        total = PadicNumber.zero(p, precision)
        for m, beta_r in zip(monomials, agg):
            scale = PadicNumber.from_rational(1, p ** (n * m.degree), p,
                                              precision)
            total = total + scale * m.coefficient * beta_r \
                * pow_one_plus(y, beta_r - one, precision)
        return total

    entry.derivative = PadicFunction(derivative, domain_tag="Qp")
    entry.meta["aggregate_exponents"] = agg

    # leading degree group for the norm-growth claim
    degrees = sorted({m.degree for m in monomials}, reverse=True)
    groups = {d: [(m, b) for m, b in zip(monomials, agg) if m.degree == d]
              for d in degrees}

    def claim_derivative_norm_growth(n_max: int = 20) -> ClaimResult:
        k1 = degrees[0]
        lead = groups[k1]
        gammas = [m.coefficient * b for m, b in lead]
        alphas = [b - one for m, b in lead]
        y1 = find_nonvanishing_offset(gammas, alphas, search_depth, precision)
        if y1 is None:
            return ClaimResult("derivative-norm-growth", False,
                               {"reason": "no nonvanishing witness found"})
        c = _sum_of_powers(gammas, alphas, y1, precision).abs_value()
        # first n from which the leading group dominates every other group
        n0 = 1
        for d in degrees[1:]:
            gs = [m.coefficient * b for m, b in groups[d]]
            as_ = [b - one for m, b in groups[d]]
            s = _sum_of_powers(gs, as_, y1, precision)
            if s.is_zero_like:
                continue
            sn = s.abs_value()
            while Fraction(p) ** (n0 * d) * sn >= Fraction(p) ** (n0 * k1) * c:
                n0 += 1
        for n in range(n0, n_max + 1):
            x = PadicNumber.from_rational(1, p ** n, p, precision) + y1
            want = Fraction(p) ** (n * k1) * c
            got = derivative(x).abs_value()
            if got != want:
                return ClaimResult("derivative-norm-growth", False,
                                   {"n": n, "got": str(got),
                                    "want": str(want)})
        return ClaimResult("derivative-norm-growth", True, {
            "n0": n0, "n_max": n_max, "leading_degree": k1,
            "constant_norm": float(c), "witness": y1.render()})

    entry.claims["derivative-norm-growth"] = claim_derivative_norm_growth


# ---------------------------------------------------------------------------
# pinched analytic branch: continuous everywhere, wild at one point

def cor15_gbeta(beta: PadicNumber, a: PadicNumber, p: int,
                precision: int = DEFAULT_PRECISION) -> ZooEntry:
    """On the closed ball of radius p**-(n^2+1) around a + p**(n^2) the
    value is p**n [p**-(n^2)(x-a)]**beta; zero elsewhere."""
    if beta.is_zero_like or beta.valuation < 0:
        raise DomainError("exponent must be a nonzero p-adic integer")
    one = PadicNumber.one(p, precision)

    def branch(x: PadicNumber) -> Optional[tuple]:
        d = _expand(x, precision) - a
        if d.is_exact_zero:
            return None
        if d.is_bounded_zero:
            # x could be in a ball with n^2 >= abs_precision only
            n_min = math.isqrt(max(0, d.abs_precision - 1)) + 1
            raise InsufficientPrecision(f"value bounded by p^-{n_min}")
        v = d.valuation
        n = math.isqrt(v) if v >= 1 else 0
        if n < 1 or n * n != v or d.digit(v) != 1:
            return None
        y = PadicNumber.from_rational(p ** v, 1, p, d.abs_precision)
        return n, d / y - one

    def evaluate(x: PadicNumber) -> PadicNumber:
        try:
            b = branch(x)
        except InsufficientPrecision:
            d = x - a
            n_min = math.isqrt(max(0, d.abs_precision - 1)) + 1
            return PadicNumber.bounded_zero(p, n_min)
        if b is None:
            return PadicNumber.zero(p, precision)
        n, y = b
        return PadicNumber.from_int(p ** n, p, precision + n) \
            * pow_one_plus(y, beta, precision)

    def derivative(x: PadicNumber) -> PadicNumber:
        b = branch(x)
        if b is None:
            d = x - a
            if d.is_exact_zero:
                raise DomainError("not differentiable at the pinch point")
            return PadicNumber.zero(p, precision)
        n, y = b
        scale = PadicNumber.from_rational(p ** n, p ** (n * n), p, precision)
        return scale * beta * pow_one_plus(y, beta - one, precision)

    fn = PadicFunction(evaluate, domain_tag="Qp")
    entry = ZooEntry(
        name="cor15_g",
        function=fn,
        derivative=PadicFunction(derivative, domain_tag="Qp"),
        meta={"prime": p, "beta": beta, "center": a, "precision": precision},
    )

    def claim_values_on_centers(limit: int = 6) -> ClaimResult:
        for n in range(1, limit + 1):
            x = a + PadicNumber.from_int(p ** (n * n), p, precision + n * n)
            got = evaluate(x)
            want = PadicNumber.from_int(p ** n, p, precision)
            if not got.agrees_with(want):
                return ClaimResult("center-values", False, {"n": n})
        return ClaimResult("center-values", True, {"limit": limit})

    entry.claims = {"center-values": claim_values_on_centers}
    return entry


def cor15_Fbeta(beta: PadicNumber, a: PadicNumber, p: int,
                precision: int = DEFAULT_PRECISION) -> ZooEntry:
    """Sum of the shell function and the pinched branch around ``a``:
    continuous everywhere, differentiable except at a, derivative unbounded
    both near and far from a."""
    f_entry = thm16_fbeta(beta, p, precision)
    g_entry = cor15_gbeta(beta, a, p, precision)

    def evaluate(x: PadicNumber) -> PadicNumber:
        return f_entry.function(x) + g_entry.function(x)

    fn = PadicFunction(evaluate, domain_tag="Qp")
    entry = ZooEntry(
        name="cor15",
        function=fn,
        meta={"prime": p, "beta": beta, "center": a, "precision": precision,
              "parts": (f_entry, g_entry)},
    )

    def quotient_witness(limit: int = 6) -> Iterator:
        for n in range(1, limit + 1):
            w = max(precision, n * n + n + 8)
            x = a + PadicNumber.from_int(p ** (n * n) + p ** (n * n + 1), p, w)
            yield n, x

    entry.witnesses["quotients"] = quotient_witness

    def claim_quotient_growth(limit: int = 6) -> ClaimResult:
        fa = evaluate(a)
        for n, x in quotient_witness(limit):
            q = (evaluate(x) - fa) / (x - a)
            want = Fraction(p) ** (n * n - n)
            if q.abs_value() != want:
                return ClaimResult("quotient-growth", False,
                                   {"n": n, "got": str(q.abs_value())})
        return ClaimResult("quotient-growth", True, {"limit": limit})

    def claim_continuity_at_center(limit: int = 5) -> ClaimResult:
        # |x - a| < p^{1-n^2} must force |F(x)| <= p^-n
        for n in range(1, limit + 1):
            for ball_n in range(n, n + 3):
                w = max(precision, ball_n * ball_n + ball_n + 8)
                x = a + PadicNumber.from_int(
                    p ** (ball_n * ball_n) + p ** (ball_n * ball_n + 2), p, w)
                if (x - a).abs_value() >= Fraction(p) ** (1 - n * n):
                    continue
                val = evaluate(x) - fa_cache
                if val.norm_upper() > Fraction(p) ** (-n):
                    return ClaimResult("continuity-at-center", False,
                                       {"n": n, "ball_n": ball_n})
        return ClaimResult("continuity-at-center", True, {"limit": limit})

    fa_cache = evaluate(a)
    entry.claims = {
        "quotient-growth": claim_quotient_growth,
        "continuity-at-center": claim_continuity_at_center,
    }
    return entry


# ---------------------------------------------------------------------------
# sphere step functions: bounded derivative off 0, not Lipschitz of any order

def prop26_fN(N: Optional[IndexSet], p: int,
              precision: int = DEFAULT_PRECISION) -> ZooEntry:
    """p**n on the sphere |x| = p**-(n^2) for n in N (all n >= 1 when N is
    None); zero elsewhere.  Locally constant off 0 with zero derivative,
    not Lipschitz of any positive order at 0."""

    def member(n: int) -> bool:
        return True if N is None else n in N

    def evaluate(x: PadicNumber) -> PadicNumber:
        x = _expand(x, precision)
        if x.is_exact_zero:
            return PadicNumber.zero(p, precision)
        if x.is_bounded_zero:
            n_min = math.isqrt(max(0, x.abs_precision - 1)) + 1
            return PadicNumber.bounded_zero(p, n_min)
        v = x.valuation
        n = math.isqrt(v) if v >= 1 else 0
        if n >= 1 and n * n == v and member(n):
            return PadicNumber.from_int(p ** n, p, precision + n)
        return PadicNumber.zero(p, precision)

    def derivative(x: PadicNumber) -> PadicNumber:
        if x.is_zero_like:
            raise DomainError("not differentiable at 0")
        return PadicNumber.zero(p, precision)

    fn = PadicFunction(evaluate, domain_tag="Qp")
    name = "prop26_g" if N is None else "prop26"
    entry = ZooEntry(
        name=name,
        function=fn,
        derivative=PadicFunction(derivative, domain_tag="Qp"),
        meta={"prime": p, "index_set": N, "precision": precision},
    )

    def claim_ratio_growth(limit: int = 10,
                           alphas: Sequence[int] = (1, 2)) -> ClaimResult:
        source = N.members(1) if N is not None else iter(range(1, limit + 1))
        checked = 0
        for n in source:
            if n > limit or checked >= limit:
                break
            x = PadicNumber.from_int(p ** (n * n), p,
                                     max(precision, n * n + 8))
            fx = evaluate(x).abs_value()
            for alpha in alphas:
                want = Fraction(p) ** ((-1 + alpha * n) * n)
                if fx / x.abs_value() ** alpha != want:
                    return ClaimResult("ratio-growth", False,
                                       {"n": n, "alpha": alpha})
            checked += 1
        return ClaimResult("ratio-growth", bool(checked),
                           {"points": checked, "limit": limit})

    def claim_derivative_zero(samples: int = 1000, seed: int = 0) -> ClaimResult:
        import random
        rng = random.Random(seed)
        for _ in range(samples):
            x = _random_nonzero(rng, p, precision)
            h = PadicNumber.from_int(
                p ** (abs(x.valuation) ** 2 + abs(x.valuation) + 2), p,
                precision)
            q = (evaluate(x + h) - evaluate(x)) / h
            if not q.is_zero_like:
                return ClaimResult("derivative-zero", False,
                                   {"x": x.render()})
        return ClaimResult("derivative-zero", True, {"samples": samples})

    entry.claims = {
        "ratio-growth": claim_ratio_growth,
        "derivative-zero": claim_derivative_zero,
    }
    return entry


def prop26_g(p: int, precision: int = DEFAULT_PRECISION) -> ZooEntry:
    return prop26_fN(None, p, precision)


# ---------------------------------------------------------------------------
# digit-pair truncation: differentiable off a measure-zero set

def E_prefix_member(x: PadicNumber, k: int) -> bool:
    """No zero digit pair among the first k pairs of x in Z_p."""
    if k < 0:
        raise DomainError("pair count must be nonnegative")
    for i in range(k):
        if x.digit(2 * i) == 0 and x.digit(2 * i + 1) == 0:
            return False
    return True


def thm2_f(p: int, precision: int = DEFAULT_PRECISION) -> ZooEntry:
    """Identity until the first zero digit pair, then truncation there; zero
    when the first pair already vanishes.  Continuous; differentiable
    exactly at points with a zero pair, where it is locally constant."""

    def evaluate(x: PadicNumber) -> PadicNumber:
        x = _expand(x, precision)
        if x.is_exact_zero:
            return PadicNumber.zero(p, precision)
        if not x.is_zero_like and x.valuation < 0:
            raise DomainError("defined on Z_p only")
        if x.is_bounded_zero:
            if x.abs_precision >= 2:
                return PadicNumber.zero(p, precision)
            raise InsufficientPrecision("first digit pair unknown")
        hi = x.abs_precision
        pairs = hi // 2
        if pairs < 1:
            raise InsufficientPrecision("first digit pair unknown")
        for i in range(pairs):
            if x.digit(2 * i) == 0 and x.digit(2 * i + 1) == 0:
                if i == 0:
                    return PadicNumber.zero(p, precision)
                total = sum(x.digit(j) * p ** j for j in range(2 * i))
                return PadicNumber.from_int(total, p, precision)
        # no zero pair among the known pairs: agrees with x so far
        return x.truncated(2 * pairs)

    fn = PadicFunction(evaluate, modulus=lambda m: m + 2, domain_tag="Zp")
    entry = ZooEntry(name="thm2_f", function=fn,
                     meta={"prime": p, "precision": precision})

    def deviation_witness(x: PadicNumber, limit: int) -> Iterator:
        """Perturbations of an all-pairs-nonzero point that zero out one
        pair and restart two digits later."""
        for n in range(limit):
            if 2 * n + 12 >= x.abs_precision:
                return
            # copy pairs 0..n, zero out pair n+1, restart with a 1 digit
            digits = [x.digit(j) for j in range(2 * n + 2)] + [0, 0, 1]
            xbar = PadicNumber.from_digits(p, 0, digits, x.abs_precision)
            yield n, (x, xbar)

    entry.witnesses["deviation"] = deviation_witness

    def claim_continuity_modulus(pairs: int = 10_000, m_max: int = 10,
                                 seed: int = 0) -> ClaimResult:
        import random
        rng = random.Random(seed)
        for i in range(pairs):
            m = 1 + i % m_max
            x = _random_zp(rng, p, precision, min_valuation=0)
            y = x + _random_zp(rng, p, precision,
                               min_valuation=2 * m + 2)
            if (x - y).norm_upper() >= Fraction(p) ** (-(2 * m + 1)):
                continue
            d = (evaluate(x) - evaluate(y)).norm_upper()
            if d >= Fraction(p) ** (-(2 * m + 1)):
                return ClaimResult("continuity-modulus", False,
                                   {"m": m, "x": x.render()})
        return ClaimResult("continuity-modulus", True,
                           {"pairs": pairs, "m_max": m_max})

    def claim_deviation(steps: int = 10, seed: int = 0) -> ClaimResult:
        import random
        rng = random.Random(seed)
        x = _random_no_zero_pair(rng, p, precision)
        one = PadicNumber.one(p, precision)
        count = 0
        for n, (a, b) in deviation_witness(x, steps):
            q = (evaluate(a) - evaluate(b)) / (a - b)
            dev = (q - one).norm_upper()
            if (q - one).is_bounded_zero or dev < Fraction(p) ** -2:
                return ClaimResult("deviation", False, {"n": n})
            count += 1
        return ClaimResult("deviation", count > 0, {"steps": count})

    entry.claims = {
        "continuity-modulus": claim_continuity_modulus,
        "deviation": claim_deviation,
    }
    return entry


def thm2_g(p: int, precision: int = DEFAULT_PRECISION,
           N: Optional[IndexSet] = None) -> ZooEntry:
    """Rescaled copies p**n f(x') on the disjoint balls p**n + p**(n+1) Z_p
    (restricted to n in N when given); zero elsewhere.  Continuous, with
    quotient norms identically 1 along the canonical sequence at 0."""
    f_entry = thm2_f(p, precision)
    f = f_entry.function

    def evaluate(x: PadicNumber) -> PadicNumber:
        x = _expand(x, precision)
        if x.is_exact_zero:
            return PadicNumber.zero(p, precision)
        if x.is_bounded_zero:
            return PadicNumber.bounded_zero(p, x.abs_precision)
        if x.valuation < 0:
            raise DomainError("defined on Z_p only")
        n = x.valuation
        if n < 1 or x.digit(n) != 1 or (N is not None and n not in N):
            return PadicNumber.zero(p, precision)
        shift = PadicNumber.from_int(p ** n, p, x.abs_precision)
        xprime = (x - shift) / PadicNumber.from_int(p ** (n + 1), p,
                                                    x.abs_precision + n + 1)
        return PadicNumber.from_int(p ** n, p, precision + n) * f(xprime)

    fn = PadicFunction(evaluate, domain_tag="Zp")
    name = "thm2_g" if N is None else "thm2_fN"
    entry = ZooEntry(name=name, function=fn,
                     meta={"prime": p, "precision": precision,
                           "index_set": N})

    def zero_witness(limit: int = 40) -> Iterator:
        source = N.members(1) if N is not None else iter(range(1, limit + 1))
        for n in source:
            if n > limit:
                return
            w = max(precision, n + 16)
            # p^n (1 + p + p^2 + ...) = p^n / (1 - p)
            yield n, PadicNumber.from_rational(p ** n, 1 - p, p, w)

    entry.witnesses["at-zero"] = zero_witness

    def claim_not_differentiable_at_zero(limit: int = 40) -> ClaimResult:
        zero = PadicNumber.zero(p, precision)
        trace = probe_derivative(fn, zero, zero_witness(limit), steps=limit)
        ok = bool(trace.rows) and all(r.norm == 1 for r in trace.rows)
        return ClaimResult("quotient-norm-one", ok,
                           {"steps": len(trace.rows),
                            "verdict": trace.verdict.kind})

    entry.claims = {"quotient-norm-one": claim_not_differentiable_at_zero}
    return entry


def thm2_fN(N: IndexSet, p: int,
            precision: int = DEFAULT_PRECISION) -> ZooEntry:
    return thm2_g(p, precision, N=N)


# ---------------------------------------------------------------------------
# combinations and random points

def linear_combination(entries: Sequence[ZooEntry],
                       coeffs: Sequence[PadicNumber],
                       precision: int = DEFAULT_PRECISION) -> ZooEntry:
    """Pointwise sum of coeff_i * entry_i."""
    if len(entries) != len(coeffs):
        raise DomainError("need one coefficient per entry")
    p = entries[0].meta["prime"]

    def evaluate(x: PadicNumber) -> PadicNumber:
        total = PadicNumber.zero(p, precision)
        for c, e in zip(coeffs, entries):
            total = total + c * e.function(x)
        return total

    return ZooEntry(
        name="combination",
        function=PadicFunction(evaluate,
                               domain_tag=entries[0].function.domain_tag),
        meta={"prime": p, "precision": precision, "coefficients": coeffs},
    )


def _random_zp(rng, p: int, precision: int,
               min_valuation: int = 0) -> PadicNumber:
    digits = [rng.randrange(p) for _ in range(precision - min_valuation)]
    x = PadicNumber.from_digits(p, min_valuation, digits, precision)
    if x.is_zero_like:
        return PadicNumber.bounded_zero(p, precision)
    return x


def _random_unit(rng, p: int, precision: int) -> PadicNumber:
    digits = [rng.randrange(1, p)] + [rng.randrange(p)
                                      for _ in range(precision - 1)]
    return PadicNumber.from_digits(p, 0, digits, precision)


def _random_nonzero(rng, p: int, precision: int,
                    valuation_range: tuple[int, int] = (-4, 5)) -> PadicNumber:
    v = rng.randrange(*valuation_range)
    digits = [rng.randrange(1, p)] + [rng.randrange(p)
                                      for _ in range(precision - 1)]
    return PadicNumber.from_digits(p, v, digits, v + precision)


def _random_no_zero_pair(rng, p: int, precision: int) -> PadicNumber:
    digits = []
    for _ in range(precision // 2):
        while True:
            a, b = rng.randrange(p), rng.randrange(p)
            if (a, b) != (0, 0):
                digits.extend([a, b])
                break
    return PadicNumber.from_digits(p, 0, digits, 2 * (precision // 2))


# ---------------------------------------------------------------------------
# registry

def default_index_set(p: int = 2, k: int = 3, bit: int = 0,
                      ground: str = "N") -> IndexSet:
    return IndexSet(k, bit, 1 if ground == "N" else 0)


def build_entry(name: str, p: int, precision: int = DEFAULT_PRECISION,
                family_size: int = 3, member_bit: int = 0,
                beta: Optional[PadicNumber] = None) -> ZooEntry:
    """Build a registered entry with canonical parameters."""
    N = IndexSet(family_size, member_bit, 1)
    N0 = IndexSet(family_size, member_bit, 0)
    if beta is None:
        beta = PadicNumber.from_int(1 + p, p, precision)
    builders = {
        "thm34i": lambda: thm34i_fN(N, p, precision),
        "thm34ii": lambda: thm34ii_gN(N0, p, precision),
        "lip_fN": lambda: lip_fN(N0, p, precision),
        "thm16": lambda: thm16_fbeta(beta, p, precision),
        "cor15": lambda: cor15_Fbeta(beta, PadicNumber.zero(p, precision),
                                     p, precision),
        "cor15_g": lambda: cor15_gbeta(beta, PadicNumber.zero(p, precision),
                                       p, precision),
        "prop26": lambda: prop26_fN(N, p, precision),
        "prop26_g": lambda: prop26_g(p, precision),
        "thm2_f": lambda: thm2_f(p, precision),
        "thm2_g": lambda: thm2_g(p, precision),
        "thm2_fN": lambda: thm2_fN(N, p, precision),
    }
    if name not in builders:
        raise DomainError(f"unknown entry {name!r}; have {sorted(builders)}")
    return builders[name]()


ENTRY_NAMES = ("thm34i", "thm34ii", "lip_fN", "thm16", "cor15", "cor15_g",
               "prop26", "prop26_g", "thm2_f", "thm2_g", "thm2_fN")
