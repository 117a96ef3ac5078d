"""Numerical evaluation of the closed-form bounds for the G(n, r, 1) lemmas.

Everything that can underflow a double is carried as a natural log
(:class:`LogReal`).  Exact integer/rational arithmetic is used wherever the
quantity is a binomial expression, so golden values are reproducible.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import asdict, dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .combinatorics import binomial

__all__ = [
    "LogReal",
    "BoundReport",
    "Constants",
    "ConfigError",
    "PreconditionError",
    "lemma_tech_lhs",
    "lemma_tech_margin",
    "lemma_tech_best_c",
    "lemma_tech_c2",
    "vandermonde_split_violations",
    "chernoff_tail",
    "chernoff_empirical_tail",
    "union_exponent_constant",
    "p0_threshold",
    "UnionBound",
    "bipartite_union_bound",
    "union_crossing",
    "geometric_grid",
    "turan_chain",
    "frankl_furedi_alpha",
    "OutOfRegimeWarning",
]


class PreconditionError(ValueError):
    pass


class ConfigError(ValueError):
    pass


class OutOfRegimeWarning(UserWarning):
    pass


# ----------------------------------------------------------------------------
# log-domain reals
# ----------------------------------------------------------------------------


@dataclass(frozen=True, order=False)
class LogReal:
    """``sign * exp(log)``; ``log = -inf`` encodes zero."""

    log: float
    sign: int = 1

    @classmethod
    def of(cls, value) -> "LogReal":
        if value == 0:
            return cls(-math.inf, 0)
        sign = 1 if value > 0 else -1
        # math.log is exact enough on big ints and Fractions
        mag = -value if sign < 0 else value
        if isinstance(mag, Fraction):
            return cls(math.log(mag.numerator) - math.log(mag.denominator), sign)
        return cls(math.log(mag), sign)

    @classmethod
    def from_log(cls, log: float) -> "LogReal":
        return cls(log, 0 if log == -math.inf else 1)

    def __mul__(self, other: "LogReal") -> "LogReal":
        if self.sign == 0 or other.sign == 0:
            return LogReal(-math.inf, 0)
        return LogReal(self.log + other.log, self.sign * other.sign)

    def __add__(self, other: "LogReal") -> "LogReal":
        if self.sign == 0:
            return other
        if other.sign == 0:
            return self
        if self.sign == other.sign:
            return LogReal(float(np.logaddexp(self.log, other.log)), self.sign)
        big, small = (self, other) if self.log >= other.log else (other, self)
        if big.log == small.log:
            return LogReal(-math.inf, 0)
        return LogReal(big.log + math.log1p(-math.exp(small.log - big.log)), big.sign)

    def __float__(self) -> float:
        if self.sign == 0:
            return 0.0
        try:
            return self.sign * math.exp(self.log)
        except OverflowError:
            return self.sign * math.inf

    @property
    def log10(self) -> float:
        return self.log / math.log(10)

    def __lt__(self, other) -> bool:
        other = other if isinstance(other, LogReal) else LogReal.of(other)
        return self._key() < other._key()

    def __le__(self, other) -> bool:
        other = other if isinstance(other, LogReal) else LogReal.of(other)
        return self._key() <= other._key()

    def _key(self):
        if self.sign == 0:
            return (0, 0.0)
        return (self.sign, self.sign * self.log)

    def __repr__(self) -> str:
        if self.sign == 0:
            return "LogReal(0)"
        s = "-" if self.sign < 0 else ""
        return f"LogReal({s}e^{self.log:.6g})"


def log_sum(logs: Iterable[float]) -> float:
    arr = np.asarray(list(logs), dtype=float)
    if arr.size == 0:
        return -math.inf
    m = arr.max()
    if m == -math.inf:
        return -math.inf
    return float(m + np.log(np.exp(arr - m).sum()))


def _log(x) -> float:
    return LogReal.of(x).log if x > 0 else -math.inf


# ----------------------------------------------------------------------------
# reports and constants
# ----------------------------------------------------------------------------


@dataclass
class BoundReport:
    """Both sides of an inequality ``lhs <= rhs`` (or ``>=``) at given params.

    ``lhs``/``rhs`` are natural logs unless ``domain`` says otherwise;
    ``margin`` is ``rhs - lhs`` oriented so that positive means satisfied.
    """

    name: str
    params: dict
    lhs: float
    rhs: float
    margin: float
    satisfied: bool
    domain: str = "ln"
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        def clean(v):
            if isinstance(v, Fraction):
                return str(v)
            if isinstance(v, float) and not math.isfinite(v):
                return str(v)
            if isinstance(v, dict):
                return {k: clean(x) for k, x in v.items()}
            if isinstance(v, (list, tuple)):
                return [clean(x) for x in v]
            return v

        return clean(asdict(self))


# Turan-type edge ratio e(L) * n / l**2 for random L with l = ceil(1.2 C(n, r-2)),
# measured once with graph.edge_ratio_scan (seed 2024) and pinned:
# r=3 over n in 20..60, r=4 over n in 12..30.
EDGE_RATIO_BANDS = {3: (3.22, 4.55), 4: (2.67, 5.66)}


@dataclass(frozen=True)
class Constants:
    """Unpinned constants of the G(n, r, 1) argument.

    ``None`` means "derive": ``c`` from :func:`lemma_tech_best_c`, ``c0``
    from the pinned edge-ratio band, ``alpha = 2r / ln 2`` (from
    ``n^2 * N^(x-1) * M^x <= n^(2rx)``), ``eps_prime = (c/2)^(1/(r-3))``,
    ``eps = c * eps_prime`` and ``c_tilde = (c r!)^(1/(r-1))``.
    """

    c: float | None = None
    c0: float | None = None
    alpha: float | None = None
    c2: float | None = None
    eps: float | None = None
    eps_prime: float | None = None
    c_tilde: float | None = None
    t0: float = 0.999
    log_base: str = "e"
    union_constant: Fraction = Fraction(1, 156)
    tech_n_max: int = 200

    @classmethod
    def load(cls, path) -> "Constants":
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
        known = set(cls.__dataclass_fields__)
        unknown = set(raw) - known
        if unknown:
            raise ConfigError(f"unknown constants: {sorted(unknown)}")
        if "union_constant" in raw:
            raw["union_constant"] = Fraction(raw["union_constant"])
        return cls(**raw)

    def to_json(self) -> dict:
        d = asdict(self)
        d["union_constant"] = str(self.union_constant)
        return d

    def resolve(self, r: int) -> "Constants":
        if self.log_base not in ("e", "2"):
            raise ConfigError(f"log_base must be 'e' or '2', got {self.log_base!r}")
        c = self.c
        if c is None:
            c = float(lemma_tech_best_c(r, range(max(2 * r, 8), self.tech_n_max + 1)))
        c0 = self.c0
        if c0 is None:
            if r not in EDGE_RATIO_BANDS:
                raise ConfigError(f"no pinned edge-ratio band for r={r}; supply c0")
            c0 = EDGE_RATIO_BANDS[r][0]
        alpha = self.alpha if self.alpha is not None else 2 * r / math.log(2)
        eps_prime = (c / 2) ** (1 / (r - 3)) if r > 3 else None
        if self.eps_prime is not None:
            if eps_prime is None or not math.isclose(self.eps_prime, eps_prime, rel_tol=1e-9):
                raise ConfigError(
                    f"eps_prime={self.eps_prime} does not match (c/2)^(1/(r-3)) = {eps_prime}"
                )
        eps = self.eps if self.eps is not None else (c * eps_prime if eps_prime else None)
        if eps is not None and eps_prime is not None and eps > c * eps_prime * (1 + 1e-12):
            raise ConfigError(
                f"eps={eps} exceeds c * eps_prime = {c * eps_prime}; i < eps' n would not follow"
            )
        c_tilde = self.c_tilde if self.c_tilde is not None else (c * math.factorial(r)) ** (1 / (r - 1))
        c2 = self.c2 if self.c2 is not None else float(
            lemma_tech_c2(r, range(max(2 * r, 8), self.tech_n_max + 1)))
        return replace(self, c=c, c0=c0, alpha=alpha, eps=eps, eps_prime=eps_prime,
                       c_tilde=c_tilde, c2=c2)


def _ln(x: float, base: str) -> float:
    return math.log(x) if base == "e" else math.log2(x)


# ----------------------------------------------------------------------------
# Difference lemma: C(n-r-1, r-2) - C(n-r-1-i, r-2) >= c i n^(r-3)
# ----------------------------------------------------------------------------


def lemma_tech_lhs(n: int, r: int, i: int) -> int:
    return binomial(n - r - 1, r - 2) - binomial(n - r - 1 - i, r - 2)


def _check_tech(n: int, r: int, i: int) -> None:
    if not (0 <= i <= n and n >= 2 * r - 4):
        raise PreconditionError(f"need 0 <= i <= n and n >= 2r - 4; got n={n}, r={r}, i={i}")


def lemma_tech_margin(n: int, r: int, i: int, c: float | None = None) -> BoundReport:
    """``lhs = C(n-r-1, r-2) - C(n-r-1-i, r-2)`` against ``c i n^(r-3)``.

    Also reports the split used to prove it: for ``i < n/2`` the truncated
    Vandermonde bound ``lhs >= i C(n-r-i-1, r-3)``; for ``i >= n/2`` the ratio
    ``C(n-r-1-i, r-2) / C(n-r-1, r-2)``.
    """
    _check_tech(n, r, i)
    if c is None:
        c = float(lemma_tech_best_c(r, range(max(2 * r, 8), 201)))
    lhs = lemma_tech_lhs(n, r, i)
    rhs = c * i * n ** (r - 3)
    l_lhs, l_rhs = _log(lhs), _log(rhs)
    extra: dict = {"lhs_exact": lhs}
    if 2 * i < n:
        trunc = i * binomial(n - r - i - 1, r - 3)
        extra["regime"] = "i<n/2"
        extra["vandermonde_truncation"] = trunc
        extra["truncation_holds"] = lhs >= trunc
    else:
        top = binomial(n - r - 1, r - 2)
        extra["regime"] = "i>=n/2"
        extra["tail_ratio"] = (Fraction(binomial(n - r - 1 - i, r - 2), top)
                               if top else None)
    if i == 0:
        margin, ok = 0.0, True
    else:
        margin = l_lhs - l_rhs
        ok = lhs >= rhs
    return BoundReport("lemma_tech", {"n": n, "r": r, "i": i, "c": c}, l_lhs, l_rhs,
                       margin, ok, extra=extra)


def lemma_tech_best_c(r: int, n_range: Iterable[int], i_policy: str = "all") -> Fraction:
    """``min lhs / (i n^(r-3))`` over the grid, exactly.

    ``i_policy``: ``"all"`` scans ``1 <= i <= n``; ``"small"`` only ``i < n/2``;
    ``"large"`` only ``i >= n/2``.
    """
    best = None
    for n in n_range:
        _check_tech(n, r, 0)
        if i_policy == "all":
            irange = range(1, n + 1)
        elif i_policy == "small":
            irange = range(1, (n + 1) // 2)
        elif i_policy == "large":
            irange = range((n + 1) // 2, n + 1)
        else:
            raise ValueError(f"unknown i_policy {i_policy!r}")
        scale = n ** (r - 3)
        for i in irange:
            q = Fraction(lemma_tech_lhs(n, r, i), i * scale)
            if best is None or q < best:
                best = q
    if best is None:
        raise PreconditionError("empty grid")
    return best


def lemma_tech_c2(r: int, n_range: Iterable[int]) -> Fraction:
    """``1 - max C(n-r-1-i, r-2) / C(n-r-1, r-2)`` over ``n/2 <= i <= n``."""
    worst = Fraction(0)
    seen = False
    for n in n_range:
        top = binomial(n - r - 1, r - 2)
        if top == 0:
            continue
        seen = True
        i = (n + 1) // 2  # the ratio is largest at the smallest admissible i
        worst = max(worst, Fraction(binomial(n - r - 1 - i, r - 2), top))
    if not seen:
        raise PreconditionError("no n in range with C(n-r-1, r-2) > 0")
    return 1 - worst


def vandermonde_split_violations(r: int, n_range: Iterable[int]) -> list[tuple[int, int]]:
    """``(n, i)`` with ``i < n/2`` where ``lhs < i C(n-r-i-1, r-3)``."""
    bad = []
    for n in n_range:
        for i in range(0, (n + 1) // 2):
            if lemma_tech_lhs(n, r, i) < i * binomial(n - r - i - 1, r - 3):
                bad.append((n, i))
    return bad


# ----------------------------------------------------------------------------
# Chernoff
# ----------------------------------------------------------------------------


def chernoff_tail(mu: float, delta: float) -> LogReal:
    """``P(X > (1 + delta) mu) <= exp(-delta^2 mu / (2 + delta))``."""
    if mu <= 0 or delta <= 0:
        raise PreconditionError(f"need mu > 0 and delta > 0, got mu={mu}, delta={delta}")
    return LogReal.from_log(-delta * delta * mu / (2 + delta))


def chernoff_empirical_tail(trials: int, p: float, delta: float, samples: int, seed: int) -> float:
    """Empirical ``P(X > (1 + delta) trials p)`` for ``X ~ Bin(trials, p)``."""
    gen = np.random.Generator(np.random.PCG64(seed))
    draws = gen.binomial(trials, p, size=samples)
    return float(np.count_nonzero(draws > (1 + delta) * trials * p)) / samples


def union_exponent_constant(delta=Fraction(1, 6), p=Fraction(1, 2)) -> Fraction:
    """``delta^2 / (2 + delta) * p``; equals 1/156 at the defaults."""
    delta, p = Fraction(delta), Fraction(p)
    return delta * delta / (2 + delta) * p


# ----------------------------------------------------------------------------
# Kneser threshold
# ----------------------------------------------------------------------------


def p0_threshold(n: int, r: int, log_base: str = "e") -> float:
    if n < 2 * r + 1:
        raise PreconditionError(f"p0 needs n >= 2r + 1, got n={n}, r={r}")
    if n == 2 * r + 1:
        return 0.75
    return _ln(n * binomial(n - 1, r), log_base) / binomial(n - r - 1, r - 1)


# ----------------------------------------------------------------------------
# union bound for the "bipartite" case
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class UnionBound:
    n: int
    r: int
    log_terms: tuple[float, ...]           # i = 1 .. n-2
    log_terms_relaxed: tuple[float, ...]
    log_terms_sum_form: tuple[float, ...]  # exponent built from sum_j C(n-j-1-r, r-3)

    @property
    def log_total(self) -> float:
        return log_sum(self.log_terms)

    @property
    def log_total_relaxed(self) -> float:
        return log_sum(self.log_terms_relaxed)

    @property
    def argmax_i(self) -> int:
        return 1 + int(np.argmax(self.log_terms)) if self.log_terms else 0

    def report(self, threshold: float = 1.0) -> BoundReport:
        lt = self.log_total
        rhs = math.log(threshold)
        return BoundReport(
            "union_bound", {"n": self.n, "r": self.r, "threshold": threshold},
            lt, rhs, rhs - lt, lt < rhs,
            extra={
                "log10_total": lt / math.log(10),
                "log10_total_relaxed": self.log_total_relaxed / math.log(10),
                "argmax_i": self.argmax_i,
                "relaxation_dominates": all(
                    a <= b + 1e-9 * max(1.0, abs(b))
                    for a, b in zip(self.log_terms, self.log_terms_relaxed)),
            },
        )


def bipartite_union_bound(n: int, r: int, constant=Fraction(1, 156)) -> UnionBound:
    """Per-``i`` log terms of ``sum_i C(n,2) C(n,r)^i exp(-k D(i))``.

    ``D(i) = C(n-r-1, r-2) - C(n-r-1-i, r-2)``, ``k = constant``.  The relaxed
    form replaces ``C(n,2)`` by ``n^2`` and ``C(n,r)`` by ``n^r``.
    """
    if r < 4:
        raise PreconditionError(f"need r >= 4, got {r}")
    if n < 3:
        return UnionBound(n, r, (), (), ())
    k = float(Fraction(constant))
    top = binomial(n - r - 1, r - 2)
    ln_pairs = math.log(binomial(n, 2))
    ln_verts = math.log(binomial(n, r))
    ln_n = math.log(n)
    exact, relaxed, summed = [], [], []
    running = 0
    for i in range(1, n - 1):
        diff = top - binomial(n - r - 1 - i, r - 2)
        running += binomial(n - i - 1 - r, r - 3)
        exact.append(ln_pairs + i * ln_verts - k * diff)
        relaxed.append(2 * ln_n + i * r * ln_n - k * diff)
        summed.append(ln_pairs + i * ln_verts - k * running)
    return UnionBound(n, r, tuple(exact), tuple(relaxed), tuple(summed))


def geometric_grid(lo: int, hi: int, ratio: float = 1.05) -> list[int]:
    """Integers from ``lo`` to ``hi`` spaced roughly geometrically (both ends kept)."""
    out = []
    x = float(lo)
    while round(x) < hi:
        v = int(round(x))
        if not out or v > out[-1]:
            out.append(v)
        x *= ratio
    if not out or out[-1] != hi:
        out.append(hi)
    return out


def union_crossing(r: int, grid: Sequence[int], threshold: float = 1e-3,
                   constant=Fraction(1, 156)) -> tuple[int | None, list[tuple[int, float]]]:
    """First grid ``n`` after which the total stays below ``threshold``.

    Returns ``(n_star, [(n, log10_total), ...])``; ``n_star`` is ``None`` if
    the last grid point is still above the threshold.
    """
    rows = [(n, bipartite_union_bound(n, r, constant).log_total / math.log(10)) for n in grid]
    lim = math.log10(threshold)
    n_star = None
    for n, lt in reversed(rows):
        if lt < lim:
            n_star = n
        else:
            break
    return n_star, rows


# ----------------------------------------------------------------------------
# the "Turan" case chain
# ----------------------------------------------------------------------------


def _log2_binom(a: float, b: float) -> float:
    if b < 0 or a < b:
        return -math.inf
    return (math.lgamma(a + 1) - math.lgamma(b + 1) - math.lgamma(a - b + 1)) / math.log(2)


def _log2_region_sum(n: int, i: int, lo: int, hi: int, alpha: float, c0: float,
                     window_bits: float = 100.0) -> float:
    """log2 of sum_{x=lo}^{hi} 2^(alpha x ln n - c0 x^2 / i), upper-bounded tails."""
    a = alpha * math.log(n)
    b = c0 / i
    q = lambda x: a * x - b * x * x  # noqa: E731
    x_star = a / (2 * b)
    peak = min(max(int(round(x_star)), lo), hi)
    q_peak = max(q(peak), q(min(max(math.floor(x_star), lo), hi)),
                 q(min(max(math.ceil(x_star), lo), hi)))
    # q(x) >= q_peak - window_bits  <=>  |x - x*| <= sqrt((q(x*) - q_peak + window_bits) / b)
    half = math.sqrt(max(a * a / (4 * b) - q_peak + window_bits, 0.0) / b)
    xa = max(lo, math.floor(x_star - half))
    xb = min(hi, math.ceil(x_star + half))
    xs = np.arange(xa, xb + 1, dtype=float)
    logs = list(a * xs - b * xs * xs)
    # terms outside the window are each below the window edge value
    if xa > lo:
        logs.append(math.log2(xa - lo) + q(xa - 1))
    if xb < hi:
        logs.append(math.log2(hi - xb) + q(xb + 1))
    ln2 = math.log(2)
    return log_sum(np.asarray(logs) * ln2) / ln2


def turan_n0(r: int, alpha: float, c: float, c0: float, n_max: int = 10 ** 7) -> int | None:
    """Least ``n`` with ``alpha ln n / (2 c0) < c n^(r-3)`` (stays true beyond it)."""
    n = 2
    while n <= n_max:
        if alpha * math.log(n) / (2 * c0) < c * n ** (r - 3):
            lo = max(2, n // 2)
            while lo < n and not alpha * math.log(lo) / (2 * c0) < c * lo ** (r - 3):
                lo += 1
            return lo
        n *= 2
    return None


def turan_chain(n: int, r: int, t0: float | None = None,
                constants: Constants | None = None) -> list[BoundReport]:
    """Evaluate every step of the "Turan" case at one ``n``.

    The scanned region is the summation range of the Turan case:
    ``c_tilde n^((r-3)/(r-1)) < i < eps' n`` and
    ``c i n^(r-3) < x < min(eps n^(r-2), C(i, r))``.
    """
    if r < 4:
        raise PreconditionError(f"need r >= 4, got {r}")
    k = (constants or Constants()).resolve(r)
    if t0 is None:
        t0 = k.t0
    if not 0.5 < t0 < 1:
        raise PreconditionError(f"t0 must lie in (1/2, 1), got {t0}")
    c, c0, alpha, eps, eps_p, c_t = k.c, k.c0, k.alpha, k.eps, k.eps_prime, k.c_tilde
    params = {"n": n, "r": r, "t0": t0, "c": c, "c0": c0, "alpha": alpha, "eps": eps,
              "eps_prime": eps_p, "c_tilde": c_t}
    reports: list[BoundReport] = []
    scale = n ** (r - 3)

    reports.append(BoundReport(
        "eps_prime_choice", params, eps_p, (c / 2) ** (1 / (r - 3)), 0.0, True, domain="value"))

    # admissible x is capped by the d(A) condition
    x_cap = binomial(n - 2, r - 2) - binomial(math.ceil(t0 * n) - 2, r - 2)
    reports.append(BoundReport(
        "x_upper_from_t0", params, float(x_cap), eps * n ** (r - 2),
        eps * n ** (r - 2) - x_cap, x_cap <= eps * n ** (r - 2), domain="value",
        extra={"x_cap_exact": x_cap}))

    i_lo = c_t * n ** ((r - 3) / (r - 1))
    i_hi = eps_p * n
    i_values = [i for i in range(1, n + 1) if i_lo < i < i_hi]

    def x_range(i):
        lo = math.floor(c * i * scale) + 1
        hi_real = min(eps * n ** (r - 2), binomial(i, r))
        hi = math.ceil(hi_real) - 1
        return lo, hi

    # x > 2 C(i-2, r-2) at the smallest admissible x of each i
    viol = [i for i in i_values if x_range(i)[0] <= x_range(i)[1]
            and not x_range(i)[0] > 2 * binomial(i - 2, r - 2)]
    reports.append(BoundReport(
        "x_exceeds_2binom", params, float(len(viol)), 0.0, -float(len(viol)), not viol,
        domain="count", extra={"violating_i": viol[:20], "i_scanned": len(i_values)}))

    # below c_tilde n^((r-3)/(r-1)) the x-range (c i n^(r-3), C(i, r)] is empty
    early = [i for i in range(1, n + 1) if i <= i_lo and c * i * scale < binomial(i, r)]
    reports.append(BoundReport(
        "i_lower_bound", params, float(len(early)), 0.0, -float(len(early)), not early,
        domain="count", extra={"i_lower": i_lo, "violating_i": early[:20]}))

    # maximizer of alpha x ln n - c0 x^2 / i sits left of c i n^(r-3)
    lhs = alpha * math.log(n) / (2 * c0)
    rhs = c * scale
    n0 = turan_n0(r, alpha, c, c0)
    reports.append(BoundReport(
        "maximizer_left_of_region", params, lhs, rhs, rhs - lhs, lhs < rhs, domain="value",
        extra={"n0": n0, "x_star_over_i": lhs}))

    # the binomial product is dominated by 2^(alpha x ln n) at the region edges
    worst = -math.inf
    checked = 0
    big_n = binomial(n - 2, r - 2)
    for i in i_values:
        lo, hi = x_range(i)
        if lo > hi:
            continue
        for x in {lo, hi}:
            lp = (_log2_binom(n, 2) + _log2_binom(big_n, x - 1)
                  + _log2_binom(binomial(i, r), x))
            worst = max(worst, lp - alpha * x * math.log(n))
            checked += 1
    reports.append(BoundReport(
        "summand_dominance", params, worst, 0.0, -worst if checked else 0.0,
        worst <= 0 or not checked, domain="log2", extra={"points": checked}))

    # the double sum itself
    logs = []
    for i in i_values:
        lo, hi = x_range(i)
        if lo <= hi:
            logs.append(_log2_region_sum(n, i, lo, hi, alpha, c0))
    ln2 = math.log(2)
    total = log_sum(np.asarray(logs) * ln2) / ln2 if logs else -math.inf
    reports.append(BoundReport(
        "double_sum", params, total, 0.0, -total, total < 0, domain="log2",
        extra={"terms_i": len(logs), "log10_total": total * math.log10(2)}))
    return reports


# ----------------------------------------------------------------------------
# Frankl-Furedi / EKR value
# ----------------------------------------------------------------------------


def frankl_furedi_alpha(n: int, r: int, s: int) -> int:
    """``C(n-s-1, r-s-1)``, the star size; warns when ``r < 2s + 1``."""
    if r < 2 * s + 1:
        warnings.warn(f"r={r} < 2s+1={2 * s + 1}: outside the Frankl-Furedi regime",
                      OutOfRegimeWarning, stacklevel=2)
    return binomial(n - s - 1, r - s - 1)
