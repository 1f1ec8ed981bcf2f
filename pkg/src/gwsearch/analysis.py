"""Size laws and the restart-count law for critical Galton-Watson trees.

Everything here hangs off two identities for the total progeny N of a
critical law with variance sigma^2 and span d:

  * P{N = t} = P{xi_1 + ... + xi_t = t - 1} / t   (random-walk hitting time),
    evaluated exactly by an iterated convolution truncated at sums < t_max,
    cost O(t_max^2 * max_degree);
  * E min(N, b) = sum_{t<=b} t P{N = t} + b P{N > b}, which for large b
    behaves like sqrt(8 b / (pi sigma^2)).

A complete budgeted run restarts once per unexplored subtree root, and
R_n / n converges to 1 / E min(N, b), so R_n * mu_b / n -> 1 and the
normalized count R_n / (sigma n) approaches sqrt(pi / (8 b)).
theorem1_check packages those two ratios for a finished run.

Large-n size asymptotics: P{N = n} ~ d / (sigma sqrt(2 pi) n^{3/2}) on the
lattice n = 1 mod d, and P{N >= n} ~ sqrt(2 / (pi n sigma^2)).

The convolution DP and the brute-force tree enumeration double as
independent oracles: the DP sums walk paths with no positivity constraint
(the 1/t is the cycle-lemma correction), the enumeration multiplies pmf
entries tree by tree.  Both run in exact rational arithmetic for builtins
with rational pmfs, so agreement can be asserted with == rather than a
tolerance.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .offspring import OffspringDistribution
from .seeds import as_generator

# iterated-convolution ceiling; past this only mu_analytic / mu_mc are offered
DP_LIMIT = 100_000
_RATIONAL_DP_LIMIT = 512
_ENUMERATION_LIMIT = 12


@dataclass(frozen=True)
class SizeLaw:
    """P{N = t} for t = 1..t_max plus the remaining tail P{N > t_max}.

    pmf[t] indexes by size (pmf[0] is unused and zero); entries are floats
    or Fractions depending on which path produced them.
    """

    t_max: int
    pmf: tuple
    tail: object

    def __post_init__(self):
        if len(self.pmf) != self.t_max + 1:
            raise ValueError("pmf must have t_max + 1 entries (index 0 unused)")


@dataclass(frozen=True)
class MuEstimate:
    """E min(N, b) by one of the three routes (exact-dp, monte-carlo, analytic)."""

    value: float
    method: str
    std_error: float | None = None


@dataclass(frozen=True)
class Theorem1Report:
    """Restart-law diagnostics for one completed run.

    rho_exact = R * mu_b / n should approach 1; rho_table = R / (sigma n)
    should approach estimate = sqrt(pi / (8 b)).
    """

    n: int
    budget: int
    restarts: int
    sigma: float
    mu: float
    mu_method: str
    rho_exact: float
    rho_table: float
    estimate: float


def mu_analytic(sigma2: float, budget: int) -> float:
    """Leading-order E min(N, b) = sqrt(8 b / (pi sigma^2)).

    Takes the offspring variance rather than a distribution: this is the one
    quantity the leading order depends on.
    """
    if sigma2 <= 0:
        raise ValueError("sigma2 must be positive")
    if budget < 1:
        raise ValueError("budget must be >= 1")
    return math.sqrt(8.0 * budget / (math.pi * sigma2))


def rational_pmf(dist: OffspringDistribution) -> list | None:
    """Exact rational pmf for builtins that have one, else None."""
    name, p = dist.name, dist.param
    if name == "catalan":
        return [Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)]
    if name == "full_binary":
        return [Fraction(1, 2), Fraction(0), Fraction(1, 2)]
    if name in ("ternary_uniform", "uniform"):
        return [Fraction(1, 3)] * 3
    if name == "harmonic":
        tail = [Fraction(1, i * p) for i in range(1, p + 1)]
        return [1 - sum(tail)] + tail
    if name == "binomial":
        q = Fraction(1, p)
        return [math.comb(p, i) * q ** i * (1 - q) ** (p - i) for i in range(p + 1)]
    return None


def size_pmf_exact(dist: OffspringDistribution, t_max: int, rational: bool = False) -> SizeLaw:
    """Exact P{N = t} for t <= t_max via the truncated convolution DP.

    Offspring sums only grow, so convolution mass above t_max - 1 can never
    return to the diagonal and is dropped; each step then costs
    O(t_max * max_degree).  The rational path runs the same recurrence in
    Fraction arithmetic (builtins with rational pmfs only, t_max <= 512).
    """
    if t_max < 1:
        raise ValueError("t_max must be >= 1")
    if rational:
        return _size_pmf_rational(dist, t_max)
    if t_max > DP_LIMIT:
        raise ValueError(
            f"t_max {t_max} above the convolution limit {DP_LIMIT}; "
            "use mu_analytic or mu_mc at that scale")
    p = dist.pmf
    conv = np.ones(1)
    pmf = [0.0] * (t_max + 1)
    for t in range(1, t_max + 1):
        conv = np.convolve(conv, p)[:t_max]
        pmf[t] = float(conv[t - 1]) / t if t - 1 < len(conv) else 0.0
    tail = 1.0 - math.fsum(pmf)
    return SizeLaw(t_max=t_max, pmf=tuple(pmf), tail=tail)


def _size_pmf_rational(dist, t_max):
    if t_max > _RATIONAL_DP_LIMIT:
        raise ValueError(f"rational path capped at t_max = {_RATIONAL_DP_LIMIT}")
    p = rational_pmf(dist)
    if p is None:
        raise ValueError(f"no exact rational pmf for {dist!r}; use the float path")
    support = [(k, pk) for k, pk in enumerate(p) if pk]
    conv = {0: Fraction(1)}
    pmf = [Fraction(0)] * (t_max + 1)
    for t in range(1, t_max + 1):
        nxt = {}
        for s, mass in conv.items():
            for k, pk in support:
                if s + k < t_max:
                    key = s + k
                    nxt[key] = nxt.get(key, Fraction(0)) + mass * pk
        conv = nxt
        pmf[t] = conv.get(t - 1, Fraction(0)) / t
    tail = 1 - sum(pmf)
    return SizeLaw(t_max=t_max, pmf=tuple(pmf), tail=tail)


def mu_exact(dist: OffspringDistribution, budget: int) -> MuEstimate:
    """E min(N, b) from the exact size law: sum_{t<=b} t P{N=t} + b P{N>b}."""
    if budget < 1:
        raise ValueError("budget must be >= 1")
    law = size_pmf_exact(dist, budget)
    value = math.fsum(t * law.pmf[t] for t in range(1, budget + 1)) + budget * law.tail
    return MuEstimate(value=value, method="exact-dp")


def mu_mc(dist: OffspringDistribution, budget: int, samples: int = 1_000_000,
          seed=None, chunk: int = 1 << 20) -> MuEstimate:
    """Monte Carlo E min(N, b): grow each tree at most b nodes, vectorized.

    All live trees advance one node per step, so a batch costs b draws in
    the worst case but only sum(min(N_i, b)) draws in total.  Returns the
    sample mean with its standard error.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = as_generator(seed)
    total = 0.0
    total_sq = 0.0
    left = samples
    while left > 0:
        m = min(chunk, left)
        vals = _min_size_batch(dist.cdf, budget, m, rng)
        total += float(vals.sum())
        total_sq += float((vals * vals).sum())
        left -= m
    mean = total / samples
    if samples == 1:
        return MuEstimate(value=mean, method="monte-carlo", std_error=None)
    var = max(0.0, (total_sq - samples * mean * mean) / (samples - 1))
    return MuEstimate(value=mean, method="monte-carlo",
                      std_error=math.sqrt(var / samples))


def _min_size_batch(cdf, budget, m, rng):
    out = np.full(m, budget, dtype=np.int64)
    alive = np.arange(m)
    open_branches = np.ones(m, dtype=np.int64)
    for t in range(1, budget + 1):
        draws = np.searchsorted(cdf, rng.random(alive.size), side="right")
        open_branches += draws - 1
        done = open_branches == 0
        if t < budget:
            out[alive[done]] = t
        keep = ~done
        alive = alive[keep]
        open_branches = open_branches[keep]
        if alive.size == 0:
            break
    return out


def size_pmf_asymptotic(dist: OffspringDistribution, n: int) -> float:
    """Local limit d / (sigma sqrt(2 pi) n^(3/2)); only sizes 1 mod d exist."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if (n - 1) % dist.span != 0:
        raise ValueError(f"P{{N={n}}} = 0: sizes are 1 mod {dist.span}")
    return dist.span / (dist.sigma * math.sqrt(2.0 * math.pi) * n ** 1.5)


def tail_asymptotic(dist: OffspringDistribution, n: int) -> float:
    """Tail estimate P{N >= n} ~ sqrt(2 / (pi n sigma^2))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return math.sqrt(2.0 / (math.pi * n * dist.variance))


def theorem1_check(restarts: int, n: int, dist: OffspringDistribution, budget: int,
                   mu_method: str = "auto", mc_samples: int = 1_000_000,
                   seed=None) -> Theorem1Report:
    """Package the two restart-law ratios for a finished run.

    mu_method "auto" uses the exact DP up to its limit and Monte Carlo
    above (Table-style sweeps go past the DP range); "exact" / "mc" force
    the route, and the one used is recorded in the report.
    """
    if mu_method not in ("auto", "exact", "mc"):
        raise ValueError("mu_method must be auto, exact, or mc")
    if mu_method == "auto":
        mu_method = "exact" if budget <= DP_LIMIT else "mc"
    if mu_method == "exact":
        est = mu_exact(dist, budget)
    else:
        est = mu_mc(dist, budget, samples=mc_samples, seed=seed)
    sigma = dist.sigma
    return Theorem1Report(
        n=n, budget=budget, restarts=restarts, sigma=sigma,
        mu=est.value, mu_method=est.method,
        rho_exact=restarts * est.value / n,
        rho_table=restarts / (sigma * n),
        estimate=math.sqrt(math.pi / (8.0 * budget)))


def enumerate_small_trees(dist: OffspringDistribution, n_max: int) -> SizeLaw:
    """Brute-force size law: walk every ordered tree with at most n_max nodes.

    Recursion over preorder degree choices, pruning branches that cannot
    close within n_max nodes; each completed tree contributes the product of
    its degree probabilities.  Independent of the convolution DP (their
    agreement is the hitting-time identity, not a shared code path).  Exact
    rational arithmetic whenever the builtin has a rational pmf.
    """
    if not 1 <= n_max <= _ENUMERATION_LIMIT:
        raise ValueError(f"n_max must be in 1..{_ENUMERATION_LIMIT} "
                         "(tree count grows like 4^n)")
    p = rational_pmf(dist)
    if p is None:
        p = [float(x) for x in dist.pmf]
        one, zero = 1.0, 0.0
    else:
        one, zero = Fraction(1), Fraction(0)
    support = [(k, pk) for k, pk in enumerate(p) if pk]
    totals = [zero] * (n_max + 1)

    def grow(nodes, open_branches, prob):
        if open_branches == 0:
            totals[nodes] += prob
            return
        if nodes + open_branches > n_max:  # cannot close in time
            return
        for k, pk in support:
            grow(nodes + 1, open_branches + k - 1, prob * pk)

    grow(0, 1, one)
    tail = one - sum(totals)
    return SizeLaw(t_max=n_max, pmf=tuple(totals), tail=tail)


def write_verification_csv(rows, path) -> None:
    """Write (dist_name, Theorem1Report) pairs as a verification report CSV.

    Columns: dist,b,n,R,rho_table,rho_exact,estimate_sqrt_pi_over_8b.
    Floats carry 6 significant digits.
    """
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["dist", "b", "n", "R", "rho_table", "rho_exact",
                         "estimate_sqrt_pi_over_8b"])
        for name, report in rows:
            writer.writerow([name, report.budget, report.n, report.restarts,
                             f"{report.rho_table:.6g}", f"{report.rho_exact:.6g}",
                             f"{report.estimate:.6g}"])
