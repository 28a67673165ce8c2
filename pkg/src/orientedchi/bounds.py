"""Lower and upper bounds on the oriented chromatic number.

All logarithms are base 2. The counting bound

    C(k, 2) + n * log2(k) >= m        (k = chi_o(G))

comes from comparing the ``2**m`` orientations of ``G`` with the number of
(colouring, orientation) pairs a ``k``-colouring can serve. Solving
``t + log2(t) = avg_degree - log2(n)`` turns it into ``chi_o(G) >= sqrt(n t)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graph import UndirectedGraph, gen_hypercube

RESIDUAL_TOL = 1e-10
INT_GUARD = 1e-9


@dataclass(frozen=True)
class TSolution:
    rhs: float
    t: float
    residual: float


def _t_residual(t: float, rhs: float) -> float:
    return (t - rhs) + math.log2(t)


def solve_t_rhs(rhs: float) -> TSolution:
    """Root of ``t + log2 t = rhs`` by bisection.

    The left side increases strictly from -inf to +inf on (0, inf), so the
    root is unique. Upper end ``max(1, rhs) + 1`` already has positive
    residual; the lower end is halved from 1/2 until the residual is negative.
    """
    hi = max(1.0, rhs) + 1.0
    lo = 0.5
    while _t_residual(lo, rhs) >= 0:
        lo /= 2
    best = (abs(_t_residual(hi, rhs)), hi)
    for _ in range(2000):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        r = _t_residual(mid, rhs)
        if abs(r) < best[0]:
            best = (abs(r), mid)
        if r == 0:
            break
        if r < 0:
            lo = mid
        else:
            hi = mid
    t = best[1]
    return TSolution(rhs, t, _t_residual(t, rhs))


def solve_t(n: int, m: int) -> TSolution:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return solve_t_rhs(2 * m / n - math.log2(n))


def lemma4_constant() -> float:
    """sqrt of the root of ``t + log2 t = 0`` (about 0.80074)."""
    return math.sqrt(solve_t_rhs(0.0).t)


def ksz_holds(k: int, n: int, m: int) -> bool:
    return k * (k - 1) / 2 + n * math.log2(k) >= m


def ksz_lower(n: int, m: int) -> int:
    """Least ``k >= 1`` with ``C(k, 2) + n log2 k >= m``."""
    if n < 1 or m < 0:
        raise ValueError(f"need n >= 1 and m >= 0, got n={n}, m={m}")
    lo, hi = 1, math.isqrt(2 * m) + 2  # C(hi, 2) >= m already
    while lo < hi:
        mid = (lo + hi) // 2
        if ksz_holds(mid, n, m):
            hi = mid
        else:
            lo = mid + 1
    return lo


def lemma3_lower(n: int, m: int) -> float:
    return math.sqrt(n * solve_t(n, m).t)


def _hypothesis_log_regime(n: int, m: int) -> bool:
    return 2 * m / n >= math.log2(n)


def lemma4_lower(n: int, m: int) -> float | None:
    """``0.8007... * sqrt(n)`` when the average degree is at least log2 n."""
    if not _hypothesis_log_regime(n, m):
        return None
    return lemma4_constant() * math.sqrt(n)


@dataclass(frozen=True)
class Lemma5Result:
    value: float | None
    hypothesis: bool
    sufficient_condition: bool  # avg_degree >= (2 + eps) log2 n
    reason: str


def lemma5_lower(n: int, m: int, eps: float = 1.0) -> Lemma5Result:
    if eps <= 0:
        raise ValueError(f"epsilon must be positive, got {eps}")
    delta = 2 * m / n
    logn = math.log2(n)
    t = solve_t(n, m).t
    hyp = delta >= logn + (1 + eps) * math.log2(t)
    sufficient = delta >= (2 + eps) * logn
    gap = 2 * m - n * logn
    if not hyp:
        return Lemma5Result(None, False, sufficient, "hypothesis avg_degree >= log2 n + (1+eps) log2 t fails")
    if gap <= 0:
        # hypothesis can hold with t < 1, but then the bound is vacuous
        return Lemma5Result(None, True, sufficient, "2m - n log2 n <= 0, bound is vacuous")
    return Lemma5Result(math.sqrt(eps / (1 + eps) * gap), True, sufficient, "")


def upper_mx(n: int, max_degree: int) -> float:
    """``2 * max_degree * sqrt(n - 1)``, the harmonious-colouring upper bound."""
    return 2 * max_degree * math.sqrt(n - 1)


def degree_bounds(max_degree: int) -> tuple[float, float]:
    """``(2**(D/2), 2 D^2 2**D)``. The lower one needs a large regular graph."""
    if max_degree < 0:
        raise ValueError("max degree must be >= 0")
    return 2.0 ** (max_degree / 2), 2.0 * max_degree**2 * 2.0**max_degree


def fn_bracket(n: int) -> tuple[float, float]:
    """Known bracket on the fewest arcs of an n-vertex oclique."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return (n / 2) * math.log2(n / 2), float(n * math.ceil(math.log2(n)))


@dataclass(frozen=True)
class HypercubeBracket:
    d: int
    lower: float
    upper: float
    factor_remark: float  # 5d/2


def hypercube_bracket(d: int) -> HypercubeBracket:
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    n = 2**d
    lower = lemma4_lower(n, d * 2 ** (d - 1))
    assert lower is not None  # avg degree is exactly log2 n
    return HypercubeBracket(d, lower, min(2 * d * math.sqrt(n - 1), float(n)), 2.5 * d)


def ceil_guarded(x: float) -> int:
    r = round(x)
    return int(r) if abs(x - r) <= INT_GUARD else math.ceil(x)


def floor_guarded(x: float) -> int:
    r = round(x)
    return int(r) if abs(x - r) <= INT_GUARD else math.floor(x)


def sig6(x: float | None) -> float | None:
    return None if x is None else float(f"{x:.6g}")


@dataclass
class BoundsReport:
    n: int
    m: int
    max_degree: int
    avg_degree: float
    t: float
    eps: float
    ksz: int
    lemma3: float
    lemma4: float | None
    lemma5: float | None
    degree_lb: float
    mx: float | None
    degree_ub: float | None
    trivial: int
    lo: int
    hi: int
    flags: list[str] = field(default_factory=list)
    chain: list[float] | None = None

    def as_dict(self) -> dict:
        return {
            "graph": {
                "n": self.n,
                "m": self.m,
                "max_degree": self.max_degree,
                "avg_degree": sig6(self.avg_degree),
            },
            "lower": {
                "ksz": self.ksz,
                "lemma3": sig6(self.lemma3),
                "lemma4": sig6(self.lemma4),
                "lemma5": sig6(self.lemma5),
                "degree_lb": sig6(self.degree_lb),
            },
            "upper": {
                "mx": sig6(self.mx),
                "degree_ub": sig6(self.degree_ub),
                "trivial": self.trivial,
            },
            "bracket": {"lo": self.lo, "hi": self.hi},
            "flags": list(self.flags),
        }


def regular_chain(n: int, max_degree: int, eps: float) -> list[float]:
    """The three-term sandwich for a regular graph, smallest term first."""
    logn = math.log2(n)
    return [
        math.sqrt(eps / (2 + eps) * max_degree * n),
        math.sqrt(eps / (1 + eps) * (max_degree - logn) * n),
        2 * max_degree * math.sqrt(n - 1),
    ]


def bounds_report(G: UndirectedGraph, eps: float | None = None) -> BoundsReport:
    eps = 1.0 if eps is None else eps
    n, m, dmax = G.n, G.m, G.max_degree
    logn = math.log2(n)
    flags: list[str] = []

    t = solve_t(n, m).t
    ksz = ksz_lower(n, m)
    l3 = math.sqrt(n * t)
    if G.avg_degree < logn:
        flags.append("lemma3: avg_degree < log2 n, outside the dense regime")
    l4 = lemma4_lower(n, m)
    if l4 is None:
        flags.append("lemma4: hypothesis avg_degree >= log2 n fails")
    l5 = lemma5_lower(n, m, eps)
    if l5.value is None:
        flags.append(f"lemma5: {l5.reason}")
    deg_lb, deg_ub = degree_bounds(dmax)
    flags.append("degree_lb: needs a regular graph with sufficiently many vertices; not in bracket")

    mx: float | None = None
    dub: float | None = None
    if dmax >= 1:
        mx, dub = upper_mx(n, dmax), deg_ub
    else:
        flags.append("mx, degree_ub: vacuous for an edgeless graph")

    lowers = [ksz, ceil_guarded(l3)] + [ceil_guarded(x) for x in (l4, l5.value) if x is not None]
    uppers = [n] + [floor_guarded(x) for x in (mx, dub) if x is not None]
    lo, hi = max(lowers), min(uppers)

    chain = None
    if G.is_regular() and dmax >= 1 and l5.sufficient_condition:
        chain = regular_chain(n, dmax, eps)
        if not chain[0] <= chain[1]:
            flags.append(f"regular chain violated: {chain[0]!r} > {chain[1]!r}")
        if not chain[1] <= chain[2]:
            flags.append(f"regular chain violated: {chain[1]!r} > {chain[2]!r}")
    elif G.is_regular() and dmax >= 1:
        flags.append(f"regular chain: max_degree < (2+eps) log2 n for eps={eps}; not checked")

    return BoundsReport(
        n=n, m=m, max_degree=dmax, avg_degree=G.avg_degree, t=t, eps=eps,
        ksz=ksz, lemma3=l3, lemma4=l4, lemma5=l5.value, degree_lb=deg_lb,
        mx=mx, degree_ub=dub, trivial=n, lo=lo, hi=hi, flags=flags, chain=chain,
    )


def hypercube_report(d: int, eps: float | None = None) -> BoundsReport:
    return bounds_report(gen_hypercube(d), eps)
