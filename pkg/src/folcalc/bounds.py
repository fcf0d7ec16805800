"""Effective pluricanonical bounds from a sampled Hilbert function.

The Euler characteristic of the m-th pluricanonical sheaf of a model is a
quasi-polynomial in m: a fixed quadratic part (the searched-for invariants
K^2, K.K_Y, chi(O)) plus the periodic local contributions of the singular
points, plus (on canonical models) a constant -#cusps shift away from m = 0.
Fitting exact quadratics through sample progressions recovers the invariants;
the contribution sum at m = 1 then caps how many singular points can exist
(each contributes at least 1/4), the possible configurations are enumerated
as unit-fraction decompositions, every configuration yields a Cartier-index
candidate, and the worst case over configurations feeds the explicit bound

    N1 = 4*i + ceil(gamma) + 1,   gamma = max(2*(K.K_Y)/K^2 + 3*i, 0),

past which every pluricanonical system is birational.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import (
    InconsistentModelError,
    InconsistentSamplesError,
    NotGeneralTypeError,
    ValidationError,
)
from .linalg import solve_exact
from .rationals import parse_rational

WEAK_NEF = "weak-nef"
CANONICAL = "canonical"
DEFAULT_PERIOD_BOUND = 60


@dataclass(frozen=True)
class HilbertSamples:
    """Finite table m -> chi(m), plus an optional quasi-period hint.

    Values are exact rationals; honest geometric models give integers, but
    the extraction arithmetic never needs that.
    """

    values: Mapping[int, Fraction]
    period_hint: int | None = None

    def __post_init__(self):
        clean: dict[int, Fraction] = {}
        for m, v in dict(self.values).items():
            if not isinstance(m, int) or isinstance(m, bool) or m < 0:
                raise ValidationError("sample keys must be nonnegative integers")
            clean[m] = parse_rational(v)
        object.__setattr__(self, "values", clean)
        if self.period_hint is not None:
            if not isinstance(self.period_hint, int) or self.period_hint < 1:
                raise ValidationError("period hint must be a positive integer")


@dataclass(frozen=True)
class ModelInvariants:
    """Numerical invariants pinned down by the Hilbert samples.

    k2 = K^2, k_dot_ky = K.K_Y, chi_o = chi(O), contribution_sum = the total
    -sum a(y, K) over singular points, cusp_count only on canonical models.
    """

    k2: Fraction
    k_dot_ky: Fraction
    chi_o: int
    contribution_sum: Fraction
    cusp_count: int | None = None


@dataclass(frozen=True)
class SingularityConfiguration:
    """One way to realize the contribution sum.

    Terminal points are recorded by their orders n (each contributing
    (n-1)/(2n)), dihedral points contribute 1/2 apiece and cusps 1 apiece.
    """

    terminal_orders: tuple[int, ...] = ()
    dihedral_count: int = 0
    cusp_count: int = 0

    def contribution_sum(self) -> Fraction:
        total = Fraction(self.dihedral_count, 2) + self.cusp_count
        for n in self.terminal_orders:
            total += Fraction(n - 1, 2 * n)
        return total


@dataclass(frozen=True)
class IndexBoundsResult:
    """Uniform order bound and per-configuration Cartier-index candidates."""

    max_terminal_order: int
    index_candidates: dict[SingularityConfiguration, int]


@dataclass(frozen=True)
class N1Result:
    """The bound and the two numeric thresholds its proof leans on."""

    gamma: Fraction
    n1: int
    square_threshold_holds: bool
    curve_threshold_holds: bool


@dataclass(frozen=True)
class BoundReport:
    """Full pipeline output; n1_worst covers every enumerated configuration.

    The per-configuration index candidates are least common multiples of the
    terminal orders (doubled on canonical models), an explicit upper-bound
    surrogate for the unknown true index. Birationality holds for every
    m >= n1_worst, not just at it.
    """

    mode: str
    invariants: ModelInvariants
    configurations: tuple[SingularityConfiguration, ...]
    max_terminal_order: int
    index_candidates: tuple[int, ...]
    results: tuple[N1Result, ...]
    n1_worst: int


def _fit_quadratic(points) -> tuple[Fraction, Fraction, Fraction]:
    """Exact (a, b, c) with a m^2 + b m + c through three distinct-abscissa points."""
    rows = [[m * m, m, 1] for m, _ in points]
    rhs = [v for _, v in points]
    xs = solve_exact(rows, rhs)
    if xs is None:
        raise ValidationError("quadratic fit needs three distinct sample points")
    return xs[0], xs[1], xs[2]


def _check_mode(mode: str) -> str:
    if mode not in (WEAK_NEF, CANONICAL):
        raise ValidationError(f"mode must be {WEAK_NEF!r} or {CANONICAL!r}")
    return mode


def _resolved_hint(hint: int, mode: str) -> int:
    # the cusp shift is isolated on even multiples, so canonical periods are even
    if mode == CANONICAL and hint % 2:
        return 2 * hint
    return hint


def _try_period(values: Mapping[int, Fraction], mode: str, period: int) -> ModelInvariants | None:
    """Extraction attempt at one period; None when the samples refuse it."""
    needed = {0, 1, period, 2 * period, 3 * period}
    if not needed.issubset(values):
        return None
    if mode == CANONICAL:
        pts = [(k * period, values[k * period]) for k in (1, 2, 3)]
    else:
        pts = [(k * period, values[k * period]) for k in (0, 1, 2)]
    qa, qb, qc = _fit_quadratic(pts)
    k2 = 2 * qa
    k_dot_ky = -2 * qb
    chi_o_value = values[0]
    if chi_o_value.denominator != 1:
        raise InconsistentSamplesError("chi(O) sample at m = 0 must be an integer")
    chi_o = int(chi_o_value)
    cusp_count = None
    if mode == CANONICAL:
        b4 = chi_o - qc
        if b4.denominator != 1 or b4 < 0:
            return None
        cusp_count = int(b4)
    # every sample must sit on the same quadratic up to a constant per residue
    constants: dict[int, Fraction] = {}
    for m, v in values.items():
        if mode == CANONICAL and m == 0:
            continue  # the cusp shift breaks periodicity only at m = 0
        r = m % period
        c = v - (qa * m * m + qb * m)
        if constants.setdefault(r, c) != c:
            return None
    if k2 <= 0:
        raise NotGeneralTypeError("not general type: extracted K^2 is not positive")
    s = -values[1] + (k2 - k_dot_ky) / 2 + chi_o
    return ModelInvariants(
        k2=k2,
        k_dot_ky=k_dot_ky,
        chi_o=chi_o,
        contribution_sum=s,
        cusp_count=cusp_count,
    )


def extract_invariants(
    samples: HilbertSamples,
    mode: str,
    period_bound: int = DEFAULT_PERIOD_BOUND,
) -> ModelInvariants:
    """Recover (K^2, K.K_Y, chi(O), contribution sum[, cusp count]) from samples.

    The quasi-period is the hint when one is supplied (doubled on canonical
    models when odd); otherwise the least period up to ``period_bound`` under
    which every sample is consistent. Needs samples at 0, 1, L, 2L and 3L.
    """
    _check_mode(mode)
    values = samples.values
    if samples.period_hint is not None:
        period = _resolved_hint(samples.period_hint, mode)
        needed = sorted({0, 1, period, 2 * period, 3 * period})
        missing = [m for m in needed if m not in values]
        if missing:
            raise ValidationError(f"samples must include m = {needed}; missing {missing}")
        inv = _try_period(values, mode, period)
        if inv is None:
            raise InconsistentSamplesError(
                f"samples incompatible with quasi-polynomial of period {period}"
            )
        return inv
    start, step = (1, 1) if mode == WEAK_NEF else (2, 2)
    for period in range(start, period_bound + 1, step):
        inv = _try_period(values, mode, period)
        if inv is not None:
            return inv
    raise InconsistentSamplesError(
        f"samples incompatible with quasi-polynomial of any period <= {period_bound}"
    )


def bound_singularity_count(s) -> int:
    """Largest possible number of contributing points: floor(4 * sum).

    Every contributing point adds at least 1/4 to the sum.
    """
    s = Fraction(s)
    if s < 0:
        raise InconsistentModelError("inconsistent contribution sum: negative total")
    return math.floor(4 * s)


@functools.lru_cache(maxsize=4096)
def _reciprocal_tuples(slots: int, remaining: Fraction, lo: int) -> tuple[tuple[int, ...], ...]:
    if slots == 0:
        return ((),) if remaining == 0 else ()
    if remaining <= 0:
        return ()
    lower = max(lo, -(-remaining.denominator // remaining.numerator))  # ceil(1/remaining)
    upper = slots * remaining.denominator // remaining.numerator  # floor(slots/remaining)
    out = []
    for n in range(lower, upper + 1):
        for tail in _reciprocal_tuples(slots - 1, remaining - Fraction(1, n), n):
            out.append((n,) + tail)
    return tuple(out)


def enumerate_reciprocal_tuples(k: int, c, n_min: int = 2) -> list[tuple[int, ...]]:
    """All nondecreasing k-tuples with entries >= n_min and sum of reciprocals c.

    The smallest entry of any solution is at most k/c, so the recursion is
    finite; tuples come out in lexicographic order.
    """
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise ValidationError("k must be a nonnegative integer")
    if not isinstance(n_min, int) or n_min < 1:
        raise ValidationError("n_min must be a positive integer")
    c = Fraction(c)
    if c < 0:
        raise ValidationError("c must be nonnegative")
    return list(_reciprocal_tuples(k, c, n_min))


def enumerate_configurations(inv: ModelInvariants, mode: str) -> list[SingularityConfiguration]:
    """Every configuration whose contributions add up to the extracted sum.

    Weak nef models only carry terminal points; canonical models mix terminal
    points, dihedral points (1/2 each) and cusps (1 each), with the cusp
    count pinned when the invariants carry it.
    """
    _check_mode(mode)
    s = inv.contribution_sum
    if s < 0:
        raise InconsistentModelError("inconsistent contribution sum: negative total")
    configs: set[SingularityConfiguration] = set()

    def terminal_multisets(target: Fraction) -> Iterable[tuple[int, ...]]:
        # k points contribute k/2 - (1/2) sum 1/n, so sum 1/n = k - 2*target;
        # each one adds between 1/4 and 1/2, boxing k into [2*target, 4*target]
        for k in range(0, math.floor(4 * target) + 1):
            reciprocal_target = k - 2 * target
            if reciprocal_target >= 0:
                yield from enumerate_reciprocal_tuples(k, reciprocal_target)

    if mode == WEAK_NEF:
        for orders in terminal_multisets(s):
            configs.add(SingularityConfiguration(terminal_orders=orders))
    else:
        cusp_options = (
            [inv.cusp_count] if inv.cusp_count is not None else list(range(math.floor(s) + 1))
        )
        for cusps in cusp_options:
            s_after_cusps = s - cusps
            if s_after_cusps < 0:
                continue
            for dihedrals in range(math.floor(2 * s_after_cusps) + 1):
                remaining = s_after_cusps - Fraction(dihedrals, 2)
                for orders in terminal_multisets(remaining):
                    configs.add(
                        SingularityConfiguration(
                            terminal_orders=orders,
                            dihedral_count=dihedrals,
                            cusp_count=cusps,
                        )
                    )
    return sorted(
        configs,
        key=lambda c: (c.cusp_count, c.dihedral_count, len(c.terminal_orders), c.terminal_orders),
    )


def index_bounds(configs, mode: str) -> IndexBoundsResult:
    """Order bound and per-configuration Cartier-index candidates.

    A multiple of every terminal order makes each terminal contribution
    vanish, so the candidate is their least common multiple; canonical models
    double it because dihedral points are 2-Gorenstein.
    """
    _check_mode(mode)
    configs = list(configs)
    if not configs:
        raise ValidationError("need at least one configuration")
    orders = [n for cfg in configs for n in cfg.terminal_orders]
    max_order = max(orders, default=1)
    factor = 2 if mode == CANONICAL else 1
    candidates = {
        cfg: factor * math.lcm(*cfg.terminal_orders) if cfg.terminal_orders else factor
        for cfg in configs
    }
    return IndexBoundsResult(max_terminal_order=max_order, index_candidates=candidates)


def compute_n1(inv: ModelInvariants, i: int) -> N1Result:
    """The explicit birationality bound for Cartier index i.

    gamma = max(2*(K.K_Y)/K^2 + 3i, 0) and N1 = 4i + ceil(gamma) + 1. The two
    threshold facts the bound rests on are re-checked numerically: the square
    bound (4i)^2 K^2 >= 16 (equivalently i^2 K^2 >= 1) and the per-curve
    margin (4i+1)/i > 4, which holds identically for i >= 1.
    """
    if not isinstance(i, int) or isinstance(i, bool) or i < 1:
        raise ValidationError("index must be a positive integer")
    if inv.k2 <= 0:
        raise NotGeneralTypeError("not general type: K^2 must be positive")
    gamma = max(2 * inv.k_dot_ky / inv.k2 + 3 * i, Fraction(0))
    n1 = 4 * i + math.ceil(gamma) + 1
    square_ok = i * i * inv.k2 >= 1
    curve_ok = Fraction(4 * i + 1, i) > 4
    return N1Result(
        gamma=gamma,
        n1=n1,
        square_threshold_holds=bool(square_ok),
        curve_threshold_holds=bool(curve_ok),
    )


def pipeline(
    samples: HilbertSamples,
    mode: str,
    period_bound: int = DEFAULT_PERIOD_BOUND,
) -> BoundReport:
    """Samples -> invariants -> configurations -> indices -> worst-case N1."""
    inv = extract_invariants(samples, mode, period_bound=period_bound)
    configs = enumerate_configurations(inv, mode)
    if not configs:
        raise InconsistentSamplesError(
            "no singularity configuration matches the contribution sum"
        )
    idx = index_bounds(configs, mode)
    candidates = tuple(idx.index_candidates[cfg] for cfg in configs)
    results = tuple(compute_n1(inv, i) for i in candidates)
    return BoundReport(
        mode=mode,
        invariants=inv,
        configurations=tuple(configs),
        max_terminal_order=idx.max_terminal_order,
        index_candidates=candidates,
        results=results,
        n1_worst=max(r.n1 for r in results),
    )


def relate_models(weak_nef_chi: Mapping[int, int], canonical_chi: Mapping[int, int], cusps: int) -> bool:
    """Check the crepant relation between the two Euler tables.

    The weak nef table must sit below the canonical one by the cusp count at
    m = 0 and agree everywhere else.
    """
    if not isinstance(cusps, int) or isinstance(cusps, bool) or cusps < 0:
        raise ValidationError("cusp count must be a nonnegative integer")
    weak = {int(k): parse_rational(v) for k, v in dict(weak_nef_chi).items()}
    canon = {int(k): parse_rational(v) for k, v in dict(canonical_chi).items()}
    if set(weak) != set(canon):
        raise ValidationError("both tables must cover the same multiples")
    if 0 not in weak:
        raise ValidationError("tables must contain m = 0")
    return all(weak[m] - canon[m] == (-cusps if m == 0 else 0) for m in weak)
