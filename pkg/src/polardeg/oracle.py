"""Numerical polar-degree oracle via homotopy continuation.

The polar degree of V = {f = 0} is the number of preimages of a generic
point under the gradient map P^n minus Sing(V) to P^n.  This module counts
those preimages directly:

  1. apply a seeded exact rational orthogonal change of coordinates so the
     chart x0 = 1 and the target become generic for the given equation;
  2. pick a generic rational target b and eliminate the proportionality
     scalar: the fiber is cut out by the n cross equations
     b0 * df/dxi - bi * df/dx0 = 0 on the chart, each of degree <= d-1;
  3. track all (d-1)^n paths of a total-degree homotopy from a start
     system with known roots, classify every endpoint, discard points of
     the singular locus (where the gradient map is undefined), points at
     infinity, and non-regular endpoints, and count distinct projective
     solutions;
  4. repeat over an odd number of independent trials and report the modal
     count.

Everything is a pure function of (f, config): per-path randomness is
derived from the seed, the trial index and the path index only, so reports
are identical for any worker count.
"""

from __future__ import annotations

import cmath
import itertools
import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from polardeg.formulas import PolResult, pol_one_dim
from polardeg.poly import Polynomial
from polardeg.profiles import SingularityProfile

# Largest supported path count per trial; larger inputs are refused
# rather than tracked with degraded reliability.
MAX_PATHS = 256

_MAX_STEP = 0.1
_INITIAL_STEP = 0.05
_CORRECTOR_ITERS = 4
_REFINE_ITERS = 60


class PathBudgetError(ValueError):
    """The Bezout path count exceeds the supported budget."""


@dataclass
class TrackerConfig:
    """Knobs for the continuation run; defaults suit degree <= 4 at desk scale."""

    seed: int = 42
    trials: int = 5
    newton_tol: float = 1e-10
    dedup_tol: float = 1e-6
    divergence_bound: float = 1e8
    max_steps: int = 10000
    min_step: float = 1e-14
    singular_grad_tol: float = 1e-8
    retries: int = 3
    cond_limit: float = 1e10
    high_precision: bool = False

    def __post_init__(self) -> None:
        for name in ("newton_tol", "dedup_tol", "divergence_bound", "min_step", "singular_grad_tol", "cond_limit"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.trials < 1 or self.trials % 2 == 0:
            raise ValueError("trials must be a positive odd number")
        if self.max_steps < 1 or self.retries < 0:
            raise ValueError("max_steps must be >= 1 and retries >= 0")


@dataclass(frozen=True)
class FiberSystem:
    """The square system whose regular solutions are the gradient-map fiber."""

    equations: tuple[Polynomial, ...]
    source_poly: Polynomial
    target: tuple[Fraction, ...]
    chart: int
    rotation: tuple[tuple[Fraction, ...], ...]
    rotated_poly: Polynomial
    gradient_chart: tuple[Polynomial, ...]

    @property
    def path_count(self) -> int:
        return math.prod(eq.degree() for eq in self.equations)


@dataclass(frozen=True)
class TrackResult:
    """Endpoint classification of one continuation path.

    status: regular | diverged | singular_endpoint | on_singular_locus |
    step_failure.  endpoint is stored only when finite; residual and the
    Jacobian condition estimate are scale-relative diagnostics.
    """

    status: str
    endpoint: Optional[tuple[complex, ...]]
    residual: float
    condition_estimate: float


@dataclass
class OracleReport:
    """Consensus fiber count over all trials, with discard statistics."""

    pol_estimate: int
    per_trial_counts: list[int]
    paths_total: int
    discarded: dict[str, int]
    consensus: bool

    def to_dict(self) -> dict:
        return {
            "pol_estimate": self.pol_estimate,
            "per_trial_counts": list(self.per_trial_counts),
            "paths_total": self.paths_total,
            "discarded": dict(sorted(self.discarded.items())),
            "consensus": self.consensus,
        }


@dataclass
class VerifyReport:
    """Cross-validation of the closed-form route against the oracle."""

    formula: PolResult
    oracle: OracleReport
    match: bool

    def to_dict(self) -> dict:
        return {
            "formula": self.formula.to_dict(),
            "oracle": self.oracle.to_dict(),
            "match": self.match,
        }


# -- exact rational linear algebra -------------------------------------------


def _fraction_matrix_inverse(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    m = len(matrix)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(m)] for i, row in enumerate(matrix)]
    for col in range(m):
        pivot = next((r for r in range(col, m) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(m):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[m:] for row in aug]


def _random_rotation(m: int, rng: np.random.Generator) -> tuple[tuple[Fraction, ...], ...]:
    """Exact rational orthogonal matrix: the Cayley transform
    (I - S)(I + S)^-1 of a random rational skew-symmetric S."""
    skew = [[Fraction(0)] * m for _ in range(m)]
    any_nonzero = False
    for i in range(m):
        for j in range(i + 1, m):
            value = Fraction(int(rng.integers(-3, 4)), int(rng.integers(1, 5)))
            skew[i][j] = value
            skew[j][i] = -value
            any_nonzero = any_nonzero or value != 0
    if not any_nonzero:
        skew[0][1] = Fraction(1, 2)
        skew[1][0] = Fraction(-1, 2)
    identity = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
    i_minus = [[identity[i][j] - skew[i][j] for j in range(m)] for i in range(m)]
    i_plus = [[identity[i][j] + skew[i][j] for j in range(m)] for i in range(m)]
    inv = _fraction_matrix_inverse(i_plus)
    rows = []
    for i in range(m):
        rows.append(tuple(sum(i_minus[i][k] * inv[k][j] for k in range(m)) for j in range(m)))
    return tuple(rows)


def _apply_rotation(f: Polynomial, rotation: Sequence[Sequence[Fraction]]) -> Polynomial:
    m = f.nvars
    subs = []
    for i in range(m):
        expr = Polynomial.zero(m)
        for j in range(m):
            if rotation[i][j] != 0:
                expr = expr + Polynomial.variable(j, m) * rotation[i][j]
        subs.append(expr)
    return f.compose(subs)


def _rational_in_band(rng: np.random.Generator) -> Fraction:
    """Random rational with absolute value in [0.5, 1.5] and random sign."""
    sign = 1 if rng.integers(0, 2) else -1
    return Fraction(sign * int(rng.integers(4, 13)), 8)


# -- system construction -------------------------------------------------------


def _check_oracle_input(f: Polynomial) -> int:
    if f.is_zero():
        raise ValueError("zero polynomial has no gradient map")
    if not f.is_homogeneous():
        raise ValueError("oracle input must be homogeneous")
    d = f.degree()
    if d < 2:
        raise ValueError("degree must be >= 2: the gradient map of a linear form is constant")
    return d


def build_fiber_system(f: Polynomial, rng_seed: int) -> FiberSystem:
    """Rotate coordinates, fix the chart x0 = 1, pick a generic target, and
    emit the n cross equations b0 * grad_i - bi * grad_0."""
    _check_oracle_input(f)
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(rng_seed)))
    nv = f.nvars
    rotation = _random_rotation(nv, rng)
    rotated = _apply_rotation(f, rotation)
    target = tuple(_rational_in_band(rng) for _ in range(nv))
    grad_chart = tuple(g.eliminate(0, 1) for g in rotated.gradient())
    equations = []
    for i in range(1, nv):
        eq = grad_chart[i] * target[0] - grad_chart[0] * target[i]
        if eq.is_zero():
            raise ValueError("degenerate fiber system (is the input square-free?)")
        equations.append(eq)
    return FiberSystem(
        equations=tuple(equations),
        source_poly=f,
        target=target,
        chart=0,
        rotation=rotation,
        rotated_poly=rotated,
        gradient_chart=grad_chart,
    )


def start_system(degrees: Sequence[int], rng_seed: int) -> tuple[tuple[Polynomial, ...], list[tuple[complex, ...]]]:
    """Total-degree start system x_i^d_i - r_i with its full root set."""
    if any(d < 1 for d in degrees):
        raise ValueError("start system degrees must be >= 1")
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(rng_seed)))
    m = len(degrees)
    constants = [_rational_in_band(rng) for _ in range(m)]
    equations = []
    for i, (d, r) in enumerate(zip(degrees, constants)):
        exps = [0] * m
        exps[i] = d
        equations.append(Polynomial({tuple(exps): Fraction(1), (0,) * m: -r}, m))
    roots_per_var = []
    for d, r in zip(degrees, constants):
        principal = complex(r) ** (1.0 / d)
        roots_per_var.append([principal * cmath.exp(2j * math.pi * k / d) for k in range(d)])
    roots = [tuple(combo) for combo in itertools.product(*roots_per_var)]
    return tuple(equations), roots


# -- fast evaluation ------------------------------------------------------------


class _SystemEvaluator:
    """Vectorized evaluation of a polynomial system and its Jacobian."""

    def __init__(self, equations: Sequence[Polynomial]):
        self.n_eq = len(equations)
        self.nvars = equations[0].nvars
        self.degrees = np.array([eq.degree() for eq in equations], dtype=np.int64)
        self.max_degree = int(self.degrees.max()) if self.n_eq else 0
        self.coeff_scale = np.array(
            [max(float(sum(abs(c) for c in eq.terms.values())), 1e-300) for eq in equations]
        )
        self._E, self._c, self._starts = self._stack(equations)
        partials = [eq.diff(j) for eq in equations for j in range(self.nvars)]
        self._jE, self._jc, self._jstarts = self._stack(partials)

    @staticmethod
    def _stack(polys: Sequence[Polynomial]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        rows: list[tuple[int, ...]] = []
        coeffs: list[complex] = []
        starts: list[int] = []
        nvars = polys[0].nvars
        for p in polys:
            starts.append(len(rows))
            if p.is_zero():
                # reduceat needs a non-empty block per polynomial
                rows.append((0,) * nvars)
                coeffs.append(0j)
            else:
                for exps, c in p.terms.items():
                    rows.append(exps)
                    coeffs.append(complex(c))
        return (
            np.array(rows, dtype=np.int64),
            np.array(coeffs, dtype=np.complex128),
            np.array(starts, dtype=np.intp),
        )

    def values(self, x: np.ndarray) -> np.ndarray:
        mons = np.prod(x[None, :] ** self._E, axis=1)
        return np.add.reduceat(self._c * mons, self._starts)

    def jacobian(self, x: np.ndarray) -> np.ndarray:
        mons = np.prod(x[None, :] ** self._jE, axis=1)
        flat = np.add.reduceat(self._jc * mons, self._jstarts)
        return flat.reshape(self.n_eq, self.nvars)

    def scaled_residual(self, x: np.ndarray) -> float:
        r = np.abs(self.values(x))
        scale = self.coeff_scale * np.maximum(1.0, float(np.max(np.abs(x)))) ** self.degrees
        return float(np.max(r / scale))


class _PairEvaluator:
    """One fused evaluation pass for a homotopy pair: values and Jacobians
    of both the target and the start system from a single term stack."""

    __slots__ = ("_E", "_c", "_starts", "n_eq", "nvars")

    def __init__(self, target_polys: Sequence[Polynomial], start_polys: Sequence[Polynomial]):
        if len(target_polys) != len(start_polys):
            raise ValueError("target and start systems must have the same size")
        self.n_eq = len(target_polys)
        self.nvars = target_polys[0].nvars
        polys = list(target_polys) + list(start_polys)
        partials = [p.diff(j) for p in polys for j in range(self.nvars)]
        self._E, self._c, self._starts = _SystemEvaluator._stack(polys + partials)

    def parts(self, x: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        mons = (x**self._E).prod(axis=1)
        flat = np.add.reduceat(self._c * mons, self._starts)
        n, m = self.n_eq, self.nvars
        return (
            flat[:n],
            flat[n : 2 * n],
            flat[2 * n : 2 * n + n * m].reshape(n, m),
            flat[2 * n + n * m :].reshape(n, m),
        )


# -- path tracking ---------------------------------------------------------------

# Tracking accuracy only needs to keep the iterate on its path; endpoints
# are re-polished during classification at cfg.newton_tol.
_TRACK_TOL = 1e-8


def _track_core(
    start_root: Sequence[complex],
    pair: _PairEvaluator,
    gamma: complex,
    cfg: TrackerConfig,
) -> tuple[str, np.ndarray, float, int]:
    """Follow one path of H(x, t) = (1-t) gamma G(x) + t F(x) from t=0 to 1.

    Returns (outcome, point, t_reached, steps) with outcome one of
    'reached', 'stalled', 'diverged'."""
    x = np.asarray(start_root, dtype=np.complex128)
    t = 0.0
    dt = _INITIAL_STEP
    steps = 0
    tangent: Optional[np.ndarray] = None
    while t < 1.0:
        if steps >= cfg.max_steps:
            return "stalled", x, t, steps
        steps += 1
        if tangent is None:
            f_val, g_val, jac_f, jac_g = pair.parts(x)
            hx = (1.0 - t) * gamma * jac_g + t * jac_f
            try:
                tangent = np.linalg.solve(hx, gamma * g_val - f_val)
            except np.linalg.LinAlgError:
                return "stalled", x, t, steps
            if not math.isfinite(float(np.abs(tangent).max())):
                return "stalled", x, t, steps
        h = min(dt, 1.0 - t)
        tp = t + h
        xp = x + h * tangent
        converged = False
        iters = 0
        for iters in range(1, _CORRECTOR_ITERS + 1):
            f_val, g_val, jac_f, jac_g = pair.parts(xp)
            hval = (1.0 - tp) * gamma * g_val + tp * f_val
            hx = (1.0 - tp) * gamma * jac_g + tp * jac_f
            try:
                delta = np.linalg.solve(hx, -hval)
            except np.linalg.LinAlgError:
                break
            xp = xp + delta
            dsize = float(np.abs(delta).max())
            if not math.isfinite(dsize):
                break
            if dsize <= _TRACK_TOL * (1.0 + float(np.abs(xp).max())):
                converged = True
                break
        if converged:
            x = xp
            t = tp
            tangent = None
            xsize = float(np.abs(x).max())
            if not math.isfinite(xsize) or xsize > cfg.divergence_bound:
                return "diverged", x, t, steps
            if iters <= 2:
                dt = min(dt * 2.0, _MAX_STEP)
        else:
            # retry from the same point with a shorter step; the cached
            # tangent is still valid there
            dt *= 0.5
            if dt < cfg.min_step:
                return "stalled", x, t, steps
    return "reached", x, t, steps


def _refine_double(x: np.ndarray, target: _SystemEvaluator, cfg: TrackerConfig) -> tuple[np.ndarray, bool]:
    """Newton refinement on the target system, falling back to least-squares
    steps near rank-deficient Jacobians so that endpoints sitting on a
    positive-dimensional solution set are pulled onto it instead of being
    flung away.  Returns (point, diverged_flag)."""
    for _ in range(_REFINE_ITERS):
        if target.scaled_residual(x) <= cfg.newton_tol * 1e-3:
            break
        r = target.values(x)
        jac = target.jacobian(x)
        delta, *_ = np.linalg.lstsq(jac, -r, rcond=None)
        if not np.all(np.isfinite(delta)):
            break
        cap = 1.0 + np.max(np.abs(x))
        size = np.max(np.abs(delta))
        if size > cap:
            delta = delta * (cap / size)
        x = x + delta
        if np.max(np.abs(x)) > cfg.divergence_bound:
            return x, True
        if size <= 1e-15 * cap:
            break
    return x, False


def _refine_mp(x: np.ndarray, equations: Sequence[Polynomial], cfg: TrackerConfig) -> np.ndarray:
    """Optional 106-bit refinement of an endpoint (high_precision mode)."""
    import mpmath as mp

    with mp.workprec(106):
        point = [mp.mpc(v.real, v.imag) for v in x]

        def ev(poly: Polynomial) -> "mp.mpc":
            total = mp.mpc(0)
            for exps, c in poly.terms.items():
                term = mp.mpf(c.numerator) / mp.mpf(c.denominator)
                for v, e in zip(point, exps):
                    if e:
                        term *= v**e
                total += term
            return total

        partials = [[eq.diff(j) for j in range(eq.nvars)] for eq in equations]
        for _ in range(50):
            residual = mp.matrix([ev(eq) for eq in equations])
            jac = mp.matrix([[ev(p) for p in row] for row in partials])
            try:
                delta = mp.lu_solve(jac, -residual)
            except (ZeroDivisionError, ValueError):
                break
            for i in range(len(point)):
                point[i] += delta[i]
            if max(abs(d) for d in delta) < mp.mpf(10) ** -28:
                break
        return np.array([complex(v) for v in point], dtype=np.complex128)


def _classify(
    outcome: str,
    x: np.ndarray,
    target: _SystemEvaluator,
    grad_eval: Optional[_SystemEvaluator],
    cfg: TrackerConfig,
    target_polys: Optional[Sequence[Polynomial]] = None,
) -> Optional[TrackResult]:
    """Turn a raw tracking outcome into a TrackResult.

    Returns None when the endpoint is a near-miss worth re-tracking with a
    fresh homotopy phase."""
    if outcome == "diverged":
        return TrackResult("diverged", None, float("inf"), float("inf"))
    x, diverged = _refine_double(np.array(x, dtype=np.complex128), target, cfg)
    if diverged:
        return TrackResult("diverged", None, float("inf"), float("inf"))
    if cfg.high_precision and target_polys is not None and np.all(np.isfinite(x)):
        x = _refine_mp(x, target_polys, cfg)
    if not np.all(np.isfinite(x)):
        return TrackResult("diverged", None, float("inf"), float("inf"))
    residual = target.scaled_residual(x)
    jac = target.jacobian(x)
    condition = float(np.linalg.cond(jac)) if np.all(np.isfinite(jac)) else float("inf")
    endpoint = tuple(complex(v) for v in x)
    if grad_eval is not None:
        gvals = np.abs(grad_eval.values(x))
        gscale = grad_eval.coeff_scale * np.maximum(1.0, float(np.max(np.abs(x)))) ** grad_eval.degrees
        grad_size = float(np.max(gvals / gscale))
        if grad_size < cfg.singular_grad_tol:
            return TrackResult("on_singular_locus", endpoint, residual, condition)
    if residual <= cfg.newton_tol:
        if outcome == "reached" and np.isfinite(condition) and condition <= cfg.cond_limit:
            return TrackResult("regular", endpoint, residual, condition)
        return TrackResult("singular_endpoint", endpoint, residual, condition)
    return None


def track_path(
    start_root: Sequence[complex],
    start_sys: Sequence[Polynomial],
    target_sys: Sequence[Polynomial],
    cfg: TrackerConfig,
    gamma: complex,
    singular_detector: Optional[Sequence[Polynomial]] = None,
) -> TrackResult:
    """Track one path and classify its endpoint.

    singular_detector, when given, is the sequence of gradient components
    of the defining polynomial on the chart; endpoints where they all
    vanish lie on the singular locus and are never counted."""
    target_polys = list(target_sys)
    target = _SystemEvaluator(target_polys)
    pair = _PairEvaluator(target_polys, list(start_sys))
    grad_eval = _SystemEvaluator(list(singular_detector)) if singular_detector is not None else None
    outcome, x, _, _ = _track_core(start_root, pair, gamma, cfg)
    result = _classify(outcome, x, target, grad_eval, cfg, target_polys if cfg.high_precision else None)
    if result is None:
        endpoint = tuple(complex(v) for v in x) if np.all(np.isfinite(x)) else None
        return TrackResult("step_failure", endpoint, target.scaled_residual(x) if endpoint else float("inf"), float("inf"))
    return result


# -- the full counting pipeline ---------------------------------------------------


def _sub_seed(seed: int, *key: int) -> int:
    return int(np.random.SeedSequence(seed, spawn_key=key).generate_state(1, np.uint64)[0])


def _unit_gamma(seed: int, *key: int) -> complex:
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=key)))
    return cmath.exp(2j * math.pi * rng.random())


def _track_one(
    path_index: int,
    root: tuple[complex, ...],
    pair: _PairEvaluator,
    target_eval: _SystemEvaluator,
    grad_eval: _SystemEvaluator,
    target_polys: Optional[Sequence[Polynomial]],
    gamma0: complex,
    cfg: TrackerConfig,
    trial: int,
) -> TrackResult:
    last_x = None
    for attempt in range(cfg.retries + 1):
        gamma = gamma0 if attempt == 0 else _unit_gamma(cfg.seed, trial, 2, path_index, attempt)
        outcome, x, _, _ = _track_core(root, pair, gamma, cfg)
        result = _classify(outcome, x, target_eval, grad_eval, cfg, target_polys)
        if result is not None:
            return result
        last_x = x
    endpoint = None
    residual = float("inf")
    if last_x is not None and np.all(np.isfinite(last_x)):
        endpoint = tuple(complex(v) for v in last_x)
        residual = target_eval.scaled_residual(last_x)
    return TrackResult("step_failure", endpoint, residual, float("inf"))


def _distinct_projective_count(endpoints: list[tuple[complex, ...]], tol: float) -> int:
    representatives: list[np.ndarray] = []
    for point in endpoints:
        vec = np.concatenate([[1.0 + 0j], np.asarray(point, dtype=np.complex128)])
        vec = vec / vec[int(np.argmax(np.abs(vec)))]
        if not any(np.max(np.abs(vec - rep)) < tol for rep in representatives):
            representatives.append(vec)
    return len(representatives)


def _run_trial(
    f: Polynomial, cfg: TrackerConfig, trial: int, workers: Optional[int]
) -> tuple[int, list[TrackResult]]:
    system = build_fiber_system(f, _sub_seed(cfg.seed, trial, 0))
    target_eval = _SystemEvaluator(system.equations)
    grad_eval = _SystemEvaluator(system.gradient_chart)
    start_polys, roots = start_system([eq.degree() for eq in system.equations], _sub_seed(cfg.seed, trial, 1))
    pair = _PairEvaluator(system.equations, start_polys)
    gamma0 = _unit_gamma(cfg.seed, trial, 3)
    target_polys = list(system.equations) if cfg.high_precision else None

    def work(item: tuple[int, tuple[complex, ...]]) -> TrackResult:
        index, root = item
        return _track_one(index, root, pair, target_eval, grad_eval, target_polys, gamma0, cfg, trial)

    tasks = list(enumerate(roots))
    if workers is not None and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(work, tasks))
    else:
        results = [work(item) for item in tasks]
    regular_endpoints = [r.endpoint for r in results if r.status == "regular" and r.endpoint is not None]
    count = _distinct_projective_count(regular_endpoints, cfg.dedup_tol)
    return count, results


def solve_count(f: Polynomial, cfg: Optional[TrackerConfig] = None, workers: Optional[int] = None) -> OracleReport:
    """Count the regular points of a generic gradient-map fiber of f.

    Runs cfg.trials independent trials (fresh rotation, target and start
    system each) and reports the modal count; consensus means all trials
    agreed.  Deterministic for a fixed config, whatever the worker count.
    """
    cfg = cfg or TrackerConfig()
    d = _check_oracle_input(f)
    n = f.nvars - 1
    budget = (d - 1) ** n
    if budget > MAX_PATHS:
        raise PathBudgetError(f"(d-1)^n = {budget} exceeds the supported budget of {MAX_PATHS} paths")
    per_trial_counts: list[int] = []
    discarded: Counter[str] = Counter()
    paths_total = 0
    for trial in range(cfg.trials):
        count, results = _run_trial(f, cfg, trial, workers)
        per_trial_counts.append(count)
        paths_total += len(results)
        for result in results:
            if result.status != "regular":
                discarded[result.status] += 1
    tally = Counter(per_trial_counts)
    best = max(tally.items(), key=lambda kv: (kv[1], -kv[0]))
    pol_estimate = best[0]
    consensus = len(tally) == 1
    return OracleReport(
        pol_estimate=pol_estimate,
        per_trial_counts=per_trial_counts,
        paths_total=paths_total,
        discarded=dict(discarded),
        consensus=consensus,
    )


def verify(
    f: Polynomial,
    profile: SingularityProfile,
    cfg: Optional[TrackerConfig] = None,
    workers: Optional[int] = None,
) -> VerifyReport:
    """Run both routes on the same hypersurface and compare."""
    formula = pol_one_dim(profile)
    oracle = solve_count(f, cfg, workers)
    return VerifyReport(formula=formula, oracle=oracle, match=formula.pol == oracle.pol_estimate)


# -- generic geometric helpers -----------------------------------------------------


def random_linear_form(nvars: int, seed: int) -> Polynomial:
    """Random linear form with nonzero rational coefficients in every variable."""
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    form = Polynomial.zero(nvars)
    for i in range(nvars):
        sign = 1 if rng.integers(0, 2) else -1
        coeff = Fraction(sign * int(rng.integers(1, 10)), int(rng.integers(1, 5)))
        form = form + Polynomial.variable(i, nvars) * coeff
    return form


def generic_slice(f: Polynomial, seed: int) -> Polynomial:
    """Restrict f to a seeded generic hyperplane, as a hypersurface in one
    lower projective dimension: rotate exactly, then set the last variable
    to zero."""
    if f.nvars < 3:
        raise ValueError("slicing needs at least 3 variables")
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    rotation = _random_rotation(f.nvars, rng)
    rotated = _apply_rotation(f, rotation)
    sliced = rotated.eliminate(f.nvars - 1, 0)
    if sliced.is_zero() or sliced.degree() != f.degree():
        raise ValueError("degenerate slice; retry with another seed")
    return sliced
