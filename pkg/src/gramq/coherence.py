"""Coherence of a density matrix under the alpha-z relative Renyi divergence.

The measure is a minimization of the divergence over diagonal (incoherent)
states. For z = 1 the minimum has the closed form
(sum_i <i|rho^alpha|i>^(1/alpha) - 1)/(alpha - 1); for general z a
multi-start derivative-free search runs over a softmax parameterization of
the probability simplex. A brute-force simplex grid serves as an
independent oracle for small dimensions.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.optimize import minimize

from .errors import DimensionTooLarge, InvalidParameter, SupportViolation
from .matfun import (
    DEFAULT_TOLERANCES,
    DensityMatrix,
    Tolerances,
    _f_from_legs,
    _support_legs,
    shannon_entropy,
    von_neumann_entropy,
)


class Validity(enum.Enum):
    """Parameter regimes in which the divergence is a proper coherence measure."""

    CASE_I = "case_i"      # alpha in (0,1), z >= max(alpha, 1-alpha)
    CASE_II = "case_ii"    # alpha in (1,2], z = 1
    CASE_III = "case_iii"  # alpha in (1,2], z = alpha/2
    CASE_IV = "case_iv"    # alpha > 1, z = alpha
    OUTSIDE = "outside"


_EQ_TOL = 1e-12


@dataclass(frozen=True)
class AlphaZ:
    """Divergence order pair (alpha, z) with its validity classification."""

    alpha: float
    z: float = 1.0

    def __post_init__(self):
        if self.z <= 0:
            raise InvalidParameter(f"z must be positive, got {self.z}")

    @property
    def validity(self) -> Validity:
        a, z = self.alpha, self.z
        if 0.0 < a < 1.0 and z >= max(a, 1.0 - a) - _EQ_TOL:
            return Validity.CASE_I
        if 1.0 < a <= 2.0 and abs(z - 1.0) <= _EQ_TOL:
            return Validity.CASE_II
        if 1.0 < a <= 2.0 and abs(z - a / 2.0) <= _EQ_TOL:
            return Validity.CASE_III
        if a > 1.0 and abs(z - a) <= _EQ_TOL:
            return Validity.CASE_IV
        return Validity.OUTSIDE

    @property
    def is_valid(self) -> bool:
        return self.validity is not Validity.OUTSIDE


class IncoherentState:
    """Diagonal density matrix, stored as its probability vector."""

    __slots__ = ("_diag",)

    def __init__(self, diag):
        q = np.array(diag, dtype=float).reshape(-1)
        if (q < 0).any():
            raise InvalidParameter("diagonal entries must be nonnegative")
        if abs(q.sum() - 1.0) > 1e-12:
            raise InvalidParameter(f"diagonal sums to {q.sum():.15g}, expected 1")
        q.setflags(write=False)
        self._diag = q

    @property
    def diag(self) -> np.ndarray:
        return self._diag

    @property
    def dim(self) -> int:
        return self._diag.size

    def matrix(self) -> np.ndarray:
        return np.diag(self._diag.astype(complex))

    def __repr__(self):
        return f"IncoherentState({np.array2string(self._diag, precision=6)})"


@dataclass(frozen=True)
class OptimizerConfig:
    restarts: int = 16
    max_iters: int = 2000
    convergence_tol: float = 1e-10
    boundary_floor: float = 1e-14
    seed: int = 0

    def __post_init__(self):
        if self.restarts < 1 or self.max_iters < 1:
            raise InvalidParameter("restarts and max_iters must be at least 1")
        if self.convergence_tol <= 0 or self.boundary_floor <= 0:
            raise InvalidParameter("tolerances must be strictly positive")


DEFAULT_OPTIMIZER = OptimizerConfig()


def _diag_f(u_r: np.ndarray, half: np.ndarray, q: np.ndarray, s: float, z: float) -> float:
    """f(rho, diag(q)) from rho's support legs; the sigma leg applies entrywise."""
    return _f_from_legs(q[:, None] ** s * u_r, half, z)


def _check_diag_support(rho: DensityMatrix, q: np.ndarray, tol: Tolerances) -> None:
    lam_max = float(rho.spectrum.eigenvalues[0])
    cut = tol.support_cutoff * max(lam_max, 1e-300)
    dead = q <= cut
    if not dead.any():
        return
    block = rho.matrix[np.ix_(dead, dead)]
    if float(np.abs(block).max()) > cut:
        raise SupportViolation(
            "rho has weight on basis states where sigma vanishes; alpha > 1 needs containment"
        )


def divergence(rho, sigma, params: AlphaZ, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """(f^(1/alpha) - 1)/(alpha - 1); sigma may be an IncoherentState for speed."""
    if params.alpha == 1.0:
        raise InvalidParameter("alpha = 1 is excluded (take the limit instead)")
    rho = DensityMatrix.ensure(rho, tol)
    a, z = params.alpha, params.z
    if isinstance(sigma, IncoherentState):
        if sigma.dim != rho.dim:
            raise InvalidParameter(f"dimension mismatch: {rho.dim} vs {sigma.dim}")
        if a > 1.0:
            _check_diag_support(rho, sigma.diag, tol)
        u_r, half = _support_legs(rho, a, z)
        f = _diag_f(u_r, half, sigma.diag, (1.0 - a) / (2.0 * z), z)
    else:
        from .matfun import f_alpha_z

        f = f_alpha_z(rho, sigma, a, z, tol)
    return (f ** (1.0 / a) - 1.0) / (a - 1.0)


def coherence_closed_z1(rho, alpha: float, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Closed form of the minimum at z = 1 from the diagonal of rho^alpha."""
    if alpha == 1.0:
        raise InvalidParameter("alpha = 1 is excluded (take the limit instead)")
    if alpha <= 0:
        raise InvalidParameter(f"alpha must be positive, got {alpha}")
    rho = DensityMatrix.ensure(rho, tol)
    diag = np.clip(np.diag(rho.power(alpha)).real, 0.0, None)
    return (float((diag ** (1.0 / alpha)).sum()) - 1.0) / (alpha - 1.0)


def coherence_limit_alpha1(rho, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """alpha -> 1 limit at z = 1: S(diag rho) - S(rho) in natural-log units."""
    rho = DensityMatrix.ensure(rho, tol)
    return shannon_entropy(np.clip(rho.diagonal(), 0.0, None)) - von_neumann_entropy(rho, tol=tol)


class CoherenceResult(NamedTuple):
    value: float
    argmin: IncoherentState
    converged: bool
    at_boundary: bool


def coherence_optimized(
    rho,
    params: AlphaZ,
    config: OptimizerConfig = DEFAULT_OPTIMIZER,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> CoherenceResult:
    """Minimize the divergence over the interior of the probability simplex.

    Multi-start Nelder-Mead over theta in R^(n-1) with sigma = softmax(theta).
    Deterministic starts: the z = 1 stationary point q_i proportional to
    <i|rho^alpha|i>^(1/alpha), the uniform state, and diag(rho); remaining
    restarts are Dirichlet(1) draws from the seeded generator. Iterates are
    floored at config.boundary_floor, so for alpha > 1 (negative power on
    sigma) the search stays strictly interior.
    """
    if params.alpha == 1.0:
        raise InvalidParameter("alpha = 1 is excluded (take the limit instead)")
    rho = DensityMatrix.ensure(rho, tol)
    n = rho.dim
    a, z = params.alpha, params.z
    floor = config.boundary_floor

    if n == 1:
        q = IncoherentState([1.0])
        return CoherenceResult(divergence(rho, q, params, tol), q, True, False)

    u_r, half = _support_legs(rho, a, z)
    s = (1.0 - a) / (2.0 * z)

    def clamp(q):
        q = np.clip(q, floor, None)
        return q / q.sum()

    def unpack(theta):
        t = np.append(theta, 0.0)
        t -= t.max()
        e = np.exp(t)
        return clamp(e / e.sum())

    def objective(theta):
        f = _diag_f(u_r, half, unpack(theta), s, z)
        return (f ** (1.0 / a) - 1.0) / (a - 1.0)

    def pack(q):
        lg = np.log(clamp(q))
        return lg[:-1] - lg[-1]

    stationary = np.clip(np.diag(rho.power(a)).real, 0.0, None) ** (1.0 / a)
    starts = [
        pack(stationary / stationary.sum()) if stationary.sum() > 0 else np.zeros(n - 1),
        np.zeros(n - 1),
        pack(np.clip(rho.diagonal(), floor, None)),
    ]
    rng = np.random.default_rng(config.seed)
    while len(starts) < config.restarts:
        starts.append(pack(rng.dirichlet(np.ones(n))))

    best = None
    for theta0 in starts[: max(config.restarts, 1)]:
        res = minimize(
            objective,
            theta0,
            method="Nelder-Mead",
            options=dict(
                maxiter=config.max_iters,
                maxfev=4 * config.max_iters,
                xatol=1e-9,
                fatol=config.convergence_tol,
            ),
        )
        if best is None or res.fun < best.fun:
            best = res
    q_best = unpack(best.x)
    return CoherenceResult(
        value=float(best.fun),
        argmin=IncoherentState(q_best),
        converged=bool(best.success),
        at_boundary=bool(q_best.min() <= 10.0 * floor),
    )


# ---------------------------------------------------------------------------
# brute-force oracle
# ---------------------------------------------------------------------------

_REFINE = {2: 64, 3: 32, 4: 12}


def _compositions(total: int, parts: int, low: int):
    """All integer vectors of length `parts` with entries >= low summing to total."""
    if parts == 1:
        if total >= low:
            yield (total,)
        return
    for head in range(low, total - low * (parts - 1) + 1):
        for tail in _compositions(total - head, parts - 1, low):
            yield (head,) + tail


def _batch_divergence(
    u_r: np.ndarray, half: np.ndarray, grid: np.ndarray, a: float, z: float
) -> np.ndarray:
    """Divergence at many diagonal sigmas at once; grid rows are simplex points.

    Works on the support of rho (columns of u_r, weights lambda^(alpha/2z))
    so the sandwich spectrum carries no structural zeros.
    """
    s = (1.0 - a) / (2.0 * z)
    q2s = grid ** (2.0 * s)
    inner = np.einsum("ai,na,aj->nij", u_r.conj(), q2s, u_r)
    inner = half[None, :, None] * inner * half[None, None, :]
    inner = (inner + np.conj(np.swapaxes(inner, 1, 2))) / 2.0
    lam = np.clip(np.linalg.eigvalsh(inner), 0.0, None)
    f = (lam**z).sum(axis=1)
    return (f ** (1.0 / a) - 1.0) / (a - 1.0)


def oracle_grid(
    rho, params: AlphaZ, steps: int, tol: Tolerances = DEFAULT_TOLERANCES
) -> float:
    """Exhaustive minimum of the divergence over a regular simplex grid.

    Scans all grid points with resolution 1/steps (interior points only when
    alpha > 1, where sigma carries a negative power), then refines once on a
    finer local grid around the best point. Independent of the multi-start
    optimizer; intended as a ground-truth check for dim <= 4.
    """
    if params.alpha == 1.0:
        raise InvalidParameter("alpha = 1 is excluded (take the limit instead)")
    rho = DensityMatrix.ensure(rho, tol)
    n = rho.dim
    if n > 4:
        raise DimensionTooLarge(f"oracle grid supports dim <= 4, got {n}")
    if steps < 1:
        raise InvalidParameter("steps must be positive")
    a, z = params.alpha, params.z
    if n == 1:
        return divergence(rho, IncoherentState([1.0]), params, tol)

    # spectral prep done here from numpy primitives: this path stays
    # independent of the optimizer's shared f kernel
    w, u = np.linalg.eigh((rho.matrix + rho.matrix.conj().T) / 2.0)
    keep = w > tol.support_cutoff * float(w.max())
    u_r = u[:, keep]
    half = w[keep] ** (a / (2.0 * z))
    low = 1 if a > 1.0 else 0
    points = np.array(list(_compositions(steps, n, low)), dtype=float)

    def scan(candidates):
        best_v, best_k = math.inf, None
        for chunk in np.array_split(candidates, max(1, len(candidates) // 50000)):
            vals = _batch_divergence(u_r, half, chunk / chunk.sum(axis=1, keepdims=True), a, z)
            i = int(np.argmin(vals))
            if vals[i] < best_v:
                best_v, best_k = float(vals[i]), chunk[i]
        return best_v, best_k

    best_value, best_point = scan(points)

    # one refinement pass: same-style grid at resolution 1/(steps * r) around the best point
    r = _REFINE[n]
    base = best_point * r
    axes = [np.arange(-r, r + 1)] * (n - 1)
    offsets = np.stack([g.ravel() for g in np.meshgrid(*axes, indexing="ij")], axis=1)
    offsets = np.hstack([offsets, -offsets.sum(axis=1, keepdims=True)])
    local = base[None, :] + offsets
    keep = (local >= low).all(axis=1) & (np.abs(offsets[:, -1]) <= r)
    local = local[keep]
    if len(local):
        refined_value, _ = scan(local)
        best_value = min(best_value, refined_value)
    return best_value
