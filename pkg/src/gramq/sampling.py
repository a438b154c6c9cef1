"""Seeded random generators for property checks: states, matrices, ensembles."""

from __future__ import annotations

import numpy as np

from .coherence import AlphaZ
from .ensembles import Ensemble, PureState
from .matfun import DensityMatrix, hermitize


def haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary via QR of a complex Ginibre matrix."""
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    phases = np.diag(r).copy()
    phases /= np.abs(phases)
    return q * phases.conj()


def random_pure_state(dim: int, rng: np.random.Generator) -> PureState:
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return PureState(v / np.linalg.norm(v))


def random_hermitian(dim: int, rng: np.random.Generator) -> np.ndarray:
    m = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return hermitize(m)


def random_psd(dim: int, rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    rank = dim if rank is None else rank
    a = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    return a @ a.conj().T


def random_density_matrix(
    dim: int, rng: np.random.Generator, rank: int | None = None
) -> DensityMatrix:
    m = random_psd(dim, rng, rank)
    return DensityMatrix(m / np.trace(m).real)


def random_probabilities(n: int, rng: np.random.Generator) -> np.ndarray:
    # Dirichlet(1) with a floor so no member is vanishingly unlikely
    p = rng.dirichlet(np.ones(n))
    p = np.clip(p, 1e-3, None)
    return p / p.sum()


def random_ensemble(
    rng: np.random.Generator,
    n: int | None = None,
    dim: int | None = None,
    max_n: int = 8,
    max_dim: int = 6,
    label: str | None = None,
) -> Ensemble:
    n = int(rng.integers(1, max_n + 1)) if n is None else n
    dim = int(rng.integers(2, max_dim + 1)) if dim is None else dim
    p = random_probabilities(n, rng)
    return Ensemble(
        [(p[i], random_pure_state(dim, rng)) for i in range(n)], label=label
    )


def random_orthonormal_ensemble(
    rng: np.random.Generator, n: int, dim: int, label: str | None = None
) -> Ensemble:
    u = haar_unitary(dim, rng)
    p = random_probabilities(n, rng)
    return Ensemble([(p[i], PureState(u[:, i])) for i in range(n)], label=label)


_VALID_CASES = ("case_i", "case_ii", "case_iii", "case_iv")


def random_alpha_z(rng: np.random.Generator, case: str | None = None) -> AlphaZ:
    """A parameter pair inside one of the validity regimes (random if not given)."""
    case = case or _VALID_CASES[int(rng.integers(len(_VALID_CASES)))]
    if case == "case_i":
        a = float(rng.uniform(0.05, 0.95))
        z = float(rng.uniform(max(a, 1.0 - a), 2.0))
        return AlphaZ(a, z)
    if case == "case_ii":
        return AlphaZ(float(rng.uniform(1.05, 2.0)), 1.0)
    if case == "case_iii":
        a = float(rng.uniform(1.05, 2.0))
        return AlphaZ(a, a / 2.0)
    if case == "case_iv":
        a = float(rng.uniform(1.05, 2.5))
        return AlphaZ(a, a)
    raise ValueError(f"unknown validity case {case!r}")
