"""Spectral calculus for Hermitian complex matrices.

Eigendecomposition with a relative support cutoff, fractional matrix powers
in the generalized-inverse sense (negative powers act on the support only),
von Neumann entropy, and the trace functional

    f(rho, sigma) = Tr(sigma^((1-alpha)/2z) rho^(alpha/z) sigma^((1-alpha)/2z))^z

that underlies the alpha-z divergence family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import InvalidParameter, NoConvergence, NotHermitian, SupportViolation


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds shared by the spectral routines.

    support_cutoff is relative: an eigenvalue counts as zero when its
    magnitude is below support_cutoff * max|eigenvalue|.
    """

    support_cutoff: float = 1e-12
    hermiticity_tol: float = 1e-10
    reconstruction_tol: float = 1e-10

    def __post_init__(self):
        if min(self.support_cutoff, self.hermiticity_tol, self.reconstruction_tol) <= 0:
            raise InvalidParameter("tolerances must be strictly positive")


DEFAULT_TOLERANCES = Tolerances()


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigensystem of a Hermitian matrix: descending eigenvalues, unitary U, rank."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    rank: int

    def reconstruct(self) -> np.ndarray:
        u = self.eigenvectors
        return (u * self.eigenvalues) @ u.conj().T

    def power(self, x: float) -> np.ndarray:
        """Matrix power on the support: zero eigenvalues stay zero (Moore-Penrose)."""
        w = self.eigenvalues
        if (w < 0.0).any():
            raise InvalidParameter("matrix power on the support requires a PSD spectrum")
        wx = np.zeros_like(w)
        nz = w > 0.0
        wx[nz] = w[nz] ** x
        u = self.eigenvectors
        return (u * wx) @ u.conj().T


def hermitize(m: np.ndarray) -> np.ndarray:
    """Hermitian part (m + m^dagger) / 2."""
    return (m + m.conj().T) / 2


def max_abs(m: np.ndarray) -> float:
    return float(np.abs(m).max()) if m.size else 0.0


def eigh(m: np.ndarray, tol: Tolerances = DEFAULT_TOLERANCES) -> SpectralDecomposition:
    """Eigendecompose a Hermitian matrix, zeroing sub-cutoff eigenvalue dust.

    The input is symmetrized before decomposition; eigenvalues come back in
    descending order and any eigenvalue with magnitude below the relative
    support cutoff is set to exactly 0 (so PSD inputs end up clamped >= 0).
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidParameter(f"expected a square matrix, got shape {m.shape}")
    dev = max_abs(m - m.conj().T)
    if dev > tol.hermiticity_tol:
        raise NotHermitian(f"max |m - m^dagger| = {dev:.3e} exceeds {tol.hermiticity_tol:.1e}")
    try:
        w, u = np.linalg.eigh(hermitize(m))
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    w, u = w[::-1].copy(), u[:, ::-1].copy()
    scale = float(np.abs(w).max()) if w.size else 0.0
    cut = tol.support_cutoff * scale
    w[np.abs(w) <= cut] = 0.0
    return SpectralDecomposition(eigenvalues=w, eigenvectors=u, rank=int(np.count_nonzero(w)))


def mat_power_support(m: np.ndarray, x: float, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """m^x for PSD Hermitian m, with zero eigenvalues preserved (generalized inverse)."""
    dec = eigh(m, tol)
    # PSD contract: anything surviving the cutoff with a negative sign is noise
    w = np.clip(dec.eigenvalues, 0.0, None)
    return SpectralDecomposition(w, dec.eigenvectors, int(np.count_nonzero(w))).power(x)


def support_projector(dec: SpectralDecomposition) -> np.ndarray:
    u = dec.eigenvectors[:, : dec.rank]
    return u @ u.conj().T


class DensityMatrix:
    """PSD trace-one Hermitian matrix with a cached spectral decomposition.

    Gram matrices of ensembles are stored in this role. Instances are
    immutable (the underlying array is marked read-only) and safe to share.
    """

    def __init__(self, matrix: np.ndarray, tol: Tolerances = DEFAULT_TOLERANCES):
        m = np.array(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise InvalidParameter(f"expected a square matrix, got shape {m.shape}")
        dev = max_abs(m - m.conj().T)
        if dev > tol.hermiticity_tol:
            raise NotHermitian(f"max |m - m^dagger| = {dev:.3e}")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > 1e-10:
            raise InvalidParameter(f"trace = {tr:.12g}, expected 1")
        m.setflags(write=False)
        self._matrix = m
        self._tol = tol
        wmin = float(np.linalg.eigvalsh(hermitize(m)).min())
        if wmin < -tol.support_cutoff * max(1.0, max_abs(m)):
            raise InvalidParameter(f"matrix is not PSD (lambda_min = {wmin:.3e})")

    @classmethod
    def ensure(cls, obj, tol: Tolerances = DEFAULT_TOLERANCES) -> "DensityMatrix":
        return obj if isinstance(obj, DensityMatrix) else cls(obj, tol)

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def dim(self) -> int:
        return self._matrix.shape[0]

    @property
    def tolerances(self) -> Tolerances:
        return self._tol

    @cached_property
    def spectrum(self) -> SpectralDecomposition:
        dec = eigh(self._matrix, self._tol)
        w = np.clip(dec.eigenvalues, 0.0, None)
        return SpectralDecomposition(w, dec.eigenvectors, int(np.count_nonzero(w)))

    def power(self, x: float) -> np.ndarray:
        return self.spectrum.power(x)

    def diagonal(self) -> np.ndarray:
        return self._matrix.diagonal().real.copy()

    def __repr__(self):
        return f"DensityMatrix(dim={self.dim})"


def _f_from_legs(b: np.ndarray, half_powers: np.ndarray, z: float) -> float:
    """Tr((S R S)^z) from B = S U_r and h = lambda_r^(alpha/2z) on supp(rho).

    The nonzero spectrum of S R S equals that of the r x r reduced matrix
    K = diag(h) B^dagger B diag(h), so structural zeros of the sandwich never
    appear as eigenvalue dust (which z < 1 would amplify).
    """
    k = (b.conj().T @ b) * np.outer(half_powers, half_powers)
    lam = np.clip(np.linalg.eigvalsh(hermitize(k)), 0.0, None)
    if z == 1.0:
        return float(lam.sum())
    nz = lam > 0.0
    return float((lam[nz] ** z).sum())


def _support_legs(rho: "DensityMatrix", alpha: float, z: float):
    """Support eigenvectors of rho and lambda^(alpha/2z) on the support."""
    spec = rho.spectrum
    u_r = spec.eigenvectors[:, : spec.rank]
    lam_r = spec.eigenvalues[: spec.rank]
    return u_r, lam_r ** (alpha / (2.0 * z))


def f_alpha_z(rho, sigma, alpha: float, z: float, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """The alpha-z trace functional f(rho, sigma).

    Negative powers are taken on the support (generalized inverses). For
    alpha > 1 the exponent on sigma is negative, so supp(rho) must lie inside
    supp(sigma); violations raise SupportViolation.
    """
    if z <= 0:
        raise InvalidParameter(f"z must be positive, got {z}")
    if alpha == 1.0:
        raise InvalidParameter("alpha = 1 is excluded (take the limit instead)")
    rho = DensityMatrix.ensure(rho, tol)
    sigma = DensityMatrix.ensure(sigma, tol)
    if rho.dim != sigma.dim:
        raise InvalidParameter(f"dimension mismatch: {rho.dim} vs {sigma.dim}")
    if alpha > 1.0:
        _check_support(rho, sigma, tol)
    s_leg = sigma.power((1.0 - alpha) / (2.0 * z))
    u_r, half = _support_legs(rho, alpha, z)
    return _f_from_legs(s_leg @ u_r, half, z)


def _check_support(rho: DensityMatrix, sigma: DensityMatrix, tol: Tolerances) -> None:
    dec = sigma.spectrum
    if dec.rank == dec.eigenvalues.size:
        return
    kernel = dec.eigenvectors[:, dec.rank:]
    proj = kernel @ kernel.conj().T
    leak = max_abs(proj @ rho.matrix @ proj)
    lam_max = float(rho.spectrum.eigenvalues[0]) if rho.dim else 0.0
    if leak > tol.support_cutoff * max(lam_max, 1e-300):
        raise SupportViolation(
            f"supp(rho) leaks {leak:.3e} outside supp(sigma); alpha > 1 needs containment"
        )


def von_neumann_entropy(rho, base: float = math.e, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """-Tr(rho log rho) with 0 log 0 = 0; base e by default, pass base=2 for bits."""
    if base <= 0:
        raise InvalidParameter(f"log base must be positive, got {base}")
    rho = DensityMatrix.ensure(rho, tol)
    w = rho.spectrum.eigenvalues
    w = w[w > 0.0]
    h = float(-(w * np.log(w)).sum())
    return h / math.log(base)


def shannon_entropy(p: np.ndarray, base: float = math.e) -> float:
    """Entropy of a probability vector with 0 log 0 = 0."""
    p = np.asarray(p, dtype=float)
    p = p[p > 0.0]
    return float(-(p * np.log(p)).sum() / math.log(base))
