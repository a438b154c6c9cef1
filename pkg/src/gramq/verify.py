"""Randomized property suites behind the `verify` command.

Each suite draws seeded random inputs, checks one family of structural
claims at fixed tolerances, and reports failures with the offending inputs
serialized so a case can be replayed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import sampling
from .coherence import AlphaZ, OptimizerConfig, coherence_closed_z1, coherence_optimized, oracle_grid
from .ensembles import (
    apply_unitary,
    canonical,
    cross_gram,
    gram,
    hadamard_product,
    serialize_ensemble,
    tensor,
)
from .matfun import DensityMatrix, eigh, f_alpha_z, mat_power_support, max_abs, support_projector
from .quantifiers import quantumness, quantumness_normalized


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, detail: str):
        self.cases += 1
        if not ok:
            self.failures.append(detail)


def _describe(e) -> str:
    return serialize_ensemble(e).decode("utf-8").replace("\n", " ")


def suite_reconstruction(seed: int, quick: bool) -> SuiteResult:
    """Eigendecomposition reconstructs, U is unitary, powers compose, inverses project."""
    res = SuiteResult("reconstruction")
    rng = np.random.default_rng(seed)
    trials = 50 if quick else 200
    for _ in range(trials):
        dim = int(rng.integers(1, 9))
        m = sampling.random_hermitian(dim, rng)
        dec = eigh(m)
        res.check(
            max_abs(dec.reconstruct() - m) < 1e-10,
            f"reconstruction off for dim={dim} matrix {np.round(m, 6).tolist()}",
        )
        u = dec.eigenvectors
        res.check(
            max_abs(u.conj().T @ u - np.eye(dim)) < 1e-10,
            f"eigenvectors not unitary for dim={dim}",
        )
        res.check(
            bool(np.all(np.diff(dec.eigenvalues) <= 1e-15)),
            "eigenvalues not descending",
        )

        psd = sampling.random_psd(dim, rng)
        a, b = float(rng.uniform(0.2, 1.5)), float(rng.uniform(0.2, 1.5))
        lhs = mat_power_support(psd, a + b)
        rhs = mat_power_support(psd, a) @ mat_power_support(psd, b)
        res.check(
            max_abs(lhs - rhs) < 1e-9 * max(1.0, max_abs(lhs)),
            f"power composition off at (a={a:.3f}, b={b:.3f}) dim={dim}",
        )

        rank = int(rng.integers(1, dim + 1))
        low = sampling.random_psd(dim, rng, rank=rank)
        inv = mat_power_support(low, -1.0)
        proj = support_projector(eigh(low))
        res.check(
            max_abs(low @ inv - proj) < 1e-9 * max(1.0, max_abs(low)),
            f"generalized inverse not a support projector at rank {rank}, dim {dim}",
        )
    return res


def suite_gram(seed: int, quick: bool) -> SuiteResult:
    """PSD, unit trace, diagonal = probabilities, spectral bridge to the mean state."""
    res = SuiteResult("gram")
    rng = np.random.default_rng(seed)
    trials = 100 if quick else 500
    for _ in range(trials):
        e = sampling.random_ensemble(rng)
        g = gram(e)  # construction itself enforces Hermitian/PSD/trace-1
        res.check(
            max_abs(np.diag(g.matrix) - e.probabilities) < 1e-10,
            f"gram diagonal != probabilities for {_describe(e)}",
        )
        from .ensembles import average_state

        avg = np.linalg.eigvalsh(average_state(e))[::-1]
        k = min(len(avg), g.dim)
        gap = np.abs(g.spectrum.eigenvalues[:k] - np.clip(avg[:k], 0, None)).max()
        res.check(gap < 1e-9, f"gram/mean-state spectra differ by {gap:.2e} for {_describe(e)}")
    return res


def suite_unitary(seed: int, quick: bool) -> SuiteResult:
    """Gram matrices, cross Gram matrices and quantumness are unitary invariant."""
    res = SuiteResult("unitary")
    rng = np.random.default_rng(seed)
    trials = 40 if quick else 150
    for _ in range(trials):
        dim = int(rng.integers(2, 5))
        e = sampling.random_ensemble(rng, dim=dim, max_n=5)
        f = sampling.random_ensemble(rng, dim=dim, max_n=5)
        u = sampling.haar_unitary(dim, rng)
        res.check(
            max_abs(gram(apply_unitary(e, u)).matrix - gram(e).matrix) < 1e-10,
            f"gram not unitary invariant for {_describe(e)}",
        )
        res.check(
            max_abs(cross_gram(apply_unitary(e, u), apply_unitary(f, u)) - cross_gram(e, f))
            < 1e-10,
            "cross gram not unitary invariant",
        )
        params = sampling.random_alpha_z(rng, case="case_ii")
        gap = abs(quantumness(apply_unitary(e, u), params) - quantumness(e, params))
        res.check(gap < 1e-9, f"quantumness moved by {gap:.2e} under a unitary")
    return res


def suite_tensor_hadamard(seed: int, quick: bool) -> SuiteResult:
    """Tensor products Kronecker the Gram matrix; ordered products Hadamard it."""
    res = SuiteResult("tensor_hadamard")
    rng = np.random.default_rng(seed)
    trials = 40 if quick else 150
    for _ in range(trials):
        dim = int(rng.integers(2, 4))
        e = sampling.random_ensemble(rng, dim=dim, max_n=4)
        f = sampling.random_ensemble(rng, dim=dim, max_n=4)
        res.check(
            max_abs(gram(tensor(e, f)).matrix - np.kron(gram(e).matrix, gram(f).matrix)) < 1e-10,
            f"tensor gram != kron for {_describe(e)} and {_describe(f)}",
        )
        g = sampling.random_ensemble(rng, dim=dim, n=e.size)
        prod = hadamard_product(e, g)
        res.check(
            max_abs(prod.weight * gram(prod.ensemble).matrix - gram(e).matrix * gram(g).matrix)
            < 1e-10,
            "unnormalized Hadamard gram != entrywise product",
        )
        res.check(
            max_abs(cross_gram(e, e) - gram(e).matrix) < 1e-12,
            "cross_gram(e, e) != gram(e)",
        )
    return res


def suite_bounds(seed: int, quick: bool) -> SuiteResult:
    """f <= 1 below alpha = 1, f >= 1 above, divergence nonnegative, f multiplicative."""
    res = SuiteResult("bounds")
    rng = np.random.default_rng(seed)
    trials = 60 if quick else 200
    for _ in range(trials):
        dim = int(rng.integers(2, 6))
        rho = sampling.random_density_matrix(dim, rng, rank=int(rng.integers(1, dim + 1)))
        sigma = sampling.random_density_matrix(dim, rng)  # full support
        a_low = float(rng.uniform(0.05, 0.95))
        a_high = float(rng.uniform(1.05, 2.5))
        # z below ~0.6 amplifies eigensolver noise as noise^z past the 1e-8
        # tolerances on ill-conditioned draws; validity cases all sit above it
        z = float(rng.uniform(0.6, 2.5))
        f_low = f_alpha_z(rho, sigma, a_low, z)
        f_high = f_alpha_z(rho, sigma, a_high, z)
        res.check(f_low <= 1.0 + 1e-9, f"f = {f_low} > 1 at alpha = {a_low:.3f} < 1")
        res.check(f_high >= 1.0 - 1e-9, f"f = {f_high} < 1 at alpha = {a_high:.3f} > 1")
        d_low = (f_low ** (1 / a_low) - 1) / (a_low - 1)
        d_high = (f_high ** (1 / a_high) - 1) / (a_high - 1)
        res.check(min(d_low, d_high) >= -1e-9, "divergence went negative")

        rho2 = sampling.random_density_matrix(int(rng.integers(2, 4)), rng)
        sigma2 = sampling.random_density_matrix(rho2.dim, rng)
        for a in (a_low, a_high):
            joint = f_alpha_z(
                DensityMatrix(np.kron(rho.matrix, rho2.matrix)),
                DensityMatrix(np.kron(sigma.matrix, sigma2.matrix)),
                a,
                z,
            ) ** (1 / a)
            split = (f_alpha_z(rho, sigma, a, z) * f_alpha_z(rho2, sigma2, a, z)) ** (1 / a)
            res.check(
                abs(joint - split) < 1e-8 * max(1.0, split),
                f"f^(1/alpha) not multiplicative at alpha = {a:.3f}, z = {z:.3f}",
            )
    return res


def suite_faithfulness(seed: int, quick: bool) -> SuiteResult:
    """Quantumness is nonnegative, zero exactly for mutually orthogonal ensembles."""
    res = SuiteResult("faithfulness")
    rng = np.random.default_rng(seed)
    trials = 40 if quick else 120
    for _ in range(trials):
        params = sampling.random_alpha_z(rng)
        dim = int(rng.integers(2, 5))
        n = int(rng.integers(2, dim + 1))
        ortho = sampling.random_orthonormal_ensemble(rng, n, dim)
        cfg = OptimizerConfig(restarts=4, seed=int(rng.integers(2**31)))
        q0 = quantumness(ortho, params, cfg)
        res.check(abs(q0) <= 1e-9, f"orthogonal ensemble got Q = {q0} at {params}")
        e = sampling.random_ensemble(rng, dim=2, n=3, max_dim=2)
        off = max_abs(gram(e).matrix - np.diag(np.diag(gram(e).matrix)))
        q = quantumness(e, params, cfg)
        res.check(q >= -1e-9, f"negative quantumness {q} for {_describe(e)}")
        if off > 1e-3:
            res.check(q > 1e-9, f"coherent ensemble got Q = {q} (off-diag {off:.2e})")
    return res


def suite_subadditivity(seed: int, quick: bool) -> SuiteResult:
    """Q'(e x f) <= Q'(e) + Q'(f) in validity cases (i) and (ii)."""
    res = SuiteResult("subadditivity")
    rng = np.random.default_rng(seed)
    trials = 30 if quick else 100
    for _ in range(trials):
        e = sampling.random_ensemble(rng, max_n=4, max_dim=4)
        f = sampling.random_ensemble(rng, max_n=4, max_dim=4)
        case = "case_i" if rng.random() < 0.5 else "case_ii"
        params = sampling.random_alpha_z(rng, case=case)
        if case == "case_i":
            params = AlphaZ(params.alpha, 1.0)  # z = 1 stays inside case (i)
        lhs = quantumness_normalized(tensor(e, f), params)
        rhs = quantumness_normalized(e, params) + quantumness_normalized(f, params)
        res.check(
            lhs <= rhs + 1e-9,
            f"subadditivity broken at {params}: {lhs} > {rhs} for {_describe(e)} x {_describe(f)}",
        )
    return res


def suite_oracle(seed: int, quick: bool) -> SuiteResult:
    """Multi-start optimizer agrees with the exhaustive simplex grid."""
    res = SuiteResult("oracle")
    if quick:
        return res
    rng = np.random.default_rng(seed)
    mats = [gram(canonical("b92")), gram(canonical("trine")), sampling.random_density_matrix(3, rng)]
    cfg = OptimizerConfig(restarts=8, seed=seed)
    for rho in mats:
        for a, z in ((0.5, 0.75), (0.5, 1.0), (1.5, 1.0), (1.5, 0.75), (2.0, 2.0)):
            params = AlphaZ(a, z)
            got = coherence_optimized(rho, params, cfg).value
            want = oracle_grid(rho, params, steps=400)
            res.check(
                abs(got - want) < 5e-4,
                f"optimizer {got} vs oracle {want} at alpha={a}, z={z}",
            )
            if z == 1.0:
                res.check(
                    abs(got - coherence_closed_z1(rho, a)) < 1e-7,
                    f"optimizer {got} vs closed form at alpha={a}",
                )
    return res


ALL_SUITES = (
    suite_reconstruction,
    suite_gram,
    suite_unitary,
    suite_tensor_hadamard,
    suite_bounds,
    suite_faithfulness,
    suite_subadditivity,
    suite_oracle,
)


def run_all(seed: int = 0, quick: bool = False) -> list[SuiteResult]:
    return [suite(seed, quick) for suite in ALL_SUITES]
