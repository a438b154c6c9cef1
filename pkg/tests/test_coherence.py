"""Divergence, the coherence minimization, its closed form, limit, and oracle."""

import math

import numpy as np
import pytest

from gramq import (
    AlphaZ,
    DensityMatrix,
    DimensionTooLarge,
    IncoherentState,
    InvalidParameter,
    OptimizerConfig,
    Validity,
    canonical,
    closed_form_reference,
    coherence_closed_z1,
    coherence_limit_alpha1,
    coherence_optimized,
    divergence,
    gram,
    oracle_grid,
)
from gramq.sampling import random_density_matrix

SQ32 = math.sqrt(1.5)
FIVE_CASES = ((0.5, 0.75), (0.5, 1.0), (1.5, 1.0), (1.5, 0.75), (2.0, 2.0))


@pytest.mark.parametrize(
    "alpha,z,expected",
    [
        (0.5, 0.75, Validity.CASE_I),
        (0.5, 0.5, Validity.CASE_I),     # z exactly max(alpha, 1-alpha)
        (0.3, 2.0, Validity.CASE_I),
        (0.5, 0.3, Validity.OUTSIDE),    # z below max(alpha, 1-alpha)
        (1.5, 1.0, Validity.CASE_II),
        (2.0, 1.0, Validity.CASE_II),    # also case iii; ii is reported first
        (1.5, 0.75, Validity.CASE_III),
        (2.5, 2.5, Validity.CASE_IV),
        (1.5, 1.5, Validity.CASE_IV),
        (2.5, 1.0, Validity.OUTSIDE),
        (1.5, 2.0, Validity.OUTSIDE),
        (-0.5, 1.0, Validity.OUTSIDE),
    ],
)
def test_alpha_z_validity(alpha, z, expected):
    assert AlphaZ(alpha, z).validity is expected


def test_alpha_z_rejects_nonpositive_z():
    with pytest.raises(InvalidParameter):
        AlphaZ(0.5, 0.0)


def test_incoherent_state_validation():
    with pytest.raises(InvalidParameter):
        IncoherentState([0.5, 0.6])
    with pytest.raises(InvalidParameter):
        IncoherentState([1.5, -0.5])
    q = IncoherentState([0.25, 0.75])
    assert np.abs(q.matrix() - np.diag([0.25, 0.75])).max() == 0.0


def test_optimizer_config_validation():
    with pytest.raises(InvalidParameter):
        OptimizerConfig(restarts=0)
    with pytest.raises(InvalidParameter):
        OptimizerConfig(convergence_tol=0.0)


# --- divergence ---

def test_divergence_vanishes_for_equal_states():
    v = np.array([0.6, 0.8])
    pure = np.outer(v, v)
    for alpha, z in FIVE_CASES:
        assert divergence(pure, pure, AlphaZ(alpha, z)) == pytest.approx(0.0, abs=1e-12)
    rho = np.diag([0.3, 0.7])
    assert divergence(rho, rho, AlphaZ(1.7, 1.0)) == pytest.approx(0.0, abs=1e-12)


def test_divergence_trine_against_maximally_mixed():
    got = divergence(gram(canonical("trine")), np.eye(3) / 3, AlphaZ(2.0, 1.0))
    assert got == pytest.approx(SQ32 - 1.0, abs=1e-12)


def test_divergence_b92_against_uniform_diagonal():
    # f = 2 Tr(G^2) = 3/2 from the spectrum (1 +- 1/sqrt2)/2
    got = divergence(gram(canonical("b92")), np.diag([0.5, 0.5]), AlphaZ(2.0, 1.0))
    assert got == pytest.approx(SQ32 - 1.0, abs=1e-12)


def test_divergence_diagonal_fast_path_matches_general_path():
    rng = np.random.default_rng(14)
    for _ in range(30):
        n = int(rng.integers(2, 5))
        rho = random_density_matrix(n, rng)
        q = rng.dirichlet(np.ones(n))
        params = AlphaZ(float(rng.choice([0.3, 0.6, 1.4, 2.0])), float(rng.uniform(0.5, 2.0)))
        fast = divergence(rho, IncoherentState(q), params)
        full = divergence(rho, DensityMatrix(np.diag(q.astype(complex))), params)
        assert fast == pytest.approx(full, abs=1e-10)


def test_divergence_nonnegative_in_both_regimes():
    rng = np.random.default_rng(15)
    for _ in range(60):
        n = int(rng.integers(2, 5))
        rho = random_density_matrix(n, rng, rank=int(rng.integers(1, n + 1)))
        sigma = random_density_matrix(n, rng)
        z = float(rng.uniform(0.3, 2.0))
        assert divergence(rho, sigma, AlphaZ(float(rng.uniform(0.05, 0.95)), z)) >= -1e-9
        assert divergence(rho, sigma, AlphaZ(float(rng.uniform(1.05, 2.5)), z)) >= -1e-9


# --- closed form at z = 1 ---

def test_closed_z1_diagonal_is_zero():
    assert coherence_closed_z1(np.diag([0.2, 0.3, 0.5]), 0.7) == pytest.approx(0.0, abs=1e-12)
    assert coherence_closed_z1(np.diag([0.2, 0.8]), 1.6) == pytest.approx(0.0, abs=1e-12)


def test_closed_z1_trine_at_alpha_two():
    got = coherence_closed_z1(gram(canonical("trine")), 2.0)
    assert got == pytest.approx(SQ32 - 1.0, abs=1e-12)


def test_closed_z1_bb84_at_alpha_half_is_one():
    got = coherence_closed_z1(gram(canonical("bb84")), 0.5)
    assert got == pytest.approx(1.0, abs=1e-12)


# --- alpha -> 1 limit ---

def test_limit_trine():
    got = coherence_limit_alpha1(gram(canonical("trine")))
    assert got == pytest.approx(math.log(1.5), abs=1e-12)


def test_limit_six():
    got = coherence_limit_alpha1(gram(canonical("six")))
    assert got == pytest.approx(math.log(3.0), abs=1e-12)


def test_limit_diagonal_is_zero():
    assert coherence_limit_alpha1(np.diag([0.1, 0.9])) == pytest.approx(0.0, abs=1e-12)


def test_limit_continuity_of_closed_form():
    h = 1e-4
    for name in ("b92", "diag", "trine", "bb84", "tetrad", "six"):
        g = gram(canonical(name))
        lim = coherence_limit_alpha1(g)
        assert coherence_closed_z1(g, 1.0 + h) == pytest.approx(lim, abs=1e-3)
        assert coherence_closed_z1(g, 1.0 - h) == pytest.approx(lim, abs=1e-3)


# --- optimizer ---

def test_optimizer_diagonal_input():
    rho = np.diag([0.2, 0.5, 0.3])
    for alpha, z in FIVE_CASES:
        res = coherence_optimized(rho, AlphaZ(alpha, z), OptimizerConfig(restarts=4))
        assert res.value == pytest.approx(0.0, abs=1e-9)
        assert np.abs(res.argmin.diag - np.array([0.2, 0.5, 0.3])).max() < 1e-5


def test_optimizer_matches_closed_form_on_trine():
    res = coherence_optimized(gram(canonical("trine")), AlphaZ(2.0, 1.0))
    assert res.value == pytest.approx(SQ32 - 1.0, abs=1e-7)
    assert res.converged


def test_optimizer_never_beats_uniform_start():
    rng = np.random.default_rng(16)
    for _ in range(10):
        n = int(rng.integers(2, 5))
        rho = random_density_matrix(n, rng)
        params = AlphaZ(1.5, 0.75)
        res = coherence_optimized(rho, params, OptimizerConfig(restarts=4))
        uniform = divergence(rho, IncoherentState(np.full(n, 1.0 / n)), params)
        assert res.value <= uniform + 1e-12


def test_optimizer_closed_form_consistency_random():
    # 200 random density matrices, n <= 5, alpha cycling through the grid
    rng = np.random.default_rng(17)
    alphas = (0.3, 0.5, 0.8, 1.5, 2.0)
    cfg = OptimizerConfig(restarts=3, seed=23)
    for k in range(200):
        n = int(rng.integers(2, 6))
        rho = random_density_matrix(n, rng, rank=int(rng.integers(1, n + 1)))
        alpha = alphas[k % len(alphas)]
        got = coherence_optimized(rho, AlphaZ(alpha, 1.0), cfg).value
        assert got == pytest.approx(coherence_closed_z1(rho, alpha), abs=1e-6)


def test_optimizer_singleton_dimension():
    res = coherence_optimized(np.array([[1.0]]), AlphaZ(1.5, 1.0))
    assert res.value == pytest.approx(0.0, abs=1e-12)


# --- oracle ---

def test_oracle_diagonal_is_zero():
    rho = np.diag([0.25, 0.25, 0.5])  # representable on the grid
    assert oracle_grid(rho, AlphaZ(0.5, 1.0), steps=100) == pytest.approx(0.0, abs=1e-12)
    assert oracle_grid(rho, AlphaZ(1.5, 1.0), steps=100) == pytest.approx(0.0, abs=1e-10)


def test_oracle_b92_matches_closed_form():
    got = oracle_grid(gram(canonical("b92")), AlphaZ(2.0, 1.0), steps=400)
    assert got == pytest.approx(SQ32 - 1.0, abs=2e-4)


def test_oracle_diag_matches_reference_formula():
    got = oracle_grid(gram(canonical("diag")), AlphaZ(0.5, 1.0), steps=200)
    assert got == pytest.approx(closed_form_reference("diag", 0.5), abs=5e-4)


def test_oracle_monotone_in_steps():
    rho = gram(canonical("trine"))
    params = AlphaZ(1.5, 0.75)
    values = [oracle_grid(rho, params, steps=s) for s in (50, 100, 200)]
    assert values[1] <= values[0] + 1e-7
    assert values[2] <= values[1] + 1e-7


def test_oracle_rejects_large_dimension():
    with pytest.raises(DimensionTooLarge):
        oracle_grid(np.eye(5) / 5, AlphaZ(0.5, 1.0), steps=50)


def test_optimizer_agrees_with_oracle():
    cfg = OptimizerConfig(restarts=8, seed=5)
    rng = np.random.default_rng(18)
    mats = [gram(canonical("b92")), gram(canonical("trine")), random_density_matrix(3, rng)]
    for rho in mats:
        for alpha, z in FIVE_CASES:
            params = AlphaZ(alpha, z)
            got = coherence_optimized(rho, params, cfg).value
            want = oracle_grid(rho, params, steps=400)
            assert got == pytest.approx(want, abs=5e-4)
