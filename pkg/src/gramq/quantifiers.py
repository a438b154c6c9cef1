"""Quantumness of pure-state ensembles.

The headline quantifier is the coherence of the ensemble's Gram matrix
under the alpha-z divergence. Alongside it: the six analytic reference
curves at z = 1, the l1 and commutator quantifiers, the Holevo gap
(Holevo quantity minus numerically optimized accessible information), and
literature reference constants for the two quantifiers whose defining
optimizations are out of computational scope.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.optimize import minimize

from .coherence import (
    DEFAULT_OPTIMIZER,
    AlphaZ,
    OptimizerConfig,
    coherence_closed_z1,
    coherence_limit_alpha1,
    coherence_optimized,
)
from .ensembles import Ensemble, average_state, gram
from .errors import InvalidParameter, ParameterOutOfRange, UnknownName
from .matfun import DensityMatrix, max_abs, von_neumann_entropy

QUANTIFIERS = (
    "Qaz",
    "Qaz_normalized",
    "Ql1",
    "Qcomm",
    "Qbig",
    "QHol",
    "QFS_ref",
    "Qclon_ref",
)

METHODS = ("closed_form", "generic_eq3", "optimizer", "oracle", "reference_constant", "limit")

_ALPHA_LIMIT_WINDOW = 1e-6


@dataclass(frozen=True)
class QuantumnessRecord:
    """One evaluated point: which ensemble, which quantifier, how it was computed."""

    ensemble_label: str
    quantifier: str
    alpha: float | None
    z: float | None
    value: float
    method: str

    def __post_init__(self):
        if self.quantifier not in QUANTIFIERS:
            raise InvalidParameter(f"unknown quantifier {self.quantifier!r}")
        if self.method not in METHODS:
            raise InvalidParameter(f"unknown method {self.method!r}")
        needs_params = self.quantifier in ("Qaz", "Qaz_normalized")
        if needs_params != (self.alpha is not None and self.z is not None):
            raise InvalidParameter("alpha/z are present exactly for the Qaz quantifiers")

    def to_dict(self) -> dict:
        return {
            "ensemble": self.ensemble_label,
            "quantifier": self.quantifier,
            "alpha": self.alpha,
            "z": self.z,
            "value": self.value,
            "method": self.method,
        }


def _route(params: AlphaZ) -> str:
    if abs(params.alpha - 1.0) < _ALPHA_LIMIT_WINDOW:
        return "limit"
    in_z1_range = 0.0 < params.alpha < 1.0 or 1.0 < params.alpha <= 2.0
    if abs(params.z - 1.0) <= 1e-12 and in_z1_range:
        return "generic_eq3"
    return "optimizer"


class QuantumnessEvaluation(NamedTuple):
    record: "QuantumnessRecord"
    converged: bool


def evaluate_quantumness(
    e: Ensemble, params: AlphaZ, config: OptimizerConfig = DEFAULT_OPTIMIZER
) -> QuantumnessEvaluation:
    """Quantumness record plus a convergence flag (False only on optimizer routes)."""
    g = gram(e)
    method = _route(params)
    converged = True
    if method == "limit":
        value = coherence_limit_alpha1(g)
    elif method == "generic_eq3":
        value = coherence_closed_z1(g, params.alpha)
    else:
        result = coherence_optimized(g, params, config)
        value, converged = result.value, result.converged
    record = QuantumnessRecord(
        ensemble_label=e.label or f"ensemble(n={e.size})",
        quantifier="Qaz",
        alpha=params.alpha,
        z=params.z,
        value=value,
        method=method,
    )
    return QuantumnessEvaluation(record, converged)


def quantumness(
    e: Ensemble, params: AlphaZ, config: OptimizerConfig = DEFAULT_OPTIMIZER
) -> float:
    """Coherence of gram(e): closed form at z = 1, limit near alpha = 1, else optimized."""
    return evaluate_quantumness(e, params, config).record.value


def quantumness_record(
    e: Ensemble, params: AlphaZ, config: OptimizerConfig = DEFAULT_OPTIMIZER
) -> QuantumnessRecord:
    return evaluate_quantumness(e, params, config).record


def quantumness_normalized(
    e: Ensemble, params: AlphaZ, config: OptimizerConfig = DEFAULT_OPTIMIZER
) -> float:
    """Quantumness divided by the member count; the subadditive normalization."""
    return quantumness(e, params, config) / e.size


# ---------------------------------------------------------------------------
# analytic reference curves at z = 1
# ---------------------------------------------------------------------------

def closed_form_reference(name: str, alpha: float, x: float | None = None) -> float:
    """The per-ensemble analytic Q_{alpha,1} formula, valid on (0,1) u (1,2].

    Each power is evaluated in log space so small alpha cannot overflow the
    intermediate 2^(1/alpha)-style factors.
    """
    if not (0.0 < alpha <= 2.0) or alpha == 1.0:
        raise ParameterOutOfRange(f"alpha must lie in (0,1) u (1,2], got {alpha}")
    key = name.lower()
    a = alpha
    ln2, ln3 = math.log(2.0), math.log(3.0)
    if key == "b92":
        x = 1.0 / math.sqrt(2.0) if x is None else float(x)
        if not 0.0 <= x <= 1.0:
            raise ParameterOutOfRange(f"b92 overlap x must lie in [0, 1], got {x}")
        # 2^(-1/a) [(1-x)^a + (1+x)^a]^(1/a)
        top = math.exp((math.log((1.0 - x) ** a + (1.0 + x) ** a) - ln2) / a)
        return (top - 1.0) / (a - 1.0)
    if key == "diag":
        # 2^((a-1)/a) [(1 + 2^(a-1))^(1/a) + 1], split into its two addends
        first = math.exp(((a - 1.0) * ln2 + math.log(1.0 + 2.0 ** (a - 1.0))) / a)
        second = math.exp((a - 1.0) * ln2 / a)
        return (first + second - 3.0) / (3.0 * (a - 1.0))
    if key == "trine":
        return (math.exp(math.log(2.0 / 3.0) * (1.0 - a) / a) - 1.0) / (a - 1.0)
    if key in ("bb84", "tetrad"):
        return (math.exp(ln2 * (a - 1.0) / a) - 1.0) / (a - 1.0)
    if key == "six":
        return (math.exp(ln3 * (a - 1.0) / a) - 1.0) / (a - 1.0)
    raise UnknownName(f"no closed form for {name!r}")


# ---------------------------------------------------------------------------
# comparison quantifiers
# ---------------------------------------------------------------------------

def q_l1(e: Ensemble) -> float:
    """Sum of off-diagonal Gram magnitudes: sum_{i!=j} sqrt(p_i p_j) |<psi_i|psi_j>|."""
    a = np.abs(gram(e).matrix)
    return float(a.sum() - np.trace(a))


def _commutator_sum(e: Ensemble, sqrt_weights: bool) -> float:
    p = e.probabilities
    projs = [s.projector() for s in e.states]
    total = 0.0
    for i, pi in enumerate(projs):
        for j, pj in enumerate(projs):
            c = pi @ pj - pj @ pi
            w = math.sqrt(p[i] * p[j]) if sqrt_weights else p[i] * p[j]
            total -= w * float(np.trace(c @ c).real)
    return total


def q_commutator_weighted(e: Ensemble) -> float:
    """-sum_{ij} sqrt(p_i p_j) Tr[rho_i, rho_j]^2 (the 'Q' column)."""
    return _commutator_sum(e, sqrt_weights=True)


def q_commutator(e: Ensemble) -> float:
    """-sum_{ij} p_i p_j Tr[rho_i, rho_j]^2 (the 'Q_comm' column)."""
    return _commutator_sum(e, sqrt_weights=False)


def holevo_chi(e: Ensemble) -> float:
    """Holevo quantity in bits; for pure states just the mean-state entropy."""
    return von_neumann_entropy(DensityMatrix(average_state(e)), base=2)


class PovmCandidate:
    """Finite POVM: PSD elements summing to the identity within 1e-9."""

    __slots__ = ("_elements",)

    def __init__(self, elements):
        elems = tuple(np.array(m, dtype=complex) for m in elements)
        if not elems:
            raise InvalidParameter("a POVM needs at least one element")
        d = elems[0].shape[0]
        for k, m in enumerate(elems):
            if m.shape != (d, d):
                raise InvalidParameter(f"element {k} has shape {m.shape}, expected ({d}, {d})")
            if max_abs(m - m.conj().T) > 1e-9:
                raise InvalidParameter(f"element {k} is not Hermitian")
            if float(np.linalg.eigvalsh((m + m.conj().T) / 2).min()) < -1e-9:
                raise InvalidParameter(f"element {k} is not PSD")
        if max_abs(sum(elems) - np.eye(d)) > 1e-9:
            raise InvalidParameter("elements do not sum to the identity")
        for m in elems:
            m.setflags(write=False)
        self._elements = elems

    @property
    def elements(self) -> tuple:
        return self._elements

    @property
    def outcomes(self) -> int:
        return len(self._elements)

    @property
    def dim(self) -> int:
        return self._elements[0].shape[0]


def povm_from_vectors(vectors: np.ndarray) -> PovmCandidate:
    """Rank-1 POVM M_k = A^(-1/2) v_k v_k^dagger A^(-1/2) with A = sum_k v_k v_k^dagger."""
    v = np.asarray(vectors, dtype=complex)
    a = np.einsum("ka,kb->ab", v, v.conj())
    w, u = np.linalg.eigh(a)
    if w.min() <= 1e-12 * w.max():
        raise InvalidParameter("vectors do not span the space; completeness impossible")
    inv_sqrt = (u / np.sqrt(w)) @ u.conj().T
    scaled = v @ inv_sqrt.T
    return PovmCandidate([np.outer(w_k, w_k.conj()) for w_k in scaled])


def _mutual_information_bits(joint: np.ndarray) -> float:
    joint = np.clip(joint, 0.0, None)

    def h(v):
        v = v[v > 0.0]
        return float(-(v * np.log2(v)).sum())

    return h(joint.sum(axis=1)) + h(joint.sum(axis=0)) - h(joint.ravel())


def accessible_info(
    e: Ensemble,
    outcomes_max: int | None = None,
    config: OptimizerConfig = DEFAULT_OPTIMIZER,
) -> float:
    """Lower bound on the accessible information (bits) via POVM optimization.

    Optimizes rank-1 POVMs with m outcomes for every m from max(2, d) to
    outcomes_max (default d^2), each with config.restarts random starts.
    Completeness holds exactly through the A^(-1/2) v_k v_k^dagger A^(-1/2)
    parameterization, so every iterate is a genuine measurement and the
    returned value never exceeds the Holevo quantity.
    """
    d = e.dim
    if outcomes_max is None:
        outcomes_max = d * d
    if outcomes_max < 2:
        raise InvalidParameter(f"outcomes_max must be at least 2, got {outcomes_max}")
    psi = e.state_matrix()
    p = e.probabilities
    rng = np.random.default_rng(config.seed)

    def neg_info(x, m):
        v = (x[: m * d] + 1j * x[m * d :]).reshape(m, d)
        a = np.einsum("ka,kb->ab", v, v.conj())
        w, u = np.linalg.eigh(a)
        if w.min() <= 1e-12 * max(w.max(), 1e-300):
            return 0.0
        inv_sqrt = (u / np.sqrt(w)) @ u.conj().T
        amp = psi.conj() @ (v @ inv_sqrt.T).T
        joint = p[:, None] * np.abs(amp) ** 2
        return -_mutual_information_bits(joint)

    best = 0.0
    any_converged = False
    for m in range(max(2, d), outcomes_max + 1):
        for _ in range(config.restarts):
            x0 = rng.standard_normal(2 * m * d)
            res = minimize(
                neg_info, x0, args=(m,), method="L-BFGS-B",
                options=dict(maxiter=config.max_iters),
            )
            any_converged = any_converged or bool(res.success)
            best = max(best, -float(res.fun))
    if not any_converged:
        warnings.warn("no accessible-information restart converged; returning best value seen")
    return best


def q_hol(
    e: Ensemble,
    outcomes_max: int | None = None,
    config: OptimizerConfig = DEFAULT_OPTIMIZER,
) -> float:
    """Holevo quantity minus (optimized) accessible information, in bits."""
    return holevo_chi(e) - accessible_info(e, outcomes_max, config)


# ---------------------------------------------------------------------------
# literature reference constants
# ---------------------------------------------------------------------------

# Two-decimal comparison-table constants for the six canonical ensembles.
# QFS_ref and Qclon_ref are carried as constants only: their defining
# optimizations (measurement/state-set pairs, symmetric two-copy unitaries)
# live in the cited literature, not in this package.
TABLE1_REFERENCE = {
    "b92": {"Ql1": 0.71, "QFS_ref": 0.07, "Qclon_ref": 0.02, "QHol": 0.20, "Qcomm": 0.25, "Qbig": 0.50},
    "diag": {"Ql1": 0.94, "QFS_ref": 0.13, "Qclon_ref": 0.10, "QHol": 0.25, "Qcomm": 0.22, "Qbig": 0.67},
    "trine": {"Ql1": 1.00, "QFS_ref": 0.25, "Qclon_ref": 0.32, "QHol": 0.42, "Qcomm": 0.25, "Qbig": 0.75},
    "bb84": {"Ql1": 1.41, "QFS_ref": 0.25, "Qclon_ref": 0.32, "QHol": 0.50, "Qcomm": 0.25, "Qbig": 1.00},
    "tetrad": {"Ql1": 1.73, "QFS_ref": 0.33, "Qclon_ref": 0.34, "QHol": 0.59, "Qcomm": 0.33, "Qbig": 1.33},
    "six": {"Ql1": 2.83, "QFS_ref": 0.33, "Qclon_ref": 0.35, "QHol": 0.67, "Qcomm": 0.33, "Qbig": 2.00},
}


def reference_constants(name: str) -> dict:
    """Verbatim two-decimal table constants for one canonical ensemble."""
    key = name.lower()
    if key not in TABLE1_REFERENCE:
        raise UnknownName(f"no reference constants for {name!r}")
    return dict(TABLE1_REFERENCE[key])
