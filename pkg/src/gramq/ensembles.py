"""Pure-state ensembles, their Gram matrices, ensemble algebra and file I/O.

An ensemble is an ordered list of (probability, state) pairs. Its Gram
matrix G_ij = sqrt(p_i p_j) <psi_i|psi_j> is PSD with unit trace and
diagonal p_i, so it can be read as a density matrix on an n-dimensional
space; everything downstream quantifies the coherence of that matrix.
"""

from __future__ import annotations

import json
import math
from typing import NamedTuple

import numpy as np

from .errors import (
    DimensionMismatch,
    InvariantViolation,
    LengthMismatch,
    NotUnitary,
    ParameterOutOfRange,
    ParseError,
    UnknownName,
)
from .matfun import DensityMatrix, max_abs

GramMatrix = DensityMatrix

CANONICAL_NAMES = ("b92", "diag", "trine", "bb84", "tetrad", "six")

_NORM_TOL = 1e-10


class PureState:
    """Unit-norm complex amplitude vector."""

    __slots__ = ("_amplitudes",)

    def __init__(self, amplitudes):
        a = np.array(amplitudes, dtype=complex).reshape(-1)
        nrm = float(np.linalg.norm(a))
        if abs(nrm - 1.0) > _NORM_TOL:
            raise InvariantViolation(f"state norm = {nrm:.12g}, expected 1")
        a.setflags(write=False)
        self._amplitudes = a

    @property
    def amplitudes(self) -> np.ndarray:
        return self._amplitudes

    @property
    def dim(self) -> int:
        return self._amplitudes.size

    def overlap(self, other: "PureState") -> complex:
        """<self|other>."""
        return complex(np.vdot(self._amplitudes, other._amplitudes))

    def projector(self) -> np.ndarray:
        return np.outer(self._amplitudes, self._amplitudes.conj())

    def __eq__(self, other):
        return isinstance(other, PureState) and np.array_equal(
            self._amplitudes, other._amplitudes
        )

    def __hash__(self):
        return hash(self._amplitudes.tobytes())

    def __repr__(self):
        return f"PureState(dim={self.dim})"


class Ensemble:
    """Ordered list of (probability, PureState) pairs in a common dimension."""

    __slots__ = ("_members", "_label")

    def __init__(self, members, label: str | None = None):
        members = tuple(
            (float(p), s if isinstance(s, PureState) else PureState(s)) for p, s in members
        )
        if not members:
            raise InvariantViolation("ensemble needs at least one member")
        if any(p <= 0 for p, _ in members):
            raise InvariantViolation("all probabilities must be strictly positive")
        total = math.fsum(p for p, _ in members)
        if abs(total - 1.0) > _NORM_TOL:
            raise InvariantViolation(f"probabilities sum to {total:.12g}, expected 1")
        dims = {s.dim for _, s in members}
        if len(dims) > 1:
            raise DimensionMismatch(f"members live in different dimensions {sorted(dims)}")
        self._members = members
        self._label = label

    @property
    def members(self) -> tuple:
        return self._members

    @property
    def label(self) -> str | None:
        return self._label

    @property
    def size(self) -> int:
        return len(self._members)

    @property
    def dim(self) -> int:
        return self._members[0][1].dim

    @property
    def probabilities(self) -> np.ndarray:
        return np.array([p for p, _ in self._members])

    @property
    def states(self) -> tuple:
        return tuple(s for _, s in self._members)

    def state_matrix(self) -> np.ndarray:
        """n x d array whose rows are the amplitude vectors."""
        return np.array([s.amplitudes for _, s in self._members])

    def relabel(self, label: str | None) -> "Ensemble":
        return Ensemble(self._members, label=label)

    def __len__(self):
        return len(self._members)

    def __iter__(self):
        return iter(self._members)

    def __eq__(self, other):
        return (
            isinstance(other, Ensemble)
            and self._label == other._label
            and len(self) == len(other)
            and all(
                pa == pb and sa == sb
                for (pa, sa), (pb, sb) in zip(self._members, other._members)
            )
        )

    def __repr__(self):
        name = f" {self._label!r}" if self._label else ""
        return f"Ensemble(n={self.size}, dim={self.dim}{name})"


def gram(e: Ensemble) -> GramMatrix:
    """Gram matrix G_ij = sqrt(p_i p_j) <psi_i|psi_j> as a density matrix."""
    root_p = np.sqrt(e.probabilities)
    psi = e.state_matrix()
    overlaps = psi.conj() @ psi.T
    return GramMatrix(root_p[:, None] * overlaps * root_p[None, :])


def cross_gram(e: Ensemble, f: Ensemble) -> np.ndarray:
    """Rectangular matrix sqrt(p_i q_k) <psi_i|phi_k>; cross_gram(e, e) = gram(e)."""
    if e.dim != f.dim:
        raise DimensionMismatch(f"dim {e.dim} vs {f.dim}")
    root_p = np.sqrt(e.probabilities)
    root_q = np.sqrt(f.probabilities)
    overlaps = e.state_matrix().conj() @ f.state_matrix().T
    return root_p[:, None] * overlaps * root_q[None, :]


def apply_unitary(e: Ensemble, u: np.ndarray) -> Ensemble:
    """Map every state to U|psi>; the Gram matrix is unchanged."""
    u = np.asarray(u, dtype=complex)
    if u.shape != (e.dim, e.dim):
        raise DimensionMismatch(f"unitary shape {u.shape} does not match dim {e.dim}")
    if max_abs(u.conj().T @ u - np.eye(e.dim)) > 1e-10:
        raise NotUnitary("u^dagger u deviates from identity by more than 1e-10")
    return Ensemble(
        [(p, PureState(u @ s.amplitudes)) for p, s in e], label=e.label
    )


def tensor(e: Ensemble, f: Ensemble) -> Ensemble:
    """Tensor-product ensemble {(p_i q_k, psi_i (x) phi_k)} in row-major (i, k) order."""
    members = [
        (p * q, PureState(np.kron(s.amplitudes, t.amplitudes)))
        for p, s in e
        for q, t in f
    ]
    return Ensemble(members)


class HadamardProduct(NamedTuple):
    """Ordered Hadamard product with its probability renormalization constant.

    The raw weights p_i q_i sum to `weight`, generally < 1; the returned
    ensemble carries them renormalized. The *unnormalized* Gram matrix,
    weight * gram(ensemble), equals the entrywise product of the factors'
    Gram matrices.
    """

    ensemble: Ensemble
    weight: float


def hadamard_product(e: Ensemble, f: Ensemble) -> HadamardProduct:
    """Member-wise product ensemble {(p_i q_i, psi_i (x) phi_i)} for ordered factors."""
    if e.size != f.size:
        raise LengthMismatch(f"ordered product needs equal lengths, got {e.size} and {f.size}")
    raw = [
        (p * q, PureState(np.kron(s.amplitudes, t.amplitudes)))
        for (p, s), (q, t) in zip(e, f)
    ]
    weight = math.fsum(w for w, _ in raw)
    assert weight > 0.0, "positive probabilities cannot produce a zero total weight"
    return HadamardProduct(
        Ensemble([(w / weight, s) for w, s in raw]), weight
    )


def average_state(e: Ensemble) -> np.ndarray:
    """Mean density operator sum_i p_i |psi_i><psi_i| on the d-dimensional space."""
    psi = e.state_matrix()
    return np.einsum("i,ia,ib->ab", e.probabilities, psi, psi.conj())


# ---------------------------------------------------------------------------
# canonical ensembles
# ---------------------------------------------------------------------------

def canonical(name: str, x: float | None = None) -> Ensemble:
    """One of the six reference ensembles: b92, diag, trine, bb84, tetrad, six.

    All amplitudes are exact closed forms, so the Gram spectra match their
    analytic values to machine precision. `x` applies to b92 only: it is the
    overlap <psi_1|psi_2> = sin(theta) in [0, 1], default 1/sqrt(2).
    """
    key = name.lower()
    if key not in CANONICAL_NAMES:
        raise UnknownName(f"unknown ensemble {name!r}; choose from {CANONICAL_NAMES}")
    if key != "b92" and x is not None:
        raise ParameterOutOfRange(f"parameter x applies to b92 only, not {key!r}")

    ket0 = np.array([1.0, 0.0], dtype=complex)
    ket1 = np.array([0.0, 1.0], dtype=complex)
    plus = (ket0 + ket1) / math.sqrt(2.0)
    minus = (ket0 - ket1) / math.sqrt(2.0)

    if key == "b92":
        x = 1.0 / math.sqrt(2.0) if x is None else float(x)
        if not 0.0 <= x <= 1.0:
            raise ParameterOutOfRange(f"b92 overlap x must lie in [0, 1], got {x}")
        theta = math.asin(x)
        c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
        states = [c * ket0 + s * ket1, s * ket0 + c * ket1]
    elif key == "diag":
        states = [ket0, ket1, plus]
    elif key == "trine":
        r3 = math.sqrt(3.0) / 2.0
        states = [ket0, 0.5 * ket0 + r3 * ket1, 0.5 * ket0 - r3 * ket1]
    elif key == "bb84":
        states = [ket0, ket1, plus, minus]
    elif key == "tetrad":
        # qubit SIC set: pairwise |<psi_j|psi_k>|^2 = 1/3
        a, b = 1.0 / math.sqrt(3.0), math.sqrt(2.0 / 3.0)
        w = np.exp(2j * math.pi / 3.0)
        states = [ket0, a * ket0 + b * ket1, a * ket0 + b * w * ket1, a * ket0 + b * w * w * ket1]
    else:  # six-state: eigenbases of X, Y, Z
        ket0_y = (ket0 + 1j * ket1) / math.sqrt(2.0)
        ket1_y = (ket0 - 1j * ket1) / math.sqrt(2.0)
        states = [plus, minus, ket0_y, ket1_y, ket0, ket1]

    n = len(states)
    return Ensemble([(1.0 / n, PureState(v)) for v in states], label=key)


# ---------------------------------------------------------------------------
# file format
# ---------------------------------------------------------------------------
# One JSON document per ensemble:
#   {"dim": d, "label": "...", "members": [{"p": ..., "amplitudes": [[re, im], ...]}, ...]}
# Floats are written with 17 significant digits so parsing reproduces the
# exact binary values.


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def serialize_ensemble(e: Ensemble) -> bytes:
    lines = ["{", f'  "dim": {e.dim},', f'  "label": {json.dumps(e.label or "")},']
    lines.append('  "members": [')
    for idx, (p, s) in enumerate(e):
        amps = ", ".join(
            f"[{_fmt(a.real)}, {_fmt(a.imag)}]" for a in s.amplitudes
        )
        tail = "," if idx < e.size - 1 else ""
        lines.append(f'    {{"p": {_fmt(p)}, "amplitudes": [{amps}]}}{tail}')
    lines += ["  ]", "}", ""]
    return "\n".join(lines).encode("utf-8")


def parse_ensemble(text: bytes | str) -> Ensemble:
    """Parse the ensemble file format, with field-level diagnostics on failure."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not valid UTF-8: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc

    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    for field in ("dim", "members"):
        if field not in doc:
            raise ParseError(f"missing required field {field!r}")
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise ParseError(f"field 'dim' must be a positive integer, got {dim!r}")
    label = doc.get("label") or None
    if label is not None and not isinstance(label, str):
        raise ParseError("field 'label' must be a string")
    raw_members = doc["members"]
    if not isinstance(raw_members, list) or not raw_members:
        raise ParseError("field 'members' must be a non-empty list")

    members = []
    for idx, entry in enumerate(raw_members):
        where = f"members[{idx}]"
        if not isinstance(entry, dict) or "p" not in entry or "amplitudes" not in entry:
            raise ParseError(f"{where} must be an object with fields 'p' and 'amplitudes'")
        p = entry["p"]
        if not isinstance(p, (int, float)) or isinstance(p, bool):
            raise ParseError(f"{where}.p must be a number, got {p!r}")
        amps = entry["amplitudes"]
        if not isinstance(amps, list) or len(amps) != dim:
            raise ParseError(f"{where}.amplitudes must be a list of length {dim}")
        vec = np.empty(dim, dtype=complex)
        for j, pair in enumerate(amps):
            if (
                not isinstance(pair, list)
                or len(pair) != 2
                or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in pair)
            ):
                raise ParseError(f"{where}.amplitudes[{j}] must be a [re, im] pair of numbers")
            vec[j] = complex(pair[0], pair[1])
        nrm = float(np.linalg.norm(vec))
        if abs(nrm - 1.0) > _NORM_TOL:
            raise InvariantViolation(f"{where}: state norm = {nrm:.12g}, expected 1")
        if p <= 0:
            raise InvariantViolation(f"{where}: probability {p} is not strictly positive")
        members.append((float(p), PureState(vec)))

    total = math.fsum(p for p, _ in members)
    if abs(total - 1.0) > _NORM_TOL:
        raise InvariantViolation(f"probabilities sum to {total:.12g}, expected 1")
    return Ensemble(members, label=label)
