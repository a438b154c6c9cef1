"""Ensembles, Gram matrices, ensemble algebra, canonical families, file I/O."""

import math

import numpy as np
import pytest

from gramq import (
    DimensionMismatch,
    Ensemble,
    InvariantViolation,
    LengthMismatch,
    NotUnitary,
    ParameterOutOfRange,
    ParseError,
    PureState,
    UnknownName,
    apply_unitary,
    average_state,
    canonical,
    cross_gram,
    gram,
    hadamard_product,
    parse_ensemble,
    serialize_ensemble,
    tensor,
)
from gramq.sampling import haar_unitary, random_ensemble, random_pure_state

SQ2 = math.sqrt(2.0)
SQ3 = math.sqrt(3.0)

KET0 = np.array([1.0, 0.0])
KET1 = np.array([0.0, 1.0])


def test_gram_orthogonal_pair_is_diagonal():
    e = Ensemble([(0.5, PureState(KET0)), (0.5, PureState(KET1))])
    assert np.abs(gram(e).matrix - np.diag([0.5, 0.5])).max() < 1e-15


def test_gram_b92_displayed_matrix():
    expected = 0.5 * np.array([[1, 1 / SQ2], [1 / SQ2, 1]])
    assert np.abs(gram(canonical("b92")).matrix - expected).max() < 1e-14


def test_gram_diag_displayed_matrix():
    expected = (1 / 3) * np.array(
        [[1, 0, 1 / SQ2], [0, 1, 1 / SQ2], [1 / SQ2, 1 / SQ2, 1]]
    )
    assert np.abs(gram(canonical("diag")).matrix - expected).max() < 1e-14


def test_gram_trine_displayed_matrix():
    expected = (1 / 6) * np.array([[2, 1, 1], [1, 2, -1], [1, -1, 2]])
    assert np.abs(gram(canonical("trine")).matrix - expected).max() < 1e-14


def test_gram_bb84_displayed_matrix():
    expected = (1 / (4 * SQ2)) * np.array(
        [[SQ2, 0, 1, 1], [0, SQ2, 1, -1], [1, 1, SQ2, 0], [1, -1, 0, SQ2]]
    )
    assert np.abs(gram(canonical("bb84")).matrix - expected).max() < 1e-14


def test_gram_tetrad_displayed_matrix_and_spectrum():
    i = 1j
    expected = (1 / (4 * SQ3)) * np.array(
        [
            [SQ3, 1, 1, 1],
            [1, SQ3, i, -i],
            [1, -i, SQ3, i],
            [1, i, -i, SQ3],
        ]
    )
    g = gram(canonical("tetrad"))
    assert np.abs(g.matrix - expected).max() < 1e-14
    assert np.allclose(g.spectrum.eigenvalues, [0.5, 0.5, 0.0, 0.0], atol=1e-14)


def test_tetrad_is_a_sic_set():
    states = canonical("tetrad").states
    for j in range(4):
        for k in range(4):
            if j != k:
                assert abs(states[j].overlap(states[k])) ** 2 == pytest.approx(1 / 3, abs=1e-14)


def test_gram_six_displayed_matrix_and_spectrum():
    i = 1j
    expected = (1 / 12) * np.array(
        [
            [2, 0, 1 + i, 1 - i, SQ2, SQ2],
            [0, 2, 1 - i, 1 + i, SQ2, -SQ2],
            [1 - i, 1 + i, 2, 0, SQ2, -SQ2 * i],
            [1 + i, 1 - i, 0, 2, SQ2, SQ2 * i],
            [SQ2, SQ2, SQ2, SQ2, 2, 0],
            [SQ2, -SQ2, SQ2 * i, -SQ2 * i, 0, 2],
        ]
    )
    g = gram(canonical("six"))
    assert np.abs(g.matrix - expected).max() < 1e-14
    assert np.allclose(g.spectrum.eigenvalues, [0.5, 0.5, 0, 0, 0, 0], atol=1e-14)


def test_gram_invariants_on_random_ensembles():
    rng = np.random.default_rng(0)
    for _ in range(500):
        e = random_ensemble(rng)  # n <= 8, d <= 6
        g = gram(e)  # constructor enforces Hermitian, PSD, trace 1
        assert np.abs(np.diag(g.matrix) - e.probabilities).max() < 1e-10
        assert abs(np.trace(g.matrix).real - 1.0) < 1e-10


def test_gram_spectral_bridge_to_average_state():
    rng = np.random.default_rng(1)
    for _ in range(50):
        e = random_ensemble(rng, max_n=6, max_dim=5)
        gw = gram(e).spectrum.eigenvalues
        aw = np.clip(np.linalg.eigvalsh(average_state(e)), 0, None)[::-1]
        k = min(len(gw), len(aw))
        assert np.abs(gw[:k] - aw[:k]).max() < 1e-9


def test_cross_gram_of_ensemble_with_itself():
    e = canonical("trine")
    assert np.abs(cross_gram(e, e) - gram(e).matrix).max() < 1e-14


def test_cross_gram_orthogonal_singletons():
    e = Ensemble([(1.0, PureState(KET0))])
    f = Ensemble([(1.0, PureState(KET1))])
    assert np.abs(cross_gram(e, f)).max() < 1e-15


def test_cross_gram_unitary_invariance():
    rng = np.random.default_rng(2)
    for _ in range(25):
        dim = int(rng.integers(2, 5))
        e = random_ensemble(rng, dim=dim, max_n=5)
        f = random_ensemble(rng, dim=dim, max_n=5)
        u = haar_unitary(dim, rng)
        before = cross_gram(e, f)
        after = cross_gram(apply_unitary(e, u), apply_unitary(f, u))
        assert np.abs(before - after).max() < 1e-10


def test_cross_gram_dimension_mismatch():
    e = Ensemble([(1.0, PureState(KET0))])
    f = Ensemble([(1.0, PureState([1.0, 0.0, 0.0]))])
    with pytest.raises(DimensionMismatch):
        cross_gram(e, f)


def test_apply_unitary_identity_and_gram_invariance():
    e = canonical("b92")
    same = apply_unitary(e, np.eye(2))
    assert same == e.relabel(same.label)
    hadamard = np.array([[1, 1], [1, -1]]) / SQ2
    assert np.abs(gram(apply_unitary(e, hadamard)).matrix - gram(e).matrix).max() < 1e-10
    rng = np.random.default_rng(3)
    u = haar_unitary(2, rng)
    trine = canonical("trine")
    assert np.abs(gram(apply_unitary(trine, u)).matrix - gram(trine).matrix).max() < 1e-10


def test_apply_unitary_rejects_bad_input():
    e = canonical("b92")
    with pytest.raises(NotUnitary):
        apply_unitary(e, np.array([[1.0, 0.0], [0.0, 2.0]]))
    with pytest.raises(DimensionMismatch):
        apply_unitary(e, np.eye(3))


def test_tensor_with_singleton_keeps_gram():
    e = canonical("trine")
    f = Ensemble([(1.0, PureState(KET0))])
    assert np.abs(gram(tensor(e, f)).matrix - gram(e).matrix).max() < 1e-14


def test_tensor_gram_is_kronecker_product():
    e = canonical("b92")
    g = gram(e).matrix
    assert np.abs(gram(tensor(e, e)).matrix - np.kron(g, g)).max() < 1e-10


def test_tensor_trine_diag_invariants():
    prod = gram(tensor(canonical("trine"), canonical("diag")))
    assert prod.dim == 9
    assert abs(np.trace(prod.matrix).real - 1.0) < 1e-10
    assert prod.spectrum.eigenvalues.min() >= 0.0


def test_hadamard_product_uniform_square():
    # uniform probabilities: weight sum p_i^2 = 1/n, so the product Gram is
    # n times the entrywise square of the factor Gram
    e = canonical("trine")
    prod = hadamard_product(e, e)
    assert prod.weight == pytest.approx(1 / 3, abs=1e-12)
    expected = 3 * gram(e).matrix * gram(e).matrix
    assert np.abs(gram(prod.ensemble).matrix - expected).max() < 1e-10


def test_hadamard_product_singletons():
    e = Ensemble([(1.0, PureState(KET0))])
    prod = hadamard_product(e, e)
    assert prod.weight == pytest.approx(1.0)
    assert np.abs(gram(prod.ensemble).matrix - np.array([[1.0]])).max() < 1e-15


def test_hadamard_product_entrywise_identity_random():
    rng = np.random.default_rng(4)
    for _ in range(25):
        n, dim = int(rng.integers(1, 5)), int(rng.integers(2, 4))
        e = random_ensemble(rng, n=n, dim=dim)
        f = random_ensemble(rng, n=n, dim=dim)
        prod = hadamard_product(e, f)
        lhs = prod.weight * gram(prod.ensemble).matrix
        assert np.abs(lhs - gram(e).matrix * gram(f).matrix).max() < 1e-10


def test_hadamard_product_length_mismatch():
    with pytest.raises(LengthMismatch):
        hadamard_product(canonical("b92"), canonical("trine"))


def test_canonical_names_and_errors():
    with pytest.raises(UnknownName):
        canonical("ghz")
    with pytest.raises(ParameterOutOfRange):
        canonical("b92", x=1.5)
    with pytest.raises(ParameterOutOfRange):
        canonical("b92", x=-0.1)
    with pytest.raises(ParameterOutOfRange):
        canonical("trine", x=0.5)


def test_b92_overlap_parameter():
    e = canonical("b92", x=0.0)
    assert np.abs(gram(e).matrix - np.diag([0.5, 0.5])).max() < 1e-14
    e = canonical("b92", x=0.3)
    assert gram(e).matrix[0, 1].real == pytest.approx(0.15, abs=1e-14)


# --- state and ensemble invariants ---

def test_pure_state_requires_unit_norm():
    with pytest.raises(InvariantViolation):
        PureState([1.0, 1.0])


def test_ensemble_invariants():
    with pytest.raises(InvariantViolation):
        Ensemble([(0.5, PureState(KET0)), (0.4, PureState(KET1))])
    with pytest.raises(InvariantViolation):
        Ensemble([(1.2, PureState(KET0)), (-0.2, PureState(KET1))])
    with pytest.raises(DimensionMismatch):
        Ensemble([(0.5, PureState(KET0)), (0.5, PureState([0.0, 0.0, 1.0]))])


# --- file format ---

def test_serialize_parse_round_trip_canonical():
    e = canonical("trine")
    again = parse_ensemble(serialize_ensemble(e))
    assert again == e
    assert np.abs(gram(again).matrix - gram(e).matrix).max() == 0.0


def test_serialize_parse_round_trip_random_complex():
    rng = np.random.default_rng(5)
    e = Ensemble(
        [(p, random_pure_state(3, rng)) for p in (0.125, 0.5, 0.375)],
        label="random triple",
    )
    assert parse_ensemble(serialize_ensemble(e)) == e


def test_parse_rejects_bad_probability_sum():
    e = canonical("b92")
    text = serialize_ensemble(e).decode().replace('"p": 0.5', '"p": 0.45', 1)
    with pytest.raises(InvariantViolation):
        parse_ensemble(text)


def test_parse_rejects_unnormalized_state_naming_the_member():
    doc = """
    {"dim": 2, "label": "bad", "members": [
      {"p": 0.5, "amplitudes": [[1.0, 0.0], [0.0, 0.0]]},
      {"p": 0.5, "amplitudes": [[1.0, 0.0], [1.0, 0.0]]}
    ]}
    """
    with pytest.raises(InvariantViolation, match=r"members\[1\]"):
        parse_ensemble(doc)


def test_parse_error_diagnostics():
    with pytest.raises(ParseError, match="line"):
        parse_ensemble(b'{"dim": 2,\n "members": [}')
    with pytest.raises(ParseError, match="dim"):
        parse_ensemble(b'{"members": []}')
    with pytest.raises(ParseError, match=r"members\[0\]\.amplitudes"):
        parse_ensemble(b'{"dim": 2, "members": [{"p": 1.0, "amplitudes": [[1.0, 0.0]]}]}')
    with pytest.raises(ParseError):
        parse_ensemble(b"not json at all")
