import math
import sys
from pathlib import Path

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

import numpy as np
import pytest
from numpy.testing import assert_allclose

from core import qstate
from core.qstate import (
    DensityMatrix,
    KrausChannel,
    QubitBasis,
    amplitude_damping_channel,
    apply_local_channel,
    dephase,
    dephasing_channel,
    eig_hermitian,
    hs_norm_sq,
    identity_channel,
    is_valid_density,
    kron,
    partial_trace,
    purify,
    random_channel,
    random_density,
    random_haar_pure,
    random_unitary,
    replacement_channel,
    reorder,
    validate_density,
)

KET0 = np.array([1.0, 0.0], dtype=complex)
KET1 = np.array([0.0, 1.0], dtype=complex)


def _bell() -> DensityMatrix:
    vector = np.zeros(4, dtype=complex)
    vector[0] = vector[3] = 1 / math.sqrt(2)
    return DensityMatrix(np.outer(vector, vector.conj()), (2, 2), ("A", "B"))


def _single(matrix, label):
    return DensityMatrix(np.asarray(matrix, dtype=complex), (len(matrix),), (label,))


def test_validate_density_accepts_maximally_mixed_qubit():
    rho = validate_density(np.eye(2) / 2, [2], ["A"])

    eigenvalues, _ = eig_hermitian(rho)
    assert_allclose(eigenvalues, [0.5, 0.5], atol=1e-15)
    assert rho.labels == ("A",)


def test_validate_density_reports_trace_error_magnitude():
    with pytest.raises(qstate.NotUnitTraceError) as excinfo:
        validate_density(np.diag([0.5, 0.4]), [2])

    assert excinfo.value.magnitude == pytest.approx(0.1)


def test_validate_density_rejects_non_hermitian_matrix():
    matrix = np.array([[0.5, 0.3], [0.1, 0.5]], dtype=complex)

    with pytest.raises(qstate.NotHermitianError):
        validate_density(matrix, [2])


def test_validate_density_rejects_negative_eigenvalue():
    with pytest.raises(qstate.NotPositiveError) as excinfo:
        validate_density(np.diag([1.1, -0.1]), [2])

    assert excinfo.value.magnitude == pytest.approx(0.1)


def test_validate_density_clips_rounding_noise():
    rho = validate_density(np.diag([1.0 + 5e-10, -5e-10]), [2])

    eigenvalues, _ = eig_hermitian(rho)
    assert eigenvalues[-1] >= 0.0
    assert rho.trace() == pytest.approx(1.0, abs=1e-15)


def test_validate_density_keeps_entries_within_tolerance():
    matrix = np.array([[0.5 + 6e-18j, 0.25 + 1e-17j], [0.25, 0.5]], dtype=complex)

    rho = validate_density(matrix, [2])

    assert np.array_equal(rho.matrix, matrix)


def test_validate_density_rejects_dimension_mismatch():
    with pytest.raises(qstate.DimensionMismatchError):
        validate_density(np.eye(4) / 4, [2, 3])


def test_bell_projector_is_a_valid_rank_one_state():
    rho = _bell()

    eigenvalues, _ = eig_hermitian(rho)
    assert is_valid_density(rho)
    assert_allclose(eigenvalues, [1.0, 0.0, 0.0, 0.0], atol=1e-12)
    assert rho.purity() == pytest.approx(1.0)


def test_duplicate_labels_are_rejected():
    with pytest.raises(qstate.DuplicateLabelError):
        DensityMatrix(np.eye(4) / 4, (2, 2), ("A", "A"))
    with pytest.raises(qstate.DuplicateLabelError):
        kron(_single(np.eye(2) / 2, "A"), _single(np.eye(2) / 2, "A"))


def test_kron_concatenates_dims_and_labels():
    product = kron(_single(np.eye(2) / 2, "A"), _single(np.eye(3) / 3, "B"))

    assert product.dims == (2, 3)
    assert product.labels == ("A", "B")
    assert_allclose(product.matrix, np.eye(6) / 6)


def test_partial_trace_of_bell_state_is_maximally_mixed():
    reduced = partial_trace(_bell(), "A")

    assert reduced.labels == ("A",)
    assert_allclose(reduced.matrix, np.eye(2) / 2, atol=1e-15)


def test_partial_trace_recovers_product_factors():
    for seed in range(50):
        left = random_density([2], 2, seed, ["A"])
        right = random_density([3], 3, seed + 1000, ["B"])
        product = kron(left, right)

        assert_allclose(partial_trace(product, "A").matrix, left.matrix, atol=1e-12)
        assert_allclose(partial_trace(product, "B").matrix, right.matrix, atol=1e-12)


def test_partial_trace_keeps_original_order_and_rejects_unknown_labels():
    rho = random_density([2, 3, 2], 2, 5)

    reduced = partial_trace(rho, ("C", "A"))

    assert reduced.labels == ("A", "C")
    assert reduced.dims == (2, 2)
    with pytest.raises(qstate.UnknownLabelError):
        partial_trace(rho, ("D",))


def test_reorder_moves_subsystems_consistently():
    rho = kron(_single(np.diag([1.0, 0.0]), "A"), _single(np.eye(3) / 3, "B"))

    swapped = reorder(rho, ("B", "A"))

    assert swapped.dims == (3, 2)
    assert_allclose(swapped.matrix, np.kron(np.eye(3) / 3, np.diag([1.0, 0.0])))


def test_eig_hermitian_returns_descending_eigenvalues():
    matrix = np.diag([0.3, 0.7]).astype(complex)

    eigenvalues, eigenvectors = eig_hermitian(matrix)

    assert_allclose(eigenvalues, [0.7, 0.3])
    assert_allclose((eigenvectors * eigenvalues) @ eigenvectors.conj().T, matrix, atol=1e-15)
    with pytest.raises(qstate.NotHermitianError):
        eig_hermitian(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_hs_norm_sq_examples():
    zero = np.outer(KET0, KET0)
    one = np.outer(KET1, KET1)

    assert hs_norm_sq(zero, zero) == 0.0
    assert hs_norm_sq(zero, one) == pytest.approx(2.0)
    with pytest.raises(qstate.DimensionMismatchError):
        hs_norm_sq(np.eye(2), np.eye(3))


def test_dephasing_distance_identity():
    # ||rho - Pi(rho)||^2 = Tr rho^2 - Tr Pi(rho)^2
    rng = np.random.default_rng(7)
    for _ in range(100):
        rho = random_density([2, 2], 4, rng)
        basis = QubitBasis(float(rng.uniform(0, math.pi)), float(rng.uniform(0, 2 * math.pi)))
        dephased = dephase(rho, basis, "A")

        assert hs_norm_sq(rho, dephased) == pytest.approx(rho.purity() - dephased.purity(), abs=1e-10)


def test_dephase_ghz_in_computational_basis():
    vector = np.zeros(8, dtype=complex)
    vector[0] = vector[7] = 1 / math.sqrt(2)
    ghz = DensityMatrix(np.outer(vector, vector.conj()), (2, 2, 2), ("A", "B", "C"))

    dephased = dephase(ghz, QubitBasis.computational(), "A")

    expected = np.zeros((8, 8))
    expected[0, 0] = expected[7, 7] = 0.5
    assert_allclose(dephased.matrix, expected, atol=1e-15)


def test_dephase_is_idempotent_and_trace_preserving():
    rho = random_density([2, 3], 3, 11)
    basis = QubitBasis(1.1, 0.4)

    once = dephase(rho, basis, "A")
    twice = dephase(once, basis, "A")

    assert_allclose(twice.matrix, once.matrix, atol=1e-14)
    assert once.trace() == pytest.approx(1.0)
    with pytest.raises(qstate.TargetNotQubitError):
        dephase(rho, basis, "B")


def test_qubit_basis_projectors_resolve_identity():
    for theta, phi in [(0.0, 0.0), (0.3, 1.2), (math.pi / 2, 3.0), (math.pi, 5.5)]:
        first, second = QubitBasis(theta, phi).projectors()

        assert_allclose(first + second, np.eye(2), atol=1e-12)
        assert_allclose(first @ second, np.zeros((2, 2)), atol=1e-12)


def test_qubit_basis_folds_angles():
    basis = QubitBasis.from_angles(-0.5, 7.0)

    assert 0.0 <= basis.theta <= math.pi
    assert 0.0 <= basis.phi < 2 * math.pi
    assert_allclose(basis.bloch_vector(), QubitBasis(-0.5, 7.0).bloch_vector(), atol=1e-12)
    assert_allclose(QubitBasis.from_bloch([0.0, 0.0, 2.0]).bloch_vector(), [0.0, 0.0, 1.0], atol=1e-12)


def test_purify_maximally_mixed_qubit():
    psi = purify(_single(np.eye(2) / 2, "A"))

    assert psi.dims == (2, 2)
    assert psi.labels == ("A", "R")
    assert_allclose(partial_trace(psi.density(), "A").matrix, np.eye(2) / 2, atol=1e-15)


def test_purify_diagonal_state_amplitudes():
    psi = purify(_single(np.diag([0.7, 0.3]), "A"))

    assert_allclose(np.abs(psi.amplitudes), [math.sqrt(0.7), 0.0, 0.0, math.sqrt(0.3)], atol=1e-12)


def test_purify_reproduces_random_states_and_avoids_label_clash():
    for seed in range(20):
        rho = random_density([2, 2], 3, seed, ["A", "R"])
        psi = purify(rho)

        assert psi.labels == ("A", "R", "R1")
        assert_allclose(partial_trace(psi.density(), ("A", "R")).matrix, rho.matrix, atol=1e-9)


def test_identity_channel_leaves_state_unchanged():
    rho = random_density([2, 2], 4, 3)

    result = apply_local_channel(rho, identity_channel(2), "B")

    assert_allclose(result.matrix, rho.matrix, atol=1e-15)


def test_replacement_channel_on_bell_state():
    result = apply_local_channel(_bell(), replacement_channel(np.outer(KET0, KET0), 2), "B")

    assert_allclose(result.matrix, np.kron(np.eye(2) / 2, np.outer(KET0, KET0)), atol=1e-15)


def test_dephasing_channel_on_bell_state():
    result = apply_local_channel(_bell(), dephasing_channel(2), "B")

    expected = np.zeros((4, 4))
    expected[0, 0] = expected[3, 3] = 0.5
    assert_allclose(result.matrix, expected, atol=1e-15)


def test_channel_can_change_output_dimension():
    rho = random_density([2, 2], 4, 8)
    channel = random_channel(2, 3, 2, 9)

    result = apply_local_channel(rho, channel, "B")

    assert result.dims == (2, 3)
    assert is_valid_density(result)


def test_channel_errors():
    rho = random_density([2, 2], 4, 8)

    with pytest.raises(qstate.IncompleteChannelError):
        apply_local_channel(rho, KrausChannel((0.5 * np.eye(2),)), "B")
    with pytest.raises(qstate.DimensionMismatchError):
        apply_local_channel(rho, identity_channel(3), "B")
    with pytest.raises(qstate.UnknownLabelError):
        apply_local_channel(rho, identity_channel(2), "Z")


def test_amplitude_damping_along_x_drives_towards_plus_state():
    channel = amplitude_damping_channel(0.0, axis="x")
    rho = _single(np.outer(KET1, KET1), "A")

    result = apply_local_channel(rho, channel, "A")

    assert channel.completeness_error() < 1e-12
    assert_allclose(result.matrix, 0.5 * np.ones((2, 2)), atol=1e-12)


def test_random_unitary_is_unitary():
    unitary = random_unitary(4, 12)

    assert_allclose(unitary.conj().T @ unitary, np.eye(4), atol=1e-12)


def test_random_haar_pure_is_normalised_and_seeded():
    first = random_haar_pure([2, 3], 99)
    second = random_haar_pure([2, 3], 99)

    assert first.norm_error < 1e-12
    assert_allclose(first.amplitudes, second.amplitudes)


def test_random_density_with_trivial_ancilla_is_pure():
    rho = random_density([2, 2], 1, 4)

    assert rho.purity() == pytest.approx(1.0)
    assert is_valid_density(rho)


def test_haar_reduced_purity_mean():
    # Haar average of Tr rho_A^2 for a 2 x 2 pure state is (2 + 2) / (4 + 1)
    rng = np.random.default_rng(2024)
    values = [
        partial_trace(random_haar_pure([2, 2], rng).density(), "A").purity() for _ in range(10_000)
    ]

    assert np.mean(values) == pytest.approx(0.8, abs=0.01)


def test_operations_preserve_validity():
    rng = np.random.default_rng(31)
    for _ in range(1000):
        other = int(rng.integers(2, 4))
        rho = random_density([2, other], int(rng.integers(1, 5)), rng)
        channel = random_channel(other, other, int(rng.integers(1, 4)), rng)
        basis = QubitBasis(float(rng.uniform(0, math.pi)), float(rng.uniform(0, 2 * math.pi)))

        after_channel = apply_local_channel(rho, channel, "B")
        dephased = dephase(after_channel, basis, "A")
        joined = kron(dephased, _single(np.diag([0.25, 0.75]), "C"))

        for state in (after_channel, dephased, joined, partial_trace(joined, ("A", "C"))):
            assert is_valid_density(state)
