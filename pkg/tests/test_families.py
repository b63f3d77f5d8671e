import math
import sys
from pathlib import Path

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

import numpy as np
import pytest
from numpy.testing import assert_allclose

from core import families
from core.families import (
    BrunParams,
    NamedState,
    SeparableDecomposition,
    brun_state,
    named_density,
    named_state,
    random_decomposition,
    sample_brun,
    sigma_extension,
    symmetric_extension,
    separable_extension,
)
from core.qstate import eig_hermitian, is_valid_density, partial_trace


def test_brun_state_with_p_one_is_product():
    psi = brun_state(BrunParams(1.0, 1.0, 1.0))

    expected = np.zeros(8)
    expected[0] = 1.0
    assert_allclose(psi.amplitudes, expected, atol=1e-15)
    assert psi.labels == ("A", "B", "C")


def test_brun_state_reduces_to_ghz_type_state():
    psi = brun_state(BrunParams.with_gamma(0.5, 1.0, 1.0))

    assert psi.amplitudes[0] == pytest.approx(1 / math.sqrt(2))
    assert psi.amplitudes[7] == pytest.approx(-1 / math.sqrt(2))
    assert np.count_nonzero(np.abs(psi.amplitudes) > 1e-15) == 2


def test_brun_state_is_normalised_over_sampled_parameters():
    for seed in range(10_000):
        assert brun_state(sample_brun(seed)).norm_error < 1e-12


def test_brun_marginal_on_a_has_weights_p_and_one_minus_p():
    for seed in range(200):
        params = sample_brun(seed)
        reduced = partial_trace(brun_state(params).density(), "A")

        eigenvalues, _ = eig_hermitian(reduced)
        assert_allclose(sorted(eigenvalues), sorted([params.p, 1 - params.p]), atol=1e-12)


def test_sample_brun_respects_constraints_and_is_seeded():
    draws = [sample_brun(seed) for seed in range(10_000)]

    for params in draws[:500]:
        assert 0 <= params.p <= 1
        assert params.f**2 + abs(params.g) ** 2 <= 1 + 1e-12
    assert np.mean([params.p for params in draws]) == pytest.approx(0.5, abs=0.02)
    assert sample_brun(17) == sample_brun(17)


def test_brun_params_validation():
    with pytest.raises(families.InvalidParamsError):
        BrunParams(1.5, 0.5, 0.5)
    with pytest.raises(families.InvalidParamsError):
        BrunParams(0.5, 0.5, 0.9, 0.9)
    with pytest.raises(families.InvalidParamsError):
        BrunParams.with_gamma(0.5, 0.5, 1.2)


def test_brun_params_gamma_and_serialisation():
    params = BrunParams(0.25, 0.5, 0.6, 0.0 + 0.0j)

    assert params.gamma == pytest.approx(0.8)
    assert params.as_dict() == {"p": 0.25, "a": 0.5, "f": 0.6, "g_re": 0.0, "g_im": 0.0, "gamma": params.gamma}


def test_decomposition_validation():
    with pytest.raises(families.EmptyDecompositionError):
        SeparableDecomposition(())
    with pytest.raises(families.InvalidDecompositionError):
        SeparableDecomposition.from_vectors([(0.5, [1, 0], [1, 0]), (0.4, [0, 1], [0, 1])])
    with pytest.raises(families.InvalidDecompositionError):
        SeparableDecomposition.from_vectors([(1.0, [1, 0], [1, 0]), (0.0, [0, 1], [0, 1])])
    with pytest.raises(families.InvalidDecompositionError):
        SeparableDecomposition.from_vectors([(0.5, [1, 0], [1, 0]), (0.5, [1, 0, 0], [0, 1])])


def test_single_term_extension_is_product_state():
    dec = SeparableDecomposition.from_vectors([(1.0, [1, 0], [0, 1])])

    rho = separable_extension(dec)

    assert rho.dims == (2, 1, 2)
    assert rho.purity() == pytest.approx(1.0)


def test_extension_of_separable_discordant_state():
    dec = named_state("separable_discordant")
    rho = separable_extension(dec)

    eigenvalues, _ = eig_hermitian(rho)
    assert rho.dims == (2, 2, 2)
    assert int(np.sum(eigenvalues > 1e-12)) == 2
    assert_allclose(partial_trace(rho, ("A", "C")).matrix, dec.density().matrix, atol=1e-12)


def test_sigma_extension_matches_ab_marginal_and_fixes_c():
    rng = np.random.default_rng(3)
    for _ in range(1000):
        dec = random_decomposition(int(rng.integers(1, 5)), 2, int(rng.integers(2, 4)), rng)
        rho = separable_extension(dec)
        sigma = sigma_extension(dec)

        residual = np.max(np.abs(partial_trace(rho, ("A", "B")).matrix - partial_trace(sigma, ("A", "B")).matrix))
        assert residual <= 1e-14
        fixed = np.zeros((dec.dim_c, dec.dim_c))
        fixed[0, 0] = 1.0
        assert_allclose(partial_trace(sigma, "C").matrix, fixed, atol=1e-14)


def test_symmetric_extension_marginals():
    dec = random_decomposition(3, 2, 2, 8)

    assert_allclose(symmetric_extension(dec, 1).matrix, dec.density().matrix, atol=1e-15)
    extension = symmetric_extension(dec, 3)
    assert extension.labels == ("A", "B1", "B2", "B3")
    for label in ("B1", "B2", "B3"):
        assert_allclose(partial_trace(extension, ("A", label)).matrix, dec.density().matrix, atol=1e-12)
    assert is_valid_density(extension)


def test_symmetric_extension_memory_guard():
    dec = named_state("separable_discordant")

    with pytest.raises(families.TooLargeError):
        symmetric_extension(dec, 12)


def test_random_decomposition_weights_and_seed():
    dec = random_decomposition(4, 2, 3, 21)

    assert dec.k == 4
    assert sum(term.weight for term in dec.terms) == pytest.approx(1.0, abs=1e-12)
    assert (dec.dim_a, dec.dim_c) == (2, 3)
    again = random_decomposition(4, 2, 3, 21)
    assert_allclose(dec.density().matrix, again.density().matrix)


def test_named_states():
    assert_allclose(partial_trace(named_density("GHZ"), "A").matrix, np.eye(2) / 2, atol=1e-15)
    assert_allclose(partial_trace(named_density("W"), "A").matrix, np.diag([2 / 3, 1 / 3]), atol=1e-15)
    assert named_state("bell").dims == (2, 2)
    assert named_state(NamedState.SEPARABLE_DISCORDANT).k == 2
    assert named_density("separable_discordant").labels == ("A", "C")
    with pytest.raises(families.UnknownNameError):
        named_state("cluster")
