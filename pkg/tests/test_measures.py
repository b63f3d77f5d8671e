import math
import sys
from pathlib import Path

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

import numpy as np
import pytest

from core import measures
from core.families import named_density, named_state
from core.measures import (
    MeasureName,
    classical_correlation,
    concurrence_2q,
    cq_distance_bruteforce,
    discord,
    geometric_discord,
    geometric_discord_closed_form,
    geometric_discord_pure,
    measure,
    mutual_information,
    tangle_pure,
    vn_entropy,
)
from core.qstate import (
    DensityMatrix,
    QubitBasis,
    kron,
    local_unitary,
    make_pure_state,
    partial_trace,
    random_density,
    random_haar_pure,
    random_unitary,
)


def _single(matrix, label):
    return DensityMatrix(np.asarray(matrix, dtype=complex), (len(matrix),), (label,))


def _product_state(seed):
    return kron(random_density([2], 2, seed, ["A"]), random_density([2], 2, seed + 1, ["B"]))


def _classical_quantum_state(rng, rest_dim=2):
    """``sum_i q_i Pi_i (x) tau_i`` in a random basis of A."""

    basis = QubitBasis(float(rng.uniform(0, math.pi)), float(rng.uniform(0, 2 * math.pi)))
    weight = float(rng.uniform(0.05, 0.95))
    first, second = basis.projectors()
    tau0 = random_density([rest_dim], 2, rng).matrix
    tau1 = random_density([rest_dim], 2, rng).matrix
    matrix = weight * np.kron(first, tau0) + (1 - weight) * np.kron(second, tau1)
    return DensityMatrix(matrix, (2, rest_dim), ("A", "B"))


def test_vn_entropy_examples():
    assert vn_entropy(_single(np.diag([1.0, 0.0]), "A")) == 0.0
    assert vn_entropy(_single(np.eye(2) / 2, "A")) == pytest.approx(1.0)
    assert vn_entropy(_single(np.eye(4) / 4, "A")) == pytest.approx(2.0)


def test_mutual_information_examples():
    classical = DensityMatrix(np.diag([0.5, 0.0, 0.0, 0.5]), (2, 2), ("A", "B"))

    assert mutual_information(_product_state(3), ("A", "B")) == pytest.approx(0.0, abs=1e-9)
    assert mutual_information(named_density("Bell"), ("A", "B")) == pytest.approx(2.0)
    assert mutual_information(classical, ("A", "B")) == pytest.approx(1.0)
    with pytest.raises(measures.BadSplitError):
        mutual_information(classical, ("A", "A"))


def test_measure_name_parsing():
    assert MeasureName.parse("GDiscord") is MeasureName.GDISCORD
    assert MeasureName.DISCORD.uses_optimizer
    assert not MeasureName.CONCURRENCE2.uses_optimizer
    with pytest.raises(measures.UnsupportedMeasureError):
        MeasureName.parse("negativity")


def test_geometric_discord_of_bell_state():
    result = geometric_discord(named_density("Bell"), "A")

    assert result.value == pytest.approx(0.5, abs=1e-6)
    assert result.converged
    assert result.optimizer_evals > 64 * 128


def test_geometric_discord_of_separable_discordant_state():
    rho = named_density("separable_discordant")

    assert geometric_discord(rho, "A").value == pytest.approx(1 / 16, abs=1e-6)
    assert geometric_discord_closed_form(rho, "A") == pytest.approx(1 / 16, abs=1e-12)


def test_geometric_discord_vanishes_on_classical_quantum_states():
    rng = np.random.default_rng(5)
    for _ in range(100):
        state = _classical_quantum_state(rng, rest_dim=int(rng.integers(2, 4)))

        assert geometric_discord(state, "A").value <= 1e-6
        assert geometric_discord_closed_form(state, "A") <= 1e-12


def test_geometric_discord_matches_closed_form():
    for seed in range(200):
        rho = random_density([2, 2], 4, seed)

        assert geometric_discord(rho, "A").value == pytest.approx(geometric_discord_closed_form(rho, "A"), abs=1e-6)


def test_geometric_discord_pure_formula():
    weighted = make_pure_state([math.sqrt(0.3), 0, 0, math.sqrt(0.7)], [2, 2], ["A", "B"])

    assert geometric_discord_pure(weighted, "A") == pytest.approx(0.42)
    assert geometric_discord_pure(named_state("Bell"), "A") == pytest.approx(0.5)
    assert geometric_discord_pure(make_pure_state([1, 0, 0, 0], [2, 2]), "A") == 0.0


def test_geometric_discord_pure_formula_agrees_with_optimizer():
    rng = np.random.default_rng(11)
    shapes = ([2, 2], [2, 3], [2, 2, 2])
    for index in range(200):
        psi = random_haar_pure(shapes[index % 3], rng)

        optimized = geometric_discord(psi.density(), "A").value
        assert optimized == pytest.approx(geometric_discord_pure(psi, "A"), abs=1e-5)


def test_geometric_discord_matches_bruteforce_distance():
    for seed in range(50):
        rho = random_density([2, 2], 4, 1000 + seed)

        oracle = cq_distance_bruteforce(rho, "A", seed=seed)
        assert oracle == pytest.approx(geometric_discord(rho, "A").value, abs=1e-3)


def test_discord_of_bell_state():
    result = discord(named_density("Bell"), "A")

    assert result.value == pytest.approx(1.0, abs=1e-5)


def test_discord_vanishes_on_product_and_classical_quantum_states():
    rng = np.random.default_rng(17)
    assert discord(_product_state(2), "A").value <= 1e-6
    for _ in range(50):
        assert discord(_classical_quantum_state(rng), "A").value <= 1e-6


def test_discord_of_separable_discordant_state_is_positive():
    value = discord(named_density("separable_discordant"), "A").value

    assert 0.1 < value < 0.145


def test_classical_correlation_in_computational_basis():
    classical = DensityMatrix(np.diag([0.5, 0.0, 0.0, 0.5]), (2, 2), ("A", "B"))

    assert classical_correlation(classical, "A", QubitBasis.computational()) == pytest.approx(1.0)
    assert classical_correlation(classical, "A", QubitBasis(math.pi / 2, 0.0)) == pytest.approx(0.0, abs=1e-12)


def test_measures_are_nonnegative_on_random_states():
    for seed in range(500):
        rho = random_density([2, 2], 1 + seed % 4, seed)

        assert geometric_discord(rho, "A").value >= 0.0
        assert discord(rho, "A").value >= 0.0


def test_measures_are_invariant_under_local_unitaries():
    for seed in range(500):
        rho = random_density([2, 2], 4, seed)
        rotated = local_unitary(local_unitary(rho, random_unitary(2, seed + 1), "A"), random_unitary(2, seed + 2), "B")

        assert geometric_discord(rotated, "A").value == pytest.approx(geometric_discord(rho, "A").value, abs=1e-5)
        assert discord(rotated, "A").value == pytest.approx(discord(rho, "A").value, abs=1e-5)


def test_measures_ignore_uncorrelated_ancilla():
    ancilla = _single(np.diag([1.0, 0.0]), "C")
    for seed in range(500):
        rho = random_density([2, 2], 4, seed)
        extended = kron(rho, ancilla)

        assert geometric_discord(extended, "A").value == pytest.approx(geometric_discord(rho, "A").value, abs=1e-6)
        assert discord(extended, "A").value == pytest.approx(discord(rho, "A").value, abs=1e-6)


def test_rest_argument_traces_out_other_parties():
    rho = named_density("GHZ")

    ab = measure(rho, MeasureName.GDISCORD, "A", rest=("B",))
    assert ab.value == pytest.approx(0.0, abs=1e-6)
    with pytest.raises(measures.BadSplitError):
        measure(rho, MeasureName.GDISCORD, "A", rest=("A",))


def test_measured_party_must_be_a_qubit():
    rho = random_density([3, 2], 2, 1)

    with pytest.raises(measures.MeasuredNotQubitError):
        geometric_discord(rho, "A")
    with pytest.raises(measures.MeasuredNotQubitError):
        discord(rho, "A")


def test_concurrence_examples():
    w_ab = named_density("W")

    assert concurrence_2q(_product_state(6)) == pytest.approx(0.0, abs=1e-7)
    assert concurrence_2q(named_density("Bell")) == pytest.approx(1.0)
    assert concurrence_2q(partial_trace(w_ab, ("A", "B"))) == pytest.approx(2 / 3, abs=1e-9)
    with pytest.raises(measures.WrongDimsError):
        concurrence_2q(random_density([2, 3], 2, 0))


def test_tangle_examples():
    assert tangle_pure(named_state("GHZ"), "A") == pytest.approx(1.0)
    assert tangle_pure(named_state("W"), "A") == pytest.approx(8 / 9)
    assert tangle_pure(make_pure_state(np.eye(8)[0], [2, 2, 2]), "A") == 0.0
    with pytest.raises(measures.WrongDimsError):
        tangle_pure(named_state("Bell"), "A")


def test_concurrence2_dispatch():
    assert measure(named_density("Bell"), "concurrence2", "A").value == pytest.approx(1.0)
    assert measure(named_density("W"), "concurrence2", "A").value == pytest.approx(8 / 9)
    with pytest.raises(measures.UnsupportedMeasureError):
        measure(random_density([2, 2, 2], 2, 4), "concurrence2", "A")
