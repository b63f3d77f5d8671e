import json
import math
import sys
from pathlib import Path

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

import numpy as np
import pytest
from numpy.testing import assert_allclose

from core import qstate, state_io
from core.families import SeparableDecomposition, named_state, random_decomposition
from core.qstate import (
    DensityMatrix,
    PureState,
    apply_local_channel,
    random_channel,
    random_density,
    random_haar_pure,
)
from core.state_io import parse_state, parse_state_file, serialize_state, write_state_file

HALF = 1 / math.sqrt(2)


def _write(tmp_path, document, name="state.json"):
    path = tmp_path / name
    path.write_text(json.dumps(document), encoding="utf-8")
    return path


def test_parse_pure_bell_state(tmp_path):
    path = _write(
        tmp_path,
        {"kind": "pure", "dims": [2, 2], "labels": ["A", "B"], "data": [[HALF, 0], [0, 0], [0, 0], [HALF, 0]]},
    )

    state = parse_state_file(path)

    assert isinstance(state, PureState)
    assert state.labels == ("A", "B")
    assert_allclose(np.abs(state.amplitudes), [HALF, 0, 0, HALF])


def test_parse_density_accepts_real_numbers_and_default_labels():
    state = parse_state({"kind": "density", "dims": [2], "data": [[0.5, 0.0], [0.0, 0.5]]})

    assert isinstance(state, DensityMatrix)
    assert state.labels == ("A",)
    assert_allclose(state.matrix, np.eye(2) / 2)


def test_density_with_wrong_trace_is_a_validation_error():
    with pytest.raises(state_io.ValidationError) as excinfo:
        parse_state({"kind": "density", "dims": [2], "data": [[0.5, 0.0], [0.0, 0.4]]})

    assert isinstance(excinfo.value.__cause__, qstate.NotUnitTraceError)


def test_unnormalised_pure_state_is_a_validation_error():
    with pytest.raises(state_io.ValidationError):
        parse_state({"kind": "pure", "dims": [2], "data": [1, 1]})


def test_parse_decomposition_file(tmp_path):
    document = serialize_state(named_state("separable_discordant"))
    path = _write(tmp_path, document)

    state = parse_state_file(path)

    assert isinstance(state, SeparableDecomposition)
    assert state.k == 2
    assert_allclose(state.density().matrix, named_state("separable_discordant").density().matrix)


def test_decomposition_weight_errors_are_validation_errors():
    document = serialize_state(named_state("separable_discordant"))
    document["data"][0]["weight"] = 0.3

    with pytest.raises(state_io.ValidationError):
        parse_state(document)


def test_decomposition_needs_two_parties():
    document = serialize_state(named_state("separable_discordant"))
    document["dims"] = [2, 2, 2]
    document["labels"] = ["A", "B", "C"]

    with pytest.raises(state_io.ParseError):
        parse_state(document)


@pytest.mark.parametrize(
    "document, fragment",
    [
        ({"kind": "mixed", "dims": [2], "data": []}, "kind"),
        ({"kind": "pure", "dims": [2, 0], "data": [1, 0]}, "dims[1]"),
        ({"kind": "pure", "dims": [2], "labels": ["A", "B"], "data": [1, 0]}, "labels"),
        ({"kind": "pure", "dims": [2]}, "data: missing"),
        ({"kind": "density", "dims": [2], "data": [[0.5, 0.0], [0.0, "x"]]}, "data[1][1]"),
        ({"kind": "density", "dims": [2], "data": [[0.5, 0.0], [0.0]]}, "data[1]"),
        ({"kind": "pure", "dims": [2], "data": [[1, 0, 0], [0, 0]]}, "data[0]"),
    ],
)
def test_parse_errors_name_the_offending_field(document, fragment):
    with pytest.raises(state_io.ParseError) as excinfo:
        parse_state(document)

    assert fragment in str(excinfo.value)


def test_malformed_and_missing_files(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")

    with pytest.raises(state_io.ParseError):
        parse_state_file(broken)
    with pytest.raises(state_io.ParseError):
        parse_state_file(tmp_path / "missing.json")


def test_round_trips_are_bit_exact(tmp_path):
    states = [
        random_density([2, 3], 4, 1),
        random_haar_pure([2, 2, 2], 2),
        random_decomposition(3, 2, 3, 3),
    ]
    for index, state in enumerate(states):
        path = write_state_file(tmp_path / f"state{index}.json", state)

        reloaded = parse_state_file(path)

        assert serialize_state(reloaded) == serialize_state(state)


def test_serialize_rejects_unknown_objects():
    with pytest.raises(state_io.StateFileError):
        serialize_state(np.eye(2))


def test_density_entries_survive_a_round_trip_unchanged():
    for seed in range(200):
        rho = random_density([2, 3], 4, seed)

        reloaded = parse_state(serialize_state(rho))

        assert np.array_equal(reloaded.matrix, rho.matrix), seed


def test_channel_outputs_round_trip_bit_exactly():
    for seed in range(50):
        rho = random_density([2, 2], 4, seed)
        channel = random_channel(2, 2, 3, seed + 1000)
        output = apply_local_channel(rho, channel, "B")

        reloaded = parse_state(serialize_state(output))

        assert np.array_equal(reloaded.matrix, output.matrix), seed
