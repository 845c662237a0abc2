import json

import pytest

from linkhom.diagram import Diagram, canonical_code
from linkhom.fixtures import (
    DATA_DIR,
    FIXTURE_NAMES,
    TRACE_NAMES,
    build_catalog,
    build_traces,
    fixture,
    manifest,
    trace_data,
    write_data,
)
from linkhom.homotopy import Trace
from linkhom.verify import GROUPS, run_checks


def test_shipped_data_is_up_to_date(tmp_path):
    write_data(tmp_path)
    for path in tmp_path.iterdir():
        assert json.loads(path.read_text()) == json.loads((DATA_DIR / path.name).read_text()), path.name


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_parse_serialize_roundtrip(name):
    D = fixture(name)
    assert Diagram.from_json(json.loads(json.dumps(D.to_json()))) == D


@pytest.mark.parametrize("name", TRACE_NAMES)
def test_trace_roundtrip(name):
    data = trace_data(name)
    assert Trace.from_json(data).to_json() == data
    assert data == build_traces()[name]


def test_unknown_names():
    with pytest.raises(KeyError):
        fixture("nonesuch")
    with pytest.raises(KeyError):
        trace_data("nonesuch")


def test_manifest_records_chirality():
    info = manifest()
    assert info["whitehead"] == {"conway": [[3, -1]], "beta": -1}
    assert info["psi"]["self_crossing"] == 1
    assert canonical_code(fixture("psi")) == canonical_code(build_catalog()["psi"])


def test_verify_groups():
    assert GROUPS == (
        "fixtures", "jin-psi", "wh-links", "wh-refl", "closure-table", "combination", "kernel", "triviality",
    )
    results = run_checks()
    assert all(r.passed for r in results), [str(r) for r in results if not r.passed]
    assert {r.group for r in run_checks("kernel")} == {"kernel"}
