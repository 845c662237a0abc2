"""Catalog of named diagrams and traces.

The shipped JSON files under ``data/`` are generated from the Morse words
below (``python -m linkhom.fixtures --write``).  ``fixture`` reads the
files, so a corrupted data directory is detected by the verification suite.
Set ``LINKHOM_FIXTURES`` to load from another directory.
"""

from __future__ import annotations

import argparse
import json
import os
import re
from pathlib import Path

from .diagram import LINK, Diagram, change_crossing, closure, require_valid
from .morse import braid_closure, closed_word, pure_braid, string_word

DATA_DIR = Path(__file__).parent / "data"

# Whitehead string link, self-crossing on strand 1 (positive, lobe linking +1)
PSI_WORD = [("cup", 2, True), ("x", 0, -1), ("x", 1, 1), ("x", 0, -1), ("x", 1, 1), ("x", 1, 1), ("cap", 2)]
# the same string link drawn with its self-crossing on strand 2
PSI_B_WORD = [("cup", 2, True), ("x", 0, -1), ("x", 1, 1), ("x", 1, 1), ("x", 0, -1), ("x", 1, 1), ("cap", 2)]
PSI_SELF_CROSSING = 1
PSI_B_SELF_CROSSING = 4


def _unlink2() -> Diagram:
    return Diagram(LINK, (), (), {1: 1, 2: 2}, None)


def _xi2() -> Diagram:
    return string_word([])


def build_catalog() -> dict[str, Diagram]:
    """Construct every named diagram from scratch."""
    psi = string_word(PSI_WORD)
    psi_b = string_word(PSI_B_WORD)
    return {
        "unknot": braid_closure(2, [1]),
        "unlink2": _unlink2(),
        "hopf_pos": braid_closure(2, [1, 1]),
        "trefoil": braid_closure(2, [1, 1, 1]),
        "fig8": braid_closure(3, [1, -2, 1, -2]),
        "whitehead": braid_closure(3, [1, 1, -2, 1, -2]),
        "xi2": _xi2(),
        "psi": psi,
        "psi_b": psi_b,
        "psi_jin_step": change_crossing(psi, PSI_SELF_CROSSING),
        "kinked_hopf": closed_word(2, [("cup", 1, False), ("x", 0, -1), ("cap", 0), ("x", 0, 1), ("x", 0, 1)]),
    }


def build_traces() -> dict[str, dict]:
    cat = build_catalog()
    jin = {
        "context": "string",
        "initial": cat["xi2"].to_json(),
        "steps": [
            {"type": "isotopy", "diagram": cat["psi_jin_step"].to_json()},
            {"type": "crossing_change", "crossing": PSI_SELF_CROSSING},
            {"type": "isotopy", "diagram": cat["psi_b"].to_json()},
            {"type": "crossing_change", "crossing": PSI_B_SELF_CROSSING},
            {"type": "isotopy", "diagram": cat["xi2"].to_json()},
        ],
    }
    empty = {"context": "string", "initial": cat["xi2"].to_json(), "steps": []}
    return {"jin_psi_trace": jin, "empty_trace": empty}


def _data_dir(directory=None) -> Path:
    if directory is not None:
        return Path(directory)
    env = os.environ.get("LINKHOM_FIXTURES")
    return Path(env) if env else DATA_DIR


FIXTURE_NAMES = (
    "unknot", "unlink2", "hopf_pos", "trefoil", "fig8", "whitehead",
    "xi2", "psi", "psi_b", "psi_jin_step", "kinked_hopf",
)
TRACE_NAMES = ("jin_psi_trace", "empty_trace")
_LAMBDA = re.compile(r"^lambda\((-?\d+)\)$")


def fixture(name: str, directory=None) -> Diagram:
    """Load a named diagram; ``lambda(k)`` is generated on demand."""
    m = _LAMBDA.match(name.replace(" ", ""))
    if m:
        return pure_braid(int(m.group(1)))
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}")
    path = _data_dir(directory) / f"{name}.json"
    D = load_diagram(path)
    return require_valid(D)


def load_diagram(path) -> Diagram:
    with open(path) as fh:
        return Diagram.from_json(json.load(fh))


def trace_data(name: str, directory=None) -> dict:
    if name not in TRACE_NAMES:
        raise KeyError(f"unknown trace {name!r}")
    with open(_data_dir(directory) / f"{name}.json") as fh:
        return json.load(fh)


def manifest(directory=None) -> dict:
    with open(_data_dir(directory) / "manifest.json") as fh:
        return json.load(fh)


def write_data(directory=None) -> list[Path]:
    """Regenerate every data file; returns the paths written."""
    from .skein import beta, conway

    out = _data_dir(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    cat = build_catalog()
    for name, D in cat.items():
        p = out / f"{name}.json"
        p.write_text(json.dumps(D.to_json(), indent=1) + "\n")
        written.append(p)
    for name, tr in build_traces().items():
        p = out / f"{name}.json"
        p.write_text(json.dumps(tr, indent=1) + "\n")
        written.append(p)
    wh = cat["whitehead"]
    info = {
        "conventions": {
            "pd": "counterclockwise from the incoming under-strand",
            "sign": "+1 when the over-strand runs from slot 3 to slot 1",
        },
        "whitehead": {"conway": conway(wh).to_json(), "beta": beta(wh)},
        "psi": {
            "self_crossing": PSI_SELF_CROSSING,
            "closure_conway": conway(closure(cat["psi"])).to_json(),
        },
        "psi_b": {"self_crossing": PSI_B_SELF_CROSSING},
    }
    p = out / "manifest.json"
    p.write_text(json.dumps(info, indent=1) + "\n")
    written.append(p)
    return written


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description="regenerate fixture data files")
    ap.add_argument("--write", action="store_true", help="write the JSON files")
    ap.add_argument("--dir", default=None, help="output directory (default: package data)")
    args = ap.parse_args(argv)
    if args.write:
        for p in write_data(args.dir):
            print(p)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
