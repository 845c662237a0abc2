"""Decide self C2-equivalence, link homotopy and C2-equivalence.

Two-component links are self C2-equivalent exactly when linking number and
beta agree; two-strand string links when linking number, beta_0 and beta_1
agree.  Link homotopy and C2-equivalence of two-component links are decided
by the linking number alone.  Certificates keep the raw invariant values so
a negative verdict can be checked independently.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import Diagram, DiagramError, linking_number, require_valid
from .skein import DEFAULT_BUDGET, beta, string_betas

KNOT_NOTE = "every knot is C2-equivalent to the unknot; knot pairs are always equivalent"


@dataclass
class Certificate:
    kind: str
    invariants: dict[str, tuple[int, int]]
    verdicts: dict[str, bool]
    distinguishing: str | None = None
    note: str | None = None

    def to_json(self) -> dict:
        out: dict = {name.replace("_", ""): list(v) for name, v in self.invariants.items()}
        out["verdicts"] = {k: ("equivalent" if v else "not_equivalent") for k, v in self.verdicts.items()}
        out["distinguishing"] = self.distinguishing.replace("_", "") if self.distinguishing else None
        if self.note:
            out["note"] = self.note
        return out

    def __str__(self):
        lines = []
        for name, (a, b) in self.invariants.items():
            lines.append(f"{name}: {a} {'=' if a == b else '!='} {b}")
        for rel, ok in self.verdicts.items():
            lines.append(f"{rel}: {'equivalent' if ok else 'NOT equivalent'}")
        if self.distinguishing:
            lines.append(f"distinguished by {self.distinguishing}")
        if self.note:
            lines.append(self.note)
        return "\n".join(lines)


def _first_difference(invariants: dict[str, tuple[int, int]]) -> str | None:
    for name, (a, b) in invariants.items():
        if a != b:
            return name
    return None


def classify_links(L: Diagram, L2: Diagram, budget: int = DEFAULT_BUDGET) -> Certificate:
    for D in (L, L2):
        require_valid(D)
        if D.is_string_link:
            raise DiagramError("classify_links needs closed links")
    counts = (L.n_components(), L2.n_components())
    if counts == (1, 1):
        return Certificate("knot", {}, {"self_c2": True, "link_homotopy": True, "c2": True}, None, KNOT_NOTE)
    if counts != (2, 2):
        raise DiagramError(f"need two-component links, got {counts[0]} and {counts[1]} components")
    inv = {
        "lk": (linking_number(L), linking_number(L2)),
        "beta": (beta(L, budget), beta(L2, budget)),
    }
    same_lk = inv["lk"][0] == inv["lk"][1]
    verdicts = {
        "self_c2": same_lk and inv["beta"][0] == inv["beta"][1],
        "link_homotopy": same_lk,
        "c2": same_lk,
    }
    return Certificate("link", inv, verdicts, _first_difference(inv))


def classify_string_links(S: Diagram, S2: Diagram, budget: int = DEFAULT_BUDGET) -> Certificate:
    for D in (S, S2):
        require_valid(D)
        if not D.is_string_link:
            raise DiagramError("classify_string_links needs string links")
    b0, b1 = string_betas(S, budget)
    b0p, b1p = string_betas(S2, budget)
    inv = {
        "lk": (linking_number(S), linking_number(S2)),
        "beta_0": (b0, b0p),
        "beta_1": (b1, b1p),
    }
    same_lk = inv["lk"][0] == inv["lk"][1]
    verdicts = {
        "self_c2": same_lk and b0 == b0p and b1 == b1p,
        "link_homotopy": same_lk,
    }
    return Certificate("string_link", inv, verdicts, _first_difference(inv))


def classify(A: Diagram, B: Diagram, budget: int = DEFAULT_BUDGET) -> Certificate:
    if A.kind != B.kind:
        raise DiagramError(f"kind mismatch: {A.kind} vs {B.kind}")
    if A.is_string_link:
        return classify_string_links(A, B, budget)
    return classify_links(A, B, budget)
