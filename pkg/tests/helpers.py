"""Random diagram and trace generators shared by the test modules."""

from __future__ import annotations

import random

from linkhom.diagram import DiagramError, linking_number, set_crossing_sign, validate
from linkhom.homotopy import LINK_CTX, STRING, CrossingChange, Trace
from linkhom.morse import braid_closure, string_word


def random_two_component_braid(rng: random.Random, max_crossings: int = 12, lam: int | None = None):
    """Closure of a random 3-braid with two components and at least one self-crossing."""
    while True:
        length = rng.randint(3, max_crossings)
        word = [rng.choice((1, -1)) * rng.randint(1, 2) for _ in range(length)]
        D = braid_closure(3, word)
        if D.n_components() != 2:
            continue
        if lam is not None and linking_number(D) != lam:
            continue
        if any(D.is_self_crossing(x) for x in range(D.n_crossings)):
            return D


def random_string_link(rng: random.Random, max_crossings: int = 7):
    """A random two-strand string link drawn with one cup and one cap."""
    while True:
        n = rng.randint(2, max_crossings)
        word = [("cup", 2, rng.random() < 0.5)]
        word += [("x", rng.randint(0, 2), rng.choice((1, -1))) for _ in range(n)]
        word.append(("cap", 2))
        try:
            S = string_word(word)
        except DiagramError:
            continue
        if not validate(S).ok or S.n_components() != 2:
            continue
        if any(S.is_self_crossing(x) for x in range(S.n_crossings)):
            return S


def self_crossings(D) -> list[int]:
    return [x for x in range(D.n_crossings) if D.is_self_crossing(x)]


def random_trace(rng: random.Random, D, max_changes: int = 3) -> Trace:
    """Crossing changes at randomly chosen self-crossings of ``D``."""
    xs = self_crossings(D)
    steps = tuple(CrossingChange(rng.choice(xs)) for _ in range(rng.randint(1, max_changes)))
    return Trace(STRING if D.is_string_link else LINK_CTX, D, steps)


def signed_pair(D, x: int):
    """(L+, L-) obtained by forcing crossing ``x`` positive and negative."""
    return set_crossing_sign(D, x, 1), set_crossing_sign(D, x, -1)
