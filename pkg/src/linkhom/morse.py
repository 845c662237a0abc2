"""Build PD codes from planar Morse words (crossings, cups and caps).

Strands run left to right through a stack of horizontal positions numbered
from the bottom.  Each position carries an arc and a direction.  The word
letters are

* ``("x", i, sign)``: crossing of positions ``i`` and ``i+1`` with the given sign,
* ``("cup", i, lower_right)``: a new U-turn occupying positions ``i, i+1``,
* ``("cap", i)``: join positions ``i, i+1`` and remove them.

Because the picture is drawn in the plane, every word yields a planar
diagram; this is how the catalog fixtures are produced.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .diagram import LINK, STRING_LINK, Diagram, DiagramError, _UnionFind, compact

Letter = tuple


def _trace(n_start: int, word: Iterable[Letter]):
    counter = 0

    def new() -> int:
        nonlocal counter
        counter += 1
        return counter

    pos: list[list] = [[new(), True] for _ in range(n_start)]
    initial = [p[0] for p in pos]
    crossings: list[tuple[int, int, int, int]] = []
    signs: list[int] = []
    uf = _UnionFind()
    for letter in word:
        op = letter[0]
        if op == "x":
            _, i, s = letter
            if s not in (1, -1) or not 0 <= i < len(pos) - 1:
                raise DiagramError(f"bad crossing letter {letter!r}")
            (a_arc, a_right), (b_arc, b_right) = pos[i], pos[i + 1]
            ur, lr = new(), new()
            # strand A joins lower-left to upper-right, strand B upper-left to lower-right
            a_dir = (1, 1) if a_right else (-1, -1)
            b_dir = (1, -1) if b_right else (-1, 1)
            cr = a_dir[0] * b_dir[1] - a_dir[1] * b_dir[0]
            a_over = (cr > 0) == (s > 0)
            ccw = [ur, b_arc, a_arc, lr]  # UR, UL, LL, LR
            if a_over:
                start = 1 if b_right else 3
            else:
                start = 2 if a_right else 0
            crossings.append(tuple(ccw[start:] + ccw[:start]))
            signs.append(s)
            pos[i] = [lr, b_right]
            pos[i + 1] = [ur, a_right]
        elif op == "cup":
            _, i, lower_right = letter
            if not 0 <= i <= len(pos):
                raise DiagramError(f"bad cup letter {letter!r}")
            u = new()
            pos[i:i] = [[u, bool(lower_right)], [u, not lower_right]]
        elif op == "cap":
            _, i = letter
            if not 0 <= i < len(pos) - 1 or pos[i][1] == pos[i + 1][1]:
                raise DiagramError(f"bad cap letter {letter!r}")
            uf.union(pos[i][0], pos[i + 1][0])
            del pos[i : i + 2]
        else:
            raise DiagramError(f"unknown letter {letter!r}")
    return initial, pos, crossings, signs, uf, counter


def closed_word(n_strands: int, word: Sequence[Letter]) -> Diagram:
    """Diagram of the braid-like closure of a Morse word.

    The word must end with ``n_strands`` rightward positions, which are glued
    back to the starting ones.  Components are numbered by the lowest
    starting position they pass through.
    """
    initial, pos, crossings, signs, uf, n = _trace(n_strands, word)
    if len(pos) != n_strands or not all(p[1] for p in pos):
        raise DiagramError("word does not end with the starting rightward positions")
    for p, a in zip(pos, initial):
        uf.union(p[0], a)
    xs = tuple(tuple(uf.find(a) for a in cr) for cr in crossings)
    arcs = {uf.find(a) for a in range(1, n + 1)}
    D = Diagram(LINK, xs, tuple(signs), {a: 1 for a in arcs}, None)
    comps = D.components()
    rank = {}
    for i, a in enumerate(initial):
        rank.setdefault(uf.find(a), i)
    order = sorted(comps, key=lambda arcs: min((rank[a] for a in arcs if a in rank), default=n_strands))
    comp = {a: idx + 1 for idx, arc_list in enumerate(order) for a in arc_list}
    return compact(D.replace(arc_component=comp))


def string_word(word: Sequence[Letter]) -> Diagram:
    """Two-strand string link drawn by a Morse word on positions 0 and 1."""
    initial, pos, crossings, signs, uf, n = _trace(2, word)
    if len(pos) != 2 or not all(p[1] for p in pos):
        raise DiagramError("string-link word must end with two rightward positions")
    bounds = {1: (initial[0], pos[0][0]), 2: (initial[1], pos[1][0])}
    xs = tuple(tuple(uf.find(a) for a in cr) for cr in crossings)
    arcs = {uf.find(a) for a in range(1, n + 1)}
    bounds = {i: (uf.find(v[0]), uf.find(v[1])) for i, v in bounds.items()}
    D = Diagram(STRING_LINK, xs, tuple(signs), {a: 1 for a in arcs}, bounds)
    comps = D.components()
    comp = {a: idx + 1 for idx, arc_list in enumerate(comps) for a in arc_list}
    D = D.replace(arc_component=comp)
    if len(comps) != 2 or comps[0][-1] != bounds[1][1] or comps[1][-1] != bounds[2][1]:
        raise DiagramError("word permutes the strands or leaves closed loops")
    return compact(D)


def braid_closure(n_strands: int, word: Sequence[int]) -> Diagram:
    """Closure of a braid; letter ``+g``/``-g`` is a positive/negative
    crossing of positions ``g-1`` and ``g``."""
    return closed_word(n_strands, [("x", abs(g) - 1, 1 if g > 0 else -1) for g in word])


def braid_string_link(word: Sequence[int]) -> Diagram:
    return string_word([("x", abs(g) - 1, 1 if g > 0 else -1) for g in word])


def pure_braid(k: int) -> Diagram:
    """The two-strand pure braid with ``2|k|`` crossings, all of sign ``sign(k)``.

    Its linking number is ``k``; ``pure_braid(0)`` is the trivial string link.
    """
    g = 1 if k > 0 else -1
    return braid_string_link([g] * (2 * abs(k)))
