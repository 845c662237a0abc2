"""Oriented PD-code diagrams of two-component links and string links.

A crossing is a 4-tuple of arc ids listed counterclockwise starting from the
incoming under-strand.  The over-strand runs slot 3 -> slot 1 at a positive
crossing and slot 1 -> slot 3 at a negative one, so the sign tuple carries
the orientation of every over-passage.  Arcs that occur in no crossing are
crossingless circles (links) or crossingless strands (string links).

Crossing ids are 0-based indices into ``Diagram.crossings``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping

LINK = "link"
STRING_LINK = "string_link"
KINDS = (LINK, STRING_LINK)


class DiagramError(ValueError):
    """Raised for malformed diagrams or invalid operation arguments."""


@dataclass(frozen=True)
class Diagram:
    kind: str
    crossings: tuple[tuple[int, int, int, int], ...]
    signs: tuple[int, ...]
    arc_component: Mapping[int, int]
    strand_boundaries: Mapping[int, tuple[int, int]] | None = None
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    __hash__ = None  # type: ignore[assignment]

    # -- construction ---------------------------------------------------------------

    @classmethod
    def from_pd(
        cls,
        kind: str,
        crossings: Iterable[Iterable[int]],
        arc_component: Mapping[int, int],
        strand_boundaries: Mapping[int, Iterable[int]] | None = None,
        signs: Iterable[int] | None = None,
    ) -> "Diagram":
        """Build a diagram, inferring crossing signs from strand orientation
        when ``signs`` is not given."""
        xs = tuple(tuple(int(a) for a in x) for x in crossings)
        comp = {int(a): int(c) for a, c in arc_component.items()}
        bounds = None
        if strand_boundaries is not None:
            bounds = {int(i): tuple(int(a) for a in v) for i, v in strand_boundaries.items()}
        if signs is None:
            sg = infer_signs(xs, bounds)
        else:
            sg = tuple(int(s) for s in signs)
        return cls(kind, xs, sg, comp, bounds)

    def replace(self, **changes) -> "Diagram":
        data = dict(
            kind=self.kind,
            crossings=self.crossings,
            signs=self.signs,
            arc_component=self.arc_component,
            strand_boundaries=self.strand_boundaries,
        )
        data.update(changes)
        return Diagram(**data)

    # -- basic queries ------------------------------------------------------------------

    @property
    def is_string_link(self) -> bool:
        return self.kind == STRING_LINK

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    def arcs(self) -> list[int]:
        return sorted(self.arc_component)

    def occurrences(self) -> dict[int, list[tuple[int, int]]]:
        occ = self._cache.get("occ")
        if occ is None:
            occ = {a: [] for a in self.arc_component}
            for x, cr in enumerate(self.crossings):
                for slot, a in enumerate(cr):
                    occ.setdefault(a, []).append((x, slot))
            self._cache["occ"] = occ
        return occ

    def heads(self) -> dict[int, tuple[int, int]]:
        """Arc -> (crossing, slot) where the arc enters a crossing."""
        h = self._cache.get("heads")
        if h is None:
            h = {}
            for x, cr in enumerate(self.crossings):
                for slot in in_slots(self.signs[x]):
                    h[cr[slot]] = (x, slot)
            self._cache["heads"] = h
        return h

    def free_arcs(self) -> list[int]:
        occ = self.occurrences()
        return sorted(a for a, o in occ.items() if not o)

    def component_of_arc(self, arc: int) -> int:
        return self.arc_component[arc]

    def strand_components(self, x: int) -> tuple[int, int]:
        """(under component, over component) at crossing ``x``."""
        cr = self.crossings[x]
        return self.arc_component[cr[0]], self.arc_component[cr[1]]

    def is_self_crossing(self, x: int) -> bool:
        u, o = self.strand_components(self._check_crossing(x))
        return u == o

    def _check_crossing(self, x: int) -> int:
        if not isinstance(x, int) or not 0 <= x < len(self.crossings):
            raise DiagramError(f"unknown crossing id {x!r} (diagram has {len(self.crossings)})")
        return x

    # -- traversal -------------------------------------------------------------------

    def walk(self, start_arc: int) -> list[tuple[int, int, int]]:
        """Follow the strand from ``start_arc``.

        Returns passages ``(arc, crossing, in_slot)``: the arc travelled and the
        crossing/slot through which it is left.  Stops when the walk returns to
        ``start_arc`` or runs off a string-link boundary.
        """
        heads = self.heads()
        out = []
        arc = start_arc
        for _ in range(2 * len(self.crossings) + 1):
            hd = heads.get(arc)
            if hd is None:
                return out
            x, slot = hd
            out.append((arc, x, slot))
            arc = self.crossings[x][(slot + 2) % 4]
            if arc == start_arc:
                return out
        raise DiagramError("strand traversal does not close up; orientation inconsistent")

    def components(self) -> list[list[int]]:
        """Arc lists of each component in traversal order.

        String links: strand 1 then strand 2 from their initial arcs, then any
        stray closed loops.  Links: loops ordered by smallest arc id.
        """
        comps = self._cache.get("components")
        if comps is not None:
            return comps
        seen: set[int] = set()
        comps = []
        if self.is_string_link and self.strand_boundaries:
            for i in sorted(self.strand_boundaries):
                start = self.strand_boundaries[i][0]
                arcs = [p[0] for p in self.walk(start)]
                last = self.crossings[self.walk(start)[-1][1]][(self.walk(start)[-1][2] + 2) % 4] if arcs else start
                if arcs:
                    arcs.append(last)
                else:
                    arcs = [start]
                comps.append(arcs)
                seen.update(arcs)
        for a in sorted(self.arc_component):
            if a in seen:
                continue
            arcs = [p[0] for p in self.walk(a)] or [a]
            comps.append(arcs)
            seen.update(arcs)
        self._cache["components"] = comps
        return comps

    def n_components(self) -> int:
        return len(self.components())

    # -- serialization -------------------------------------------------------------------

    def to_json(self) -> dict:
        data = {
            "kind": self.kind,
            "crossings": [list(x) for x in self.crossings],
            "arc_component": {str(a): c for a, c in sorted(self.arc_component.items())},
            "signs": list(self.signs),
        }
        if self.strand_boundaries is not None:
            data["strand_boundaries"] = {
                str(i): list(v) for i, v in sorted(self.strand_boundaries.items())
            }
        return data

    @classmethod
    def from_json(cls, data: Mapping) -> "Diagram":
        kind = data.get("kind")
        if kind not in KINDS:
            raise DiagramError(f"unknown diagram kind {kind!r}")
        return cls.from_pd(
            kind,
            data.get("crossings", []),
            data.get("arc_component", {}),
            data.get("strand_boundaries"),
            data.get("signs"),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def in_slots(sign: int) -> tuple[int, int]:
    return (0, 3) if sign > 0 else (0, 1)


def out_slots(sign: int) -> tuple[int, int]:
    return (2, 1) if sign > 0 else (2, 3)


def infer_signs(crossings, boundaries=None) -> tuple[int, ...]:
    """Recover over-strand orientations by propagating along arcs.

    Slot 0 is always incoming and slot 2 outgoing; string-link boundary arcs
    fix their single occurrence.  A closed component made only of
    over-passages carries no orientation data; it is oriented so that the
    lowest-index undetermined crossing becomes positive.
    """
    n = len(crossings)
    occ: dict[int, list[tuple[int, int]]] = {}
    for x, cr in enumerate(crossings):
        if len(cr) != 4:
            raise DiagramError(f"crossing {x} does not have 4 slots")
        for slot, a in enumerate(cr):
            occ.setdefault(a, []).append((x, slot))
    direction: dict[tuple[int, int], bool] = {}  # True = incoming
    stack: list[tuple[tuple[int, int], bool]] = []
    for x in range(n):
        stack.append(((x, 0), True))
        stack.append(((x, 2), False))
    if boundaries:
        for a_in, a_out in boundaries.values():
            if a_in == a_out:
                continue
            for o in occ.get(a_in, []):
                stack.append((o, True))
            for o in occ.get(a_out, []):
                stack.append((o, False))

    def settle():
        while stack:
            o, inc = stack.pop()
            prev = direction.get(o)
            if prev is not None:
                if prev != inc:
                    raise DiagramError(f"inconsistent orientation at crossing {o[0]} slot {o[1]}")
                continue
            direction[o] = inc
            x, slot = o
            if slot in (1, 3):
                stack.append(((x, 4 - slot), not inc))
            others = [p for p in occ[crossings[x][slot]] if p != o]
            if len(others) == 1:
                stack.append((others[0], not inc))

    settle()
    for x in range(n):
        if (x, 3) not in direction:
            stack.append(((x, 3), True))
            settle()
    return tuple(1 if direction[(x, 3)] else -1 for x in range(n))


# -- validation -----------------------------------------------------------------------


@dataclass
class ValidationReport:
    errors: list[str]

    @property
    def ok(self) -> bool:
        return not self.errors

    def __bool__(self):
        return self.ok

    def __str__(self):
        return "pass" if self.ok else "fail: " + "; ".join(self.errors)


def validate(D: Diagram) -> ValidationReport:
    errs: list[str] = []
    if D.kind not in KINDS:
        return ValidationReport([f"unknown kind {D.kind!r}"])
    for x, cr in enumerate(D.crossings):
        if len(cr) != 4 or not all(isinstance(a, int) and a > 0 for a in cr):
            errs.append(f"crossing {x} must list 4 positive arc ids")
    if len(D.signs) != len(D.crossings) or any(s not in (1, -1) for s in D.signs):
        errs.append("signs must be one of +1/-1 per crossing")
    if errs:
        return ValidationReport(errs)

    counts: dict[int, int] = {}
    for cr in D.crossings:
        for a in cr:
            counts[a] = counts.get(a, 0) + 1
    unknown = sorted(a for a in counts if a not in D.arc_component)
    if unknown:
        errs.append(f"arcs without component label: {unknown}")
    bounds = D.strand_boundaries if D.is_string_link else None
    if D.is_string_link:
        if not bounds or sorted(bounds) != [1, 2]:
            errs.append("string link needs strand_boundaries for strands 1 and 2")
            bounds = None
    elif D.strand_boundaries:
        errs.append("links carry no strand_boundaries")
    boundary_arcs: dict[int, int] = {}
    if bounds:
        for i, (a_in, a_out) in bounds.items():
            for a in {a_in, a_out}:
                boundary_arcs[a] = boundary_arcs.get(a, 0) + 1
    bad_mult = []
    for a in sorted(set(counts) | set(D.arc_component)):
        k = counts.get(a, 0)
        if a in boundary_arcs:
            if boundary_arcs[a] > 1:
                bad_mult.append(a)
                continue
            in_out_same = any(v[0] == v[1] == a for v in bounds.values())
            want = 0 if in_out_same else 1
            if k != want:
                bad_mult.append(a)
        elif k not in (0, 2):
            bad_mult.append(a)
        elif k == 0 and D.is_string_link:
            bad_mult.append(a)
    if bad_mult:
        errs.append(f"arc multiplicity violated for arcs {bad_mult}")
        return ValidationReport(errs)

    # orientation: each doubly-used arc has one head and one tail
    heads: dict[int, int] = {}
    for x, cr in enumerate(D.crossings):
        for slot in in_slots(D.signs[x]):
            heads[cr[slot]] = heads.get(cr[slot], 0) + 1
    bad_orient = []
    for a, k in counts.items():
        want = 1 if k == 2 else (1 if bounds and any(v[0] == a for v in bounds.values()) else 0)
        if heads.get(a, 0) != want:
            bad_orient.append(a)
    if bad_orient:
        errs.append(f"traversal inconsistent: orientation breaks at arcs {sorted(bad_orient)}")
        return ValidationReport(errs)

    try:
        comps = D.components()
    except DiagramError as exc:
        return ValidationReport(errs + [f"traversal inconsistent: {exc}"])

    if D.is_string_link:
        if len(comps) != 2:
            errs.append(f"component count {len(comps)} != 2 (string link must be 2 strands, no loops)")
        for i, arcs in zip(sorted(bounds), comps):
            if arcs[-1] != bounds[i][1]:
                errs.append(f"strand {i} ends at arc {arcs[-1]}, boundary says {bounds[i][1]}")
    elif len(comps) not in (1, 2):
        errs.append(f"component count {len(comps)} not in {{1, 2}}")

    labels = []
    for arcs in comps:
        lab = {D.arc_component.get(a) for a in arcs}
        if len(lab) != 1:
            errs.append(f"arc_component not constant along component through arc {arcs[0]}")
        labels.append(min(lab, key=lambda v: (v is None, v)))
    if not errs:
        if D.is_string_link:
            for i, lab in zip(sorted(bounds), labels):
                if lab != i:
                    errs.append(f"strand {i} labelled {lab}")
        elif sorted(labels) != list(range(1, len(labels) + 1)):
            errs.append(f"component labels {sorted(labels)} must be 1..{len(labels)}")

    if not errs:
        closed = closure(D) if D.is_string_link else D
        if not _is_planar(closed):
            errs.append("PD code is not planar (Euler characteristic mismatch)")
    return ValidationReport(errs)


def require_valid(D: Diagram) -> Diagram:
    rep = validate(D)
    if not rep.ok:
        raise DiagramError(str(rep))
    return D


def _is_planar(D: Diagram) -> bool:
    """Euler-characteristic check of the 4-valent projection graph."""
    n = len(D.crossings)
    if n == 0:
        return True
    occ = D.occurrences()
    # corner (x, i) lies between slot i and i+1; follow the arc at slot i+1
    seen = set()
    faces = 0
    for x in range(n):
        for i in range(4):
            if (x, i) in seen:
                continue
            faces += 1
            cx, ci = x, i
            while (cx, ci) not in seen:
                seen.add((cx, ci))
                s = (ci + 1) % 4
                a = D.crossings[cx][s]
                other = [p for p in occ[a] if p != (cx, s)]
                if len(other) != 1:
                    return False
                cx, ci = other[0]
    # connected pieces of the projection graph
    parent = list(range(n))

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    for a, o in occ.items():
        if len(o) == 2:
            parent[find(o[0][0])] = find(o[1][0])
    pieces = len({find(u) for u in range(n)})
    # V - E + F = 1 + pieces with V = n, E = 2n
    return n - 2 * n + faces == 1 + pieces


# -- invariants of the diagram itself --------------------------------------------------


def crossing_sign(D: Diagram, c: int) -> int:
    return D.signs[D._check_crossing(c)]


def _require_two_components(D: Diagram) -> None:
    labels = set(D.arc_component.values())
    if D.n_components() != 2 or labels != {1, 2}:
        raise DiagramError(f"need a 2-component diagram, got {D.n_components()} components")


def linking_number(D: Diagram) -> int:
    _require_two_components(D)
    total = 0
    for x in range(len(D.crossings)):
        u, o = D.strand_components(x)
        if u != o:
            total += D.signs[x]
    if total % 2:
        raise DiagramError("odd signed count of inter-component crossings")
    return total // 2


# -- elementary moves --------------------------------------------------------------------


def _switched(cr: tuple[int, int, int, int], sign: int) -> tuple[int, int, int, int]:
    a, b, c, d = cr
    return (d, a, b, c) if sign > 0 else (b, c, d, a)


def change_crossing(D: Diagram, c: int) -> Diagram:
    """Exchange over and under strands at crossing ``c``."""
    D._check_crossing(c)
    xs = list(D.crossings)
    sg = list(D.signs)
    xs[c] = _switched(xs[c], sg[c])
    sg[c] = -sg[c]
    return D.replace(crossings=tuple(xs), signs=tuple(sg))


def set_crossing_sign(D: Diagram, c: int, sign: int) -> Diagram:
    return D if D.signs[D._check_crossing(c)] == sign else change_crossing(D, c)


class _UnionFind:
    def __init__(self):
        self.parent: dict[int, int] = {}

    def find(self, a: int) -> int:
        p = self.parent.setdefault(a, a)
        while p != self.parent.setdefault(p, p):
            p = self.parent[p]
        while self.parent[a] != p:
            self.parent[a], a = p, self.parent[a]
        return p

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def _rebuild(D: Diagram, keep: list[int], crossings: list, signs: list, merges: list[tuple[int, int]], drop_arcs=()) -> Diagram:
    """Apply arc identifications after deleting crossings; relabel components."""
    uf = _UnionFind()
    for a, b in merges:
        uf.union(a, b)
    xs = [tuple(uf.find(a) for a in crossings[x]) for x in keep]
    sg = [signs[x] for x in keep]
    old_label: dict[int, int] = {}
    for a, lab in D.arc_component.items():
        if a in drop_arcs:
            continue
        r = uf.find(a)
        old_label[r] = min(lab, old_label.get(r, lab))
    bounds = None
    if D.strand_boundaries is not None:
        bounds = {i: (uf.find(v[0]), uf.find(v[1])) for i, v in D.strand_boundaries.items()}
    tmp = Diagram(D.kind, tuple(xs), tuple(sg), dict(old_label), bounds)
    return _relabel_components(tmp, old_label)


def _relabel_components(D: Diagram, old_label: Mapping[int, int]) -> Diagram:
    comps = D.components()
    if D.is_string_link:
        order = list(range(len(comps)))
    else:
        order = sorted(range(len(comps)), key=lambda i: (min(old_label[a] for a in comps[i]), min(comps[i])))
    comp = {}
    for new, i in enumerate(order, start=1):
        for a in comps[i]:
            comp[a] = new
    return D.replace(arc_component=comp)


def smooth(D: Diagram, c: int) -> Diagram:
    """Oriented smoothing at ``c`` (links only)."""
    D._check_crossing(c)
    if D.is_string_link:
        raise DiagramError("smoothing is defined for closed links; smooth a closure instead")
    cr = D.crossings[c]
    s = D.signs[c]
    o_in, o_out = (cr[3], cr[1]) if s > 0 else (cr[1], cr[3])
    merges = [(cr[0], o_out), (o_in, cr[2])]
    keep = [x for x in range(len(D.crossings)) if x != c]
    return _rebuild(D, keep, list(D.crossings), list(D.signs), merges)


def delete_component(D: Diagram, label: int) -> Diagram:
    """Drop every arc of one component, keeping the rest of the diagram."""
    keep, merges = [], []
    drop = {a for a, lab in D.arc_component.items() if lab == label}
    for x, cr in enumerate(D.crossings):
        u, o = D.arc_component[cr[0]], D.arc_component[cr[1]]
        if u == o == label:
            continue
        if u == o:
            keep.append(x)
            continue
        s = D.signs[x]
        if u != label:
            merges.append((cr[0], cr[2]))
        else:
            o_in, o_out = (cr[3], cr[1]) if s > 0 else (cr[1], cr[3])
            merges.append((o_in, o_out))
    bounds = None
    if D.strand_boundaries is not None:
        bounds = {i: v for i, v in D.strand_boundaries.items() if i != label}
    base = D.replace(strand_boundaries=bounds)
    return _rebuild(base, keep, list(D.crossings), list(D.signs), merges, drop_arcs=drop)


def relabel(D: Diagram, mapping: Mapping[int, int]) -> Diagram:
    """Rename arcs (mapping must be injective on the diagram's arcs)."""
    m = lambda a: mapping.get(a, a)  # noqa: E731
    xs = tuple(tuple(m(a) for a in cr) for cr in D.crossings)
    comp = {m(a): lab for a, lab in D.arc_component.items()}
    if len(comp) != len(D.arc_component):
        raise DiagramError("relabel mapping is not injective")
    bounds = None
    if D.strand_boundaries is not None:
        bounds = {i: (m(v[0]), m(v[1])) for i, v in D.strand_boundaries.items()}
    return D.replace(crossings=xs, arc_component=comp, strand_boundaries=bounds)


def compact(D: Diagram) -> Diagram:
    """Renumber arcs 1..N in traversal order."""
    order = [a for arcs in D.components() for a in arcs]
    return relabel(D, {a: i for i, a in enumerate(order, start=1)})


def permute_crossings(D: Diagram, perm: list[int]) -> Diagram:
    """Reorder crossings: new crossing i is old crossing ``perm[i]``."""
    return D.replace(
        crossings=tuple(D.crossings[p] for p in perm),
        signs=tuple(D.signs[p] for p in perm),
    )


# -- string-link operations ------------------------------------------------------------


def _require_string_link(S: Diagram) -> None:
    if not S.is_string_link or not S.strand_boundaries:
        raise DiagramError("operation needs a string link")


def closure(S: Diagram) -> Diagram:
    """Join each strand's final arc to its initial arc outside the box."""
    _require_string_link(S)
    mapping = {v[1]: v[0] for v in S.strand_boundaries.values() if v[0] != v[1]}
    xs = tuple(tuple(mapping.get(a, a) for a in cr) for cr in S.crossings)
    comp = {a: lab for a, lab in S.arc_component.items() if a not in mapping}
    return Diagram(LINK, xs, S.signs, comp, None)


def stack(S: Diagram, S2: Diagram) -> Diagram:
    """Stacked sum ``S # S2``: ``S`` on the left, ``S2`` on the right."""
    _require_string_link(S)
    _require_string_link(S2)
    if sorted(S.strand_boundaries) != sorted(S2.strand_boundaries):
        raise DiagramError("strand count mismatch")
    off = max(S.arc_component, default=0)
    ren = {a: a + off for a in S2.arc_component}
    for i, (a_in, _) in S2.strand_boundaries.items():
        ren[a_in] = S.strand_boundaries[i][1]
    m = lambda a: ren[a]  # noqa: E731
    xs = S.crossings + tuple(tuple(m(a) for a in cr) for cr in S2.crossings)
    comp = dict(S.arc_component)
    for a, lab in S2.arc_component.items():
        comp[m(a)] = lab
    bounds = {i: (S.strand_boundaries[i][0], m(S2.strand_boundaries[i][1])) for i in S.strand_boundaries}
    out = Diagram(STRING_LINK, xs, S.signs + S2.signs, comp, bounds)
    return compact(out)


def reflect(S: Diagram) -> Diagram:
    """Reflect a string link in the time coordinate of source and target.

    The picture is mirrored left-to-right and every strand reversed, so the
    strands still run from left to right.  Over/under data is kept, which
    makes every crossing sign flip (linking numbers change sign).
    """
    _require_string_link(S)
    xs = tuple((c, b, a, d) for a, b, c, d in S.crossings)
    sg = tuple(-s for s in S.signs)
    bounds = {i: (v[1], v[0]) for i, v in S.strand_boundaries.items()}
    return compact(S.replace(crossings=xs, signs=sg, strand_boundaries=bounds))


# -- lobes --------------------------------------------------------------------------------


def _lobe_walks(D: Diagram, c: int):
    """Passages of the two lobes at self-crossing ``c`` (``c`` excluded)."""
    D._check_crossing(c)
    if not D.is_self_crossing(c):
        raise DiagramError(f"crossing {c} is an inter-component crossing")
    cr = D.crossings[c]
    if D.is_string_link:
        lab = D.arc_component[cr[0]]
        start = D.strand_boundaries[lab][0]
        walk = D.walk(start)
        idx = [i for i, p in enumerate(walk) if p[1] == c]
        i, j = idx[0], idx[1]
        lobe_a = walk[i + 1 : j + 1]
        lobe_b = walk[: i + 1] + walk[j + 1 :]
        arcs_a = [p[0] for p in lobe_a]
        tail = walk[-1]
        last = D.crossings[tail[1]][(tail[2] + 2) % 4]
        arcs_b = [p[0] for p in walk[: i + 1]] + [p[0] for p in walk[j + 1 :]] + [last]
        return (lobe_a[:-1], arcs_a), (lobe_b[:i] + lobe_b[i + 1 :], arcs_b)
    s = D.signs[c]
    under_out = cr[2]
    over_out = cr[1] if s > 0 else cr[3]
    lobes = []
    for start in (under_out, over_out):
        walk = []
        arc = start
        heads = D.heads()
        while True:
            x, slot = heads[arc]
            walk.append((arc, x, slot))
            if x == c:
                break
            arc = D.crossings[x][(slot + 2) % 4]
        lobes.append((walk[:-1], [p[0] for p in walk]))
    return lobes[0], lobes[1]


def lobe_split(D: Diagram, c: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Arcs of the two lobes at self-crossing ``c``.

    String links: lobe A runs between the two passages in strand order.
    Links: lobe A starts on the outgoing under-strand.
    """
    (_, a), (_, b) = _lobe_walks(D, c)
    return tuple(a), tuple(b)


def _over_linking(D: Diagram, passages) -> int:
    total = 0
    for arc, x, slot in passages:
        if slot in (1, 3):
            u, o = D.strand_components(x)
            if u != o:
                total += D.signs[x]
    return total


def lobe_linking(D: Diagram, c: int) -> tuple[int, int]:
    """Signed over-crossings of each lobe with the other component."""
    _require_two_components(D)
    (pa, _), (pb, _) = _lobe_walks(D, c)
    return _over_linking(D, pa), _over_linking(D, pb)


# -- canonical form ------------------------------------------------------------------------


def _encode_from(D: Diagram, starts: list[int]) -> tuple:
    label: dict[int, int] = {}
    order: list[int] = []
    seen_x: dict[int, int] = {}
    for st in starts:
        walk = D.walk(st)
        if not walk:
            label[st] = len(label) + 1
            continue
        for arc, x, _ in walk:
            label.setdefault(arc, len(label) + 1)
            if x not in seen_x:
                seen_x[x] = len(order)
                order.append(x)
        tail = walk[-1]
        label.setdefault(D.crossings[tail[1]][(tail[2] + 2) % 4], len(label) + 1)
    body = tuple((tuple(label[a] for a in D.crossings[x]), D.signs[x]) for x in order)
    comp = tuple(sorted((label[a], lab) for a, lab in D.arc_component.items()))
    return body, comp


def canonical_code(D: Diagram) -> bytes:
    """Encoding invariant under arc relabeling and crossing reordering."""
    comps = D.components()
    if D.is_string_link:
        starts = [arcs[0] for arcs in comps]
        body, comp = _encode_from(D, starts)
        bounds = tuple(sorted(D.strand_boundaries))
        return json.dumps([D.kind, body, comp, bounds]).encode()
    by_label: dict[int, list[list[int]]] = {}
    for arcs in comps:
        by_label.setdefault(D.arc_component[arcs[0]], []).append(arcs)
    ordered = [by_label[k][0] for k in sorted(by_label)] + [
        arcs for k in sorted(by_label) for arcs in by_label[k][1:]
    ]
    best = None

    def rec(i, starts):
        nonlocal best
        if i == len(ordered):
            enc = _encode_from(D, starts)
            if best is None or enc < best:
                best = enc
            return
        for a in ordered[i]:
            rec(i + 1, starts + [a])

    rec(0, [])
    return json.dumps([D.kind, best[0], best[1]]).encode()
