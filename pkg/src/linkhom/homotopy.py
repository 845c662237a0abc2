"""Replaying link homotopies and the double-point invariants derived from them.

A trace is a starting diagram followed by isotopy steps (a replacement
diagram) and crossing changes at self-crossings.  Every crossing change
contributes one double-point record ``(component, epsilon, l, l')``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .algebra import abs_k, d1, d2, fold_exponent
from .diagram import (
    Diagram,
    DiagramError,
    change_crossing,
    linking_number,
    lobe_linking,
    validate,
)
from .polys import LaurentPoly, PolyPair
from .skein import DEFAULT_BUDGET, beta, conway, string_betas, twisted_closure

STRING = "string"
LINK_CTX = "link"


class TraceError(ValueError):
    """A trace step is not allowed; ``step`` is its 0-based index (or None)."""

    def __init__(self, message: str, step: int | None = None):
        super().__init__(message if step is None else f"step {step}: {message}")
        self.step = step


@dataclass(frozen=True)
class DoublePointRecord:
    component: int
    epsilon: int
    l: int
    l_prime: int | None = None

    def to_json(self) -> dict:
        return {"component": self.component, "epsilon": self.epsilon, "l": self.l, "l_prime": self.l_prime}

    @classmethod
    def from_json(cls, data) -> "DoublePointRecord":
        return cls(int(data["component"]), int(data["epsilon"]), int(data["l"]), data.get("l_prime"))


@dataclass(frozen=True)
class HomotopySummary:
    context: str
    records: tuple[DoublePointRecord, ...] = ()
    lam: int | None = None
    initial: Diagram | None = field(default=None, compare=False)
    final: Diagram | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        return {
            "context": self.context,
            "lambda": self.lam,
            "records": [r.to_json() for r in self.records],
        }

    @classmethod
    def from_json(cls, data) -> "HomotopySummary":
        return cls(
            data["context"],
            tuple(DoublePointRecord.from_json(r) for r in data.get("records", [])),
            data.get("lambda"),
        )


# -- traces -----------------------------------------------------------------------------


@dataclass(frozen=True)
class Isotopy:
    diagram: Diagram


@dataclass(frozen=True)
class CrossingChange:
    crossing: int


@dataclass(frozen=True)
class Trace:
    context: str
    initial: Diagram
    steps: tuple = ()

    @classmethod
    def from_json(cls, data) -> "Trace":
        ctx = data.get("context")
        if ctx not in (STRING, LINK_CTX):
            raise TraceError(f"unknown trace context {ctx!r}")
        steps = []
        for i, st in enumerate(data.get("steps", [])):
            kind = st.get("type")
            if kind == "isotopy":
                steps.append(Isotopy(Diagram.from_json(st["diagram"])))
            elif kind == "crossing_change":
                steps.append(CrossingChange(int(st["crossing"])))
            else:
                raise TraceError(f"unknown step type {kind!r}", i)
        return cls(ctx, Diagram.from_json(data["initial"]), tuple(steps))

    def to_json(self) -> dict:
        steps = []
        for st in self.steps:
            if isinstance(st, Isotopy):
                steps.append({"type": "isotopy", "diagram": st.diagram.to_json()})
            else:
                steps.append({"type": "crossing_change", "crossing": st.crossing})
        return {"context": self.context, "initial": self.initial.to_json(), "steps": steps}


def isotopy_signature(D: Diagram, budget: int = DEFAULT_BUDGET) -> tuple:
    """Invariants an isotopy step must preserve.

    Links: kind, component count, linking number and Conway polynomial.
    String links: the Conway polynomials of the closures twisted to
    linking numbers 0 and 1 replace the last entry.
    """
    lk = linking_number(D) if D.n_components() == 2 else None
    if D.is_string_link:
        polys = (conway(twisted_closure(D, 0), budget), conway(twisted_closure(D, 1), budget))
    else:
        polys = (conway(D, budget),)
    return (D.kind, D.n_components(), lk, polys)


_SIGNATURE_FIELDS = ("kind", "component count", "linking number", "conway polynomial")


def _check_context(ctx: str, D: Diagram, step: int | None) -> None:
    if (ctx == STRING) != D.is_string_link:
        raise TraceError(f"{D.kind} diagram in a {ctx} trace", step)


def replay(tr: Trace, budget: int = DEFAULT_BUDGET):
    """Yield ``(step index, diagram before, diagram after, record or None)``."""
    rep = validate(tr.initial)
    if not rep.ok:
        raise TraceError(f"initial diagram invalid: {rep}")
    _check_context(tr.context, tr.initial, None)
    if tr.initial.n_components() != 2:
        raise TraceError("trace diagrams must have two components")
    cur = tr.initial
    sig = None
    for i, st in enumerate(tr.steps):
        if isinstance(st, Isotopy):
            new = st.diagram
            rep = validate(new)
            if not rep.ok:
                raise TraceError(f"isotopy target invalid: {rep}", i)
            _check_context(tr.context, new, i)
            if sig is None:
                sig = isotopy_signature(cur, budget)
            new_sig = isotopy_signature(new, budget)
            for name, a, b in zip(_SIGNATURE_FIELDS, sig, new_sig):
                if a != b:
                    raise TraceError(f"isotopy changes the {name}", i)
            yield i, cur, new, None
            cur = new
        elif isinstance(st, CrossingChange):
            c = st.crossing
            if not isinstance(c, int) or not 0 <= c < cur.n_crossings:
                raise TraceError(f"unknown crossing id {c!r}", i)
            if not cur.is_self_crossing(c):
                raise TraceError(f"crossing {c} is an inter-component crossing", i)
            l, lp = lobe_linking(cur, c)
            comp = cur.arc_component[cur.crossings[c][0]]
            eps = -cur.signs[c]
            rec = DoublePointRecord(comp, eps, l, None if cur.is_string_link else lp)
            new = change_crossing(cur, c)
            yield i, cur, new, rec
            cur = new
            sig = None
        else:
            raise TraceError(f"unknown step {st!r}", i)


def run_trace(tr: Trace, budget: int = DEFAULT_BUDGET) -> HomotopySummary:
    records = []
    final = tr.initial
    for _, _, after, rec in replay(tr, budget):
        if rec is not None:
            records.append(rec)
        final = after
    lam = linking_number(tr.initial) if tr.context == LINK_CTX else None
    return HomotopySummary(tr.context, tuple(records), lam, tr.initial, final)


def concat_traces(a: Trace, b: Trace) -> Trace:
    """Run ``a`` then ``b``; the start of ``b`` is reached by an isotopy step."""
    if a.context != b.context:
        raise TraceError("cannot concatenate traces of different contexts")
    return Trace(a.context, a.initial, a.steps + (Isotopy(b.initial),) + b.steps)


def reverse_trace(tr: Trace) -> Trace:
    """The same homotopy run backwards in time."""
    states = [tr.initial]
    for _, _, after, _ in replay(tr):
        states.append(after)
    steps = []
    for i in range(len(tr.steps) - 1, -1, -1):
        st = tr.steps[i]
        if isinstance(st, Isotopy):
            steps.append(Isotopy(states[i]))
        else:
            steps.append(CrossingChange(st.crossing))
    return Trace(tr.context, states[-1], tuple(steps))


# -- summaries ------------------------------------------------------------------------------


def _records_poly(records: Iterable[DoublePointRecord], comp: int, exponent) -> LaurentPoly:
    acc: dict[int, int] = {}
    for r in records:
        if r.component != comp:
            continue
        e = exponent(r)
        acc[e] = acc.get(e, 0) + r.epsilon
        acc[0] = acc.get(0, 0) - r.epsilon
    return LaurentPoly(acc)


def _require(s: HomotopySummary, ctx: str) -> None:
    if s.context != ctx:
        raise TraceError(f"expected a {ctx} summary, got {s.context}")


def sigma_string(s: HomotopySummary) -> PolyPair:
    """Sum of ``epsilon (t^l - 1)`` over each component's double points."""
    _require(s, STRING)
    return PolyPair(*(_records_poly(s.records, c, lambda r: r.l) for c in (1, 2)))


def sigma_kirk(s: HomotopySummary) -> PolyPair:
    f, g = sigma_string(s)
    return PolyPair(abs_k(f, 0), abs_k(g, 0))


def sigma_link(s: HomotopySummary) -> PolyPair:
    """Link version: exponent ``|l - lam/2| - |lam/2|`` (symmetric in l, l')."""
    _require(s, LINK_CTX)
    lam = s.lam
    if lam is None:
        raise TraceError("link summary without linking number")
    for r in s.records:
        if r.l_prime is None:
            raise TraceError("link record without l_prime")
        if r.l + r.l_prime != lam:
            raise TraceError(f"record has l + l' = {r.l + r.l_prime} != {lam}")
    return PolyPair(*(_records_poly(s.records, c, lambda r: fold_exponent(r.l, lam)) for c in (1, 2)))


def close_summary(s: HomotopySummary, k: int) -> HomotopySummary:
    """Records of the homotopy after closing with linking number ``k``."""
    _require(s, STRING)
    recs = tuple(DoublePointRecord(r.component, r.epsilon, r.l, k - r.l) for r in s.records)
    return HomotopySummary(LINK_CTX, recs, k)


def generator_summary(m: int, n: int) -> HomotopySummary:
    """Double points of the Jin suspension of the cabled Whitehead string link."""
    if m == 0 or n == 0:
        raise ValueError("m and n must be nonzero")
    recs: list[DoublePointRecord] = []

    def add(count, comp, eps, l):
        recs.extend([DoublePointRecord(comp, eps, l)] * count)

    add((m * m + m) // 2, 1, 1, n)
    add((m * m - m) // 2, 1, 1, -n)
    add(m * m, 1, -1, 0)
    add((n * n + n) // 2, 2, -1, m)
    add((n * n - n) // 2, 2, -1, -m)
    add(n * n, 2, 1, 0)
    return HomotopySummary(STRING, tuple(recs))


def concat_summaries(*parts: HomotopySummary) -> HomotopySummary:
    ctxs = {p.context for p in parts}
    lams = {p.lam for p in parts}
    if len(ctxs) > 1 or len(lams) > 1:
        raise TraceError("summaries of different contexts")
    recs = tuple(r for p in parts for r in p.records)
    return HomotopySummary(parts[0].context if parts else STRING, recs, parts[0].lam if parts else None)


def reverse_summary(s: HomotopySummary) -> HomotopySummary:
    recs = tuple(DoublePointRecord(r.component, -r.epsilon, r.l, r.l_prime) for r in s.records)
    return HomotopySummary(s.context, recs, s.lam, s.final, s.initial)


def reflect_summary(s: HomotopySummary) -> HomotopySummary:
    """Effect of reflecting the string links: signs and lobe linkings negate."""
    _require(s, STRING)
    recs = tuple(DoublePointRecord(r.component, -r.epsilon, -r.l) for r in s.records)
    return HomotopySummary(STRING, recs)


def scale_summary(s: HomotopySummary, k: int) -> HomotopySummary:
    """``|k|`` copies of ``s`` (reversed when ``k < 0``)."""
    base = s if k >= 0 else reverse_summary(s)
    return HomotopySummary(s.context, base.records * abs(k), s.lam)


# -- constraints -------------------------------------------------------------------------------


@dataclass
class ConstraintReport:
    items: list[tuple[str, int, int]]

    @property
    def ok(self) -> bool:
        return all(lhs == rhs for _, lhs, rhs in self.items)

    def to_json(self) -> list[dict]:
        return [{"identity": n, "lhs": a, "rhs": b, "holds": a == b} for n, a, b in self.items]

    def __str__(self):
        return "\n".join(f"{n}: {a} = {b}" + ("" if a == b else "  MISMATCH") for n, a, b in self.items)


def _endpoint_lk(endpoints: Sequence[Diagram]) -> int:
    a, b = endpoints
    la, lb = linking_number(a), linking_number(b)
    if la != lb:
        raise TraceError(f"endpoint linking numbers differ: {la} != {lb}")
    return la


def check_constraints_string(
    s: HomotopySummary, endpoints: Sequence[Diagram], budget: int = DEFAULT_BUDGET
) -> ConstraintReport:
    a, b = endpoints
    if not (a.is_string_link and b.is_string_link):
        raise DiagramError("string constraints need string-link endpoints")
    _endpoint_lk(endpoints)
    b0, b1 = string_betas(a, budget)
    b0p, b1p = string_betas(b, budget)
    f, g = sigma_string(s)
    fa, ga = abs_k(f, 0), abs_k(g, 0)
    return ConstraintReport([
        ("Sigma first derivative", d1(f) + d1(g), b1p - b1 + b0 - b0p),
        ("Sigma second derivative", d2(f) + d2(g), b1 - b1p),
        ("sigma first plus second derivative", d1(fa) + d1(ga) + d2(fa) + d2(ga), b0 - b0p),
    ])


def check_constraints_link(
    s: HomotopySummary, endpoints: Sequence[Diagram], budget: int = DEFAULT_BUDGET
) -> ConstraintReport:
    a, b = endpoints
    if a.is_string_link or b.is_string_link:
        raise DiagramError("link constraints need closed endpoints")
    lam = _endpoint_lk(endpoints)
    if s.lam is not None and s.lam != lam:
        raise TraceError(f"summary linking number {s.lam} != endpoint linking number {lam}")
    f, g = sigma_link(s)
    w = 1 + abs(lam)
    lhs = w * (d1(f) + d1(g)) + d2(f) + d2(g)
    return ConstraintReport([("weighted derivative", lhs, beta(a, budget) - beta(b, budget))])


def check_constraints(s: HomotopySummary, budget: int = DEFAULT_BUDGET) -> ConstraintReport:
    """Constraint check against the summary's own recorded endpoints."""
    if s.initial is None or s.final is None:
        raise TraceError("summary has no recorded endpoints")
    if s.context == STRING:
        return check_constraints_string(s, (s.initial, s.final), budget)
    return check_constraints_link(s, (s.initial, s.final), budget)
