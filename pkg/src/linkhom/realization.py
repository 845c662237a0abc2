"""Closed-form generator values and exact decomposition of coset elements.

Every element of the relevant coset is written as a fixed offset plus an
integer combination of generator values.  The combination is found by
solving an integer linear system over polynomial coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import hnf
from .algebra import Delta, Delta_lambda, SupportError, abs_k, delta_hom
from .polys import LaurentPoly, PolyPair, T

# Context kinds
STRING_LH = "string-lh"
STRING_LC = "string-lc"
LINK_LH = "link-lh"
CONTEXT_KINDS = (STRING_LH, STRING_LC, LINK_LH)

# Generator families
JPSI_PLUS = "JPsiPlus"
JPSI_MINUS = "JPsiMinus"
REFL_SUM_PLUS = "ReflSumPlus"
REFL_SUM_MINUS = "ReflSumMinus"
CL_JPSI_PLUS = "ClJPsiPlus"
CL_JPSI_MINUS = "ClJPsiMinus"
FAMILIES = (JPSI_PLUS, JPSI_MINUS, REFL_SUM_PLUS, REFL_SUM_MINUS, CL_JPSI_PLUS, CL_JPSI_MINUS)

_CONTEXT_FAMILIES = {
    STRING_LH: (JPSI_PLUS, JPSI_MINUS, REFL_SUM_PLUS, REFL_SUM_MINUS),
    STRING_LC: (JPSI_PLUS, JPSI_MINUS),
    LINK_LH: (CL_JPSI_PLUS, CL_JPSI_MINUS),
}

X = T + T.substitute_inverse() - 2  # t + 1/t - 2
Y = T - T.substitute_inverse()  # t - 1/t


class NotInCosetError(ValueError):
    """The target does not lie in the requested coset."""

    def __init__(self, message: str, coordinate: int | None = None, got=None, want=None):
        super().__init__(message)
        self.coordinate = coordinate
        self.got = got
        self.want = want


class ResourceExceeded(RuntimeError):
    def __init__(self, message: str, bound: int):
        super().__init__(message)
        self.bound = bound


class SideConditionError(ValueError):
    """Closed-form table row used outside its stated range."""


@dataclass(frozen=True)
class Context:
    kind: str
    target: tuple[int, ...]
    lam: int | None = None

    def __post_init__(self):
        if self.kind not in CONTEXT_KINDS:
            raise ValueError(f"unknown context {self.kind!r}")
        want = 4 if self.kind == STRING_LH else 3
        if len(self.target) != want:
            raise ValueError(f"{self.kind} target must have {want} coordinates")
        if self.target[0] or self.target[1]:
            raise ValueError("coset targets have zero first and second coordinates")
        if self.kind == LINK_LH and self.lam is None:
            raise ValueError("link-lh context needs lambda")

    @property
    def families(self) -> tuple[str, ...]:
        return _CONTEXT_FAMILIES[self.kind]

    def hom(self, pp: PolyPair) -> tuple[int, ...]:
        if self.kind == STRING_LH:
            return Delta(pp)
        if self.kind == STRING_LC:
            return delta_hom(pp)
        return Delta_lambda(pp, self.lam)


def StringLH(target=(0, 0, 0, 0)) -> Context:
    return Context(STRING_LH, tuple(target))


def StringLC(target=(0, 0, 0)) -> Context:
    return Context(STRING_LC, tuple(target))


def LinkLH(lam: int, target=(0, 0, 0)) -> Context:
    return Context(LINK_LH, tuple(target), lam)


@dataclass(frozen=True, order=True)
class GeneratorId:
    family: str
    n: int
    k: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown generator family {self.family!r}")
        if self.n == 0:
            raise ValueError("generator index n must be nonzero")
        if (self.k is None) == self.family.startswith("Cl"):
            raise ValueError(f"{self.family} {'needs' if self.k is None else 'takes no'} k")

    def __str__(self):
        return f"{self.family}({self.n})" if self.k is None else f"{self.family}({self.k},{self.n})"


# -- generator values --------------------------------------------------------------------


def _tn(n: int) -> LaurentPoly:
    return LaurentPoly.monomial(n)


def jpsi_plus(n: int) -> PolyPair:
    first = LaurentPoly({1: (n * n + n) // 2, -1: (n * n - n) // 2, 0: -n * n})
    return PolyPair(first, 1 - _tn(n))


def jpsi_minus(n: int) -> PolyPair:
    return PolyPair(_tn(n) - 1, -jpsi_plus(n).first)


def refl_sum_plus(n: int) -> PolyPair:
    return PolyPair(Y * n, _tn(-n) - _tn(n))


def refl_sum_minus(n: int) -> PolyPair:
    return PolyPair(_tn(n) - _tn(-n), -Y * n)


def fold(pp: PolyPair, k: int) -> PolyPair:
    return PolyPair(abs_k(pp.first, k), abs_k(pp.second, k))


_RAW = {
    JPSI_PLUS: jpsi_plus,
    JPSI_MINUS: jpsi_minus,
    REFL_SUM_PLUS: refl_sum_plus,
    REFL_SUM_MINUS: refl_sum_minus,
    CL_JPSI_PLUS: jpsi_plus,
    CL_JPSI_MINUS: jpsi_minus,
}


def generator_value(g: GeneratorId, ctx: Context | str) -> PolyPair:
    """Value of a generator in a context (string context values are folded
    for Kirk's invariant, closure families by their own ``k``)."""
    kind = ctx.kind if isinstance(ctx, Context) else ctx
    if g.family not in _CONTEXT_FAMILIES.get(kind, ()):
        raise ValueError(f"{g.family} is not a generator of {kind}")
    if isinstance(ctx, Context) and kind == LINK_LH and g.k != ctx.lam:
        raise ValueError(f"{g} closes to linking number {g.k}, context has {ctx.lam}")
    value = _RAW[g.family](g.n)
    if kind == STRING_LC:
        return fold(value, 0)
    if kind == LINK_LH:
        return fold(value, g.k)
    return value


def table_value(k: int, n: int) -> PolyPair:
    """Closed-form rows for the ``k``-closure of the Jin suspension of the
    ``(n,1)``-cabled Whitehead string link.  Raises outside each row's range."""
    if n == 0:
        raise SideConditionError("n must be nonzero")
    if k <= -2:
        if 2 * n < k:
            raise SideConditionError(f"k={k} row needs n >= k/2")
        return PolyPair(_half(X * (n * n) + Y * n), 1 - _tn(n))
    if k == -1:
        if n < 0:
            raise SideConditionError("k=-1 row needs n >= 0")
        return PolyPair((T - 1) * ((n * n + n) // 2), 1 - _tn(n))
    if k == 0:
        if n < 0:
            raise SideConditionError("k=0 row holds for n > 0 only")
        return PolyPair((T - 1) * (n * n), 1 - _tn(n))
    if k == 1:
        if n > 0:
            raise SideConditionError("k=1 row needs n <= 0")
        return PolyPair((T - 1) * ((n * n - n) // 2), 1 - _tn(-n))
    if 2 * n > k:
        raise SideConditionError(f"k={k} row needs n <= k/2")
    return PolyPair(_half(X * (n * n) - Y * n), 1 - _tn(-n))


def _half(p: LaurentPoly) -> LaurentPoly:
    out = {}
    for e, c in p.items():
        if c % 2:
            raise ValueError("polynomial has odd coefficients")
        out[e] = c // 2
    return LaurentPoly(out)


# -- decompositions ----------------------------------------------------------------------


@dataclass(frozen=True)
class Decomposition:
    terms: tuple[tuple[GeneratorId, int], ...] = ()
    offset: PolyPair = field(default_factory=PolyPair.zero)

    def to_json(self) -> list[dict]:
        return [{"family": g.family, "n": g.n, "k": g.k, "multiplicity": m} for g, m in self.terms]

    @classmethod
    def from_json(cls, data, offset: PolyPair | None = None) -> "Decomposition":
        terms = tuple((GeneratorId(d["family"], int(d["n"]), d.get("k")), int(d["multiplicity"])) for d in data)
        return cls(terms, offset or PolyPair.zero())


def recompose(d: Decomposition | list, ctx: Context) -> PolyPair:
    if not isinstance(d, Decomposition):
        d = Decomposition(tuple(d))
    acc = d.offset
    for g, m in d.terms:
        acc = acc + generator_value(g, ctx) * m
    return acc


def coset_offset(ctx: Context) -> PolyPair:
    """A fixed element mapping onto the context's target."""
    c = ctx.target[2]
    one = T - 1
    if ctx.kind == STRING_LH:
        a, b = ctx.target[2], ctx.target[3]
        if b % 2:
            raise NotInCosetError("fourth coordinate must be even", 4, b, b)
        return PolyPair(one * a + X * (b // 2), LaurentPoly())
    if ctx.kind == STRING_LC:
        return PolyPair(one * c, LaurentPoly())
    lam = abs(ctx.lam)
    if lam % 2 == 0:
        f = one if lam == 0 else one - X * (lam // 2)
        return PolyPair(f * c, LaurentPoly())
    if c % 2:
        raise NotInCosetError("third coordinate must be even for odd linking number", 3, c, c)
    f = one if lam == 1 else X
    return PolyPair(f * (c // 2), LaurentPoly())


def check_coset(target: PolyPair, ctx: Context) -> None:
    """Raise NotInCosetError naming the first violated coordinate."""
    try:
        got = ctx.hom(target)
    except SupportError as exc:
        raise NotInCosetError(f"support: {exc}", 0) from None
    for i, (a, b) in enumerate(zip(got, ctx.target), start=1):
        if a != b:
            raise NotInCosetError(f"coordinate {i}: {a} != {b}", i, a, b)


def _generators(ctx: Context, bound: int) -> list[GeneratorId]:
    out = []
    for fam in ctx.families:
        for n in range(-bound, bound + 1):
            if n:
                out.append(GeneratorId(fam, n, ctx.lam if fam.startswith("Cl") else None))
    return out


def _support(pp: PolyPair) -> int:
    exps = [abs(e) for p in pp for e in p.exponents()]
    return max(exps, default=0)


DEFAULT_EXTRA = 24


def realize(target: PolyPair, ctx: Context, max_bound: int | None = None) -> Decomposition:
    """Write ``target`` as offset plus an integer combination of generators."""
    check_coset(target, ctx)
    offset = coset_offset(ctx)
    residual = target - offset
    if residual.is_zero():
        return Decomposition((), offset)
    lam = abs(ctx.lam or 0)
    bound = _support(residual) + (lam + 1) // 2 + 2
    cap = max_bound if max_bound is not None else bound + DEFAULT_EXTRA
    bound = min(bound, cap)
    while True:
        gens = _generators(ctx, bound)
        values = [generator_value(g, ctx) for g in gens]
        span = max([_support(residual)] + [_support(v) for v in values])
        width = 2 * span + 1

        def vec(pp: PolyPair) -> list[int]:
            out = [0] * (2 * width)
            for side, p in enumerate(pp):
                for e, c in p.items():
                    out[side * width + e + span] = c
            return out

        cols = [vec(v) for v in values]
        rhs = vec(residual)
        rows = [i for i in range(2 * width) if rhs[i] or any(col[i] for col in cols)]
        A = [[col[i] for col in cols] for i in rows]
        x = hnf.solve(A, [rhs[i] for i in rows])
        if x is not None:
            terms = tuple((g, m) for g, m in zip(gens, x) if m)
            return Decomposition(terms, offset)
        if bound >= cap:
            raise ResourceExceeded(f"no decomposition with generator index up to {bound}", bound)
        bound = min(bound + 4, cap)

