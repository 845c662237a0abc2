"""Sparse integer polynomials.

``ZPoly`` holds Conway polynomials in ``z`` (non-negative exponents only),
``LaurentPoly`` holds Laurent polynomials in ``t``.  Both are immutable,
hashable and never store zero coefficients.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping, NamedTuple


class _SparsePoly:
    __slots__ = ("_terms", "_hash")
    var = "x"
    allow_negative = True

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        acc: dict[int, int] = {}
        for e, c in items:
            e, c = int(e), int(c)
            if e < 0 and not self.allow_negative:
                raise ValueError(f"negative exponent {e} in {type(self).__name__}")
            acc[e] = acc.get(e, 0) + c
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1):
        return cls({exp: coeff})

    @classmethod
    def one(cls):
        return cls({0: 1})

    # -- mapping-ish access -------------------------------------------------

    def __getitem__(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._terms.items())

    def exponents(self) -> list[int]:
        return list(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def min_exp(self) -> int | None:
        return next(iter(self._terms), None)

    def max_exp(self) -> int | None:
        return next(reversed(self._terms), None) if self._terms else None

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, int):
            return type(self)({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return type(self)(acc)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            return type(self)({e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return type(self)(acc)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = type(self)({0: other})
        if not isinstance(other, type(self)):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, tuple(self._terms.items())))
        return self._hash

    # -- evaluation -------------------------------------------------------------

    def eval_one(self) -> int:
        return sum(self._terms.values())

    # -- serialization ------------------------------------------------------------

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in self._terms.items()]

    @classmethod
    def from_json(cls, data):
        return cls((e, c) for e, c in data)

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for e, c in self._terms.items():
            if e == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                body = f"{mag}{self.var}" if e == 1 else f"{mag}{self.var}^{e}"
            sign = "-" if c < 0 else "+"
            out.append((sign, body))
        first_sign, first_body = out[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    @classmethod
    def parse(cls, text: str):
        """Parse strings like ``"3t^-2 - t + 5"`` (``t`` or ``z`` per class)."""
        s = text.replace("−", "-").replace(" ", "").replace("{", "").replace("}", "")
        if s in ("", "0"):
            return cls()
        v = cls.var
        term_re = re.compile(rf"([+-]?)(\d*)(?:\*?({v})(?:\^(-?\d+))?)?")
        pos = 0
        acc: dict[int, int] = {}
        while pos < len(s):
            m = term_re.match(s, pos)
            if m is None or m.end() == pos or (not m.group(2) and not m.group(3)):
                raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
            sign, digits, var, exp = m.groups()
            if pos > 0 and not sign:
                raise ValueError(f"missing operator in {text!r} at offset {pos}")
            coeff = int(digits) if digits else 1
            if sign == "-":
                coeff = -coeff
            e = 0 if not var else (int(exp) if exp is not None else 1)
            acc[e] = acc.get(e, 0) + coeff
            pos = m.end()
        return cls(acc)


class ZPoly(_SparsePoly):
    """Integer polynomial in ``z``."""

    __slots__ = ()
    var = "z"
    allow_negative = False

    def coeff(self, i: int) -> int:
        return self[i]


class LaurentPoly(_SparsePoly):
    """Integer Laurent polynomial in ``t``."""

    __slots__ = ()
    var = "t"

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly({e - 1: e * c for e, c in self._terms.items() if e != 0})

    def substitute_inverse(self) -> "LaurentPoly":
        """``p(t) -> p(1/t)``."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def map_exponents(self, fn) -> "LaurentPoly":
        acc: dict[int, int] = {}
        for e, c in self._terms.items():
            ne = fn(e)
            acc[ne] = acc.get(ne, 0) + c
        return LaurentPoly(acc)


T = LaurentPoly.monomial(1)
ONE = LaurentPoly.one()


class PolyPair(NamedTuple):
    """An ordered pair ``(first, second)`` of Laurent polynomials."""

    first: LaurentPoly
    second: LaurentPoly

    @classmethod
    def zero(cls) -> "PolyPair":
        return cls(LaurentPoly(), LaurentPoly())

    @classmethod
    def of(cls, first, second) -> "PolyPair":
        """Build from polys, ints or strings such as ``"t-1"``."""
        return cls(_as_laurent(first), _as_laurent(second))

    def __add__(self, other):  # type: ignore[override]
        return PolyPair(self.first + other.first, self.second + other.second)

    def __sub__(self, other):
        return PolyPair(self.first - other.first, self.second - other.second)

    def __neg__(self):
        return PolyPair(-self.first, -self.second)

    def __mul__(self, k):  # type: ignore[override]
        if not isinstance(k, int):
            return NotImplemented
        return PolyPair(self.first * k, self.second * k)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.first and not self.second

    def to_json(self):
        return [self.first.to_json(), self.second.to_json()]

    @classmethod
    def from_json(cls, data):
        return cls(LaurentPoly.from_json(data[0]), LaurentPoly.from_json(data[1]))

    @classmethod
    def parse(cls, text: str) -> "PolyPair":
        """Parse ``"f;g"``."""
        parts = text.split(";")
        if len(parts) != 2:
            raise ValueError(f"expected two polynomials separated by ';', got {text!r}")
        return cls(LaurentPoly.parse(parts[0]), LaurentPoly.parse(parts[1]))

    def __str__(self):
        return f"({self.first}, {self.second})"


def _as_laurent(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    if isinstance(x, str):
        return LaurentPoly.parse(x)
    raise TypeError(f"cannot convert {x!r} to LaurentPoly")
