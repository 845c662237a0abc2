"""Conway polynomial, its coefficients, and the generalized Sato-Levine invariant.

The skein kernel is compiled when the extension is available and falls back
to pure Python otherwise; set ``LINKHOM_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

from .diagram import Diagram, DiagramError, closure, delete_component, linking_number, stack
from .morse import pure_braid
from .polys import ZPoly

if os.environ.get("LINKHOM_PURE"):
    from . import _skein_py as _kernel
else:
    try:
        from . import _skein_c as _kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _skein_py as _kernel

BACKEND: str = _kernel.BACKEND
DEFAULT_BUDGET = 20

# Canonical encoding -> coefficient tuple.  Entries are deterministic, so
# concurrent insertion of the same key is harmless.
_MEMO: dict = {}


class ResourceExceeded(RuntimeError):
    """The diagram exceeds the crossing budget of the exact skein engine."""


def clear_cache() -> None:
    _MEMO.clear()


def conway(D: Diagram, budget: int = DEFAULT_BUDGET, kernel=None) -> ZPoly:
    """Conway polynomial of a closed diagram."""
    if D.is_string_link:
        raise DiagramError("conway needs a closed link; take a closure first")
    if D.n_crossings > budget:
        raise ResourceExceeded(f"{D.n_crossings} crossings exceed the budget of {budget}")
    k = kernel or _kernel
    memo = _MEMO if kernel is None else {}
    coeffs = k.conway(D.crossings, D.signs, len(D.free_arcs()), budget, memo)
    return ZPoly(enumerate(coeffs))


def coeff(p: ZPoly, i: int) -> int:
    if i < 0:
        raise ValueError("coefficient index must be non-negative")
    return p[i]


def casson(D: Diagram, label: int, budget: int = DEFAULT_BUDGET) -> int:
    """``c_2`` of the component knot with the given label."""
    others = set(D.arc_component.values()) - {label}
    K = D
    for other in others:
        K = delete_component(K, other)
    return coeff(conway(K, budget), 2)


def beta(D: Diagram, budget: int = DEFAULT_BUDGET) -> int:
    """Generalized Sato-Levine invariant ``c_3(L) - c_1(L) (c_2(K) + c_2(K'))``.

    With this sign a self-crossing change with lobe linking numbers ``l, l'``
    changes beta by exactly ``l * l'``.
    """
    if D.is_string_link:
        raise DiagramError("beta needs a closed link")
    linking_number(D)  # raises unless there are exactly two components
    p = conway(D, budget)
    c1 = coeff(p, 1)
    extra = c1 * (casson(D, 1, budget) + casson(D, 2, budget)) if c1 else 0
    return coeff(p, 3) - extra


def twisted_closure(S: Diagram, k: int) -> Diagram:
    """Closure of ``S`` stacked with the pure braid making the linking number ``k``."""
    lam = linking_number(S)
    return closure(stack(S, pure_braid(k - lam)))


def beta_k(S: Diagram, k: int, budget: int = DEFAULT_BUDGET) -> int:
    return beta(twisted_closure(S, k), budget)


def string_betas(S: Diagram, budget: int = DEFAULT_BUDGET) -> tuple[int, int]:
    """``(beta_0, beta_1)`` of a string link."""
    return beta_k(S, 0, budget), beta_k(S, 1, budget)
