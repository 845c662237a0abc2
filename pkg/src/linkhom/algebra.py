"""Evaluation/derivative homomorphisms on pairs of Laurent polynomials.

All maps here are additive and land in small integer vectors; their
kernels and cosets describe which values the homotopy invariants can take.
"""

from __future__ import annotations

from typing import Sequence

from .polys import LaurentPoly, PolyPair


class SupportError(ValueError):
    """A polynomial has exponents outside the domain of a homomorphism."""


def derivative(p: LaurentPoly) -> LaurentPoly:
    return p.derivative()


def eval_one(p: LaurentPoly) -> int:
    return p.eval_one()


def d1(p: LaurentPoly) -> int:
    """``p'(1)``."""
    return sum(e * c for e, c in p.items())


def d2(p: LaurentPoly) -> int:
    """``p''(1)``."""
    return sum(e * (e - 1) * c for e, c in p.items())


def fold_exponent(n: int, k: int) -> int:
    """``|n - k/2| - |k/2|``, always an integer."""
    return (abs(2 * n - k) - abs(k)) // 2


def abs_k(p: LaurentPoly, k: int = 0) -> LaurentPoly:
    """Fold exponents by ``t^n -> t^(|n - k/2| - |k/2|)``.

    For ``k = 0`` this is ``t^n -> t^|n|``.
    """
    return p.map_exponents(lambda n: fold_exponent(n, k))


def min_support(lam: int) -> int:
    """Lowest exponent allowed in the domain of ``Delta_lambda``."""
    return -(abs(lam) // 2)


def _check_support(pp: PolyPair, lowest: int, what: str) -> None:
    for name, p in zip(("first", "second"), pp):
        m = p.min_exp()
        if m is not None and m < lowest:
            raise SupportError(f"{what}: {name} polynomial has exponent {m} < {lowest}")


def Delta(pp: PolyPair) -> tuple[int, int, int, int]:
    f, g = pp
    return (eval_one(f), eval_one(g), d1(f) + d1(g), d2(f) + d2(g))


def delta_hom(pp: PolyPair) -> tuple[int, int, int]:
    _check_support(pp, 0, "delta")
    f, g = pp
    return (eval_one(f), eval_one(g), d1(f) + d1(g) + d2(f) + d2(g))


def Delta_lambda(pp: PolyPair, lam: int) -> tuple[int, int, int]:
    _check_support(pp, min_support(lam), f"Delta_{lam}")
    f, g = pp
    w = 1 + abs(lam)
    return (eval_one(f), eval_one(g), w * (d1(f) + d1(g)) + d2(f) + d2(g))


def psi_hom(pp: PolyPair) -> tuple[LaurentPoly, LaurentPoly, int]:
    f, g = pp
    return (abs_k(f, 0), abs_k(g, 0), d1(f) + d1(g))


# Homomorphism selectors used by coset_check and the realization module.
DELTA = "Delta"
DELTA_SMALL = "delta"


def apply_hom(pp: PolyPair, hom: str, lam: int | None = None) -> tuple[int, ...]:
    if hom == DELTA:
        return Delta(pp)
    if hom == DELTA_SMALL:
        return delta_hom(pp)
    if hom == "Delta_lambda":
        if lam is None:
            raise ValueError("Delta_lambda needs lam")
        return Delta_lambda(pp, lam)
    raise ValueError(f"unknown homomorphism {hom!r}")


_TARGET_LEN = {DELTA: 4, DELTA_SMALL: 3, "Delta_lambda": 3}


def coset_check(pp: PolyPair, hom: str, target: Sequence[int], lam: int | None = None) -> bool:
    """True iff ``pp`` lies in the preimage of ``target`` under ``hom``.

    A support violation (negative exponents for ``delta``, exponents below
    ``-floor(|lam|/2)`` for ``Delta_lambda``) counts as non-membership.
    """
    want = _TARGET_LEN.get(hom)
    if want is None:
        raise ValueError(f"unknown homomorphism {hom!r}")
    if len(target) != want:
        raise ValueError(f"target for {hom} must have length {want}, got {len(target)}")
    try:
        return apply_hom(pp, hom, lam) == tuple(int(x) for x in target)
    except SupportError:
        return False
