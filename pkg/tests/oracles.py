"""Independent Conway-polynomial oracles used to pin the skein engine.

``burau_conway`` works from a braid word alone: the reduced Burau
representation gives the Alexander polynomial of the closure, normalized to
Conway form using the writhe and strand count.  ``tree_conway`` expands the
full skein tree with Diagram operations, without memoization and with its own
basepoint choice.
"""

from __future__ import annotations

import sympy as sp

from linkhom.diagram import change_crossing, smooth

s = sp.symbols("s")
t = s**2


def _burau(n: int, g: int) -> sp.Matrix:
    """Reduced Burau matrix of sigma_g^{+-1} on ``n`` strands (size n-1)."""
    i = abs(g)
    M = sp.eye(n - 1)
    if n == 2:
        M[0, 0] = -t
    else:
        if i > 1:
            M[i - 2, i - 1] = t
        M[i - 1, i - 1] = -t
        if i < n - 1:
            M[i, i - 1] = 1
    return M if g > 0 else M.inv()


def _to_z(expr) -> dict[int, int]:
    """Rewrite a Laurent polynomial in ``s`` as a polynomial in z = s - 1/s."""
    p = sp.expand(expr)
    out: dict[int, int] = {}
    while p != 0:
        poly = sp.Poly(sp.expand(p * s ** 64), s)
        d = poly.degree() - 64
        c = int(poly.LC())
        if d < 0:
            raise ValueError(f"not a polynomial in z: {expr}")
        out[d] = c
        p = sp.expand(p - c * (s - 1 / s) ** d)
    return out


def burau_conway(n: int, word) -> dict[int, int]:
    """Conway coefficients {power: coeff} of the closure of a braid word."""
    M = sp.eye(n - 1)
    for g in word:
        M = M * _burau(n, g)
    det = sp.cancel(sp.together((sp.eye(n - 1) - M).det()))
    alex = sp.cancel(det * (1 - t) / (1 - t**n))
    e = sum(1 if g > 0 else -1 for g in word)
    shift = e - n + 1
    return _to_z(sp.cancel((-1) ** shift * s ** (-shift) * alex))


def tree_conway(D) -> dict[int, int]:
    """Full skein-tree expansion (no cache); basepoints at the largest arc of each component."""
    if not D.crossings:
        return {0: 1} if D.n_components() == 1 else {}
    comps = sorted(D.components(), key=max, reverse=True)
    seen: set[int] = set()
    for comp in comps:
        start = max(comp)
        for _arc, x, slot in D.walk(start):
            if x in seen:
                continue
            seen.add(x)
            if slot == 0:
                sign = D.signs[x]
                rest = tree_conway(change_crossing(D, x))
                sm = tree_conway(smooth(D, x))
                out = dict(rest)
                for k, c in sm.items():
                    out[k + 1] = out.get(k + 1, 0) + sign * c
                return {k: c for k, c in out.items() if c}
    # descending everywhere: an unlink
    return {0: 1} if len(comps) == 1 else {}
