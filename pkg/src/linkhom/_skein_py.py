"""Pure-Python Conway skein kernel.

Works on raw PD data: a list of 4-tuples of arc ids, a parallel list of
signs (+1/-1) and a count of crossingless circles.  Returns the Conway
polynomial as a coefficient list indexed by the power of ``z``.

A diagram is made descending from canonical basepoints; each crossing first
met as an under-passage is switched, and the skein relation contributes
``sign * z * conway(smoothing)``.  Smoothings are memoized by a canonical
encoding that is invariant under arc relabeling and crossing order.
"""

from __future__ import annotations

BACKEND = "python"


class BudgetExceeded(Exception):
    pass


def _add_shifted(acc: list, poly: list, scale: int) -> None:
    """acc += scale * z * poly"""
    need = len(poly) + 1
    if len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    for i, c in enumerate(poly):
        acc[i + 1] += scale * c


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _heads(xs, signs):
    heads = {}
    for x, cr in enumerate(xs):
        heads[cr[0]] = (x, 0)
        heads[cr[3] if signs[x] > 0 else cr[1]] = (x, 3 if signs[x] > 0 else 1)
    return heads


def _traverse(xs, signs, heads, start):
    """Canonical walk from ``start``: returns (encoding, passages, n_components).

    After a component closes, the next one starts at the first unvisited
    incoming arc of the crossings in encounter order.
    """
    n = len(xs)
    label = {}
    xorder = {}
    xlist = []
    passages = []
    ncomp = 0
    scan = 0
    arc = start
    while True:
        ncomp += 1
        first = arc
        while True:
            if arc not in label:
                label[arc] = len(label) + 1
            x, slot = heads[arc]
            if x not in xorder:
                xorder[x] = len(xlist)
                xlist.append(x)
            passages.append((x, slot))
            arc = xs[x][(slot + 2) % 4]
            if arc == first:
                break
        if len(label) == 2 * n:
            break
        arc = None
        while scan < len(xlist):
            cr = xs[xlist[scan]]
            s = signs[xlist[scan]]
            for cand in (cr[0], cr[3] if s > 0 else cr[1]):
                if cand not in label:
                    arc = cand
                    break
            if arc is not None:
                break
            scan += 1
        if arc is None:
            return None  # disconnected projection
    enc = []
    for x in xlist:
        cr = xs[x]
        enc.extend((label[cr[0]], label[cr[1]], label[cr[2]], label[cr[3]], signs[x]))
    return tuple(enc), passages, ncomp


def _smooth(xs, signs, x):
    cr = xs[x]
    s = signs[x]
    o_in, o_out = (cr[3], cr[1]) if s > 0 else (cr[1], cr[3])
    ren = {}

    def find(a):
        while a in ren:
            a = ren[a]
        return a

    for a, b in ((cr[0], o_out), (o_in, cr[2])):
        ra, rb = find(a), find(b)
        if ra != rb:
            ren[rb] = ra
    nxs = []
    nsg = []
    used = set()
    for y in range(len(xs)):
        if y == x:
            continue
        c = tuple(find(a) for a in xs[y])
        nxs.append(c)
        nsg.append(signs[y])
        used.update(c)
    loops = len({find(a) for a in cr} - used)
    return nxs, nsg, loops


def _switch(cr, s):
    a, b, c, d = cr
    return (d, a, b, c) if s > 0 else (b, c, d, a)


def conway(xs, signs, loops=0, budget=20, memo=None):
    """Conway coefficients of the diagram (list, index = power of z)."""
    if memo is None:
        memo = {}
    xs = [tuple(cr) for cr in xs]
    signs = list(signs)
    if len(xs) > budget:
        raise BudgetExceeded(len(xs))
    return _conway(xs, signs, loops, memo)


def _conway(xs, signs, loops, memo):
    n = len(xs)
    if n == 0:
        return [1] if loops == 1 else []
    if loops:
        return []
    heads = _heads(xs, signs)
    best = None
    for start in heads:
        res = _traverse(xs, signs, heads, start)
        if res is None:
            return []
        if best is None or res[0] < best[0]:
            best = res
    key, passages, ncomp = best
    hit = memo.get(key)
    if hit is not None:
        return list(hit)
    cur = list(xs)
    cur_s = list(signs)
    seen = set()
    acc = []
    for x, slot in passages:
        if x in seen:
            continue
        seen.add(x)
        if slot == 0:
            sx, ss, lp = _smooth(cur, cur_s, x)
            _add_shifted(acc, _conway(sx, ss, lp, memo), cur_s[x])
            cur[x] = _switch(cur[x], cur_s[x])
            cur_s[x] = -cur_s[x]
    if ncomp == 1:
        if not acc:
            acc.append(0)
        acc[0] += 1
    acc = _trim(acc)
    memo[key] = tuple(acc)
    return acc
