"""The twelve acceptance criteria, each checked exactly and against its time limit.

Every criterion prints one line (criterion number, PASS/FAIL, elapsed time);
the lines are repeated in the pytest terminal summary.
"""

from __future__ import annotations

import random
import time
from contextlib import contextmanager

import pytest
from helpers import random_string_link, random_trace, random_two_component_braid, self_crossings, signed_pair
from oracles import burau_conway, tree_conway

from linkhom.algebra import Delta, Delta_lambda, delta_hom, min_support
from linkhom.classify import classify_links, classify_string_links
from linkhom.diagram import lobe_linking, reflect, stack
from linkhom.fixtures import build_catalog, fixture, manifest, trace_data
from linkhom.homotopy import (
    Trace,
    check_constraints,
    close_summary,
    concat_summaries,
    generator_summary,
    reflect_summary,
    run_trace,
    sigma_kirk,
    sigma_link,
    sigma_string,
)
from linkhom.polys import LaurentPoly, PolyPair, T, ZPoly
from linkhom.realization import (
    CL_JPSI_MINUS,
    CL_JPSI_PLUS,
    JPSI_MINUS,
    JPSI_PLUS,
    REFL_SUM_MINUS,
    REFL_SUM_PLUS,
    X,
    Y,
    GeneratorId,
    LinkLH,
    SideConditionError,
    StringLC,
    StringLH,
    generator_value,
    realize,
    recompose,
    table_value,
)
from linkhom.skein import beta, conway
from linkhom.verify import combination_failures


def tn(n: int) -> LaurentPoly:
    return LaurentPoly.monomial(n)


@contextmanager
def criterion(report, number: int, title: str, limit: float):
    """Time the body, print the verdict line and enforce the time limit."""
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        within = elapsed < limit
        verdict = "PASS" if ok and within else "FAIL"
        note = "" if within else f" (limit {limit:g} s exceeded)"
        line = f"criterion {number}: {verdict} {title} [{elapsed:.2f} s < {limit:g} s]{note}"
        report.append(line)
        print(line)
    assert within, line


# 1 -----------------------------------------------------------------------------------------


def test_criterion_01_jin_sigma(report):
    with criterion(report, 1, "Sigma of the Jin suspension of Psi is (t-1, 1-t)", 1.0):
        s = run_trace(Trace.from_json(trace_data("jin_psi_trace")))
        assert sigma_string(s) == PolyPair(T - 1, 1 - T)


# 2 -----------------------------------------------------------------------------------------


def cabled_formula(m: int, n: int) -> PolyPair:
    f = (tn(n) - 1) * ((m * m + m) // 2) + (tn(-n) - 1) * ((m * m - m) // 2)
    g = (1 - tn(m)) * ((n * n + n) // 2) + (1 - tn(-m)) * ((n * n - n) // 2)
    return PolyPair(f, g)


def test_criterion_02_cabled_family(report):
    with criterion(report, 2, "cabled Whitehead family matches the closed formula, |m|,|n| <= 4", 1.0):
        for m in range(-4, 5):
            for n in range(-4, 5):
                if m and n:
                    s = generator_summary(m, n)
                    assert sigma_string(s) == cabled_formula(m, n), (m, n)
                    assert len(s.records) == 2 * m * m + 2 * n * n


# 3 -----------------------------------------------------------------------------------------


def closure_row(k: int, n: int) -> PolyPair | None:
    """The five closure-table cases, or None outside their side conditions."""
    if k <= -2 and 2 * n >= k:
        f = X * (n * n) + Y * n
        return PolyPair(LaurentPoly({e: c // 2 for e, c in f.items()}), 1 - tn(n))
    if k == -1 and n >= 0:
        return PolyPair((T - 1) * ((n * n + n) // 2), 1 - tn(n))
    if k == 0 and n > 0:
        return PolyPair((T - 1) * (n * n), 1 - tn(n))
    if k == 1 and n <= 0:
        return PolyPair((T - 1) * ((n * n - n) // 2), 1 - tn(-n))
    if k >= 2 and 2 * n <= k:
        f = X * (n * n) - Y * n
        return PolyPair(LaurentPoly({e: c // 2 for e, c in f.items()}), 1 - tn(-n))
    return None


def test_criterion_03_closure_table(report):
    with criterion(report, 3, "closure table of the (n,1) family, |k|,|n| <= 6", 5.0):
        rows = 0
        for k in range(-6, 7):
            for n in range(-6, 7):
                if not n:
                    continue
                want = closure_row(k, n)
                if want is None:
                    with pytest.raises(SideConditionError):
                        table_value(k, n)
                    continue
                rows += 1
                got = sigma_link(close_summary(generator_summary(n, 1), k))
                assert got == want == table_value(k, n), (k, n)
        assert rows > 50


# 4 -----------------------------------------------------------------------------------------


def test_criterion_04_combinations(report):
    with criterion(report, 4, "closure combination identities, |k| <= 6", 5.0):
        assert combination_failures(6) == []


# 5 -----------------------------------------------------------------------------------------


def test_criterion_05_kernel_membership(report):
    with criterion(report, 5, "generator values lie in the kernels, |n| <= 8, |lambda| <= 6", 5.0):
        for n in range(-8, 9):
            if not n:
                continue
            for fam in (JPSI_PLUS, JPSI_MINUS, REFL_SUM_PLUS, REFL_SUM_MINUS):
                assert Delta(generator_value(GeneratorId(fam, n), StringLH())) == (0, 0, 0, 0)
            for fam in (JPSI_PLUS, JPSI_MINUS):
                assert delta_hom(generator_value(GeneratorId(fam, n), StringLC())) == (0, 0, 0)
            for lam in range(-6, 7):
                for fam in (CL_JPSI_PLUS, CL_JPSI_MINUS):
                    v = generator_value(GeneratorId(fam, n, lam), LinkLH(lam))
                    assert Delta_lambda(v, lam) == (0, 0, 0), (fam, n, lam)


# 6 -----------------------------------------------------------------------------------------


def random_combination(rng: random.Random, ctx):
    gens = [
        GeneratorId(fam, n, ctx.lam if fam.startswith("Cl") else None)
        for fam in ctx.families
        for n in range(-6, 7)
        if n
    ]
    return [(rng.choice(gens), rng.randint(-5, 5)) for _ in range(rng.randint(1, 5))]


def random_kernel_element(rng: random.Random) -> PolyPair:
    """A random element of ker delta with degree <= 6 and coefficients in [-9, 9]."""
    while True:
        f = LaurentPoly({e: rng.randint(-9, 9) for e in range(1, 7)})
        g = LaurentPoly({e: rng.randint(-9, 9) for e in range(1, 7)})
        f = f - f.eval_one()
        g = g - g.eval_one()
        c = delta_hom(PolyPair(f, g))[2]
        f = f - (T - 1) * c
        pp = PolyPair(f, g)
        if all(abs(v) <= 9 for p in pp for _, v in p.items()) and delta_hom(pp) == (0, 0, 0):
            return pp


def test_criterion_06_realization(report):
    rng = random.Random(2024)
    worst = 0.0
    with criterion(report, 6, "realization round trips in every context (each call < 10 s)", 120.0):
        contexts = [StringLH(), StringLC()] + [LinkLH(lam) for lam in range(-5, 6)]
        cases = []
        for ctx in contexts:
            cases += [(ctx, recompose(random_combination(rng, ctx), ctx)) for _ in range(50)]
        cases += [(StringLC(), random_kernel_element(rng)) for _ in range(50)]
        for ctx, target in cases:
            start = time.perf_counter()
            dec = realize(target, ctx)
            worst = max(worst, time.perf_counter() - start)
            assert recompose(dec, ctx) == target
        assert worst < 10.0, f"slowest call took {worst:.2f} s"


# 7 -----------------------------------------------------------------------------------------

BRAID_WORDS = {
    "unknot": (2, [1]),
    "hopf_pos": (2, [1, 1]),
    "trefoil": (2, [1, 1, 1]),
    "fig8": (3, [1, -2, 1, -2]),
    "whitehead": (3, [1, 1, -2, 1, -2]),
}


def test_criterion_07_conway_oracle(report):
    with criterion(report, 7, "conway agrees with independent oracles on the catalog", 30.0):
        cat = build_catalog()
        checked = 0
        for name, D in cat.items():
            if D.is_string_link or D.n_crossings > 12:
                continue
            got = dict(conway(D).items())
            assert got == tree_conway(D), name
            if name in BRAID_WORDS:
                assert got == burau_conway(*BRAID_WORDS[name]), name
            checked += 1
        assert checked >= 7
        assert conway(cat["unknot"]) == ZPoly.parse("1")
        assert conway(cat["hopf_pos"]) == ZPoly.parse("z")
        assert conway(cat["trefoil"]) == ZPoly.parse("1 + z^2")
        assert conway(cat["fig8"]) == ZPoly.parse("1 - z^2")
        assert conway(cat["whitehead"]).to_json() == manifest()["whitehead"]["conway"] == [[3, -1]]


# 8 -----------------------------------------------------------------------------------------


def test_criterion_08_crossing_change_formula(report):
    rng = random.Random(8)
    with criterion(report, 8, "beta(L+) - beta(L-) = l l' on 100 random diagrams", 60.0):
        for _ in range(100):
            D = random_two_component_braid(rng, max_crossings=12)
            c = rng.choice(self_crossings(D))
            plus, minus = signed_pair(D, c)
            l, lp = lobe_linking(plus, c)
            assert beta(plus) - beta(minus) == l * lp, (D.crossings, D.signs, c)


# 9 -----------------------------------------------------------------------------------------


def test_criterion_09_constraints(report):
    rng = random.Random(9)
    with criterion(report, 9, "constraint identities on the Jin trace and random traces", 60.0):
        rep = check_constraints(run_trace(Trace.from_json(trace_data("jin_psi_trace"))))
        assert rep.ok and all(a == b for _, a, b in rep.items)
        for _ in range(20):
            rep = check_constraints(run_trace(random_trace(rng, random_string_link(rng))))
            assert rep.ok, str(rep)
        for lam in range(-3, 4):
            for _ in range(3):
                D = random_two_component_braid(rng, lam=lam)
                rep = check_constraints(run_trace(random_trace(rng, D)))
                assert rep.ok, str(rep)


# 10 ----------------------------------------------------------------------------------------


def test_criterion_10_classifier(report):
    with criterion(report, 10, "Psi # reflected Psi vs trivial; Whitehead vs unlink", 10.0):
        psi = fixture("psi")
        cert = classify_string_links(stack(psi, reflect(psi)), fixture("xi2"))
        assert cert.invariants == {"lk": (0, 0), "beta_0": (0, 0), "beta_1": (2, 0)}
        assert cert.verdicts["self_c2"] is False
        cert = classify_links(fixture("whitehead"), fixture("unlink2"))
        assert cert.verdicts["link_homotopy"] is True
        assert cert.verdicts["self_c2"] is False


# 11 ----------------------------------------------------------------------------------------


def test_criterion_11_parity(report):
    with criterion(report, 11, "third coordinate of Delta_lambda is even for odd lambda", 1.0):
        for lam in range(-9, 10, 2):
            for n in range(max(-10, min_support(lam)), 11):
                for pp in (PolyPair(tn(n), LaurentPoly()), PolyPair(LaurentPoly(), tn(n))):
                    assert Delta_lambda(pp, lam)[2] % 2 == 0, (lam, n)


# 12 ----------------------------------------------------------------------------------------


def test_criterion_12_kirk_vanishing(report):
    with criterion(report, 12, "Kirk's sigma of Psi_n # reflected Psi_n vanishes, |n| <= 5", 1.0):
        for n in range(-5, 6):
            if n:
                s = concat_summaries(generator_summary(n, 1), reflect_summary(generator_summary(n, 1)))
                assert sigma_kirk(s) == PolyPair.zero(), n


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
