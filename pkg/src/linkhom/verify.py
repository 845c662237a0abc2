"""Reference-value checks run by ``linkhom verify``.

Each check reproduces a published value from the shipped fixtures or the
closed-form generator formulas and reports pass/fail with a short detail.
"""

from __future__ import annotations

import traceback
from dataclasses import dataclass
from typing import Callable

from .algebra import Delta, Delta_lambda, abs_k, delta_hom
from .classify import classify_links, classify_string_links
from .diagram import closure, linking_number, lobe_linking, reflect, stack
from .fixtures import FIXTURE_NAMES, PSI_SELF_CROSSING, fixture, manifest, trace_data
from .homotopy import (
    Trace,
    close_summary,
    concat_summaries,
    generator_summary,
    reflect_summary,
    run_trace,
    sigma_kirk,
    sigma_link,
    sigma_string,
)
from .polys import LaurentPoly, PolyPair, T, ZPoly
from .realization import (
    CL_JPSI_PLUS,
    JPSI_PLUS,
    REFL_SUM_PLUS,
    GeneratorId,
    LinkLH,
    StringLC,
    StringLH,
    X,
    Y,
    SideConditionError,
    generator_value,
    recompose,
    table_value,
)
from .skein import beta_k, conway


@dataclass
class CheckResult:
    group: str
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"group": self.group, "name": self.name, "passed": self.passed, "detail": self.detail}

    def __str__(self):
        return f"[{self.group}] {self.name} ... {'PASS' if self.passed else 'FAIL'}" + (
            f" ({self.detail})" if self.detail else ""
        )


_CHECKS: list[tuple[str, str, Callable[[], tuple[bool, str]]]] = []


def check(group: str, name: str):
    def deco(fn):
        _CHECKS.append((group, name, fn))
        return fn

    return deco


def _tn(n: int) -> LaurentPoly:
    return LaurentPoly.monomial(n)


def _eq(got, want) -> tuple[bool, str]:
    return got == want, f"got {got}, expected {want}"


# -- fixtures --------------------------------------------------------------------------


@check("fixtures", "every catalog fixture loads and validates")
def _fixtures_load():
    bad = []
    for name in FIXTURE_NAMES:
        try:
            fixture(name)
        except Exception as exc:  # report any load or validation failure by name
            bad.append(f"{name}: {exc}")
    return not bad, "; ".join(bad)


@check("fixtures", "Whitehead string link has linking number 0")
def _psi_lk():
    return _eq(linking_number(fixture("psi")), 0)


@check("fixtures", "closure of psi has the Whitehead Conway polynomial from the manifest")
def _psi_closure():
    want = ZPoly.from_json(manifest()["whitehead"]["conway"])
    got_wh = conway(fixture("whitehead"))
    got_psi = conway(closure(fixture("psi")))
    return got_wh == want and got_psi == want, f"whitehead {got_wh}, cl(psi) {got_psi}, manifest {want}"


# -- Jin suspension of the Whitehead string link -----------------------------------------


@check("jin-psi", "first double point has lobe linking number 1")
def _jin_step():
    l, _ = lobe_linking(fixture("psi_jin_step"), PSI_SELF_CROSSING)
    return _eq(l, 1)


@check("jin-psi", "double points (comp 1, +1, l=1) and (comp 2, -1, l=1)")
def _jin_records():
    s = run_trace(Trace.from_json(trace_data("jin_psi_trace")))
    got = sorted((r.component, r.epsilon, r.l) for r in s.records)
    return _eq(got, [(1, 1, 1), (2, -1, 1)])


@check("jin-psi", "Sigma = (t - 1, 1 - t)")
def _jin_sigma():
    s = run_trace(Trace.from_json(trace_data("jin_psi_trace")))
    return _eq(sigma_string(s), PolyPair.of("t-1", "1-t"))


# -- cabled Whitehead families -----------------------------------------------------------------


def _cabled_formula(m: int, n: int) -> PolyPair:
    f = (_tn(n) - 1) * ((m * m + m) // 2) + (_tn(-n) - 1) * ((m * m - m) // 2)
    g = (1 - _tn(m)) * ((n * n + n) // 2) + (1 - _tn(-m)) * ((n * n - n) // 2)
    return PolyPair(f, g)


@check("wh-links", "Sigma of the cabled family matches the closed formula, |m|,|n| <= 4")
def _wh_links_formula():
    bad = [
        (m, n)
        for m in range(-4, 5)
        for n in range(-4, 5)
        if m and n and (
            sigma_string(generator_summary(m, n)) != _cabled_formula(m, n)
            or len(generator_summary(m, n).records) != 2 * m * m + 2 * n * n
        )
    ]
    return not bad, f"mismatch at {bad}" if bad else ""


@check("wh-links", "2m^2 + 2n^2 double points for (m, n) = (2, 3)")
def _wh_links_count():
    return _eq(len(generator_summary(2, 3).records), 26)


@check("wh-links", "m = 2, n = 1 gives (3(t-1) + (1/t - 1), 1 - t^2)")
def _wh_links_21():
    return _eq(sigma_string(generator_summary(2, 1)), PolyPair.of("3t+t^-1-4", "1-t^2"))


@check("wh-links", "Kirk's sigma of the (n,1) family is (n^2(t-1), 1-t^n), n = 3")
def _kirk_generator():
    return _eq(generator_value(GeneratorId(JPSI_PLUS, 3), StringLC()), PolyPair.of("9t-9", "1-t^3"))


@check("wh-refl", "Psi_n # reflected Psi_n gives (n(t - 1/t), t^-n - t^n), |n| <= 5")
def _wh_refl():
    bad = []
    for n in range(-5, 6):
        if not n:
            continue
        s = concat_summaries(generator_summary(n, 1), reflect_summary(generator_summary(n, 1)))
        want = PolyPair(Y * n, _tn(-n) - _tn(n))
        if sigma_string(s) != want or generator_value(GeneratorId(REFL_SUM_PLUS, n), StringLH()) != want:
            bad.append(n)
    return not bad, f"mismatch at {bad}" if bad else ""


@check("wh-refl", "Kirk's sigma of that combination vanishes, |n| <= 5")
def _wh_refl_kirk():
    bad = []
    for n in range(-5, 6):
        if n:
            s = concat_summaries(generator_summary(n, 1), reflect_summary(generator_summary(n, 1)))
            if not sigma_kirk(s).is_zero():
                bad.append(n)
    return not bad, f"nonzero at {bad}" if bad else ""


# -- closures -----------------------------------------------------------------------------------


@check("closure-table", "closure table rows hold within their side conditions, |k|,|n| <= 6")
def _closure_table():
    bad, used = [], 0
    for k in range(-6, 7):
        for n in range(-6, 7):
            if not n:
                continue
            try:
                want = table_value(k, n)
            except SideConditionError:
                continue
            used += 1
            if sigma_link(close_summary(generator_summary(n, 1), k)) != want:
                bad.append((k, n))
    return not bad and used > 0, f"{used} rows checked" + (f", mismatch at {bad}" if bad else "")


def _cl(k: int, n: int) -> PolyPair:
    if n == 0:
        return PolyPair.zero()
    return generator_value(GeneratorId(CL_JPSI_PLUS, n, k), LinkLH(k))


def _half_xy(a2: int, b2: int) -> LaurentPoly:
    """(a2/2) X + (b2/2) Y with integral result."""
    p = X * a2 + Y * b2
    return LaurentPoly({e: c // 2 for e, c in p.items()})


def combination_failures(kmax: int = 6) -> list[tuple]:
    """Closure combination identities; returns the failing cases."""
    bad = []
    for k in range(-kmax, kmax + 1):
        if k == 0:
            continue
        eps = -1 if k > 0 else 1
        for n in range(-2 * kmax, 2 * kmax + 1):
            if not ((k <= -2 and 2 * n >= k) or (k >= 2 and 2 * n <= k)):
                continue
            got = _cl(k, k - n) - _cl(k, n)
            want = PolyPair(_half_xy(k * (k - 2 * n), eps * (k - 2 * n)), LaurentPoly())
            if got != want:
                bad.append(("difference", k, n))
            if k % 2:
                lo, hi, m = (k - 1) // 2, (k + 1) // 2, n
                want = PolyPair(_half_xy(n * (n - k), 0), 1 - _tn(eps * n))
            else:
                lo, hi = (k - 2) // 2, (k + 2) // 2
                m2 = eps * n * (k - n) + n
                if m2 % 2:
                    bad.append(("odd multiplicity", k, n))
                    continue
                m = m2 // 2
                want = PolyPair((T - 1 - X * (abs(k) // 2)) * (n * (n - k)), 1 - _tn(eps * n))
            got = recompose_cl(k, [(n, 1), (lo, m), (hi, -m)])
            if got != want:
                bad.append(("stacked", k, n))
        if abs(k) > 1:
            if k % 2:
                got = _cl(k, (k + 1) // 2) - _cl(k, (k - 1) // 2)
                want = PolyPair(_half_xy(k, eps), LaurentPoly())
            else:
                got = _cl(k, (k + 2) // 2) - _cl(k, (k - 2) // 2)
                want = PolyPair(X * k + Y * eps, LaurentPoly())
            if got != want:
                bad.append(("special", k))
    return bad


def recompose_cl(k: int, terms: list[tuple[int, int]]) -> PolyPair:
    """Recompose closure generators, skipping the trivial index 0."""
    dec = [(GeneratorId(CL_JPSI_PLUS, n, k), m) for n, m in terms if n and m]
    return recompose(dec, LinkLH(k))


@check("combination", "closure combination identities hold for |k| <= 6")
def _combination():
    bad = combination_failures(6)
    return not bad, f"failures {bad}" if bad else ""


# -- kernels -----------------------------------------------------------------------------------


@check("kernel", "generator values lie in the kernels, |n| <= 8, |lambda| <= 6")
def _kernels():
    from .realization import CL_JPSI_MINUS, JPSI_MINUS, REFL_SUM_MINUS

    bad = []
    for n in range(-8, 9):
        if not n:
            continue
        for fam in (JPSI_PLUS, JPSI_MINUS, REFL_SUM_PLUS, REFL_SUM_MINUS):
            if Delta(generator_value(GeneratorId(fam, n), StringLH())) != (0, 0, 0, 0):
                bad.append((fam, n))
        for fam in (JPSI_PLUS, JPSI_MINUS):
            if delta_hom(generator_value(GeneratorId(fam, n), StringLC())) != (0, 0, 0):
                bad.append((fam, n, "lc"))
        for lam in range(-6, 7):
            for fam in (CL_JPSI_PLUS, CL_JPSI_MINUS):
                v = generator_value(GeneratorId(fam, n, lam), LinkLH(lam))
                if Delta_lambda(v, lam) != (0, 0, 0):
                    bad.append((fam, n, lam))
    return not bad, f"outside kernel: {bad}" if bad else ""


@check("kernel", "folding map sends t^-3 to t^3")
def _fold():
    return _eq(abs_k(_tn(-3), 0), _tn(3))


# -- generalized Sato-Levine invariant ------------------------------------------------------------


@check("triviality", "beta_0(Psi # reflected Psi) = 0")
def _triv0():
    psi = fixture("psi")
    return _eq(beta_k(stack(psi, reflect(psi)), 0), 0)


@check("triviality", "beta_1(Psi # reflected Psi) = 2")
def _triv1():
    psi = fixture("psi")
    return _eq(beta_k(stack(psi, reflect(psi)), 1), 2)


@check("triviality", "Psi # reflected Psi is not self C2-equivalent to the trivial string link")
def _triv_classify():
    psi = fixture("psi")
    cert = classify_string_links(stack(psi, reflect(psi)), fixture("xi2"))
    ok = (
        cert.invariants["lk"] == (0, 0)
        and cert.invariants["beta_0"] == (0, 0)
        and cert.invariants["beta_1"] == (2, 0)
        and not cert.verdicts["self_c2"]
        and cert.distinguishing == "beta_1"
    )
    return ok, str(cert.to_json())


@check("triviality", "Whitehead link is link homotopic but not self C2-equivalent to the unlink")
def _wh_classify():
    cert = classify_links(fixture("whitehead"), fixture("unlink2"))
    ok = cert.verdicts["link_homotopy"] and not cert.verdicts["self_c2"]
    return ok, str(cert.to_json())


GROUPS = tuple(dict.fromkeys(g for g, _, _ in _CHECKS))


def run_checks(filter: str | None = None) -> list[CheckResult]:
    out = []
    for group, name, fn in _CHECKS:
        if filter and filter != group:
            continue
        try:
            ok, detail = fn()
        except Exception as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
            if not str(exc):
                detail += traceback.format_exc(limit=1)
        out.append(CheckResult(group, name, bool(ok), detail if not ok else ""))
    return out
