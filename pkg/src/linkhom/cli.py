"""Command-line front end.

Exit status: 0 on success, 1 when a check fails or a target is outside its
coset, 2 on input or resource errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import realization as rz
from .classify import classify
from .diagram import Diagram, DiagramError, linking_number, validate
from .homotopy import (
    LINK_CTX,
    Trace,
    TraceError,
    check_constraints,
    run_trace,
    sigma_kirk,
    sigma_link,
    sigma_string,
)
from .polys import PolyPair
from .skein import DEFAULT_BUDGET, ResourceExceeded, beta, casson, coeff, conway, string_betas, twisted_closure


class UsageError(Exception):
    pass


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _load_diagram(path: str) -> Diagram:
    try:
        D = Diagram.from_json(_load_json(path))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{path}: cannot parse diagram: {exc}") from None
    rep = validate(D)
    if not rep.ok:
        raise UsageError(f"{path}: invalid diagram: {rep}")
    return D


def _emit(args, data: dict, text: str) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


# -- commands ------------------------------------------------------------------------------


def cmd_invariants(args) -> int:
    D = _load_diagram(args.file)
    budget = args.budget
    if D.is_string_link:
        b0, b1 = string_betas(D, budget)
        data = {
            "kind": D.kind,
            "lk": linking_number(D),
            "beta0": b0,
            "beta1": b1,
            "closure_conway": conway(twisted_closure(D, linking_number(D)), budget).to_json(),
        }
    elif D.n_components() == 1:
        p = conway(D, budget)
        data = {"kind": "knot", "conway": p.to_json(), "c2": coeff(p, 2)}
    else:
        p = conway(D, budget)
        data = {
            "kind": D.kind,
            "lk": linking_number(D),
            "conway": p.to_json(),
            "c2": [casson(D, 1, budget), casson(D, 2, budget)],
            "c3": coeff(p, 3),
            "beta": beta(D, budget),
        }
    text = "\n".join(f"{k}: {v}" for k, v in data.items())
    if "conway" in data:
        text += f"\nconway polynomial: {conway(D, budget)}"
    _emit(args, data, text)
    return 0


def cmd_sigma(args) -> int:
    try:
        tr = Trace.from_json(_load_json(args.trace_file))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, TraceError):
            raise
        raise UsageError(f"{args.trace_file}: cannot parse trace: {exc}") from None
    s = run_trace(tr, args.budget)
    data: dict = {"summary": s.to_json()}
    lines = [f"context: {s.context}" + (f" (lambda = {s.lam})" if s.lam is not None else "")]
    for r in s.records:
        lines.append(f"  double point: component {r.component}, epsilon {r.epsilon:+d}, l {r.l}"
                     + (f", l' {r.l_prime}" if r.l_prime is not None else ""))
    if s.context == LINK_CTX:
        sig = sigma_link(s)
        data["Sigma"] = sig.to_json()
        lines.append(f"Sigma = {sig}")
    else:
        sig = sigma_string(s)
        kirk = sigma_kirk(s)
        data["Sigma"] = sig.to_json()
        data["sigma"] = kirk.to_json()
        lines.append(f"Sigma = {sig}")
        lines.append(f"sigma = {kirk}")
    status = 0
    if args.constraints:
        rep = check_constraints(s, args.budget)
        data["constraints"] = rep.to_json()
        lines.append(str(rep))
        status = 0 if rep.ok else 1
    _emit(args, data, "\n".join(lines))
    return status


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse integer vector {text!r}") from None


def cmd_realize(args) -> int:
    try:
        target = PolyPair.parse(args.target)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    kind = args.context
    width = 4 if kind == rz.STRING_LH else 3
    coset = _parse_ints(args.coset) if args.coset else (0,) * width
    if kind == rz.LINK_LH and args.lam is None:
        raise UsageError("--context link-lh needs --lambda")
    try:
        ctx = rz.Context(kind, coset, args.lam if kind == rz.LINK_LH else None)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        dec = rz.realize(target, ctx)
    except rz.NotInCosetError as exc:
        data = {"in_coset": False, "coordinate": exc.coordinate, "reason": str(exc)}
        _emit(args, data, f"NotInCoset: {exc}")
        return 1
    data = {"in_coset": True, "decomposition": dec.to_json(), "offset": dec.offset.to_json()}
    lines = [f"{m:+d} x {g}" for g, m in dec.terms] or ["(empty combination)"]
    if not dec.offset.is_zero():
        lines.append(f"offset {dec.offset}")
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_classify(args) -> int:
    A = _load_diagram(args.file_a)
    B = _load_diagram(args.file_b)
    if args.string and not (A.is_string_link and B.is_string_link):
        raise UsageError("--string needs two string-link files")
    if A.kind != B.kind:
        raise UsageError(f"kind mismatch: {A.kind} vs {B.kind}")
    cert = classify(A, B, args.budget)
    _emit(args, cert.to_json(), str(cert))
    return 0


def cmd_verify(args) -> int:
    from .verify import GROUPS, run_checks

    if args.filter and args.filter not in GROUPS:
        raise UsageError(f"unknown check group {args.filter!r}; choose from {', '.join(GROUPS)}")
    results = run_checks(args.filter)
    ok = all(r.passed for r in results)
    data = {"passed": ok, "checks": [r.to_json() for r in results]}
    text = "\n".join(str(r) for r in results) + f"\n{sum(r.passed for r in results)}/{len(results)} passed"
    _emit(args, data, text)
    return 0 if ok else 1


# -- entry point ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS, help="crossing budget for the skein engine")

    ap = argparse.ArgumentParser(prog="linkhom", parents=[common],
                                 description="link-homotopy invariants of two-component links and string links")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="linking number, Conway coefficients, beta")
    p.add_argument("file")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("classify", parents=[common], help="decide self C2-equivalence of two diagrams")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--string", action="store_true", help="inputs are string links")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sigma", parents=[common], help="replay a homotopy trace")
    p.add_argument("trace_file")
    p.add_argument("--constraints", action="store_true", help="check the beta constraint identities")
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("realize", parents=[common], help="decompose a coset element into generators")
    p.add_argument("--target", required=True, help='two Laurent polynomials "f;g", e.g. "t-1;1-t"')
    p.add_argument("--context", required=True, choices=rz.CONTEXT_KINDS)
    p.add_argument("--lambda", dest="lam", type=int, default=None, help="linking number (link-lh)")
    p.add_argument("--coset", default=None, help="target vector a,b,c[,d] (default zero)")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("verify", parents=[common], help="run the reference-value checks")
    p.add_argument("--filter", default=None, help="only run one check group")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.json = getattr(args, "json", False)
    args.budget = getattr(args, "budget", DEFAULT_BUDGET)
    try:
        return args.func(args)
    except (UsageError, DiagramError, TraceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ResourceExceeded, rz.ResourceExceeded) as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
