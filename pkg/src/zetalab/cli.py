"""Batch command-line frontend.

Subcommands: eval, coeff, certify, afe, characters, tail.  Output is
human-readable by default; --json emits a versioned document (schema
"1") with every float rendered at 17 significant digits and complex
numbers as [re, im] pairs, so identical requests produce byte-identical
output.  --csv is available for the tabular subcommands.

Exit codes: 0 success, 1 validation error, 2 failed bound assertion.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import bounds as bounds_mod
from .afe import afe_hurwitz, afe_l
from .characters import enumerate_characters
from .coefficients import coefficient_table
from .evaluate import HurwitzArgs, LerchArgs, hurwitz_deriv, l_deriv, lerch_deriv, z_deriv
from .sawtooth import TailIntegralSpec, oscillatory_tail, sawtooth_tail

__all__ = ["main", "run", "render_json"]


# ---------------------------------------------------------------------------
# deterministic serialization
# ---------------------------------------------------------------------------


def _fmt_float(x: float) -> str:
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    return f"{x:.17g}"


def _render(obj) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, complex):
        return f"[{_fmt_float(obj.real)}, {_fmt_float(obj.imag)}]"
    if isinstance(obj, str):
        return '"' + obj.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(obj, dict):
        inner = ", ".join(f"{_render(str(k))}: {_render(v)}" for k, v in obj.items())
        return "{" + inner + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_render(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj)!r}")


def render_json(payload: dict) -> str:
    doc = {"schema": "1"}
    doc.update(payload)
    return _render(doc)


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise argparse.ArgumentTypeError("complex values are written re or re,im")


def _pick_character(q: int, label: int):
    chars = enumerate_characters(q)
    for chi in chars:
        if chi.label == label:
            return chi
    raise SystemExit(f"error: no character mod {q} has label {label}")


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_characters(args) -> tuple[int, str]:
    chars = enumerate_characters(args.q)
    rows = [
        {
            "label": chi.label,
            "conductor": chi.conductor,
            "parity": chi.parity,
            "primitive": chi.is_primitive,
            "principal": chi.is_principal,
            "values": list(chi.values),
        }
        for chi in chars
    ]
    if args.json:
        return 0, render_json({"command": "characters", "q": args.q, "characters": rows})
    lines = [f"characters mod {args.q}: {len(rows)}"]
    for row in rows:
        vals = " ".join(f"({v.real:+.3f},{v.imag:+.3f})" for v in row["values"])
        lines.append(
            f"label {row['label']:>3}  conductor {row['conductor']:>3}  parity {row['parity']:+d}  "
            f"primitive {str(row['primitive']):<5}  {vals}"
        )
    return 0, "\n".join(lines)


def _cmd_tail(args) -> tuple[int, str]:
    spec = TailIntegralSpec(
        lower=args.x,
        shift=args.alpha,
        exponent=complex(args.re_a, args.im_a),
        log_power=args.r,
        oscillation=args.lam,
    )
    res = oscillatory_tail(spec) if args.lam else sawtooth_tail(spec)
    payload = {
        "command": "tail",
        "x": args.x,
        "alpha": args.alpha,
        "exponent": complex(args.re_a, args.im_a),
        "r": args.r,
        "lambda": args.lam,
        "value": res.value,
        "error_bound": res.error_bound,
    }
    if args.json:
        return 0, render_json(payload)
    return 0, f"value = {res.value}  error_bound = {res.error_bound:.3e}"


def _cmd_eval(args) -> tuple[int, str]:
    s = args.s
    if args.kind == "hurwitz":
        res = hurwitz_deriv(HurwitzArgs(s=s, alpha=args.alpha, order=args.r, split=args.x))
        params = {"alpha": args.alpha}
    elif args.kind == "z":
        res = z_deriv(s, args.a, args.q, args.r, X=args.x)
        params = {"a": args.a, "q": args.q}
    elif args.kind == "l":
        chi = _pick_character(args.q, args.label)
        res = l_deriv(s, chi, args.r, X=args.x)
        params = {"q": args.q, "label": args.label}
    else:
        res = lerch_deriv(LerchArgs(lam=args.lam, alpha=args.alpha, s=s, order=args.r, split=args.x))
        params = {"lambda": args.lam, "alpha": args.alpha}
    payload = {
        "command": "eval",
        "kind": args.kind,
        "s": s,
        "r": args.r,
        "x": args.x,
        **params,
        "value": res.value,
        "error_bound": res.error_bound,
    }
    if args.json:
        return 0, render_json(payload)
    return 0, f"value = {res.value}  error_bound = {res.error_bound:.3e}"


def _cmd_coeff(args) -> tuple[int, str]:
    kind_map = {
        "gamma": "stieltjes_gamma",
        "beta": "beta_at_zero",
        "gamma-aq": "gamma_aq",
        "gamma-chi": "gamma_chi",
        "lerch": "lerch_at_one",
        "l-zero": "l_deriv_at_zero",
    }
    kind = kind_map[args.kind]
    kwargs = {}
    if kind in ("stieltjes_gamma", "beta_at_zero"):
        kwargs["alpha"] = args.alpha
    elif kind == "gamma_aq":
        kwargs["a"], kwargs["q"] = args.a, args.q
    elif kind in ("gamma_chi", "l_deriv_at_zero"):
        kwargs["chi"] = _pick_character(args.q, args.label)
    else:
        kwargs["lam"], kwargs["alpha"] = args.lam, args.alpha
    table = coefficient_table(kind, args.r_max, **kwargs)
    rows = [
        {"r": e.order, "value": e.value, "error": e.error, "route": e.route}
        for e in table.entries
    ]
    if args.json:
        return 0, render_json(
            {"command": "coeff", "kind": args.kind, "parameters": table.parameters, "entries": rows}
        )
    if args.csv:
        lines = ["r,value_re,value_im,error,route"]
        for row in rows:
            v = row["value"]
            lines.append(f"{row['r']},{v.real:.17g},{v.imag:.17g},{row['error']:.17g},{row['route']}")
        return 0, "\n".join(lines)
    lines = [f"{table.kind} {table.parameters}"]
    for row in rows:
        lines.append(f"r={row['r']:>2}  {row['value']}  +- {row['error']:.2e}  [{row['route']}]")
    return 0, "\n".join(lines)


def _merge_reports(bound_id, parts):
    cases = tuple(c for rep in parts for c in rep.cases)
    info = tuple(c for rep in parts for c in rep.informational)
    return bounds_mod.BoundReport(bound_id, cases, info)


def _certify_report(args):
    workers = args.threads if args.threads and args.threads > 0 else (os.cpu_count() or 1)
    if args.bound == "t2-ib":
        return bounds_mod.certify_T2_Ib(r_max=args.r_max or 20)
    if args.bound == "t2-iib":
        return bounds_mod.certify_T2_IIb(r_max=args.r_max or 20)
    if args.bound == "t2-iiib":
        return bounds_mod.certify_T2_IIIb(r_max=args.r_max or 10)
    if args.bound == "t3":
        q_set = tuple(args.q) if args.q else bounds_mod.DEFAULT_Q_SET
        r_max = args.r_max or 8
        if workers > 1 and len(q_set) > 1:
            # independent per-q sweeps, merged in q order for determinism
            with ThreadPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(lambda q: bounds_mod.certify_T3((q,), r_max), q_set))
            return _merge_reports("T3", parts)
        return bounds_mod.certify_T3(q_set=q_set, r_max=r_max)
    if args.bound == "ishikawa":
        return bounds_mod.ishikawa_compare(args.q[0] if args.q else 5)
    return bounds_mod.certify_polya_vinogradov()


def _cmd_certify(args) -> tuple[int, str]:
    report = _certify_report(args)
    asserted = report.bound_id not in ("Ishikawa_compare",)
    status = 0 if (report.all_pass or not asserted) else 2
    rows = [
        {"parameters": c.parameters, "measured": c.measured, "bound": c.bound, "margin": c.margin}
        for c in report.cases
    ]
    info = [
        {"parameters": c.parameters, "measured": c.measured, "bound": c.bound, "margin": c.margin}
        for c in report.informational
    ]
    if args.json:
        payload = {
            "command": "certify",
            "bound_id": report.bound_id,
            "all_pass": report.all_pass,
            "worst_margin": report.worst_margin if report.cases else None,
            "cases": rows,
            "informational": info,
        }
        return status, render_json(payload)
    if args.csv:
        lines = ["measured,bound,margin,parameters"]
        for row in rows:
            lines.append(
                f"{row['measured']:.17g},{row['bound']:.17g},{row['margin']:.17g},\"{row['parameters']}\""
            )
        return status, "\n".join(lines)
    lines = [
        f"bound {report.bound_id}: {len(rows)} cases, all_pass={report.all_pass}, "
        f"worst_margin={report.worst_margin if rows else 'n/a'}"
    ]
    for row in rows[:40]:
        lines.append(
            f"  {row['parameters']}  measured={row['measured']:.6e}  bound={row['bound']:.6e}  "
            f"margin={row['margin']:.6e}"
        )
    if len(rows) > 40:
        lines.append(f"  ... {len(rows) - 40} further cases")
    return status, "\n".join(lines)


def _cmd_afe(args) -> tuple[int, str]:
    if args.kind == "hurwitz":
        res = afe_hurwitz(args.s, args.alpha, args.r, args.x)
        params = {"alpha": args.alpha}
    else:
        chi = _pick_character(args.q, args.label)
        res = afe_l(args.s, chi, args.r, args.x)
        params = {"q": args.q, "label": args.label}
    payload = {
        "command": "afe",
        "kind": args.kind,
        "s": args.s,
        "r": args.r,
        "x": args.x,
        **params,
        "value": res.value,
        "error_bound": res.error_bound,
    }
    if args.json:
        return 0, render_json(payload)
    return 0, f"value = {res.value}  error_bound = {res.error_bound:.3e}"


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="zetalab",
        description="Evaluate Hurwitz/Lerch zeta and Dirichlet L-functions, extract "
        "expansion coefficients, and certify their explicit bounds.",
    )
    p.add_argument("--threads", type=int, default=0, help="worker threads for sweeps (0 = all cores)")
    p.add_argument("--output", type=str, default=None, help="write the report to this file instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("characters", help="tabulate the characters mod q")
    pc.add_argument("--q", type=int, required=True)
    pc.add_argument("--json", action="store_true")

    pt = sub.add_parser("tail", help="sawtooth/oscillatory tail integral (debugging)")
    pt.add_argument("--x", type=float, required=True)
    pt.add_argument("--alpha", type=float, required=True)
    pt.add_argument("--re-a", dest="re_a", type=float, required=True)
    pt.add_argument("--im-a", dest="im_a", type=float, default=0.0)
    pt.add_argument("--r", type=int, default=0)
    pt.add_argument("--lambda", dest="lam", type=float, default=0.0)
    pt.add_argument("--json", action="store_true")

    pe = sub.add_parser("eval", help="evaluate a zeta-family derivative")
    pe.add_argument("--kind", choices=("hurwitz", "z", "l", "lerch"), required=True)
    pe.add_argument("--s", type=_parse_complex, required=True, metavar="RE,IM")
    pe.add_argument("--alpha", type=float, default=1.0)
    pe.add_argument("--q", type=int, default=1)
    pe.add_argument("--a", type=int, default=1)
    pe.add_argument("--label", type=int, default=1)
    pe.add_argument("--lambda", dest="lam", type=float, default=0.5)
    pe.add_argument("--r", type=int, default=0)
    pe.add_argument("--x", type=float, default=None)
    pe.add_argument("--json", action="store_true")

    pco = sub.add_parser("coeff", help="expansion coefficient tables")
    pco.add_argument(
        "--kind", choices=("gamma", "beta", "gamma-aq", "gamma-chi", "lerch", "l-zero"), required=True
    )
    pco.add_argument("--r-max", dest="r_max", type=int, required=True)
    pco.add_argument("--alpha", type=float, default=1.0)
    pco.add_argument("--q", type=int, default=4)
    pco.add_argument("--a", type=int, default=1)
    pco.add_argument("--label", type=int, default=1)
    pco.add_argument("--lambda", dest="lam", type=float, default=0.5)
    pco.add_argument("--json", action="store_true")
    pco.add_argument("--csv", action="store_true")

    pce = sub.add_parser("certify", help="run a bound certification sweep")
    pce.add_argument(
        "--bound", choices=("t2-ib", "t2-iib", "t2-iiib", "t3", "ishikawa", "polya"), required=True
    )
    pce.add_argument("--r-max", dest="r_max", type=int, default=None)
    pce.add_argument("--q", type=int, nargs="*", default=None)
    pce.add_argument("--json", action="store_true")
    pce.add_argument("--csv", action="store_true")

    pa = sub.add_parser("afe", help="hybrid strip evaluation")
    pa.add_argument("--kind", choices=("hurwitz", "l"), required=True)
    pa.add_argument("--s", type=_parse_complex, required=True, metavar="RE,IM")
    pa.add_argument("--alpha", type=float, default=1.0)
    pa.add_argument("--q", type=int, default=4)
    pa.add_argument("--label", type=int, default=1)
    pa.add_argument("--r", type=int, default=0)
    pa.add_argument("--x", type=float, required=True)
    pa.add_argument("--json", action="store_true")
    return p


_HANDLERS = {
    "characters": _cmd_characters,
    "tail": _cmd_tail,
    "eval": _cmd_eval,
    "coeff": _cmd_coeff,
    "certify": _cmd_certify,
    "afe": _cmd_afe,
}


def run(argv: list[str]) -> int:
    """Execute a request; returns the exit status and prints the report."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        status, text = _HANDLERS[args.command](args)
    except (ValueError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return status


def main() -> None:
    sys.exit(run(sys.argv[1:]))
