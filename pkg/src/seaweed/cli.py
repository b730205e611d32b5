"""Command line interface.

Exit codes: 0 success or agreement, 1 mathematical disagreement or failed
sweep, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import __version__
from .compositions import SeaweedSpec, SpecError, parse_spec
from .enumeration import (
    catalog_rows,
    frobenius_search,
    verify_formulas,
    verify_necessary,
    verify_oracle,
    verify_random,
    write_catalog_csv,
)
from .formulas import FormulaDomainError, formula_index
from .homotopy import homotopy_type, is_homotopically_trivial
from .meander import build_meander, components, index, index_via_permutation
from .oracle import DEFAULT_TRIALS, oracle_dim, oracle_report
from .panyushev import index_c
from .render import to_ascii, to_dot
from .signature import index_via_signature, wind_down

log = logging.getLogger("seaweed")

OK, DISAGREE, USAGE = 0, 1, 2
ORACLE_MAX_DIM = 400
METHODS = ["meander", "permutation", "panyushev", "signature", "formula", "oracle", "all"]


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _spec(text: str) -> SeaweedSpec:
    try:
        return parse_spec(text)
    except SpecError as exc:
        raise UsageError(str(exc)) from exc


# ----------------------------------------------------------------- index


def _method_value(spec: SeaweedSpec, method: str, args) -> tuple[int | None, str]:
    """Return (value, note). ``None`` with a note means "positive, exact value unknown"."""
    if method == "meander":
        return index(build_meander(spec)), ""
    if method == "permutation":
        return index_via_permutation(build_meander(spec)), ""
    if method == "panyushev":
        if spec.algebra != "C":
            raise UsageError("panyushev method applies to type C only")
        return index_c(spec)[0], ""
    if method == "signature":
        if spec.algebra != "A":
            raise UsageError("signature method applies to type A only")
        return index_via_signature(spec.a, spec.b), ""
    if method == "formula":
        try:
            name, value = formula_index(spec)
        except FormulaDomainError as exc:
            raise UsageError(str(exc)) from exc
        return value, name
    if method == "oracle":
        rep = oracle_report(spec, trials=args.trials, seed=args.seed)
        return rep["index"], f"dim={rep['dim']} seed={args.seed}"
    raise UsageError(f"unknown method {method!r}")


def cmd_index(args) -> int:
    spec = _spec(args.spec)
    if args.method != "all":
        value, note = _method_value(spec, args.method, args)
        shown = "> 0" if value is None else str(value)
        _emit(
            args,
            {"spec": spec.render(), "values": {args.method: value}, "notes": {args.method: note},
             "consistent": True, "skipped": {}},
            f"{spec.render()}  {args.method}: {shown}" + (f"  ({note})" if note else ""),
        )
        return OK

    methods = ["meander", "permutation"]
    methods.append("signature" if spec.algebra == "A" else "panyushev")
    methods += ["formula", "oracle"]
    values: dict[str, int | None] = {}
    notes: dict[str, str] = {}
    skipped: dict[str, str] = {}
    for m in methods:
        if m == "formula":
            try:
                formula_index(spec)
            except FormulaDomainError:
                skipped[m] = "no closed formula covers this spec"
                continue
        if m == "oracle":
            dim = oracle_dim(spec)
            if dim > ORACLE_MAX_DIM:
                skipped[m] = f"dimension {dim} > {ORACLE_MAX_DIM}"
                log.warning("oracle skipped for %s: dimension %d", spec.render(), dim)
                continue
        values[m], notes[m] = _method_value(spec, m, args)
    exact = {v for v in values.values() if v is not None}
    consistent = len(exact) == 1 and (
        None not in values.values() or next(iter(exact)) > 0
    )
    lines = [spec.render()]
    for m in methods:
        if m in skipped:
            lines.append(f"  {m:<12} skipped ({skipped[m]})")
        else:
            shown = "> 0" if values[m] is None else str(values[m])
            lines.append(f"  {m:<12} {shown}" + (f"  ({notes[m]})" if notes[m] else ""))
    lines.append("  consistent" if consistent else "  DISAGREEMENT")
    _emit(
        args,
        {"spec": spec.render(), "values": values, "notes": notes,
         "consistent": consistent, "skipped": skipped},
        "\n".join(lines),
    )
    return OK if consistent else DISAGREE


# ---------------------------------------------------------------- render


def cmd_render(args) -> int:
    spec = _spec(args.spec)
    m = build_meander(spec)
    if args.format == "dot":
        sys.stdout.write(to_dot(m, spec.render()))
    elif args.format == "json":
        payload = {
            "spec": spec.render(),
            "n": m.n,
            "tail": sorted(m.tail),
            "top": [list(p) for p in m.top_pairs()],
            "bottom": [list(p) for p in m.bottom_pairs()],
            "components": [c.to_json() for c in components(m)],
            "index": index(m),
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        sys.stdout.write(to_ascii(m))
    return OK


# ---------------------------------------------------------------- reduce


def cmd_reduce(args) -> int:
    spec = _spec(args.spec)
    if spec.algebra == "A":
        trace, h, idx = wind_down(spec.a, spec.b)
        payload = {
            "spec": spec.render(),
            "kind": "signature",
            "steps": [
                {"rule": s.move, "before": s.before[0].render() + "|" + s.before[1].render(),
                 "after": s.after[0].render() + "|" + s.after[1].render(),
                 "circles": s.circles, "points": s.points}
                for s in trace
            ],
            "labels": trace.labels,
            "terminal": str(h),
            "index": idx,
        }
        text = "\n".join(
            [trace.render(), f"moves: {trace.labels}", f"homotopy type: {h}", f"index: {idx}"]
        )
    else:
        idx, trace = index_c(spec)
        payload = {
            "spec": spec.render(),
            "kind": "panyushev",
            "steps": [
                {"rule": s.rule, "before": s.before.render(),
                 "after": s.after.render() if s.after is not None else None, "increment": s.increment}
                for s in trace
            ],
            "terminal": trace.terminal.render(),
            "index": idx,
        }
        text = "\n".join([trace.render(), f"terminal: {trace.terminal.render()}", f"index: {idx}"])
    _emit(args, payload, text)
    return OK


# -------------------------------------------------------------- homotopy


def cmd_homotopy(args) -> int:
    spec = _spec(args.spec)
    if spec.algebra != "A":
        raise UsageError("homotopy type is defined for type A only")
    h = homotopy_type(build_meander(spec))
    _, h2, _ = wind_down(spec.a, spec.b)
    agree = h == h2
    payload = {
        "spec": spec.render(),
        "homotopy": str(h),
        "signature_homotopy": str(h2),
        "circles": h.circles,
        "points": h.points,
        "trivial": is_homotopically_trivial(h),
        "index": h.index,
        "agree": agree,
    }
    text = f"{spec.render()}  {h!s}  (circles={h.circles}, points={h.points}, index={h.index})"
    if not agree:
        text += f"\nDISAGREEMENT: signature gives {h2!s}"
    _emit(args, payload, text)
    return OK if agree else DISAGREE


# ---------------------------------------------------------------- search


def _parts(text: str | None):
    if not text:
        return None
    try:
        k, l = text.split(",")
        return (int(k) if k not in ("", "*") else None, int(l) if l not in ("", "*") else None)
    except ValueError as exc:
        raise UsageError(f"--parts expects 'k,l', got {text!r}") from exc


def cmd_search(args) -> int:
    found = frobenius_search(args.type, args.n, prune=args.prune, parts=_parts(args.parts), jobs=args.jobs)
    if args.csv:
        write_catalog_csv(found, args.csv)
    rows = list(catalog_rows(found))
    _emit(
        args,
        {"algebra": args.type, "n": args.n, "count": len(rows), "specs": [s.render() for s in found],
         "rows": rows},
        "\n".join(s.render() for s in found) + f"\n{len(found)} Frobenius seaweeds",
    )
    return OK


# ---------------------------------------------------------------- verify


def cmd_verify(args) -> int:
    reports = []
    if not (args.formulas or args.oracle or args.random or args.necessary):
        raise UsageError("choose at least one of --formulas, --oracle, --random, --necessary")
    if args.formulas:
        reports.append(verify_formulas(args.n_max))
    if args.oracle:
        reports.append(verify_oracle(args.a_nmax, args.c_nmax, trials=args.trials, seed=args.seed, jobs=args.jobs))
    if args.random:
        for alg in ("A", "C"):
            reports.append(verify_random(alg, args.random, args.random_nmax, seed=args.seed))
    if args.necessary:
        rep, witnesses = verify_necessary(min(args.a_nmax, 8), min(args.c_nmax, 6))
        if not witnesses:
            rep.mismatches.append({"spec": "-", "note": "no witness of non-sufficiency"})
        reports.append(rep)
    passed = all(r.passed for r in reports)
    payload = {"passed": passed, "reports": [r.to_json() for r in reports]}
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
    text = "\n".join(
        f"{'PASS' if r.passed else 'FAIL'}  {r.domain}: {r.count} cases, "
        f"{len(r.mismatches)} mismatches, {r.elapsed:.2f}s"
        for r in reports
    )
    _emit(args, payload, text)
    return OK if passed else DISAGREE


# ---------------------------------------------------------------- oracle


def cmd_oracle(args) -> int:
    spec = _spec(args.spec)
    rep = oracle_report(spec, trials=args.trials, seed=args.seed)
    rep["agrees_with_meander"] = rep["index"] == index(build_meander(spec))
    text = (
        f"{rep['spec']}  dim={rep['dim']}  ranks={rep['ranks']}  index={rep['index']}  "
        f"seed={rep['seed']}  {'agrees' if rep['agrees_with_meander'] else 'DISAGREES'} with meander"
    )
    _emit(args, rep, text)
    return OK if rep["agrees_with_meander"] else DISAGREE


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "dot"], default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="seaweed", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("index", parents=[common], help="index by one or all methods")
    s.add_argument("spec")
    s.add_argument("--method", choices=METHODS, default="meander")
    s.set_defaults(func=cmd_index)

    s = sub.add_parser("render", parents=[common], help="draw the meander (text=ASCII, dot, json)")
    s.add_argument("spec")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("reduce", parents=[common], help="reduction trace (signature moves for A, inductive rules for C)")
    s.add_argument("spec")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("homotopy", parents=[common], help="plane homotopy type (type A)")
    s.add_argument("spec")
    s.set_defaults(func=cmd_homotopy)

    s = sub.add_parser("search", parents=[common], help="enumerate Frobenius seaweeds")
    s.add_argument("--type", choices=["A", "C"], required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--parts", help="'k,l': number of top and bottom parts ('*' = any)")
    s.add_argument("--prune", action="store_true", help="filter by the odd-part condition first")
    s.add_argument("--csv", help="write the catalog as CSV")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("verify", parents=[common], help="cross-validation sweeps")
    s.add_argument("--formulas", action="store_true")
    s.add_argument("--n-max", type=int, default=20)
    s.add_argument("--oracle", action="store_true")
    s.add_argument("--a-nmax", type=int, default=5)
    s.add_argument("--c-nmax", type=int, default=3)
    s.add_argument("--random", type=int, default=0, metavar="COUNT")
    s.add_argument("--random-nmax", type=int, default=200)
    s.add_argument("--necessary", action="store_true")
    s.add_argument("--out", help="write the JSON report here")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("oracle", parents=[common], help="matrix oracle report")
    s.add_argument("spec")
    s.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"seaweed: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
