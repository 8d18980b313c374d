"""
Batch front-end: compute the polynomial tables, cross-validate the
independent routes, and emit verification reports.

Output is byte-deterministic for fixed flags: term order, JSON key order,
and case order are all fixed.  The exit code is 0 exactly when every
requested cross-check passed.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .permutations import PatternSet, max_enum_bound, nm_polynomial
from .polynomials import XYPoly, YPoly
from .reciprocity import nm_from_u, nm_y_values, u_from_bruteforce, u_via_brick_sum
from .recursions import FamilySpec, default_specs, u_sequence
from .tabloids import FilledTabloid, involution_J, is_fixed_point
from .verify import run_suite


def _detect_family(g: PatternSet) -> FamilySpec | None:
    candidates = list(default_specs())
    candidates += [FamilySpec("tau_a", a=a) for a in range(2, 7)]
    candidates += [FamilySpec("1324p", p=p) for p in range(5, 9)]
    candidates += [FamilySpec("1324p_12p", p=p) for p in range(5, 9)]
    candidates += [FamilySpec("gamma22s", s=s) for s in range(2, 7)]
    for spec in candidates:
        if spec.pattern_set() == g:
            return spec
    return None


def _family_from_args(args) -> FamilySpec:
    params = {name: getattr(args, name) for name in ("a", "p", "k1", "k2", "s")
              if getattr(args, name, None) is not None}
    return FamilySpec(args.family, **params)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def cmd_nm(args) -> int:
    g = PatternSet.from_text(args.gamma)
    n = args.n
    if args.via_u:
        spec = _family_from_args(args) if args.family else _detect_family(g)
        if spec is None:
            sys.stderr.write("error: --via-u needs a recursion family; none matches this "
                             "pattern set, pass --family explicitly\n")
            return 2
        if spec.pattern_set() != g:
            sys.stderr.write(f"error: family {spec.label()} does not generate patterns "
                             f"{g.to_text()}\n")
            return 2
        rows = nm_from_u(u_sequence(spec, n), n)[1:]
    else:
        bound = max_enum_bound()
        if n > bound:
            sys.stderr.write(
                f"error: n={n} is above the brute-force guard ({bound}); pass --via-u to use "
                "a recursion family, or raise PATLAB_MAX_ENUM\n")
            return 2
        rows = [nm_polynomial(k, g) for k in range(1, n + 1)]
    if args.format == "text":
        text = "".join(f"{k} | {p.to_text()}\n" for k, p in enumerate(rows, start=1))
    elif args.format == "json":
        text = _json_dumps({
            "command": "nm", "gamma": g.to_text(), "n": n, "via_u": bool(args.via_u),
            "rows": [{"n": k, "poly": p.to_json_obj()} for k, p in enumerate(rows, start=1)],
        })
    else:
        text = _csv_text(["n", "terms"],
                         [[k, json.dumps(p.to_json_obj()["terms"], separators=(",", ":"))]
                          for k, p in enumerate(rows, start=1)])
    _emit(text, args.out)
    return 0


def cmd_u(args) -> int:
    spec: FamilySpec | None = None
    g: PatternSet | None = None
    if args.family:
        spec = _family_from_args(args)
    if args.gamma:
        g = PatternSet.from_text(args.gamma)
    if spec and g and spec.pattern_set() != g:
        sys.stderr.write(f"error: family {spec.label()} generates "
                         f"{spec.pattern_set().to_text()}, not {g.to_text()}\n")
        return 2
    if spec and not g:
        g = spec.pattern_set()
    if not spec and not g:
        sys.stderr.write("error: pass --gamma and/or --family\n")
        return 2

    methods = ["oracle", "bricksum", "recursion"] if args.method == "all" else [args.method]
    if "recursion" in methods and spec is None:
        spec = _detect_family(g)
        if spec is None:
            if args.method == "all":
                methods.remove("recursion")
            else:
                sys.stderr.write(f"error: no recursion family matches {g.to_text()}; "
                                 "pass --family\n")
                return 2
    n = args.n
    columns: dict[str, list[YPoly] | None] = {"oracle": None, "bricksum": None, "recursion": None}
    if "oracle" in methods or "bricksum" in methods:
        bound = max_enum_bound()
        if n > bound:
            sys.stderr.write(
                f"error: n={n} is above the brute-force guard ({bound}) for method "
                f"'{args.method}'; use --method recursion or raise PATLAB_MAX_ENUM\n")
            return 2
    if "oracle" in methods:
        columns["oracle"] = u_from_bruteforce(g, n)
    if "bricksum" in methods:
        nm = nm_y_values(g, n)
        columns["bricksum"] = [YPoly.one()] + [u_via_brick_sum(g, k, nm) for k in range(1, n + 1)]
    if "recursion" in methods:
        columns["recursion"] = u_sequence(spec, n)

    all_agree = True
    rows = []
    for k in range(1, n + 1):
        present = [(m, columns[m][k]) for m in methods if columns[m] is not None]
        agree = all(p == present[0][1] for _, p in present)
        all_agree &= agree
        rows.append((k, dict(present), agree))

    if args.format == "text":
        lines = []
        for k, vals, agree in rows:
            cells = " | ".join(vals[m].to_text() for m in methods if m in vals)
            flag = " | agree" if len(vals) > 1 and agree else (" | DISAGREE" if len(vals) > 1 else "")
            lines.append(f"{k} | {cells}{flag}\n")
        text = "".join(lines)
    elif args.format == "json":
        text = _json_dumps({
            "command": "u", "gamma": g.to_text() if g else None,
            "family": spec.label() if spec else None, "n": n,
            "rows": [{"n": k, "agree": agree,
                      **{m: p.to_json_obj() for m, p in vals.items()}}
                     for k, vals, agree in rows],
        })
    else:
        header = ["n"] + methods + (["agree"] if len(methods) > 1 else [])
        body = []
        for k, vals, agree in rows:
            row = [k] + [json.dumps(vals[m].to_json_obj()["terms"], separators=(",", ":"))
                         for m in methods if m in vals]
            if len(methods) > 1:
                row.append("yes" if agree else "no")
            body.append(row)
        text = _csv_text(header, body)
    _emit(text, args.out)
    return 0 if all_agree else 1


def cmd_verify(args) -> int:
    report = run_suite(args.suite, max_n=args.max_n)
    failures = sum(1 for c in report["cases"] if not c["pass"])
    report["failures"] = failures
    _emit(_json_dumps(report), args.out)
    return 0 if failures == 0 else 1


def cmd_trace(args) -> int:
    g = PatternSet.from_text(args.gamma)
    bricks = tuple(int(v) for v in args.bricks.split(","))
    sigma = tuple(int(v) for v in args.sigma.split(","))
    o = FilledTabloid(bricks, sigma)
    image = involution_J(g, o)
    lines = [
        f"object : {o.render()}",
        f"sign   : {o.sign():+d}",
        f"weight : y^{o.weight_exponent()}",
    ]
    if image == o:
        lines.append("fixed point")
    else:
        lines.append(f"image  : {image.render()}")
        back = involution_J(g, image)
        lines.append(f"back   : {back.render()}" + ("  (returns)" if back == o else "  (BROKEN)"))
    _emit("".join(line + "\n" for line in lines), args.out)
    if image != o and involution_J(g, image) != o:
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="patlab",
        description="Exact tables and cross-validation for consecutive-pattern-avoiding "
                    "permutations weighted by left-to-right minima and descents.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family_params(p):
        p.add_argument("--family", choices=["14253_15243", "142536", "tau_a", "1324", "1324p",
                                            "k1k2", "1324_123", "1324p_12p", "gamma22s"])
        p.add_argument("--a", type=int)
        p.add_argument("--p", type=int)
        p.add_argument("--k1", type=int)
        p.add_argument("--k2", type=int)
        p.add_argument("--s", type=int)

    p_nm = sub.add_parser("nm", help="weight polynomials of the match-free permutations")
    p_nm.add_argument("--gamma", required=True,
                      help="patterns: digit words '14253,15243' or bracketed '[1,10,2]'")
    p_nm.add_argument("--n", type=int, required=True)
    p_nm.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p_nm.add_argument("--via-u", action="store_true",
                      help="derive rows from a recursion family instead of enumeration")
    p_nm.add_argument("--out")
    add_family_params(p_nm)
    p_nm.set_defaults(func=cmd_nm)

    p_u = sub.add_parser("u", help="reciprocal polynomials u_n(y), by any route")
    p_u.add_argument("--gamma")
    p_u.add_argument("--n", type=int, required=True)
    p_u.add_argument("--method", choices=["oracle", "bricksum", "recursion", "all"],
                     default="all")
    p_u.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p_u.add_argument("--out")
    add_family_params(p_u)
    p_u.set_defaults(func=cmd_u)

    p_v = sub.add_parser("verify", help="run a verification suite, JSON report to stdout")
    p_v.add_argument("--suite", choices=["involution", "lemma", "determinants",
                                         "recursions", "all"], default="all")
    p_v.add_argument("--max-n", type=int, default=5, dest="max_n")
    p_v.add_argument("--out")
    p_v.set_defaults(func=cmd_verify)

    p_t = sub.add_parser("trace", help="render a filled tabloid and one involution step")
    p_t.add_argument("--gamma", required=True)
    p_t.add_argument("--bricks", required=True, help="comma-separated brick lengths, e.g. 2,4,3")
    p_t.add_argument("--sigma", required=True, help="comma-separated filling, e.g. 1,9,6,...")
    p_t.add_argument("--out")
    p_t.set_defaults(func=cmd_trace)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
