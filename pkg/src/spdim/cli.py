"""Command-line front end: dim / colorings / character / verify / table / fit.

Exit codes: 0 success, 1 verification failure, 2 parameter error,
3 precision failure, 4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import datetime
import io
import json
import os
import sys
from fractions import Fraction

import gmpy2

from . import lollipop, modules, verlinde, weyl
from .errors import (
    BadParameters,
    InsufficientPoints,
    ListCapExceeded,
    NoSuchFormula,
    PrecisionExhausted,
    SpdimError,
    WeightUndefined,
)
from .weights import alcove_pairing

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_PARAMS = 2
EXIT_PRECISION = 3
EXIT_CAP = 4

SUITES = ("oracle", "appendixb", "weyl", "jantzen", "alcove", "lemmas",
          "interpolate", "all")

# enumeration-backed checks stay on a grid that runs in seconds
ENUM_PMAX = 11
ENUM_GMAX = 4


def primes_between(lo: int, hi: int) -> list[int]:
    out = []
    p = int(gmpy2.next_prime(lo - 1))
    while p <= hi:
        out.append(p)
        p = int(gmpy2.next_prime(p))
    return out


def _emit(args, text: str) -> None:
    path = getattr(args, "output", None)
    if path:
        out_dir = os.environ.get("SPDIM_OUTPUT_DIR", "")
        if out_dir and not os.path.isabs(path):
            path = os.path.join(out_dir, path)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _json_payload(args, payload: dict) -> dict:
    if getattr(args, "timestamp", False):
        payload["timestamp"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
    return payload


def _trig_cfg(args):
    bits = getattr(args, "precision_bits", None)
    return verlinde.TrigEvalConfig(bits) if bits else None


def cmd_dim(args) -> int:
    desc = modules.ModuleDescriptor(args.p, args.g, args.c, args.eps)
    if args.method == "formula" and args.precision_bits:
        value = verlinde.dim_formula(args.p, args.g, args.c, args.eps,
                                     _trig_cfg(args))
    else:
        value = modules.dim(desc, args.method)
    if args.format == "json":
        payload = _json_payload(args, {
            "p": args.p, "g": args.g, "c": args.c, "eps": args.eps,
            "method": args.method, "dim": str(value),
        })
        _emit(args, json.dumps(payload, sort_keys=True))
    else:
        _emit(args, str(value))
    return EXIT_OK


def cmd_colorings(args) -> int:
    count = lollipop.count_colorings(args.p, args.g, args.c, args.eps)
    if not args.list:
        if args.format == "json":
            payload = _json_payload(args, {
                "p": args.p, "g": args.g, "c": args.c, "eps": args.eps,
                "count": str(count),
            })
            _emit(args, json.dumps(payload, sort_keys=True))
        else:
            _emit(args, str(count))
        return EXIT_OK

    if count > args.max_list:
        raise ListCapExceeded(
            f"{count} colorings exceed the listing cap {args.max_list}"
        )
    sigmas = lollipop.enumerate_colorings(args.p, args.g, args.c, args.eps)
    if args.format == "json":
        lines = [json.dumps(s.to_json(), sort_keys=True) for s in sigmas]
        _emit(args, "\n".join(lines) if lines else "")
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(lollipop.csv_header(args.g))
        for s in sigmas:
            writer.writerow(lollipop.csv_row(s))
        _emit(args, buf.getvalue())
    else:
        for s in sigmas:
            _emit(args, f"a={list(s.a)} b={list(s.b)} t={list(s.t)}")
    return EXIT_OK


def cmd_character(args) -> int:
    desc = modules.ModuleDescriptor(args.p, args.g, args.c, args.eps)
    char = modules.character(desc)
    highest = None
    if char.entries:
        highest = modules.highest_weight_from_character(char)

    if args.reduced:
        reduced = modules.reduced_character(desc)
        items = sorted(reduced.items(), key=lambda kv: kv[0].coords)
        if args.format == "json":
            payload = _json_payload(args, {
                "g": args.g, "modulus": args.p - 1,
                "entries": [{"weight": list(rw.coords), "mult": str(m)}
                            for rw, m in items],
            })
            _emit(args, json.dumps(payload, sort_keys=True))
        else:
            lines = [f"weight {tuple(rw.coords)} mult {m}" for rw, m in items]
            _emit(args, "\n".join(lines) if lines else "empty module")
        return EXIT_OK

    if args.format == "json":
        payload = _json_payload(args, char.to_json())
        payload["empty"] = not char.entries
        if highest is not None:
            payload["highest_weight_omega"] = list(highest.omega_coeffs)
        _emit(args, json.dumps(payload, sort_keys=True))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow([f"n_{i}" for i in range(1, args.g + 1)] + ["mult"])
        for w, m in sorted(char.entries.items(), key=lambda kv: kv[0].coords):
            writer.writerow(list(w.coords) + [m])
        _emit(args, buf.getvalue())
    else:
        lines = []
        for w, m in sorted(char.entries.items(), key=lambda kv: kv[0].coords):
            lines.append(f"weight {tuple(w.coords)} mult {m}")
        if highest is not None:
            lines.append(f"highest weight (omega-coeffs): {list(highest.omega_coeffs)}")
        _emit(args, "\n".join(lines) if lines else "empty module")
    return EXIT_OK


def _grid(pmax: int, gmax: int):
    for p in primes_between(5, pmax):
        d = (p - 1) // 2
        for g in range(1, gmax + 1):
            for c in range(d):
                yield p, g, c, d


def _suite_oracle(pmax: int, gmax: int) -> list[dict]:
    checks = []
    for p, g, c, _ in _grid(pmax, gmax):
        n0 = lollipop.count_colorings(p, g, c, 0)
        n1 = lollipop.count_colorings(p, g, c, 1)
        big_d = verlinde.verlinde_D(p, g, c)
        delta = verlinde.verlinde_delta(p, g, c)
        checks.append({
            "check": "count vs trig", "params": {"p": p, "g": g, "c": c},
            "a": f"D={n0 + n1},delta={n0 - n1}",
            "b": f"D={big_d},delta={delta}",
            "ok": big_d == n0 + n1 and delta == n0 - n1,
        })
    return checks


def _suite_appendixb(pmax: int) -> list[dict]:
    checks = []
    for p in primes_between(5, pmax):
        d = (p - 1) // 2
        for g in (2, 3, 4):
            for case in verlinde.APPENDIX_B_CASES[g]:
                c_values = [0] if case in ("I", "IV") else range(1, d)
                eps = 0 if case in ("I", "II") else 1
                for c in c_values:
                    poly_val = verlinde.appendix_b_eval(g, case, p, c)
                    frm = verlinde.dim_formula(p, g, c, eps)
                    cnt = lollipop.count_colorings(p, g, c, eps)
                    checks.append({
                        "check": "appendix-b vs formula vs count",
                        "params": {"p": p, "g": g, "c": c, "eps": eps, "case": case},
                        "a": str(poly_val), "b": f"{frm}/{cnt}",
                        "ok": poly_val == frm == cnt,
                    })
    return checks


def _suite_weyl(pmax: int) -> list[dict]:
    checks = []
    for p in primes_between(5, pmax):
        d = (p - 1) // 2
        for c in range(d):
            for eps in (0, 1):
                desc = modules.ModuleDescriptor(p, 2, c, eps)
                try:
                    lam = modules.highest_weight_closed(desc)
                except WeightUndefined:
                    continue
                wd = weyl.weyl_dim(2, lam)
                cnt = modules.dim(desc, "count")
                checks.append({
                    "check": "rank-2 Weyl dim", "params": {"p": p, "c": c, "eps": eps},
                    "a": str(wd), "b": str(cnt), "ok": wd == cnt,
                })
    return checks


def _suite_jantzen(pmax: int) -> list[dict]:
    checks = []
    for p in primes_between(5, pmax):
        d = (p - 1) // 2
        for c in range(d):
            desc = modules.ModuleDescriptor(p, 3, c, 0)
            jd = weyl.jantzen_rank3_dim(p, c)
            cnt = modules.dim(desc, "count")
            plain = weyl.weyl_dim(3, modules.highest_weight_closed(desc))
            expect_plain = c in (0, 1)
            checks.append({
                "check": "rank-3 Jantzen dim", "params": {"p": p, "c": c},
                "a": str(jd), "b": str(cnt),
                "ok": jd == cnt and (plain == cnt) == expect_plain,
            })
    return checks


def _suite_alcove(pmax: int) -> list[dict]:
    checks = []
    for p in primes_between(5, pmax):
        d = (p - 1) // 2
        for g in (5, 6):
            for c in range(d):
                for eps in (0, 1):
                    lam = modules.highest_weight_closed(
                        modules.ModuleDescriptor(p, g, c, eps))
                    checks.append({
                        "check": "alcove pairing p+2g-4",
                        "params": {"p": p, "g": g, "c": c, "eps": eps},
                        "a": str(alcove_pairing(lam)), "b": str(p + 2 * g - 4),
                        "ok": alcove_pairing(lam) == p + 2 * g - 4,
                    })
        lam3 = modules.highest_weight_closed(modules.ModuleDescriptor(p, 3, 0, 1))
        checks.append({
            "check": "rank-3 case-IV pairing = p", "params": {"p": p},
            "a": str(alcove_pairing(lam3)), "b": str(p),
            "ok": alcove_pairing(lam3) == p,
        })
    return checks


def _suite_lemmas(pmax: int, gmax: int) -> list[dict]:
    checks = []
    for p, g, c, d in _grid(min(pmax, ENUM_PMAX), min(gmax, ENUM_GMAX)):
        for eps in (0, 1):
            sigmas = lollipop.enumerate_colorings(p, g, c, eps)
            cnt = lollipop.count_colorings(p, g, c, eps)
            sound = all(
                not lollipop.validate(s) and lollipop.type_of(s) == (c, eps)
                for s in sigmas
            )
            lemma_ok = True
            for s in sigmas:
                coords = lollipop.weight_of(s).coords
                for i, n in enumerate(coords):
                    if n % (2 * d) == d:
                        lemma_ok = False
                    if n % (2 * d) == (d - 1) % (2 * d) and (s.a[i] or s.b[i]):
                        lemma_ok = False
                if eps == 1:
                    nonzero = sum(1 for a in s.a if a > 0)
                    if nonzero < 2 or (c == 0 and nonzero < 3):
                        lemma_ok = False
            checks.append({
                "check": "enumeration + lemma suite",
                "params": {"p": p, "g": g, "c": c, "eps": eps},
                "a": f"enum={len(sigmas)},sound={sound},lemmas={lemma_ok}",
                "b": f"count={cnt}",
                "ok": len(sigmas) == cnt and sound and lemma_ok,
            })
    return checks


def _suite_interpolate() -> list[dict]:
    checks = []
    for g in (2, 3):
        for c in (0, 1, 2):
            for eps in (0, 1):
                try:
                    case = modules.case_label(c, eps)
                    target = verlinde.appendix_b_polynomial(g, case, c)
                except (NoSuchFormula, BadParameters):
                    continue
                floor = max(5, 2 * c + 3)
                primes = []
                q = floor - 1
                while len(primes) < 3 * g - 2 + 1:
                    q = int(gmpy2.next_prime(q))
                    primes.append(q)
                fit = verlinde.interpolate_dim(g, c, eps, primes)
                checks.append({
                    "check": "interpolation matches tabulated polynomial",
                    "params": {"g": g, "c": c, "eps": eps, "case": case},
                    "a": str(fit), "b": str(target), "ok": fit == target,
                })
    primes10 = primes_between(5, 37)
    held_out = [41, 43]
    fit4 = verlinde.interpolate_dim(4, 0, 0, primes10)
    ok4 = fit4.degree == 9 and all(
        fit4.evaluate(q) == lollipop.count_colorings(q, 4, 0, 0) for q in held_out
    )
    checks.append({
        "check": "rank-4 degree 3g-3 and held-out primes",
        "params": {"g": 4, "c": 0, "eps": 0},
        "a": f"degree={fit4.degree}", "b": "degree=9", "ok": ok4,
    })
    return checks


def cmd_verify(args) -> int:
    suites = SUITES[:-1] if args.suite == "all" else (args.suite,)
    all_checks = []
    for name in suites:
        if name == "oracle":
            all_checks += _suite_oracle(args.pmax, args.gmax)
        elif name == "appendixb":
            all_checks += _suite_appendixb(args.pmax)
        elif name == "weyl":
            all_checks += _suite_weyl(args.pmax)
        elif name == "jantzen":
            all_checks += _suite_jantzen(args.pmax)
        elif name == "alcove":
            all_checks += _suite_alcove(args.pmax)
        elif name == "lemmas":
            all_checks += _suite_lemmas(args.pmax, args.gmax)
        elif name == "interpolate":
            all_checks += _suite_interpolate()
    failures = [chk for chk in all_checks if not chk["ok"]]
    if args.format == "json":
        payload = _json_payload(args, {
            "suite": args.suite, "pmax": args.pmax, "gmax": args.gmax,
            "checks": all_checks,
            "passed": not failures,
            "total": len(all_checks), "failed": len(failures),
        })
        _emit(args, json.dumps(payload, sort_keys=True))
    else:
        lines = [
            f"suite {args.suite}: {len(all_checks) - len(failures)}/"
            f"{len(all_checks)} checks passed"
        ]
        for chk in failures:
            lines.append(f"FAIL {chk['check']} {chk['params']}: "
                         f"{chk['a']} != {chk['b']}")
        _emit(args, "\n".join(lines))
    return EXIT_VERIFY_FAILED if failures else EXIT_OK


def cmd_table(args) -> int:
    rows = []
    for p in primes_between(5, args.pmax):
        rows.extend(modules.family_table(args.g, p))
    if args.format == "json":
        for row in rows:
            row["dim"] = str(row["dim"])
        _emit(args, json.dumps(_json_payload(args, {"g": args.g, "rows": rows}),
                               sort_keys=True))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["p", "c", "eps", "case", "lambda_omega", "dim",
                         "alcove_pairing"])
        for row in rows:
            writer.writerow([
                row["p"], row["c"], row["eps"], row["case"],
                " ".join(map(str, row["lambda_omega"])), row["dim"],
                row["alcove_pairing"],
            ])
        _emit(args, buf.getvalue())
    else:
        lines = []
        for row in rows:
            lines.append(
                f"p={row['p']} c={row['c']} eps={row['eps']} case {row['case']:>3} "
                f"lambda={row['lambda_omega']} dim={row['dim']} "
                f"pairing={row['alcove_pairing']}"
            )
        _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_fit(args) -> int:
    if args.primes:
        primes = args.primes
    else:
        floor = max(5, 2 * args.c + 3)
        needed = max(3 * args.g - 2, 2) + 2
        primes = []
        q = floor - 1
        while len(primes) < needed:
            q = int(gmpy2.next_prime(q))
            primes.append(q)
    fit = verlinde.interpolate_dim(args.g, args.c, args.eps, primes)

    diff = None
    if args.g in verlinde.APPENDIX_B_CASES:
        try:
            case = modules.case_label(args.c, args.eps)
            target = verlinde.appendix_b_polynomial(args.g, case, args.c)
        except (NoSuchFormula, BadParameters):
            target = None
        if target is not None:
            diff = []
            top = max(fit.degree, target.degree)
            for deg in range(top + 1):
                fc = fit.coeffs[deg] if deg <= fit.degree else Fraction(0)
                tc = target.coeffs[deg] if deg <= target.degree else Fraction(0)
                if fc != tc:
                    diff.append({"degree": deg, "fit": str(fc), "tabulated": str(tc)})

    if args.format == "json":
        payload = _json_payload(args, {
            "g": args.g, "c": args.c, "eps": args.eps,
            "primes": primes,
            "polynomial": fit.to_json(),
            "degree": fit.degree,
        })
        if diff is not None:
            payload["tabulated_diff"] = diff
        _emit(args, json.dumps(payload, sort_keys=True))
    else:
        lines = [f"fit through p in {primes}:", f"  {fit}"]
        if diff is not None:
            lines.append("  matches tabulated polynomial" if not diff
                         else f"  coefficient differences: {diff}")
        _emit(args, "\n".join(lines))
    return EXIT_OK


def _add_module_args(sub, with_eps=True):
    sub.add_argument("--p", type=int, required=True, help="odd prime >= 5")
    sub.add_argument("--g", type=int, required=True, help="rank (>= 1)")
    sub.add_argument("--c", type=int, required=True,
                     help="boundary half-color, 0 <= c <= (p-3)/2")
    if with_eps:
        sub.add_argument("--eps", type=int, required=True, choices=(0, 1),
                         help="type parity")


def _add_common(sub, formats=("plain", "json", "csv")):
    sub.add_argument("--format", choices=formats, default="plain")
    sub.add_argument("--output", help="write to this file instead of stdout")
    sub.add_argument("--timestamp", action="store_true",
                     help="include a timestamp in JSON output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spdim",
        description="Dimensions, characters and highest weights of a family "
                    "of simple symplectic-group modules in characteristic p, "
                    "cross-checked between coloring counts, trigonometric "
                    "sums, tabulated polynomials and Weyl dimensions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dim = sub.add_parser("dim", help="dimension of one module")
    _add_module_args(p_dim)
    p_dim.add_argument("--method", choices=modules.DIM_METHODS, default="count")
    p_dim.add_argument("--precision-bits", dest="precision_bits", type=int,
                       help="override working precision for --method formula")
    _add_common(p_dim, formats=("plain", "json"))
    p_dim.set_defaults(func=cmd_dim)

    p_col = sub.add_parser("colorings", help="count or list the colorings")
    _add_module_args(p_col)
    mode = p_col.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", default=True,
                      help="print the exact count (default)")
    mode.add_argument("--list", action="store_true",
                      help="stream the colorings in lexicographic order")
    p_col.add_argument("--max-list", type=int, default=10**6,
                       help="refuse to list more colorings than this")
    _add_common(p_col)
    p_col.set_defaults(func=cmd_colorings)

    p_chr = sub.add_parser("character", help="formal character of one module")
    _add_module_args(p_chr)
    p_chr.add_argument("--reduced", action="store_true",
                       help="reduce the weights modulo p-1")
    _add_common(p_chr)
    p_chr.set_defaults(func=cmd_character)

    p_ver = sub.add_parser("verify", help="run a cross-check suite")
    p_ver.add_argument("--suite", choices=SUITES, default="all")
    p_ver.add_argument("--pmax", type=int, default=13)
    p_ver.add_argument("--gmax", type=int, default=5)
    _add_common(p_ver, formats=("plain", "json"))
    p_ver.set_defaults(func=cmd_verify)

    p_tab = sub.add_parser("table", help="family table at fixed rank")
    p_tab.add_argument("--g", type=int, required=True)
    p_tab.add_argument("--pmax", type=int, default=13)
    _add_common(p_tab)
    p_tab.set_defaults(func=cmd_table)

    p_fit = sub.add_parser("fit", help="interpolate the dimension in p")
    p_fit.add_argument("--g", type=int, required=True)
    p_fit.add_argument("--c", type=int, required=True)
    p_fit.add_argument("--eps", type=int, required=True, choices=(0, 1))
    p_fit.add_argument("--primes", type=int, nargs="*",
                       help="sample primes (default: smallest valid choices)")
    _add_common(p_fit, formats=("plain", "json"))
    p_fit.set_defaults(func=cmd_fit)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BadParameters, InsufficientPoints, NoSuchFormula) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_PARAMS
    except PrecisionExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except ListCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except SpdimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED


if __name__ == "__main__":
    sys.exit(main())
