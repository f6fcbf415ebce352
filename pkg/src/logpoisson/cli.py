"""Command-line front end.

Subcommands: ``dims`` (dimension tables), ``verify`` (all identity suites),
``reps`` (cohomology representatives) and ``bench`` (timings).

Exit codes: 0 success, 1 mismatch or failed suite, 2 usage/config error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import List, Optional, Sequence, Tuple

from . import cohomology, complexes, linalg, verify
from .complexes import CLASSICAL, LOG, ComplexSpec, NotHomogeneous, weight_shift
from .parsing import PolySyntaxError, parse_poly

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

ROW_KEYS = ["variant", "n", "k", "w", "dimZ", "dimB", "dimH", "predicted", "match"]
CMP_KEYS = ["cmp_w", "cmp_dimH", "cmp_match"]


class ConfigError(Exception):
    pass


def parse_range(text: str, what: str) -> Tuple[int, int]:
    """``"a..b"`` (inclusive, negatives allowed) or a single integer."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            return int(a), int(b)
        v = int(text)
        return v, v
    except ValueError:
        raise ConfigError(f"bad {what} {text!r}: expected INT or INT..INT") from None


def _ns(text: str) -> List[int]:
    a, b = parse_range(text, "--n")
    if a < 2 or b < 2:
        raise ConfigError("n must be ≥ 2")
    if a > b:
        raise ConfigError(f"empty n range {text!r}")
    return list(range(a, b + 1))


def _weights(text: str, allow_empty: bool = False) -> List[int]:
    a, b = parse_range(text, "--weights")
    if a > b and not allow_empty:
        raise ConfigError(f"empty weight window {text!r}")
    return list(range(a, b + 1))


def _phi(text: Optional[str]):
    if text is None:
        return None
    try:
        return parse_poly(text)
    except PolySyntaxError as exc:
        raise ConfigError(f"--phi: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--variant", choices=["log", "classical", "both"], default="log")
    common.add_argument("--weights", default="-2..25", help="inclusive weight window a..b")
    common.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    common.add_argument("--format", choices=["table", "csv", "json"], default=None, help="default: table (json for bench)")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--phi", default=None, help="classical structure function, e.g. 'x + y^2'")

    parser = argparse.ArgumentParser(prog="logpoisson", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", parents=[common], help="cohomology dimension tables")
    p.add_argument("--n", default="2..5")

    p = sub.add_parser("verify", parents=[common], help="run every identity suite")
    p.add_argument("--n", default="2..5")

    p = sub.add_parser("reps", parents=[common], help="representatives of H^k at one weight")
    p.add_argument("--n", default="2")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--w", type=int, default=0)

    p = sub.add_parser("bench", parents=[common], help="time the exact elimination per weight")
    p.add_argument("--n", default="2")
    return parser


def _config(args, ns, window) -> dict:
    cfg = {
        "command": args.command,
        "variant": args.variant,
        "n": ns,
        "weights": [window[0], window[-1]] if window else [],
        "seed": args.seed,
        "phi": args.phi,
    }
    if args.command == "reps":
        cfg.update(k=args.k, w=args.w)
    return cfg


def _emit(out, fmt: str, config: dict, rows: List[dict], suites: List[dict], keys: Sequence[str]) -> None:
    if fmt == "json":
        json.dump({"config": config, "rows": rows, "suites": suites}, out, indent=2, ensure_ascii=False)
        out.write("\n")
        return
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(keys), lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: ("" if r.get(k) is None else r.get(k)) for k in keys})
        out.write(buf.getvalue())
        for s in suites:
            out.write(f"# {'PASS' if s['pass'] else 'FAIL'} {s['name']}" + (f": {s['counterexample']}" if s["counterexample"] else "") + "\n")
        return
    if rows:
        cells = [[("-" if r.get(k) is None else str(r.get(k))) for k in keys] for r in rows]
        widths = [max(len(k), *(len(c[i]) for c in cells)) for i, k in enumerate(keys)]
        out.write("  ".join(k.rjust(wd) for k, wd in zip(keys, widths)) + "\n")
        for c in cells:
            out.write("  ".join(v.rjust(wd) for v, wd in zip(c, widths)) + "\n")
    for s in suites:
        line = f"{'PASS' if s['pass'] else 'FAIL'}  {s['name']}"
        if s["counterexample"]:
            line += f"\n      counterexample: {s['counterexample']}"
        out.write(line + "\n")


def _specs(variant: str, n: int, phi) -> List[ComplexSpec]:
    if phi is not None:
        if variant != "classical":
            raise ConfigError("--phi requires --variant classical")
        return [ComplexSpec.classical(phi)]
    if variant == "log":
        return [ComplexSpec.logarithmic(n)]
    if variant == "classical":
        return [ComplexSpec.classical_yn(n)]
    return [ComplexSpec.classical_yn(n), ComplexSpec.logarithmic(n)]


def cmd_dims(args, out) -> int:
    ns = _ns(args.n)
    window = _weights(args.weights)
    phi = _phi(args.phi)
    if phi is not None:
        try:
            weight_shift(ComplexSpec.classical(phi))
        except NotHomogeneous as exc:
            raise ConfigError(f"graded cohomology needs a homogeneous phi: {exc}") from None
        ns = ns[:1]
    both = args.variant == "both"
    rows: List[dict] = []
    suites: List[dict] = []
    ok = True
    for n in ns:
        specs = _specs(args.variant, n, phi)
        table = cohomology.dimension_table(specs, window, jobs=args.jobs)
        log_dims = {}
        if both:
            lg = ComplexSpec.logarithmic(n)
            for r in table:
                if r.variant == LOG:
                    log_dims[(r.k, r.w)] = r.dimH
        for r in table:
            row = r.row()
            if phi is not None:
                row["n"] = None
            row.update({k: None for k in CMP_KEYS})
            if both and r.variant == CLASSICAL:
                shift = cohomology.ALIGNMENT_SHIFTS[r.k] if r.k < 3 else 0
                lw = r.w + shift
                ldim = log_dims.get((r.k, lw))
                if ldim is None:
                    ldim = cohomology.cohomology_at(lg, r.k, lw).dimH
                row.update(cmp_w=lw, cmp_dimH=ldim, cmp_match=ldim == r.dimH)
                ok &= ldim == r.dimH
            ok &= r.match
            rows.append(row)
        if both:
            rep = cohomology.compare_variants(n, window)
            for k, (tc, tl) in rep.totals.items():
                passed = tc == tl
                suites.append({
                    "name": f"variants-totals(n={n}, k={k})",
                    "pass": passed,
                    "counterexample": None if passed else f"classical total {tc} != log total {tl}",
                })
                ok &= passed
    keys = ROW_KEYS + (CMP_KEYS if both else [])
    _emit(out, args.format, _config(args, ns, window), rows, suites, keys)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args, out) -> int:
    ns = _ns(args.n)
    window = _weights(args.weights)
    phi = _phi(args.phi)
    live = args.format == "table"

    def progress(r):
        if live:
            _emit(out, "table", {}, [], [r.as_dict()], [])
            out.flush()

    results = verify.run_all(ns, window, seed=args.seed, extra_phis=[phi] if phi is not None else [], progress=progress, jobs=args.jobs)
    suites = [r.as_dict() for r in results]
    passed = all(r.passed for r in results)
    if live:
        out.write(f"{sum(r.passed for r in results)}/{len(results)} suites passed\n")
    else:
        _emit(out, args.format, _config(args, ns, window), [], suites, ["name", "pass", "counterexample"])
    return EXIT_OK if passed else EXIT_FAIL


def cmd_representatives(args, out) -> int:
    ns = _ns(args.n)
    if len(ns) != 1:
        raise ConfigError("reps needs a single --n")
    if args.k > 2:
        raise ConfigError(f"H^{args.k} = 0 for k > 2: there are no cochains above degree 2")
    if args.k < 0:
        raise ConfigError("--k must be non-negative")
    n = ns[0]
    phi = _phi(args.phi)
    if args.variant == "both":
        raise ConfigError("reps needs --variant log or classical")
    spec = _specs(args.variant, n, phi)[0]
    report = cohomology.cohomology_at(spec, args.k, args.w, representatives=True)
    image = cohomology.coboundary_columns(spec, args.k, args.w)
    rows = []
    for rep in report.representatives:
        nxt = complexes.differential(rep)
        cocycle = nxt is None or nxt.is_zero()
        non_coboundary = not linalg.membership(cohomology.to_coords(rep, args.w), image)
        rows.append({"cochain": str(rep), "cocycle": cocycle, "non_coboundary": non_coboundary})
    ok = all(r["cocycle"] and r["non_coboundary"] for r in rows)
    if args.format == "table":
        out.write(f"H^{args.k} of {spec.label()} at weight {args.w}: dim {report.dimH}\n")
        for r in rows:
            marks = f"cocycle {'✓' if r['cocycle'] else '✗'}, non-coboundary {'✓' if r['non_coboundary'] else '✗'}"
            out.write(f"  {r['cochain']}    [{marks}]\n")
    else:
        _emit(out, args.format, _config(args, ns, [args.w]), rows, [], ["cochain", "cocycle", "non_coboundary"])
    return EXIT_OK if ok else EXIT_FAIL


def cmd_bench(args, out) -> int:
    """Per-weight timings with cold caches, then the whole window through ``dimension_table``."""
    ns = _ns(args.n)
    window = _weights(args.weights, allow_empty=True)
    rows = []
    totals = []
    for n in ns:
        specs = [ComplexSpec.logarithmic(n), ComplexSpec.classical_yn(n)]
        for w in window:
            cohomology.clear_caches()
            start = time.perf_counter()
            dims = [cohomology.cohomology_at(s, k, w).dimH for s in specs for k in (0, 1, 2)]
            rows.append({"n": n, "w": w, "seconds": round(time.perf_counter() - start, 6), "dims": dims})
        if window:
            cohomology.clear_caches()
            start = time.perf_counter()
            table = cohomology.dimension_table(specs, window, degrees=(0, 1, 2), jobs=args.jobs)
            totals.append({
                "n": n,
                "jobs": args.jobs,
                "seconds": round(time.perf_counter() - start, 6),
                "dims": [r.dimH for r in table],
            })
    if args.format == "json":
        doc = {"config": _config(args, ns, window), "rows": rows, "suites": [], "window": totals}
        json.dump(doc, out, indent=2)
        out.write("\n")
    else:
        flat = [{**r, "dims": " ".join(map(str, r["dims"]))} for r in rows]
        _emit(out, args.format, {}, flat, [], ["n", "w", "seconds", "dims"])
        for t in totals:
            out.write(f"# n={t['n']} whole window, jobs={t['jobs']}: {t['seconds']:.3f}s\n")
    return EXIT_OK


COMMANDS = {"dims": cmd_dims, "verify": cmd_verify, "reps": cmd_representatives, "bench": cmd_bench}


_VALUE_FLAGS = ("--weights", "--n", "--w", "--k", "--seed")


def _glue_negative_values(argv: Sequence[str]) -> List[str]:
    # argparse reads "-2..5" as an option; rewrite "--weights -2..5" as "--weights=-2..5"
    out: List[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            else:
                out.append(f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    argv = _glue_negative_values(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.format is None:
        args.format = "json" if args.command == "bench" else "table"
    if args.jobs < 1:
        print("error: --jobs must be ≥ 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
