"""Command-line interface: ``levelscope {level,classify,sweep,paper-report}``.

Exit codes: 0 ok, 1 report mismatch, 2 input error, 3 invalid curve,
4 level capped, 5 I/O error.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time

from . import __version__
from .cartier import analyze, level_lower_bound
from .curves import from_weierstrass, homogenize, rational_roots, to_imaginary
from .errors import FieldError, InvalidCurveError, ParseError, ResourceError
from .fields import check_prime
from .level import DEFAULT_E_MAX, extract_operator, level_chain
from .multipoly import parse_poly
from .records import RunRecord, to_json
from .report import format_rows, paper_report
from .sweep import make_tasks, parse_range, run_sweep

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_CURVE, EXIT_CAPPED, EXIT_IO = 0, 1, 2, 3, 4, 5


def _matrix_lines(m) -> list:
    return ["  [" + " ".join(f"{v:>{len(str(m.p))}}" for v in row) + "]" for row in m.tolist()]


def _format_chain(res) -> str:
    return " > ".join(["R"] + [str(j) for j in res.strict_chain])


def cmd_level(args) -> int:
    try:
        p = check_prime(args.prime)
        names = [v.strip() for v in args.vars.split(",") if v.strip()]
        f = parse_poly(args.poly, p, names)
    except (FieldError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if not f.terms:
        print("error: the zero polynomial has no level", file=sys.stderr)
        return EXIT_INPUT
    t0 = time.perf_counter()
    res = level_chain(f, args.max_e)
    ms = round((time.perf_counter() - t0) * 1000)
    op = None
    if args.certificate and res.level is not None:
        try:
            op = extract_operator(f, res)
        except ResourceError as exc:
            print(f"warning: {exc}", file=sys.stderr)
    if args.json:
        rec = RunRecord(prime=p, poly=f.to_string(), level=res.level, capped=res.capped,
                        chain=tuple(tuple(j.to_strings()) for j in res.strict_chain), ms=ms)
        print(to_json(rec))
    else:
        print(f"f     = {f}  over F_{p}")
        print(f"level = {res.level if res.level is not None else f'unknown (capped at e_max={args.max_e})'}")
        print(f"chain = {_format_chain(res)}")
        for s, (j, t) in enumerate(zip(res.chain, res.timings), 1):
            print(f"  I_{s}: {j}   [{t * 1000:.1f} ms]")
        if op is not None:
            print(f"certificate (e={op.e}): f^{p ** op.e - p} = sum u_j * g_j^{p ** op.e}")
            for u, g in op.pairs:
                print(f"  g = {g}   u has {len(u)} terms")
    return EXIT_CAPPED if res.capped else EXIT_OK


def cmd_classify(args) -> int:
    try:
        p = check_prime(args.prime)
        model = from_weierstrass(args.h, p, args.genus)
    except InvalidCurveError as exc:
        print(f"invalid curve: {exc}", file=sys.stderr)
        return EXIT_CURVE
    except (FieldError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    t0 = time.perf_counter()
    data = analyze(model)
    bound = level_lower_bound(data) if model.genus >= 2 else None
    imaginary = model
    note = None
    if model.kind != "imaginary":
        roots = rational_roots(model)
        if roots:
            imaginary = to_imaginary(model, roots[0])
        else:
            imaginary = None
            note = "no rational root: imaginary model unavailable over F_p"
    res = None
    if args.level and imaginary is not None:
        res = level_chain(homogenize(imaginary), args.max_e)
    ms = round((time.perf_counter() - t0) * 1000)
    poly = homogenize(imaginary if imaginary is not None else model).to_string()
    if args.json:
        rec = RunRecord(
            prime=p, poly=poly, genus=model.genus, h=model.h.to_string(),
            level=res.level if res else None, capped=res.capped if res else False,
            chain=tuple(tuple(j.to_strings()) for j in res.strict_chain) if res else (),
            rank_C=data.rank_C, p_rank=data.p_rank, nilpotency=data.nilpotency,
            classification=data.classification, bound=bound, ms=ms,
        )
        print(to_json(rec))
    else:
        print(f"curve: {model}")
        print("Cartier-Manin matrix C:")
        print("\n".join(_matrix_lines(data.C)))
        print("extended matrix [c_(ip-j)], j = 1..2g+1:")
        print("\n".join(_matrix_lines(data.C_ext)))
        print(f"rank C         = {data.rank_C}")
        print(f"p-rank         = {data.p_rank}")
        print(f"nilpotency     = {data.nilpotency if data.nilpotency is not None else 'not nilpotent'}")
        print(f"classification = {data.classification}")
        if bound is not None:
            print(f"level bound    = level >= {bound}")
        if data.C.is_zero() and data.extended_nonzero:
            print("heuristic: C = 0 but the extended matrix is nonzero, evidence that the level exceeds 2")
        if imaginary is not model and imaginary is not None:
            print(f"imaginary model used for the level: {imaginary}")
        if res is not None:
            print(f"level          = {res.level if res.level is not None else 'capped'}")
            print(f"chain          = {_format_chain(res)}")
        for w in data.warnings:
            print(f"warning: {w}", file=sys.stderr)
        if note:
            print(f"note: {note}")
    if res is not None and res.capped:
        return EXIT_CAPPED
    return EXIT_OK


def cmd_sweep(args) -> int:
    try:
        lo, hi = parse_range(args.primes)
        if args.family == "random" and args.count < 1:
            raise ValueError("--count must be positive")
        tasks = make_tasks(args.family, args.genus, lo, hi, mu=args.mu, count=args.count, seed=args.seed)
    except (ValueError, FieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        stats = run_sweep(tasks, args.out, resume=args.resume, jobs=args.jobs, e_max=args.max_e, timings=args.timings)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"{stats['computed']} computed, {stats['skipped']} skipped, {stats['total']} records in {args.out}")
    return EXIT_OK


def cmd_paper_report(args) -> int:
    rows, seconds = paper_report(args.max_p)
    print(format_rows(rows))
    failed = sum(not r.ok for r in rows)
    print(f"{len(rows) - failed}/{len(rows)} PASS in {seconds:.1f} s")
    return EXIT_OK if not failed else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="levelscope", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"levelscope {__version__}")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    lv = sub.add_parser("level", help="level of a polynomial over F_p")
    lv.add_argument("--prime", type=int, required=True)
    lv.add_argument("--poly", required=True)
    lv.add_argument("--vars", default="x,y,z")
    lv.add_argument("--max-e", type=int, default=DEFAULT_E_MAX)
    lv.add_argument("--certificate", action="store_true", help="also extract the operator certificate (small p^e only)")
    lv.add_argument("--json", action="store_true")
    lv.set_defaults(func=cmd_level)

    cl = sub.add_parser("classify", help="Cartier-Manin matrix and classification of y^2 = h(x)")
    cl.add_argument("--prime", type=int, required=True)
    cl.add_argument("--h", required=True)
    cl.add_argument("--genus", type=int, default=None)
    cl.add_argument("--level", action="store_true", help="also compute the level of the imaginary model")
    cl.add_argument("--max-e", type=int, default=DEFAULT_E_MAX)
    cl.add_argument("--json", action="store_true")
    cl.set_defaults(func=cmd_classify)

    sw = sub.add_parser("sweep", help="levels and classifications over a range of primes")
    sw.add_argument("--family", choices=["mu_x", "mu_const", "random"], required=True)
    sw.add_argument("--genus", type=int, required=True)
    sw.add_argument("--primes", required=True, help="LO..HI")
    sw.add_argument("--mu", type=int, default=1)
    sw.add_argument("--count", type=int, default=1)
    sw.add_argument("--seed", type=int, default=0)
    sw.add_argument("--out", required=True, help="output file, .csv or .jsonl")
    sw.add_argument("--resume", action="store_true")
    sw.add_argument("--jobs", type=int, default=1)
    sw.add_argument("--max-e", type=int, default=DEFAULT_E_MAX)
    sw.add_argument("--timings", action="store_true", help="record elapsed ms (output is then not byte-reproducible)")
    sw.set_defaults(func=cmd_sweep)

    pr = sub.add_parser("paper-report", help="recompute the published examples")
    pr.add_argument("--max-p", type=int, default=100)
    pr.set_defaults(func=cmd_paper_report)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
