"""Command-line frontend: ``contract``, ``verify`` and ``examples``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .errors import ContrakitError, ResourceLimitError
from .ideals import resource_limits
from .jobs import PROPERTIES, corpus_names, read_job, run_job

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_RESOURCE = 2
EXIT_CHECK_FAILED = 3


def dump_json(obj):
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _text_report(report, elapsed=None):
    lines = [f"== {report['job']} =="]
    con = report["contraction"]
    if "lie" in con:
        lines.append("contracted brackets:")
        for pair, val in con["lie"].get("brackets", {}).items():
            lines.append(f"  [{pair}] = {val}")
    else:
        gens = ", ".join(f"{g['name']}({g['tag']})" for g in con.get("gens", []))
        lines.append(f"generators: {gens or 'none'}")
        rels = con.get("relations", [])
        lines.append("relations: " + ("none" if not rels else ""))
        lines += [f"  {r}" for r in rels]
    for v in report["verdicts"]:
        mark = "PASS" if v["ok"] else "FAIL"
        lines.append(f"  {mark} {v['name']}")
        if v["name"] == "chart_gluing" and "transition" in v.get("details", {}):
            lines.append(f"       transition {v['details']['transition']}")
    if elapsed is not None:
        lines.append(f"  ({elapsed:.2f}s)")
    return "\n".join(lines)


def _run_one(args):
    ref, props, raw, order, gluing, max_pairs, max_degree = args
    with resource_limits(max_pairs=max_pairs, max_degree=max_degree):
        start = time.perf_counter()
        try:
            rep = run_job(ref, props, raw_4lambda=raw, order=order, chart_gluing=gluing)
        except ResourceLimitError as exc:
            return {"job": str(ref), "error": "resource", "message": str(exc), "ok": False}, None
        except ContrakitError as exc:
            return {"job": str(ref), "error": "validation", "message": str(exc), "ok": False}, None
        return rep, time.perf_counter() - start


def _exit_code(reports):
    errs = [r.get("error") for r in reports]
    if "resource" in errs:
        return EXIT_RESOURCE
    if "validation" in errs:
        return EXIT_VALIDATION
    return EXIT_OK if all(r["ok"] for r in reports) else EXIT_CHECK_FAILED


def _emit(reports, elapsed, args, single):
    text_out = sys.stderr if args.json == "-" else sys.stdout
    for rep, dt in zip(reports, elapsed):
        if "error" in rep:
            print(f"error ({rep['error']}) in {rep['job']}: {rep['message']}", file=sys.stderr)
        else:
            print(_text_report(rep, dt), file=text_out)
    payload = reports[0] if single else {"reports": reports, "ok": all(r["ok"] for r in reports)}
    if args.json:
        text = dump_json(payload)
        if args.json == "-":
            sys.stdout.write(text)
        else:
            with open(args.json, "w") as fh:
                fh.write(text)
    return _exit_code(reports)


def _parse_props(text):
    props = [p.strip() for p in text.split(",") if p.strip()]
    bad = [p for p in props if p not in PROPERTIES]
    if bad:
        raise ContrakitError(f"unknown properties {bad}; choose from {', '.join(PROPERTIES)}")
    return props


def _task(args, ref, props):
    return (ref, props, args.raw_4lambda, args.order, getattr(args, "chart_gluing", False),
            args.max_pairs, args.max_degree)


def cmd_contract(args):
    rep, dt = _run_one(_task(args, args.job, []))
    return _emit([rep], [dt], args, single=True)


def cmd_verify(args):
    try:
        props = _parse_props(args.props)
    except ContrakitError as exc:
        print(f"error (validation): {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    rep, dt = _run_one(_task(args, args.job, props))
    return _emit([rep], [dt], args, single=True)


def cmd_examples(args):
    names = corpus_names()
    if args.action == "list":
        for n in names:
            desc = read_job(n).get("description", "")
            print(f"{n:16s} {desc}")
        if args.json:
            text = dump_json({"examples": names})
            if args.json == "-":
                sys.stdout.write(text)
            else:
                with open(args.json, "w") as fh:
                    fh.write(text)
        return EXIT_OK
    if args.action == "run":
        if not args.name:
            print("error (validation): 'examples run' needs an entry name", file=sys.stderr)
            return EXIT_VALIDATION
        if args.name not in names:
            print(f"error (validation): no corpus entry {args.name!r}", file=sys.stderr)
            return EXIT_VALIDATION
        rep, dt = _run_one(_task(args, args.name, None))
        return _emit([rep], [dt], args, single=True)
    tasks = [_task(args, n, None) for n in names]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_one, tasks))
    else:
        results = [_run_one(t) for t in tasks]
    results.sort(key=lambda r: r[0]["job"])
    return _emit([r for r, _ in results], [dt for _, dt in results], args, single=False)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", choices=["grevlex", "lex"], default="grevlex",
                        help="monomial order for reported relations")
    common.add_argument("--max-pairs", type=int, default=None, help="cap on processed S-pairs")
    common.add_argument("--max-degree", type=int, default=None, help="cap on S-polynomial degree")
    common.add_argument("--raw-4lambda", action="store_true",
                        help="keep the four products of minus components per generator")
    common.add_argument("--json", metavar="PATH", default=None, help="write the JSON report ('-' for stdout)")

    parser = argparse.ArgumentParser(prog="contrakit", description="Contractions of algebras with involution.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("contract", parents=[common], help="contract the algebra of a job file")
    p.add_argument("job", help="job file path or corpus entry name")
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("verify", parents=[common], help="run property checks on a job")
    p.add_argument("job", help="job file path or corpus entry name")
    p.add_argument("--props", required=True, help="comma separated: " + ",".join(PROPERTIES))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("examples", parents=[common], help="the bundled corpus")
    p.add_argument("action", choices=["list", "run-all", "run"])
    p.add_argument("name", nargs="?", help="entry name for 'run'")
    p.add_argument("--chart-gluing", action="store_true", help="add the chart gluing report")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for run-all")
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
