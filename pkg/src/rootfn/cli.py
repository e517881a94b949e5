"""Command-line entry point: ``rootfn <subcommand> ...``.

Exit codes: 0 success, 1 domain error, 2 resource refusal, 64 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__
from .boolfn import (
    TruthTable,
    format_truth_table,
    is_isolated,
    is_maximal,
    is_non_vacuous,
    is_root,
    parse_truth_table,
    root_size_bounds,
    support,
)
from .construct import catalog, lift
from .enumeration import GUARANTEED_MAX_N, census, enumerate_roots, missing_cardinalities
from .faultsim import (
    CircuitError,
    SynthesisError,
    TwoLevelCircuit,
    audit_root_circuits,
    format_faults,
    parse_faults,
    simulate,
    synthesize_root_and_faults,
    universal_module_experiment,
)
from .sop import SopCover, irredundant_cover
from .symmetry import MAX_ORBIT_ARITY, np_canonical, np_orbit

EXIT_OK, EXIT_DOMAIN, EXIT_RESOURCE, EXIT_USAGE = 0, 1, 2, 64

SUBCOMMANDS = ("check", "bounds", "census", "catalog", "lift", "canon", "orbit", "sop",
               "simulate", "synth", "audit", "universal", "reproduce")


class UsageError(Exception):
    pass


class ResourceRefusal(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    n: int | None = None
    format: str = "text"
    jobs: int = 1
    seed: int = 0
    output: str | None = None
    options: dict = field(default_factory=dict)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{message}\n\n{self.format_help()}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--output", "-o", help="write the report here instead of stdout")

    parser = _Parser(prog="rootfn", description="Root functions: enumeration, checks and fault experiments.")
    parser.add_argument("--version", action="version", version=f"rootfn {__version__}")
    sub = parser.add_subparsers(dest="subcommand", parser_class=_Parser)

    p = sub.add_parser("check", parents=[common], help="test whether a function is a root")
    p.add_argument("function", help="minterm list (e.g. 111,000) or n=<k>:<hex>")

    p = sub.add_parser("bounds", parents=[common], help="admissible root sizes for n")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("census", parents=[common], help="count roots by number of true minterms")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--emit", help="also write every root (hex form, one per line) to this file")
    p.add_argument("--force", action="store_true", help=f"allow n > {GUARANTEED_MAX_N}")

    p = sub.add_parser("catalog", parents=[common], help="explicit roots for n = 2..7")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("lift", parents=[common], help="double a root into n+1 variables")
    p.add_argument("function")
    p.add_argument("--var", type=int, required=True, help="1-based variable to complement")

    p = sub.add_parser("canon", parents=[common], help="NP-canonical form")
    p.add_argument("function")

    p = sub.add_parser("orbit", parents=[common], help="NP orbit")
    p.add_argument("function")

    p = sub.add_parser("sop", parents=[common], help="irredundant sum-of-products cover")
    p.add_argument("function")

    p = sub.add_parser("simulate", parents=[common], help="faulty response of a two-level circuit")
    p.add_argument("--circuit", required=True, help="file with one cube per line")
    p.add_argument("--faults", help="fault file (stem:<i>=v, branch:<g>,<i>=v, orin:<g>=v, orout=v)")

    p = sub.add_parser("synth", parents=[common], help="root + faults producing a target")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--target")
    group.add_argument("--random", type=int, metavar="COUNT",
                       help="synthesize COUNT random functions of --n variables")
    p.add_argument("--n", type=int)

    p = sub.add_parser("audit", parents=[common], help="no fault in a root circuit yields a root")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("universal", parents=[common], help="root circuits as universal modules")
    p.add_argument("--n", type=int, default=3)

    p = sub.add_parser("reproduce", parents=[common], help="run every reproduction check")
    p.add_argument("--max-n", type=int, default=6, help="largest census to run (<= 6)")
    return parser


# -- report rendering --------------------------------------------------------------

def _header(cfg: RunConfig) -> str:
    return f"# rootfn {__version__} config={json.dumps(asdict(cfg), sort_keys=True)}"


def render(cfg: RunConfig, result: dict, text_lines: list[str], csv_rows: list[list] | None = None) -> str:
    if cfg.format == "json":
        doc = {"tool": "rootfn", "version": __version__, "config": asdict(cfg), "result": result}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if cfg.format == "csv":
        rows = csv_rows if csv_rows is not None else [["key", "value"]] + [
            [k, json.dumps(v) if isinstance(v, (dict, list)) else v] for k, v in result.items()]
        buf = io.StringIO()
        buf.write(_header(cfg) + "\n")
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue()
    return "\n".join([_header(cfg)] + text_lines) + "\n"


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _fn(text: str) -> TruthTable:
    try:
        return parse_truth_table(text)
    except ValueError as exc:
        raise UsageError(f"bad truth table {text!r}: {exc}") from None


# -- subcommands ---------------------------------------------------------------------

def cmd_check(cfg, args):
    f = _fn(args.function)
    result = {"function": format_truth_table(f), "hex": format_truth_table(f, "hex"),
              "n": f.arity, "true_minterms": len(f), "support": sorted(support(f)),
              "non_vacuous": is_non_vacuous(f), "isolated": is_isolated(f),
              "maximal": is_maximal(f), "root": is_root(f)}
    lines = [f"function: {result['function']}", f"n: {f.arity}",
             f"true minterms: {len(f)}",
             f"non-vacuous: {_bool(result['non_vacuous'])}",
             f"isolated: {_bool(result['isolated'])}",
             f"maximal: {_bool(result['maximal'])}",
             f"root: {_bool(result['root'])}"]
    return EXIT_OK, result, lines, None


def cmd_bounds(cfg, args):
    try:
        b = root_size_bounds(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result = {"n": args.n, "lower": b.lower, "upper": b.upper}
    return EXIT_OK, result, [f"n: {args.n}", f"lower: {b.lower}", f"upper: {b.upper}"], None


def _census_result(n: int, jobs: int, emit: str | None):
    if emit:
        counts: dict[int, int] = {}
        with open(emit, "w") as fh:
            def write(t):
                counts[len(t)] = counts.get(len(t), 0) + 1
                fh.write(format_truth_table(t, "hex") + "\n")
            enumerate_roots(n, write, jobs=jobs)
        from .enumeration import Census
        return Census(n, dict(sorted(counts.items())))
    return census(n, jobs=jobs)


def cmd_census(cfg, args):
    n = args.n
    if n < 1:
        raise UsageError("--n must be >= 1")
    if n > GUARANTEED_MAX_N and not args.force:
        raise ResourceRefusal(f"census for n={n} exceeds desk scale (n <= {GUARANTEED_MAX_N}); pass --force")
    c = _census_result(n, cfg.jobs, args.emit)
    missing = sorted(missing_cardinalities(n, result=c))
    result = c.as_dict()
    result["min_root_size"] = min(c.per_cardinality)
    result["missing_cardinalities"] = missing
    rows = [["n", "k", "count"]] + [[n, k, v] for k, v in sorted(c.per_cardinality.items())]
    rows.append([n, "total", c.total])
    lines = [f"n: {n}"] + [f"k={k}: {v}" for k, v in sorted(c.per_cardinality.items())]
    lines += [f"total: {c.total}", f"min root size: {result['min_root_size']}",
              f"missing cardinalities: {','.join(map(str, missing)) or 'none'}"]
    return EXIT_OK, result, lines, rows


def cmd_catalog(cfg, args):
    try:
        entries = catalog(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result = {"n": args.n, "entries": [
        {"label": label, "function": format_truth_table(t), "true_minterms": len(t), "root": is_root(t)}
        for label, t in entries]}
    lines = [f"{e['label']}: {e['function']} ({e['true_minterms']} minterms, root: {_bool(e['root'])})"
             for e in result["entries"]]
    return EXIT_OK, result, lines, None


def cmd_lift(cfg, args):
    f = _fn(args.function)
    out = lift(f, args.var)
    result = {"input": format_truth_table(f), "var": args.var, "lifted": format_truth_table(out),
              "true_minterms": len(out), "root": is_root(out)}
    return EXIT_OK, result, [result["lifted"]], None


def _orbit_guard(f: TruthTable):
    if f.arity > MAX_ORBIT_ARITY:
        raise ResourceRefusal(f"NP group too large for n={f.arity}")


def cmd_canon(cfg, args):
    f = _fn(args.function)
    _orbit_guard(f)
    c = np_canonical(f)
    result = {"input": format_truth_table(f), "canonical": format_truth_table(c),
              "canonical_hex": format_truth_table(c, "hex")}
    return EXIT_OK, result, [result["canonical"]], None


def cmd_orbit(cfg, args):
    f = _fn(args.function)
    _orbit_guard(f)
    members = sorted(np_orbit(f), key=lambda t: t.bits)
    result = {"input": format_truth_table(f), "size": len(members),
              "members": [format_truth_table(t) for t in members]}
    return EXIT_OK, result, result["members"], None


def cmd_sop(cfg, args):
    f = _fn(args.function)
    cover = irredundant_cover(f)
    result = {"function": format_truth_table(f), "terms": [str(t) for t in cover.terms]}
    return EXIT_OK, result, result["terms"], None


def cmd_simulate(cfg, args):
    try:
        cover = SopCover.parse(Path(args.circuit).read_text())
        faults = parse_faults(Path(args.faults).read_text()) if args.faults else {}
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    c = TwoLevelCircuit(cover.arity, cover.terms)
    response = simulate(c, faults)
    result = {"circuit": [str(g) for g in c.gates], "faults": format_faults(faults).splitlines(),
              "fault_free": format_truth_table(c.function()),
              "response": format_truth_table(response), "response_hex": format_truth_table(response, "hex")}
    return EXIT_OK, result, [f"response: {result['response']}"], None


def _scenario_dict(sc) -> dict:
    n = sc.root.arity
    return {"target": format_truth_table(sc.response), "root": format_truth_table(sc.root),
            "representatives": [format(m, f"0{n}b") for m in sorted(sc.representatives)],
            "completion": [format(m, f"0{n}b") for m in sc.completion],
            "circuit": [str(g) for g in sc.circuit.gates],
            "faults": format_faults(sc.faults).splitlines(),
            "simulated": format_truth_table(simulate(sc.circuit, sc.faults))}


def cmd_synth(cfg, args):
    if args.target:
        sc = synthesize_root_and_faults(_fn(args.target))
        result = _scenario_dict(sc)
        lines = [f"root: {result['root']}", "circuit:"] + [f"  {g}" for g in result["circuit"]]
        lines += ["faults:"] + [f"  {x}" for x in result["faults"]] + [f"response: {result['simulated']}"]
        return EXIT_OK, result, lines, None
    if not args.n:
        raise UsageError("--random needs --n")
    rng = random.Random(cfg.seed)
    ok = 0
    failures = []
    for _ in range(args.random):
        f = TruthTable(args.n, rng.getrandbits(1 << args.n))
        try:
            sc = synthesize_root_and_faults(f)
            ok += simulate(sc.circuit, sc.faults) == f and is_root(sc.root)
        except SynthesisError:
            failures.append(format_truth_table(f, "hex"))
    result = {"n": args.n, "count": args.random, "round_trips": ok, "failures": failures}
    code = EXIT_OK if ok == args.random else EXIT_DOMAIN
    return code, result, [f"round trips: {ok}/{args.random}"], None


def cmd_audit(cfg, args):
    try:
        report = audit_root_circuits(args.n)
    except CircuitError as exc:
        raise ResourceRefusal(str(exc)) from None
    lines = [f"n: {args.n}", f"roots audited: {report['roots']}", f"passed: {_bool(report['passed'])}"]
    lines += [f"  {row['root']}: {row['faulty']} faulty responses" for row in report["per_root"]]
    return (EXIT_OK if report["passed"] else EXIT_DOMAIN), report, lines, None


def cmd_universal(cfg, args):
    try:
        report = universal_module_experiment(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lines = [f"n: {args.n}", f"covers all {report['functions']} functions: {_bool(report['covers_all'])}"]
    for m in report.get("modules", []) + report.get("np_classes", []):
        lines.append(f"  {m['root']}: {m['non_roots_produced']} non-roots")
    if report.get("witness_triple"):
        lines.append("witness triple: " + " | ".join(report["witness_triple"]))
    return EXIT_OK, report, lines, None


def cmd_reproduce(cfg, args):
    from .reproduce import reproduce_all

    if args.max_n > GUARANTEED_MAX_N:
        raise ResourceRefusal(f"--max-n above {GUARANTEED_MAX_N} is out of scope")
    report = reproduce_all(max_n=args.max_n, jobs=cfg.jobs)
    lines = [f"{c['claim']}: {'PASS' if c['passed'] else 'FAIL'}" for c in report["claims"]]
    return (EXIT_OK if report["all_passed"] else EXIT_DOMAIN), report, lines, None


HANDLERS = {
    "check": cmd_check, "bounds": cmd_bounds, "census": cmd_census, "catalog": cmd_catalog,
    "lift": cmd_lift, "canon": cmd_canon, "orbit": cmd_orbit, "sop": cmd_sop,
    "simulate": cmd_simulate, "synth": cmd_synth, "audit": cmd_audit,
    "universal": cmd_universal, "reproduce": cmd_reproduce,
}


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.subcommand:
            raise UsageError(parser.format_help())
        options = {k: v for k, v in vars(args).items()
                   if k not in ("subcommand", "n", "format", "jobs", "seed", "output")}
        cfg = RunConfig(args.subcommand, getattr(args, "n", None), args.format,
                        max(1, args.jobs), args.seed, args.output, options)
        code, result, lines, rows = HANDLERS[args.subcommand](cfg, args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceRefusal as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (SynthesisError, CircuitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        for step in getattr(exc, "trace", []):
            print(f"  {step}", file=sys.stderr)
        return EXIT_DOMAIN
    except SystemExit as exc:  # --help / --version
        return EXIT_OK if not exc.code else EXIT_USAGE
    text = render(cfg, result, lines, rows)
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        stdout.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
