"""Command-line interface.

Subcommands: verify, sum, construct, search, simulate, certify, bounds.
Every report is a single JSON object on stdout with stable key order, so an
identical invocation (same args, same --seed) is byte-identical; wall-clock
time goes to stderr only.  Exit code 0 means pass / within bound, 1 means a
violation was found, 2 means usage or parse errors.

All randomness flows from the single --seed flag; each stage derives its own
child seed by labeled hashing, so adding a stage never perturbs another.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction

from . import constructions, events, search, sums
from .certificates import certify as run_certify
from .certificates import derive_seed
from .errors import BollobasError, FormatError
from .families import bollobas_violation, family_from_json, family_to_json, skew_violation
from .spaces import lift_to_spaces, subspace_family_from_json, subspace_family_to_json


def _rat(x: Fraction) -> str:
    return str(x)


def _read_input(path: str | None) -> tuple[str, str]:
    """Return (text, sha256 digest) of the input document."""
    if path is None:
        raise FormatError("this subcommand needs --input <path|->")
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    digest = "sha256:" + hashlib.sha256(text.encode()).hexdigest()
    return text, digest


def _load_json(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc


def _parse_sizes(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise FormatError(f"bad type {text!r}; expected comma-separated integers") from exc
    return sizes


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        try:
            return list(range(int(lo), int(hi) + 1))
        except ValueError as exc:
            raise FormatError(f"bad range {text!r}") from exc
    try:
        return [int(text)]
    except ValueError as exc:
        raise FormatError(f"bad range {text!r}") from exc


def _emit(report: dict, output: str | None) -> None:
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _report(command: str, args: dict, digest: str | None, seed: int, results: dict) -> dict:
    return {
        "command": command,
        "args": args,
        "input_digest": digest,
        "seed": seed,
        "results": results,
    }


# ---------------------------------------------------------------------------
# Subcommands.  Each returns (report dict, exit code).


def _cmd_verify(ns) -> tuple[dict, int]:
    text, digest = _read_input(ns.input)
    fam = family_from_json(_load_json(text))
    violation = bollobas_violation(fam) if ns.mode == "bollobas" else skew_violation(fam)
    results = {
        "mode": ns.mode,
        "valid": violation is None,
        "violation": list(violation) if violation else None,
        "m": len(fam),
        "n": fam.n,
        "d": fam.d,
    }
    report = _report("verify", {"mode": ns.mode}, digest, ns.seed, results)
    return report, 0 if violation is None else 1


def _cmd_sum(ns) -> tuple[dict, int]:
    text, digest = _read_input(ns.input)
    fam = family_from_json(_load_json(text))
    if ns.which == "conjecture":
        value = sums.bollobas_sum(fam)
        bound = sums.recursive_bound(fam.n, fam.d)
    elif ns.which == "skew":
        value = sums.skew_sum(fam)
        bound = Fraction(1)
    else:
        value = sums.pair_weighted_sum(fam)
        bound = Fraction(1)
    results = {
        "which": ns.which,
        "value": _rat(value),
        "bound": _rat(bound),
        "within_bound": value <= bound,
        "m": len(fam),
        "n": fam.n,
        "d": fam.d,
    }
    report = _report("sum", {"which": ns.which}, digest, ns.seed, results)
    return report, 0 if value <= bound else 1


def _cmd_construct(ns) -> tuple[dict, int]:
    kind = ns.kind
    if kind == "complete-uniform":
        if ns.sizes is None:
            raise FormatError("construct complete-uniform needs --sizes")
        fam = constructions.complete_family(_parse_sizes(ns.sizes))
        args = {"kind": kind, "sizes": list(_parse_sizes(ns.sizes))}
    elif kind == "layered-triples":
        if ns.n is None:
            raise FormatError("construct layered-triples needs --n")
        fam = constructions.layered_triple_family(ns.n)
        args = {"kind": kind, "n": ns.n}
    else:
        if ns.n is None or ns.d is None:
            raise FormatError(f"construct {kind} needs --n and --d")
        sizes = _parse_sizes(ns.sizes) if ns.sizes else None
        child = derive_seed(ns.seed, "construct")
        maker = (
            constructions.random_skew_family
            if kind == "random-skew"
            else constructions.random_bollobas_family
        )
        fam = maker(ns.n, ns.d, sizes, seed=child, target=ns.count)
        args = {
            "kind": kind,
            "n": ns.n,
            "d": ns.d,
            "sizes": list(sizes) if sizes else None,
            "count": ns.count,
        }
    results = {"m": len(fam), "family": family_to_json(fam)}
    if ns.lift:
        results["subspace_family"] = subspace_family_to_json(lift_to_spaces(fam))
    report = _report("construct", args, None, ns.seed, results)
    return report, 0


def _cmd_search(ns) -> tuple[dict, int]:
    sizes = _parse_sizes(ns.type)
    fn = search.max_bollobas_uniform if ns.mode == "bollobas" else search.max_skew_uniform
    result = fn(ns.n, sizes, node_budget=ns.node_budget)
    results = {
        "mode": ns.mode,
        "n": ns.n,
        "type": list(sizes),
        "max_size": result.max_size,
        "bound": result.bound,
        "nodes_explored": result.nodes_explored,
        "witness": family_to_json(result.witness),
    }
    report = _report("search", {"mode": ns.mode, "n": ns.n, "type": list(sizes)}, None, ns.seed, results)
    return report, 0


def _cmd_simulate(ns) -> tuple[dict, int]:
    text, digest = _read_input(ns.input)
    fam = family_from_json(_load_json(text))
    child = derive_seed(ns.seed, "simulate")
    rep = events.monte_carlo(fam, ns.mode, ns.trials, child)
    results = {
        "mode": rep.mode,
        "trials": rep.trials,
        "hits": list(rep.hits),
        "estimates": [_rat(e) for e in rep.estimates],
        "estimates_decimal": [f"{float(e):.9f}" for e in rep.estimates],
        "formula_values": [_rat(p) for p in rep.formula_values],
        "max_simultaneous_hits": rep.max_simultaneous_hits,
        "events_disjoint": rep.max_simultaneous_hits <= 1,
    }
    report = _report(
        "simulate", {"mode": ns.mode, "trials": ns.trials}, digest, ns.seed, results
    )
    return report, 0 if rep.max_simultaneous_hits <= 1 else 1


def _cmd_certify(ns) -> tuple[dict, int]:
    text, digest = _read_input(ns.input)
    obj = _load_json(text)
    if "tuples" in obj:
        fam = lift_to_spaces(family_from_json(obj))
    elif "entries" in obj:
        fam = subspace_family_from_json(obj)
    else:
        raise FormatError("input is neither a set family (tuples) nor a subspace family (entries)")
    child = derive_seed(ns.seed, "certify")
    cert = run_certify(fam, seed=child, max_retries=ns.max_retries)
    results = {
        "m": cert.m,
        "sizes": list(cert.sizes),
        "size_bound": cert.size_bound,
        "verdict": "pass" if cert.verdict else "fail",
        "skew_ok": cert.skew_ok,
        "skew_violation": list(cert.skew_violation) if cert.skew_violation else None,
        "violations": [list(v) for v in cert.violations],
        "retries": list(cert.retries),
        "evaluation": [[_rat(x) for x in row] for row in cert.evaluation],
    }
    report = _report("certify", {"max_retries": ns.max_retries}, digest, ns.seed, results)
    return report, 0 if cert.verdict else 1


def _cmd_bounds(ns) -> tuple[dict, int]:
    rows = [
        {"n": n, "bound": _rat(sums.recursive_bound(n, ns.d))} for n in _parse_range(ns.n)
    ]
    results = {"d": ns.d, "rows": rows}
    report = _report("bounds", {"n": ns.n, "d": ns.d}, None, ns.seed, results)
    return report, 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bollobas",
        description="Exact toolkit for cross-intersecting d-tuple systems.",
    )
    parser.add_argument("--input", help="input JSON path, or - for stdin")
    parser.add_argument("--output", help="output path, or - for stdout (default)")
    parser.add_argument("--seed", type=int, default=0, help="root seed for all randomness")
    parser.add_argument("--format", choices=["json"], default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check the (skew) cross condition of a family")
    p.add_argument("--mode", choices=["bollobas", "skew"], default="bollobas")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("sum", help="evaluate a weighted sum and compare to its bound")
    p.add_argument("--which", choices=["conjecture", "skew", "pair_weighted"], required=True)
    p.set_defaults(fn=_cmd_sum)

    p = sub.add_parser("construct", help="emit a generated family as JSON")
    p.add_argument("kind", choices=["complete-uniform", "layered-triples", "random-skew", "random-bollobas"])
    p.add_argument("--sizes", help="comma-separated part sizes, e.g. 1,1,2")
    p.add_argument("--n", type=int, help="ground set size")
    p.add_argument("--d", type=int, help="arity for random kinds")
    p.add_argument("--count", type=int, default=10, help="target size for random kinds")
    p.add_argument("--lift", action="store_true", help="also emit the coordinate-subspace lift")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("search", help="exhaustive maximum uniform system")
    p.add_argument("--mode", choices=["bollobas", "skew"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--type", required=True, help="comma-separated part sizes")
    p.add_argument("--node-budget", type=int, default=None)
    p.set_defaults(fn=_cmd_search)

    p = sub.add_parser("simulate", help="Monte Carlo delimiter-event statistics")
    p.add_argument("--mode", choices=list(events.MODES), required=True)
    p.add_argument("--trials", type=int, required=True)
    p.set_defaults(fn=_cmd_simulate)

    p = sub.add_parser("certify", help="size-bound certificate for a uniform skew family")
    p.add_argument("--max-retries", type=int, default=32)
    p.set_defaults(fn=_cmd_certify)

    p = sub.add_parser("bounds", help="tabulate the exact sum bound over n")
    p.add_argument("--n", required=True, help="single value or range lo..hi")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(fn=_cmd_bounds)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        report, code = ns.fn(ns)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BollobasError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(report, ns.output)
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    print(f"elapsed_ms={elapsed_ms:.1f}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
