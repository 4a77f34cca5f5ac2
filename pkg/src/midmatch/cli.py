"""Command-line front end: compute, transform, verify, enumerate-extremal.

Results go to standard output (or --out); progress for long tiers goes to
standard error. Exit codes: 0 success, 1 verification failure found,
2 usage or parse error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Sequence

from . import enumeration, middle, solvers, theorems
from .core import (
    CapacityError,
    Graph,
    ParseError,
    complete,
    complete_bipartite,
    cycle,
    parse_edge_list,
    parse_graph6,
    path,
    spider,
    star,
    to_dot,
    to_graph6,
)

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3

GENERATORS = ("path", "cycle", "complete", "kbip", "star", "spider", "g6")


def _graph_from_spec(spec: str) -> Graph:
    """Generator mini-language: path:N cycle:N complete:N kbip:A,B star:K
    spider:K g6:STRING; anything else is read as a bare graph6 string."""
    name, sep, rest = spec.partition(":")
    if sep and name in GENERATORS:
        if name == "g6":
            return parse_graph6(rest)
        if name == "kbip":
            parts = rest.split(",")
            if len(parts) != 2:
                raise ParseError(f"kbip needs two sizes, got {rest!r}")
            try:
                a, b = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"kbip sizes must be integers, got {rest!r}")
            return complete_bipartite(a, b)
        try:
            k = int(rest)
        except ValueError:
            raise ParseError(f"{name} needs an integer argument, got {rest!r}")
        return {"path": path, "cycle": cycle, "complete": complete,
                "star": star, "spider": spider}[name](k)
    return parse_graph6(spec)


def _load_input(args: argparse.Namespace) -> Graph:
    if getattr(args, "file", None):
        with open(args.file, "r", encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    if getattr(args, "input", None):
        return _graph_from_spec(args.input)
    raise ParseError("no input: pass a generator spec / graph6 string or --file")


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- compute -----------------------------------------------------------------------


def _compute_payload(g: Graph) -> dict:
    values: dict[str, dict | int | None] = {
        "n": g.n,
        "edge_count": g.edge_count,
        "max_degree": g.max_degree(),
        "min_degree": g.min_degree(),
    }

    def witnessed(wv: solvers.WitnessedValue, edge_witness: bool) -> dict:
        witness = [list(e) for e in wv.witness] if edge_witness else list(wv.witness)
        return {"value": wv.value, "witness": witness}

    values["gamma"] = witnessed(solvers.domination_number(g), False)
    values["alpha"] = witnessed(solvers.independence_number(g), False)
    values["iota"] = witnessed(solvers.isolation_number(g), False)
    values["nu"] = witnessed(solvers.maximum_matching(g), True)
    values["nu_prime"] = witnessed(solvers.min_maximal_matching(g), True)
    values["tau"] = witnessed(solvers.min_isolating_edge_set(g), True)
    try:
        mg = middle.middle_graph(g)
        values["iota_mid"] = witnessed(solvers.isolation_number(mg.graph), False)
    except CapacityError as exc:
        values["iota_mid"] = {"value": None, "reason": str(exc)}
    return values


def cmd_compute(args: argparse.Namespace) -> int:
    g = _load_input(args)
    payload = _compute_payload(g)
    if args.format == "json":
        doc = {"graph6": to_graph6(g), **payload}
        _emit(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n", args.out)
        return EXIT_OK
    lines = [f"graph6 {to_graph6(g)}"]
    for key in ("n", "edge_count", "max_degree", "min_degree"):
        lines.append(f"{key} = {payload[key]}")
    for key in ("gamma", "alpha", "iota", "nu", "nu_prime", "tau", "iota_mid"):
        entry = payload[key]
        if entry.get("value") is None:
            lines.append(f"{key} = unavailable ({entry['reason']})")
        else:
            lines.append(f"{key} = {entry['value']}  witness {entry['witness']}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


# -- transform ----------------------------------------------------------------------


def cmd_transform(args: argparse.Namespace) -> int:
    g = _load_input(args)
    mg = middle.middle_graph(g)
    if args.format == "dot":
        _emit(middle.to_dot(mg), args.out)
    else:
        _emit(to_graph6(mg.graph) + "\n", args.out)
    return EXIT_OK


# -- verify -------------------------------------------------------------------------

GRAPH_CLAIMS = (
    "thm-1.1", "prop-2.4", "prop-2.6",
    "prop-3.1", "prop-3.2", "prop-3.3", "prop-3.5", "prop-3.6", "thm-4.2",
    "thm-4.2-equality", "randomly-matchable", "lemma-2.1", "lemma-2.5",
)
TREE_CLAIMS = (
    "thm-1.3", "thm-5.2",
    "lemma-5.1.1", "lemma-5.1.2", "lemma-5.1.3",
    "lemma-5.1.4", "lemma-5.1.5", "lemma-5.1.6",
)
FORMULA_CLAIMS = ("thm-3.7", "thm-3.8", "lemma-4.1")

SPOT_CHAIN_COUNT = 500
SPOT_EQUALITY_COUNT = 500
SPOT_PROCEDURE_COUNT = 200
SPOT_EDGE_PROBABILITY = 0.3


def _expand_claims(tokens: Iterable[str]) -> set[str]:
    selected: set[str] = set()
    for token in tokens:
        matches = {
            cid for cid in theorems.CLAIMS
            if cid == token or cid.startswith(token + ".")
        }
        if not matches:
            raise ParseError(f"unknown claim id {token!r}")
        selected |= matches
    return selected


def _graph_reports(g: Graph, claims: frozenset[str]) -> list[theorems.TheoremReport]:
    out: list[theorems.TheoremReport] = []
    if "thm-1.1" in claims:
        out.append(theorems.check_isolation_matching_equality(g))
    if claims & {"prop-2.4", "prop-2.6"}:
        out.extend(r for r in theorems.check_invariant_chain(g) if r.claim_id in claims)
    if claims & {"prop-3.1", "prop-3.2", "prop-3.3", "prop-3.5", "prop-3.6", "thm-4.2"}:
        out.extend(r for r in theorems.check_bounds(g) if r.claim_id in claims)
    if "thm-4.2-equality" in claims:
        out.append(theorems.classify_half_equality(g))
    if "randomly-matchable" in claims:
        out.append(theorems.check_randomly_matchable_classification(g))
    if "lemma-2.1" in claims:
        out.append(theorems.check_minimum_set_canonicalization(g))
    if "lemma-2.5" in claims:
        out.append(theorems.check_isolating_edge_exchange(g))
    return out


def _tree_reports(t: Graph, claims: frozenset[str]) -> list[theorems.TheoremReport]:
    out: list[theorems.TheoremReport] = []
    if "thm-1.3" in claims:
        out.append(theorems.check_tree_bound(t))
    if "thm-5.2" in claims:
        out.append(theorems.check_extremal_recognition(t))
    if any(cid.startswith("lemma-5.1") for cid in claims):
        out.extend(
            r for r in theorems.check_extremal_tree_conditions(t) if r.claim_id in claims
        )
    return out


def _run_task(task: tuple) -> list[theorems.TheoremReport]:
    kind = task[0]
    if kind == "graph":
        return _graph_reports(parse_graph6(task[1]), frozenset(task[2]))
    if kind == "tree":
        return _tree_reports(parse_graph6(task[1]), frozenset(task[2]))
    if kind == "path":
        return [theorems.check_path_formula(task[1])]
    if kind == "cycle":
        return [theorems.check_cycle_formula(task[1])]
    if kind == "complete":
        return [theorems.check_complete_formula(task[1])]
    if kind == "kbip":
        return [theorems.check_complete_bipartite_formula(task[1], task[2])]
    raise AssertionError(f"unknown task kind {kind}")


def _formula_tasks(max_n: int, claims: set[str]) -> list[tuple]:
    tasks: list[tuple] = []
    if "thm-3.7" in claims:
        tasks += [("path", n) for n in range(2, max_n + 1)]
    if "thm-3.8" in claims:
        tasks += [("cycle", n) for n in range(3, max_n + 1)]
    if "lemma-4.1" in claims:
        tasks += [("complete", n) for n in range(1, min(10, max_n) + 1)]
        tasks += [("kbip", a, b) for a in range(1, 6) for b in range(a, 6)]
    return tasks


def _exhaustive_tasks(max_n: int, claims: set[str]) -> list[tuple]:
    tasks: list[tuple] = []
    graph_claims = tuple(sorted(claims & set(GRAPH_CLAIMS)))
    tree_claims = tuple(sorted(claims & set(TREE_CLAIMS)))
    if graph_claims:
        for n in range(1, max_n + 1):
            for g in enumeration.all_connected_graphs(n, allow_slow=True):
                tasks.append(("graph", to_graph6(g), graph_claims))
    if tree_claims:
        for n in range(3, enumeration.TREE_ENUM_CAP + 1):
            for t in enumeration.all_trees(n):
                tasks.append(("tree", to_graph6(t), tree_claims))
    return tasks


def _spot_tasks(seed: int, claims: set[str]) -> list[tuple]:
    tasks: list[tuple] = []
    chain = tuple(sorted(claims & {"thm-1.1", "prop-2.4", "prop-2.6"}))
    if chain:
        for g in enumeration.random_connected_corpus(
            SPOT_CHAIN_COUNT, (7, 8), seed, SPOT_EDGE_PROBABILITY
        ):
            tasks.append(("graph", to_graph6(g), chain))
    if "thm-4.2-equality" in claims:
        eq = ("thm-4.2-equality",)
        tasks.append(("graph", to_graph6(complete(8)), eq))
        tasks.append(("graph", to_graph6(complete_bipartite(4, 4)), eq))
        for g in enumeration.random_connected_corpus(
            SPOT_EQUALITY_COUNT, (8,), seed + 1000, SPOT_EDGE_PROBABILITY
        ):
            tasks.append(("graph", to_graph6(g), eq))
    procedures = tuple(sorted(claims & {"lemma-2.1", "lemma-2.5"}))
    if procedures:
        for g in enumeration.random_connected_corpus(
            SPOT_PROCEDURE_COUNT, (7,), seed + 2000, SPOT_EDGE_PROBABILITY
        ):
            tasks.append(("graph", to_graph6(g), procedures))
    return tasks


def _run_tasks(tasks: Sequence[tuple], parallel: int) -> list[theorems.TheoremReport]:
    reports: list[theorems.TheoremReport] = []
    total = len(tasks)
    if parallel > 1:
        from multiprocessing import Pool

        with Pool(processes=parallel) as pool:
            for i, batch in enumerate(pool.imap(_run_task, tasks, chunksize=8), 1):
                reports.extend(batch)
                _progress(i, total)
    else:
        for i, task in enumerate(tasks, 1):
            reports.extend(_run_task(task))
            _progress(i, total)
    reports.sort(key=lambda r: (r.graph6, r.claim_id))
    return reports


def _progress(done: int, total: int) -> None:
    if total >= 100 and (done % 50 == 0 or done == total):
        print(f"progress: {done}/{total} tasks", file=sys.stderr)


def cmd_verify(args: argparse.Namespace) -> int:
    claims = (
        _expand_claims(args.claims.split(","))
        if args.claims
        else set(theorems.CLAIMS)
    )
    if args.tier == "formulas":
        tasks = _formula_tasks(args.max_n or 30, claims)
    elif args.tier == "exhaustive":
        max_n = args.max_n or 6
        if not 1 <= max_n <= enumeration.GRAPH_ENUM_CAP:
            raise ParseError(f"--max-n for exhaustive must be 1..{enumeration.GRAPH_ENUM_CAP}")
        tasks = _exhaustive_tasks(max_n, claims)
    else:
        tasks = _spot_tasks(args.seed, claims)
    reports = _run_tasks(tasks, args.parallel)
    if args.format == "csv":
        _emit(theorems.summary_csv(reports), args.out)
    else:
        body = "".join(r.to_json() + "\n" for r in reports)
        _emit(body, args.out)
        sys.stderr.write(theorems.summary_csv(reports))
    failures = sum(1 for r in reports if r.verdict == theorems.FAIL)
    return EXIT_FAILURES if failures else EXIT_OK


# -- enumerate-extremal ----------------------------------------------------------------


def cmd_enumerate_extremal(args: argparse.Namespace) -> int:
    max_n = args.max_n or enumeration.TREE_ENUM_CAP
    if not 3 <= max_n <= enumeration.TREE_ENUM_CAP:
        raise ParseError(f"--max-n must be 3..{enumeration.TREE_ENUM_CAP}")
    lines = []
    disagreements = []
    for n in range(3, max_n + 1):
        for t in enumeration.all_trees(n):
            extremal = theorems.is_extremal_tree_oracle(t)
            classification = theorems.recognize_extremal_tree(t)
            if extremal != (classification != "none"):
                disagreements.append((to_graph6(t), extremal, classification))
            if extremal:
                if args.format == "json":
                    lines.append(json.dumps(
                        {"graph6": to_graph6(t), "n": n, "class": classification},
                        sort_keys=True, separators=(",", ":"),
                    ))
                else:
                    lines.append(f"{to_graph6(t)} {classification}")
    _emit("".join(line + "\n" for line in lines), args.out)
    for g6, extremal, classification in disagreements:
        print(
            f"disagreement: {g6} oracle={'extremal' if extremal else 'not-extremal'}"
            f" recognizer={classification}",
            file=sys.stderr,
        )
    return EXIT_FAILURES if disagreements else EXIT_OK


# -- argument parsing --------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="midmatch",
        description="Exact graph invariants, middle-graph transforms, and claim verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "input", nargs="?",
            help="generator spec (path:N cycle:N complete:N kbip:A,B star:K "
                 "spider:K g6:STR) or a bare graph6 string",
        )
        p.add_argument("--file", help="read an edge-list file: first line n, then 'u v' lines")
        p.add_argument("--out", help="write output to this path instead of stdout")

    p_compute = sub.add_parser("compute", help="all invariants of one graph, with witnesses")
    add_input(p_compute)
    p_compute.add_argument("--format", choices=("text", "json"), default="text")
    p_compute.set_defaults(func=cmd_compute)

    p_transform = sub.add_parser("transform", help="emit the middle graph")
    add_input(p_transform)
    p_transform.add_argument(
        "--format", choices=("text", "dot"), default="text",
        help="text = one graph6 line; dot = DOT with provenance shapes",
    )
    p_transform.set_defaults(func=cmd_transform)

    p_verify = sub.add_parser("verify", help="run claim checkers over a graph corpus")
    p_verify.add_argument(
        "--tier", choices=("exhaustive", "spot", "formulas"), default="exhaustive",
        help="exhaustive: all connected graphs up to --max-n plus all trees to 12; "
             "spot: seeded random corpora; formulas: paths/cycles/completes",
    )
    p_verify.add_argument("--claims", help="comma-separated claim ids (prefixes allowed)")
    p_verify.add_argument("--max-n", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--format", choices=("json", "csv"), default="json",
                          help="json = report lines (summary CSV on stderr); csv = summary only")
    p_verify.add_argument("--out", help="write output to this path instead of stdout")
    p_verify.add_argument("--parallel", type=int, default=1, help="worker processes")
    p_verify.set_defaults(func=cmd_verify)

    p_extremal = sub.add_parser(
        "enumerate-extremal",
        help="catalog every tree attaining floor((n-1)/2) with its recognized class",
    )
    p_extremal.add_argument("--max-n", type=int, default=None)
    p_extremal.add_argument("--format", choices=("text", "json"), default="text")
    p_extremal.add_argument("--out", help="write output to this path instead of stdout")
    p_extremal.set_defaults(func=cmd_enumerate_extremal)
    return parser


def list_claims() -> str:
    width = max(len(cid) for cid in theorems.CLAIMS)
    return "\n".join(f"{cid.ljust(width)}  {desc}" for cid, desc in sorted(theorems.CLAIMS.items()))


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
