"""Command line front end.

Subcommands: solve (optimum pre-assignment for a DIMACS graph), check
(feasibility of a given pre-assignment), generate (seeded benchmark
instances with a unique minimum cover), reduce (instance translations),
and bench (CSV timing table over a directory of instances).

Exit codes: 0 success / feasible / decision-yes, 1 infeasible or
decision-no, 2 malformed input, 3 a size or time limit was hit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from .errors import LimitExceeded, ParseError
from .graph import Model, PreAssignment, parse_dimacs, render_dimacs
from .limits import DEFAULT_ENUM_VERTEX_LIMIT, ENV_VERTEX_LIMIT
from .random_graphs import gnp_graph, random_tree
from .reductions import build_bipartite_gadget, build_gc, parse_dimacs_cnf
from .solvers import solve
from .uniqueness import has_unique_min_vc, is_feasible, reduce_instance
from .vertex_cover import SolveStats

__all__ = ["RunConfig", "main"]

_CSV_HEADER = "instance,n,m,tau,model,algo,opt_size,nodes,elapsed_ms,agrees"


@dataclass
class RunConfig:
    """Everything one invocation needs; seed and inputs pin down outputs."""

    command: str
    model: str = "exclude"
    algo: str = "auto"
    input: str | None = None
    output: str | None = None
    seed: int = 0
    family: str = "gnp"
    n: int = 12
    p: float = 0.3
    k: int | None = None
    vertex_limit: int | None = None
    time_cap: float | None = None
    enum_limit: int = DEFAULT_ENUM_VERTEX_LIMIT
    json_output: bool = False
    kind: str | None = None
    directory: str | None = None

    def deadline(self) -> float | None:
        if self.time_cap is None:
            return None
        if self.time_cap <= 0:
            raise ValueError("time cap must be positive")
        return time.perf_counter() + self.time_cap


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, payload: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(payload)


def _dump_json(data: dict) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _print_result(cfg: RunConfig, result) -> None:
    if cfg.json_output:
        print(json.dumps(result.to_json_dict(), sort_keys=True))
        return
    print(f"model        {result.model.value}")
    print(f"opt_size     {result.opt_size}")
    print(f"include      {sorted(result.pre.include)}")
    print(f"exclude      {sorted(result.pre.exclude)}")
    print(f"unique_cover {sorted(result.unique_cover)}")
    stats = result.stats
    print(f"nodes        {stats.nodes_explored}")
    print(f"elapsed_s    {stats.elapsed:.6f}")


def cmd_solve(cfg: RunConfig) -> int:
    g = parse_dimacs(_read(cfg.input))
    result = solve(
        g,
        cfg.model,
        cfg.algo,
        vertex_limit=cfg.vertex_limit,
        enum_vertex_limit=cfg.enum_limit,
        deadline=cfg.deadline(),
    )
    _print_result(cfg, result)
    if cfg.k is not None and result.opt_size > cfg.k:
        return 1
    return 0


def cmd_check(cfg: RunConfig) -> int:
    g = parse_dimacs(_read(cfg.input))
    try:
        data = json.loads(_read(cfg.output))  # second positional path
    except json.JSONDecodeError as exc:
        raise ParseError(f"pre-assignment file: {exc}") from None
    pre = PreAssignment.from_json_dict(data, g.n)
    stats = SolveStats(cfg.deadline())
    report = is_feasible(g, pre, vertex_limit=cfg.vertex_limit, stats=stats)
    if cfg.json_output:
        payload = {
            "feasible": report.feasible,
            "reason": None if report.reason is None else report.reason.value,
            "witness": None if report.witness is None else sorted(report.witness),
        }
        print(json.dumps(payload, sort_keys=True))
    elif report.feasible:
        print(f"feasible: unique cover {sorted(report.witness)}")
    else:
        print(f"infeasible: {report.reason.value}")
    return 0 if report.feasible else 1


def cmd_generate(cfg: RunConfig) -> int:
    if cfg.input is not None:
        g = parse_dimacs(_read(cfg.input))
    elif cfg.family == "tree":
        g = random_tree(cfg.n, cfg.seed)
    else:
        g = gnp_graph(cfg.n, cfg.p, cfg.seed)
    result = solve(
        g,
        cfg.model,
        cfg.algo,
        vertex_limit=cfg.vertex_limit,
        enum_vertex_limit=cfg.enum_limit,
        deadline=cfg.deadline(),
    )
    reduced, expected_tau, _ = reduce_instance(g, result.pre)
    unique, solution = has_unique_min_vc(reduced)
    if not unique or solution.tau != expected_tau:
        raise AssertionError("generated instance failed verification")
    meta = {
        "expected_tau": expected_tau,
        "source_seed": cfg.seed,
        "pre_assignment": result.pre.to_json_dict(),
    }
    _write(cfg.output, render_dimacs(reduced))
    _write(cfg.output + ".json", _dump_json(meta))
    print(
        f"wrote {cfg.output}: n={reduced.n} m={reduced.m} "
        f"expected_tau={expected_tau}"
    )
    return 0


def cmd_reduce(cfg: RunConfig) -> int:
    if cfg.kind == "fcp":
        cnf = parse_dimacs_cnf(_read(cfg.input))
        g, labeling = build_gc(cnf)
        meta = labeling.to_json_dict()
    else:
        src = parse_dimacs(_read(cfg.input))
        g = build_bipartite_gadget(src)
        meta = {
            "original_n": src.n,
            "pendant": {str(v): src.n + v for v in range(src.n)},
        }
    _write(cfg.output, render_dimacs(g))
    _write(cfg.output + ".json", _dump_json(meta))
    print(f"wrote {cfg.output}: n={g.n} m={g.m}")
    return 0


def cmd_bench(cfg: RunConfig) -> int:
    names = sorted(
        name
        for name in os.listdir(cfg.directory)
        if os.path.isfile(os.path.join(cfg.directory, name))
        and not name.endswith(".json")
    )
    print(_CSV_HEADER)
    for name in names:
        path = os.path.join(cfg.directory, name)
        try:
            g = parse_dimacs(_read(path))
            result = solve(
                g,
                cfg.model,
                cfg.algo,
                vertex_limit=cfg.vertex_limit,
                enum_vertex_limit=cfg.enum_limit,
                deadline=cfg.deadline(),
            )
            tau = len(result.unique_cover)
            agrees = ""
            if cfg.algo != "enum" and g.n <= cfg.enum_limit:
                reference = solve(g, cfg.model, "enum", deadline=cfg.deadline())
                agrees = "true" if reference.opt_size == result.opt_size else "false"
            print(
                f"{name},{g.n},{g.m},{tau},{cfg.model},{cfg.algo},"
                f"{result.opt_size},{result.stats.nodes_explored},"
                f"{result.stats.elapsed * 1000.0:.3f},{agrees}"
            )
        except (ParseError, ValueError, LimitExceeded, OSError):
            print(f"{name},,,,{cfg.model},{cfg.algo},,,,error")
    return 0


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pauvc",
        description=(
            "Minimum pre-assignments forcing a unique minimum vertex cover. "
            f"The {ENV_VERTEX_LIMIT} environment variable overrides the "
            "default vertex cap."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--model",
            choices=["include", "exclude", "mixed"],
            default="exclude",
            help="pre-assignment model (default: exclude)",
        )
        p.add_argument(
            "--algo",
            choices=["auto", "enum", "fpt", "tree"],
            default="auto",
            help="strategy (default: auto)",
        )
        p.add_argument("--vertex-limit", type=int, default=None)
        p.add_argument("--time-cap", type=float, default=None, metavar="SECONDS")
        p.add_argument(
            "--enum-limit",
            type=int,
            default=DEFAULT_ENUM_VERTEX_LIMIT,
            help="vertex cap for the enumeration strategy",
        )

    p_solve = sub.add_parser("solve", help="optimum pre-assignment of a graph")
    p_solve.add_argument("graph", help="DIMACS graph file")
    common(p_solve)
    p_solve.add_argument("--k", type=int, default=None,
                         help="decision variant: exit 1 when opt_size > k")
    p_solve.add_argument("--json", action="store_true")

    p_check = sub.add_parser("check", help="feasibility of a pre-assignment")
    p_check.add_argument("graph", help="DIMACS graph file")
    p_check.add_argument("pre", help="pre-assignment JSON file")
    p_check.add_argument("--vertex-limit", type=int, default=None)
    p_check.add_argument("--time-cap", type=float, default=None, metavar="SECONDS")
    p_check.add_argument("--json", action="store_true")

    p_gen = sub.add_parser("generate", help="emit a unique-cover benchmark instance")
    src = p_gen.add_mutually_exclusive_group()
    src.add_argument("--input", help="solve this DIMACS graph instead of sampling")
    src.add_argument("--family", choices=["gnp", "tree"], default="gnp")
    p_gen.add_argument("--n", type=int, default=12)
    p_gen.add_argument("--p", type=float, default=0.3)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--output", required=True)
    common(p_gen)

    p_red = sub.add_parser("reduce", help="translate an instance")
    p_red.add_argument("kind", choices=["fcp", "ids"],
                       help="fcp: CNF to cover gadget; ids: pendant gadget")
    p_red.add_argument("input")
    p_red.add_argument("--output", required=True)

    p_bench = sub.add_parser("bench", help="CSV timing table for a directory")
    p_bench.add_argument("directory")
    common(p_bench)
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    for field in ("model", "algo", "seed", "family", "n", "p", "k",
                  "vertex_limit", "time_cap", "enum_limit", "kind",
                  "directory", "output"):
        value = getattr(args, field, None)
        if value is not None:
            setattr(cfg, field, value)
    if args.command in ("solve", "check"):
        cfg.input = args.graph
    else:
        cfg.input = getattr(args, "input", None)
    if args.command == "check":
        cfg.output = args.pre
    cfg.json_output = bool(getattr(args, "json", False))
    return cfg


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    cfg = _config_from_args(args)
    handlers = {
        "solve": cmd_solve,
        "check": cmd_check,
        "generate": cmd_generate,
        "reduce": cmd_reduce,
        "bench": cmd_bench,
    }
    try:
        return handlers[cfg.command](cfg)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
