"""Command line front end and sweep harness.

Subcommands: gen, bound, color, verify, exact, sweep. Exit codes: 0 success,
1 guarantee violation (a procedure aborted or failed where its hypotheses
promise success, or a sweep produced an invalid coloring), 2 usage, config or
input errors.
"""

from __future__ import annotations

import argparse
import csv
import random
import sys
import time
from dataclasses import dataclass, fields

from . import bounds, coloring, core, generators
from .errors import FormatError, HypergraphError

PROCEDURES = ("greedy_recolor", "uniform_maxdeg")

CSV_COLUMNS = (
    "kind",
    "params",
    "seed",
    "n",
    "r_or_rank",
    "num_vertices",
    "palette_size",
    "procedure",
    "outcome",
    "colors_used",
    "budget_m",
    "case_limit",
    "ratio",
    "wall_time_ms",
)


@dataclass
class ExperimentRecord:
    """One sweep row; string fields hold "" when a value does not apply."""

    kind: str
    params: str
    seed: int
    n: int
    r_or_rank: str
    num_vertices: int
    palette_size: int
    procedure: str
    outcome: str
    colors_used: str
    budget_m: str
    case_limit: str
    ratio: str
    wall_time_ms: int

    def row(self) -> list:
        return [getattr(self, f.name) for f in fields(self)]


@dataclass
class SweepConfig:
    generators: list[str]
    procedures: list[str]
    axes: dict[str, list[int]]
    seeds: int
    palette: str


_AXIS_KEYS = {"n", "r", "rank", "num_vertices", "n_edges", "q", "force_high_degree"}

# per-kind axis order fixes the cartesian product order of a sweep
_KIND_AXES = {
    "projective_plane": ("q",),
    "sunflower": ("n", "rank"),
    "random_regular_linear": ("n", "r"),
    "random_uniform_linear": ("num_vertices", "rank", "n_edges", "force_high_degree"),
}


def _normalize_procedure(name: str) -> str:
    return name.strip().replace("-", "_")


def parse_sweep_config(text: str) -> SweepConfig:
    gens: list[str] = []
    procedures: list[str] = []
    axes: dict[str, list[int]] = {}
    seeds = 1
    palette = "budget"
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise FormatError(f"config line {lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key == "generator":
            gens = [g.strip() for g in value.split(",") if g.strip()]
            for g in gens:
                if g not in _KIND_AXES:
                    raise FormatError(f"config line {lineno}: unknown generator {g!r}")
        elif key == "procedure":
            procedures = [_normalize_procedure(p) for p in value.split(",") if p.strip()]
            for p in procedures:
                if p not in PROCEDURES:
                    raise FormatError(f"config line {lineno}: unknown procedure {p!r}")
        elif key == "seeds":
            seeds = int(value)
        elif key == "palette":
            palette = value
        elif key in _AXIS_KEYS:
            try:
                axes[key] = [int(v) for v in value.split(",") if v.strip()]
            except ValueError as exc:
                raise FormatError(f"config line {lineno}: bad integer list") from exc
        else:
            raise FormatError(f"config line {lineno}: unknown key {key!r}")
    if gens and not procedures:
        raise FormatError("config must name at least one procedure")
    if palette not in ("budget", "efl") and not palette.lstrip("-").isdigit():
        raise FormatError(f"palette must be 'budget', 'efl' or an integer, got {palette!r}")
    return SweepConfig(gens, procedures, axes, seeds, palette)


def _resolve_palette(cfg_palette: str, h: core.Hypergraph) -> int:
    if cfg_palette == "efl":
        return h.num_edges
    if cfg_palette == "budget":
        r = core.regularity(h)
        if r is None or r < 3:
            raise FormatError(
                "palette 'budget' needs a regular instance with degree >= 3; "
                "set palette to 'efl' or an integer"
            )
        return bounds.color_budget(h.num_edges, r)
    return int(cfg_palette)


def _run_procedure(
    h: core.Hypergraph, procedure: str, palette: int | None
) -> tuple[str, coloring.Coloring | None, int, int]:
    """Returns (outcome, coloring or None, palette used, wall ms)."""
    start = time.perf_counter()
    if procedure == "greedy_recolor":
        assert palette is not None
        result = coloring.greedy_recolor(h, palette)
        used_palette = palette
        outcome = "colored" if isinstance(result, coloring.Coloring) else "aborted"
    else:
        result = coloring.uniform_maxdeg_color(h)
        used_palette = (5 * h.num_edges) // 4
        outcome = "colored" if isinstance(result, coloring.Coloring) else "failed"
    elapsed_ms = int(round((time.perf_counter() - start) * 1000))
    painted = result if isinstance(result, coloring.Coloring) else None
    return outcome, painted, used_palette, elapsed_ms


def _theorem_promises_success(
    h: core.Hypergraph, procedure: str, palette: int
) -> bool:
    if procedure == "greedy_recolor":
        r = core.regularity(h)
        return (
            r is not None
            and r >= 3
            and core.is_linear(h)
            and palette >= bounds.color_budget(h.num_edges, r)
        )
    degrees = h.degrees()
    return (
        core.is_linear(h)
        and core.uniform_rank(h) is not None
        and 2 * max(degrees, default=0) >= h.num_edges
    )


def run_sweep(
    cfg: SweepConfig, out_path: str, root_seed: int = 0
) -> tuple[list[ExperimentRecord], int]:
    """Execute a sweep, write the CSV, and return (records, exit code)."""
    records: list[ExperimentRecord] = []
    exit_code = 0
    counter = 0
    for kind in cfg.generators:
        axis_names = _KIND_AXES[kind]
        missing = [a for a in axis_names if a not in cfg.axes]
        if missing:
            raise FormatError(f"generator {kind} needs axes {missing}")
        combos: list[tuple[int, ...]] = [()]
        for name in axis_names:
            combos = [c + (v,) for c in combos for v in cfg.axes[name]]
        for combo in combos:
            for _ in range(cfg.seeds):
                seed = root_seed * 1_000_000 + counter
                counter += 1
                spec = generators.GeneratorSpec(kind, combo, seed)
                params = ";".join(
                    f"{name}={value}" for name, value in zip(axis_names, combo)
                )
                h = generators.generate(spec)
                reg = core.regularity(h)
                rank = core.uniform_rank(h)
                r_or_rank = reg if reg is not None else rank
                for procedure in cfg.procedures:
                    palette = (
                        _resolve_palette(cfg.palette, h)
                        if procedure == "greedy_recolor"
                        else None
                    )
                    outcome, painted, used_palette, ms = _run_procedure(
                        h, procedure, palette
                    )
                    colors_used = ""
                    ratio = ""
                    if painted is not None:
                        violations = coloring.verify_coloring(h, painted)
                        if violations:
                            print(
                                f"invalid coloring on {kind} {params} seed {seed} "
                                f"({procedure}): {violations[:5]}",
                                file=sys.stderr,
                            )
                            return records, 1
                        colors_used = str(painted.colors_used)
                        if h.num_edges:
                            ratio = f"{painted.colors_used / h.num_edges:.6f}"
                    if procedure == "greedy_recolor" and reg is not None and reg >= 3:
                        budget = str(bounds.color_budget(h.num_edges, reg))
                        limit = f"{bounds.case_limit(reg):.3f}"
                    elif procedure == "uniform_maxdeg":
                        budget = str((5 * h.num_edges) // 4)
                        limit = "1.250"
                    else:
                        budget, limit = "", ""
                    records.append(
                        ExperimentRecord(
                            kind=kind,
                            params=params,
                            seed=seed,
                            n=h.num_edges,
                            r_or_rank="" if r_or_rank is None else str(r_or_rank),
                            num_vertices=h.num_vertices,
                            palette_size=used_palette,
                            procedure=procedure,
                            outcome=outcome,
                            colors_used=colors_used,
                            budget_m=budget,
                            case_limit=limit,
                            ratio=ratio,
                            wall_time_ms=ms,
                        )
                    )
                    if outcome != "colored" and _theorem_promises_success(
                        h, procedure, used_palette
                    ):
                        print(
                            f"guarantee violation: {procedure} did not color "
                            f"{kind} {params} seed {seed}",
                            file=sys.stderr,
                        )
                        exit_code = 1
    with open(out_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for record in records:
            writer.writerow(record.row())
    return records, exit_code


def _cmd_gen(args: argparse.Namespace) -> int:
    params = tuple(int(p) for p in args.params.split(",") if p.strip())
    spec = generators.GeneratorSpec(args.kind, params, args.seed)
    h = generators.generate(spec)
    core.dump_instance(h, args.out)
    summary = core.stats(h)
    print(
        f"wrote {args.out}: {summary.size_n} edges, {summary.num_vertices} vertices, "
        f"linear={summary.is_linear}"
    )
    return 0


def _cmd_bound(args: argparse.Namespace) -> int:
    report = bounds.bound_report(args.n, args.r)
    if args.csv:
        writer = csv.writer(sys.stdout)
        writer.writerow(
            ["n", "r", "a", "b", "beta_floored", "beta_continuous", "budget_m", "case_limit"]
        )
        writer.writerow(
            [
                report.n,
                report.r,
                report.a,
                f"{float(report.b):.9f}",
                f"{report.beta_floored:.9f}",
                f"{report.beta_continuous:.9f}",
                report.budget_m,
                f"{report.case_limit:.3f}",
            ]
        )
    else:
        print(f"n                {report.n}")
        print(f"r                {report.r}")
        print(f"a                {report.a}")
        print(f"b                {report.b}")
        print(f"beta_floored     {report.beta_floored:.9f}")
        print(f"beta_continuous  {report.beta_continuous:.9f}")
        print(f"budget_m         {report.budget_m}")
        print(f"case_limit       {report.case_limit}")
    return 0


def _parse_order(spec: str, h: core.Hypergraph) -> list[int] | None:
    if spec == "id":
        return None
    if spec.startswith("random:"):
        order = list(range(h.num_vertices))
        random.Random(int(spec.split(":", 1)[1])).shuffle(order)
        return order
    raise FormatError(f"order must be 'id' or 'random:SEED', got {spec!r}")


def _cmd_color(args: argparse.Namespace) -> int:
    h = core.load_instance(args.infile)
    procedure = _normalize_procedure(args.procedure)
    if procedure == "greedy_recolor":
        if args.palette is not None:
            palette = args.palette
        else:
            r = core.regularity(h)
            if r is None or r < 3:
                raise FormatError(
                    "instance is not regular with degree >= 3; pass --palette"
                )
            palette = bounds.color_budget(h.num_edges, r)
        order = _parse_order(args.order, h)
        result = coloring.greedy_recolor(h, palette, order)
        if isinstance(result, coloring.AbortReport):
            print(
                f"aborted at vertex {result.aborted_vertex} with palette "
                f"{result.palette_size}; conflict set size "
                f"{len(result.conflict_set_S)}",
                file=sys.stderr,
            )
            return 1
    else:
        if args.palette is not None:
            raise FormatError("uniform-maxdeg fixes its own palette; drop --palette")
        result = coloring.uniform_maxdeg_color(h)
        if isinstance(result, coloring.FailureReport):
            print(
                f"failed at vertex {result.vertex} in phase {result.phase}: "
                f"{result.detail}",
                file=sys.stderr,
            )
            return 1
    violations = coloring.verify_coloring(h, result)
    if violations:
        print(f"produced an invalid coloring: {violations[:5]}", file=sys.stderr)
        return 1
    coloring.dump_coloring(result, args.out)
    print(f"wrote {args.out}: {result.colors_used} colors")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    h = core.load_instance(args.infile)
    assignment = coloring.load_coloring(args.coloring)
    violations = coloring.verify_coloring(h, assignment)
    if violations:
        for e_index, u, w in violations[:20]:
            print(f"edge {e_index}: vertices {u} and {w} share a color")
        print(f"{len(violations)} violation(s)")
        return 1
    print("valid")
    return 0


def _cmd_exact(args: argparse.Namespace) -> int:
    h = core.load_instance(args.infile)
    print(coloring.exact_chromatic(h, args.cap))
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    with open(args.config, "r", encoding="utf-8") as fh:
        cfg = parse_sweep_config(fh.read())
    records, code = run_sweep(cfg, args.out, args.seed)
    print(f"wrote {args.out}: {len(records)} record(s)")
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercolor",
        description="Linear hypergraph coloring procedures, budgets and sweeps",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance file")
    p.add_argument("--kind", required=True, choices=sorted(_KIND_AXES))
    p.add_argument("--params", required=True, help="comma-separated integers")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bound", help="print budget quantities for (n, r)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("color", help="run a coloring procedure on an instance file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument(
        "--procedure",
        required=True,
        choices=["greedy-recolor", "uniform-maxdeg"],
    )
    p.add_argument("--palette", type=int, default=None)
    p.add_argument("--order", default="id", help="'id' or 'random:SEED'")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("verify", help="check a coloring file against an instance")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--coloring", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("exact", help="exact chromatic number of a small instance")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--cap", type=int, default=20)
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("sweep", help="run a config-driven experiment sweep to CSV")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=0, help="root seed for derived instance seeds")
    p.set_defaults(func=_cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HypergraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
