"""Command-line interface.

Subcommands
-----------
analyze    full rigidity report with spectral invariants (JSON or text)
decide     exit 0 if edge-rigid, 1 if not, 2 on error
optimize   minimize S_k / maximize s_k over the weight simplex
profile    optimize for every k and both objectives
certify    primal-dual certificate for one eigenvalue level
embed      write the spectral embedding of one eigenspace as CSV
tau        (weighted) spanning-tree count
kf         Kirchhoff index

Results go to stdout (or --output), diagnostics to stderr. With the same
input, flags and seed, JSON output is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from .eigensum import certificate, k_rigidity_profile, optimize
from .errors import EdgeRigidError
from .graphs import Graph, WeightVector, laplacian, parse_graph
from .rigidity import decide_edge_rigid_exact, full_report
from .spectral import (
    edge_isometry_check,
    effective_resistances,
    embedding,
    kirchhoff_index,
    spectrum,
    tree_count_exact,
    weighted_tree_count,
)

EXIT_OK = 0
EXIT_NOT_RIGID = 1
EXIT_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgerigid",
        description="Edge-rigidity and conformal rigidity of graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, tol_default: float = 1e-8) -> None:
        p.add_argument("path", help="input graph file (edge list or graph6)")
        p.add_argument(
            "--input-format",
            choices=["edge-list", "graph6"],
            default=None,
            help="override format auto-detection (.g6 means graph6)",
        )
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--output", default=None, help="write results here instead of stdout")
        p.add_argument(
            "--tol",
            type=float,
            default=tol_default,
            help=f"tolerance (default {tol_default:g})",
        )
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("analyze", help="full rigidity report with spectral invariants")
    add_common(p)

    p = sub.add_parser("decide", help="exit 0 iff the graph is edge-rigid")
    add_common(p)
    p.add_argument("--max-power", type=int, default=None, help="walk test depth (default n-1)")

    p = sub.add_parser("optimize", help="optimize one extreme eigenvalue sum")
    add_common(p, tol_default=1e-5)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--objective", choices=["upper", "lower"], default="upper")
    p.add_argument("--iters", type=int, default=5000)

    p = sub.add_parser("profile", help="optimize for every k and both objectives")
    add_common(p, tol_default=1e-5)
    p.add_argument("--iters", type=int, default=5000)

    p = sub.add_parser("certify", help="primal-dual certificate at one level")
    add_common(p)
    p.add_argument("--j", type=int, required=True, help="eigenvalue level, 1..r-1")

    p = sub.add_parser("embed", help="CSV spectral embedding of one eigenspace")
    add_common(p)
    p.add_argument("--eigenspace", type=int, default=2, help="eigenvalue group index, 2..r")

    p = sub.add_parser("tau", help="spanning-tree count")
    add_common(p)
    p.add_argument("--weights", default=None, help="weights file (m lines)")

    p = sub.add_parser("kf", help="Kirchhoff index")
    add_common(p)
    p.add_argument("--weights", default=None)

    return parser


def _load_graph(args: argparse.Namespace) -> Graph:
    path = Path(args.path)
    data = path.read_bytes()
    fmt = args.input_format
    if fmt is None and path.suffix == ".g6":
        fmt = "graph6"
    return parse_graph(data, fmt)


def _load_weights(args: argparse.Namespace, m: int) -> WeightVector | None:
    if getattr(args, "weights", None) is None:
        return None
    return WeightVector.from_text(Path(args.weights).read_text(), m)


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.format == "json":
        out = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        out = text
    if args.output:
        Path(args.output).write_text(out)
    else:
        sys.stdout.write(out)


def cmd_analyze(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    report = full_report(g, tol=args.tol)
    s = spectrum(laplacian(g).astype(float))
    iso = edge_isometry_check(g, s, tol=args.tol)
    resistances = effective_resistances(g)
    kf = kirchhoff_index(g)
    tau_exact = tree_count_exact(g)
    payload = {
        "graph": {"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges]},
        "report": report.to_dict(),
        "spectrum": {
            "eigenvalues": [float(v) for v in s.eigenvalues],
            "multiplicities": list(s.multiplicities),
            "group_tol": s.group_tol,
        },
        "gamma_anomalies": list(iso.gamma_anomalies),
        "kirchhoff_index": kf,
        "tree_count": float(weighted_tree_count(g)),
        "tree_count_exact": tau_exact,
        "effective_resistances": [float(r) for r in resistances],
        "foster_sum": float(np.sum(resistances)),
        "parameters": {"tol": args.tol, "seed": args.seed},
    }
    lines = [
        f"graph: n={g.n} m={g.m}",
        f"edge_rigid: {report.edge_rigid}",
        f"verdicts: {report.verdicts}",
        f"degree_class: {report.degree_class.kind} {report.degree_class.degrees}",
        f"walk_class: {report.walk_class.label if report.walk_class else 'skipped'}",
        f"eigenvalues: {[round(v, 6) for v in s.eigenvalues]} x {list(s.multiplicities)}",
        f"tree_count_exact: {tau_exact}",
        f"kirchhoff_index: {kf}",
        f"resistances: {[round(float(r), 6) for r in resistances]}",
    ]
    if report.walk_constants is not None:
        lines.insert(3, f"walk_constants: {list(report.walk_constants)}")
    if report.witness is not None:
        lines.insert(3, f"witness: {report.witness.to_dict()}")
    _emit(args, payload, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_decide(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    res = decide_edge_rigid_exact(g, max_power=args.max_power)
    if res.rigid:
        sys.stdout.write("edge-rigid\n")
        return EXIT_OK
    w = res.witness
    sys.stdout.write(
        f"not edge-rigid: power {w.power}, edges {w.edge_a} vs {w.edge_b} "
        f"({w.value_a} != {w.value_b})\n"
    )
    return EXIT_NOT_RIGID


def cmd_optimize(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    res = optimize(
        g, args.k, args.objective, iters=args.iters, tol=args.tol, seed=args.seed
    )
    text = (
        f"k={res.k} objective={res.objective} verdict={res.verdict}\n"
        f"baseline={res.baseline!r} best_primal={res.best_primal!r} "
        f"best_dual={res.best_dual!r} gap={res.gap!r}\n"
        f"iterations={res.iterations}\n"
    )
    _emit(args, res.to_dict(), text)
    return EXIT_OK


def cmd_profile(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    prof = k_rigidity_profile(g, iters=args.iters, tol=args.tol, seed=args.seed)
    lines = []
    for e in prof.entries:
        lines.append(
            f"k={e.k} upper={e.upper.verdict} (gap={e.upper.gap:.3e}) "
            f"lower={e.lower.verdict} (gap={e.lower.gap:.3e})"
        )
    lines.append(f"all_rigid={prof.all_rigid} trace_residual={prof.trace_residual:.3e}")
    _emit(args, prof.to_dict(), "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    cert = certificate(g, args.j, tol=args.tol)
    text = (
        f"level j={cert.j} (k_j={cert.k_j}): passes={cert.passes}\n"
        f"x={cert.x!r} y={cert.y!r} bound={cert.bound!r} "
        f"S_k(1)={cert.top_eigensum!r}\n"
        f"residuals={cert.residuals}\n"
    )
    _emit(args, cert.to_dict(), text)
    return EXIT_OK


def cmd_embed(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    s = spectrum(laplacian(g).astype(float))
    emb = embedding(g, s, args.eigenspace)
    csv = emb.to_csv()
    if args.output:
        Path(args.output).write_text(csv)
    else:
        sys.stdout.write(csv)
    return EXIT_OK


def cmd_tau(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    w = _load_weights(args, g.m)
    value = weighted_tree_count(g, w)
    payload = {"tree_count": value}
    text = f"tree_count: {value!r}\n"
    if w is None:
        exact = tree_count_exact(g)
        payload["tree_count_exact"] = exact
        text += f"tree_count_exact: {exact}\n"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_kf(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    w = _load_weights(args, g.m)
    value = kirchhoff_index(g, w)
    payload = {"kirchhoff_index": value if math.isfinite(value) else "inf"}
    _emit(args, payload, f"kirchhoff_index: {value!r}\n")
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "decide": cmd_decide,
    "optimize": cmd_optimize,
    "profile": cmd_profile,
    "certify": cmd_certify,
    "embed": cmd_embed,
    "tau": cmd_tau,
    "kf": cmd_kf,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (EdgeRigidError, OSError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
