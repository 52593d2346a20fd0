"""Command-line front end.

One subcommand per reproduction target: generate, diffuse, verify, spectrum,
gap-curve, energy, decay, rank, centrality, encode, and bench. Every output
file is written atomically, JSON outputs carry {spec_version, seed, command}
metadata, and report commands accept --plot to render a PNG figure next to
the delimited output.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from typing import List, Optional

import numpy as np

from . import __version__
from .analysis import (
    centrality_correlation,
    distance_decay_profile,
    energy_trajectory,
    rank_preservation,
    verify_truncation,
)
from .errors import DsmError
from .generators import generate_graph
from .graph import Graph, read_edgelist, write_edgelist
from .operators import (
    compensated_dsm,
    exact_dsm,
    oracle_cap,
    propagate,
    truncated_dsm,
)
from .serialize import (
    read_matrix_csv,
    write_csv_rows,
    write_json,
    write_matrix_csv,
)
from .spectral import empirical_spectral_gap, exact_spectral_gap, spectrum_report

DEFAULT_GAP_GRID = [0, 1, 2, 3, 5, 8, 12, 20, 35, 60, 100]


def _meta(args: argparse.Namespace) -> dict:
    return {
        "spec_version": __version__,
        "seed": getattr(args, "seed", None),
        "command": args.command,
        "oracle_cap": oracle_cap(getattr(args, "cap", None)),
    }


def _parse_int_list(text: str) -> List[int]:
    return [int(tok) for tok in text.split(",") if tok.strip() != ""]


def _load_graph(path: str) -> Graph:
    return read_edgelist(path)


def _model_params(args: argparse.Namespace) -> dict:
    model = args.model
    if model == "er":
        return {"n": args.n, "p": args.p}
    if model == "ba":
        return {"n": args.n, "m": args.m}
    if model == "ws":
        return {"n": args.n, "k": args.k, "beta": args.beta}
    if model == "sbm":
        return {"block_sizes": _parse_int_list(args.blocks),
                "p_in": args.p_in, "p_out": args.p_out}
    if model == "rgg":
        return {"n": args.n, "radius": args.radius}
    raise DsmError(f"unknown model {model!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dsmkit",
        description="Doubly stochastic graph diffusion operators and analysis harness.",
    )
    parser.add_argument("--cap", type=int, default=None,
                        help="dense oracle cap override (also DSM_ORACLE_CAP env)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate a synthetic graph and write an edge list")
    p.add_argument("--model", required=True, choices=["er", "ba", "ws", "sbm", "rgg"])
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--k", type=int, default=None, help="ws ring degree (even)")
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--blocks", type=str, default=None, help="sbm block sizes, comma separated")
    p.add_argument("--p-in", type=float, default=None)
    p.add_argument("--p-out", type=float, default=None)
    p.add_argument("--radius", type=float, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)

    p = sub.add_parser("diffuse", help="apply the truncated or compensated operator to features")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=["truncated", "compensated"], default="compensated")
    p.add_argument("--features", required=True, help="CSV feature matrix, n rows")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)

    p = sub.add_parser("verify", help="truncation error / bound / conservation sweep over K")
    p.add_argument("--graph", required=True)
    p.add_argument("--k-list", type=str, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-timing", action="store_true",
                   help="omit wall-clock fields for byte-reproducible output")
    p.add_argument("--out", required=True)
    p.add_argument("--plot", default=None, help="optional PNG path")

    p = sub.add_parser("spectrum", help="Laplacian/DSM spectra and spectral gaps")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, default=None, help="include empirical gap at this order")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)

    p = sub.add_parser("gap-curve", help="empirical spectral gap vs K")
    p.add_argument("--graph", required=True)
    p.add_argument("--k-grid", type=str, default=",".join(str(k) for k in DEFAULT_GAP_GRID))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.add_argument("--plot", default=None)

    p = sub.add_parser("energy", help="Dirichlet energy trajectories for all four operators")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kind", choices=["all", "exact", "truncated", "compensated", "gcn"],
                   default="all")
    p.add_argument("--steps", type=int, default=200)
    p.add_argument("--feature-dim", type=int, default=16)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.add_argument("--plot", default=None)

    p = sub.add_parser("decay", help="mean entry value vs shortest-path distance")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kind", choices=["all", "exact", "truncated", "compensated"],
                   default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.add_argument("--plot", default=None)

    p = sub.add_parser("rank", help="diagonal rank preservation vs exact operator")
    p.add_argument("--graph", required=True)
    p.add_argument("--k-list", type=str, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.add_argument("--plot", default=None)

    p = sub.add_parser("centrality", help="diagonal entries vs betweenness rank correlation")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--source", choices=["exact", "truncated", "compensated"], default="exact")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)

    p = sub.add_parser("encode", help="export centrality/spatial encodings as CSV")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--mode", choices=["exact", "truncated", "compensated"], default="exact")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-dir", required=True)

    p = sub.add_parser("bench", help="wall-clock timing of exact inversion vs streaming propagate")
    p.add_argument("--n-list", type=str, required=True)
    p.add_argument("--avg-degree", type=float, default=20.0)
    p.add_argument("--k-list", type=str, default="20")
    p.add_argument("--feature-dim", type=int, default=8)
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-timing", action="store_true",
                   help="emit structure columns only, for byte-reproducible output")
    p.add_argument("--out", required=True)
    p.add_argument("--plot", default=None)

    return parser


def _validate(args: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    k = getattr(args, "k", None)
    if isinstance(k, int) and k < 0:
        parser.error("k must be >= 0")
    for attr in ("k_list", "k_grid"):
        if getattr(args, attr, None) is not None:
            if any(v < 0 for v in _parse_int_list(getattr(args, attr))):
                parser.error(f"{attr.replace('_', '-')} entries must be >= 0")


def cmd_generate(args) -> None:
    g = generate_graph(args.model, _model_params(args), args.seed)
    write_edgelist(g, args.out)


def cmd_diffuse(args) -> None:
    g = _load_graph(args.graph)
    z0 = read_matrix_csv(args.features)
    out = propagate(g, args.k, z0, mode=args.mode)
    write_matrix_csv(out, args.out)


def cmd_verify(args) -> None:
    g = _load_graph(args.graph)
    k_list = _parse_int_list(args.k_list)
    reports = [
        verify_truncation(g, k, graph_desc=os.path.basename(args.graph),
                          cap=args.cap, timing=not args.no_timing)
        for k in k_list
    ]
    payload = _meta(args)
    payload["reports"] = [r.to_dict() for r in reports]
    write_json(payload, args.out)
    if args.plot:
        from .plotting import plot_verify
        plot_verify(k_list,
                    [r.err_uncompensated for r in reports],
                    [r.err_compensated for r in reports],
                    [r.bound for r in reports], args.plot)


def cmd_spectrum(args) -> None:
    g = _load_graph(args.graph)
    report = spectrum_report(g, K=args.k, cap=args.cap)
    payload = _meta(args)
    payload.update(report.to_dict())
    write_json(payload, args.out)


def cmd_gap_curve(args) -> None:
    g = _load_graph(args.graph)
    k_grid = _parse_int_list(args.k_grid)
    gamma = exact_spectral_gap(g, cap=args.cap)
    gaps = [empirical_spectral_gap(g, k, seed=args.seed) for k in k_grid]
    rows = [(k, val) for k, val in zip(k_grid, gaps)]
    write_csv_rows(args.out, ["K", "gamma_empirical"], rows)
    if args.plot:
        from .plotting import plot_gap_curve
        plot_gap_curve(k_grid, gaps, gamma, args.plot)


def cmd_energy(args) -> None:
    g = _load_graph(args.graph)
    rng = np.random.Generator(np.random.PCG64(args.seed))
    x0 = rng.standard_normal((g.n, args.feature_dim))
    kinds = (["exact", "truncated", "compensated", "gcn"]
             if args.kind == "all" else [args.kind])
    trajectories = {
        kind: energy_trajectory(g, kind, args.k, x0, args.steps, cap=args.cap).energies
        for kind in kinds
    }
    if len(kinds) == 1:
        rows = [(t, float(trajectories[kinds[0]][t])) for t in range(args.steps + 1)]
        write_csv_rows(args.out, ["step", "energy"], rows)
    else:
        rows = [
            tuple([t] + [float(trajectories[kind][t]) for kind in kinds])
            for t in range(args.steps + 1)
        ]
        write_csv_rows(args.out, ["step"] + [f"energy_{k}" for k in kinds], rows)
    if args.plot:
        from .plotting import plot_energy
        plot_energy(trajectories, args.plot)


def cmd_decay(args) -> None:
    g = _load_graph(args.graph)
    kinds = (("exact", "truncated", "compensated")
             if args.kind == "all" else (args.kind,))
    profiles = {
        kind: distance_decay_profile(g, kind, args.k, cap=args.cap)
        for kind in kinds
    }
    if len(kinds) == 1:
        prof = profiles[kinds[0]]
        rows = [(d_, float(prof.mean_entry[d_]), int(prof.counts[d_]))
                for d_ in range(len(prof.mean_entry))]
        write_csv_rows(args.out, ["distance", "mean", "count"], rows)
        if args.plot:
            from .plotting import plot_decay
            plot_decay({kinds[0]: prof.mean_entry}, args.plot)
        return
    max_d = max(len(p.mean_entry) for p in profiles.values())
    rows = []
    for d in range(max_d):
        row = [d]
        counts = None
        for kind in ("exact", "truncated", "compensated"):
            prof = profiles[kind]
            row.append(float(prof.mean_entry[d]) if d < len(prof.mean_entry) else None)
            if d < len(prof.counts):
                counts = int(prof.counts[d])
        row.append(counts)
        rows.append(tuple(row))
    write_csv_rows(args.out, ["distance", "mean_exact", "mean_truncated",
                              "mean_compensated", "count"], rows)
    if args.plot:
        from .plotting import plot_decay
        plot_decay({k: p.mean_entry for k, p in profiles.items()}, args.plot)


def cmd_rank(args) -> None:
    g = _load_graph(args.graph)
    k_list = _parse_int_list(args.k_list)
    reports = [rank_preservation(g, k, cap=args.cap) for k in k_list]
    rows = [(r.K, r.tau_uncompensated, r.tau_compensated) for r in reports]
    write_csv_rows(args.out, ["K", "tau_uncompensated", "tau_compensated"], rows)
    if args.plot:
        from .plotting import plot_rank
        plot_rank(k_list, [r.tau_uncompensated for r in reports],
                  [r.tau_compensated for r in reports], args.plot)


def cmd_centrality(args) -> None:
    g = _load_graph(args.graph)
    report = centrality_correlation(g, args.k, source=args.source, cap=args.cap)
    payload = _meta(args)
    payload["source"] = args.source
    payload.update(report.to_dict())
    write_json(payload, args.out)


def cmd_encode(args) -> None:
    g = _load_graph(args.graph)
    if args.mode == "exact":
        b = exact_dsm(g, cap=args.cap)
    elif args.mode == "truncated":
        b = truncated_dsm(g, args.k, cap=args.cap)
    else:
        b = compensated_dsm(g, args.k, cap=args.cap)
    os.makedirs(args.out_dir, exist_ok=True)
    diag = np.diag(b)
    write_csv_rows(os.path.join(args.out_dir, "centrality.csv"),
                   ["node", "diag"],
                   [(i, float(diag[i])) for i in range(g.n)])
    triplets = []
    for i in range(g.n):
        for j in range(g.n):
            if i != j and b[i, j] != 0.0:
                triplets.append((i, j, float(b[i, j])))
    write_csv_rows(os.path.join(args.out_dir, "spatial.csv"),
                   ["i", "j", "entry"], triplets)


def cmd_bench(args) -> None:
    from .generators import erdos_renyi

    n_list = _parse_int_list(args.n_list)
    k_list = _parse_int_list(args.k_list)
    cap = oracle_cap(args.cap)
    rows = []
    plot_rows = []
    for n in n_list:
        p = min(args.avg_degree / max(n - 1, 1), 1.0)
        g = erdos_renyi(n, p, args.seed)
        rng = np.random.Generator(np.random.PCG64(args.seed))
        z0 = rng.standard_normal((g.n, args.feature_dim))
        for k in k_list:
            t_exact = None
            t_stream = None
            if not args.no_timing:
                t_stream = min(
                    _timeit(lambda: propagate(g, k, z0, mode="compensated"))
                    for _ in range(args.repeats)
                )
                if n <= cap:
                    t_exact = min(
                        _timeit(lambda: exact_dsm(g, cap=args.cap))
                        for _ in range(args.repeats)
                    )
            rows.append((n, g.num_edges, k, t_exact, t_stream))
            plot_rows.append({"n": n, "E": g.num_edges, "K": k,
                              "t_exact": t_exact, "t_stream": t_stream})
    write_csv_rows(args.out, ["n", "E", "K", "t_exact_seconds", "t_stream_seconds"], rows)
    if args.plot and not args.no_timing:
        from .plotting import plot_bench
        plot_bench(plot_rows, args.plot)


def _timeit(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


_COMMANDS = {
    "generate": cmd_generate,
    "diffuse": cmd_diffuse,
    "verify": cmd_verify,
    "spectrum": cmd_spectrum,
    "gap-curve": cmd_gap_curve,
    "energy": cmd_energy,
    "decay": cmd_decay,
    "rank": cmd_rank,
    "centrality": cmd_centrality,
    "encode": cmd_encode,
    "bench": cmd_bench,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(args, parser)
    try:
        _COMMANDS[args.command](args)
    except DsmError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
