"""Command-line front end.

    qpr <rank|compare|convergence|alpha-sweep>
        (--edges FILE | --family NAME [--param k=v]...)
        [--undirected] [--alpha F] [--epsilon F] [--max-steps N]
        [--seed N] [--out DIR] [--formats csv,json,svg]

Exit codes: 0 success, 1 usage/parse error, 2 I/O error, 3 non-convergence.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__, classical, diagnostics, oqw, svg
from ._rng import SplitMix64
from .errors import NotConvergedError
from .graph import FAMILIES, DiGraph, EdgeListParseError, from_edge_list, symmetrize
from .graph import generate as generate_graph

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_NOT_CONVERGED = 3

_ALL_FORMATS = ("csv", "json", "svg")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors; the contract wants 1
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qpr",
                     description="Classical and open-quantum-walk PageRank.")
    parser.add_argument("--version", action="version", version=f"qpr {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group(required=True)
    source.add_argument("--edges", metavar="FILE", help="edge-list file")
    source.add_argument("--family", metavar="NAME", choices=FAMILIES,
                        help=f"graph family, one of: {', '.join(FAMILIES)}")
    common.add_argument("--param", metavar="K=V", action="append", default=[],
                        help="family parameter (repeatable), e.g. --param n=60")
    common.add_argument("--undirected", action="store_true",
                        help="symmetrize the graph after construction")
    common.add_argument("--alpha", type=float, default=oqw.DEFAULT_ALPHA)
    common.add_argument("--epsilon", type=float, default=oqw.DEFAULT_EPSILON)
    common.add_argument("--max-steps", type=int, default=oqw.DEFAULT_MAX_STEPS)
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--out", metavar="DIR", default=".")
    common.add_argument("--formats", default="csv,json,svg",
                        help="comma-separated subset of csv,json,svg")

    sub.add_parser("rank", parents=[common],
                   help="PageRank and qPageRank per vertex, with rankings")
    sub.add_parser("compare", parents=[common],
                   help="Kendall correlation between the two rankings")
    sub.add_parser("convergence", parents=[common],
                   help="per-step walk probabilities for sampled vertices")
    sub.add_parser("alpha-sweep", parents=[common],
                   help="fidelity/trace-distance of final vs average state "
                        "over the default damping grid")
    return parser


def _parse_params(pairs: list[str]) -> dict:
    params = {}
    for pair in pairs:
        if "=" not in pair:
            raise _UsageError(f"--param expects K=V, got {pair!r}")
        key, _, raw = pair.partition("=")
        key = key.strip()
        raw = raw.strip()
        if not key:
            raise _UsageError(f"--param expects K=V, got {pair!r}")
        try:
            params[key] = int(raw)
        except ValueError:
            try:
                params[key] = float(raw)
            except ValueError:
                raise _UsageError(f"--param {key}: {raw!r} is not a number") from None
    return params


def _load_graph(args) -> tuple[DiGraph, dict]:
    if args.edges:
        text = Path(args.edges).read_text("utf-8")
        g = from_edge_list(text)
        source = {"file": args.edges}
    else:
        params = _parse_params(args.param)
        g = generate_graph(args.family, params, seed=args.seed)
        source = {"family": args.family, "params": params}
    if args.undirected:
        g = symmetrize(g)
        source["undirected"] = True
    return g, source


def _formats(args) -> set[str]:
    chosen = {f.strip() for f in args.formats.split(",") if f.strip()}
    bad = chosen - set(_ALL_FORMATS)
    if bad:
        raise _UsageError(f"unknown formats: {', '.join(sorted(bad))}")
    if not chosen:
        raise _UsageError("--formats must name at least one format")
    return chosen


def _metadata(args, source: dict, **extra) -> dict:
    meta = {"alpha": args.alpha, "epsilon": args.epsilon, "seed": args.seed,
            "graph": source, "version": __version__}
    meta.update(extra)
    return meta


def _write_text(path: Path, content: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(content)


def _write_json(path: Path, obj) -> None:
    _write_text(path, json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _round6(x: float) -> float:
    return round(float(x), 6)


def _ranks_outputs(args, out_dir: Path, formats: set[str], source: dict,
                   pr, pr_steps, pr_ok, qpr, q_steps, q_ok) -> None:
    rank_pr = diagnostics.rank_vertices(pr)
    rank_q = diagnostics.rank_vertices(qpr)
    n = len(pr)
    if "csv" in formats:
        lines = ["vertex,pagerank,qpagerank,rank_pr,rank_qpr"]
        lines += [f"{v},{pr[v]:.6f},{qpr[v]:.6f},{rank_pr[v]},{rank_q[v]}"
                  for v in range(n)]
        _write_text(out_dir / "ranks.csv", "\n".join(lines) + "\n")
    if "json" in formats:
        meta = _metadata(args, source,
                         steps={"pagerank": pr_steps, "qpagerank": q_steps},
                         converged={"pagerank": pr_ok, "qpagerank": q_ok})
        rows = [{"vertex": v, "pagerank": _round6(pr[v]),
                 "qpagerank": _round6(qpr[v]), "rank_pr": int(rank_pr[v]),
                 "rank_qpr": int(rank_q[v])} for v in range(n)]
        _write_json(out_dir / "ranks.json", {"metadata": meta, "vertices": rows})
    if "svg" in formats:
        chart = svg.grouped_bar_chart(
            list(range(n)),
            [("PageRank", [float(x) for x in pr]),
             ("qPageRank", [float(x) for x in qpr])],
            title="PageRank vs qPageRank per vertex")
        _write_text(out_dir / "bar.svg", chart)


def cmd_rank(args) -> int:
    g, source = _load_graph(args)
    out_dir = Path(args.out)
    formats = _formats(args)
    pr_ok = q_ok = True
    try:
        pr, pr_steps = classical.pagerank(g, args.alpha, args.epsilon, args.max_steps)
    except NotConvergedError as exc:
        pr, pr_steps, pr_ok = exc.last, exc.steps, False
    try:
        result = oqw.run(g, oqw.WalkParams(args.alpha, args.epsilon, args.max_steps))
        qpr, q_steps = result.probabilities, result.steps
    except NotConvergedError as exc:
        qpr, q_steps, q_ok = exc.last, exc.steps, False
    out_dir.mkdir(parents=True, exist_ok=True)
    _ranks_outputs(args, out_dir, formats, source, pr, pr_steps, pr_ok,
                   qpr, q_steps, q_ok)
    if not (pr_ok and q_ok):
        print("warning: not converged within step budget; results are partial",
              file=sys.stderr)
        return EXIT_NOT_CONVERGED
    return EXIT_OK


def cmd_compare(args) -> int:
    g, source = _load_graph(args)
    out_dir = Path(args.out)
    formats = _formats(args)
    pr_ok = q_ok = True
    try:
        pr, pr_steps = classical.pagerank(g, args.alpha, args.epsilon, args.max_steps)
    except NotConvergedError as exc:
        pr, pr_steps, pr_ok = exc.last, exc.steps, False
    try:
        result = oqw.run(g, oqw.WalkParams(args.alpha, args.epsilon, args.max_steps))
        qpr, q_steps = result.probabilities, result.steps
    except NotConvergedError as exc:
        qpr, q_steps, q_ok = exc.last, exc.steps, False
    rank_pr = diagnostics.rank_vertices(pr)
    rank_q = diagnostics.rank_vertices(qpr)
    tau = diagnostics.kendall_tau(rank_pr, rank_q)
    out_dir.mkdir(parents=True, exist_ok=True)
    if "json" in formats:
        meta = _metadata(args, source,
                         steps={"pagerank": pr_steps, "qpagerank": q_steps},
                         converged={"pagerank": pr_ok, "qpagerank": q_ok})
        _write_json(out_dir / "compare.json", {
            "metadata": meta,
            "kendall_tau": _round6(tau),
            "rank_pr": [int(r) for r in rank_pr],
            "rank_qpr": [int(r) for r in rank_q],
            "top5_pr": diagnostics.top_k(pr),
            "top5_qpr": diagnostics.top_k(qpr),
        })
    if not (pr_ok and q_ok):
        print("warning: not converged within step budget; results are partial",
              file=sys.stderr)
        return EXIT_NOT_CONVERGED
    return EXIT_OK


def cmd_convergence(args) -> int:
    g, source = _load_graph(args)
    out_dir = Path(args.out)
    formats = _formats(args)
    converged = True
    try:
        result = oqw.run(g, oqw.WalkParams(args.alpha, args.epsilon, args.max_steps))
    except NotConvergedError as exc:
        result, converged = exc.result, False
    history = result.prob_history
    top = int(np.argmax(diagnostics.rank_vertices(result.probabilities) == 1))
    rng = SplitMix64(args.seed)
    others = [v for v in range(g.n) if v != top]
    extra = rng.sample_distinct(others, min(9, len(others))) if others else []
    sample = [top] + sorted(extra)

    distances = [float(np.linalg.norm(history[t] - history[t - 1]))
                 for t in range(1, len(history))]
    out_dir.mkdir(parents=True, exist_ok=True)
    if "csv" in formats:
        header = "step," + ",".join(f"p_v{v}" for v in sample) + ",step_distance"
        lines = [header]
        for t, probs in enumerate(history):
            cells = [str(t)] + [f"{probs[v]:.6f}" for v in sample]
            cells.append(f"{distances[t - 1]:.6e}" if t > 0 else "")
            lines.append(",".join(cells))
        _write_text(out_dir / "convergence.csv", "\n".join(lines) + "\n")
    if "json" in formats:
        meta = _metadata(args, source, steps=result.steps, converged=converged,
                         sampled_vertices=sample)
        _write_json(out_dir / "convergence.json", {
            "metadata": meta,
            "rows": [{"step": t,
                      "probabilities": {str(v): _round6(probs[v]) for v in sample},
                      "step_distance": (_round6(distances[t - 1]) if t else None)}
                     for t, probs in enumerate(history)],
        })
    if "svg" in formats:
        steps_axis = list(range(len(history)))
        series = [(f"v{v}", steps_axis, [float(p[v]) for p in history])
                  for v in sample]
        chart = svg.line_chart(series, title="qPageRank convergence",
                               x_label="walk step", y_label="occupation probability")
        _write_text(out_dir / "convergence.svg", chart)
    if not converged:
        print("warning: not converged within step budget; results are partial",
              file=sys.stderr)
        return EXIT_NOT_CONVERGED
    return EXIT_OK


def cmd_alpha_sweep(args) -> int:
    g, source = _load_graph(args)
    out_dir = Path(args.out)
    formats = _formats(args)
    records = diagnostics.alpha_sweep(g, diagnostics.default_alpha_grid(),
                                      args.epsilon, args.max_steps)
    out_dir.mkdir(parents=True, exist_ok=True)
    if "csv" in formats:
        lines = ["alpha,steps,fidelity,trace_distance,status"]
        for r in records:
            fid = f"{r.fidelity:.6f}" if r.converged else ""
            dist = f"{r.trace_distance:.6f}" if r.converged else ""
            status = "ok" if r.converged else "not_converged"
            lines.append(f"{r.alpha:.2f},{r.steps},{fid},{dist},{status}")
        _write_text(out_dir / "alpha_sweep.csv", "\n".join(lines) + "\n")
    if "json" in formats:
        meta = _metadata(args, source)
        _write_json(out_dir / "alpha_sweep.json", {
            "metadata": meta,
            "records": [{"alpha": r.alpha, "steps": r.steps,
                         "fidelity": (_round6(r.fidelity) if r.converged else None),
                         "trace_distance": (_round6(r.trace_distance)
                                            if r.converged else None),
                         "converged": r.converged} for r in records],
        })
    if "svg" in formats:
        good = [r for r in records if r.converged]
        alphas = [r.alpha for r in good]
        _write_text(out_dir / "alpha_sweep_trace_distance.svg", svg.line_chart(
            [("trace distance", alphas, [r.trace_distance for r in good])],
            title="Final vs average state: trace distance",
            x_label="alpha", y_label="trace distance"))
        _write_text(out_dir / "alpha_sweep_fidelity.svg", svg.line_chart(
            [("fidelity", alphas, [r.fidelity for r in good])],
            title="Final vs average state: fidelity",
            x_label="alpha", y_label="fidelity"))
    return EXIT_OK


_COMMANDS = {
    "rank": cmd_rank,
    "compare": cmd_compare,
    "convergence": cmd_convergence,
    "alpha-sweep": cmd_alpha_sweep,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"qpr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EdgeListParseError, ValueError) as exc:
        print(f"qpr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"qpr: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except SystemExit as exc:  # argparse --help/--version paths
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
