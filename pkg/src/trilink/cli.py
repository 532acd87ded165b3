"""Command-line entry point: ``trilink <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np

from . import experiments as ex
from . import io
from .generate import GeneratorConfig, generate_graph
from .graph import build
from .metrics import graph_stats
from .predictors import Method, ScoreParams, score_pairs
from .report import CSV_COLUMNS, evaluate_graph
from .selector import BoundaryConfig, auto_select

log = logging.getLogger("trilink")


def _floats(s: str) -> list[float]:
    return [float(x) for x in s.split(",") if x.strip()]


def _ints(s: str) -> list[int]:
    return [int(x) for x in s.split(",") if x.strip()]


def _grid(s: str) -> list[float]:
    """Parse ``a,b,c`` or ``start:stop:step`` (stop inclusive)."""
    if ":" in s:
        start, stop, step = (float(x) for x in s.split(":"))
        k = int(round((stop - start) / step))
        return [round(start + i * step, 10) for i in range(k + 1)]
    return _floats(s)


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _load(args) -> tuple:
    return io.parse_edge_list(args.graph, symmetrize=not args.no_symmetrize,
                              comment_prefix=args.comment)


def _warn_alpha(alpha: float) -> None:
    if alpha < 0.05:
        log.warning("alpha=%g is nearly degenerate: HEI and HOI collapse toward constants", alpha)


def cmd_generate(args) -> int:
    g = generate_graph(GeneratorConfig(args.n, args.d, args.epsilon, args.seed))
    io.write_edge_list(g, args.out)
    log.info("wrote %s (N=%d, E=%d)", args.out, g.node_count, g.edge_count)
    return 0


def cmd_stats(args) -> int:
    g, doc = _load(args)
    out = graph_stats(g, sample_size=args.sample, seed=args.seed)
    out.update(dropped_self_loops=doc.dropped_self_loops,
               dropped_duplicates=doc.dropped_duplicates,
               reciprocal_pairs=doc.reciprocal_pairs)
    _emit(out)
    return 0


def cmd_score(args) -> int:
    _warn_alpha(args.alpha)
    g, doc = _load(args)
    src = sys.stdin if args.pairs == "-" else open(args.pairs, encoding="utf-8")
    with src:
        toks = [ln.split() for ln in src if ln.strip() and not ln.lstrip().startswith("#")]
    if any(len(t) != 2 for t in toks):
        raise SystemExit("every pair line must hold exactly two node ids")
    pairs = np.stack([doc.dense_ids([t[0] for t in toks]), doc.dense_ids([t[1] for t in toks])], axis=1) \
        if toks else np.empty((0, 2), dtype=np.int64)
    scores = score_pairs(g, pairs, Method(args.method), ScoreParams(alpha=args.alpha))
    for (a, b), s in zip(toks, scores.tolist()):
        sys.stdout.write(f"{a} {b} {s!r}\n")
    return 0


def cmd_eval(args) -> int:
    _warn_alpha(args.alpha)
    g, doc = _load(args)
    split_files = [p for p in (args.positives, args.negatives) if p]
    n = doc.add_nodes_from(split_files, args.comment)
    if n > g.node_count:
        log.warning("%d nodes appear only in the split files; added with degree 0", n - g.node_count)
        g = build(n, g.edges())
    positives = negatives = None
    if args.positives and args.negatives:
        positives, negatives = io.load_split_files(args.positives, args.negatives, g.node_count, doc)
    elif args.positives:
        positives = io.read_pairs(args.positives, g.node_count, doc)
    elif args.negatives:
        negatives = io.read_pairs(args.negatives, g.node_count, doc)
    rep = evaluate_graph(
        g, methods=args.methods.split(","), ratio=args.ratio, m=args.m, alpha=args.alpha,
        seed=args.seed, hits_k=_ints(args.hits) if args.hits else (),
        positives=positives, negatives=negatives,
        boundary=BoundaryConfig(args.lower, args.upper), dataset=args.dataset or Path(args.graph).stem,
    )
    _emit(rep.to_dict())
    if args.csv:
        io.write_csv(rep.csv_rows(), args.csv, CSV_COLUMNS)
    if args.id_map:
        io.write_id_map(doc, args.id_map)
    return 0


def cmd_select(args) -> int:
    g, _ = _load(args)
    rec = auto_select(g, BoundaryConfig(args.lower, args.upper), args.val_ratio, args.m, args.seed,
                      ScoreParams(alpha=args.alpha))
    _emit(rec.to_dict())
    return 0


def _write_outputs(out_dir: str, name: str, rows: list[dict], columns: list[str], extra=None) -> None:
    d = Path(out_dir)
    d.mkdir(parents=True, exist_ok=True)
    io.write_csv(rows, d / f"{name}.csv", columns)
    io.write_json(extra if extra is not None else rows, d / f"{name}.json")


def _spec(args) -> ex.SweepSpec:
    n = ex.FULL_N if args.paper_scale else args.n
    return ex.SweepSpec(n=n, d_grid=tuple(_grid(args.d_grid)), seeds=tuple(_ints(args.seeds)),
                        alpha=args.alpha, ratio=args.ratio, m=args.m)


def cmd_sweep_d(args) -> int:
    rows = ex.sweep_d(_spec(args))
    _write_outputs(args.out_dir, "sweep-d", rows, ex.SWEEP_D_COLUMNS)
    _emit(rows)
    return 0


def cmd_crossover(args) -> int:
    res = ex.find_crossover(_spec(args))
    _write_outputs(args.out_dir, "crossover", res.table, ex.CROSSOVER_COLUMNS, res.to_dict())
    _emit({k: v for k, v in res.to_dict().items() if k != "table"})
    return 0


def cmd_sweep_n(args) -> int:
    ds = _floats(args.d)
    rows = ex.sweep_n(ds[0] if len(ds) == 1 else ds, _ints(args.n_grid), _ints(args.seeds))
    _write_outputs(args.out_dir, "sweep-n", rows, ex.SWEEP_N_COLUMNS)
    _emit(rows)
    return 0


def cmd_table(args) -> int:
    datasets = []
    for item in args.datasets:
        name, _, path = item.partition("=")
        datasets.append((name, path) if path else (Path(name).stem, name))
    cfg = ex.TableConfig(ratio=args.ratio, m=args.m, alpha=args.alpha, seed=args.seed,
                         boundary=BoundaryConfig(args.lower, args.upper))
    rows = ex.table_eval(datasets, cfg)
    _write_outputs(args.out_dir, "table", rows, ex.TABLE_COLUMNS)
    _emit(rows)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="trilink", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="cmd", required=True)

    def graph_arg(sp):
        sp.add_argument("graph", help="edge-list file")
        sp.add_argument("--no-symmetrize", action="store_true",
                        help="treat input as undirected; reversed repeats count as duplicates")
        sp.add_argument("--comment", default="#", help="comment line prefix (default '#')")

    def band(sp):
        sp.add_argument("--lower", type=float, default=0.27)
        sp.add_argument("--upper", type=float, default=0.37)

    sp = sub.add_parser("generate", help="BA tree plus triangle densification")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=float, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--epsilon", type=float, default=1e-9)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("stats", help="N, |E|, AvCC, triangles, max degree as JSON")
    graph_arg(sp)
    sp.add_argument("--sample", type=int, default=None, help="average over a node sample")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_stats)

    sp = sub.add_parser("score", help="score node pairs")
    graph_arg(sp)
    sp.add_argument("--method", choices=[m.value for m in Method], required=True)
    sp.add_argument("--alpha", type=float, default=0.5)
    sp.add_argument("--pairs", default="-", help="pair file, or - for stdin")
    sp.set_defaults(func=cmd_score)

    sp = sub.add_parser("eval", help="AUC and Hits@K on a held-out split")
    graph_arg(sp)
    band(sp)
    sp.add_argument("--methods", default="hei,hoi,jac,cn")
    sp.add_argument("--ratio", type=float, default=0.1)
    sp.add_argument("--m", type=int, default=100_000)
    sp.add_argument("--alpha", type=float, default=0.5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--positives", help="held-out edges; the graph file is then the training graph")
    sp.add_argument("--negatives", help="fixed negative pairs used for AUC and Hits@K")
    sp.add_argument("--hits", default="", help="comma-separated K values, e.g. 20,50,100")
    sp.add_argument("--dataset", default="")
    sp.add_argument("--csv", help="also write a CSV mirror of the report")
    sp.add_argument("--id-map", help="write the raw-to-dense node id map here")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("select", help="recommend a predictor family")
    graph_arg(sp)
    band(sp)
    sp.add_argument("--val-ratio", type=float, default=0.05)
    sp.add_argument("--m", type=int, default=50_000)
    sp.add_argument("--alpha", type=float, default=0.5)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_select)

    def sweep(sp, grid_default):
        sp.add_argument("--n", type=int, default=ex.DESK_N)
        sp.add_argument("--paper-scale", action="store_true", help=f"use n={ex.FULL_N}")
        sp.add_argument("--d-grid", default=grid_default, help="a,b,c or start:stop:step")
        sp.add_argument("--seeds", default="0,1,2")
        sp.add_argument("--alpha", type=float, default=0.5)
        sp.add_argument("--ratio", type=float, default=0.1)
        sp.add_argument("--m", type=int, default=50_000)
        sp.add_argument("--out-dir", default="results")

    sp = sub.add_parser("sweep-d", help="AvCC as a function of d")
    sweep(sp, "0:1:0.1")
    sp.set_defaults(func=cmd_sweep_d)

    sp = sub.add_parser("crossover", help="d at which Jaccard overtakes HEI")
    sweep(sp, "0:1:0.05")
    sp.set_defaults(func=cmd_crossover)

    sp = sub.add_parser("sweep-n", help="AvCC as a function of graph order")
    sp.add_argument("--n-grid", default="1000,10000,100000")
    sp.add_argument("--d", default="0.27", help="one d, or one per n (comma-separated)")
    sp.add_argument("--seeds", default="0,1,2")
    sp.add_argument("--out-dir", default="results")
    sp.set_defaults(func=cmd_sweep_n)

    sp = sub.add_parser("table", help="AvCC and AUC table over real edge lists")
    sp.add_argument("datasets", nargs="*", help="name=path or path")
    band(sp)
    sp.add_argument("--ratio", type=float, default=0.1)
    sp.add_argument("--m", type=int, default=100_000)
    sp.add_argument("--alpha", type=float, default=0.5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out-dir", default="results")
    sp.set_defaults(func=cmd_table)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
