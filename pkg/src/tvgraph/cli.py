"""Command-line front end: generation, graph analysis, table reproduction,
nerve censuses, path construction, and the random-partition experiment."""
from __future__ import annotations

import argparse
import csv
import hashlib
import json
import sys
import time
from pathlib import Path

from gmpy2 import mpq

from . import __version__
from .core import (
    TverbergOracle,
    distance_preserving_permutations,
    nerve_census,
    tverberg_number,
)
from .errors import InvalidArguments, TooManyPartitions, TvGraphError
from .generators import perturbed_clusters, random_uniform, regular_polygon
from .graph import (
    DEFAULT_MAX_PARTITIONS,
    build_graph,
    export,
    graph_stats,
    partition_cap,
    radon_path,
    tverberg_path,
)
from .lift import RNG_ID, mc_max_degree_probability, probability_lower_bound
from .partitions import (
    Partition,
    abstract_edge_count,
    abstract_graph,
    stirling2,
)
from .pointio import dump_config, load_config, save_config

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_CAP_EXCEEDED = 3

TABLE_N = range(5, 13)
TABLE_R = range(2, 6)


def _parse_generator(spec: str):
    kind, _, rest = spec.partition(":")
    if kind == "regular-polygon":
        return regular_polygon(int(rest)), True
    params = {}
    if rest:
        for item in rest.split(","):
            key, _, value = item.partition("=")
            if not value:
                raise InvalidArguments(f"malformed generator parameter {item!r}")
            params[key.strip()] = value.strip()
    if kind == "clusters":
        return (
            perturbed_clusters(
                d=int(params.get("d", 2)),
                r=int(params.get("r", 2)),
                scale=mpq(params["scale"]) if "scale" in params else None,
                seed=int(params.get("seed", 0)),
            ),
            False,
        )
    if kind == "random":
        return (
            random_uniform(
                n=int(params["n"]),
                d=int(params.get("d", 2)),
                seed=int(params.get("seed", 0)),
                bound=int(params.get("bound", 10)),
            ),
            False,
        )
    raise InvalidArguments(f"unknown generator {kind!r}")


def _load_input(args):
    if getattr(args, "gen", None):
        config, symmetric = _parse_generator(args.gen)
        symmetries = distance_preserving_permutations(config) if symmetric else None
        return config, symmetries
    if getattr(args, "input", None):
        config = load_config(args.input)
        if getattr(args, "detect_symmetry", False):
            return config, distance_preserving_permutations(config)
        return config, None
    raise InvalidArguments("provide --input FILE or --gen SPEC")


def _manifest(args, started, seeds=None, input_hash=None):
    return {
        "command": args.command,
        "argv": sys.argv[1:],
        "input_sha256": input_hash,
        "seeds": seeds,
        "tool_version": __version__,
        "rng": RNG_ID,
        "duration_seconds": round(time.time() - started, 3),
    }


def _input_hash(args):
    if getattr(args, "input", None):
        return hashlib.sha256(Path(args.input).read_bytes()).hexdigest()
    if getattr(args, "gen", None):
        return hashlib.sha256(args.gen.encode()).hexdigest()
    return None


def _write(outdir: Path, name: str, data: bytes):
    outdir.mkdir(parents=True, exist_ok=True)
    (outdir / name).write_bytes(data)


def cmd_analyze(args) -> int:
    started = time.time()
    config, symmetries = _load_input(args)
    if config.n < args.r:
        print(json.dumps({"vertices": 0, "note": "fewer points than parts"}))
        return EXIT_OK
    graph = build_graph(
        config, args.r, symmetries=symmetries, max_partitions=args.max_partitions
    )
    stats = graph_stats(graph)
    payload = {
        "stats": stats.to_json_dict(),
        "manifest": _manifest(args, started, input_hash=_input_hash(args)),
    }
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    print(text, end="")
    if args.output:
        outdir = Path(args.output)
        _write(outdir, "stats.json", text.encode())
        _write(outdir, "graph.json", export(graph, "json"))
        _write(outdir, "edges.csv", export(graph, "csv"))
        if args.dot:
            _write(outdir, "graph.dot", export(graph, "dot"))
    return EXIT_OK


def tables_data(verify: bool = False):
    """Vertex and edge tables of the abstract partition graph, r=2..5, n=5..12."""
    vertices = {r: {n: stirling2(n, r) for n in TABLE_N} for r in TABLE_R}
    import warnings

    edges = {}
    for r in TABLE_R:
        edges[r] = {}
        for n in TABLE_N:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                edges[r][n] = abstract_edge_count(n, r)
    if verify:
        for r in TABLE_R:
            for n in TABLE_N:
                if n > 9:
                    continue
                parts, adjacency = abstract_graph(n, r)
                assert len(parts) == vertices[r][n], (n, r)
                assert sum(len(a) for a in adjacency) // 2 == edges[r][n], (n, r)
    return vertices, edges


def _format_table(title, data):
    lines = [title]
    header = "r\\n " + " ".join(f"{n:>9}" for n in TABLE_N)
    lines.append(header)
    for r in TABLE_R:
        lines.append(f"{r:>3} " + " ".join(f"{data[r][n]:>9}" for n in TABLE_N))
    return "\n".join(lines)


def cmd_tables(args) -> int:
    vertices, edges = tables_data(verify=args.verify)
    print(_format_table("Vertices of the r-partition graph", vertices))
    print()
    print(_format_table("Edges of the r-partition graph", edges))
    if args.verify:
        print("\nbrute-force verification passed for n <= 9")
    if args.json:
        doc = {
            "vertices": {str(r): {str(n): vertices[r][n] for n in TABLE_N} for r in TABLE_R},
            "edges": {str(r): {str(n): edges[r][n] for n in TABLE_N} for r in TABLE_R},
        }
        Path(args.json).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_nerve_census(args) -> int:
    started = time.time()
    config, symmetries = _load_input(args)
    r = args.r
    if r != 3 and not args.experimental:
        raise InvalidArguments("general-r census requires --experimental")
    if stirling2(config.n, r) > (args.max_partitions or partition_cap()):
        raise TooManyPartitions("census exceeds the partition cap")
    counts = nerve_census(config, r, symmetries=symmetries)
    if r == 3:
        assert sum(counts) == stirling2(config.n, 3)
        payload = {
            "n": config.n,
            "r": r,
            "census": list(counts),
            "classes": ["no-edges", "one-edge", "two-edges", "hollow-triangle", "filled"],
            "row_sum": sum(counts),
            "manifest": _manifest(args, started, input_hash=_input_hash(args)),
        }
    else:
        payload = {
            "n": config.n,
            "r": r,
            "census": {str(k): v for k, v in sorted(counts.items(), key=lambda kv: str(kv[0]))},
            "manifest": _manifest(args, started, input_hash=_input_hash(args)),
        }
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    print(text, end="")
    if args.output:
        _write(Path(args.output), "census.json", text.encode())
    return EXIT_OK


def cmd_path(args) -> int:
    config, _ = _load_input(args)
    p = Partition.from_string(args.start)
    q = Partition.from_string(args.goal)
    if args.r == 2:
        path = radon_path(config, p, q)
    else:
        path = tverberg_path(config, p, q, args.r, best_effort=args.best_effort)
    from .core import is_tverberg
    from .partitions import partition_distance

    for idx, step in enumerate(path):
        checks = []
        if is_tverberg(config, step) is not None:
            checks.append("tverberg")
        if idx > 0 and partition_distance(path[idx - 1], step) == 1:
            checks.append("step=1")
        print(f"{step}  [{' '.join(checks) if checks else 'start'}]")
    return EXIT_OK


def cmd_mc(args) -> int:
    started = time.time()
    config, _ = _load_input(args)
    frequency, records = mc_max_degree_probability(config, args.r, args.trials, args.seed)
    bound = probability_lower_bound(config.n, args.r, config.dim)
    summary = {
        "n": config.n,
        "d": config.dim,
        "r": args.r,
        "trials": args.trials,
        "seed": args.seed,
        "generator": RNG_ID,
        "frequency": frequency,
        "lower_bound": bound,
        "tverberg_number": tverberg_number(config.dim, args.r),
        "manifest": _manifest(args, started, seeds=[args.seed], input_hash=_input_hash(args)),
    }
    text = json.dumps(summary, indent=2, sort_keys=True) + "\n"
    print(text, end="")
    if args.output:
        outdir = Path(args.output)
        _write(outdir, "mc_summary.json", text.encode())
        import io

        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["trial", "label_vector", "nonempty_parts", "is_tverberg", "is_max_degree"])
        for rec in records:
            writer.writerow(
                [
                    rec.trial,
                    " ".join(str(x) for x in rec.labels),
                    rec.nonempty_parts,
                    int(rec.is_tverberg),
                    int(rec.is_max_degree),
                ]
            )
        _write(outdir, "mc_trials.csv", buf.getvalue().encode())
    return EXIT_OK


def cmd_gen(args) -> int:
    config, _ = _load_input(args)
    if args.output:
        save_config(config, args.output)
    else:
        print(dump_config(config), end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tvgraph",
        description="Exact construction and analysis of Tverberg partition graphs.",
    )
    parser.add_argument("--version", action="version", version=f"tvgraph {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(sp):
        sp.add_argument("--input", help="point-set CSV file")
        sp.add_argument("--gen", help="generator spec, e.g. regular-polygon:8, "
                                      "clusters:d=2,r=3,seed=1, random:n=7,d=2,seed=3")
        sp.add_argument("--detect-symmetry", action="store_true",
                        help="exploit exact isometries of a file-loaded configuration")

    sp = sub.add_parser("analyze", help="build G_T[S,r] and report statistics")
    add_input(sp)
    sp.add_argument("-r", type=int, required=True)
    sp.add_argument("--output", help="directory for stats/graph exports")
    sp.add_argument("--dot", action="store_true", help="also write graph.dot")
    sp.add_argument("--max-partitions", type=int, default=None,
                    help=f"enumeration cap (default {DEFAULT_MAX_PARTITIONS}, "
                         "env TVG_MAX_PARTITIONS)")
    sp.add_argument("--threads", type=int, default=1,
                    help="worker count hint; output is identical for any value")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("tables", help="reproduce the abstract-graph count tables")
    sp.add_argument("--verify", action="store_true", help="brute-force cross-check for n <= 9")
    sp.add_argument("--json", help="also write the tables as JSON")
    sp.set_defaults(func=cmd_tables)

    sp = sub.add_parser("nerve-census", help="nerve-class counts over all r-partitions")
    add_input(sp)
    sp.add_argument("-r", type=int, default=3)
    sp.add_argument("--experimental", action="store_true", help="allow r != 3")
    sp.add_argument("--output")
    sp.add_argument("--max-partitions", type=int, default=None)
    sp.add_argument("--threads", type=int, default=1)
    sp.set_defaults(func=cmd_nerve_census)

    sp = sub.add_parser("path", help="constructive path between two Tverberg partitions")
    add_input(sp)
    sp.add_argument("-r", type=int, required=True)
    sp.add_argument("-P", "--start", required=True, help="restricted-growth string")
    sp.add_argument("-Q", "--goal", required=True, help="restricted-growth string")
    sp.add_argument("--best-effort", action="store_true")
    sp.set_defaults(func=cmd_path)

    sp = sub.add_parser("mc", help="random-partition maximal-degree experiment")
    add_input(sp)
    sp.add_argument("-r", type=int, required=True)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_mc)

    sp = sub.add_parser("gen", help="write a generated configuration to a file")
    add_input(sp)
    sp.add_argument("--output", help="destination file (stdout when omitted)")
    sp.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TooManyPartitions as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP_EXCEEDED
    except (TvGraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
