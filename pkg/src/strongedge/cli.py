"""Command-line entry point.

Machine-readable JSON goes to stdout, human progress notes to stderr.
Exit codes: 0 success, 1 bad input or unmet precondition, 2 internal
inconsistency (a state the underlying theory forbids).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .colouring import (
    ColouringError,
    colouring_from_json,
    colouring_to_json,
    known_bound,
    trivial_lower_bound,
    verify_strong,
)
from .discharging import DischargingError, apply_rules, audit, initial_charges
from .embedding import NonPlanar, planar_embed
from .exact import SolverTimeout, is_strong_k_colourable, strong_chromatic_index
from .generators import GeneratorSpec, generate
from .girth6 import (
    KIND_SUMMARY,
    ExtendStep,
    InternalInconsistency,
    PreconditionError,
    colour_girth6,
)
from .graph import ACYCLIC, Graph, GraphParseError, parse_graph, to_dot, to_edge_list
from .pipeline import colour_pipeline

EXIT_OK = 0
EXIT_PRECONDITION = 1
EXIT_INCONSISTENT = 2


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def _read_graph(path: str) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


def _girth_json(girth: float):
    return "acyclic" if girth == ACYCLIC else int(girth)


def _input_hash(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()[:16]


def _emit(doc) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


def cmd_analyze(args) -> int:
    g = _read_graph(args.graph)
    emb = planar_embed(g)
    planar = not isinstance(emb, NonPlanar)
    delta = g.max_degree()
    girth = g.girth()
    doc = {
        "input": args.graph,
        "input_hash": _input_hash(args.graph),
        "vertices": g.num_vertices(),
        "edges": g.num_edges(),
        "delta": delta,
        "girth": _girth_json(girth),
        "planar": planar,
        "trivial_lower_bound": trivial_lower_bound(g),
        # the bound table covers planar graphs with delta >= 3 only
        "known_bound": known_bound(delta, girth) if planar and delta >= 3 else None,
    }
    _emit(doc)
    return EXIT_OK


def cmd_gen(args) -> int:
    spec = GeneratorSpec(
        family=args.family,
        params=tuple(args.params),
        seed=args.seed,
        subdivision=args.subdivide,
    )
    g = generate(spec)
    text = to_dot(g) if args.format == "dot" else to_edge_list(g)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        _log(f"wrote {g.num_vertices()} vertices / {g.num_edges()} edges to {args.output}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    start = time.monotonic()
    if args.k is not None:
        deadline = start + args.timeout if args.timeout else None
        witness = is_strong_k_colourable(g, args.k, deadline)
        doc = {
            "k": args.k,
            "satisfiable": witness is not None,
            "seconds": round(time.monotonic() - start, 6),
        }
        if witness is not None:
            doc["colouring"] = json.loads(colouring_to_json(witness))
        _emit(doc)
        return EXIT_OK
    result = strong_chromatic_index(g, timeout=args.timeout)
    doc = {
        "chi_s": result.chi_s,
        "nodes": result.stats.nodes,
        "seconds": round(result.stats.elapsed, 6),
        "colouring": json.loads(colouring_to_json(result.witness)),
    }
    _emit(doc)
    return EXIT_OK


def cmd_colour(args) -> int:
    g = _read_graph(args.graph)
    trace: list[ExtendStep] = []
    delta = g.max_degree()
    start = time.monotonic()
    if args.girth6:
        col = colour_girth6(g, trace=trace)
        report = {
            "algorithm": "girth6",
            "palette": col.palette.size,
            "colours_used": col.colours_used(),
            "steps": len(trace),
        }
    else:
        col, pipe = colour_pipeline(g, budget=args.budget)
        report = {"algorithm": "pipeline"}
        report.update(pipe.as_dict())
    report.update(
        {
            "command": "colour --girth6" if args.girth6 else "colour --pipeline",
            "input_hash": _input_hash(args.graph),
            "delta": delta,
            "girth": _girth_json(g.girth()),
            "planar": True,
            "colours_used": col.colours_used(),
            "known_bound": known_bound(delta, g.girth()) if delta >= 3 else None,
            "seconds": round(time.monotonic() - start, 6),
        }
    )
    violations = verify_strong(g, col, require_total=True)
    if violations:
        _log(f"internal verification failed: {violations[0]}")
        return EXIT_INCONSISTENT
    report["valid"] = True
    if args.trace:
        with open(args.trace, "w") as fh:
            json.dump(
                {
                    "input": args.graph,
                    "palette": col.palette.size,
                    "steps": [s.as_dict() for s in trace],
                },
                fh,
                indent=2,
            )
        _log(f"trace with {len(trace)} steps written to {args.trace}")
    if args.format == "dot":
        sys.stdout.write(to_dot(g, col.assignment))
        _log(json.dumps(report))
    else:
        doc = json.loads(colouring_to_json(col))
        doc["report"] = report
        _emit(doc)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(colouring_to_json(col))
    return EXIT_OK


def cmd_discharge(args) -> int:
    g = _read_graph(args.graph)
    emb = planar_embed(g)
    if isinstance(emb, NonPlanar):
        raise PreconditionError("discharging needs a planar input")
    init = initial_charges(emb)
    final = apply_rules(emb, init)
    report = audit(emb, final)
    _emit(report.as_dict())
    if report.configuration is not None:
        kind = report.configuration.kind
        _log(f"found {kind}: {KIND_SUMMARY[kind]}")
    if report.verdict == "theorem-violation":
        return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    with open(args.colouring) as fh:
        col = colouring_from_json(fh.read(), g)
    violations = verify_strong(g, col, require_total=not args.partial)
    doc = {
        "valid": not violations,
        "violations": [str(v) for v in violations[:50]],
        "colours_used": col.colours_used(),
        "palette": col.palette.size,
    }
    _emit(doc)
    return EXIT_OK if not violations else EXIT_PRECONDITION


def _bench_corpus(seed_count: int) -> list[tuple[str, GeneratorSpec]]:
    corpus = []
    for s in range(1, seed_count + 1):
        if s % 2:
            spec = GeneratorSpec("wheel", (4 + s % 8,), seed=s, subdivision=1)
        else:
            spec = GeneratorSpec("triangulation", (3 + s % 6,), seed=s, subdivision=1)
        corpus.append((f"{spec.family}-s{s}", spec))
    return corpus


def _bench_one(name: str, spec: GeneratorSpec, budget: float) -> dict:
    g = generate(spec)
    delta = g.max_degree()
    girth = g.girth()
    row = {
        "name": name,
        "vertices": g.num_vertices(),
        "edges": g.num_edges(),
        "delta": delta,
        "girth": _girth_json(girth),
        "known_bound": known_bound(delta, girth) if delta >= 3 else None,
    }
    start = time.monotonic()
    col = colour_girth6(g)
    row["girth6_colours"] = col.colours_used()
    row["girth6_ok"] = not verify_strong(g, col, require_total=True)
    row["girth6_seconds"] = round(time.monotonic() - start, 4)
    start = time.monotonic()
    pcol, preport = colour_pipeline(g, budget=budget)
    row["pipeline_colours"] = pcol.colours_used()
    row["pipeline_bound"] = preport.bound_claimed
    row["pipeline_ok"] = not verify_strong(g, pcol, require_total=True)
    row["pipeline_seconds"] = round(time.monotonic() - start, 4)
    return row


def cmd_bench(args) -> int:
    corpus = _bench_corpus(args.count)
    threads = max(1, int(os.environ.get("STRONGEDGE_THREADS", "1")))
    _log(f"benching {len(corpus)} instances with {threads} thread(s)")
    if threads == 1:
        rows = [_bench_one(n, s, args.budget) for n, s in corpus]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(
                pool.map(lambda ns: _bench_one(ns[0], ns[1], args.budget), corpus)
            )
    bad = [r for r in rows if not (r["girth6_ok"] and r["pipeline_ok"])]
    _emit({"instances": rows, "failures": len(bad)})
    for r in rows:
        _log(
            f"{r['name']:<22} V={r['vertices']:<4} E={r['edges']:<4} "
            f"D={r['delta']:<3} girth6={r['girth6_colours']:<3} "
            f"pipeline={r['pipeline_colours']:<3} bound={r['known_bound']}"
        )
    return EXIT_OK if not bad else EXIT_INCONSISTENT


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="strongedge",
        description="strong edge-colouring toolkit for sparse planar graphs",
    )
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="structural facts and applicable bounds")
    a.add_argument("graph")
    a.set_defaults(fn=cmd_analyze)

    g = sub.add_parser("gen", help="generate a test instance")
    g.add_argument("family")
    g.add_argument("params", nargs="*", type=int)
    g.add_argument("--subdivide", type=int, default=0, metavar="T")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--format", choices=("edges", "dot"), default="edges")
    g.add_argument("-o", "--output")
    g.set_defaults(fn=cmd_gen)

    s = sub.add_parser("solve", help="exact strong chromatic index")
    s.add_argument("graph")
    s.add_argument("--exact", action="store_true", help="(default behaviour)")
    s.add_argument("--k", type=int, default=None, help="decision variant")
    s.add_argument("--timeout", type=float, default=None, metavar="SECS")
    s.set_defaults(fn=cmd_solve)

    c = sub.add_parser("colour", help="constructive strong colouring")
    mode = c.add_mutually_exclusive_group(required=True)
    mode.add_argument("--girth6", action="store_true")
    mode.add_argument("--pipeline", action="store_true")
    c.add_argument("graph")
    c.add_argument("--budget", type=float, default=5.0, metavar="SECS")
    c.add_argument("--trace", metavar="FILE")
    c.add_argument("--format", choices=("json", "dot"), default="json")
    c.add_argument("-o", "--output")
    c.set_defaults(fn=cmd_colour)

    d = sub.add_parser("discharge", help="charge redistribution audit")
    d.add_argument("graph")
    d.set_defaults(fn=cmd_discharge)

    v = sub.add_parser("verify", help="check a colouring document")
    v.add_argument("graph")
    v.add_argument("colouring")
    v.add_argument("--partial", action="store_true", help="allow uncoloured edges")
    v.set_defaults(fn=cmd_verify)

    b = sub.add_parser("bench", help="corpus sweep")
    b.add_argument("--count", type=int, default=20, help="corpus size")
    b.add_argument("--budget", type=float, default=2.0)
    b.set_defaults(fn=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (
        GraphParseError,
        PreconditionError,
        ColouringError,
        DischargingError,
        SolverTimeout,
        FileNotFoundError,
        ValueError,
    ) as exc:
        _log(f"error: {exc}")
        return EXIT_PRECONDITION
    except InternalInconsistency as exc:
        _log(f"internal inconsistency: {exc}")
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
