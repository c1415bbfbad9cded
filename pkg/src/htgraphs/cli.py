"""Command-line front end.

Subcommands: ``props`` emits one JSON property certificate per input graph,
``construct`` runs a family pipeline, ``search`` wraps the exhaustive and
stochastic searches, ``seeds`` validates seed fixtures. Exit codes: 0 for
success (including negative search results), 1 for internal errors or failed
seed validation, 2 for input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .anneal import AnnealConfig, anneal_seed_search
from .families import cubic_family, default_seeds, load_seeds, quartic_family, verify_seed
from .graphs import Graph, decode_graph6, degree_profile, encode_graph6, independence_number
from .hamilton import circumference, is_doubly_homogeneously_traceable, is_homogeneously_traceable
from .search import enumerate_connected, enumerate_regular

# independence witness search is exponential; past this order the certificate
# reports null rather than stalling the stream
INDEPENDENCE_MAX_ORDER = 40


class InputError(Exception):
    pass


def read_graph_lines(path: str) -> list[tuple[int, str]]:
    """(line number, graph6 payload) pairs; blank and comment lines skipped."""
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    out = []
    for num, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((num, line))
    return out


def property_certificate(g: Graph, echo: str) -> dict:
    _, k = degree_profile(g)
    cyc = circumference(g)
    circ = cyc.length if cyc is not None else 0
    ham = circ == g.n
    ht = is_homogeneously_traceable(g)
    doubly = is_doubly_homogeneously_traceable(g)
    if g.n <= INDEPENDENCE_MAX_ORDER:
        alpha, alpha_set = independence_number(g)
        alpha_field = {"value": alpha, "witness": list(alpha_set)}
    else:
        alpha_field = None
    return {
        "order": g.n,
        "size": g.size,
        "regularity": k,
        "hamiltonian": {
            "value": ham,
            "cycle": list(cyc.vertices) if ham else None,
        },
        "circumference": {
            "value": circ,
            "cycle": list(cyc.vertices) if cyc is not None else None,
        },
        "homogeneously_traceable": {
            "value": ht.ok,
            "paths": [list(p[0]) for p in ht.certificate.paths] if ht.ok else None,
            "failing_vertex": ht.failing_vertex,
        },
        "doubly": doubly.ok,
        "independence_number": alpha_field,
        "graph6": echo,
    }


def cmd_props(args: argparse.Namespace) -> int:
    for num, line in read_graph_lines(args.input):
        try:
            g = decode_graph6(line.encode("ascii"))
        except (ValueError, UnicodeEncodeError) as exc:
            raise InputError("line %d: invalid graph6 (%s)" % (num, exc)) from exc
        cert = property_certificate(g, line)
        print(json.dumps(cert, separators=(",", ":")))
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    try:
        if args.family == "cubic":
            trace = cubic_family(args.order)
        else:
            trace = quartic_family(args.order)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    print(trace.final_graph6)
    if args.trace:
        payload = json.dumps(trace.to_json(), indent=2)
        if args.trace == "-":
            print(payload)
        else:
            Path(args.trace).write_text(payload + "\n")
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    try:
        if args.kind == "connected":
            report = enumerate_connected(args.n, args.pred, workers=args.workers)
        elif args.kind == "regular":
            report = enumerate_regular(args.k, args.n, args.pred,
                                       workers=args.workers,
                                       unsafe=args.unsafe_bounds)
        else:
            report = _run_anneal(args)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    payload = report if isinstance(report, dict) else report.to_json()
    print(json.dumps(payload, indent=2))
    return 0


def _run_anneal(args: argparse.Namespace) -> dict:
    cfg = AnnealConfig(order=args.p, k=args.k, seed=args.seed,
                       max_steps=args.steps, restarts=args.restarts,
                       workers=args.workers)
    hit = anneal_seed_search(cfg)
    witnesses = []
    marked = None
    if hit is not None:
        g, marked = hit
        witnesses.append(encode_graph6(g).decode("ascii"))
    return {
        "kind": "anneal",
        "bounds": {"k": cfg.k, "order": cfg.order, "max_steps": cfg.max_steps,
                   "restarts": cfg.restarts, "target": cfg.target},
        "witnesses": witnesses,
        "marked": marked,
        "negative": not witnesses,
        "seed": cfg.seed,
    }


def cmd_seeds(args: argparse.Namespace) -> int:
    try:
        seeds = load_seeds(args.file) if args.file else default_seeds()
    except (OSError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    all_ok = True
    for seed in seeds.seeds:
        rep = verify_seed(seed.graph, seed.marked)
        all_ok &= rep.ok
        record = dict(rep.to_json())
        record["graph6"] = encode_graph6(seed.graph).decode("ascii")
        record["marked"] = seed.marked
        print(json.dumps(record, separators=(",", ":")))
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="htgraphs", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("props", help="emit JSON property certificates")
    p.add_argument("input", help="graph6 file, one graph per line, or - for stdin")
    p.set_defaults(fn=cmd_props)

    c = sub.add_parser("construct", help="run a family construction")
    c.add_argument("family", choices=("cubic", "quartic"))
    c.add_argument("order", type=int)
    c.add_argument("--trace", metavar="FILE",
                   help="write the verified step trace as JSON (- for stdout)")
    c.set_defaults(fn=cmd_construct)

    s = sub.add_parser("search", help="exhaustive or stochastic search")
    s.add_argument("kind", choices=("connected", "regular", "anneal"))
    s.add_argument("-n", type=int, help="order (connected/regular)")
    s.add_argument("-k", type=int, default=4, help="regularity degree")
    s.add_argument("-p", type=int, help="target order (anneal)")
    s.add_argument("--pred", default=None,
                   help="predicate: ht | doubly-ht | nonham | ht-nonham")
    s.add_argument("--seed", type=int, default=0, help="RNG seed (anneal)")
    s.add_argument("--steps", type=int, default=30000, help="anneal step budget")
    s.add_argument("--restarts", type=int, default=8, help="anneal restarts")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--unsafe-bounds", action="store_true",
                   help="lift the enumeration order caps")
    s.set_defaults(fn=cmd_search)

    f = sub.add_parser("seeds", help="validate seed fixtures")
    f.add_argument("file", nargs="?", default=None,
                   help="seed file (default: packaged fixtures)")
    f.set_defaults(fn=cmd_seeds)
    return top


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "search":
        if args.kind in ("connected", "regular") and args.n is None:
            print("error: search %s requires -n" % args.kind, file=sys.stderr)
            return 2
        if args.kind == "anneal" and args.p is None:
            print("error: search anneal requires -p", file=sys.stderr)
            return 2
    try:
        return args.fn(args)
    except InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0
    except Exception as exc:  # pragma: no cover - internal failure path
        print("internal error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
