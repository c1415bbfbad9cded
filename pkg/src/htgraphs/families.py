"""Regular family constructions grown by verified clique expansions.

Two pipelines. The cubic family starts at the Petersen graph and applies
degree-3 expansions, gaining two vertices and two circumference units per
step. The 4-regular family starts from one of three shipped seed graphs of
orders 18..20 and applies degree-4 expansions, gaining three of each. Every
step is re-verified from scratch; nothing is inherited.

Seed fixtures live in the package data directory, one per line in the format
`<graph6> # marked=<int>`, where the marked vertex starts the expansion
chain. Lines beginning with `#` and blank lines are ignored.
"""
from __future__ import annotations

import importlib.resources
import re
from dataclasses import dataclass
from pathlib import Path

from .blowup import BlowupMap, BlowupReport, verify_k3_blowup, verify_k4_blowup
from .graphs import Graph, decode_graph6, degree_profile, encode_graph6, petersen
from .hamilton import (
    circumference,
    is_doubly_homogeneously_traceable,
    on_longest_cycle,
)

FAMILY_MAX_ORDER = 40
SEED_ORDERS = (18, 19, 20)
_SEED_RESOURCE = "quartic_seeds.g6"
_MARK_RE = re.compile(r"#\s*marked\s*=\s*(\d+)\s*$")


@dataclass(frozen=True)
class FamilyStep:
    vertex: int
    map: BlowupMap
    report: BlowupReport
    graph6: str

    def to_json(self) -> dict:
        return {
            "vertex": self.vertex,
            "map": self.map.to_json(),
            "report": self.report.to_json(),
            "graph6": self.graph6,
        }


@dataclass(frozen=True)
class FamilyTrace:
    kind: str
    seed: str
    steps: tuple[FamilyStep, ...]
    final: Graph
    order: int
    regularity: int
    circumference: int
    ht: bool
    doubly_ht: bool

    @property
    def final_graph6(self) -> str:
        return encode_graph6(self.final).decode("ascii")

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "seed": self.seed,
            "steps": [s.to_json() for s in self.steps],
            "final": self.final_graph6,
            "order": self.order,
            "regularity": self.regularity,
            "circumference": self.circumference,
            "ht": self.ht,
            "doubly_ht": self.doubly_ht,
        }


@dataclass(frozen=True)
class Seed:
    graph: Graph
    marked: int

    @property
    def order(self) -> int:
        return self.graph.n


@dataclass(frozen=True)
class SeedReport:
    order: int
    regular4: bool
    doubly_ht: bool
    circumference: int
    circumference_ok: bool
    marked_on_longest_cycle: bool
    marked_in_4clique: bool

    @property
    def ok(self) -> bool:
        return (self.regular4 and self.doubly_ht and self.circumference_ok
                and self.marked_on_longest_cycle and self.marked_in_4clique)

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "regular4": self.regular4,
            "doubly_ht": self.doubly_ht,
            "circumference": self.circumference,
            "circumference_ok": self.circumference_ok,
            "marked_on_longest_cycle": self.marked_on_longest_cycle,
            "marked_in_4clique": self.marked_in_4clique,
            "ok": self.ok,
        }


@dataclass(frozen=True)
class SeedSet:
    seeds: tuple[Seed, ...]

    def for_order(self, order: int) -> Seed:
        for s in self.seeds:
            if s.order == order:
                return s
        raise KeyError("no seed of order %d" % order)

    def orders(self) -> tuple[int, ...]:
        return tuple(sorted(s.order for s in self.seeds))


def _marked_in_4clique(g: Graph, v: int) -> bool:
    nbrs = [u for u in range(g.n) if (g.rows[v] >> u) & 1]
    for i in range(len(nbrs)):
        for j in range(i + 1, len(nbrs)):
            a, b = nbrs[i], nbrs[j]
            if not (g.rows[a] >> b) & 1:
                continue
            for c in nbrs[j + 1:]:
                if (g.rows[a] >> c) & 1 and (g.rows[b] >> c) & 1:
                    return True
    return False


def verify_seed(g: Graph, marked: int) -> SeedReport:
    """Full from-scratch check that (g, marked) can start the 4-regular chain."""
    if not 0 <= marked < g.n:
        raise ValueError("marked vertex %d out of range" % marked)
    _, k = degree_profile(g)
    regular4 = k == 4
    witness = circumference(g)
    circ = witness.length if witness is not None else 0
    doubly = is_doubly_homogeneously_traceable(g).ok
    return SeedReport(
        order=g.n,
        regular4=regular4,
        doubly_ht=doubly,
        circumference=circ,
        circumference_ok=circ == g.n - 4,
        marked_on_longest_cycle=circ > 0 and on_longest_cycle(g, marked, circ),
        marked_in_4clique=_marked_in_4clique(g, marked),
    )


def parse_seed_line(line: str) -> Seed | None:
    """One fixture line -> Seed, or None for blanks and pure comments."""
    text = line.strip()
    if not text or text.startswith("#"):
        return None
    m = _MARK_RE.search(text)
    if m is None:
        raise ValueError("seed line missing 'marked=' annotation: %r" % line)
    g = decode_graph6(text[: m.start()].strip().encode("ascii"))
    marked = int(m.group(1))
    if not 0 <= marked < g.n:
        raise ValueError("marked vertex %d out of range for order %d" % (marked, g.n))
    return Seed(g, marked)


def load_seeds(path: str | Path) -> SeedSet:
    seeds = []
    for line in Path(path).read_text().splitlines():
        s = parse_seed_line(line)
        if s is not None:
            seeds.append(s)
    return SeedSet(tuple(seeds))


def default_seeds() -> SeedSet:
    """The shipped fixtures: one 4-regular seed per order 18, 19, 20."""
    ref = importlib.resources.files("htgraphs").joinpath("data", _SEED_RESOURCE)
    seeds = []
    for line in ref.read_text().splitlines():
        s = parse_seed_line(line)
        if s is not None:
            seeds.append(s)
    return SeedSet(tuple(seeds))


def cubic_family(n: int) -> FamilyTrace:
    """Cubic doubly-HT graph of even order n with circumference n - 1."""
    if n % 2:
        raise ValueError("cubic family orders are even (got %d)" % n)
    if not 10 <= n <= FAMILY_MAX_ORDER:
        raise ValueError("order must be in 10..%d" % FAMILY_MAX_ORDER)
    g = petersen()
    seed6 = encode_graph6(g).decode("ascii")
    steps: list[FamilyStep] = []
    while g.n < n:
        length = circumference(g).length
        vertex = next(v for v in range(g.n) if on_longest_cycle(g, v, length))
        rep = verify_k3_blowup(g, vertex)
        if not (rep.hypotheses_hold and rep.circumference_delta_ok and rep.target_doubly_ht):
            raise RuntimeError(
                "expansion step failed at order %d, vertex %d" % (g.n, vertex))
        g = rep.target
        steps.append(FamilyStep(vertex, rep.map, rep, encode_graph6(g).decode("ascii")))
    if steps:
        last = steps[-1].report
        circ, doubly = last.target_circumference, last.target_doubly_ht
    else:
        circ = circumference(g).length
        doubly = is_doubly_homogeneously_traceable(g).ok
    _, k = degree_profile(g)
    return FamilyTrace(
        kind="cubic",
        seed=seed6,
        steps=tuple(steps),
        final=g,
        order=g.n,
        regularity=k if k is not None else -1,
        circumference=circ,
        ht=doubly,
        doubly_ht=doubly,
    )


def quartic_family(p: int, seeds: SeedSet | None = None) -> FamilyTrace:
    """4-regular doubly-HT graph of order p with circumference p - 4."""
    if not 18 <= p <= FAMILY_MAX_ORDER:
        raise ValueError("order must be in 18..%d" % FAMILY_MAX_ORDER)
    if seeds is None:
        seeds = default_seeds()
    base_order = 18 + (p - 18) % 3
    seed = seeds.for_order(base_order)
    seed_report = verify_seed(seed.graph, seed.marked)
    if not seed_report.ok:
        raise RuntimeError(
            "seed of order %d failed verification: %s" % (base_order, seed_report.to_json()))
    g = seed.graph
    seed6 = encode_graph6(g).decode("ascii")
    tracked = seed.marked
    steps: list[FamilyStep] = []
    while g.n < p:
        rep = verify_k4_blowup(g, tracked)
        if not (rep.hypotheses_hold and rep.circumference_delta_ok
                and rep.target_doubly_ht and rep.new_tracked_ok):
            raise RuntimeError(
                "expansion step failed at order %d, vertex %d" % (g.n, tracked))
        g = rep.target
        steps.append(FamilyStep(tracked, rep.map, rep, encode_graph6(g).decode("ascii")))
        tracked = rep.new_tracked_vertex
    if steps:
        last = steps[-1].report
        circ, doubly = last.target_circumference, last.target_doubly_ht
    else:
        circ, doubly = seed_report.circumference, seed_report.doubly_ht
    _, k = degree_profile(g)
    return FamilyTrace(
        kind="quartic",
        seed=seed6,
        steps=tuple(steps),
        final=g,
        order=g.n,
        regularity=k if k is not None else -1,
        circumference=circ,
        ht=doubly,
        doubly_ht=doubly,
    )
