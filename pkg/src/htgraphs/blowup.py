"""Vertex blow-up: replace a degree-d vertex by K_d matched to its neighbours.

The labelling is fixed so results are reproducible: the surviving vertices keep
their relative order, the clique takes the d highest labels, and clique vertex
i is matched to the i-th smallest former neighbour.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, MAX_ORDER, _bitlist, is_clique
from .hamilton import (
    _cycle_through,
    _longest_cycle,
    is_doubly_homogeneously_traceable,
    validate_cycle,
)


@dataclass(frozen=True)
class BlowupMap:
    """Bookkeeping for one blow-up: who went where."""

    source_order: int
    vertex: int
    degree: int
    neighbors: tuple[int, ...]          # former neighbours, source labels, ascending
    clique: tuple[int, ...]             # new clique vertices, target labels
    matching: tuple[tuple[int, int], ...]  # (clique vertex, matched former neighbour) target labels

    def source_to_target(self, u: int) -> int:
        if u == self.vertex:
            raise ValueError("the blown-up vertex has no single image")
        return u if u < self.vertex else u - 1

    def to_json(self) -> dict:
        return {
            "source_order": self.source_order,
            "vertex": self.vertex,
            "degree": self.degree,
            "neighbors": list(self.neighbors),
            "clique": list(self.clique),
            "matching": [list(p) for p in self.matching],
        }


@dataclass(frozen=True)
class BlowupReport:
    """Measured facts about one verified blow-up step.

    Hypothesis fields are always measured; conclusion fields that only make
    sense under the hypotheses stay None when a hypothesis fails.
    """

    clique_size: int
    vertex: int
    source_doubly_ht: bool
    vertex_on_longest_cycle: bool
    vertex_in_4clique: bool | None
    source_circumference: int
    target_circumference: int
    target_doubly_ht: bool
    circumference_delta_ok: bool | None
    new_tracked_vertex: int | None
    new_tracked_ok: bool | None
    map: BlowupMap
    target: Graph

    @property
    def hypotheses_hold(self) -> bool:
        base = self.source_doubly_ht and self.vertex_on_longest_cycle
        if self.clique_size == 4:
            return base and bool(self.vertex_in_4clique)
        return base

    def to_json(self) -> dict:
        return {
            "clique_size": self.clique_size,
            "vertex": self.vertex,
            "source_doubly_ht": self.source_doubly_ht,
            "vertex_on_longest_cycle": self.vertex_on_longest_cycle,
            "vertex_in_4clique": self.vertex_in_4clique,
            "source_circumference": self.source_circumference,
            "target_circumference": self.target_circumference,
            "target_doubly_ht": self.target_doubly_ht,
            "circumference_delta_ok": self.circumference_delta_ok,
            "new_tracked_vertex": self.new_tracked_vertex,
            "new_tracked_ok": self.new_tracked_ok,
            "map": self.map.to_json(),
        }


def blow_up(g: Graph, v: int) -> tuple[Graph, BlowupMap]:
    if not 0 <= v < g.n:
        raise ValueError("vertex %d out of range" % v)
    nbrs = _bitlist(g.rows[v])
    d = len(nbrs)
    if d == 0:
        raise ValueError("cannot blow up an isolated vertex")
    new_n = g.n + d - 1
    if new_n > MAX_ORDER:
        raise ValueError("blow-up would exceed order %d" % MAX_ORDER)

    def tgt(u: int) -> int:
        return u if u < v else u - 1

    edges = [(tgt(a), tgt(b)) for a, b in g.edges() if v not in (a, b)]
    clique = tuple(range(g.n - 1, new_n))
    for i, a in enumerate(clique):
        for b in clique[i + 1:]:
            edges.append((a, b))
    matching = tuple((clique[i], tgt(x)) for i, x in enumerate(nbrs))
    edges.extend(matching)
    gm = BlowupMap(g.n, v, d, tuple(nbrs), clique, matching)
    return Graph(new_n, tuple(_rows_from_edges(new_n, edges))), gm


def _rows_from_edges(n: int, edges) -> list[int]:
    rows = [0] * n
    for a, b in edges:
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return rows


def _lift_cycle(cycle: tuple[int, ...], bm: BlowupMap) -> tuple[int, ...]:
    """Reroute a source cycle through v across the whole new clique."""
    v = bm.vertex
    idx = cycle.index(v)
    prev_v = cycle[idx - 1]
    next_v = cycle[(idx + 1) % len(cycle)]
    match_of = {x: c for c, x in bm.matching}
    tgt = bm.source_to_target
    enter = match_of[tgt(prev_v)]
    leave = match_of[tgt(next_v)]
    middle = sorted(set(bm.clique) - {enter, leave})
    lifted = [tgt(u) for u in cycle[idx + 1:] + cycle[:idx]]
    return tuple(lifted + [enter] + middle + [leave])


def _verify(g: Graph, v: int, clique_size: int) -> BlowupReport:
    d = g.degree(v)
    if d != clique_size:
        raise ValueError("vertex %d has degree %d, expected %d" % (v, d, clique_size))
    src_dht = is_doubly_homogeneously_traceable(g).ok
    c, _, _ = _longest_cycle(g.rows, g.n)
    through = _cycle_through(g.rows, g.n, v, c)
    on_lc = through is not None

    in_k4: bool | None = None
    chosen_clique: tuple[int, ...] | None = None
    if clique_size == 4:
        for trio in combinations(g.neighbors(v), 3):
            if is_clique(g, trio):
                cand = tuple(sorted((v,) + trio))
                if chosen_clique is None or cand < chosen_clique:
                    chosen_clique = cand
        in_k4 = chosen_clique is not None

    target, bm = blow_up(g, v)
    hyp = src_dht and on_lc and (clique_size == 3 or bool(in_k4))

    initial = None
    if through is not None:
        initial = _lift_cycle(through, bm)
        if not validate_cycle(target, initial):
            raise RuntimeError("lifted cycle witness failed validation")
    tc, _, _ = _longest_cycle(target.rows, target.n, initial=initial)
    tgt_dht = is_doubly_homogeneously_traceable(target).ok

    delta = clique_size - 1
    delta_ok = (tc == c + delta) if hyp else None

    v_prime: int | None = None
    v_prime_ok: bool | None = None
    if clique_size == 4 and hyp:
        outside = [x for x in bm.neighbors if x not in chosen_clique]
        if len(outside) == 1:
            i = bm.neighbors.index(outside[0])
            v_prime = bm.clique[i]
            on = _cycle_through(target.rows, target.n, v_prime, tc) is not None
            v_prime_ok = on and is_clique(target, bm.clique)
        else:
            # v's neighbours hold several 4-cliques; the excluded neighbour is
            # taken from the lexicographically smallest one
            v_prime_ok = False

    return BlowupReport(
        clique_size=clique_size,
        vertex=v,
        source_doubly_ht=src_dht,
        vertex_on_longest_cycle=on_lc,
        vertex_in_4clique=in_k4,
        source_circumference=c,
        target_circumference=tc,
        target_doubly_ht=tgt_dht,
        circumference_delta_ok=delta_ok,
        new_tracked_vertex=v_prime,
        new_tracked_ok=v_prime_ok,
        map=bm,
        target=target,
    )


def verify_k3_blowup(g: Graph, v: int) -> BlowupReport:
    """Blow up a degree-3 vertex and measure what the expansion preserved.

    Expected under the hypotheses (source doubly homogeneously traceable, v on
    a longest cycle): target doubly homogeneously traceable, circumference
    grows by exactly 2.
    """
    return _verify(g, v, 3)


def verify_k4_blowup(g: Graph, v: int) -> BlowupReport:
    """Blow up a degree-4 vertex; needs v in a 4-clique for the full conclusion.

    Expected under the hypotheses: target doubly homogeneously traceable,
    circumference grows by exactly 3, and the clique vertex matched to the
    neighbour outside the chosen 4-clique inherits all hypotheses.
    """
    return _verify(g, v, 4)
