"""Isomorph-free exhaustive generation and the searches built on top of it.

Graphs of order n are produced by attaching one new vertex to each order n-1
representative. A child survives exactly when its new vertex lies in the
automorphism orbit of the child's canonical deletion target, and candidate
neighbour sets are reduced to one representative per parent-automorphism
orbit, so every isomorphism class is emitted exactly once.

Two families are generated this way: all connected graphs (small orders) and
connected k-regular graphs, the latter through intermediate graphs with
maximum degree <= k that can still be completed to a connected k-regular
graph of the target order. Intermediates may be disconnected.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from functools import lru_cache
from multiprocessing import get_context
from typing import Callable, NamedTuple

from .anneal import AnnealConfig, anneal_seed_search  # noqa: F401  (search API surface)
from .canon import canonicalize, stable_cells
from .graphs import (
    Graph,
    _bitlist,
    _components,
    articulation_points,
    cycle_graph,
    decode_graph6,
    encode_graph6,
)
from .hamilton import (
    circumference,
    is_doubly_homogeneously_traceable,
    is_hamiltonian,
    is_homogeneously_traceable,
)

CONNECTED_MAX_ORDER = 9
REGULAR_MAX_ORDER = {3: 14, 4: 13}


# ---------------------------------------------------------------------------
# predicates


def pred_ht(g: Graph) -> bool:
    return is_homogeneously_traceable(g).ok


def pred_doubly_ht(g: Graph) -> bool:
    return is_doubly_homogeneously_traceable(g).ok


def pred_nonham(g: Graph) -> bool:
    return g.n >= 3 and is_hamiltonian(g) is None


def pred_ht_nonham(g: Graph) -> bool:
    # hamiltonicity is the fast reject for almost every candidate
    if g.n < 3 or is_hamiltonian(g) is not None:
        return False
    return is_homogeneously_traceable(g).ok


PREDICATES: dict[str, Callable[[Graph], bool]] = {
    "ht": pred_ht,
    "doubly-ht": pred_doubly_ht,
    "nonham": pred_nonham,
    "ht-nonham": pred_ht_nonham,
}


def resolve_predicate(predicate) -> tuple[str | None, Callable[[Graph], bool] | None]:
    if predicate is None:
        return None, None
    if callable(predicate):
        return getattr(predicate, "__name__", "custom"), predicate
    if predicate in PREDICATES:
        return predicate, PREDICATES[predicate]
    raise ValueError("unknown predicate %r (known: %s)" % (predicate, ", ".join(sorted(PREDICATES))))


# ---------------------------------------------------------------------------
# canonical augmentation core


def _apply_perm_mask(mask: int, perm: tuple[int, ...]) -> int:
    out = 0
    while mask:
        b = mask & -mask
        mask ^= b
        out |= 1 << perm[b.bit_length() - 1]
    return out


def _subset_orbit_reps(masks: list[int], gens: tuple[tuple[int, ...], ...]) -> list[int]:
    if not gens:
        return masks
    reps = []
    seen: set[int] = set()
    for s in masks:
        if s in seen:
            continue
        reps.append(s)
        orbit = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for p in gens:
                y = _apply_perm_mask(x, p)
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        seen |= orbit
    return reps


def _accept_child(child: Graph, eligible: int) -> bool:
    """Keep the child iff its last vertex is an acceptable canonical deletion.

    eligible: vertices whose removal keeps the child inside the family being
    generated. The canonical deletion target is the eligible vertex with the
    highest canonical position; acceptance means the new vertex shares its
    automorphism orbit. Cells of the stable partition are position-ordered,
    which gives a cheap reject and, for discrete partitions, a cheap accept.
    """
    new = child.n - 1
    cells = stable_cells(child.n, child.rows)
    last = 0
    discrete = True
    for c in cells:
        if c & (c - 1):
            discrete = False
        if c & eligible:
            last = c
    if not (last >> new) & 1:
        return False
    if discrete:
        return True
    r = canonicalize(child)
    delta = max(_bitlist(eligible), key=lambda v: r.labeling[v])
    return r.orbits[new] == r.orbits[delta]


def _connected_children(parent: Graph) -> list[Graph]:
    n = parent.n
    gens = canonicalize(parent).generators
    masks = list(range(1, 1 << n))
    out = []
    full_child = (1 << (n + 1)) - 1
    for s in _subset_orbit_reps(masks, gens):
        child = parent.add_vertex(s)
        elig = full_child
        for v in articulation_points(child):
            elig &= ~(1 << v)
        if _accept_child(child, elig):
            out.append(child)
    return out


def _regular_feasible(rows, k: int, order: int) -> bool:
    """Can this max-degree-<=k graph still grow into a connected k-regular
    graph of the target order? Necessary conditions only."""
    n = len(rows)
    m = order - n
    defs = [k - r.bit_count() for r in rows]
    total = 0
    defmask = 0
    for v, d in enumerate(defs):
        if d < 0 or d > m:
            return False
        total += d
        if d:
            defmask |= 1 << v
    if total > m * k or (m * k - total) & 1:
        return False
    comps = _components(rows, (1 << n) - 1)
    if m == 0:
        return total == 0 and len(comps) == 1
    # each component must keep an open vertex, and enough future edge
    # capacity must remain to join everything up
    for c in comps:
        if not (c & defmask):
            return False
    return (m * k + total) // 2 >= len(comps) + m - 1


def _regular_children(parent: Graph, k: int, order: int) -> list[Graph]:
    n = parent.n
    m = order - n  # the new vertex is one of these m
    defmask = 0
    must = 0
    for v in range(n):
        d = k - parent.rows[v].bit_count()
        if d:
            defmask |= 1 << v
        if d == m:
            must |= 1 << v
    candidates = []
    s = defmask
    while True:
        if (s & must) == must:
            c = s.bit_count()
            if c <= k and k - c <= m - 1:
                candidates.append(s)
        if s == 0:
            break
        s = (s - 1) & defmask
    candidates.reverse()  # ascending masks, deterministic
    gens = canonicalize(parent).generators
    out = []
    for s in _subset_orbit_reps(candidates, gens):
        child = parent.add_vertex(s)
        if not _regular_feasible(child.rows, k, order):
            continue
        if _accept_child(child, (1 << child.n) - 1):
            out.append(child)
    return out


@lru_cache(maxsize=None)
def connected_classes(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of connected order-n graphs."""
    if n < 1:
        raise ValueError("order must be positive")
    if n == 1:
        return (Graph(1, (0,)),)
    out: list[Graph] = []
    for p in connected_classes(n - 1):
        out.extend(_connected_children(p))
    out.sort(key=encode_graph6)
    return tuple(out)


@lru_cache(maxsize=None)
def _regular_level(k: int, order: int, n: int) -> tuple[Graph, ...]:
    if n == 1:
        g = Graph(1, (0,))
        return (g,) if _regular_feasible(g.rows, k, order) else ()
    out: list[Graph] = []
    for p in _regular_level(k, order, n - 1):
        out.extend(_regular_children(p, k, order))
    out.sort(key=encode_graph6)
    return tuple(out)


def regular_classes(k: int, order: int) -> tuple[Graph, ...]:
    """Connected k-regular graphs of the given order, one per class."""
    return _regular_level(k, order, order)


# ---------------------------------------------------------------------------
# parallel generation: shard the augmentation subtrees at a split level


class _ExtendTask:
    def __init__(self, kind: str, k: int, order: int, split: int):
        self.kind = kind
        self.k = k
        self.order = order
        self.split = split

    def __call__(self, chunk: tuple[Graph, ...]) -> list[Graph]:
        level = list(chunk)
        for n in range(self.split + 1, self.order + 1):
            nxt: list[Graph] = []
            for p in level:
                if self.kind == "connected":
                    nxt.extend(_connected_children(p))
                else:
                    nxt.extend(_regular_children(p, self.k, self.order))
            level = nxt
        return level


def _parallel_classes(kind: str, k: int, order: int, workers: int) -> tuple[Graph, ...]:
    split = max(1, order - 4)
    if kind == "connected":
        base = connected_classes(split)
    else:
        base = _regular_level(k, order, split)
    if split >= order:
        return base
    chunks = [tuple(base[i::workers]) for i in range(workers)]
    task = _ExtendTask(kind, k, order, split)
    with get_context("fork").Pool(workers) as pool:
        parts = pool.map(task, chunks)
    out = [g for part in parts for g in part]
    out.sort(key=encode_graph6)
    return tuple(out)


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class SearchReport:
    kind: str
    bounds: dict
    examined: int
    classes: int
    witnesses: tuple[str, ...]
    negative: bool
    seed: int | None
    elapsed: float

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "bounds": self.bounds,
            "examined": self.examined,
            "classes": self.classes,
            "witnesses": list(self.witnesses),
            "negative": self.negative,
            "seed": self.seed,
            "elapsed": self.elapsed,
        }


def _filter_report(kind: str, bounds: dict, reps: tuple[Graph, ...], predicate,
                   started: float, seed: int | None = None) -> SearchReport:
    name, fn = resolve_predicate(predicate)
    bounds = dict(bounds)
    bounds["predicate"] = name
    if fn is None:
        witnesses = tuple(encode_graph6(g).decode("ascii") for g in reps)
    else:
        witnesses = tuple(encode_graph6(g).decode("ascii") for g in reps if fn(g))
    return SearchReport(
        kind=kind,
        bounds=bounds,
        examined=len(reps),
        classes=len(reps),
        witnesses=witnesses,
        negative=not witnesses,
        seed=seed,
        elapsed=time.monotonic() - started,
    )


def enumerate_connected(n: int, predicate=None, workers: int = 1) -> SearchReport:
    """Predicate search over all connected isomorphism classes of order n."""
    if not 1 <= n <= CONNECTED_MAX_ORDER:
        raise ValueError("order must be in 1..%d" % CONNECTED_MAX_ORDER)
    started = time.monotonic()
    if workers > 1:
        reps = _parallel_classes("connected", 0, n, workers)
    else:
        reps = connected_classes(n)
    return _filter_report("connected", {"n": n}, reps, predicate, started)


def enumerate_regular(k: int, n: int, predicate=None, workers: int = 1,
                      unsafe: bool = False) -> SearchReport:
    """Predicate search over connected k-regular isomorphism classes."""
    if k < 2 or n <= k or (k * n) & 1:
        raise ValueError("no connected %d-regular graph of order %d" % (k, n))
    cap = REGULAR_MAX_ORDER.get(k)
    if not unsafe and (cap is None or n > cap):
        raise ValueError(
            "k=%d, n=%d exceeds the supported budget (k=3: n<=14, k=4: n<=13); "
            "pass unsafe bounds explicitly to override" % (k, n))
    started = time.monotonic()
    if workers > 1:
        reps = _parallel_classes("regular", k, n, workers)
    else:
        reps = regular_classes(k, n)
    return _filter_report("regular", {"k": k, "n": n}, reps, predicate, started)


class CircumferenceProbe(NamedTuple):
    value: int
    witness: str
    conjectured: int
    matches: bool
    order: int


def min_circumference_ht(n: int) -> CircumferenceProbe:
    """Exact minimum circumference over all HT graphs of order n.

    Every hamiltonian graph has circumference n and C_n is HT, so the minimum
    is n unless some HT nonhamiltonian graph of order n beats it.
    """
    if not 3 <= n <= CONNECTED_MAX_ORDER:
        raise ValueError("order must be in 3..%d" % CONNECTED_MAX_ORDER)
    hits = enumerate_connected(n, "ht-nonham").witnesses
    best = n
    witness = encode_graph6(cycle_graph(n)).decode("ascii")
    for w in hits:
        g = decode_graph6(w.encode("ascii"))
        c = circumference(g).length
        if c < best:
            best = c
            witness = w
    conjectured = math.ceil(2 * n / 3) + 2
    return CircumferenceProbe(best, witness, conjectured, best == conjectured, n)


class MinSizeResult(NamedTuple):
    value: int
    witness: str
    expected: int
    matches: bool
    order: int


def min_size_ht_nonham(n: int) -> MinSizeResult:
    """Exact minimum edge count over HT nonhamiltonian graphs of order n."""
    if n != 9:
        raise ValueError("only order 9 is within the exhaustive budget")
    hits = enumerate_connected(n, "ht-nonham").witnesses
    if not hits:
        raise RuntimeError("no HT nonhamiltonian graph of order %d found" % n)
    best = None
    witness = None
    for w in hits:
        g = decode_graph6(w.encode("ascii"))
        size = g.size
        if best is None or size < best:
            best = size
            witness = w
    expected = math.ceil(5 * n / 4)
    return MinSizeResult(best, witness, expected, best == expected, n)
