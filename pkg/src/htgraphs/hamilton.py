"""Exact Hamilton path/cycle searches, circumference, and traceability batteries.

All searches are deterministic: candidate orderings depend only on adjacency
and break ties by ascending label, so witnesses are byte-stable across runs.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, _bitlist, _iter_bits, articulation_points, biconnected_blocks

HamPath = tuple[int, ...]


class _BudgetExhausted(Exception):
    pass


class _TargetHit(Exception):
    pass


@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class TraceabilityCertificate:
    """Per-vertex Hamilton path witnesses; two per vertex in the doubly case."""

    doubly: bool
    paths: tuple[tuple[HamPath, ...], ...]

    def validate(self, g: Graph) -> bool:
        if len(self.paths) != g.n:
            return False
        want = 2 if self.doubly else 1
        for v, plist in enumerate(self.paths):
            if len(plist) != want:
                return False
            for p in plist:
                if p[0] != v or not validate_path(g, p):
                    return False
            if self.doubly and plist[0][1] == plist[1][1]:
                return False
        return True


@dataclass(frozen=True)
class HtReport:
    certificate: TraceabilityCertificate | None
    failing_vertex: int | None

    @property
    def ok(self) -> bool:
        return self.certificate is not None


def validate_path(g: Graph, path: tuple[int, ...]) -> bool:
    """Spanning-path check written directly against adjacency, no search reuse."""
    if len(path) != g.n or len(set(path)) != g.n:
        return False
    return all((g.rows[path[i]] >> path[i + 1]) & 1 for i in range(len(path) - 1))


def validate_cycle(g: Graph, cycle: tuple[int, ...]) -> bool:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    if any(not 0 <= v < g.n for v in cycle):
        return False
    return all((g.rows[cycle[i]] >> cycle[(i + 1) % k]) & 1 for i in range(k))


# ---------------------------------------------------------------------------
# Hamilton path core

def _ham_path(rows, n: int, start: int, first: int | None = None,
              budget: int | None = None) -> HamPath | None:
    """Hamilton path from start (optionally forcing the first step).

    Exact when budget is None; with a node budget the search may give up and
    report None even if a path exists.
    """
    full = (1 << n) - 1
    if n == 1:
        return (start,)
    path = [start]
    visited = 1 << start
    if first is not None:
        if not (rows[start] >> first) & 1:
            return None
        path.append(first)
        visited |= 1 << first
        if n == 2:
            return tuple(path)
    left = [budget if budget is not None else -1]

    def rec(cur: int, visited: int) -> bool:
        if visited == full:
            return True
        if left[0] == 0:
            raise _BudgetExhausted
        if left[0] > 0:
            left[0] -= 1
        curbit = 1 << cur
        unvis = full & ~visited
        avail_base = unvis | curbit
        # a vertex with <= 1 available neighbour can only end the path
        tight = 0
        m = unvis
        while m:
            b = m & -m
            m ^= b
            c = (rows[b.bit_length() - 1] & avail_base).bit_count()
            if c == 0:
                return False
            if c == 1:
                tight += 1
                if tight >= 2:
                    return False
        # all unvisited vertices must be reachable from cur
        seen = curbit
        frontier = rows[cur] & unvis
        seen |= frontier
        while frontier:
            nxt = 0
            for v in _iter_bits(frontier):
                nxt |= rows[v]
            frontier = nxt & unvis & ~seen
            seen |= frontier
        if unvis & ~seen:
            return False
        cand = rows[cur] & unvis
        order = sorted(_bitlist(cand), key=lambda v: ((rows[v] & unvis).bit_count(), v))
        for v in order:
            path.append(v)
            if rec(v, visited | (1 << v)):
                return True
            path.pop()
        return False

    try:
        ok = rec(path[-1], visited)
    except _BudgetExhausted:
        return None
    return tuple(path) if ok else None


# ---------------------------------------------------------------------------
# cycle core: longest cycle through an anchor inside an allowed vertex set

def _cycle_engine(rows, anchor: int, allowed: int, best: list,
                  target: int | None, left: list) -> None:
    """Branch and bound; best = [length, witness_tuple]. Mutates best in place.

    Cycles are simple, contain anchor, and stay within allowed. Raises
    _TargetHit once best reaches target, _BudgetExhausted when out of nodes.
    """
    abit = 1 << anchor
    arow = rows[anchor]
    path = [anchor]

    def rec(cur: int, visited: int) -> None:
        if left[0] == 0:
            raise _BudgetExhausted
        if left[0] > 0:
            left[0] -= 1
        curbit = 1 << cur
        plen = len(path)
        if plen >= 3 and (arow >> cur) & 1 and plen > best[0]:
            best[0] = plen
            best[1] = tuple(path)
            if target is not None and best[0] >= target:
                raise _TargetHit
        unvis = allowed & ~visited
        # reachable part of unvis from cur
        seen = 0
        frontier = rows[cur] & unvis
        seen = frontier
        while frontier:
            nxt = 0
            for v in _iter_bits(frontier):
                nxt |= rows[v]
            frontier = nxt & unvis & ~seen
            seen |= frontier
        r = seen
        # drop vertices that cannot sit inside a cur->anchor segment
        ends = curbit | abit
        while True:
            removed = 0
            m = r
            while m:
                b = m & -m
                m ^= b
                if (rows[b.bit_length() - 1] & (r | ends)).bit_count() < 2:
                    removed |= b
            if not removed:
                break
            r &= ~removed
        if plen + r.bit_count() <= best[0]:
            return
        if not (arow & r):
            return
        cand = rows[cur] & r
        order = sorted(_bitlist(cand), key=lambda v: (-(rows[v] & r).bit_count(), v))
        for v in order:
            path.append(v)
            rec(v, visited | (1 << v))
            path.pop()

    rec(anchor, abit)


def _longest_cycle(rows, n: int, initial: tuple[int, ...] | None = None,
                   target: int | None = None, budget: int | None = None,
                   ) -> tuple[int, tuple[int, ...] | None, bool]:
    """(length, cycle, exact). Exact is False when the node budget ran out."""
    best = [0, None]
    if initial is not None:
        best = [len(initial), tuple(initial)]
    left = [budget if budget is not None else -1]
    blocks = [b for b in biconnected_blocks_rows(rows, n) if b.bit_count() >= 3]
    blocks.sort(key=lambda b: -b.bit_count())
    exact = True
    try:
        for block in blocks:
            if block.bit_count() <= best[0]:
                break
            for a in _bitlist(block):
                allowed = block & ~((1 << a) - 1)
                if allowed.bit_count() <= best[0]:
                    break
                _cycle_engine(rows, a, allowed, best, target, left)
    except _TargetHit:
        pass
    except _BudgetExhausted:
        exact = False
    return best[0], best[1], exact


def biconnected_blocks_rows(rows, n: int) -> list[int]:
    return biconnected_blocks(Graph(n, tuple(rows)))


def _cycle_through(rows, n: int, v: int, length: int,
                   budget: int | None = None) -> tuple[int, ...] | None:
    """Some cycle of exactly `length` vertices through v, or None."""
    best = [length - 1, None]
    left = [budget if budget is not None else -1]
    vbit = 1 << v
    try:
        for block in biconnected_blocks_rows(rows, n):
            if not block & vbit or block.bit_count() < length:
                continue
            _cycle_engine(rows, v, block, best, length, left)
    except _TargetHit:
        return best[1]
    except _BudgetExhausted:
        return None
    return best[1] if best[0] >= length else None


# ---------------------------------------------------------------------------
# public operations

def hamilton_path_from(g: Graph, v: int) -> HamPath | None:
    if not 0 <= v < g.n:
        raise ValueError("vertex %d out of range" % v)
    return _ham_path(g.rows, g.n, v)


def start_neighbors(g: Graph, v: int) -> tuple[int, ...]:
    """Neighbours u of v such that some Hamilton path starts v, u, ..."""
    if not 0 <= v < g.n:
        raise ValueError("vertex %d out of range" % v)
    hits = []
    for u in _bitlist(g.rows[v]):
        if _ham_path(g.rows, g.n, v, first=u) is not None:
            hits.append(u)
    return tuple(hits)


def is_homogeneously_traceable(g: Graph) -> HtReport:
    """Every vertex must start some Hamilton path; first failure is reported."""
    if g.n < 3:
        raise ValueError("traceability checks need order >= 3")
    rows = g.rows
    found: dict[int, HamPath] = {}
    for v in range(g.n):
        if v in found:
            continue
        p = _ham_path(rows, g.n, v)
        if p is None:
            return HtReport(None, v)
        found[v] = p
        tail = p[-1]
        if tail not in found:
            found[tail] = p[::-1]
    paths = tuple((found[v],) for v in range(g.n))
    return HtReport(TraceabilityCertificate(False, paths), None)


def is_doubly_homogeneously_traceable(g: Graph) -> HtReport:
    """Two Hamilton paths per start vertex, with distinct first edges."""
    if g.n < 3:
        raise ValueError("traceability checks need order >= 3")
    rows = g.rows
    per_vertex: list[tuple[HamPath, ...]] = []
    for v in range(g.n):
        p1 = _ham_path(rows, g.n, v)
        if p1 is None:
            return HtReport(None, v)
        p2 = None
        for u in _bitlist(rows[v] & ~(1 << p1[1])):
            p2 = _ham_path(rows, g.n, v, first=u)
            if p2 is not None:
                break
        if p2 is None:
            return HtReport(None, v)
        per_vertex.append((p1, p2))
    return HtReport(TraceabilityCertificate(True, tuple(per_vertex)), None)


def is_hamiltonian(g: Graph) -> CycleWitness | None:
    if g.n < 3:
        raise ValueError("hamiltonicity needs order >= 3")
    rows = g.rows
    full = (1 << g.n) - 1
    if any(r.bit_count() < 2 for r in rows):
        return None
    seen = 1
    frontier = rows[0]
    seen |= frontier
    while frontier:
        nxt = 0
        for v in _iter_bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    if seen != full:
        return None
    if articulation_points(g):
        return None
    best = [g.n - 1, None]
    left = [-1]
    try:
        _cycle_engine(rows, 0, full, best, g.n, left)
    except _TargetHit:
        return CycleWitness(best[1])
    return None


def circumference(g: Graph) -> CycleWitness | None:
    """Length of a longest cycle with a witness; None for forests."""
    length, cyc, _ = _longest_cycle(g.rows, g.n)
    if cyc is None:
        return None
    return CycleWitness(cyc)


def on_longest_cycle(g: Graph, v: int, length: int) -> bool:
    """Does some cycle of `length` vertices pass through v?"""
    if not 0 <= v < g.n:
        raise ValueError("vertex %d out of range" % v)
    return _cycle_through(g.rows, g.n, v, length) is not None


def longest_cycle_vertices(g: Graph) -> tuple[int, ...]:
    top = circumference(g)
    if top is None:
        raise ValueError("acyclic input has no longest cycle")
    on = set(top.vertices)
    for v in range(g.n):
        if v not in on and _cycle_through(g.rows, g.n, v, top.length) is not None:
            on.add(v)
    return tuple(sorted(on))
