"""Immutable bitset graphs (order <= 64) plus the graph6 codec and basic parameters."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_ORDER = 64
ALPHA_MAX_ORDER = 40


def _bitlist(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; rows[v] is the neighbour bitmask of vertex v."""

    n: int
    rows: tuple[int, ...]

    @property
    def size(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bitlist(self.rows[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            m = self.rows[v] >> (v + 1)
            for u in _iter_bits(m):
                out.append((v, u + v + 1))
        return out

    def add_vertex(self, neighbor_mask: int) -> "Graph":
        """New graph with one extra vertex (highest label) joined to neighbor_mask."""
        n = self.n
        if neighbor_mask >> n:
            raise ValueError("neighbor mask out of range")
        if n + 1 > MAX_ORDER:
            raise ValueError("order above %d not supported" % MAX_ORDER)
        rows = [r | (((neighbor_mask >> i) & 1) << n) for i, r in enumerate(self.rows)]
        rows.append(neighbor_mask)
        return Graph(n + 1, tuple(rows))

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Relabel so old vertex v becomes perm[v]."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex set")
        rows = [0] * self.n
        for v, r in enumerate(self.rows):
            nr = 0
            for u in _iter_bits(r):
                nr |= 1 << perm[u]
            rows[perm[v]] = nr
        return Graph(self.n, tuple(rows))


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 1 or n > MAX_ORDER:
        raise ValueError("order must be in 1..%d" % MAX_ORDER)
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError("edge endpoint out of range: (%d, %d)" % (u, v))
        if u == v:
            raise ValueError("loop edge at vertex %d" % u)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs order >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    """Petersen graph: outer 5-cycle 0-4, inner pentagram 5-9, spokes i <-> i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, edges)


# ---------------------------------------------------------------------------
# graph6

def encode_graph6(g: Graph) -> bytes:
    """Canonical-length graph6 encoding (long header only for orders 63 and 64)."""
    n = g.n
    if n <= 62:
        head = bytes([n + 63])
    else:
        head = bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    acc = 0
    nbits = 0
    body = bytearray()
    for j in range(1, n):
        col = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                body.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        body.append((acc << (6 - nbits)) + 63)
    return head + bytes(body)


def decode_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise ValueError("empty graph6 string")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise ValueError("graph6 orders above 258047 not supported")
        if len(data) < 4:
            raise ValueError("truncated graph6 long-form header")
        b1, b2, b3 = data[1], data[2], data[3]
        for b in (b1, b2, b3):
            if not 63 <= b <= 126:
                raise ValueError("invalid byte in graph6 header")
        n = ((b1 - 63) << 12) | ((b2 - 63) << 6) | (b3 - 63)
        body = data[4:]
    else:
        if not 63 <= data[0] <= 125:
            raise ValueError("invalid graph6 header byte %d" % data[0])
        n = data[0] - 63
        body = data[1:]
    if n < 1:
        raise ValueError("graph6 order must be at least 1")
    if n > MAX_ORDER:
        raise ValueError("graph6 order %d above supported maximum %d" % (n, MAX_ORDER))
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise ValueError("graph6 body too short")
    if len(body) > need:
        raise ValueError("trailing bytes after graph6 body")
    rows = [0] * n
    idx = 0
    for byte in body:
        if not 63 <= byte <= 126:
            raise ValueError("invalid byte %d in graph6 body" % byte)
        group = byte - 63
        for k in range(5, -1, -1):
            bit = (group >> k) & 1
            if idx >= nbits:
                if bit:
                    raise ValueError("non-zero padding bits in graph6 body")
                continue
            if bit:
                i, j = _PAIR_CACHE.pair(idx)
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(rows))


class _PairCache:
    """Maps a graph6 bit index to its (i, j) upper-triangle cell, column order."""

    def __init__(self) -> None:
        self._pairs: list[tuple[int, int]] = []
        self._next_col = 1

    def pair(self, idx: int) -> tuple[int, int]:
        while idx >= len(self._pairs):
            j = self._next_col
            self._pairs.extend((i, j) for i in range(j))
            self._next_col += 1
        return self._pairs[idx]


_PAIR_CACHE = _PairCache()


# ---------------------------------------------------------------------------
# basic parameters

def degree_profile(g: Graph) -> tuple[tuple[int, ...], int | None]:
    """Sorted degree sequence and the common degree (None if irregular)."""
    degs = tuple(sorted(r.bit_count() for r in g.rows))
    k = degs[0] if degs and degs[0] == degs[-1] else None
    return degs, k


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError("vertex %d out of range" % v)
    if len(set(vs)) != len(vs):
        raise ValueError("repeated vertex in clique test")
    for i, v in enumerate(vs):
        for u in vs[i + 1:]:
            if not (g.rows[v] >> u) & 1:
                return False
    return True


def is_connected(g: Graph) -> bool:
    return _connected_mask(g.rows, (1 << g.n) - 1)


def _connected_mask(rows: tuple[int, ...] | list[int], mask: int) -> bool:
    """Is the sub-structure induced on mask connected (empty mask counts as connected)?"""
    if mask == 0:
        return True
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in _iter_bits(frontier):
            nxt |= rows[v]
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


def _components(rows: tuple[int, ...] | list[int], mask: int) -> list[int]:
    comps = []
    todo = mask
    while todo:
        start = todo & -todo
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in _iter_bits(frontier):
                nxt |= rows[v]
            frontier = nxt & mask & ~seen
            seen |= frontier
        comps.append(seen)
        todo &= ~seen
    return comps


def articulation_points(g: Graph) -> tuple[int, ...]:
    """Cut vertices, ascending. Classic lowpoint DFS, one tree per component."""
    n = g.n
    rows = g.rows
    disc = [-1] * n
    low = [0] * n
    cut = [False] * n
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, _iter_bits(rows[root]))]
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    disc[u] = low[u] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((u, v, _iter_bits(rows[u])))
                    advanced = True
                    break
                elif u != parent:
                    if disc[u] < low[v]:
                        low[v] = disc[u]
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if p != root and low[v] >= disc[p]:
                    cut[p] = True
        if root_children > 1:
            cut[root] = True
    return tuple(v for v in range(n) if cut[v])


def biconnected_blocks(g: Graph) -> list[int]:
    """Vertex masks of the biconnected blocks (bridges give 2-vertex blocks)."""
    n = g.n
    rows = g.rows
    disc = [-1] * n
    low = [0] * n
    timer = 0
    blocks: list[int] = []
    estack: list[tuple[int, int]] = []
    for root in range(n):
        if disc[root] != -1:
            continue
        stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, _iter_bits(rows[root]))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    estack.append((v, u))
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append((u, v, _iter_bits(rows[u])))
                    advanced = True
                    break
                elif u != parent and disc[u] < disc[v]:
                    estack.append((v, u))
                    if disc[u] < low[v]:
                        low[v] = disc[u]
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if low[v] >= disc[p]:
                    mask = 0
                    while estack:
                        a, b = estack.pop()
                        mask |= (1 << a) | (1 << b)
                        if (a, b) == (p, v):
                            break
                    if mask:
                        blocks.append(mask)
    return blocks


def independence_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact maximum independent set via bitmask branch and bound."""
    n = g.n
    if n > ALPHA_MAX_ORDER:
        raise ValueError("independence_number limited to order <= %d" % ALPHA_MAX_ORDER)
    rows = g.rows
    full = (1 << n) - 1

    # greedy min-degree start for the initial bound
    best_mask = 0
    cand = full
    while cand:
        v = min(_bitlist(cand), key=lambda x: (rows[x] & cand).bit_count())
        best_mask |= 1 << v
        cand &= ~(rows[v] | (1 << v))
    best = [best_mask.bit_count(), best_mask]

    def bnb(cand: int, size: int, chosen: int) -> None:
        if size + cand.bit_count() <= best[0]:
            return
        if cand == 0:
            best[0] = size
            best[1] = chosen
            return
        # branch on a max-degree candidate: include first, then exclude
        v = max(_bitlist(cand), key=lambda x: (rows[x] & cand).bit_count())
        vb = 1 << v
        bnb(cand & ~(rows[v] | vb), size + 1, chosen | vb)
        bnb(cand & ~vb, size, chosen)

    bnb(full, 0, 0)
    return best[0], tuple(_bitlist(best[1]))
