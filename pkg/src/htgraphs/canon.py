"""Exact canonical labelling: partition refinement plus individualization search.

The canonical form of a graph is the graph6 encoding of its relabelling by the
best leaf of the search tree, so two graphs are isomorphic exactly when their
forms are byte-equal. Discovered automorphisms prune the tree; only generators
that fix the whole individualized prefix may justify skipping a sibling.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, _bitlist, encode_graph6

CANON_MAX_ORDER = 20


@dataclass(frozen=True)
class CanonResult:
    form: bytes
    labeling: tuple[int, ...]            # labeling[v] = canonical position of v
    generators: tuple[tuple[int, ...], ...]
    orbits: tuple[int, ...]              # smallest vertex of each vertex's orbit


def _refine(rows, cells: list[int], alpha: list[int]) -> list[int]:
    """Equitable refinement of an ordered partition; deterministic split order."""
    cells = list(cells)
    alpha = list(alpha)
    while alpha:
        w = alpha.pop()
        i = 0
        while i < len(cells):
            x = cells[i]
            if x & (x - 1):  # more than one vertex
                groups: dict[int, int] = {}
                m = x
                while m:
                    b = m & -m
                    m ^= b
                    c = (rows[b.bit_length() - 1] & w).bit_count()
                    groups[c] = groups.get(c, 0) | b
                if len(groups) > 1:
                    frags = [groups[c] for c in sorted(groups)]
                    cells[i:i + 1] = frags
                    alpha.extend(frags)
                    i += len(frags)
                    continue
            i += 1
    return cells


def stable_cells(n: int, rows) -> list[int]:
    """Refinement of the unit partition; invariant under relabelling."""
    full = (1 << n) - 1
    return _refine(rows, [full], [full])


def _relabelled_rows(rows, order: list[int]) -> tuple[int, ...]:
    n = len(order)
    pos = [0] * n
    for p, v in enumerate(order):
        pos[v] = p
    out = []
    for p in range(n):
        r = rows[order[p]]
        nr = 0
        while r:
            b = r & -r
            r ^= b
            nr |= 1 << pos[b.bit_length() - 1]
        out.append(nr)
    return tuple(out)


def _canonicalize(n: int, rows) -> CanonResult:
    if n == 1:
        return CanonResult(encode_graph6(Graph(1, (0,))), (0,), (), (0,))
    root = stable_cells(n, rows)

    best_val: tuple[int, ...] | None = None
    best_order: list[int] | None = None
    first_val: tuple[int, ...] | None = None
    first_order: list[int] | None = None
    gens: list[tuple[int, ...]] = []
    gen_seen: set[tuple[int, ...]] = set()
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> bool:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        parent[rb] = ra
        return True

    def note_automorphism(o1: list[int], o2: list[int]) -> None:
        # o1, o2 are vertex orders producing equal relabelled graphs
        sigma = [0] * n
        for p in range(n):
            sigma[o1[p]] = o2[p]
        for v in range(n):
            union(v, sigma[v])
        # every distinct automorphism is kept so the list generates the group
        st = tuple(sigma)
        if st not in gen_seen and any(sigma[v] != v for v in range(n)):
            gen_seen.add(st)
            gens.append(st)

    def search(cells: list[int], prefix: list[int]) -> None:
        nonlocal best_val, best_order, first_val, first_order
        target = -1
        for i, c in enumerate(cells):
            if c & (c - 1):
                target = i
                break
        if target < 0:
            order = [c.bit_length() - 1 for c in cells]
            val = _relabelled_rows(rows, order)
            if first_val is None:
                first_val = val
                first_order = order
                best_val = val
                best_order = order
                return
            if val == first_val:
                note_automorphism(first_order, order)
            if val > best_val:
                best_val = val
                best_order = order
            elif val == best_val and order != best_order:
                note_automorphism(best_order, order)
            return
        cell = cells[target]
        stab_root: list[int] | None = None
        stab_seen = -1
        have_stab = False
        tried: list[int] = []

        def sfind(x: int) -> int:
            while stab_root[x] != x:
                stab_root[x] = stab_root[stab_root[x]]
                x = stab_root[x]
            return x

        for v in _bitlist(cell):
            if tried:
                if stab_seen != len(gens):
                    stab_seen = len(gens)
                    fixing = [s for s in gens if all(s[f] == f for f in prefix)]
                    have_stab = bool(fixing)
                    stab_root = list(range(n))
                    for s in fixing:
                        for u in range(n):
                            ra, rb = sfind(u), sfind(s[u])
                            if ra != rb:
                                stab_root[max(ra, rb)] = min(ra, rb)
                if have_stab:
                    rv = sfind(v)
                    if any(sfind(w) == rv for w in tried):
                        tried.append(v)
                        continue
            vb = 1 << v
            child = cells[:target] + [vb, cell ^ vb] + cells[target + 1:]
            refined = _refine(rows, child, [vb])
            prefix.append(v)
            search(refined, prefix)
            prefix.pop()
            tried.append(v)

    search(root, [])
    order = best_order
    labeling = [0] * n
    for p, v in enumerate(order):
        labeling[v] = p
    canon_rows = _relabelled_rows(rows, order)
    form = encode_graph6(Graph(n, canon_rows))
    orbits = tuple(find(v) for v in range(n))
    return CanonResult(form, tuple(labeling), tuple(gens), orbits)


def canonicalize(g: Graph) -> CanonResult:
    if g.n > CANON_MAX_ORDER:
        raise ValueError("canonical labelling limited to order <= %d" % CANON_MAX_ORDER)
    return _canonicalize(g.n, g.rows)


def canonical_form(g: Graph) -> bytes:
    """Byte string equal across a whole isomorphism class and nothing else."""
    return canonicalize(g).form
