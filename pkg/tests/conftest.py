"""Shared fixtures and tiny brute-force oracles.

The oracles deliberately use itertools.permutations rather than the library's
backtracking engines so they share no code path with what they check; keep
them on graphs of order <= 8.
"""
from itertools import permutations

import pytest

from htgraphs import Graph, connected_classes, default_seeds, petersen


def brute_circumference(g: Graph) -> int:
    """Longest cycle length by scanning vertex permutations. O(n!)."""
    best = 0
    verts = range(g.n)
    for r in range(3, g.n + 1):
        for perm in permutations(verts, r):
            if perm[0] != min(perm):
                continue
            if not g.has_edge(perm[-1], perm[0]):
                continue
            if all(g.has_edge(perm[i], perm[i + 1]) for i in range(r - 1)):
                best = max(best, r)
                break
    return best


def brute_ham_paths_from(g: Graph, v: int) -> list[tuple[int, ...]]:
    rest = [u for u in range(g.n) if u != v]
    out = []
    for perm in permutations(rest):
        path = (v,) + perm
        if all(g.has_edge(path[i], path[i + 1]) for i in range(g.n - 1)):
            out.append(path)
    return out


def brute_is_ht(g: Graph) -> bool:
    return all(brute_ham_paths_from(g, v) for v in range(g.n))


def brute_is_doubly_ht(g: Graph) -> bool:
    for v in range(g.n):
        firsts = {p[1] for p in brute_ham_paths_from(g, v)} if g.n > 1 else set()
        if len(firsts) < 2:
            return False
    return True


@pytest.fixture(scope="session")
def petersen_graph() -> Graph:
    return petersen()


@pytest.fixture(scope="session")
def small_connected() -> dict[int, tuple[Graph, ...]]:
    return {n: connected_classes(n) for n in range(1, 8)}


@pytest.fixture(scope="session")
def seed_set():
    return default_seeds()
