import random

import pytest

from htgraphs import (
    Graph,
    articulation_points,
    complete_graph,
    cycle_graph,
    decode_graph6,
    degree_profile,
    encode_graph6,
    from_edges,
    independence_number,
    is_clique,
    is_connected,
    path_graph,
    petersen,
)


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return from_edges(n, edges)


def test_from_edges_rejects_bad_input():
    with pytest.raises(ValueError):
        from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        from_edges(0, [])


def test_basic_parameters():
    g = petersen()
    assert g.n == 10 and g.size == 15
    assert degree_profile(g) == ((3,) * 10, 3)
    assert degree_profile(path_graph(4))[1] is None
    assert sorted(g.neighbors(0)) == [1, 4, 5]


def test_graph6_roundtrip_random():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 20)
        g = random_graph(rng, n)
        assert decode_graph6(encode_graph6(g)) == g


def test_graph6_known_values():
    # standard encodings: K4 is "C~", the 5-cycle is "Dhc"
    assert encode_graph6(complete_graph(4)) == b"C~"
    assert decode_graph6(b"Dhc") == cycle_graph(5)
    with pytest.raises(ValueError):
        decode_graph6(b"")
    with pytest.raises(ValueError):
        decode_graph6(b"C~extra")


def test_graph6_against_networkx():
    nx = pytest.importorskip("networkx")
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randint(1, 16)
        g = random_graph(rng, n)
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(g.edges())
        theirs = nx.to_graph6_bytes(h, header=False).strip()
        assert encode_graph6(g) == theirs
        assert decode_graph6(theirs) == g


def test_clique_and_independence():
    g = petersen()
    assert is_clique(g, [0, 1])
    assert not is_clique(g, [0, 1, 2])
    assert is_clique(complete_graph(5), range(5))
    alpha, witness = independence_number(g)
    assert alpha == 4
    assert len(witness) == 4
    assert all(not g.has_edge(u, v) for u in witness for v in witness if u < v)
    for n in range(3, 13):
        assert independence_number(cycle_graph(n))[0] == n // 2


def test_connectivity_and_articulation():
    assert is_connected(petersen())
    assert not is_connected(from_edges(4, [(0, 1), (2, 3)]))
    assert articulation_points(path_graph(5)) == (1, 2, 3)
    assert articulation_points(cycle_graph(5)) == ()


def test_relabel_preserves_structure():
    rng = random.Random(3)
    g = petersen()
    perm = list(range(10))
    rng.shuffle(perm)
    h = g.relabel(perm)
    assert h.size == g.size
    assert degree_profile(h) == degree_profile(g)
    for u, v in g.edges():
        assert h.has_edge(perm[u], perm[v])
