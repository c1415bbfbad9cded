import random

from htgraphs import (
    circumference,
    complete_graph,
    cycle_graph,
    from_edges,
    hamilton_path_from,
    is_doubly_homogeneously_traceable,
    is_hamiltonian,
    is_homogeneously_traceable,
    longest_cycle_vertices,
    on_longest_cycle,
    path_graph,
    petersen,
    start_neighbors,
)

from conftest import (
    brute_circumference,
    brute_is_doubly_ht,
    brute_is_ht,
    brute_ham_paths_from,
)


def test_circumference_known_graphs():
    assert circumference(path_graph(5)) is None
    assert circumference(cycle_graph(7)).length == 7
    assert circumference(complete_graph(6)).length == 6
    assert circumference(petersen()).length == 9


def test_circumference_matches_brute_force(small_connected):
    for n in (4, 5, 6):
        for g in small_connected[n]:
            w = circumference(g)
            got = w.length if w is not None else 0
            assert got == brute_circumference(g)


def test_circumference_brute_force_order7_sample(small_connected):
    rng = random.Random(5)
    sample = rng.sample(small_connected[7], 60)
    for g in sample:
        w = circumference(g)
        got = w.length if w is not None else 0
        assert got == brute_circumference(g)


def test_hamiltonian_and_witness(small_connected):
    for n in (4, 5, 6):
        for g in small_connected[n]:
            w = is_hamiltonian(g)
            if w is not None:
                cyc = w.vertices
                assert len(cyc) == g.n and len(set(cyc)) == g.n
                assert all(g.has_edge(cyc[i - 1], cyc[i]) for i in range(g.n))
            else:
                assert brute_circumference(g) < g.n


def test_ht_against_brute_force(small_connected):
    for n in (4, 5, 6):
        for g in small_connected[n]:
            rep = is_homogeneously_traceable(g)
            assert rep.ok == brute_is_ht(g)
            if rep.ok:
                assert rep.certificate.validate(g)
            else:
                assert not brute_ham_paths_from(g, rep.failing_vertex)


def test_doubly_ht_against_brute_force(small_connected):
    for n in (4, 5, 6):
        for g in small_connected[n]:
            rep = is_doubly_homogeneously_traceable(g)
            assert rep.ok == brute_is_doubly_ht(g)
            if rep.ok:
                assert rep.certificate.validate(g)
                assert rep.certificate.doubly


def test_path_helpers():
    g = petersen()
    for v in range(10):
        p = hamilton_path_from(g, v)
        assert p is not None and p[0] == v
        firsts = start_neighbors(g, v)
        # vertex-transitive and doubly HT: at least two usable first edges
        assert len(firsts) >= 2
        assert set(firsts) <= set(g.neighbors(v))


def test_longest_cycle_membership():
    g = petersen()
    assert longest_cycle_vertices(g) == tuple(range(10))
    assert all(on_longest_cycle(g, v, 9) for v in range(10))
    # a vertex hanging off a triangle is on no cycle at all
    tadpole = from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert not on_longest_cycle(tadpole, 3, 3)
    assert on_longest_cycle(tadpole, 0, 3)


def test_certificate_validation_rejects_mismatch():
    g = cycle_graph(5)
    rep = is_homogeneously_traceable(g)
    assert rep.ok and rep.certificate.validate(g)
    other = path_graph(5)
    assert not rep.certificate.validate(other)
