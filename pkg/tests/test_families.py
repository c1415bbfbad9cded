import pytest

from htgraphs import (
    FamilyTrace,
    cubic_family,
    decode_graph6,
    degree_profile,
    parse_seed_line,
    petersen,
    quartic_family,
    verify_seed,
)
from htgraphs.families import SeedSet


def check_trace(trace: FamilyTrace) -> None:
    for step in trace.steps:
        rep = step.report
        assert rep.hypotheses_hold
        assert rep.circumference_delta_ok
        assert rep.target_doubly_ht
    g = trace.final
    assert g.n == trace.order
    assert degree_profile(g)[1] == trace.regularity


def test_cubic_family_base_is_petersen():
    trace = cubic_family(10)
    assert trace.final == petersen()
    assert trace.steps == ()
    assert trace.circumference == 9
    assert trace.doubly_ht


def test_cubic_family_growth():
    for n in (12, 14, 16):
        trace = cubic_family(n)
        check_trace(trace)
        assert trace.order == n
        assert trace.regularity == 3
        assert trace.circumference == n - 1
        assert len(trace.steps) == (n - 10) // 2


def test_cubic_family_rejects_bad_orders():
    for bad in (11, 8, 9, 41):
        with pytest.raises(ValueError):
            cubic_family(bad)


def test_seed_fixtures_verify(seed_set):
    assert seed_set.orders() == (18, 19, 20)
    for seed in seed_set.seeds:
        rep = verify_seed(seed.graph, seed.marked)
        assert rep.ok, rep.to_json()
        assert rep.circumference == seed.order - 4


def test_verify_seed_failure_modes():
    rep = verify_seed(petersen(), 0)
    assert not rep.regular4 and not rep.ok
    from htgraphs import complete_graph

    rep = verify_seed(complete_graph(5), 0)
    assert rep.regular4
    assert not rep.circumference_ok  # circumference 5, not 1
    assert not rep.ok
    with pytest.raises(ValueError):
        verify_seed(petersen(), 10)


def test_parse_seed_line():
    assert parse_seed_line("") is None
    assert parse_seed_line("# comment only") is None
    seed = parse_seed_line("Dhc # marked=2")
    assert seed.order == 5 and seed.marked == 2
    with pytest.raises(ValueError):
        parse_seed_line("Dhc")
    with pytest.raises(ValueError):
        parse_seed_line("Dhc # marked=9")


def test_quartic_family_base_orders(seed_set):
    for p in (18, 19, 20):
        trace = quartic_family(p, seed_set)
        assert trace.steps == ()
        assert trace.order == p
        assert trace.regularity == 4
        assert trace.circumference == p - 4
        assert trace.doubly_ht


def test_quartic_family_one_step(seed_set):
    trace = quartic_family(21, seed_set)
    check_trace(trace)
    assert trace.order == 21
    assert trace.circumference == 17
    assert len(trace.steps) == 1
    assert decode_graph6(trace.seed.encode("ascii")).n == 18


def test_quartic_family_seed_residues(seed_set):
    assert decode_graph6(quartic_family(22, seed_set).seed.encode("ascii")).n == 19
    assert decode_graph6(quartic_family(23, seed_set).seed.encode("ascii")).n == 20


def test_quartic_family_rejects_bad_input(seed_set):
    with pytest.raises(ValueError):
        quartic_family(17, seed_set)
    with pytest.raises(ValueError):
        quartic_family(41, seed_set)
    with pytest.raises(KeyError):
        quartic_family(19, SeedSet(seeds=(seed_set.for_order(18),)))


def test_quartic_family_rejects_bad_seed(seed_set):
    from htgraphs import Seed, cycle_graph

    broken = SeedSet(seeds=(Seed(cycle_graph(19), 0),))
    with pytest.raises(RuntimeError):
        quartic_family(19, broken)