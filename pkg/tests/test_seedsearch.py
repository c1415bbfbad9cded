import pytest

from htgraphs import LayoutFamily, discover_seed, encode_graph6, families_for, search_family
from htgraphs.seedsearch import k4_attachment_sets


def test_k4_attachment_distance_rule():
    sets14 = k4_attachment_sets(14, "run")
    assert sets14
    for att in sets14:
        positions = sorted(set(att))
        assert len(positions) == 2  # L=14 only admits doubled pairs
        a, b = positions
        d = min(b - a, 14 - (b - a))
        assert d >= 5
        assert att.count(a) == 2 and att.count(b) == 2
        assert all(p >= 4 for p in positions)  # run skeleton slots
    assert any(len(set(att)) == 3 for att in k4_attachment_sets(15, "run"))
    assert any(len(set(att)) == 4 for att in k4_attachment_sets(20, "run"))


def test_families_ordering_and_bounds():
    fams = families_for(18)
    assert fams[0].shape == "k4"
    assert fams[0].skeleton == "run"
    shapes = {f.shape for f in fams}
    assert "diamond" in shapes and "independent" in shapes
    with pytest.raises(ValueError):
        families_for(10)


def test_rediscovers_frozen_order18_seed(seed_set):
    fam = LayoutFamily(18, "run", 0, "k4", (5, 5, 12, 12))
    res = search_family(fam, seconds=120)
    assert res.seed is not None
    assert res.report is not None and res.report.ok
    frozen = seed_set.for_order(18)
    assert encode_graph6(res.seed.graph) == encode_graph6(frozen.graph)
    assert res.seed.marked == frozen.marked


def test_discover_seed_respects_total_budget():
    assert discover_seed(19, family_seconds=0.01, total_seconds=0.03) is None
