import pytest

from htgraphs import (
    SearchReport,
    canonical_form,
    connected_classes,
    enumerate_connected,
    enumerate_regular,
    min_circumference_ht,
    min_size_ht_nonham,
    petersen,
    regular_classes,
)
from htgraphs.search import resolve_predicate

# connected graphs per order (OEIS A001349) and connected cubic / 4-regular
# class counts (A002851 / A006820)
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19}
QUARTIC_COUNTS = {5: 1, 6: 1, 7: 2, 8: 6, 9: 16, 10: 59}


def test_connected_class_counts():
    for n, want in CONNECTED_COUNTS.items():
        assert len(connected_classes(n)) == want


def test_connected_classes_are_distinct():
    forms = {canonical_form(g) for g in connected_classes(6)}
    assert len(forms) == 112


def test_cubic_class_counts():
    for n, want in CUBIC_COUNTS.items():
        assert len(regular_classes(3, n)) == want


def test_quartic_class_counts():
    for n, want in QUARTIC_COUNTS.items():
        assert len(regular_classes(4, n)) == want


def test_small_orders_have_no_ht_nonhamiltonian():
    for n in range(3, 8):
        report = enumerate_connected(n, "ht-nonham")
        assert report.negative
        assert report.examined == CONNECTED_COUNTS[n]


def test_petersen_is_only_cubic_ht_nonham_at_10():
    report = enumerate_regular(3, 10, "ht-nonham")
    assert len(report.witnesses) == 1
    from htgraphs import decode_graph6

    found = decode_graph6(report.witnesses[0].encode("ascii"))
    assert canonical_form(found) == canonical_form(petersen())


def test_enumerate_regular_bounds():
    with pytest.raises(ValueError):
        enumerate_regular(4, 14)
    with pytest.raises(ValueError):
        enumerate_regular(3, 9)  # odd nk
    with pytest.raises(ValueError):
        enumerate_regular(5, 12)  # k=5 has no configured cap
    report = enumerate_regular(5, 8, unsafe=True)
    assert report.classes == 3


def test_parallel_matches_sequential():
    seq = enumerate_regular(3, 8)
    par = enumerate_regular(3, 8, workers=2)
    assert seq.witnesses == par.witnesses
    assert seq.classes == par.classes


def test_resolve_predicate():
    name, fn = resolve_predicate("ht-nonham")
    assert name == "ht-nonham" and callable(fn)
    name, fn = resolve_predicate(None)
    assert name is None and fn is None
    with pytest.raises(ValueError):
        resolve_predicate("no-such-pred")


def test_report_json_shape():
    report = enumerate_connected(4, "nonham")
    data = report.to_json()
    assert isinstance(report, SearchReport)
    assert data["kind"] == "connected"
    assert data["bounds"] == {"n": 4, "predicate": "nonham"}
    assert data["negative"] == (not data["witnesses"])


def test_min_circumference_probe_small():
    probe = min_circumference_ht(7)
    # orders up to 8 have no HT nonhamiltonian graph, so the minimum is n,
    # which happens to equal the conjectured value at n=7
    assert probe.value == 7
    assert probe.conjectured == 7
    assert probe.matches


def test_min_size_rejects_other_orders():
    with pytest.raises(ValueError):
        min_size_ht_nonham(8)
