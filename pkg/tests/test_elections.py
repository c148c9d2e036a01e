import pytest

from popmatch import InstanceError, Matching, compare, defeats, label_edges, vote
from popmatch.elections import MINUS, PLUS, blocking_pairs


@pytest.fixture
def fan_matchings():
    return {
        "near_stable": Matching([("a1", "b1"), ("a2", "b2")]),
        "swapped": Matching([("a1", "b2"), ("a2", "b1")]),
        "perfect": Matching([("a1", "b3"), ("a2", "b2"), ("a3", "b1")]),
    }


def test_vote(nested_fan):
    assert vote(nested_fan, "a1", "b1", "b2") == PLUS
    assert vote(nested_fan, "a1", "b2", "b1") == MINUS
    assert vote(nested_fan, "a1", "b2", "b2") == 0
    assert vote(nested_fan, "a1", "b3", None) == PLUS
    with pytest.raises(InstanceError):
        vote(nested_fan, "a3", "b2", "b1")


def test_compare_tallies(nested_fan, fan_matchings):
    swapped, perfect = fan_matchings["swapped"], fan_matchings["perfect"]
    assert compare(nested_fan, swapped, perfect) == (4, 2)
    assert compare(nested_fan, perfect, swapped) == (2, 4)
    near = fan_matchings["near_stable"]
    assert compare(nested_fan, near, perfect) == (2, 2)


def test_compare_both_unmatched_abstain(shared_top):
    # b2 is unmatched on both sides and must not vote
    one = Matching([("a1", "b1")])
    two = Matching([("a2", "b1")])
    assert compare(shared_top, one, two) == (2, 1)


def test_defeats_breaks_ties_by_size(nested_fan, fan_matchings):
    near, perfect = fan_matchings["near_stable"], fan_matchings["perfect"]
    assert defeats(nested_fan, perfect, near)  # tied 2-2, strictly larger
    assert not defeats(nested_fan, near, perfect)
    assert defeats(nested_fan, fan_matchings["swapped"], perfect)  # wins 4-2


def test_labels_and_pruned_graph(shared_top):
    m = Matching([("a1", "b2"), ("a2", "b1")])
    labeled = label_edges(shared_top, m)
    assert labeled.label == {("a1", "b1"): (PLUS, PLUS)}
    assert labeled.gm_edges == {("a1", "b1"), ("a1", "b2"), ("a2", "b1")}
    assert labeled.gm_adj["a1"] == ("b1", "b2")


def test_minus_minus_edges_pruned(nested_fan):
    m = Matching([("a1", "b2"), ("a2", "b1")])
    labeled = label_edges(nested_fan, m)
    # a2 holds b1, b2 holds a1: both vote minus on (a2,b2)
    assert labeled.label[("a2", "b2")] == (MINUS, MINUS)
    assert ("a2", "b2") not in labeled.gm_edges
    # both a1 and b1 would rather have each other than their partners
    assert labeled.label[("a1", "b1")] == (PLUS, PLUS)
    # a3 is unmatched and votes plus for b1; b1 holds a2 and prefers it
    assert labeled.label[("a3", "b1")] == (PLUS, MINUS)
    assert ("a3", "b1") in labeled.gm_edges


def test_blocking_pairs_in_lex_order(shared_top, contested_hub):
    m = Matching([("a1", "b2"), ("a2", "b1")])
    assert list(blocking_pairs(shared_top, m)) == [("a1", "b1")]
    near = Matching([("a1", "b1"), ("a2", "b2")])
    assert list(blocking_pairs(contested_hub, near)) == [("a2", "b1")]
    stable = Matching([("a1", "b3"), ("a2", "b1")])
    assert list(blocking_pairs(contested_hub, stable)) == []


def test_labels_against_every_matching(small_ensemble):
    # the label of each non-matching edge is the two endpoint votes
    for inst, report in small_ensemble[:12]:
        for m in report.family:
            labeled = label_edges(inst, m)
            for (a, b), (va, vb) in labeled.label.items():
                assert va == vote(inst, a, b, m.partner_of(a))
                assert vb == vote(inst, b, a, m.partner_of(b))
                assert (va == MINUS and vb == MINUS) == (
                    (a, b) not in labeled.gm_edges
                )
