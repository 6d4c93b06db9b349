import json
import random
from itertools import combinations, permutations

import pytest

from conftest import pattern_graph
from domiperf.enumeration import (
    CanonicalForm,
    VerificationReport,
    canonical_form,
    canonical_graph,
    enumerate_graphs,
    enumerate_up_to,
    verify_chain,
    verify_corollaries,
    verify_theorem,
)
from domiperf.formats import parse_graph6
from domiperf.graph import GraphError, build_graph, complete_graph, cycle_graph, path_graph

SMALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23}


def test_canonical_identifies_isomorphs():
    assert canonical_form(pattern_graph("H8")) == canonical_form(path_graph(6))
    assert canonical_form(pattern_graph("H9")) == canonical_form(cycle_graph(6))
    tokens = set()
    for perm in permutations(range(3)):
        g = build_graph(3, [(perm[0], perm[1]), (perm[1], perm[2]), (perm[0], perm[2])])
        tokens.add(canonical_form(g).token)
    assert len(tokens) == 1


def test_canonical_cap():
    with pytest.raises(GraphError):
        canonical_form(build_graph(11, []))


def test_canonical_invariance_random_relabelings():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 6)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        base = canonical_form(build_graph(n, edges)).token
        for _ in range(6):
            perm = list(range(n))
            rng.shuffle(perm)
            g2 = build_graph(n, [(perm[u], perm[v]) for u, v in edges])
            assert canonical_form(g2).token == base


def test_canonical_graph_round_trips():
    g = cycle_graph(6)
    cg = canonical_graph(g)
    assert canonical_form(cg) == canonical_form(g)


@pytest.mark.parametrize("order,count", sorted(SMALL_COUNTS.items()))
def test_graph_counts_small(order, count):
    assert sum(1 for _ in enumerate_graphs(order)) == count


def test_graph_counts_against_labeled_dedup_oracle():
    # independent oracle: canonicalize every labeled graph on n vertices
    for n in range(1, 6):
        pairs = list(combinations(range(n), 2))
        tokens = set()
        for bitsel in range(1 << len(pairs)):
            g = build_graph(n, [pairs[i] for i in range(len(pairs)) if bitsel >> i & 1])
            tokens.add(canonical_form(g).token)
        assert len(tokens) == SMALL_COUNTS[n]


def test_no_duplicate_canonical_tokens():
    for order in (4, 5, 6):
        tokens = [canonical_form(g).token for g in enumerate_graphs(order)]
        assert len(tokens) == len(set(tokens))


def _prufer_tree(seq, n):
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    ptr = 0
    leaves = sorted(v for v in range(n) if degree[v] == 1)
    import heapq

    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return build_graph(n, edges)


@pytest.mark.parametrize("order,count", sorted(TREE_COUNTS.items()))
def test_tree_counts(order, count):
    assert sum(1 for _ in enumerate_graphs(order, "tree")) == count


def test_tree_counts_against_prufer_oracle():
    from itertools import product

    for n in range(3, 8):
        tokens = set()
        for seq in product(range(n), repeat=n - 2):
            tokens.add(canonical_form(_prufer_tree(seq, n)).token)
        assert len(tokens) == TREE_COUNTS[n]


def test_filters():
    assert all(g.is_connected() for g in enumerate_graphs(5, "connected"))
    assert sum(1 for _ in enumerate_graphs(5, "connected")) == 21
    assert all(g.is_tree() for g in enumerate_graphs(6, "tree"))
    chordal = list(enumerate_graphs(5, "chordal"))
    assert cycle_graph(5).degree_sequence() not in {g.degree_sequence() for g in chordal if g.m == 5 and g.is_connected() and all(d == 2 for d in g.degree_sequence())}


def test_enumeration_caps():
    with pytest.raises(GraphError):
        list(enumerate_graphs(9))
    with pytest.raises(GraphError):
        list(enumerate_graphs(13, "tree"))
    with pytest.raises(GraphError):
        list(enumerate_graphs(0))


def test_enumeration_is_deterministic():
    a = [canonical_form(g).token for g in enumerate_graphs(5)]
    b = [canonical_form(g).token for g in enumerate_graphs(5)]
    assert a == b


def test_verify_theorem_small():
    report = verify_theorem(5)
    assert report.checked == 52
    assert report.clean
    assert "minimal imperfect graphs found: 0" in report.notes[0]


def test_verify_chain_small():
    report = verify_chain(5)
    assert report.clean and report.checked == 52


def test_verify_corollaries_small():
    report = verify_corollaries(
        5, tree_order_max=7, line_host_order_max=4, middle_host_order_max=3
    )
    assert report.clean
    assert any("tree sweep" in note for note in report.notes)


def test_report_json_round_trips():
    report = VerificationReport(universe="demo")
    report.record(True)
    report.record(False, {"graph6": "@"})
    data = json.loads(report.to_json())
    assert data["checked"] == 2
    assert data["agreements"] == 1
    assert data["counterexample_total"] == 1
    assert not report.clean


def test_counterexample_cap():
    report = VerificationReport(universe="demo")
    for i in range(150):
        report.record(False, {"i": i})
    assert report.counterexample_total == 150
    assert len(report.counterexamples) == 100
