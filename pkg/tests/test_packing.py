import pytest

from stargraph import factors as F
from stargraph.graph import EdgeSubgraph, Graph, bfs_distances, verify_edge_disjoint, verify_spanning_tree
from stargraph.packing import (
    Disconnected,
    InfeasibleError,
    TooLarge,
    greedy_u_set,
    longest_path_length,
    max_edst_pack,
    nash_williams_certificate,
    nash_williams_max,
    root_first_tree,
    select_u_set,
    u_set_capacity,
    u_set_ok,
    with_first,
)
from stargraph.star import petersen


@pytest.mark.parametrize("g, t, r", [
    (F.complete_graph(4), 2, 0),
    (F.complete_graph(5), 2, 2),
    (F.cycle_graph(5), 1, 1),
    (F.complete_bipartite(3), 1, 4),
    (F.er_polarity(2), 1, 3),
    (F.paley(13), 3, 3),
    (F.er_polarity(3), 2, 0),
    (F.inductive_quad(4), 2, 2),
])
def test_pack_counts(g, t, r):
    d = max_edst_pack(g)
    assert (d.t, d.r) == (t, r)
    assert all(verify_spanning_tree(g, tr) for tr in d.trees)
    assert verify_edge_disjoint(d.trees)


def test_nontree_is_complement():
    g = F.complete_graph(5)
    d = max_edst_pack(g)
    used = set().union(*(t.edges for t in d.trees))
    assert set(d.nontree.edges) == g.edges - used


def test_certificate_examples(k4, c5):
    assert nash_williams_certificate(k4, 2)
    assert not nash_williams_certificate(c5, 2)
    assert nash_williams_certificate(petersen().product, 1)


def test_certificate_size_limit():
    with pytest.raises(TooLarge):
        nash_williams_max(F.cycle_graph(13))


def test_disconnected_pack():
    with pytest.raises(Disconnected):
        max_edst_pack(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_u_set_for_c5(c5):
    d = select_u_set(max_edst_pack(c5))
    (a, b), = d.nontree.edges
    assert d.u_set == {a}


def test_u_set_reachability_k5():
    d = select_u_set(max_edst_pack(F.complete_graph(5)))
    assert len(d.u_set) == 2
    adj = d.nontree.adjacency()
    for u in d.u_set:
        assert set(bfs_distances(adj, u)) - d.u_set


def test_u_set_infeasible_when_r_below_t():
    with pytest.raises(InfeasibleError):
        select_u_set(max_edst_pack(F.er_polarity(3)))


def test_greedy_u_set_respects_components():
    sub = EdgeSubgraph(6, {(0, 1), (2, 3), (3, 4)})
    assert u_set_capacity(sub) == 3
    u = greedy_u_set(sub, 3)
    assert u == {0, 2, 3}
    assert u_set_ok(sub, u)
    assert greedy_u_set(sub, 4) is None


def test_root_first_tree_orients_away_from_anchor(path4):
    d = root_first_tree(max_edst_pack(path4), 3)
    assert d.directed_first_tree.root == 3
    assert d.directed_first_tree.parent[0] == 1


def test_with_first_moves_tree():
    d = max_edst_pack(F.complete_graph(6))
    e = with_first(d, 2)
    assert e.trees[0] == d.trees[2]
    assert sorted(map(sorted, (t.edges for t in e.trees))) == sorted(map(sorted, (t.edges for t in d.trees)))


def test_longest_path():
    assert longest_path_length(EdgeSubgraph(5, {(0, 1), (1, 2), (3, 4)})) == 2
    assert longest_path_length(EdgeSubgraph(3, set())) == 0
