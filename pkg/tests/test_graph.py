import pytest

from stargraph.graph import (
    EdgeSubgraph,
    Graph,
    GraphError,
    NotSpanningError,
    RootedTree,
    bfs_spanning_tree,
    canon,
    connected_components,
    tree_center,
    tree_depth,
    verify_edge_disjoint,
    verify_spanning_tree,
)


def test_canon_orders_endpoints():
    assert canon(3, 1) == (1, 3)


def test_self_loops_rejected():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(1, 1)])


def test_out_of_range_rejected():
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])


def test_duplicate_edges_collapse():
    g = Graph.from_edges(3, [(0, 1), (1, 0), (1, 2)])
    assert g.num_edges == 2


def test_degrees_and_regularity(k4, path4):
    assert k4.regular_degree() == 3
    assert path4.regular_degree() is None
    assert path4.degree(1) == 2


def test_json_round_trip(k33):
    assert Graph.from_json(k33.to_json()) == k33


def test_dot_round_trip(c5):
    assert Graph.from_dot(c5.to_dot()) == c5


def test_components():
    g = Graph.from_edges(5, [(0, 1), (2, 3)])
    comps = sorted(map(sorted, connected_components(g)))
    assert comps == [[0, 1], [2, 3], [4]]
    assert not g.is_connected()


def test_bfs_tree_of_path_rooted_at_end(path4):
    t = bfs_spanning_tree(path4, 0)
    assert t.parent == {0: None, 1: 0, 2: 1, 3: 2}
    assert tree_depth(t) == 3


def test_bfs_tree_rejects_disconnected():
    with pytest.raises(NotSpanningError):
        bfs_spanning_tree(Graph.from_edges(3, [(0, 1)]), 0)


def test_center_of_path(path4):
    t = bfs_spanning_tree(path4, 0)
    assert tree_center(t) == 1
    assert tree_depth(t.rerooted(1)) == 2


def test_center_of_star():
    star = Graph.from_edges(5, [(0, i) for i in range(1, 5)])
    assert tree_center(bfs_spanning_tree(star, 3)) == 0


def test_rooted_tree_rejects_cycles():
    with pytest.raises(GraphError):
        RootedTree(0, {0: None, 1: 2, 2: 1}).levels()


def test_spanning_check(k4):
    t = bfs_spanning_tree(k4, 0)
    assert verify_spanning_tree(k4, t)
    partial = bfs_spanning_tree(EdgeSubgraph(4, {(0, 1), (1, 2)}), 0, vertices=[0, 1, 2])
    assert not verify_spanning_tree(k4, partial)


def test_edge_disjointness(k4):
    a = bfs_spanning_tree(EdgeSubgraph(4, {(0, 1), (1, 2), (2, 3)}), 0)
    b = bfs_spanning_tree(EdgeSubgraph(4, {(0, 2), (0, 3), (1, 3)}), 0)
    assert verify_edge_disjoint([a, b])
    assert not verify_edge_disjoint([a, a])
