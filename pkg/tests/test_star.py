import json

import networkx as nx
import pytest

from stargraph import factors as F
from stargraph.star import (
    BadBijection,
    BadPreset,
    BijectionFamily,
    DisconnectedFactor,
    build_preset,
    cartesian_product,
    chimera,
    components_of_supernode,
    full_cycle_family,
    identity_family,
    petersen,
    star_product,
    toric_chimera,
    verify_product_counts,
)


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_petersen_is_petersen():
    assert nx.is_isomorphic(_nx(petersen().product), nx.petersen_graph())


@pytest.mark.parametrize("q, degree", [(3, 5), (4, 6), (5, 7), (7, 11)])
def test_slimfly_degree_and_diameter(q, degree):
    g = build_preset(f"slimfly:{q}").product
    assert g.n == 2 * q * q
    assert g.regular_degree() == degree
    assert nx.diameter(_nx(g)) == 2


@pytest.mark.parametrize("spec", ["bundlefly:3,5", "bundlefly:4,5", "polarstar:3,qr:5"])
def test_affine_default_gives_diameter_three(spec):
    assert nx.diameter(_nx(build_preset(spec).product)) == 3


@pytest.mark.parametrize("spec, v, e", [
    ("petersen", 10, 15), ("slimfly:5", 50, 175), ("bundlefly:3,5", 90, 315),
    ("polarstar:2,iq:3", 56, 156), ("polarstar:3,qr:5", 65, 185),
    ("chimera:0", 32, 80), ("chimera:1", 288, 816), ("toric-chimera:1", 128, 384),
])
def test_preset_sizes(spec, v, e):
    sp = build_preset(spec)
    assert (sp.product.n, sp.product.num_edges) == (v, e)
    assert verify_product_counts(sp)


def test_cartesian_matches_networkx():
    sp = cartesian_product(F.complete_graph(4), F.cycle_graph(5))
    ref = nx.cartesian_product(nx.complete_graph(4), nx.cycle_graph(5))
    assert nx.is_isomorphic(_nx(sp.product), ref)


def test_vertex_ids():
    sp = build_preset("cartesian:k3xc5")
    assert sp.vid(2, 4) == 14
    assert sp.coords(14) == (2, 4)


def test_cross_edge_into_inverts_cross_edge():
    sp = build_preset("bundlefly:3,5")
    for x, x2 in sp.bijections.arcs[:20]:
        for y in range(sp.nn):
            u, v = sp.cross_edge(x, x2, y)
            y2 = sp.coords(v if sp.coords(v)[0] == x2 else u)[1]
            assert canon_pair(sp.cross_edge_into(x, x2, y2)) == canon_pair((u, v))


def canon_pair(e):
    return tuple(sorted(e))


def test_bijection_must_be_permutation():
    with pytest.raises(BadBijection):
        BijectionFamily(3, {(0, 1): (0, 0, 1)})


def test_bijection_must_cover_structure_edges():
    with pytest.raises(BadBijection):
        star_product(F.complete_graph(3), F.cycle_graph(4), BijectionFamily(4, {(0, 1): (0, 1, 2, 3)}))


def test_disconnected_factor_rejected():
    gs = F.complete_graph(2)
    gn = F.Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedFactor):
        star_product(gs, gn, identity_family(gs, 4))


def test_chimera_has_disconnected_supernode_but_connected_product():
    for k in (0, 1, 2):
        sp = chimera(k)
        assert components_of_supernode(sp) > 1
        assert sp.product.is_connected()
    assert toric_chimera(1).product.regular_degree() == 6


def test_family_json_round_trip(tmp_path):
    gs = F.complete_graph(4)
    fam = full_cycle_family(gs, 5)
    path = tmp_path / "fam.json"
    path.write_text(json.dumps(fam.to_json()))
    sp = build_preset("star:k4*c5:" + str(path))
    assert sp.bijections.maps == fam.maps


@pytest.mark.parametrize("spec", ["nonsense", "slimfly:6", "cartesian:k4", "polarstar:3,xx:5", "star:k4*c5:bogus"])
def test_bad_presets(spec):
    with pytest.raises(BadPreset):
        build_preset(spec)


def test_seed_changes_bijections_deterministically():
    a = build_preset("bundlefly:3,5", seed=1).bijections.maps
    b = build_preset("bundlefly:3,5", seed=1).bijections.maps
    c = build_preset("bundlefly:3,5", seed=2).bijections.maps
    assert a == b
    assert a != c
