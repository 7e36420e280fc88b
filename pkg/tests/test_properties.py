"""Randomised checks of the invariants the library promises."""

from hypothesis import HealthCheck, given, settings, strategies as st

from stargraph.bounds import bound_report, tau_bound, tau_regular, tau_via_mc
from stargraph.constructions import CaseNotApplicable, DegenerateError, construct, pack_factors
from stargraph.galois import field
from stargraph.graph import Graph, bfs_distances
from stargraph.packing import InfeasibleError, max_edst_pack, nash_williams_max, select_u_set
from stargraph.property1 import property1_search
from stargraph.serialize import treeset_to_json, verify_treeset_json
from stargraph.star import BijectionFamily, star_product, verify_product_counts

FAST = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def connected_graphs(draw, min_n=2, max_n=10):
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    extra = draw(st.lists(st.sampled_from(pairs), max_size=2 * n)) if pairs else []
    return Graph.from_edges(n, edges | set(extra))


@st.composite
def star_products(draw):
    gs = draw(connected_graphs(2, 5))
    gn = draw(connected_graphs(2, 6))
    maps = {}
    for u, v in gs.sorted_edges():
        maps[(u, v)] = tuple(draw(st.permutations(range(gn.n))))
    return star_product(gs, gn, BijectionFamily(gn.n, maps))


@FAST
@given(connected_graphs())
def test_packer_matches_partition_oracle(g):
    d = max_edst_pack(g)
    assert d.t == nash_williams_max(g)
    assert d.t <= tau_bound(g)
    assert d.r == g.num_edges - d.t * (g.n - 1)


@settings(max_examples=400, deadline=None)
@given(connected_graphs())
def test_u_set_reachability(g):
    d = max_edst_pack(g)
    if d.r < d.t:
        try:
            select_u_set(d)
        except InfeasibleError:
            return
        raise AssertionError("U-set accepted with fewer non-tree edges than trees")
    d = select_u_set(d)
    assert len(d.u_set) == d.t
    adj = d.nontree.adjacency()
    for u in d.u_set:
        assert set(bfs_distances(adj, u)) - d.u_set


@settings(max_examples=300, deadline=None)
@given(connected_graphs(2, 30))
def test_tau_forms_agree(g):
    assert tau_via_mc(g)[2] == tau_bound(g)


@settings(max_examples=100, deadline=None)
@given(st.integers(5, 30), st.data())
def test_tau_regular_on_circulants(n, data):
    steps = data.draw(st.sets(st.integers(1, n // 2), min_size=1))
    g = Graph.from_edges(n, {(i, (i + s) % n) for i in range(n) for s in steps})
    if g.regular_degree() is not None and g.is_connected():
        assert tau_regular(g) == tau_bound(g)


@FAST
@given(star_products())
def test_star_product_counts(sp):
    assert verify_product_counts(sp)


@FAST
@given(star_products(), st.sampled_from(["auto", "universal", "lowdepth", "maximum", "property1"]))
def test_constructions_verify_and_respect_bounds(sp, mode):
    if not sp.product.is_connected():
        return
    sd, nd = pack_factors(sp)
    try:
        ts = construct(sp, mode, sd, nd, budget=20000)
    except (DegenerateError, CaseNotApplicable, InfeasibleError):
        return
    assert ts.verify() == []
    expected = {"universal": sd.t + nd.t - 2, "lowdepth": sd.t + nd.t - 2, "property1": sd.t + nd.t - 1}
    if ts.mode in expected:
        assert ts.count == expected[ts.mode]
    else:
        both = sd.r >= sd.t and nd.r >= nd.t
        assert ts.count == sd.t + nd.t - (0 if both else 1)
    br = bound_report(sp.product, sp.structure, sp.supernode, ts.count, ts.mode, sd.t, nd.t)
    assert ts.count <= min(br.tau, br.sigma)
    if sd.t == br.tau_s and nd.t == br.tau_n:
        floor = 1 if ts.mode in ("maximum", "property1") else 3
        assert ts.count >= br.sigma - floor
    assert verify_treeset_json(treeset_to_json(ts)) == []


@FAST
@given(st.integers(2, 5), st.integers(3, 5))
def test_identity_products_have_witness(a, b):
    # a one-edge supernode tree cannot be split into two nonempty parts, hence b >= 3
    from stargraph.factors import complete_graph
    from stargraph.star import cartesian_product

    sp = cartesian_product(complete_graph(a), complete_graph(b))
    sd, nd = pack_factors(sp)
    assert property1_search(sp, sd, nd) is not None


@FAST
@given(st.sampled_from([4, 8, 9, 25, 27, 32]), st.data())
def test_field_distributes(q, data):
    f = field(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.sub(f.add(a, b), b) == a
    if b:
        assert f.mul(f.div(a, b), b) == a


@FAST
@given(star_products())
def test_bijection_inverse(sp):
    fam = sp.bijections
    for x, x2 in fam.arcs:
        for y in range(sp.nn):
            assert fam.apply(x2, x, fam.apply(x, x2, y)) == y
