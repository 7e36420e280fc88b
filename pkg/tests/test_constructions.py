import pytest

from stargraph.constructions import (
    BOTH_EQUAL,
    ONE_AT_LEAST,
    CaseNotApplicable,
    DegenerateError,
    construct,
    depth_report,
    low_depth_construction,
    maximum_construction,
    pack_factors,
    universal_construction,
)
from stargraph.graph import tree_depth
from stargraph.star import build_preset

CONNECTED = ["slimfly:3", "slimfly:4", "slimfly:5", "bundlefly:3,5", "polarstar:3,qr:5", "cartesian:k4xk4",
             "cartesian:k5xc5", "slimfly:7", "bundlefly:4,5"]


def _split(sp, e):
    (x1, y1), (x2, y2) = sp.coords(e[0]), sp.coords(e[1])
    return x1, y1, x2, y2


@pytest.mark.parametrize("spec", CONNECTED)
def test_universal_count_and_depths(spec):
    sp = build_preset(spec)
    sd, nd = pack_factors(sp)
    if sd.t + nd.t < 3:
        with pytest.raises(DegenerateError):
            universal_construction(sp, sd, nd)
        return
    ts = universal_construction(sp, sd, nd)
    assert ts.count == sd.t + nd.t - 2
    assert ts.verify() == []
    low = low_depth_construction(sp, sd, nd)
    assert low.count == ts.count
    assert low.verify() == []


@pytest.mark.parametrize("spec", ["slimfly:7", "cartesian:k5xk5", "bundlefly:4,5"])
def test_universal_edge_sources(spec):
    sp = build_preset(spec)
    sd, nd = pack_factors(sp)
    ts = universal_construction(sp, sd, nd)
    for bt in ts.trees:
        for e in bt.tree.edges:
            x1, y1, x2, y2 = _split(sp, e)
            if bt.kind == "structure_tree" and x1 != x2:
                assert (min(x1, x2), max(x1, x2)) in sd.trees[bt.index - 1].edges
            if bt.kind == "supernode_tree" and x1 == x2:
                assert (min(y1, y2), max(y1, y2)) in nd.trees[bt.index - 1].edges


def test_cartesian_uses_untwisted_copies():
    sp = build_preset("cartesian:k4xk4")
    ts = universal_construction(sp)
    for bt in ts.trees:
        for e in bt.tree.edges:
            x1, y1, x2, y2 = _split(sp, e)
            assert x1 == x2 or y1 == y2


def test_cartesian_low_depth_follows_rows():
    sp = build_preset("cartesian:k4xk4")
    sd, nd = pack_factors(sp)
    bt = low_depth_construction(sp, sd, nd).trees[-1]
    root_layer = sp.coords(bt.tree.root)[1]
    cross = [_split(sp, e) for e in bt.tree.edges if _split(sp, e)[0] != _split(sp, e)[2]]
    assert {y1 for _, y1, _, _ in cross} == {root_layer}


def test_degenerate_universal():
    with pytest.raises(DegenerateError):
        universal_construction(build_preset("petersen"))


@pytest.mark.parametrize("spec, count, condition", [
    ("slimfly:4", 3, BOTH_EQUAL),
    ("bundlefly:4,5", 4, BOTH_EQUAL),
    ("petersen", 1, ONE_AT_LEAST),
])
def test_maximum_counts(spec, count, condition):
    ts = maximum_construction(build_preset(spec))
    assert ts.count == count
    assert ts.condition == condition
    assert ts.verify() == []


def test_maximum_count_rule():
    for spec in ["slimfly:3", "slimfly:5", "slimfly:7", "bundlefly:3,5", "polarstar:3,qr:5", "polarstar:2,iq:3"]:
        sp = build_preset(spec)
        sd, nd = pack_factors(sp)
        both = sd.r >= sd.t and nd.r >= nd.t
        assert maximum_construction(sp, sd, nd).count == sd.t + nd.t - (0 if both else 1)


def test_maximum_not_applicable():
    with pytest.raises(CaseNotApplicable):
        maximum_construction(build_preset("cartesian:k4xk4"))


def test_extra_trees_rooted_at_anchors():
    sp = build_preset("slimfly:4")
    ts = maximum_construction(sp)
    extras = [bt for bt in ts.trees if bt.kind.startswith("extra")]
    assert len({bt.tree.root for bt in extras}) == 1


def test_depth_report_matches_trees():
    ts = maximum_construction(build_preset("bundlefly:3,5"))
    rep = depth_report(ts)
    assert rep == [(tree_depth(bt.tree), bt.bound) for bt in ts.trees]
    assert all(m <= b for m, b in rep)


@pytest.mark.parametrize("spec, mode", [("petersen", "maximum"), ("cartesian:k4xk4", "property1"),
                                        ("star:k4*k4:cycle", "lowdepth"), ("slimfly:4", "maximum")])
def test_auto_mode_order(spec, mode):
    assert construct(build_preset(spec)).mode == mode


def test_unknown_mode():
    with pytest.raises(ValueError):
        construct(build_preset("petersen"), "fastest")
