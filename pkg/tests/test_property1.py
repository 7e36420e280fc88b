import pytest

from stargraph.constructions import CaseNotApplicable, construct, pack_factors, property1_construction
from stargraph.property1 import (
    InvalidWitness,
    balanced_halves,
    check_witness,
    property1_search,
    search_property1,
)
from stargraph.star import build_preset


@pytest.mark.parametrize("spec", ["cartesian:k4xk4", "cartesian:k5xk5", "cartesian:c4xc4", "cartesian:p3xp4",
                                  "cartesian:k6xk6", "cartesian:k4xc5"])
def test_cartesian_always_has_witness(spec):
    sp = build_preset(spec)
    sd, nd = pack_factors(sp)
    w = property1_search(sp, sd, nd)
    assert w is not None
    check_witness(sp, sd, nd, w)
    ts = property1_construction(sp, sd, nd, w)
    assert ts.count == sd.t + nd.t - 1
    assert ts.verify() == []


def test_witness_on_p3xp4_is_top_subtree():
    sp = build_preset("cartesian:p3xp4")
    sd, nd = pack_factors(sp)
    w = property1_search(sp, sd, nd)
    assert w.supernode_anchor in w.vs2
    assert w.s1 and w.s2


def test_full_cycle_has_no_witness():
    sp = build_preset("star:k4*c5:cycle")
    sd, nd = pack_factors(sp)
    w, reason = search_property1(sp, sd, nd)
    assert w is None
    assert "invariant" in reason
    with pytest.raises(CaseNotApplicable):
        construct(sp, "property1")


def test_budget_exhaustion():
    sp = build_preset("cartesian:k4xk4")
    sd, nd = pack_factors(sp)
    w, reason = search_property1(sp, sd, nd, budget=1)
    assert w is None and "budget" in reason


def test_tampered_witness_rejected():
    sp = build_preset("cartesian:k4xk4")
    sd, nd = pack_factors(sp)
    w = property1_search(sp, sd, nd)
    bad = w.__class__(**{**w.__dict__, "s1": frozenset()})
    with pytest.raises(InvalidWitness):
        property1_construction(sp, sd, nd, bad)
    twisted = build_preset("star:k4*k4:cycle")
    with pytest.raises(InvalidWitness):
        check_witness(twisted, *pack_factors(twisted), w)


def test_balanced_halves():
    assert balanced_halves(6, 2) == ((0, 1, 3), (4, 5))
