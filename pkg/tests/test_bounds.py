import pytest

from stargraph import factors as F
from stargraph.bounds import (
    NotRegular,
    bound_report,
    optimality_verdict,
    sigma_bound,
    tau_bound,
    tau_regular,
    tau_via_mc,
)
from stargraph.star import build_preset, chimera, toric_chimera


def test_tau_examples(k4):
    assert tau_bound(build_preset("petersen").product) == 1
    assert tau_bound(k4) == 2
    assert tau_bound(toric_chimera(1).product) == 3


def test_tau_via_mc_examples(k4):
    assert tau_via_mc(k4) == (1, 2, 2)
    m, c, tau = tau_via_mc(chimera(0).product)
    assert (m, tau) == (2, 2)
    assert tau_via_mc(toric_chimera(1).product) == (3, 0, 3)


def test_tau_regular_examples():
    assert tau_regular(build_preset("slimfly:4").product) == 3
    assert tau_regular(build_preset("petersen").product) == 1
    assert tau_regular(1, 2) == 1
    # even-order complete graphs: one more than half the degree
    assert tau_regular(3, 4) == 2 == tau_bound(F.complete_graph(4))


def test_tau_regular_needs_regular():
    with pytest.raises(NotRegular):
        tau_regular(F.path_graph(4))


@pytest.mark.parametrize("args, expected", [
    ((2, 2, 1, 1), (3, "rho_eq_tau")),
    ((2, 0, 1, 0), (2, "rho_lt_tau")),
    ((2, 3, 1, 1), (4, "rho_ge_tau_both")),
    ((2, 5, 1, 0), (3, "rho_ge_tau_one")),
])
def test_sigma_cases(args, expected):
    assert sigma_bound(*args) == expected


def test_verdicts():
    assert optimality_verdict(3, 3, 3, "rho_eq_tau", "maximum") == "Max"
    assert optimality_verdict(1, 3, 3, "rho_eq_tau", "universal") == "WithinThree"
    assert optimality_verdict(2, 3, 3, "rho_ge_tau_one", "maximum") == "WithinOne"
    assert optimality_verdict(0, 9, 9, "rho_ge_tau_one", "universal") == "Unknown"


def test_report_rejects_impossible_count():
    sp = build_preset("petersen")
    with pytest.raises(AssertionError):
        bound_report(sp.product, sp.structure, sp.supernode, 5, "maximum")


def test_report_fields():
    sp = build_preset("slimfly:4")
    br = bound_report(sp.product, sp.structure, sp.supernode, 3, "maximum", 2, 1)
    assert (br.tau, br.sigma, br.case, br.verdict, br.mu_gap) == (3, 3, "rho_eq_tau", "Max", 0)
