"""Upper bounds on edge-disjoint spanning trees and the optimality verdict."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .graph import Graph, GraphError


class NotRegular(GraphError):
    pass


CASES = ("rho_ge_tau_both", "rho_eq_tau", "rho_ge_tau_one", "rho_lt_tau")
VERDICTS = ("Max", "WithinOne", "WithinThree", "Unknown")
EXTENDED_MODES = ("maximum", "property1")


def tau_bound(g: Graph) -> int:
    if g.n < 2:
        raise GraphError("need at least two vertices")
    return g.num_edges // (g.n - 1)


def tau_via_mc(g: Graph) -> tuple[int, int, int]:
    """Write |E| = m|V| + c and read the bound off m + c."""
    if g.n < 2:
        raise GraphError("need at least two vertices")
    m, c = divmod(g.num_edges, g.n)
    return m, c, m if m + c < g.n - 1 else m + 1


def tau_regular(degree, n: int | None = None) -> int:
    """Bound for a regular graph from its degree; accepts a Graph or ``(degree, |V|)``."""
    if isinstance(degree, Graph):
        g = degree
        d = g.regular_degree()
        if d is None:
            raise NotRegular("graph is not regular")
        degree, n = d, g.n
    if n is None:
        raise ValueError("vertex count required with a bare degree")
    # complete graphs of even order (K_2 included) carry one extra tree
    if degree == n - 1 and degree % 2 == 1:
        return degree // 2 + 1
    return degree // 2


def rho(g: Graph) -> int:
    """Edges left over after tau spanning trees."""
    return g.num_edges - tau_bound(g) * (g.n - 1)


def sigma_bound(tau_s: int, rho_s: int, tau_n: int, rho_n: int) -> tuple[int, str]:
    if rho_s == tau_s and rho_n == tau_n:
        return tau_s + tau_n, "rho_eq_tau"
    ge_s, ge_n = rho_s >= tau_s, rho_n >= tau_n
    if ge_s and ge_n:
        return tau_s + tau_n + 1, "rho_ge_tau_both"
    if ge_s or ge_n:
        return tau_s + tau_n, "rho_ge_tau_one"
    return tau_s + tau_n - 1, "rho_lt_tau"


def optimality_verdict(constructed: int, tau: int, sigma: int, case: str, mode: str,
                       factors_attain: bool = True) -> str:
    """Max when the count meets an upper bound or a guaranteed-maximum case applies."""
    limit = min(tau, sigma)
    if constructed >= limit:
        return "Max"
    if factors_attain and ((case == "rho_eq_tau" and mode == "maximum")
                           or (case == "rho_lt_tau" and mode == "property1")):
        return "Max"
    if mode in EXTENDED_MODES and constructed >= limit - 1:
        return "WithinOne"
    if constructed >= limit - 3:
        return "WithinThree"
    return "Unknown"


@dataclass(frozen=True)
class BoundReport:
    tau: int
    m: int
    c: int
    tau_s: int
    tau_n: int
    rho_s: int
    rho_n: int
    sigma: int
    case: str
    constructed: int
    mu_gap: int
    verdict: str

    def to_json(self) -> dict:
        return asdict(self)


def bound_report(product: Graph, structure: Graph, supernode: Graph, constructed: int, mode: str,
                 t_s: int | None = None, t_n: int | None = None) -> BoundReport:
    tau = tau_bound(product)
    m, c, tau_mc = tau_via_mc(product)
    assert tau_mc == tau
    tau_s, tau_n = tau_bound(structure), tau_bound(supernode)
    sigma, case = sigma_bound(tau_s, rho(structure), tau_n, rho(supernode))
    limit = min(tau, sigma)
    if constructed > limit:
        raise AssertionError(f"constructed {constructed} trees exceeds the upper bound {limit}")
    attain = (t_s is None or t_s == tau_s) and (t_n is None or t_n == tau_n)
    verdict = optimality_verdict(constructed, tau, sigma, case, mode, attain)
    return BoundReport(tau, m, c, tau_s, tau_n, rho(structure), rho(supernode), sigma, case,
                       constructed, limit - constructed, verdict)
