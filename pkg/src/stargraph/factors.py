"""Factor-graph generators and their closed-form parameter rows."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations, product

from .galois import FieldError, field, prime_power
from .graph import Graph


class BadParameter(ValueError):
    pass


class UnknownFactor(KeyError):
    pass


def _field(q: int):
    try:
        return field(q)
    except FieldError as exc:
        raise BadParameter(str(exc)) from exc


def complete_graph(m: int) -> Graph:
    if m < 1:
        raise BadParameter("complete graph needs m >= 1")
    return Graph.from_edges(m, combinations(range(m), 2))


def complete_bipartite(q: int) -> Graph:
    """K_{q,q}; the parts are ``0..q-1`` and ``q..2q-1``."""
    if q < 1:
        raise BadParameter("complete bipartite graph needs q >= 1")
    return Graph.from_edges(2 * q, ((a, q + b) for a in range(q) for b in range(q)))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise BadParameter("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadParameter("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def cayley_graph(q: int, connection: frozenset[int]) -> Graph:
    """Cayley graph on the additive group of GF(q) for a symmetric connection set."""
    f = _field(q)
    conn = frozenset(connection)
    if 0 in conn or any(f.neg(c) not in conn for c in conn):
        raise BadParameter("connection set must be symmetric and exclude zero")
    return Graph.from_edges(q, ((a, f.add(a, c)) for a in range(q) for c in conn if a < f.add(a, c)))


def paley(q: int) -> Graph:
    if q % 4 != 1:
        raise BadParameter(f"Paley graph needs q = 1 mod 4, got {q}")
    return cayley_graph(q, _field(q).quadratic_residues())


def mms_class(q: int) -> tuple[int, int]:
    """``(k, delta)`` with ``q = 4k + delta`` and ``delta`` in {-1, 0, 1}."""
    if prime_power(q) is None:
        raise BadParameter(f"{q} is not a prime power")
    k, rem = divmod(q + 1, 4)
    delta = {0: -1, 1: 0, 2: 1}.get(rem)
    if delta is None or k < 1:
        raise BadParameter(f"q={q} is not of the form 4k+1, 4k or 4k-1")
    return k, delta


def mms_connection_set(q: int) -> frozenset[int]:
    """The generator set X of the MMS construction; its partner set is xi * X."""
    k, delta = mms_class(q)
    f = _field(q)
    xi = f.primitive_element()
    # even powers of xi; for q = 4k-1 only the first k of them, closed under negation below
    exps = range(0, q - 1, 2) if delta >= 0 else range(0, 2 * k - 1, 2)
    base = {f.pow(xi, e) for e in exps}
    if delta == -1:
        base |= {f.neg(b) for b in base}
    return frozenset(base)


def mms_cayley(q: int) -> Graph:
    return cayley_graph(q, mms_connection_set(q))


def bdf(d: int) -> Graph:
    """The d-regular bipartite graph on 2d vertices (K_{d,d})."""
    if d < 1:
        raise BadParameter("BDF graph needs d >= 1")
    return complete_bipartite(d)


def _iq_with_halves(d: int) -> tuple[int, list[tuple[int, int]], list[int], list[int]]:
    if d == -1:
        return 0, [], [], []
    if d == 0:
        return 2, [], [0], [1]
    n, edges, half_a, half_b = _iq_with_halves(d - 4)
    new = list(range(n, n + 8))
    for i in range(4):
        edges.append((new[i], new[(i + 1) % 4]))
        edges.append((new[4 + i], new[4 + (i + 1) % 4]))
        edges.append((new[i], new[4 + i]))
    edges += [(a, v) for a in half_a for v in new[:4]]
    edges += [(b, v) for b in half_b for v in new[4:]]
    return n + 8, edges, half_a + new[:4], half_b + new[4:]


def inductive_quad(d: int) -> Graph:
    """Inductive-Quad graph: 2d+2 vertices, d-regular, built by adding a cube every 4 degrees."""
    if d < 0 or d % 4 not in (0, 3):
        raise BadParameter(f"Inductive-Quad needs d = 0 or 3 mod 4, got {d}")
    n, edges, _, _ = _iq_with_halves(d)
    return Graph.from_edges(n, edges)


def projective_points(q: int) -> list[tuple[int, int, int]]:
    """Points of PG(2, q), first nonzero coordinate 1, in lexicographic order."""
    _field(q)
    pts = [p for p in product(range(q), repeat=3) if any(p) and next(c for c in p if c) == 1]
    return sorted(pts)


def er_polarity(q: int) -> Graph:
    f = _field(q)
    pts = projective_points(q)

    def dot(a, b):
        s = 0
        for x, y in zip(a, b):
            s = f.add(s, f.mul(x, y))
        return s

    edges = [(i, j) for i, j in combinations(range(len(pts)), 2) if dot(pts[i], pts[j]) == 0]
    return Graph.from_edges(len(pts), edges)


GENERATORS = {
    "paley": paley,
    "kqq": complete_bipartite,
    "mms": mms_cayley,
    "bdf": bdf,
    "iq": inductive_quad,
    "er": er_polarity,
    "km": complete_graph,
    "path": path_graph,
    "cycle": cycle_graph,
}


def generate(name: str, param: int) -> Graph:
    try:
        gen = GENERATORS[name]
    except KeyError:
        raise UnknownFactor(name) from None
    return gen(param)


@dataclass(frozen=True)
class FactorStats:
    """Closed-form row for one factor graph, checked against the generated graph."""

    name: str
    parameters: dict
    vertex_count: int
    edge_count: int
    degree_if_regular: int | None
    t_formula: int
    r_formula: int
    printed: dict = dc_field(default_factory=dict)

    @property
    def mismatches(self) -> dict:
        """Printed table cells that disagree with the closed form, as ``{col: (printed, derived)}``."""
        derived = {"V": self.vertex_count, "E": self.edge_count, "t": self.t_formula, "r": self.r_formula}
        return {k: (v, derived[k]) for k, v in self.printed.items() if derived.get(k) != v}


def _kqq_row(q):
    k, rem = divmod(q + 1, 4)
    delta = {0: -1, 1: 0, 2: 1}.get(rem) if k >= 1 else None
    V, E = 2 * q, q * q
    if delta == 1:
        return V, E, q, 2 * k, 6 * k + 1, {"t": 2 * k, "r": 6 * k + 1}
    if delta == 0:
        return V, E, q, 2 * k, 2 * k, {"t": 2 * k, "r": 6 * k}
    if delta == -1:
        return V, E, q, 2 * k - 1, 6 * k - 2, {"t": 2 * k - 1, "r": 6 * k - 2}
    t = E // (V - 1)
    return V, E, q, t, E - t * (V - 1), {}


def _cayley_row(q):
    k, delta = mms_class(q)
    E = {1: k * (4 * k + 1), 0: 4 * k * k, -1: k * (4 * k - 1)}[delta]
    return q, E, 2 * k, k, k, {"V": q, "E": E, "t": k, "r": k}


def _paley_row(q):
    if q % 4 != 1:
        raise BadParameter(f"Paley graph needs q = 1 mod 4, got {q}")
    return _cayley_row(q)


def _km_row(m):
    ell, odd = divmod(m, 2)
    E = m * (m - 1) // 2
    return m, E, m - 1, ell, ell if odd else 0, {"t": ell, "r": ell if odd else 0}


def _bdf_row(d):
    if d % 2 == 0:
        return 2 * d, d * d, d, d // 2, d // 2, {"t": d // 2, "r": d // 2}
    return 2 * d, d * d, d, (d - 1) // 2, (3 * d - 1) // 2, {"t": (d - 1) // 2, "r": (3 * d - 1) // 2}


def _iq_row(d):
    V, E = 2 * d + 2, d * (d + 1)
    if d % 4 == 0:
        return V, E, d, d // 2, d // 2, {"V": V, "E": E, "t": d // 2, "r": d // 2}
    if d % 4 == 3:
        return V, E, d, (d - 1) // 2, (3 * d + 1) // 2, {"V": V, "E": E, "t": (d - 1) // 2, "r": (3 * d + 1) // 2}
    raise BadParameter(f"Inductive-Quad needs d = 0 or 3 mod 4, got {d}")


def _er_row(q):
    V, E = q * q + q + 1, q * (q + 1) ** 2 // 2
    if q % 2 == 0:
        return V, E, None, q // 2, q * (q + 1) // 2, {"V": V, "E": E, "t": q // 2, "r": q * (q + 1) // 2}
    return V, E, None, (q + 1) // 2, 0, {"V": V, "E": E, "t": (q + 1) // 2, "r": 0}


def _hq_row(q):
    k, delta = mms_class(q)
    V = 2 * q * q
    E = q * q * (q + 2 * k)
    t = E // (V - 1)
    printed_E = {1: q * q * (3 * q - 1) // 2, 0: 3 * q ** 3 // 2, -1: q * q * (3 * q - 1) // 2}[delta]
    printed_t = {1: 3 * k, 0: 3 * k, -1: 3 * k - 1}[delta]
    printed_r = {1: q * q + 3 * k, 0: 3 * k, -1: q * q + 3 * k - 1}[delta]
    return V, E, q + 2 * k, t, E - t * (V - 1), {"V": V, "E": printed_E, "t": printed_t, "r": printed_r}


ROWS = {
    "paley": _paley_row,
    "mms": _cayley_row,
    "kqq": _kqq_row,
    "km": _km_row,
    "bdf": _bdf_row,
    "iq": _iq_row,
    "er": _er_row,
    "hq": _hq_row,
}

ALIASES = {"K_qq": "kqq", "K_m": "km", "ER": "er", "IQ": "iq", "BDF": "bdf", "C": "mms", "QR": "paley", "H_q": "hq"}


def factor_stats(name: str, params: dict) -> FactorStats:
    """Closed-form row for ``name``; the generated graph must agree on |V|, |E| and degree."""
    key = ALIASES.get(name, name)
    if key not in ROWS:
        raise UnknownFactor(name)
    (param,) = params.values()
    V, E, deg, t, r, printed = ROWS[key](param)
    if key != "hq":
        g = generate(key, param)
        if (g.n, g.num_edges) != (V, E) or (deg is not None and g.regular_degree() != deg):
            raise AssertionError(f"{key}({param}) generated |V|={g.n}, |E|={g.num_edges}, closed form {V}, {E}")
    return FactorStats(key, dict(params), V, E, deg, t, r, printed)
