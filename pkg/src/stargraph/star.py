"""Star products G_s * G_n and the named network presets.

A product vertex ``(x, y)`` with ``x`` in the structure graph and ``y`` in the
supernode is stored as the dense id ``x * |V_n| + y``.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Mapping

from . import factors
from .galois import field as gf
from .graph import Graph, canon, connected_components


class BadBijection(ValueError):
    pass


class DisconnectedFactor(ValueError):
    pass


class BadPreset(ValueError):
    pass


Arc = tuple[int, int]


@dataclass(frozen=True)
class BijectionFamily:
    """One permutation of the supernode per oriented structure edge."""

    size: int
    maps: Mapping[Arc, tuple[int, ...]]
    inverses: Mapping[Arc, tuple[int, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        maps = {tuple(map(int, a)): tuple(map(int, p)) for a, p in self.maps.items()}
        inv = {}
        for arc, perm in maps.items():
            if sorted(perm) != list(range(self.size)):
                raise BadBijection(f"map on arc {arc} is not a permutation of 0..{self.size - 1}")
            if (arc[1], arc[0]) in maps:
                raise BadBijection(f"structure edge {canon(*arc)} is oriented both ways")
            back = [0] * self.size
            for y, z in enumerate(perm):
                back[z] = y
            inv[arc] = tuple(back)
        object.__setattr__(self, "maps", dict(sorted(maps.items())))
        object.__setattr__(self, "inverses", inv)

    @property
    def arcs(self) -> list[Arc]:
        return list(self.maps)

    def apply(self, x: int, x2: int, y: int) -> int:
        """Image of ``y`` when crossing from supernode ``x`` to ``x2`` (either orientation)."""
        if (x, x2) in self.maps:
            return self.maps[(x, x2)][y]
        return self.inverses[(x2, x)][y]

    def permutation(self, x: int, x2: int) -> tuple[int, ...]:
        if (x, x2) in self.maps:
            return self.maps[(x, x2)]
        return self.inverses[(x2, x)]

    def is_identity(self) -> bool:
        ident = tuple(range(self.size))
        return all(p == ident for p in self.maps.values())

    def to_json(self) -> dict:
        return {f"({a},{b})": list(p) for (a, b), p in self.maps.items()}

    @classmethod
    def from_json(cls, size: int, data: Mapping) -> "BijectionFamily":
        maps = {}
        for key, perm in data.items():
            a, b = (int(tok) for tok in key.strip("() ").split(","))
            maps[(a, b)] = perm
        return cls(size, maps)


def family_from(gs: Graph, size: int, rule: Callable[[int, int], list[int] | tuple[int, ...]]) -> BijectionFamily:
    """Family orienting every structure edge from smaller to larger id."""
    return BijectionFamily(size, {(u, v): tuple(rule(u, v)) for u, v in gs.sorted_edges()})


def identity_family(gs: Graph, size: int) -> BijectionFamily:
    ident = tuple(range(size))
    return family_from(gs, size, lambda u, v: ident)


def seeded_shift(seed: int, x: int, x2: int, modulus: int) -> int:
    digest = hashlib.blake2b(f"{seed}:{x}:{x2}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big") % modulus


def rotation_family(gs: Graph, size: int, seed: int = 0) -> BijectionFamily:
    """Index rotation ``y -> y + s (mod |V_n|)`` with a seeded per-edge shift."""
    return family_from(gs, size, lambda u, v: [(y + seeded_shift(seed, u, v, size)) % size for y in range(size)])


def field_shift_family(gs: Graph, q: int, seed: int = 0) -> BijectionFamily:
    """Additive shift over GF(q) with a seeded per-edge shift."""
    f = gf(q)
    return family_from(gs, q, lambda u, v: [f.add(y, seeded_shift(seed, u, v, q)) for y in range(q)])


def affine_family(gs: Graph, q: int, seed: int = 0) -> BijectionFamily:
    """``y -> xi * y + s`` over GF(q); multiplying by the primitive element swaps
    Paley adjacency with non-adjacency, which is what keeps the diameter at 3."""
    f = gf(q)
    xi = f.primitive_element()
    return family_from(gs, q, lambda u, v: [f.add(f.mul(xi, y), seeded_shift(seed, u, v, q)) for y in range(q)])


def full_cycle_family(gs: Graph, size: int) -> BijectionFamily:
    """Every map is the cyclic permutation ``y -> y + 1``; no proper vertex subset is invariant."""
    return family_from(gs, size, lambda u, v: [(y + 1) % size for y in range(size)])


@dataclass(frozen=True)
class StarProduct:
    structure: Graph
    supernode: Graph
    bijections: BijectionFamily
    product: Graph
    label: str = ""
    params: Mapping = field(default_factory=dict)

    @property
    def ns(self) -> int:
        return self.structure.n

    @property
    def nn(self) -> int:
        return self.supernode.n

    def vid(self, x: int, y: int) -> int:
        return x * self.supernode.n + y

    def coords(self, v: int) -> tuple[int, int]:
        return divmod(v, self.supernode.n)

    def cross_edge(self, x: int, x2: int, y: int) -> tuple[int, int]:
        """The product edge leaving ``(x, y)`` towards supernode ``x2``."""
        return canon(self.vid(x, y), self.vid(x2, self.bijections.apply(x, x2, y)))

    def cross_edge_into(self, x: int, x2: int, y2: int) -> tuple[int, int]:
        """The product edge between supernodes ``x`` and ``x2`` that lands on ``(x2, y2)``."""
        return canon(self.vid(x, self.bijections.apply(x2, x, y2)), self.vid(x2, y2))

    def intra_edge(self, x: int, y: int, y2: int) -> tuple[int, int]:
        return canon(self.vid(x, y), self.vid(x, y2))


def star_product(gs: Graph, gn: Graph, fam: BijectionFamily, label: str = "",
                 params: Mapping | None = None, allow_disconnected: bool = False) -> StarProduct:
    if fam.size != gn.n:
        raise BadBijection(f"family acts on {fam.size} points, supernode has {gn.n}")
    if {canon(*a) for a in fam.arcs} != set(gs.edges) or len(fam.arcs) != gs.num_edges:
        raise BadBijection("bijection family must orient every structure edge exactly once")
    if not allow_disconnected:
        for name, g in (("structure", gs), ("supernode", gn)):
            if not g.is_connected():
                raise DisconnectedFactor(f"{name} graph is disconnected")
    nn = gn.n
    edges = [(x * nn + a, x * nn + b) for x in range(gs.n) for a, b in gn.edges]
    for (x, x2), perm in fam.maps.items():
        edges += [(x * nn + y, x2 * nn + perm[y]) for y in range(nn)]
    prod = Graph.from_edges(gs.n * nn, edges)
    return StarProduct(gs, gn, fam, prod, label, dict(params or {}))


def cartesian_product(gs: Graph, gn: Graph, label: str = "") -> StarProduct:
    return star_product(gs, gn, identity_family(gs, gn.n), label or "cartesian")


def verify_product_counts(sp: StarProduct) -> bool:
    vs, es = sp.structure.n, sp.structure.num_edges
    vn, en = sp.supernode.n, sp.supernode.num_edges
    return sp.product.n == vs * vn and sp.product.num_edges == vs * en + vn * es


# ---------------------------------------------------------------- presets


def petersen() -> StarProduct:
    """K_2 * C_5 where the single map doubles the index mod 5."""
    gs, gn = factors.complete_graph(2), factors.cycle_graph(5)
    fam = BijectionFamily(5, {(0, 1): tuple(2 * y % 5 for y in range(5))})
    return star_product(gs, gn, fam, "petersen")


def slimfly(q: int) -> StarProduct:
    """MMS graph H_q as K_{q,q} * C(q).

    Left supernode ``x`` and right supernode ``q + m`` are joined by
    ``y -> xi^-1 (y - m x)``, the line incidence ``y = m x + c`` with the right
    side relabelled by ``c = xi z`` so that both sides carry Cay(X).
    """
    k, delta = factors.mms_class(q)
    f = gf(q)
    xi_inv = f.inv(f.primitive_element())
    gs, gn = factors.complete_bipartite(q), factors.mms_cayley(q)

    def rule(x, right):
        m = right - q
        return [f.mul(xi_inv, f.sub(y, f.mul(m, x))) for y in range(q)]

    return star_product(gs, gn, family_from(gs, q, rule), "slimfly", {"q": q, "k": k, "delta": delta})


def _family(kind: str, gs: Graph, gn: Graph, seed: int, field_order: int | None = None) -> BijectionFamily:
    if kind == "identity":
        return identity_family(gs, gn.n)
    if kind == "shift":
        if field_order is not None:
            return affine_family(gs, field_order, seed)
        return rotation_family(gs, gn.n, seed)
    if kind == "additive":
        if field_order is not None:
            return field_shift_family(gs, field_order, seed)
        return rotation_family(gs, gn.n, seed)
    if kind in ("cycle", "rotate"):
        return full_cycle_family(gs, gn.n)
    path = Path(kind)
    if path.is_file():
        return BijectionFamily.from_json(gn.n, json.loads(path.read_text()))
    raise BadPreset(f"unknown bijection family {kind!r} (identity, shift, additive, cycle or a JSON file)")


def bundlefly(q: int, a: int, bijection: str = "shift", seed: int = 0) -> StarProduct:
    hq = slimfly(q).product
    gn = factors.paley(a)
    fam = _family(bijection, hq, gn, seed, field_order=a)
    return star_product(hq, gn, fam, "bundlefly", {"q": q, "a": a})


def polarstar(q: int, kind: str, param: int, bijection: str = "shift", seed: int = 0) -> StarProduct:
    gs = factors.er_polarity(q)
    if kind == "qr":
        gn, order = factors.paley(param), param
    elif kind == "iq":
        gn, order = factors.inductive_quad(param), None
    else:
        raise BadPreset(f"PolarStar supernode must be qr or iq, got {kind!r}")
    fam = _family(bijection, gs, gn, seed, field_order=order)
    return star_product(gs, gn, fam, f"polarstar-{kind}", {"q": q, kind: param})


# Chimera qubits are (row, col, side, index); side 0 couples vertically, side 1 horizontally.
Qubit = tuple[int, int, int, int]


def chimera_graph(size: int, torus: bool = False) -> tuple[list[Qubit], set[tuple[Qubit, Qubit]]]:
    """Qubits and couplers of a ``size x size`` grid of K_{4,4} cells."""
    qubits = [(r, c, s, i) for r in range(size) for c in range(size) for s in (0, 1) for i in range(4)]
    couplers = set()
    for r in range(size):
        for c in range(size):
            couplers |= {((r, c, 0, i), (r, c, 1, j)) for i in range(4) for j in range(4)}
            for i in range(4):
                if r + 1 < size or torus:
                    couplers.add(((r, c, 0, i), ((r + 1) % size, c, 0, i)))
                if c + 1 < size or torus:
                    couplers.add(((r, c, 1, i), (r, (c + 1) % size, 1, i)))
    return qubits, couplers


def cell_colour(r: int, c: int) -> int:
    return (r + c + r // 2 + c // 2) % 2


def _chimera_product(size: int, torus: bool, swap: Callable[[Qubit], Qubit], label: str, k: int) -> StarProduct:
    qubits, couplers = chimera_graph(size, torus)
    blue = sorted(qb for qb in qubits if cell_colour(qb[0], qb[1]) == 0)
    index = {qb: i for i, qb in enumerate(blue)}
    intra, cross = [], {}
    for a, b in couplers:
        ca, cb = cell_colour(a[0], a[1]), cell_colour(b[0], b[1])
        if ca == cb == 0:
            intra.append((index[a], index[b]))
        elif ca != cb:
            blue_end, red_end = (a, b) if ca == 0 else (b, a)
            if blue_end in cross:
                raise AssertionError(f"qubit {blue_end} has two cross-colour couplers")
            cross[blue_end] = red_end
    gn = Graph.from_edges(len(blue), intra)
    perm = tuple(index[swap(cross[qb])] for qb in blue)
    fam = BijectionFamily(len(blue), {(0, 1): perm})
    return star_product(factors.path_graph(2), gn, fam, label, {"k": k}, allow_disconnected=True)


def chimera(k: int) -> StarProduct:
    """C_{2(2k+1)} as P_2 * S; the red half is the column mirror of the blue half."""
    if k < 0:
        raise BadPreset("chimera needs k >= 0")
    size = 2 * (2 * k + 1)
    return _chimera_product(size, False, lambda qb: (qb[0], size - 1 - qb[1], qb[2], qb[3]), "chimera", k)


def toric_chimera(k: int) -> StarProduct:
    """Torus-wrapped Chimera on a 4k x 4k grid; red is blue shifted by two columns."""
    if k < 1:
        raise BadPreset("toric chimera needs k >= 1")
    size = 4 * k
    return _chimera_product(size, True, lambda qb: (qb[0], (qb[1] - 2) % size, qb[2], qb[3]), "toric-chimera", k)


GEN_ALIASES = {"k": "km", "c": "cycle", "p": "path", "qr": "paley", "ks": "kqq"}


def parse_generator(token: str) -> Graph:
    m = re.fullmatch(r"([a-z]+)(\d+)", token.strip().lower())
    if not m:
        raise BadPreset(f"bad generator {token!r}; expected <name><int>, e.g. k4, paley5, cycle5")
    name = GEN_ALIASES.get(m.group(1), m.group(1))
    try:
        return factors.generate(name, int(m.group(2)))
    except (factors.UnknownFactor, factors.BadParameter) as exc:
        raise BadPreset(f"bad generator {token!r}: {exc}") from exc


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise BadPreset(f"expected integers, got {text!r}") from None


def build_preset(spec: str, bijection: str = "shift", seed: int = 0) -> StarProduct:
    """Build a product from a preset string such as ``slimfly:5`` or ``cartesian:k4xk4``."""
    head, _, rest = spec.strip().partition(":")
    try:
        if head == "petersen":
            return petersen()
        if head == "slimfly":
            (q,) = _ints(rest)
            return slimfly(q)
        if head == "bundlefly":
            q, a = _ints(rest)
            return bundlefly(q, a, bijection, seed)
        if head == "polarstar":
            q_txt, kind_txt = rest.split(",", 1)
            kind, _, param = kind_txt.partition(":")
            return polarstar(int(q_txt), kind, int(param), bijection, seed)
        if head == "chimera":
            return chimera(int(rest))
        if head == "toric-chimera":
            return toric_chimera(int(rest))
        if head == "cartesian":
            a, b = rest.split("x")
            return cartesian_product(parse_generator(a), parse_generator(b), f"cartesian-{a}x{b}")
        if head == "star":
            gens, _, kind = rest.partition(":")
            a, b = gens.split("*")
            gs, gn = parse_generator(a), parse_generator(b)
            return star_product(gs, gn, _family(kind or "shift", gs, gn, seed), f"star-{a}*{b}")
    except (factors.BadParameter, ValueError) as exc:
        if isinstance(exc, (BadPreset, BadBijection, DisconnectedFactor)):
            raise
        raise BadPreset(f"bad preset {spec!r}: {exc}") from exc
    raise BadPreset(f"unknown preset {spec!r}")


def components_of_supernode(sp: StarProduct) -> int:
    return len(connected_components(sp.supernode))
