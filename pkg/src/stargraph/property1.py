"""Search for an f-invariant split of a supernode tree.

A witness splits one supernode tree Y into a connected piece S_2 hanging from
Y's root and the remainder S_1, such that both vertex sets are unions of orbits
of every bijection on the structure trees, and both pieces are large enough to
spare t_n - 1 private vertices each.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Edge, EdgeSubgraph, RootedTree, connected_components
from .packing import FactorEdstData
from .star import StarProduct


class InvalidWitness(ValueError):
    pass


DEFAULT_BUDGET = 10 ** 6


@dataclass(frozen=True)
class Property1Data:
    tree_index: int
    s1: frozenset[Edge]
    s2: frozenset[Edge]
    vs1: frozenset[int]
    vs2: frozenset[int]
    intersection: frozenset[int]
    r1: tuple[int, ...]
    r2: tuple[int, ...]
    ab: tuple[tuple[int, int, int], ...]
    cd: tuple[tuple[int, int, int], ...]
    anchor: int
    supernode_anchor: int

    def to_json(self) -> dict:
        return {
            "tree_index": self.tree_index,
            "s1": sorted(map(list, self.s1)),
            "s2": sorted(map(list, self.s2)),
            "intersection": sorted(self.intersection),
            "r1": list(self.r1),
            "r2": list(self.r2),
            "ab": [list(t) for t in self.ab],
            "cd": [list(t) for t in self.cd],
            "anchor": self.anchor,
            "supernode_anchor": self.supernode_anchor,
        }


def _orbits(sp: StarProduct, sd: FactorEdstData) -> list[int]:
    """Orbit label per supernode vertex under all bijections on structure-tree edges."""
    parent = list(range(sp.nn))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for t in sd.trees:
        for x, x2 in t.edges:
            for y in range(sp.nn):
                a, b = find(y), find(sp.bijections.apply(x, x2, y))
                if a != b:
                    parent[max(a, b)] = min(a, b)
    return [find(y) for y in range(sp.nn)]


def _rooted_subtrees(tree: RootedTree):
    """Every vertex set of a connected subtree containing the root, each once."""
    kids = tree.children()

    def rec(chosen, frontier):
        yield chosen
        for i, v in enumerate(frontier):
            yield from rec(chosen | {v}, frontier[i + 1:] + sorted(kids[v]))

    yield from rec(frozenset([tree.root]), sorted(kids[tree.root]))


def _closed(vertices, orbit) -> bool:
    labels = {orbit[v] for v in vertices}
    return all((orbit[v] in labels) == (v in vertices) for v in range(len(orbit)))


def balanced_halves(n: int, anchor: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    rest = [v for v in range(n) if v != anchor]
    cut = (len(rest) + 1) // 2
    return tuple(rest[:cut]), tuple(rest[cut:])


def _split(tree: RootedTree, w: frozenset[int]):
    s2 = frozenset(e for e in tree.edges if e[0] in w and e[1] in w)
    s1 = frozenset(tree.edges - s2)
    vs1 = frozenset(v for e in s1 for v in e)
    return s1, s2, vs1


def _build(sp, sd, nd, index, w) -> Property1Data:
    tree = nd.trees[index]
    s1, s2, vs1 = _split(tree, w)
    inter = vs1 & w
    o = sd.trees[0].root
    r1, r2 = balanced_halves(sp.ns, o)
    ab = tuple((i, r1[i - 2], r2[i - 2]) for i in range(2, sd.t + 1))
    only1 = sorted(vs1 - inter)
    only2 = sorted(w - inter)
    cd = tuple((i, only1[i - 2], only2[i - 2]) for i in range(2, nd.t + 1))
    return Property1Data(index, s1, s2, vs1, w, inter, r1, r2, ab, cd, o, tree.root)


def search_property1(sp: StarProduct, sd: FactorEdstData, nd: FactorEdstData,
                     budget: int = DEFAULT_BUDGET) -> tuple[Property1Data | None, str]:
    """``(witness, reason)``; the witness is None when the search fails."""
    orbit = _orbits(sp, sd)
    if len(set(orbit)) == 1:
        return None, "no f-invariant partition: the bijections act transitively on the supernode"
    tn = nd.t
    checked = 0
    invariant_seen = False
    for index, tree in enumerate(nd.trees):
        for w in _rooted_subtrees(tree):
            checked += 1
            if checked > budget:
                return None, f"search budget of {budget} candidates exhausted"
            if not 1 < len(w) < sp.nn or not _closed(w, orbit):
                continue
            s1, s2, vs1 = _split(tree, w)
            if not _closed(vs1, orbit):
                continue
            invariant_seen = True
            need = tn - 2 + len(vs1 & w)
            if len(s1) >= need and len(s2) >= need:
                return _build(sp, sd, nd, index, w), f"witness after {checked} candidates"
    if invariant_seen:
        return None, "size conditions fail for every f-invariant partition"
    return None, "no f-invariant partition"


def property1_search(sp: StarProduct, sd: FactorEdstData, nd: FactorEdstData,
                     budget: int = DEFAULT_BUDGET) -> Property1Data | None:
    return search_property1(sp, sd, nd, budget)[0]


def check_witness(sp: StarProduct, sd: FactorEdstData, nd: FactorEdstData, w: Property1Data) -> None:
    """Raise InvalidWitness unless every witness condition holds."""
    if not 0 <= w.tree_index < nd.t:
        raise InvalidWitness(f"tree index {w.tree_index} out of range")
    tree = nd.trees[w.tree_index]
    if w.s1 | w.s2 != tree.edges or w.s1 & w.s2 or not w.s1 or not w.s2:
        raise InvalidWitness("S_1, S_2 must be a partition of the tree into two nonempty parts")
    vs1 = frozenset(v for e in w.s1 for v in e)
    vs2 = frozenset(v for e in w.s2 for v in e)
    if vs1 != w.vs1 or vs2 != w.vs2 or vs1 & vs2 != w.intersection:
        raise InvalidWitness("vertex sets do not match the edge sets")
    if len([c for c in connected_components(EdgeSubgraph(sp.nn, w.s2)) if len(c) > 1]) != 1:
        raise InvalidWitness("S_2 is not connected")
    need = nd.t - 2 + len(w.intersection)
    if len(w.s1) < need or len(w.s2) < need:
        raise InvalidWitness("size conditions fail")
    orbit = _orbits(sp, sd)
    if not (_closed(vs1, orbit) and _closed(vs2, orbit)):
        raise InvalidWitness("vertex sets are not invariant under the bijections")
    if w.supernode_anchor not in vs2:
        raise InvalidWitness("supernode anchor must lie in V(S_2)")
    if set(w.r1) & set(w.r2) or set(w.r1) | set(w.r2) | {w.anchor} != set(range(sp.ns)) or w.anchor in w.r1 + w.r2:
        raise InvalidWitness("R_1, R_2 must partition the structure vertices other than the anchor")
    if len(w.ab) != sd.t - 1 or len(w.cd) != nd.t - 1:
        raise InvalidWitness("wrong number of triples")
    for col in range(3):
        for triples in (w.ab, w.cd):
            if len({t[col] for t in triples}) != len(triples):
                raise InvalidWitness("triples repeat a coordinate")
    if any(a not in w.r1 or b not in w.r2 for _, a, b in w.ab):
        raise InvalidWitness("a_i must lie in R_1 and b_i in R_2")
    if any(c not in vs1 - vs2 or d not in vs2 - vs1 for _, c, d in w.cd):
        raise InvalidWitness("c_i, d_i must be private vertices of S_1, S_2")
