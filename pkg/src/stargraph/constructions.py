"""Edge-disjoint spanning trees of star products built from factor tree packings.

Every builder returns a :class:`TreeSet` whose trees have been checked for
spanning and pairwise edge-disjointness before it is handed back. Each tree
carries the root its depth guarantee is stated for, the depth measured from that
root, and the guaranteed bound computed from the factor-tree depths.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import (
    EdgeSubgraph,
    GraphError,
    RootedTree,
    bfs_spanning_tree,
    tree_depth,
    verify_edge_disjoint,
    verify_spanning_tree,
)
from .packing import (
    FactorEdstData,
    InfeasibleError,
    longest_path_length,
    max_edst_pack,
    root_first_tree,
    select_u_set,
    with_first,
)
from .property1 import DEFAULT_BUDGET, InvalidWitness, Property1Data, check_witness, search_property1
from .star import StarProduct


class VerificationError(AssertionError):
    pass


class DegenerateError(ValueError):
    pass


class CaseNotApplicable(ValueError):
    pass


MODES = ("universal", "lowdepth", "maximum", "property1")

# which factor condition a tree set relied on
UNCONDITIONAL = "unconditional"
BOTH_EQUAL = "r_s=t_s and r_n=t_n"
BOTH_AT_LEAST = "r_s>=t_s and r_n>=t_n"
ONE_AT_LEAST = "r_s>=t_s or r_n>=t_n"
SPLIT = "split witness"


@dataclass(frozen=True)
class BuiltTree:
    kind: str
    index: int
    tree: RootedTree
    depth: int
    bound: int
    bound_formula: str

    @property
    def within_bound(self) -> bool:
        return self.depth <= self.bound


@dataclass(frozen=True)
class TreeSet:
    product: StarProduct
    mode: str
    trees: tuple[BuiltTree, ...]
    condition: str = ""
    notes: tuple[str, ...] = ()
    factor_counts: dict = field(default_factory=dict)

    @property
    def count(self) -> int:
        return len(self.trees)

    def verify(self) -> list[str]:
        """Problems found re-checking the set; empty when everything holds."""
        g = self.product.product
        problems = []
        for bt in self.trees:
            if not verify_spanning_tree(g, bt.tree):
                problems.append(f"{bt.kind}[{bt.index}] is not a spanning tree of the product")
        if not verify_edge_disjoint([bt.tree for bt in self.trees]):
            problems.append("trees share an edge")
        for bt in self.trees:
            if not bt.within_bound:
                problems.append(f"{bt.kind}[{bt.index}] depth {bt.depth} exceeds bound {bt.bound}")
        return problems


def _depth_from(t: RootedTree, root: int) -> int:
    return tree_depth(t if t.root == root else t.rerooted(root))


def _finish(sp: StarProduct, kind: str, index: int, edges, root: int, bound: int, formula: str) -> BuiltTree:
    """Reduce an edge set to a BFS spanning tree from ``root`` and measure it."""
    try:
        tree = bfs_spanning_tree(EdgeSubgraph(sp.product.n, edges), root)
    except GraphError as exc:
        raise VerificationError(f"{kind}[{index}] does not span the product: {exc}") from exc
    return BuiltTree(kind, index, tree, tree_depth(tree), bound, formula)


def _check(ts: TreeSet) -> TreeSet:
    g = ts.product.product
    for bt in ts.trees:
        if not verify_spanning_tree(g, bt.tree):
            raise VerificationError(f"{bt.kind}[{bt.index}] is not a spanning tree")
    if not verify_edge_disjoint([bt.tree for bt in ts.trees]):
        raise VerificationError("constructed trees are not edge-disjoint")
    return ts


# ---------------------------------------------------------------- edge families


def _supernode_copy(sp: StarProduct, x: int, edges):
    return {sp.intra_edge(x, a, b) for a, b in edges}


def _supernode_everywhere(sp: StarProduct, edges, where=None):
    out = set()
    for x in range(sp.ns) if where is None else where:
        out |= _supernode_copy(sp, x, edges)
    return out


def _structure_copies(sp: StarProduct, edges, layers=None):
    """All copies of structure edges: {(x, y), (x', f(y))} for every y."""
    layers = range(sp.nn) if layers is None else layers
    return {sp.cross_edge(x, x2, y) for x, x2 in edges for y in layers}


def _arcs(t: RootedTree):
    """(parent, child) pairs of a rooted tree."""
    return [(p, v) for v, p in sorted(t.parent.items()) if p is not None]


def _into(sp: StarProduct, arcs, pick):
    """One edge per arc landing on ``pick(child)`` layers in the child supernode."""
    out = set()
    for x, x2 in arcs:
        for y2 in pick(x2):
            out.add(sp.cross_edge_into(x, x2, y2))
    return out


def _single_copy(sp: StarProduct, t: RootedTree, start: int):
    """Edges of the copy of ``t`` that passes through ``(t.root, start)``."""
    layer = {t.root: start}
    out = set()
    kids = t.children()
    queue = deque([t.root])
    while queue:
        x = queue.popleft()
        for x2 in kids[x]:
            layer[x2] = sp.bijections.apply(x, x2, layer[x])
            out.add(sp.cross_edge(x, x2, layer[x]))
            queue.append(x2)
    return out


# ---------------------------------------------------------------- factor prep


def _centre_depths(d: FactorEdstData) -> tuple[int, ...]:
    # packed trees are stored rooted at their centres
    return tuple(tree_depth(t) for t in d.trees)


def pack_factors(sp: StarProduct) -> tuple[FactorEdstData, FactorEdstData]:
    return max_edst_pack(sp.structure), max_edst_pack(sp.supernode)


def _smallest(pool, count, exclude=()):
    chosen = [v for v in sorted(pool) if v not in set(exclude)][:count]
    if len(chosen) < count:
        raise InfeasibleError(f"need {count} distinct vertices, only {len(chosen)} available")
    return chosen


# ---------------------------------------------------------------- builders


def _structure_trees(sp, sd, nd, hosts, kind="structure_tree"):
    """Y_1 in supernode hosts[i-2] plus every copy of X_i, for i = 2..t_s."""
    y1 = nd.trees[0]
    dn = _centre_depths(nd)
    ds = _centre_depths(sd)
    out = []
    for i in range(2, sd.t + 1):
        u = hosts[i - 2]
        edges = _supernode_copy(sp, u, y1.edges) | _structure_copies(sp, sd.trees[i - 1].edges)
        bound = 2 * ds[i - 1] + dn[0]
        out.append(_finish(sp, kind, i, edges, sp.vid(u, y1.root), bound, "2*d_s[i] + d_n[1]"))
    return out


def _supernode_trees(sp, sd, nd, o, picks, kind="supernode_tree"):
    """One X-bar_1 edge per arc landing on v_i, plus Y_i in every supernode."""
    xbar = sd.trees[0].rerooted(o)
    arcs = _arcs(xbar)
    ds1 = tree_depth(xbar)
    dn = _centre_depths(nd)
    out = []
    for i in range(2, nd.t + 1):
        yi = nd.trees[i - 1]
        edges = _into(sp, arcs, picks[i - 2]) | _supernode_everywhere(sp, yi.edges)
        bound = 2 * ds1 * dn[i - 1] + dn[i - 1] + ds1
        out.append(_finish(sp, kind, i, edges, sp.vid(o, yi.root), bound, "2*d_s[1]*d_n[i] + d_n[i] + d_s[1]"))
    return out


def _counts(sd, nd):
    return {"t_s": sd.t, "r_s": sd.r, "t_n": nd.t, "r_n": nd.r}


def universal_construction(sp: StarProduct, sd: FactorEdstData | None = None,
                           nd: FactorEdstData | None = None, low_depth: bool = False) -> TreeSet:
    """t_s + t_n - 2 trees with no conditions on the factors."""
    if sd is None or nd is None:
        sd, nd = pack_factors(sp)
    if sd.t + nd.t < 3:
        raise DegenerateError("t_s = t_n = 1: the universal construction yields no trees")
    o = sd.trees[0].root
    hosts = _smallest(range(sp.ns), sd.t - 1)
    trees = _structure_trees(sp, sd, nd, hosts)
    v_list = _smallest(range(sp.nn), nd.t - 1)
    if not low_depth:
        trees += _supernode_trees(sp, sd, nd, o, [(lambda x2, v=v: (v,)) for v in v_list])
    else:
        xbar = sd.trees[0].rerooted(o)
        ds1 = tree_depth(xbar)
        dn = _centre_depths(nd)
        for i in range(2, nd.t + 1):
            v = v_list[i - 2]
            yi = nd.trees[i - 1]
            edges = _single_copy(sp, xbar, v) | _supernode_everywhere(sp, yi.edges)
            trees.append(_finish(sp, "supernode_tree_lowdepth", i, edges, sp.vid(o, v),
                                 ds1 + 2 * dn[i - 1], "d_s[1] + 2*d_n[i]"))
    mode = "lowdepth" if low_depth else "universal"
    return _check(TreeSet(sp, mode, tuple(trees), UNCONDITIONAL, factor_counts=_counts(sd, nd)))


def low_depth_construction(sp: StarProduct, sd=None, nd=None) -> TreeSet:
    return universal_construction(sp, sd, nd, low_depth=True)


def maximum_construction(sp: StarProduct, sd: FactorEdstData | None = None,
                         nd: FactorEdstData | None = None) -> TreeSet:
    """t_s + t_n trees when r_s >= t_s and r_n >= t_n, one fewer when only one holds."""
    if sd is None or nd is None:
        sd, nd = pack_factors(sp)
    extra_n = nd.r >= nd.t   # enough supernode non-tree edges: tree through N_n copies
    extra_s = sd.r >= sd.t   # enough structure non-tree edges: tree through N_s copies
    if not (extra_n or extra_s):
        raise CaseNotApplicable(f"r_s={sd.r} < t_s={sd.t} and r_n={nd.r} < t_n={nd.t}")
    notes = []
    if extra_s:
        sd = select_u_set(sd)
    if extra_n:
        nd = select_u_set(nd)
    o = min(sd.u_set) if extra_s else sd.trees[0].root
    o2 = min(nd.u_set) if extra_n else nd.trees[0].root
    sd = root_first_tree(sd, o)
    nd = root_first_tree(nd, o2)
    xbar = sd.directed_first_tree
    arcs = _arcs(xbar)
    ds1 = tree_depth(xbar)
    dn1 = _depth_from(nd.trees[0], o2)

    hosts = _smallest(sd.u_set if extra_s else range(sp.ns), sd.t - 1, exclude=(o,))
    v_list = _smallest(nd.u_set if extra_n else range(sp.nn), nd.t - 1, exclude=(o2,))
    trees = _structure_trees(sp, sd, nd, hosts)
    trees += _supernode_trees(sp, sd, nd, o, [(lambda x2, v=v: (v,)) for v in v_list])

    y1 = nd.trees[0]
    root = sp.vid(o, o2)
    if extra_n:
        m_n = longest_path_length(nd.nontree)
        outside = sorted(set(range(sp.nn)) - nd.u_set)
        edges = (_supernode_copy(sp, o, y1.edges)
                 | _supernode_everywhere(sp, nd.nontree.edges, [x for x in range(sp.ns) if x != o])
                 | _into(sp, arcs, lambda x2: outside))
        trees.append(_finish(sp, "extra_supernode_nontree", 1, edges, root,
                             dn1 + ds1 * (1 + m_n), "d_n[1] + d_s[1]*(1 + m_n)"))
        notes.append(f"m_n={m_n}")
    if extra_s:
        m_s = longest_path_length(sd.nontree)
        edges = (_supernode_everywhere(sp, y1.edges, sorted(set(range(sp.ns)) - sd.u_set))
                 | _structure_copies(sp, sd.nontree.edges)
                 | _into(sp, arcs, lambda x2: (o2,)))
        trees.append(_finish(sp, "extra_structure_nontree", 2, edges, root,
                             (ds1 + 1) * (2 * dn1 + 2 * m_s) + ds1, "(d_s[1] + 1)*(2*d_n[1] + 2*m_s) + d_s[1]"))
        notes.append(f"m_s={m_s}")
    if extra_s and extra_n:
        condition = BOTH_EQUAL if (sd.r == sd.t and nd.r == nd.t) else BOTH_AT_LEAST
    else:
        condition = ONE_AT_LEAST
    ts = TreeSet(sp, "maximum", tuple(trees), condition, tuple(notes), _counts(sd, nd))
    return _check(ts)


def property1_construction(sp: StarProduct, sd: FactorEdstData, nd: FactorEdstData,
                           w: Property1Data) -> TreeSet:
    """t_s + t_n - 1 trees from a split of one supernode tree, with no r/t conditions."""
    check_witness(sp, sd, nd, w)
    nd = with_first(nd, w.tree_index)
    o, o2 = w.anchor, w.supernode_anchor
    xbar = sd.trees[0].rerooted(o)
    arcs = _arcs(xbar)
    ds1 = tree_depth(xbar)
    ds = _centre_depths(sd)
    dn = _centre_depths(nd)
    dn1 = _depth_from(nd.trees[0], o2)
    r1 = set(w.r1)
    trees = []
    for i, a, b in w.ab:
        edges = (_supernode_copy(sp, a, w.s1) | _supernode_copy(sp, b, w.s2)
                 | _structure_copies(sp, sd.trees[i - 1].edges))
        sub = EdgeSubgraph(sp.product.n, edges)
        best = None
        for s in sorted(w.intersection):
            bt = _finish(sp, "split_structure_tree", i, sub.edges, sp.vid(a, s), 0, "")
            if best is None or bt.depth < best.depth:
                best = bt
        bound = 6 * ds[i - 1] + 4 * dn[0]
        trees.append(BuiltTree(best.kind, i, best.tree, best.depth, bound, "6*d_s[i] + 4*d_n[1]"))
    for i, c, d in w.cd:
        yi = nd.trees[i - 1]
        edges = (_into(sp, arcs, lambda x2, c=c, d=d: (d,) if x2 in r1 else (c,))
                 | _supernode_everywhere(sp, yi.edges))
        trees.append(_finish(sp, "split_supernode_tree", i, edges, sp.vid(o, yi.root),
                             2 * ds1 * dn[i - 1] + dn[i - 1] + ds1, "2*d_s[1]*d_n[i] + d_n[i] + d_s[1]"))
    vs1, vs2 = sorted(w.vs1), sorted(w.vs2)
    edges = (_supernode_copy(sp, o, nd.trees[0].edges)
             | _supernode_everywhere(sp, w.s2, w.r1)
             | _supernode_everywhere(sp, w.s1, w.r2)
             | _into(sp, arcs, lambda x2: vs1 if x2 in r1 else vs2))
    trees.append(_finish(sp, "split_final", 1, edges, sp.vid(o, o2), 3 * dn1 + ds1, "3*d_n[1] + d_s[1]"))
    return _check(TreeSet(sp, "property1", tuple(trees), SPLIT, factor_counts=_counts(sd, nd)))


def construct(sp: StarProduct, mode: str = "auto", sd: FactorEdstData | None = None,
              nd: FactorEdstData | None = None, budget: int = DEFAULT_BUDGET) -> TreeSet:
    """Run one construction; ``auto`` tries maximum, then the split search, then low depth."""
    if sd is None or nd is None:
        sd, nd = pack_factors(sp)
    if mode == "universal":
        return universal_construction(sp, sd, nd)
    if mode == "lowdepth":
        return low_depth_construction(sp, sd, nd)
    if mode == "maximum":
        return maximum_construction(sp, sd, nd)
    if mode == "property1":
        w, reason = search_property1(sp, sd, nd, budget)
        if w is None:
            raise CaseNotApplicable(f"no split witness: {reason}")
        return property1_construction(sp, sd, nd, w)
    if mode != "auto":
        raise ValueError(f"unknown mode {mode!r}; expected auto or one of {', '.join(MODES)}")
    if sd.r >= sd.t or nd.r >= nd.t:
        return maximum_construction(sp, sd, nd)
    w, reason = search_property1(sp, sd, nd, budget)
    if w is not None:
        return property1_construction(sp, sd, nd, w)
    ts = low_depth_construction(sp, sd, nd)
    return TreeSet(sp, ts.mode, ts.trees, ts.condition, ts.notes + (f"split search: {reason}",), ts.factor_counts)


def depth_report(ts: TreeSet) -> list[tuple[int, int]]:
    """(measured depth, guaranteed bound) per tree."""
    return [(bt.depth, bt.bound) for bt in ts.trees]
