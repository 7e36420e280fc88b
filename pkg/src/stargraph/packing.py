"""Factor-level tree packing.

The packer grows k edge-disjoint forests by matroid-union augmentation: each new
edge starts a breadth-first search over exchange steps ("put z into forest i,
evicting the edge w on the cycle it closes") until some forest can absorb an edge
without a cycle, then the exchanges are replayed backwards. Shortest augmenting
sequences keep every forest acyclic, so the final union is a maximum independent
set of the k-fold union of the graphic matroid.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace

from .graph import (
    Edge,
    EdgeSubgraph,
    Graph,
    GraphError,
    RootedTree,
    bfs_spanning_tree,
    canon,
    connected_components,
    tree_center,
    verify_edge_disjoint,
    verify_spanning_tree,
)


class Disconnected(GraphError):
    pass


class TooLarge(ValueError):
    pass


class InfeasibleError(ValueError):
    pass


NASH_WILLIAMS_LIMIT = 12


@dataclass(frozen=True)
class FactorEdstData:
    graph: Graph
    trees: tuple[RootedTree, ...]
    nontree: EdgeSubgraph
    u_set: frozenset[int] | None = None
    anchor: int | None = None
    directed_first_tree: RootedTree | None = None

    @property
    def t(self) -> int:
        return len(self.trees)

    @property
    def r(self) -> int:
        return self.nontree.num_edges

    def to_json(self) -> dict:
        return {
            "graph": self.graph.to_json(),
            "trees": [[list(e) for e in sorted(t.edges)] for t in self.trees],
            "nontree": [list(e) for e in sorted(self.nontree.edges)],
            "u_set": sorted(self.u_set) if self.u_set is not None else None,
        }


class _Forests:
    def __init__(self, n: int, k: int):
        self.k = k
        self.adj = [[set() for _ in range(n)] for _ in range(k)]
        self.owner: dict[Edge, int] = {}

    def path(self, i: int, u: int, v: int) -> list[Edge] | None:
        """Edges of the u-v path in forest i, or None if u and v are in different trees."""
        adj = self.adj[i]
        prev = {u: None}
        queue = deque([u])
        while queue:
            a = queue.popleft()
            if a == v:
                break
            for b in adj[a]:
                if b not in prev:
                    prev[b] = a
                    queue.append(b)
        if v not in prev:
            return None
        out = []
        while prev[v] is not None:
            out.append(canon(v, prev[v]))
            v = prev[v]
        return out

    def move(self, e: Edge, i: int):
        j = self.owner.get(e)
        if j is not None:
            self.adj[j][e[0]].discard(e[1])
            self.adj[j][e[1]].discard(e[0])
        self.adj[i][e[0]].add(e[1])
        self.adj[i][e[1]].add(e[0])
        self.owner[e] = i

    def insert(self, e: Edge) -> bool:
        pred: dict[Edge, Edge | None] = {e: None}
        queue = deque([e])
        while queue:
            z = queue.popleft()
            for i in range(self.k):
                if self.owner.get(z) == i:
                    continue
                cycle = self.path(i, *z)
                if cycle is None:
                    self._augment(z, i, pred)
                    return True
                for w in cycle:
                    if w not in pred:
                        pred[w] = z
                        queue.append(w)
        return False

    def _augment(self, z: Edge, i: int, pred):
        while True:
            j = self.owner.get(z)
            self.move(z, i)
            p = pred[z]
            if p is None:
                return
            i, z = j, p

    def edge_sets(self) -> list[frozenset[Edge]]:
        sets: list[set[Edge]] = [set() for _ in range(self.k)]
        for e, i in self.owner.items():
            sets[i].add(e)
        return [frozenset(s) for s in sets]


def pack_forests(g: Graph, k: int) -> list[frozenset[Edge]]:
    """k edge-disjoint forests of maximum total size."""
    forests = _Forests(g.n, k)
    for e in g.sorted_edges():
        forests.insert(e)
    sets = forests.edge_sets()
    for s in sets:
        # each forest must stay acyclic
        assert len(connected_components(EdgeSubgraph(g.n, s))) == g.n - len(s)
    return sets


def _canonical_trees(g: Graph, edge_sets) -> tuple[RootedTree, ...]:
    trees = []
    for es in sorted(edge_sets, key=lambda s: sorted(s)):
        t = bfs_spanning_tree(EdgeSubgraph(g.n, es), 0)
        trees.append(bfs_spanning_tree(EdgeSubgraph(g.n, es), tree_center(t)))
    return tuple(trees)


def _make_data(g: Graph, edge_sets) -> FactorEdstData:
    trees = _canonical_trees(g, edge_sets)
    used = frozenset().union(*edge_sets) if edge_sets else frozenset()
    return FactorEdstData(g, trees, EdgeSubgraph(g.n, g.edges - used))


def max_edst_pack(g: Graph) -> FactorEdstData:
    """A maximum set of edge-disjoint spanning trees of a connected graph."""
    if g.n < 2:
        raise Disconnected("packing needs at least two vertices")
    if not g.is_connected():
        raise Disconnected("graph is disconnected; it has no spanning tree")
    for k in range(g.num_edges // (g.n - 1), 0, -1):
        sets = pack_forests(g, k)
        if all(len(s) == g.n - 1 for s in sets):
            data = _make_data(g, sets)
            assert all(verify_spanning_tree(g, t) for t in data.trees)
            assert verify_edge_disjoint(data.trees)
            return data
    raise AssertionError("a connected graph always has one spanning tree")


def _partitions(g: Graph):
    """Yield ``(blocks, cross_edges)`` for every partition of the vertex set."""
    n = g.n
    earlier = [[w for w in g.adj[v] if w < v] for v in range(n)]
    block = [0] * n

    def rec(v, nblocks, cross):
        if v == n:
            yield nblocks, cross
            return
        for b in range(nblocks + 1):
            block[v] = b
            extra = sum(1 for w in earlier[v] if block[w] != b)
            yield from rec(v + 1, max(nblocks, b + 1), cross + extra)

    if n:
        block[0] = 0
        yield from rec(1, 1, 0)


def nash_williams_max(g: Graph) -> int:
    """Largest k with cross(P) >= k(|P|-1) for every vertex partition P."""
    if g.n > NASH_WILLIAMS_LIMIT:
        raise TooLarge(f"partition enumeration limited to {NASH_WILLIAMS_LIMIT} vertices, got {g.n}")
    if g.n < 2:
        raise TooLarge("need at least two vertices")
    best = None
    for parts, cross in _partitions(g):
        if parts >= 2:
            k = cross // (parts - 1)
            if best is None or k < best:
                best = k
                if best == 0:
                    break
    return best


def nash_williams_certificate(g: Graph, k: int) -> bool:
    if g.n > NASH_WILLIAMS_LIMIT:
        raise TooLarge(f"partition enumeration limited to {NASH_WILLIAMS_LIMIT} vertices, got {g.n}")
    if k <= 0:
        return True
    return all(cross >= k * (parts - 1) for parts, cross in _partitions(g))


# ---------------------------------------------------------------- U-sets


def u_set_capacity(nontree: EdgeSubgraph) -> int:
    """Largest possible U: every component of N can hold all but one of its vertices."""
    return sum(len(c) - 1 for c in connected_components(nontree))


def greedy_u_set(nontree: EdgeSubgraph, size: int) -> frozenset[int] | None:
    """Smallest ids first, leaving the largest id of every N-component outside U."""
    candidates = []
    for comp in connected_components(nontree):
        if len(comp) > 1:
            candidates += sorted(comp)[:-1]
    if len(candidates) < size:
        return None
    return frozenset(sorted(candidates)[:size])


def u_set_ok(nontree: EdgeSubgraph, u_set) -> bool:
    u_set = set(u_set)
    for comp in connected_components(nontree):
        if u_set & comp and comp <= u_set:
            return False
    return all(len(c) > 1 for c in connected_components(nontree) if c & u_set)


def _swaps(g: Graph, tree_sets: list[frozenset[Edge]], nontree: frozenset[Edge]):
    """All single exchanges (non-tree edge in, tree edge on its cycle out)."""
    for j, ts in enumerate(tree_sets):
        forest = _Forests(g.n, 1)
        for e in ts:
            forest.move(e, 0)
        for e in sorted(nontree):
            for out in sorted(forest.path(0, *e)):
                new = list(tree_sets)
                new[j] = (ts - {out}) | {e}
                yield new, (nontree - {e}) | {out}


def select_u_set(d: FactorEdstData, budget: int = 20000) -> FactorEdstData:
    """Attach a U-set of size t, repairing the tree set by edge exchanges if needed."""
    t = d.t
    if d.r < t:
        raise InfeasibleError(f"U-set needs at least t={t} non-tree edges, have r={d.r}")
    u = greedy_u_set(d.nontree, t)
    if u is not None:
        return replace(d, u_set=u)
    g = d.graph
    limit = budget if g.n > NASH_WILLIAMS_LIMIT else max(budget, 200000)
    start = [frozenset(tr.edges) for tr in d.trees]
    seen = {frozenset(d.nontree.edges)}
    queue = deque([(start, frozenset(d.nontree.edges))])
    while queue and len(seen) < limit:
        trees, non = queue.popleft()
        for new_trees, new_non in _swaps(g, trees, non):
            if new_non in seen:
                continue
            seen.add(new_non)
            sub = EdgeSubgraph(g.n, new_non)
            u = greedy_u_set(sub, t)
            if u is not None:
                repaired = _make_data(g, new_trees)
                return replace(repaired, u_set=greedy_u_set(repaired.nontree, t))
            queue.append((new_trees, new_non))
    raise InfeasibleError(f"no U-set of size {t} after exploring {len(seen)} exchange states")


def root_first_tree(d: FactorEdstData, anchor: int) -> FactorEdstData:
    """Orient the first tree away from ``anchor``."""
    if not 0 <= anchor < d.graph.n:
        raise GraphError(f"anchor {anchor} is not a vertex")
    return replace(d, anchor=anchor, directed_first_tree=d.trees[0].rerooted(anchor))


def with_first(d: FactorEdstData, index: int) -> FactorEdstData:
    """Same packing with tree ``index`` moved to the front."""
    trees = (d.trees[index],) + d.trees[:index] + d.trees[index + 1:]
    return replace(d, trees=trees, anchor=None, directed_first_tree=None)


def longest_path_length(sub: EdgeSubgraph, budget: int = 200000) -> int:
    """Edges on a longest simple path of ``sub``; falls back to max(|C|-1) past the budget."""
    adj = sub.adjacency()
    comps = [c for c in connected_components(sub) if len(c) > 1]
    cap = max((len(c) - 1 for c in comps), default=0)
    best = 0
    steps = 0

    def dfs(v, seen, length):
        nonlocal best, steps
        steps += 1
        if steps > budget:
            raise TooLarge
        best = max(best, length)
        if best == cap:
            return
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                dfs(w, seen, length + 1)
                seen.discard(w)

    try:
        for comp in comps:
            for v in sorted(comp):
                dfs(v, {v}, 0)
                if best == cap:
                    return best
    except TooLarge:
        return cap
    return best
