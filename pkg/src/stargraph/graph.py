"""Simple undirected graphs, edge subgraphs and rooted trees.

Vertices are dense integer ids ``0..n-1``. Edges are stored canonically as
``(min, max)`` tuples so that set operations on edges are exact.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping


class GraphError(ValueError):
    pass


class NotSpanningError(GraphError):
    """Raised when a search from a root does not reach every vertex."""


Edge = tuple[int, int]


def canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _canon_edges(n: int, edges: Iterable) -> frozenset[Edge]:
    out = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        out.add(canon(u, v))
    return frozenset(out)


def _adjacency(n: int, edges: Iterable[Edge]) -> tuple[tuple[int, ...], ...]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return tuple(tuple(sorted(a)) for a in adj)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset[Edge]
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        object.__setattr__(self, "edges", _canon_edges(self.n, self.edges))
        object.__setattr__(self, "adj", _adjacency(self.n, self.edges))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Graph":
        return cls(n, frozenset(map(tuple, edges)))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def regular_degree(self) -> int | None:
        """Common degree if the graph is regular, else ``None``."""
        degs = set(self.degrees())
        return degs.pop() if len(degs) == 1 else None

    def has_edge(self, u: int, v: int) -> bool:
        return canon(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def as_subgraph(self) -> "EdgeSubgraph":
        return EdgeSubgraph(self.n, self.edges)

    def is_connected(self) -> bool:
        return len(connected_components(self)) <= 1

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Graph":
        return cls.from_edges(int(data["n"]), data["edges"])

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(self.n)]
        lines += [f"  {u} -- {v};" for u, v in self.sorted_edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dot(cls, text: str) -> "Graph":
        vertices: set[int] = set()
        edges = []
        for raw in text.splitlines():
            line = raw.strip().rstrip(";").strip()
            if not line or line.startswith(("graph", "}", "//")):
                continue
            line = line.split("[", 1)[0].strip()
            if "--" in line:
                u, v = (int(tok) for tok in line.split("--"))
                edges.append((u, v))
                vertices.update((u, v))
            else:
                vertices.add(int(line))
        n = max(vertices) + 1 if vertices else 0
        return cls.from_edges(n, edges)


@dataclass(frozen=True)
class EdgeSubgraph:
    """A set of edges over the vertex set of some host graph."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        object.__setattr__(self, "edges", _canon_edges(self.n, self.edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def touched_vertices(self) -> set[int]:
        return {v for e in self.edges for v in e}

    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return _adjacency(self.n, self.edges)


@dataclass(frozen=True)
class RootedTree:
    """A tree given by parent links; the root maps to ``None``."""

    root: int
    parent: Mapping[int, int | None]

    def __post_init__(self):
        parent = dict(self.parent)
        roots = [v for v, p in parent.items() if p is None]
        if roots != [self.root]:
            raise GraphError(f"tree must have exactly one parentless vertex (the root), got {roots}")
        for v, p in parent.items():
            if p is not None and p not in parent:
                raise GraphError(f"parent {p} of {v} is not a tree member")
        object.__setattr__(self, "parent", parent)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.parent)

    @property
    def edges(self) -> frozenset[Edge]:
        return frozenset(canon(v, p) for v, p in self.parent.items() if p is not None)

    def children(self) -> dict[int, list[int]]:
        kids: dict[int, list[int]] = {v: [] for v in self.parent}
        for v, p in self.parent.items():
            if p is not None:
                kids[p].append(v)
        for k in kids.values():
            k.sort()
        return kids

    def levels(self) -> dict[int, int]:
        """Distance of each vertex from the root; raises on cyclic parent links."""
        dist = {self.root: 0}
        kids = self.children()
        queue = deque([self.root])
        while queue:
            u = queue.popleft()
            for w in kids[u]:
                dist[w] = dist[u] + 1
                queue.append(w)
        if len(dist) != len(self.parent):
            raise GraphError("parent links contain a cycle")
        return dist

    def path_to_root(self, v: int) -> list[int]:
        path = [v]
        while self.parent[path[-1]] is not None:
            path.append(self.parent[path[-1]])
        return path

    def rerooted(self, root: int) -> "RootedTree":
        return bfs_spanning_tree(EdgeSubgraph(max(self.parent) + 1, self.edges), root,
                                 vertices=self.vertices)

    def to_json(self) -> dict:
        return {"root": self.root, "edges": [list(e) for e in sorted(self.edges)]}


def connected_components(g: Graph | EdgeSubgraph) -> list[set[int]]:
    adj = g.adj if isinstance(g, Graph) else g.adjacency()
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def bfs_distances(adj, root: int) -> dict[int, int]:
    dist = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def bfs_spanning_tree(g: Graph | EdgeSubgraph, root: int,
                      vertices: Iterable[int] | None = None) -> RootedTree:
    """Breadth-first spanning tree of ``g`` from ``root``.

    Every vertex of the host (or of ``vertices`` when given) must be reached;
    otherwise :class:`NotSpanningError` is raised.
    """
    adj = g.adj if isinstance(g, Graph) else g.adjacency()
    target = set(range(g.n)) if vertices is None else set(vertices)
    if root not in target:
        raise GraphError(f"root {root} not among the vertices to span")
    parent: dict[int, int | None] = {root: None}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in parent:
                parent[w] = u
                queue.append(w)
    missing = target - parent.keys()
    if missing:
        raise NotSpanningError(f"{len(missing)} vertices unreachable from {root}, e.g. {min(missing)}")
    return RootedTree(root, parent)


def tree_depth(t: RootedTree) -> int:
    return max(t.levels().values())


def tree_center(t: RootedTree) -> int:
    """Vertex of minimum eccentricity in the tree, smallest id on ties."""
    if len(t.parent) == 1:
        return t.root
    n = max(t.parent) + 1
    adj = _adjacency(n, t.edges)
    d0 = bfs_distances(adj, t.root)
    a = max(sorted(d0), key=lambda v: d0[v])
    da = bfs_distances(adj, a)
    b = max(sorted(da), key=lambda v: da[v])
    # walk back from b to a along the diameter path
    diam = da[b]
    path = [b]
    while path[-1] != a:
        u = path[-1]
        path.append(next(w for w in adj[u] if da[w] == da[u] - 1))
    mids = {path[diam // 2], path[(diam + 1) // 2]}
    return min(mids)


def verify_spanning_tree(g: Graph, t: RootedTree) -> bool:
    if t.vertices != frozenset(range(g.n)):
        return False
    edges = t.edges
    if len(edges) != g.n - 1 or not edges <= g.edges:
        return False
    try:
        t.levels()
    except GraphError:
        return False
    return True


def verify_edge_disjoint(trees: Iterable[RootedTree]) -> bool:
    seen: set[Edge] = set()
    for t in trees:
        e = t.edges
        if seen & e:
            return False
        seen |= e
    return True


