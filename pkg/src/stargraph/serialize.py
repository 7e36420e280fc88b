"""TreeSet files: JSON with (x, y) vertex pairs, DOT with one colour per tree."""

from __future__ import annotations

import json
from pathlib import Path

from .constructions import TreeSet
from .graph import EdgeSubgraph, Graph, GraphError, bfs_distances, canon

FORMAT_VERSION = 1

PALETTE = ("red", "blue", "forestgreen", "orange", "purple", "brown", "magenta", "cyan",
           "gold", "navy", "olive", "teal")


def treeset_to_json(ts: TreeSet, preset: str = "", seed: int = 0) -> dict:
    sp = ts.product
    pair = sp.coords
    trees = []
    for bt in ts.trees:
        trees.append({
            "kind": bt.kind,
            "index": bt.index,
            "root": list(pair(bt.tree.root)),
            "depth": bt.depth,
            "bound": bt.bound,
            "bound_formula": bt.bound_formula,
            "edges": [[list(pair(u)), list(pair(v))] for u, v in sorted(bt.tree.edges)],
        })
    return {
        "format": FORMAT_VERSION,
        "preset": preset,
        "label": sp.label,
        "params": sp.params,
        "seed": seed,
        "mode": ts.mode,
        "condition": ts.condition,
        "notes": list(ts.notes),
        "factor_counts": ts.factor_counts,
        "structure_order": sp.ns,
        "supernode_order": sp.nn,
        "product": sp.product.to_json(),
        "trees": trees,
    }


def dumps(data: dict) -> str:
    return json.dumps(data, sort_keys=True, indent=1) + "\n"


def write_treeset(ts: TreeSet, path: Path, preset: str = "", seed: int = 0) -> Path:
    path = Path(path)
    path.write_text(dumps(treeset_to_json(ts, preset, seed)))
    return path


def treeset_to_dot(ts: TreeSet) -> str:
    sp = ts.product
    owner = {}
    for i, bt in enumerate(ts.trees):
        for e in bt.tree.edges:
            owner[e] = i
    lines = [f'graph "{sp.label or "product"}" {{', "  node [shape=point];"]
    for v in range(sp.product.n):
        x, y = sp.coords(v)
        lines.append(f'  {v} [xlabel="({x},{y})"];')
    for u, v in sp.product.sorted_edges():
        i = owner.get((u, v))
        if i is None:
            lines.append(f"  {u} -- {v} [color=gray80];")
        else:
            lines.append(f'  {u} -- {v} [color={PALETTE[i % len(PALETTE)]}, penwidth=2, label="T{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def verify_treeset_json(data: dict) -> list[str]:
    """Re-check a serialized tree set from scratch; returns the problems found."""
    problems = []
    try:
        g = Graph.from_json(data["product"])
        nn = int(data["supernode_order"])
    except (KeyError, TypeError, ValueError, GraphError) as exc:
        return [f"malformed file: {exc}"]
    seen: dict = {}
    for pos, tree in enumerate(data.get("trees", [])):
        name = f"tree {pos} ({tree.get('kind')}[{tree.get('index')}])"
        try:
            edges = {canon(a[0] * nn + a[1], b[0] * nn + b[1]) for a, b in tree["edges"]}
            root = tree["root"][0] * nn + tree["root"][1]
        except (KeyError, TypeError, IndexError) as exc:
            problems.append(f"{name}: malformed entry {exc}")
            continue
        if len(edges) != len(tree["edges"]):
            problems.append(f"{name}: repeats an edge")
        foreign = [e for e in edges if not g.has_edge(*e)]
        if foreign:
            problems.append(f"{name}: {len(foreign)} edges are not product edges")
        if len(edges) != g.n - 1:
            problems.append(f"{name}: has {len(edges)} edges, a spanning tree needs {g.n - 1}")
        dist = bfs_distances(EdgeSubgraph(g.n, edges).adjacency(), root) if 0 <= root < g.n else {}
        if len(dist) != g.n:
            problems.append(f"{name}: reaches {len(dist)} of {g.n} vertices from its root")
        else:
            depth = max(dist.values())
            if depth != tree.get("depth"):
                problems.append(f"{name}: recorded depth {tree.get('depth')} but measured {depth}")
            if depth > tree.get("bound", depth):
                problems.append(f"{name}: depth {depth} exceeds bound {tree['bound']}")
        for e in edges:
            if e in seen:
                problems.append(f"{name}: edge {e} also in tree {seen[e]}")
            else:
                seen[e] = pos
    return problems


def verify_treeset_file(path: Path) -> list[str]:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        return [f"cannot read {path}: {exc}"]
    return verify_treeset_json(data)
