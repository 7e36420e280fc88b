"""Command line driver: generate, edst, table, verify."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import constructions as C
from . import report
from .bounds import bound_report
from .graph import GraphError
from .packing import Disconnected, InfeasibleError, max_edst_pack
from .property1 import DEFAULT_BUDGET
from .serialize import dumps, treeset_to_dot, treeset_to_json, verify_treeset_file
from .star import BadBijection, BadPreset, DisconnectedFactor, build_preset

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_INFEASIBLE = 0, 2, 3, 4


class UsageError(Exception):
    pass


def resolve_seed(value: int | None) -> int:
    if value is not None:
        return value
    raw = os.environ.get("STARGRAPH_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"STARGRAPH_SEED must be an integer, got {raw!r}") from None


def _outdir(path: str | None) -> Path | None:
    if path is None:
        return None
    out = Path(path)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _slug(spec: str) -> str:
    return "".join(c if c.isalnum() or c in "-_" else "_" for c in spec)


def _build(args):
    try:
        return build_preset(args.spec, args.bijection, resolve_seed(args.seed))
    except (BadPreset, BadBijection, DisconnectedFactor) as exc:
        raise UsageError(str(exc)) from exc


def cmd_generate(args) -> int:
    sp = _build(args)
    print(f"{sp.label}: {sp.product.n} vertices, {sp.product.num_edges} edges "
          f"(structure {sp.ns}/{sp.structure.num_edges}, supernode {sp.nn}/{sp.supernode.num_edges})")
    out = _outdir(args.out)
    if out is not None:
        stem = _slug(args.spec)
        parts = {"product": sp.product, "structure": sp.structure, "supernode": sp.supernode}
        for name, g in parts.items():
            if args.format in ("json", "both"):
                (out / f"{stem}.{name}.json").write_text(dumps(g.to_json()))
            if args.format in ("dot", "both"):
                (out / f"{stem}.{name}.dot").write_text(g.to_dot(name))
        (out / f"{stem}.bijections.json").write_text(dumps(sp.bijections.to_json()))
    return EXIT_OK


def cmd_edst(args) -> int:
    seed = resolve_seed(args.seed)
    sp = _build(args)
    sd, nd = max_edst_pack(sp.structure), max_edst_pack(sp.supernode)
    ts = C.construct(sp, args.mode, sd, nd, args.budget)
    br = bound_report(sp.product, sp.structure, sp.supernode, ts.count, ts.mode, sd.t, nd.t)
    noun = "tree" if ts.count == 1 else "trees"
    print(f"{ts.count} {noun}, verdict {br.verdict}")
    print(f"  mode={ts.mode} condition={ts.condition!r} t_s={sd.t} r_s={sd.r} t_n={nd.t} r_n={nd.r} "
          f"tau={br.tau} sigma={br.sigma} ({br.case})")
    for bt in ts.trees:
        x, y = sp.coords(bt.tree.root)
        print(f"  {bt.kind}[{bt.index}] root=({x},{y}) depth={bt.depth} bound={bt.bound} [{bt.bound_formula}]")
    for note in ts.notes:
        print(f"  note: {note}")
    problems = ts.verify()
    out = _outdir(args.out)
    if out is not None:
        stem = f"{_slug(args.spec)}.{ts.mode}"
        data = treeset_to_json(ts, args.spec, seed)
        data["bounds"] = br.to_json()
        if args.format in ("json", "both"):
            (out / f"{stem}.treeset.json").write_text(dumps(data))
        if args.format in ("dot", "both"):
            (out / f"{stem}.treeset.dot").write_text(treeset_to_dot(ts))
        if ts.trees:
            from .plotting import plot_depths

            plot_depths(ts, out / f"{stem}.depths.png")
    if problems:
        for p in problems:
            print(f"FAIL: {p}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def _read_presets(path: str | None) -> list[str]:
    if path is None:
        return list(report.DEFAULT_PRESETS)
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read preset list: {exc}") from exc
    return [ln.split("#", 1)[0].strip() for ln in text.splitlines() if ln.split("#", 1)[0].strip()]


def cmd_table(args) -> int:
    emit = report.EMITTERS[args.format]
    if args.factors:
        rows, columns, name = report.factor_table(), report.FACTOR_COLUMNS, "factors"
    else:
        presets = _read_presets(args.presets)
        rows = report.network_table(presets, args.mode, args.bijection, resolve_seed(args.seed), args.budget)
        columns, name = report.NETWORK_COLUMNS, "networks"
    text = emit(rows, columns)
    out = _outdir(args.out)
    if out is None:
        sys.stdout.write(text)
        return EXIT_OK
    (out / f"{name}.{args.format}").write_text(text)
    if rows:
        from .plotting import plot_factor_table, plot_network_table

        plot = plot_factor_table if args.factors else plot_network_table
        plot(rows, out / f"{name}.png")
    print(f"wrote {len(rows)} rows to {out / f'{name}.{args.format}'}")
    return EXIT_OK


def cmd_verify(args) -> int:
    problems = verify_treeset_file(Path(args.file))
    if problems:
        print(f"FAIL {args.file}")
        for p in problems:
            print(f"  {p}")
        return EXIT_VERIFY
    data = json.loads(Path(args.file).read_text())
    print(f"PASS {args.file}: {len(data['trees'])} trees")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stargraph", description="Spanning-tree packings of star-product networks.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--seed", type=int, default=None, help="bijection seed (default $STARGRAPH_SEED or 0)")
        sp.add_argument("--bijection", default="shift",
                        help="identity, shift, additive, cycle, or a JSON file of permutations")

    g = sub.add_parser("generate", help="build a product and write its graphs")
    g.add_argument("spec")
    common(g)
    g.add_argument("-o", "--out", default=None)
    g.add_argument("--format", choices=("json", "dot", "both"), default="json")
    g.set_defaults(func=cmd_generate)

    e = sub.add_parser("edst", help="construct and verify spanning trees of a product")
    e.add_argument("spec")
    common(e)
    e.add_argument("--mode", choices=("auto",) + C.MODES, default="auto")
    e.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="split-search candidate budget")
    e.add_argument("-o", "--out", default=None)
    e.add_argument("--format", choices=("json", "dot", "both"), default="json")
    e.set_defaults(func=cmd_edst)

    t = sub.add_parser("table", help="network or factor table")
    t.add_argument("presets", nargs="?", default=None, help="file with one preset per line")
    common(t)
    t.add_argument("--factors", action="store_true")
    t.add_argument("--mode", choices=("auto",) + C.MODES, default="auto")
    t.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    t.add_argument("-o", "--out", default=None)
    t.add_argument("--format", choices=tuple(report.EMITTERS), default="csv")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="re-check a serialized tree set")
    v.add_argument("file")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except C.VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (InfeasibleError, C.CaseNotApplicable, C.DegenerateError, Disconnected) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
