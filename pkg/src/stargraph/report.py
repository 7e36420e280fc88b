"""Network and factor tables, computed from constructed graphs.

The published closed forms sit next to the computed numbers as ``printed_*``
columns, and ``mismatch`` lists every column where the two disagree.
"""

from __future__ import annotations

import csv
import io
import json

from . import constructions as C
from .bounds import bound_report
from .factors import factor_stats, generate, mms_class
from .graph import GraphError
from .packing import max_edst_pack
from .star import BadPreset, build_preset

DEFAULT_PRESETS = (
    "slimfly:3",
    "slimfly:4",
    "slimfly:5",
    "slimfly:7",
    "bundlefly:3,5",
    "bundlefly:4,5",
    "polarstar:2,qr:5",
    "polarstar:3,qr:5",
    "polarstar:2,iq:3",
    "polarstar:3,iq:3",
    "polarstar:2,iq:4",
    "petersen",
)

DEFAULT_FACTORS = (
    ("paley", 5), ("paley", 13),
    ("kqq", 3), ("kqq", 4), ("kqq", 5),
    ("er", 2), ("er", 3),
    ("iq", 3), ("iq", 4),
    ("bdf", 3), ("bdf", 4),
    ("km", 4), ("km", 5),
    ("mms", 4), ("mms", 5), ("mms", 7),
)

COMPARED = ("degree", "tau", "t_s", "r_s", "t_n", "r_n", "condition", "constructed", "max")

NETWORK_COLUMNS = (
    "preset", "network", "parameters", "vertices", "edges", "degree", "tau", "sigma",
    "t_s", "r_s", "t_n", "r_n", "mode", "condition", "constructed", "verdict", "max",
    *(f"printed_{c}" for c in COMPARED), "mismatch", "error",
)

FACTOR_COLUMNS = (
    "factor", "parameter", "vertices", "edges", "degree", "t", "r", "t_formula", "r_formula",
    "printed_V", "printed_E", "printed_t", "printed_r", "agrees", "mismatch",
)


def printed_network_row(label: str, params: dict) -> dict | None:
    """The published closed-form cells for a preset, or None when no row covers it."""
    if label == "slimfly":
        k, delta = mms_class(params["q"])
        if delta == -1:
            cells = (6 * k, 3 * k, 2 * k, 6 * k + 1, k, k, C.BOTH_AT_LEAST, 3 * k)
        elif delta == 0:
            cells = (6 * k, 3 * k, 2 * k, 2 * k, k, k, C.BOTH_EQUAL, 3 * k)
        else:
            cells = (6 * k - 1, 3 * k - 1, 2 * k - 1, 6 * k - 2, k, k, C.BOTH_AT_LEAST, 3 * k - 1)
        return dict(zip(COMPARED, cells + ("Yes",)))
    if label == "bundlefly":
        q, a = params["q"], params["a"]
        if a % 4 != 1:
            return None
        ell, delta = mms_class(q)
        k = (a - 1) // 4
        if delta == 1:
            cells = (6 * ell + 2 * k, 3 * ell + k, 3 * ell, q * q + 3 * ell, k, k, C.BOTH_AT_LEAST, 3 * ell + k)
        elif delta == 0:
            cells = (6 * ell + 2 * k, 3 * ell + k, 3 * ell, 3 * ell, k, k, C.BOTH_EQUAL, 3 * ell + k)
        else:
            cells = (6 * ell + 2 * k - 1, 3 * ell + k - 1, 3 * ell - 1, q * q + 3 * ell - 1, k, k,
                     C.BOTH_AT_LEAST, 3 * ell + k - 1)
        return dict(zip(COMPARED, cells + ("Yes",)))
    if label.startswith("polarstar"):
        q = params["q"]
        ts, rs = (q // 2, q * (q + 1) // 2) if q % 2 == 0 else ((q + 1) // 2, 0)
        cond = C.BOTH_AT_LEAST if q % 2 == 0 else C.ONE_AT_LEAST
        if "qr" in params:
            k = (params["qr"] - 1) // 4
            tau = q // 2 + k
            return dict(zip(COMPARED, (None, tau, ts, rs, k, k, cond, tau, "Yes")))
        d = params["iq"]
        tn, rn = (d // 2, d // 2) if d % 4 == 0 else ((d - 1) // 2, (3 * d + 1) // 2)
        tau = (q + d) // 2
        if q % 2 == 1 and d % 4 == 3:
            return dict(zip(COMPARED, (None, tau, ts, rs, tn, rn, cond, tau - 1, "Maybe")))
        return dict(zip(COMPARED, (None, tau, ts, rs, tn, rn, cond, tau, "Yes")))
    return None


def _max_cell(verdict: str) -> str:
    return "Yes" if verdict == "Max" else "Maybe"


def network_row(preset: str, mode: str = "auto", bijection: str = "shift", seed: int = 0,
                budget: int = C.DEFAULT_BUDGET) -> dict:
    row = dict.fromkeys(NETWORK_COLUMNS, "")
    row["preset"] = preset
    try:
        sp = build_preset(preset, bijection, seed)
        sd, nd = max_edst_pack(sp.structure), max_edst_pack(sp.supernode)
        ts = C.construct(sp, mode, sd, nd, budget)
        br = bound_report(sp.product, sp.structure, sp.supernode, ts.count, ts.mode, sd.t, nd.t)
    except (BadPreset, ValueError, GraphError) as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
        return row
    deg = sp.product.regular_degree()
    row.update(
        network=sp.label,
        parameters=";".join(f"{k}={v}" for k, v in sp.params.items() if k in ("q", "a", "qr", "iq")),
        vertices=sp.product.n,
        edges=sp.product.num_edges,
        degree=deg if deg is not None else "",
        tau=br.tau,
        sigma=br.sigma,
        t_s=sd.t, r_s=sd.r, t_n=nd.t, r_n=nd.r,
        mode=ts.mode,
        condition=ts.condition,
        constructed=ts.count,
        verdict=br.verdict,
        max=_max_cell(br.verdict),
    )
    printed = printed_network_row(sp.label, sp.params)
    if printed is not None:
        bad = []
        for col in COMPARED:
            value = printed[col]
            row[f"printed_{col}"] = "" if value is None else value
            if value is not None and value != row[col]:
                bad.append(col)
        row["mismatch"] = ";".join(bad)
    return row


def network_table(presets=DEFAULT_PRESETS, mode: str = "auto", bijection: str = "shift", seed: int = 0,
                  budget: int = C.DEFAULT_BUDGET) -> list[dict]:
    return [network_row(p, mode, bijection, seed, budget) for p in presets]


def factor_row(name: str, param: int) -> dict:
    stats = factor_stats(name, {"param": param})
    d = max_edst_pack(generate(stats.name, param))
    row = {
        "factor": stats.name, "parameter": param,
        "vertices": stats.vertex_count, "edges": stats.edge_count,
        "degree": "" if stats.degree_if_regular is None else stats.degree_if_regular,
        "t": d.t, "r": d.r, "t_formula": stats.t_formula, "r_formula": stats.r_formula,
        "agrees": (d.t, d.r) == (stats.t_formula, stats.r_formula),
    }
    for col in ("V", "E", "t", "r"):
        row[f"printed_{col}"] = stats.printed.get(col, "")
    row["mismatch"] = ";".join(f"{k}:{p}->{v}" for k, (p, v) in sorted(stats.mismatches.items()))
    return row


def factor_table(entries=DEFAULT_FACTORS) -> list[dict]:
    return [factor_row(n, p) for n, p in entries]


def to_csv(rows: list[dict], columns) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def to_json(rows: list[dict], columns) -> str:
    return json.dumps({"columns": list(columns), "rows": rows}, indent=1, sort_keys=True) + "\n"


def to_markdown(rows: list[dict], columns) -> str:
    cols = list(columns)
    lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
    for r in rows:
        lines.append("| " + " | ".join(str(r.get(c, "")) for c in cols) + " |")
    return "\n".join(lines) + "\n"


EMITTERS = {"csv": to_csv, "json": to_json, "md": to_markdown}
