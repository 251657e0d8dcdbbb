"""JSON and DOT encodings of tilting quivers, plus parsers for round trips.

JSON layout::

    {"algebra": {"n": 4, "arrows": [{"name": "a", "source": 1, "target": 2}, ...]},
     "side": "lambda" | "b0",
     "vertices": [{"id": 0, "summands": [[0,0,0,1], ...], "tags": "TT"}, ...],
     "arrows": [{"from": 0, "to": 1}, ...]}

Summands are dimension vectors, which name indecomposables uniquely over a
Dynkin quiver.  On the B0 side ``summands`` lists the H-part and
``x_summands`` the E-part.
"""
from __future__ import annotations

import json
import re
from typing import Any, Sequence

from .bb import BModule
from .quiver import Arrow, Quiver
from .tilting import IndTable, TiltingModule, TiltingQuiver, build_ind_table

__all__ = [
    "quiver_to_json",
    "quiver_from_json",
    "tilting_quiver_to_json",
    "tilting_quiver_from_json",
    "dumps",
    "to_dot",
    "parse_dot",
    "node_name",
]


def quiver_to_json(q: Quiver) -> dict[str, Any]:
    return {"n": q.n, "arrows": [{"name": a.name, "source": a.source, "target": a.target} for a in q.arrows]}


def quiver_from_json(data: dict[str, Any]) -> Quiver:
    return Quiver(int(data["n"]), tuple(Arrow(a["name"], int(a["source"]), int(a["target"])) for a in data["arrows"]))


def _dims(tbl: IndTable, ids: Sequence[int]) -> list[list[int]]:
    return [list(tbl.dims(k)) for k in ids]


def tilting_quiver_to_json(tbl: IndTable, tq: TiltingQuiver) -> dict[str, Any]:
    b_side = bool(tq.vertices) and isinstance(tq.vertices[0], BModule)
    vertices = []
    for k, v in enumerate(tq.vertices):
        entry: dict[str, Any] = {"id": k}
        if isinstance(v, BModule):
            entry["summands"] = _dims(tbl, v.y_part)
            entry["x_summands"] = _dims(tbl, v.x_part)
        else:
            entry["summands"] = _dims(tbl, v.ids)
        entry["tags"] = tq.tags[k] if tq.tags is not None else ""
        vertices.append(entry)
    return {
        "algebra": quiver_to_json(tbl.quiver),
        "side": "b0" if b_side else "lambda",
        "vertices": vertices,
        "arrows": [{"from": u, "to": v} for u, v in tq.arrows],
    }


def tilting_quiver_from_json(data: dict[str, Any], tbl: IndTable | None = None) -> TiltingQuiver:
    """Inverse of ``tilting_quiver_to_json`` (the order table is not stored)."""
    q = quiver_from_json(data["algebra"])
    if tbl is None:
        tbl = build_ind_table(q)
    elif tbl.quiver != q:
        raise ValueError("table belongs to a different quiver")
    b_side = data.get("side") == "b0"
    vertices: list[Any] = []
    tags = []
    for entry in sorted(data["vertices"], key=lambda e: e["id"]):
        ys = [tbl.id_of(d) for d in entry["summands"]]
        if b_side:
            vertices.append(BModule(tuple(ys), tuple(tbl.id_of(d) for d in entry.get("x_summands", []))))
        else:
            vertices.append(TiltingModule(tuple(ys)))
        tags.append(entry.get("tags", ""))
    arrows = tuple((int(a["from"]), int(a["to"])) for a in data["arrows"])
    return TiltingQuiver(tuple(vertices), arrows, None, tuple(tags) if any(tags) else None)


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


# -- DOT ---------------------------------------------------------------------------


def _vec(d: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in d) + ")"


def node_name(tbl: IndTable, v: TiltingModule | BModule) -> str:
    """Canonical node name: the summand dimension vectors in id order."""
    if isinstance(v, BModule):
        parts = [f"H{_vec(tbl.dims(k))}" for k in v.y_part] + [f"E{_vec(tbl.dims(k))}" for k in v.x_part]
    else:
        parts = [_vec(tbl.dims(k)) for k in v.ids]
    return " ".join(parts)


def to_dot(tbl: IndTable, tq: TiltingQuiver, name: str = "tilting") -> str:
    lines = [f"digraph {name} {{"]
    names = [node_name(tbl, v) for v in tq.vertices]
    for k, nm in enumerate(names):
        tag = tq.tags[k] if tq.tags is not None else ""
        attr = f' [tag="{tag}"]' if tag else ""
        lines.append(f'  "{nm}"{attr};')
    for u, v in tq.arrows:
        lines.append(f'  "{names[u]}" -> "{names[v]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


_NODE = re.compile(r'^\s*"([^"]*)"(?:\s*\[tag="([^"]*)"\])?\s*;\s*$')
_EDGE = re.compile(r'^\s*"([^"]*)"\s*->\s*"([^"]*)"\s*;\s*$')


def parse_dot(text: str) -> tuple[list[str], dict[str, str], list[tuple[str, str]]]:
    """Nodes (in order), their tags and the edges of a DOT file written by ``to_dot``."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not re.match(r"^digraph\s+\w+\s*\{$", lines[0]) or lines[-1].strip() != "}":
        raise ValueError("not a digraph written by to_dot")
    nodes: list[str] = []
    tags: dict[str, str] = {}
    edges: list[tuple[str, str]] = []
    for ln in lines[1:-1]:
        m = _EDGE.match(ln)
        if m:
            if m.group(1) not in tags or m.group(2) not in tags:
                raise ValueError(f"edge between undeclared nodes: {ln!r}")
            edges.append((m.group(1), m.group(2)))
            continue
        m = _NODE.match(ln)
        if not m:
            raise ValueError(f"unrecognised DOT line {ln!r}")
        nodes.append(m.group(1))
        tags[m.group(1)] = m.group(2) or ""
    return nodes, tags, edges
