"""Plain-text edge lists.

Header lines start with ``#`` and carry ``key: value`` metadata plus one
``# label <v> <text>`` line per vertex; each body line is ``u v`` with
``u < v``, sorted.  UTF-8, LF line endings.
"""

from __future__ import annotations

import json
from typing import Dict, List, Tuple

from .graphcore import Graph, from_edges

__all__ = ["format_edgelist", "parse_edgelist", "format_json"]


def format_edgelist(g: Graph, meta: Dict[str, str]) -> str:
    lines = [f"# {k}: {v}" for k, v in meta.items()]
    lines.append(f"# order: {g.n}")
    lines.append(f"# edges: {g.num_edges}")
    for v in range(g.n):
        lines.append(f"# label {v} {g.label(v)}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Tuple[Graph, Dict[str, str]]:
    meta: Dict[str, str] = {}
    labels: Dict[int, str] = {}
    edges: List[Tuple[int, int]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("label "):
                _, v, lab = body.split(" ", 2)
                labels[int(v)] = lab
            elif ":" in body:
                k, v = body.split(":", 1)
                meta[k.strip()] = v.strip()
            continue
        u, v = line.split()
        edges.append((int(u), int(v)))
    if "order" in meta:
        n = int(meta["order"])
    else:
        n = 1 + max((max(e) for e in edges), default=-1)
    lab = [labels.get(v, str(v)) for v in range(n)] if labels else None
    g = from_edges(n, edges, lab)
    if "edges" in meta and int(meta["edges"]) != g.num_edges:
        raise ValueError("edge count in header does not match body")
    return g, meta


def format_json(g: Graph, meta: Dict[str, str]) -> str:
    doc = {
        **meta,
        "order": g.n,
        "labels": [g.label(v) for v in range(g.n)],
        "edges": [list(e) for e in g.edges()],
    }
    return json.dumps(doc, indent=1) + "\n"
