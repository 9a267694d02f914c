"""End-to-end certificates for the two witness families."""

from __future__ import annotations

import time
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Dict, Optional

from . import __version__
from .constructions import (FlagAdjacencyVariant, flag_graph, hamming2,
                            predicted_params)
from .errors import BudgetExceeded
from .graphcore import Graph, diameter, girth, is_connected, regularity
from .projgeom import build_geometry
from .transitivity import (brute_force_arc_transitive,
                           brute_force_vertex_transitive, frobenius_generator,
                           gl_generators, hamming_generators,
                           induced_flag_perm, orbit_certificate)

__all__ = ["Certificate", "certify", "build_family", "family_meta", "parse_params"]

GROUP = "group-certified"
ORACLE = "oracle-certified"
UNVERIFIED = "unverified"

MODES = ("orbit", "brute", "both")


@dataclass
class Certificate:
    family: str
    params: Dict[str, object]
    order: int
    degree: object
    is_regular: bool
    diameter: Optional[int]
    girth: Optional[int]
    connected: bool
    vertex_transitive: str
    arc_transitive: str
    vertex_orbit_count: Optional[int]
    arc_orbit_count: Optional[int]
    generators_used: Optional[int]
    oracle_vertex_transitive: Optional[bool]
    oracle_arc_transitive: Optional[bool]
    predicted_order: int
    predicted_degree: int
    match: bool
    checks: Dict[str, Optional[bool]]
    tool_version: str = __version__
    timing: Optional[Dict[str, float]] = field(default=None)

    @property
    def passed(self) -> bool:
        return all(v for v in self.checks.values() if v is not None)

    def to_dict(self) -> "OrderedDict[str, object]":
        keys = ["family", "params", "order", "degree", "is_regular", "diameter",
                "girth", "connected", "vertex_transitive", "arc_transitive",
                "vertex_orbit_count", "arc_orbit_count", "generators_used",
                "oracle_vertex_transitive", "oracle_arc_transitive",
                "predicted_order", "predicted_degree", "match", "checks",
                "passed", "tool_version", "timing"]
        out = OrderedDict()
        for k in keys:
            v = getattr(self, k)
            out[k] = list(v) if isinstance(v, tuple) else v
        return out


def family_meta(family: str, params: Dict[str, object]) -> Dict[str, str]:
    return {"family": family,
            "params": " ".join(f"{k}={v}" for k, v in params.items())}


def parse_params(family: str, text: str) -> Dict[str, object]:
    raw = dict(item.split("=", 1) for item in text.split())
    if family == "hamming2":
        return {"q": int(raw["q"])}
    return {"d": int(raw["d"]), "q": int(raw["q"]),
            "variant": FlagAdjacencyVariant.parse(raw.get("variant", "degree-consistent")).value}


def build_family(family: str, params: Dict[str, object]) -> Graph:
    if family == "hamming2":
        return hamming2(params["q"])
    if family == "flag_graph":
        return flag_graph(params["d"], params["q"], params["variant"])
    raise ValueError(f"unknown family {family!r}")


def _predicted(family, params):
    if family == "hamming2":
        q = params["q"]
        return q * q, 2 * (q - 1)
    return predicted_params(params["d"], params["q"])


def _generators(family, params, graph, frobenius):
    if family == "hamming2":
        return hamming_generators(params["q"], graph)
    d, q = params["d"], params["q"]
    geom = build_geometry(d, q)
    gens = gl_generators(d, q)
    if frobenius:
        fg = frobenius_generator(d, q)
        if fg is not None:
            gens.append(fg)
    return [induced_flag_perm(g, geom) for g in gens]


def _level(group: Optional[bool], oracle: Optional[bool]) -> str:
    if group:
        return GROUP
    if oracle:
        return ORACLE
    return UNVERIFIED


def certify(family: str, params: Dict[str, object], mode: str = "orbit",
            budget: int = 120, frobenius: bool = False,
            graph: Optional[Graph] = None) -> Certificate:
    """Build (unless ``graph`` is given) and certify one family member.

    Raises BudgetExceeded when ``mode`` includes the brute-force oracle and
    the graph is larger than ``budget``.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    timing = {}
    t0 = time.perf_counter()
    g = build_family(family, params) if graph is None else graph
    timing["build"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    connected = is_connected(g)
    reg, deg = regularity(g)
    diam = diameter(g) if connected else None
    gir = girth(g)
    timing["metrics"] = time.perf_counter() - t0

    vcount = acount = ngens = None
    if mode in ("orbit", "both"):
        t0 = time.perf_counter()
        oc = orbit_certificate(g, _generators(family, params, g, frobenius))
        vcount, acount, ngens = oc.vertex_orbit_count, oc.arc_orbit_count, oc.generators_used
        timing["orbit"] = time.perf_counter() - t0

    o_vt = o_at = None
    if mode in ("brute", "both"):
        t0 = time.perf_counter()
        if g.n > budget:
            raise BudgetExceeded(f"graph has {g.n} vertices, budget is {budget}")
        o_at = brute_force_arc_transitive(g, budget)
        o_vt = True if o_at and g.num_edges else brute_force_vertex_transitive(g, budget)
        timing["brute"] = time.perf_counter() - t0

    p_order, p_degree = _predicted(family, params)
    match = reg and g.n == p_order and deg == p_degree
    at = _level(acount == 1 if acount is not None else None, o_at)
    checks = OrderedDict([
        ("order_degree_match", match),
        ("diameter_2", diam == 2),
        ("girth_3", gir == 3 if family == "flag_graph" else None),
        ("arc_transitive", at != UNVERIFIED),
    ])
    return Certificate(
        family=family,
        params=dict(params),
        order=g.n,
        degree=deg,
        is_regular=reg,
        diameter=diam,
        girth=gir,
        connected=connected,
        vertex_transitive=_level(vcount == 1 if vcount is not None else None, o_vt),
        arc_transitive=at,
        vertex_orbit_count=vcount,
        arc_orbit_count=acount,
        generators_used=ngens,
        oracle_vertex_transitive=o_vt,
        oracle_arc_transitive=o_at,
        predicted_order=p_order,
        predicted_degree=p_degree,
        match=match,
        checks=dict(checks),
        timing={k: round(v, 6) for k, v in timing.items()},
    )
