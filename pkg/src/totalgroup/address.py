"""Graph addresses: ``family:params``, ``file:path`` or a catalog name."""

from __future__ import annotations

import os

from .catalog import OUTERPLANAR, PLANE, plane_cycle, plane_fan, plane_prism, plane_wheel
from .derived import DerivedGraph, line_graph, total_graph
from .graph import FAMILIES, Graph, GraphError, generate, graph_from_json, load_graph_json
from .plane import PlaneGraph, plane_from_json, tree_plane

PLANE_FAMILIES = {
    "cycle": plane_cycle,
    "wheel": plane_wheel,
    "fan": plane_fan,
    "prism": plane_prism,
}


class AddressError(ValueError):
    pass


def _split(address: str) -> tuple[str, list[int]]:
    family, _, raw = address.partition(":")
    try:
        params = [int(p) for p in raw.split(",") if p.strip()] if raw else []
    except ValueError:
        raise AddressError(f"parameters of {address!r} must be integers") from None
    return family, params


def _read_file(path: str) -> dict:
    if not os.path.exists(path):
        raise FileNotFoundError(path)
    try:
        return load_graph_json(path)
    except ValueError as exc:
        raise AddressError(f"cannot parse {path}: {exc}") from exc


def parse_graph(address: str) -> Graph:
    if address.startswith("file:"):
        data = _read_file(address[5:])
        return graph_from_json(data)
    family, params = _split(address)
    if family in FAMILIES and (params or ":" in address):
        g = generate(family, *params)
        return g
    catalog = {**OUTERPLANAR, **PLANE}
    if address in catalog:
        return catalog[address]().graph
    raise AddressError(f"unknown graph address {address!r}")


def parse_plane(address: str) -> PlaneGraph:
    """Like :func:`parse_graph`, but the result must carry a rotation system."""
    if address.startswith("file:"):
        return plane_from_json(_read_file(address[5:]))
    catalog = {**OUTERPLANAR, **PLANE}
    if address in catalog:
        return catalog[address]()
    family, params = _split(address)
    if family in PLANE_FAMILIES:
        return PLANE_FAMILIES[family](*params)
    g = parse_graph(address)
    if g.m == g.n - len(g.components()):
        return tree_plane(g)
    raise AddressError(f"{address!r} has no known drawing; pass file:path with a rotation")


def derive(g: Graph, mode: str | None) -> tuple[Graph, DerivedGraph | None]:
    if mode in (None, "", "none"):
        return g, None
    if mode == "total":
        d = total_graph(g)
    elif mode == "line":
        d = line_graph(g)
    else:
        raise AddressError(f"unknown derived graph {mode!r}")
    return d.graph, d


__all__ = ["AddressError", "GraphError", "derive", "parse_graph", "parse_plane"]
