"""Lower bounds on genus: closed formulas for complete (multipartite) graphs,
Euler-characteristic bounds from girth, and bounds from complete or complete
bipartite subgraphs.

All arithmetic is on integers; ``_ceil_div`` is the only rounding used.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import SimpleGraph, SubgraphWitness, find_clique, find_complete_bipartite, girth


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def formula_genus(family: str, *params: int) -> int:
    """Orientable genus of ``K_n``, ``K_mn``, ``K_nnn`` or ``K_nnnn``."""
    if family == "K_n":
        (n,) = params
        if n < 3:
            raise ValueError("K_n formula needs n >= 3")
        return _ceil_div((n - 3) * (n - 4), 12)
    if family == "K_mn":
        m, n = params
        if m < 2 or n < 2:
            raise ValueError("K_mn formula needs m, n >= 2")
        return _ceil_div((m - 2) * (n - 2), 4)
    if family == "K_nnn":
        (n,) = params
        if n < 1:
            raise ValueError("K_nnn formula needs n >= 1")
        return (n - 1) * (n - 2) // 2
    if family == "K_nnnn":
        (n,) = params
        if n < 1:
            raise ValueError("K_nnnn formula needs n >= 1")
        return 5 if n == 3 else (n - 1) ** 2
    raise ValueError(f"unknown family {family!r}")


def formula_nonorientable_genus(family: str, *params: int) -> int:
    """Nonorientable genus of ``K_n`` (with the K7 exception) or ``K_mn``."""
    if family == "K_n":
        (n,) = params
        if n < 3:
            raise ValueError("K_n formula needs n >= 3")
        return 3 if n == 7 else _ceil_div((n - 3) * (n - 4), 6)
    if family == "K_mn":
        m, n = params
        if m < 2 or n < 2:
            raise ValueError("K_mn formula needs m, n >= 2")
        return _ceil_div((m - 2) * (n - 2), 2)
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class BoundReport:
    bound_value: int
    orientable: bool
    provenance: str  # euler_formula | obstruction_subgraph | closed_formula | exhaustive_search
    witness: SubgraphWitness | None = None
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "bound_value": self.bound_value,
            "orientable": self.orientable,
            "provenance": self.provenance,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "detail": self.detail,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "BoundReport":
        w = d.get("witness")
        return cls(d["bound_value"], d["orientable"], d["provenance"],
                   None if w is None else SubgraphWitness.from_dict(w), d.get("detail", ""))


def euler_lower_bound(graph: SimpleGraph, orientable: bool = True) -> BoundReport:
    """Bound from ``g * F <= 2E`` and ``V - E + F = chi``.

    Girths above 5 are clamped to 3 and forests give 0.
    """
    if not graph.is_connected():
        raise ValueError("Euler bound needs a connected graph")
    V, E = graph.vertex_count, graph.edge_count
    g = girth(graph)
    if g == math.inf:
        return BoundReport(0, orientable, "euler_formula", None, "forest")
    g = int(g)
    if g > 5:
        g = 3
    # F <= 2E/g, so Euler genus >= E - V + 2 - 2E/g = (E(g-2) - g(V-2)) / g
    num = E * (g - 2) - g * (V - 2)
    if orientable:
        value = max(0, _ceil_div(num, 2 * g))
    else:
        value = max(0, _ceil_div(num, g))
    return BoundReport(value, orientable, "euler_formula", None, f"V={V} E={E} girth={g}")


# (kind, parameters) in the order the search visits them
OBSTRUCTION_MENU = [
    ("clique", (9,)),
    ("clique", (8,)),
    ("clique", (7,)),
    ("bipartite", (6, 4)),
    ("bipartite", (4, 5)),
    ("bipartite", (5, 4)),
    ("bipartite", (4, 4)),
    ("bipartite", (3, 3)),
]


def _menu_bound(kind, params, orientable):
    if kind == "clique":
        f = formula_genus if orientable else formula_nonorientable_genus
        return f("K_n", *params)
    f = formula_genus if orientable else formula_nonorientable_genus
    return f("K_mn", *params)


def obstruction_lower_bound(graph: SimpleGraph, orientable: bool = True,
                            search_limits: dict | None = None) -> BoundReport:
    """Best bound from a complete or complete bipartite subgraph on the menu.

    ``search_limits`` may carry ``max_vertices``: graphs above it are not
    scanned (bound 0).
    """
    limits = search_limits or {}
    max_vertices = limits.get("max_vertices")
    if max_vertices is not None and graph.vertex_count > max_vertices:
        return BoundReport(0, orientable, "obstruction_subgraph", None, "graph above search limit")
    menu = sorted(OBSTRUCTION_MENU, key=lambda item: -_menu_bound(item[0], item[1], orientable))
    for kind, params in menu:
        value = _menu_bound(kind, params, orientable)
        if value <= 0:
            break
        if kind == "clique":
            w = find_clique(graph, params[0])
            name = f"K{params[0]}"
        else:
            w = find_complete_bipartite(graph, *params)
            name = f"K{params[0]},{params[1]}"
        if w is not None:
            assert w.validate(graph)
            return BoundReport(value, orientable, "obstruction_subgraph", w, f"contains {name}")
    return BoundReport(0, orientable, "obstruction_subgraph", None, "no menu subgraph found")


def best_lower_bound(graph: SimpleGraph, orientable: bool = True,
                     search_limits: dict | None = None) -> BoundReport:
    """Larger of the Euler and obstruction bounds; ties go to the Euler bound."""
    e = euler_lower_bound(graph, orientable)
    o = obstruction_lower_bound(graph, orientable, search_limits)
    return o if o.bound_value > e.bound_value else e
