"""Show which lower bound does the work for a few non-cyclic graphs.

Euler-type bounds use only V, E and girth.  Obstruction bounds look for a
large clique or complete bipartite subgraph and carry the vertices as a
witness that can be re-checked.
"""
from noncyclic.bounds import best_lower_bound, euler_lower_bound, obstruction_lower_bound
from noncyclic.catalog import get_group
from noncyclic.graphs import build_noncyclic_graph

GROUPS = ["Z2xZ4", "Z3^2", "Z2xZ6", "D10", "Z2^4", "Q16"]


def main():
    for name in GROUPS:
        g = build_noncyclic_graph(get_group(name))
        print(f"{name}: V={g.vertex_count} E={g.edge_count}")
        for orientable in (True, False):
            label = "genus    " if orientable else "crosscaps"
            e = euler_lower_bound(g, orientable)
            o = obstruction_lower_bound(g, orientable)
            best = best_lower_bound(g, orientable)
            print(f"  {label} euler>={e.bound_value} ({e.detail}); obstruction>={o.bound_value} ({o.detail}); "
                  f"best: {best.bound_value} via {best.provenance}")


if __name__ == "__main__":
    main()
