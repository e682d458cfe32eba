"""Simple graphs on bitset adjacency, the non-cyclic graph builder, and
searches for complete and complete bipartite subgraphs.

Vertices are ``0..n-1``; ``adj[v]`` is an int whose bit ``u`` is set when
``u`` and ``v`` are adjacent.
"""
from __future__ import annotations

import itertools
import json
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .groups import Group, cyclicizer, is_cyclic_group, is_cyclic_subset


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class SimpleGraph:
    """Undirected graph without loops or multiple edges."""

    __slots__ = ("labels", "adj", "edge_count")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels: Sequence[str] | None = None):
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise IndexError(f"edge ({u}, {v}) out of range")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.adj = tuple(adj)
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        if len(self.labels) != n:
            raise ValueError("label count differs from vertex count")
        self.edge_count = sum(a.bit_count() for a in adj) // 2

    @property
    def vertex_count(self) -> int:
        return len(self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.vertex_count) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.vertex_count):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            comps.append(list(_bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def __eq__(self, other):
        return isinstance(other, SimpleGraph) and self.adj == other.adj and self.labels == other.labels

    def __hash__(self):
        return hash((self.adj, self.labels))

    def __repr__(self):
        return f"SimpleGraph(V={self.vertex_count}, E={self.edge_count})"


def build_noncyclic_graph(G: Group) -> SimpleGraph:
    """The graph on ``G \\ Cyc(G)`` joining pairs that generate a non-cyclic subgroup."""
    if is_cyclic_group(G):
        raise ValueError(f"{G.name} is cyclic; its non-cyclic graph has no vertices")
    cyc = cyclicizer(G)
    verts = [g for g in G.elements if g not in cyc]
    edges = [(i, j) for i, j in itertools.combinations(range(len(verts)), 2)
             if not is_cyclic_subset(G, (verts[i], verts[j]))]
    return SimpleGraph(len(verts), edges, [G.element_names[g] for g in verts])


def noncyclic_vertex_elements(G: Group) -> list[int]:
    """Group element behind each vertex of :func:`build_noncyclic_graph`."""
    cyc = cyclicizer(G)
    return [g for g in G.elements if g not in cyc]


def complete_graph(n: int) -> SimpleGraph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return SimpleGraph(n, itertools.combinations(range(n), 2))


def complete_multipartite(part_sizes: Sequence[int]) -> SimpleGraph:
    if not part_sizes:
        raise ValueError("need at least one part")
    if any(s < 1 for s in part_sizes):
        raise ValueError("part sizes must be >= 1")
    part = [i for i, s in enumerate(part_sizes) for _ in range(s)]
    n = len(part)
    return SimpleGraph(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if part[u] != part[v]])


def complete_bipartite(m: int, n: int) -> SimpleGraph:
    return complete_multipartite([m, n])


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)])


@dataclass(frozen=True)
class SubgraphWitness:
    kind: str  # "clique" | "complete_bipartite" | "complete_multipartite"
    vertex_parts: tuple[tuple[int, ...], ...]

    def validate(self, graph: SimpleGraph) -> bool:
        parts = self.vertex_parts
        flat = [v for p in parts for v in p]
        if len(set(flat)) != len(flat) or not all(0 <= v < graph.vertex_count for v in flat):
            return False
        if self.kind == "clique":
            if len(parts) != 1:
                return False
            return all(graph.has_edge(u, v) for u, v in itertools.combinations(parts[0], 2))
        if self.kind == "complete_bipartite" and len(parts) != 2:
            return False
        if self.kind not in ("complete_bipartite", "complete_multipartite"):
            return False
        return all(graph.has_edge(u, v)
                   for p, q in itertools.combinations(parts, 2) for u in p for v in q)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "vertex_parts": [list(p) for p in self.vertex_parts]}

    @classmethod
    def from_dict(cls, d: dict) -> "SubgraphWitness":
        return cls(d["kind"], tuple(tuple(p) for p in d["vertex_parts"]))


def find_clique(graph: SimpleGraph, k: int) -> SubgraphWitness | None:
    """Lexicographically first ``k``-clique, or ``None``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    adj = graph.adj
    n = graph.vertex_count
    cand0 = 0
    for v in range(n):
        if adj[v].bit_count() >= k - 1:
            cand0 |= 1 << v
    chosen: list[int] = []

    def extend(cand: int) -> bool:
        if len(chosen) == k:
            return True
        need = k - len(chosen)
        while cand and cand.bit_count() >= need:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            chosen.append(v)
            if extend(cand & adj[v]):
                return True
            chosen.pop()
        return False

    if extend(cand0):
        return SubgraphWitness("clique", (tuple(chosen),))
    return None


def find_complete_bipartite(graph: SimpleGraph, m: int, n: int) -> SubgraphWitness | None:
    """First ``K_{m,n}`` subgraph: side ``A`` of size m (lexicographically first
    m-subset admitting a partner), then the ``n`` smallest common neighbours."""
    if m < 1 or n < 1:
        raise ValueError("part sizes must be >= 1")
    adj = graph.adj
    N = graph.vertex_count
    chosen: list[int] = []

    def extend(start: int, common: int) -> int | None:
        if len(chosen) == m:
            return common if common.bit_count() >= n else None
        for v in range(start, N - (m - len(chosen)) + 1):
            if adj[v].bit_count() < n:
                continue
            c = common & adj[v]
            if c.bit_count() < n:
                continue
            chosen.append(v)
            r = extend(v + 1, c)
            if r is not None:
                return r
            chosen.pop()
        return None

    common = extend(0, (1 << N) - 1)
    if common is None:
        return None
    B = list(itertools.islice(_bits(common), n))
    return SubgraphWitness("complete_bipartite", (tuple(chosen), tuple(B)))


def is_complete_multipartite(graph: SimpleGraph) -> list[list[int]] | None:
    """Partition into independent parts when the complement is a union of
    cliques; parts sorted by (size, smallest vertex)."""
    n = graph.vertex_count
    full = (1 << n) - 1
    parts = []
    assigned = 0
    for v in range(n):
        if assigned >> v & 1:
            continue
        part = (full & ~graph.adj[v])
        for u in _bits(part):
            if (full & ~graph.adj[u]) != part:
                return None
        assigned |= part
        parts.append(list(_bits(part)))
    return sorted(parts, key=lambda p: (len(p), p[0]))


def girth(graph: SimpleGraph) -> float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    best = math.inf
    n = graph.vertex_count
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for u in _bits(graph.adj[v]):
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    q.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def distance_matrix(graph: SimpleGraph) -> list[list[int]]:
    """All-pairs BFS distances; ``-1`` between components."""
    n = graph.vertex_count
    out = []
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for u in _bits(graph.adj[v]):
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    q.append(u)
        out.append(dist)
    return out


def induced_subgraph(graph: SimpleGraph, vertices: Iterable[int]) -> SimpleGraph:
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < graph.vertex_count:
            raise IndexError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(vs)}
    edges = [(pos[u], pos[v]) for u, v in itertools.combinations(vs, 2) if graph.has_edge(u, v)]
    return SimpleGraph(len(vs), edges, [graph.labels[v] for v in vs])


def export_dot(graph: SimpleGraph, name: str = "G") -> str:
    lines = [f"graph {json.dumps(name)} {{"]
    for v, lab in enumerate(graph.labels):
        lines.append(f"  {v} [label={json.dumps(lab)}];")
    for u, v in graph.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(graph: SimpleGraph) -> str:
    doc = {"vertices": list(graph.labels), "edges": [list(e) for e in graph.edges()]}
    return json.dumps(doc, indent=2) + "\n"


def graph_from_json(document: str | dict) -> SimpleGraph:
    doc = json.loads(document) if isinstance(document, str) else document
    try:
        labels = doc["vertices"]
        edges = [tuple(e) for e in doc["edges"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed graph document: {exc}") from None
    g = SimpleGraph(len(labels), edges, labels)
    if g.edge_count != len(edges):
        raise ValueError("graph document lists a repeated edge")
    return g
