"""Exact orientable and nonorientable genus by branch and bound over
embedding schemes, with checkable certificates.

An embedding scheme is a cyclic order of the neighbours of every vertex
(the rotation) plus a sign for every edge.  Faces are traced on *flags*
``(u -> v, e)``: the dart ``u -> v`` together with the local orientation
``e`` in force on arrival at ``v``.  The successor of ``(u -> v, +1)`` is
``(v -> w, s(vw))`` with ``w`` the rotation successor of ``u`` at ``v``; with
``e = -1`` the predecessor is used instead and the orientation flips again
across negative edges.  Each face is met by exactly two flag orbits (one per
direction), so an all-positive search can restrict itself to ``e = +1``.

The search keeps the partially traced flag orbits as chains and always
extends the longest open one, branching over the rotation successor at its
end vertex (edge signs are chosen when an edge is first crossed).  Writing ``g`` for the girth, every
face has length ``>= g`` and so ``sum(len - g) <= 2E - g * F_min`` over the
faces; chains that are already too long, or whose ends are too far apart in
the graph, overspend this budget and are cut.
"""
from __future__ import annotations

import json
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .graphs import SimpleGraph, distance_matrix, girth

__all__ = [
    "EmbeddingScheme",
    "GenusCertificate",
    "GenusResult",
    "SearchTimeout",
    "Face",
    "trace_faces",
    "count_faces",
    "decide_orientable_genus_le",
    "decide_nonorientable_genus_le",
    "orientable_genus",
    "nonorientable_genus",
    "verify_certificate",
    "is_planar",
    "is_orientable_scheme",
    "certificate_to_json",
    "certificate_from_json",
]


class SearchTimeout(Exception):
    """The wall-clock budget ran out before the decision was settled."""


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class EmbeddingScheme:
    rotations: tuple[tuple[int, ...], ...]
    signs: dict = field(default_factory=dict)  # (u, v) with u < v -> +1 / -1; missing means +1

    def sign(self, u: int, v: int) -> int:
        return self.signs.get(_edge_key(u, v), 1)

    def check(self, graph: SimpleGraph) -> None:
        if len(self.rotations) != graph.vertex_count:
            raise ValueError("one rotation per vertex required")
        for v, rot in enumerate(self.rotations):
            if sorted(rot) != graph.neighbors(v):
                raise ValueError(f"rotation at vertex {v} is not a cyclic order of its neighbours")
        for (u, v), s in self.signs.items():
            if not graph.has_edge(u, v) or u > v:
                raise ValueError(f"sign given for non-edge ({u}, {v})")
            if s not in (1, -1):
                raise ValueError(f"edge sign must be +1 or -1, got {s}")

    @classmethod
    def orientable(cls, rotations: Sequence[Sequence[int]]) -> "EmbeddingScheme":
        return cls(tuple(tuple(r) for r in rotations), {})


@dataclass(frozen=True)
class GenusCertificate:
    scheme: EmbeddingScheme
    face_count: int
    claimed_genus: int
    orientable: bool

    def to_dict(self, graph: SimpleGraph) -> dict:
        edges = graph.edges()
        return {
            "orientable": self.orientable,
            "genus": self.claimed_genus,
            "face_count": self.face_count,
            "rotations": [list(r) for r in self.scheme.rotations],
            "edges": [list(e) for e in edges],
            "signs": [self.scheme.sign(u, v) for u, v in edges],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "GenusCertificate":
        try:
            edges = [tuple(e) for e in d["edges"]]
            signs = d["signs"]
            if len(edges) != len(signs):
                raise ValueError("edges and signs differ in length")
            sign_map = {_edge_key(u, v): int(s) for (u, v), s in zip(edges, signs) if s != 1}
            scheme = EmbeddingScheme(tuple(tuple(r) for r in d["rotations"]), sign_map)
            return cls(scheme, int(d["face_count"]), int(d["genus"]), bool(d["orientable"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed certificate: {exc}") from None


def certificate_to_json(cert: GenusCertificate, graph: SimpleGraph) -> str:
    d = cert.to_dict(graph)
    # one rotation per line keeps the document diffable
    body = ",\n".join("    " + json.dumps(r) for r in d["rotations"])
    return (
        "{\n"
        f'  "orientable": {json.dumps(d["orientable"])},\n'
        f'  "genus": {d["genus"]},\n'
        f'  "face_count": {d["face_count"]},\n'
        f'  "rotations": [\n{body}\n  ],\n'
        f'  "edges": {json.dumps(d["edges"])},\n'
        f'  "signs": {json.dumps(d["signs"])}\n'
        "}\n"
    )


def certificate_from_json(document: str) -> GenusCertificate:
    try:
        d = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed certificate: {exc}") from None
    return GenusCertificate.from_dict(d)


# ---------------------------------------------------------------- tracing

@dataclass(frozen=True)
class Face:
    vertices: tuple[int, ...]  # v0, v1, ... with the walk v0 -> v1 -> ... -> v0

    def __len__(self):
        return len(self.vertices)


def trace_faces(graph: SimpleGraph, scheme: EmbeddingScheme) -> list[Face]:
    """Facial walks of ``scheme``, one per face."""
    scheme.check(graph)
    n = graph.vertex_count
    if graph.edge_count == 0:
        if n != 1:
            raise ValueError("graph must be connected")
        return [Face((0,))]
    if not graph.is_connected():
        raise ValueError("graph must be connected")
    rot = scheme.rotations
    pos = [{u: i for i, u in enumerate(r)} for r in rot]
    corners_used: set[tuple[int, int]] = set()
    faces = []
    # with no negative edge the + flags alone list every dart once, consistently oriented
    directions = (1, -1) if any(s < 0 for s in scheme.signs.values()) else (1,)
    for v0 in range(n):
        for u0 in rot[v0]:
            for e0 in directions:
                # flag (u0 -> v0, e0); its next step uses one corner of v0
                start = (u0, v0, e0)
                u, v, e = start
                d = len(rot[v])
                c = (v, pos[v][u] if e > 0 else (pos[v][u] - 1) % d)
                if c in corners_used:
                    continue
                walk = []
                while True:
                    d = len(rot[v])
                    i = pos[v][u]
                    if e > 0:
                        corner, w = i, rot[v][(i + 1) % d]
                    else:
                        corner, w = (i - 1) % d, rot[v][(i - 1) % d]
                    corners_used.add((v, corner))
                    walk.append(v)
                    u, v, e = v, w, e * scheme.sign(v, w)
                    if (u, v, e) == start:
                        break
                faces.append(Face(tuple(walk)))
    return faces


def count_faces(graph: SimpleGraph, scheme: EmbeddingScheme) -> int:
    return len(trace_faces(graph, scheme))


def _corner_face_count(graph: SimpleGraph, scheme: EmbeddingScheme) -> tuple[int, list[int]]:
    """Faces as components of the corner gluing (disjoint from :func:`trace_faces`).

    Corner ``i`` at ``v`` sits between ``rot[v][i]`` and ``rot[v][i+1]``.  An
    edge at position ``p`` of ``u`` and ``q`` of ``v`` glues corner ``p-1`` of
    ``u`` to ``q`` of ``v`` and ``p`` to ``q-1``; a negative edge glues
    ``p-1`` to ``q-1`` and ``p`` to ``q`` instead.
    """
    rot = scheme.rotations
    base = []
    total = 0
    for r in rot:
        base.append(total)
        total += len(r)
    parent = list(range(total))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for u, v in graph.edges():
        p = rot[u].index(v)
        q = rot[v].index(u)
        du, dv = len(rot[u]), len(rot[v])
        pm, qm = (p - 1) % du, (q - 1) % dv
        if scheme.sign(u, v) > 0:
            union(base[u] + pm, base[v] + q)
            union(base[u] + p, base[v] + qm)
        else:
            union(base[u] + pm, base[v] + qm)
            union(base[u] + p, base[v] + q)
    roots: dict[int, int] = {}
    for x in range(total):
        r = find(x)
        roots[r] = roots.get(r, 0) + 1
    return len(roots), sorted(roots.values())


def is_orientable_scheme(graph: SimpleGraph, scheme: EmbeddingScheme) -> bool:
    """True iff every cycle carries an even number of negative edges."""
    n = graph.vertex_count
    side = [-1] * n
    for s in range(n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in graph.neighbors(v):
                want = side[v] ^ (scheme.sign(v, w) < 0)
                if side[w] < 0:
                    side[w] = want
                    stack.append(w)
                elif side[w] != want:
                    return False
    return True


def _genus_from_faces(V: int, E: int, F: int, orientable: bool) -> int:
    chi = V - E + F
    return (2 - chi) // 2 if orientable else 2 - chi


def verify_certificate(graph: SimpleGraph, cert: GenusCertificate, explain: bool = False):
    """Re-derive the face count and genus of a certificate independently.

    Returns a bool, or ``(bool, message)`` when ``explain`` is set.
    """
    def result(ok, msg):
        return (ok, msg) if explain else ok

    try:
        cert.scheme.check(graph)
    except ValueError as exc:
        return result(False, f"malformed scheme: {exc}")
    if not graph.is_connected():
        return result(False, "graph is disconnected")
    V, E = graph.vertex_count, graph.edge_count
    if E == 0:
        F = 1
    else:
        F, _ = _corner_face_count(graph, cert.scheme)
    if F != cert.face_count:
        return result(False, f"scheme has {F} faces, certificate claims {cert.face_count}")
    orientable_scheme = is_orientable_scheme(graph, cert.scheme)
    if cert.orientable != orientable_scheme:
        return result(False, "orientability flag disagrees with the edge signs")
    chi = V - E + F
    if cert.orientable and chi % 2:
        return result(False, f"odd Euler characteristic {chi} for an orientable scheme")
    genus = _genus_from_faces(V, E, F, cert.orientable)
    if genus != cert.claimed_genus:
        return result(False, f"Euler relation gives genus {genus}, certificate claims {cert.claimed_genus}")
    return result(True, "ok")


# ---------------------------------------------------------------- search

class _Search:
    """One decision: does some scheme reach ``F >= f_min`` faces?

    Branching always extends the longest open chain: the rotation entry that
    decides the successor of its last flag is fixed next, together with any
    still-free edge signs that link needs.
    """

    def __init__(self, graph: SimpleGraph, f_min: int, orientable: bool,
                 deadline: float | None = None, first_branch: int | None = None):
        n = graph.vertex_count
        self.n = n
        self.orientable = orientable
        self.nbrs = [graph.neighbors(v) for v in range(n)]
        self.deg = [len(nb) for nb in self.nbrs]
        self.root = min(range(n), key=lambda v: (-self.deg[v], v))
        self.deadline = deadline
        self.first_branch = first_branch
        dart = {}
        tails, heads = [], []
        for u in range(n):
            for v in self.nbrs[u]:
                dart[(u, v)] = len(tails)
                tails.append(u)
                heads.append(v)
        self.dart = dart
        D = len(tails)
        mult = 1 if orientable else 2
        self.mult = mult
        nflags = D * mult
        self.nflags = nflags
        g = girth(graph)
        g = 1 if g == math.inf else int(g)
        self.g = g
        self.need = mult * f_min
        self.slack = nflags - g * self.need
        self.dist = distance_matrix(graph)
        # flag f lies on dart f // mult; orientation + when f % mult == 0
        self.ftail = [tails[f // mult] for f in range(nflags)]
        self.fhead = [heads[f // mult] for f in range(nflags)]
        self.start_of = list(range(nflags))
        self.end_of = list(range(nflags))
        self.clen = [1] * nflags
        self.fnext = [-1] * nflags
        self.faces = 0
        self.chains = nflags
        self.closed_excess = 0
        self.open_excess = 0
        self.trail: list[tuple] = []
        # partial rotations: slot d(v, u) is neighbour u in the rotation at v
        self.rsucc = [-1] * D
        self.rpred = [-1] * D
        self.pstart = list(range(D))
        self.pend = list(range(D))
        self.plen = [1] * D
        self.sign: dict[tuple[int, int], int] = {}
        self.undecided = 0
        self.negatives = 0
        if not orientable:
            root = self.root
            seen = {root}
            queue = [root]
            while queue:
                v = queue.pop(0)
                for w in self.nbrs[v]:
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
                        self.sign[_edge_key(v, w)] = 1
            self.undecided = graph.edge_count - len(self.sign)
        self.nodes = 0
        self.solution = None

    # -- flags and chains ----------------------------------------------------
    def _flag(self, u, v, e):
        d = self.dart[(u, v)]
        if self.orientable:
            return d
        return 2 * d + (0 if e > 0 else 1)

    def _link(self, d, e):
        """Make flag ``e`` follow flag ``d``; False if the face budget breaks."""
        g = self.g
        s = self.start_of[d]
        self.fnext[d] = e
        if s == e:
            L = self.clen[s]
            self.trail.append((0, d))
            self.faces += 1
            self.chains -= 1
            ex = L - g
            self.closed_excess += ex
            if ex > 0:
                self.open_excess -= ex
            return self.closed_excess + self.open_excess <= self.slack
        t = self.end_of[e]
        L1 = self.clen[s]
        L2 = self.clen[e]
        L = L1 + L2
        self.trail.append((1, s, d, e, t, L1))
        self.end_of[s] = t
        self.start_of[t] = s
        self.clen[s] = L
        self.chains -= 1
        self.open_excess += max(0, L - g) - max(0, L1 - g) - max(0, L2 - g)
        budget = self.slack - self.closed_excess
        if self.open_excess > budget:
            return False
        # the face through this chain still has to walk from its head back to its tail
        return L + self.dist[self.fhead[t]][self.ftail[s]] - g <= budget

    def _set_rotation(self, v, a, b):
        """Record ``succ_v(a) = b`` in the partial rotation at ``v``."""
        x = self.dart[(v, a)]
        y = self.dart[(v, b)]
        self.rsucc[x] = y
        self.rpred[y] = x
        s = self.pstart[x]
        if s == y:
            self.trail.append((2, x, y))
            return
        t = self.pend[y]
        old = self.plen[s]
        self.trail.append((3, x, y, s, t, old))
        self.pend[s] = t
        self.pstart[t] = s
        self.plen[s] = old + self.plen[y]

    def _undo_to(self, mark):
        trail = self.trail
        while len(trail) > mark:
            rec = trail.pop()
            kind = rec[0]
            if kind == 1:
                _, s, d, e, t, L1 = rec
                self.fnext[d] = -1
                self.end_of[s] = d
                self.start_of[t] = e
                self.clen[s] = L1
            elif kind == 0:
                self.fnext[rec[1]] = -1
            elif kind == 3:
                _, x, y, s, t, old = rec
                self.rsucc[x] = -1
                self.rpred[y] = -1
                self.pend[s] = x
                self.pstart[t] = y
                self.plen[s] = old
            else:
                _, x, y = rec
                self.rsucc[x] = -1
                self.rpred[y] = -1

    def _state(self):
        return (len(self.trail), self.faces, self.chains, self.closed_excess, self.open_excess)

    def _restore(self, st):
        self._undo_to(st[0])
        _, self.faces, self.chains, self.closed_excess, self.open_excess = st

    def _tick(self):
        self.nodes += 1
        if self.deadline is not None and (self.nodes & 1023) == 0 and time.monotonic() > self.deadline:
            raise SearchTimeout()

    # -- branching -------------------------------------------------------------
    def run(self) -> bool:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise SearchTimeout()
        if self.slack < 0 or self.faces + self.chains < self.need:
            return False
        return self._branch(0)

    def _pick(self):
        """Open flag end with the longest chain, lowest index on ties."""
        best, best_len = -1, 0
        fnext, clen, start_of = self.fnext, self.clen, self.start_of
        for f in range(self.nflags):
            if fnext[f] < 0:
                L = clen[start_of[f]]
                if L > best_len:
                    best, best_len = f, L
        return best

    def _rotation_allowed(self, v, a, b):
        x = self.dart[(v, a)]
        y = self.dart[(v, b)]
        if self.rsucc[x] >= 0 or self.rpred[y] >= 0:
            return False
        if self.pstart[x] == y and self.plen[y] != self.deg[v]:
            return False
        if v == self.root and self.deg[v] >= 3:
            # rotation at the root is taken up to reflection: succ(n0) < pred(n0)
            nb = self.nbrs[v]
            n0 = nb[0]
            if a == n0:
                p = self.rpred[self.dart[(v, n0)]]
                if p >= 0 and not b < self.fhead[p * self.mult]:
                    return False
                if b == nb[-1]:
                    return False
            if b == n0:
                s = self.rsucc[self.dart[(v, n0)]]
                if s >= 0 and not self.fhead[s * self.mult] < a:
                    return False
                if a == nb[1]:
                    return False
        return True

    def options(self):
        """Branch choices at the current node: ``(v, a, b, signs)`` tuples."""
        f = self._pick()
        if f < 0:
            return None
        x, v = self.ftail[f], self.fhead[f]
        plus = self.orientable or f % 2 == 0
        out = []
        for w in self.nbrs[v]:
            if w == x and self.deg[v] > 1:
                continue
            a, b = (x, w) if plus else (w, x)
            if not self._rotation_allowed(v, a, b):
                continue
            if self.orientable:
                out.append((v, a, b, ()))
                continue
            keys = []
            for key in (_edge_key(v, a), _edge_key(v, b)):
                if key not in self.sign and key not in keys:
                    keys.append(key)
            for combo in _sign_combos(len(keys)):
                out.append((v, a, b, tuple(zip(keys, combo))))
        return out

    def _apply(self, v, a, b, signs):
        for key, s in signs:
            self.sign[key] = s
            self.undecided -= 1
            if s < 0:
                self.negatives += 1
        if not self.orientable and self.negatives == 0 and self.undecided == 0:
            return False
        self._set_rotation(v, a, b)
        if self.orientable:
            ok = self._link(self.dart[(a, v)], self.dart[(v, b)])
        else:
            s_vb = self.sign[_edge_key(v, b)]
            s_va = self.sign[_edge_key(v, a)]
            ok = (self._link(self._flag(a, v, 1), self._flag(v, b, s_vb))
                  and self._link(self._flag(b, v, -1), self._flag(v, a, -s_va)))
        return ok and self.faces + self.chains >= self.need

    def _unapply(self, signs):
        for key, s in signs:
            del self.sign[key]
            self.undecided += 1
            if s < 0:
                self.negatives -= 1

    def _branch(self, depth) -> bool:
        self._tick()
        opts = self.options()
        if opts is None:
            if self.faces >= self.need and (self.orientable or self.negatives > 0):
                self.solution = self._snapshot()
                return True
            return False
        for idx, (v, a, b, signs) in enumerate(opts):
            if depth == 0 and self.first_branch is not None and idx != self.first_branch:
                continue
            st = self._state()
            if self._apply(v, a, b, signs) and self._branch(depth + 1):
                return True
            self._restore(st)
            self._unapply(signs)
        return False

    def _snapshot(self):
        rotations = []
        for v in range(self.n):
            nb = self.nbrs[v]
            if not nb:
                rotations.append(())
                continue
            r = [nb[0]]
            while len(r) < len(nb):
                r.append(self.fhead[self.rsucc[self.dart[(v, r[-1])]] * self.mult])
            rotations.append(tuple(r))
        signs = {k: s for k, s in self.sign.items() if s < 0}
        return EmbeddingScheme(tuple(rotations), signs)


def _sign_combos(k):
    if k == 0:
        return [()]
    if k == 1:
        return [(1,), (-1,)]
    return [(1, 1), (1, -1), (-1, 1), (-1, -1)]


def _run_branch(args):
    graph, f_min, orientable, deadline, first = args
    s = _Search(graph, f_min, orientable, deadline, first)
    try:
        found = s.run()
    except SearchTimeout:
        return "timeout", None, s.nodes
    return ("found" if found else "absent"), s.solution, s.nodes


def _decide(graph: SimpleGraph, f_min: int, orientable: bool, budget: float | None, workers: int):
    deadline = None if budget is None else time.monotonic() + budget
    if workers <= 1:
        s = _Search(graph, f_min, orientable, deadline)
        found = s.run()  # may raise SearchTimeout
        return s.solution if found else None
    probe = _Search(graph, f_min, orientable, deadline)
    if probe.slack < 0 or probe.faces + probe.chains < probe.need:
        return None
    n_branches = len(probe.options() or ())
    tasks = [(graph, f_min, orientable, deadline, i) for i in range(n_branches)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_run_branch, t) for t in tasks]
        timed_out = False
        for fut in futures:
            status, sol, _ = fut.result()
            if status == "timeout":
                timed_out = True
            elif status == "found" and not timed_out:
                for other in futures:
                    other.cancel()
                return sol
        if timed_out:
            raise SearchTimeout()
    return None


def _require_connected(graph: SimpleGraph):
    if graph.vertex_count == 0:
        raise ValueError("empty graph")
    if not graph.is_connected():
        raise ValueError("graph is disconnected; decompose into components first")


def _trivial_certificate(graph: SimpleGraph) -> GenusCertificate:
    return GenusCertificate(EmbeddingScheme(((),) * graph.vertex_count, {}), 1, 0, True)


def decide_orientable_genus_le(graph: SimpleGraph, k: int, budget: float | None = None,
                               workers: int = 1) -> GenusCertificate | None:
    """A rotation system of genus ``<= k``, or ``None`` if none exists.

    Raises :class:`SearchTimeout` when ``budget`` seconds pass first.
    """
    _require_connected(graph)
    if k < 0:
        raise ValueError("k must be >= 0")
    if graph.edge_count == 0:
        return _trivial_certificate(graph)
    V, E = graph.vertex_count, graph.edge_count
    f_min = E - V + 2 - 2 * k
    scheme = _decide(graph, max(f_min, 1), True, budget, workers)
    if scheme is None:
        return None
    F = count_faces(graph, scheme)
    return GenusCertificate(scheme, F, _genus_from_faces(V, E, F, True), True)


def decide_nonorientable_genus_le(graph: SimpleGraph, k: int, budget: float | None = None,
                                  workers: int = 1) -> GenusCertificate | None:
    """A nonorientable scheme with Euler genus ``<= k`` (``k >= 1``), or ``None``."""
    _require_connected(graph)
    if k < 1:
        raise ValueError("k must be >= 1; the sphere is the orientable case")
    V, E = graph.vertex_count, graph.edge_count
    if E - V + 1 < 1:
        raise ValueError("a forest has no nonorientable embedding scheme")
    f_min = E - V + 2 - k
    scheme = _decide(graph, max(f_min, 1), False, budget, workers)
    if scheme is None:
        return None
    F = count_faces(graph, scheme)
    return GenusCertificate(scheme, F, _genus_from_faces(V, E, F, False), False)


@dataclass
class GenusResult:
    orientable: bool
    status: str  # "exact", "lower_bound" (proved > max_k) or "timeout"
    lower_bound: int
    value: int | None = None
    certificate: GenusCertificate | None = None
    bound_provenance: str = ""
    bound_report: object = None
    levels: list = field(default_factory=list)  # (k, "found" | "absent" | "timeout")

    @property
    def verdict(self) -> str:
        if self.status == "exact":
            return f"= {self.value}"
        return f">= {self.lower_bound}"


def _genus(graph, orientable, max_k, budget, workers, start):
    _require_connected(graph)
    from .bounds import best_lower_bound

    label = "orientable" if orientable else "nonorientable"
    report = best_lower_bound(graph, orientable=orientable)
    lb = report.bound_value
    provenance = report.provenance
    if start is not None and start > lb:
        raise ValueError("start must not exceed the proved lower bound")
    k0 = lb if start is None else start
    deadline = None if budget is None else time.monotonic() + budget
    levels = []
    res = GenusResult(orientable, "lower_bound", lb, bound_provenance=provenance, bound_report=report, levels=levels)
    if not orientable and k0 == 0:
        # the sphere counts as zero crosscaps
        try:
            cert = decide_orientable_genus_le(graph, 0, _remaining(deadline), workers)
        except SearchTimeout:
            levels.append((0, "timeout"))
            res.status = "timeout"
            return res
        if cert is not None:
            levels.append((0, "found"))
            res.status, res.value, res.certificate = "exact", 0, cert
            return res
        levels.append((0, "absent"))
        k0 = 1
        if lb < 1:
            res.lower_bound, res.bound_provenance = 1, "exhaustive_search"
    for k in range(k0, max_k + 1):
        decide = decide_orientable_genus_le if orientable else decide_nonorientable_genus_le
        try:
            cert = decide(graph, k, _remaining(deadline), workers)
        except SearchTimeout:
            levels.append((k, "timeout"))
            res.status = "timeout"
            return res
        if cert is not None:
            levels.append((k, "found"))
            res.status, res.value, res.certificate = "exact", cert.claimed_genus, cert
            if cert.claimed_genus < res.lower_bound:
                raise AssertionError(f"{label} certificate below proved lower bound")
            return res
        levels.append((k, "absent"))
        if k + 1 > res.lower_bound:
            res.lower_bound, res.bound_provenance = k + 1, "exhaustive_search"
    return res


def _remaining(deadline):
    if deadline is None:
        return None
    return max(0.0, deadline - time.monotonic())


def default_budget() -> float:
    return float(os.environ.get("NONCYC_BUDGET_SECS", "60"))


def orientable_genus(graph: SimpleGraph, max_k: int = 10, budget: float | None = None,
                     workers: int = 1, start: int | None = None) -> GenusResult:
    """Smallest ``k`` with a genus-``k`` rotation system, searched upward from
    the best lower bound (or from ``start``)."""
    return _genus(graph, True, max_k, budget, workers, start)


def nonorientable_genus(graph: SimpleGraph, max_k: int = 10, budget: float | None = None,
                        workers: int = 1, start: int | None = None) -> GenusResult:
    return _genus(graph, False, max_k, budget, workers, start)


def is_planar(graph: SimpleGraph, budget: float | None = None) -> bool:
    for comp in graph.components():
        if len(comp) < 5:
            continue
        from .graphs import induced_subgraph
        sub = induced_subgraph(graph, comp)
        if sub.edge_count > 3 * sub.vertex_count - 6:
            return False
        if decide_orientable_genus_le(sub, 0, budget) is None:
            return False
    return True
