"""Constructors for small groups, the complete catalog up to order 16, and
Cayley-table documents.

Document format (JSON, UTF-8)::

    {
      "name": "Z2",
      "order": 2,
      "elements": ["0", "1"],
      "table": [[0, 1], [1, 0]]
    }

``table[i][j]`` is the index of ``elements[i] * elements[j]`` and element 0
must be the identity.  :func:`export_cayley_table` writes exactly this layout
(keys in the order above, two-space indent, one table row per line, trailing
newline), so ``export(ingest(doc)) == doc`` for documents it produced.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Callable, Hashable, Sequence

from .groups import Group, GroupAxiomError, is_cyclic_group, is_prime, order_census

__all__ = [
    "CatalogEntry",
    "CatalogError",
    "make_group",
    "make_cyclic",
    "make_elementary_abelian",
    "make_direct_product",
    "make_dihedral",
    "make_dicyclic",
    "make_semidihedral_16",
    "make_modular_16",
    "make_symmetric",
    "make_alternating_4",
    "catalog_up_to",
    "get_group",
    "group_names",
    "ingest_cayley_table",
    "export_cayley_table",
    "invariant_tuple",
    "INVARIANT_TWINS",
]


class CatalogError(ValueError):
    pass


def make_group(name: str, elements: Sequence[Hashable], mul: Callable, label: Callable = str) -> Group:
    """Tabulate ``mul`` over ``elements``; ``elements[0]`` must be the identity."""
    index = {x: i for i, x in enumerate(elements)}
    if len(index) != len(elements):
        raise CatalogError("duplicate elements")
    try:
        table = [[index[mul(a, b)] for b in elements] for a in elements]
    except KeyError as exc:
        raise GroupAxiomError(f"product {exc.args[0]!r} is not an element") from None
    return Group(name, table, [label(x) for x in elements])


def make_cyclic(n: int, name: str | None = None) -> Group:
    if n < 1:
        raise CatalogError("cyclic group order must be >= 1")
    return make_group(name or f"Z{n}", list(range(n)), lambda a, b: (a + b) % n)


def _abelian(moduli: Sequence[int], name: str) -> Group:
    elements = list(itertools.product(*[range(m) for m in moduli]))

    def mul(a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, moduli))

    def label(x):
        return "(" + ",".join(map(str, x)) + ")"

    return make_group(name, elements, mul, label)


def make_elementary_abelian(p: int, k: int) -> Group:
    if not is_prime(p):
        raise CatalogError(f"{p} is not prime")
    if k < 1:
        raise CatalogError("rank must be >= 1")
    return _abelian([p] * k, f"Z{p}^{k}" if k > 1 else f"Z{p}")


def make_direct_product(G: Group, H: Group, name: str | None = None) -> Group:
    elements = list(itertools.product(G.elements, H.elements))

    def mul(a, b):
        return (G.table[a[0]][b[0]], H.table[a[1]][b[1]])

    def label(x):
        return f"({G.element_names[x[0]]},{H.element_names[x[1]]})"

    return make_group(name or f"{G.name}x{H.name}", elements, mul, label)


def _rs_label(sym_a: str, sym_b: str):
    def label(x):
        i, j = x
        if i == 0 and j == 0:
            return "1"
        s = "" if i == 0 else (sym_a if i == 1 else f"{sym_a}^{i}")
        if j:
            s += sym_b if j == 1 else f"{sym_b}^{j}"
        return s
    return label


def _metacyclic(m: int, n: int, r: int, name: str, sym=("a", "b")) -> Group:
    """Split extension ``Z_m : Z_n`` with ``b a b^-1 = a^r``; elements ``a^i b^j``."""
    if pow(r, n, m) != 1 % m:
        raise CatalogError(f"x -> {r}x does not have order dividing {n} mod {m}")
    elements = [(i, j) for j in range(n) for i in range(m)]

    def mul(x, y):
        return ((x[0] + pow(r, x[1], m) * y[0]) % m, (x[1] + y[1]) % n)

    return make_group(name, elements, mul, _rs_label(*sym))


def make_dihedral(two_n: int) -> Group:
    """Dihedral group of order ``two_n``: ``<r, s | r^n = s^2 = 1, srs = r^-1>``."""
    if two_n < 4 or two_n % 2:
        raise CatalogError("dihedral group order must be even and >= 4")
    n = two_n // 2
    return _metacyclic(n, 2, n - 1, f"D{two_n}", sym=("r", "s"))


_QUATERNION_NAMES = {(0, 0): "1", (2, 0): "-1", (1, 0): "i", (3, 0): "-i",
                     (0, 1): "j", (2, 1): "-j", (1, 1): "k", (3, 1): "-k"}


def make_dicyclic(four_n: int) -> Group:
    """Dicyclic group ``<a, b | a^(2n) = 1, b^2 = a^n, b^-1 a b = a^-1>``.

    Order 8 gives Q8 (elements named 1, -1, i, ..., with i = a, j = b) and any
    power of two gives a generalized quaternion group.
    """
    if four_n < 8 or four_n % 4:
        raise CatalogError("dicyclic group order must be a multiple of 4 and >= 8")
    n = four_n // 4
    m = 2 * n
    # order the elements so that (0, 0) is first
    elements = [(i, j) for j in range(2) for i in range(m)]

    def mul(x, y):
        i, j = x
        k, l = y
        if j == 0:
            return ((i + k) % m, l)
        if l == 0:
            return ((i - k) % m, 1)
        return ((i - k + n) % m, 0)

    if four_n == 8:
        elements = [(0, 0), (2, 0), (1, 0), (3, 0), (0, 1), (2, 1), (1, 1), (3, 1)]
        return make_group("Q8", elements, mul, _QUATERNION_NAMES.__getitem__)
    name = f"Q{four_n}" if four_n & (four_n - 1) == 0 else f"Dic{four_n}"
    return make_group(name, elements, mul, _rs_label("a", "b"))


def make_semidihedral_16() -> Group:
    """``QD16 = <a, b | a^8 = b^2 = 1, bab = a^3>``."""
    return _metacyclic(8, 2, 3, "QD16")


def make_modular_16() -> Group:
    """``M16 = <a, b | a^8 = b^2 = 1, bab = a^5>``."""
    return _metacyclic(8, 2, 5, "M16")


def _perm_label(p):
    # cycle notation on 1..n
    n = len(p)
    seen = [False] * n
    cycles = []
    for i in range(n):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc, j = [], i
        while not seen[j]:
            seen[j] = True
            cyc.append(str(j + 1))
            j = p[j]
        cycles.append("(" + "".join(cyc) + ")")
    return "".join(cycles) or "()"


def _permutation_group(perms, name):
    perms = sorted(perms, key=lambda p: (p != tuple(range(len(p))), p))

    def mul(p, q):
        # (pq)(x) = p(q(x)): apply q first
        return tuple(p[q[x]] for x in range(len(q)))

    return make_group(name, perms, mul, _perm_label)


def _parity(p):
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inv % 2


def make_symmetric(n: int) -> Group:
    if not 1 <= n <= 4:
        raise CatalogError("symmetric groups are provided for 1 <= n <= 4")
    return _permutation_group(itertools.permutations(range(n)), f"S{n}")


def make_alternating_4() -> Group:
    perms = [p for p in itertools.permutations(range(4)) if _parity(p) == 0]
    return _permutation_group(perms, "A4")


def _make_z4z2_z2() -> Group:
    """``(Z4 x Z2) : Z2`` with ``c a c^-1 = ab``, ``c b c^-1 = b`` (SmallGroup(16,3))."""
    elements = [(i, j, k) for k in range(2) for j in range(2) for i in range(4)]

    def mul(x, y):
        return ((x[0] + y[0]) % 4, (x[1] + y[1] + x[2] * y[0]) % 2, (x[2] + y[2]) % 2)

    def label(x):
        i, j, k = x
        s = ("" if i == 0 else ("a" if i == 1 else f"a^{i}")) + ("b" if j else "") + ("c" if k else "")
        return s or "1"

    return make_group("(Z4xZ2):Z2", elements, mul, label)


def _make_pauli() -> Group:
    """Central product ``D8 o Z4``, realised as the Pauli group ``<X, Z, iI>``."""
    elements = [(k, a, b) for b in range(2) for a in range(2) for k in range(4)]

    def mul(x, y):
        k1, a1, b1 = x
        k2, a2, b2 = y
        return ((k1 + k2 + 2 * b1 * a2) % 4, (a1 + a2) % 2, (b1 + b2) % 2)

    phase = ["", "i", "-", "-i"]

    def label(x):
        k, a, b = x
        body = ("X" if a else "") + ("Z" if b else "")
        return (phase[k] + body) if body else ["1", "i", "-1", "-i"][k]

    return make_group("D8oZ4", elements, mul, label)


@dataclass(frozen=True)
class CatalogEntry:
    group: Group
    canonical_name: str
    order: int
    is_cyclic: bool


def _builders():
    Z = make_cyclic
    yield 1, "Z1", lambda: Z(1)
    yield 2, "Z2", lambda: Z(2)
    yield 3, "Z3", lambda: Z(3)
    yield 4, "Z4", lambda: Z(4)
    yield 4, "Z2^2", lambda: make_elementary_abelian(2, 2)
    yield 5, "Z5", lambda: Z(5)
    yield 6, "Z6", lambda: Z(6)
    yield 6, "S3", lambda: make_symmetric(3)
    yield 7, "Z7", lambda: Z(7)
    yield 8, "Z8", lambda: Z(8)
    yield 8, "Z2xZ4", lambda: _abelian([2, 4], "Z2xZ4")
    yield 8, "Z2^3", lambda: make_elementary_abelian(2, 3)
    yield 8, "D8", lambda: make_dihedral(8)
    yield 8, "Q8", lambda: make_dicyclic(8)
    yield 9, "Z9", lambda: Z(9)
    yield 9, "Z3^2", lambda: make_elementary_abelian(3, 2)
    yield 10, "Z10", lambda: Z(10)
    yield 10, "D10", lambda: make_dihedral(10)
    yield 11, "Z11", lambda: Z(11)
    yield 12, "Z12", lambda: Z(12)
    yield 12, "Z2xZ6", lambda: _abelian([2, 6], "Z2xZ6")
    yield 12, "D12", lambda: make_dihedral(12)
    yield 12, "A4", make_alternating_4
    yield 12, "Dic12", lambda: make_dicyclic(12)
    yield 13, "Z13", lambda: Z(13)
    yield 14, "Z14", lambda: Z(14)
    yield 14, "D14", lambda: make_dihedral(14)
    yield 15, "Z15", lambda: Z(15)
    yield 16, "Z16", lambda: Z(16)
    yield 16, "Z2xZ8", lambda: _abelian([2, 8], "Z2xZ8")
    yield 16, "Z4xZ4", lambda: _abelian([4, 4], "Z4xZ4")
    yield 16, "Z2^2xZ4", lambda: _abelian([2, 2, 4], "Z2^2xZ4")
    yield 16, "Z2^4", lambda: make_elementary_abelian(2, 4)
    yield 16, "D16", lambda: make_dihedral(16)
    yield 16, "Q16", lambda: make_dicyclic(16)
    yield 16, "QD16", make_semidihedral_16
    yield 16, "M16", make_modular_16
    yield 16, "Z2xD8", lambda: make_direct_product(Z(2), make_dihedral(8), "Z2xD8")
    yield 16, "Z2xQ8", lambda: make_direct_product(Z(2), make_dicyclic(8), "Z2xQ8")
    yield 16, "Z4:Z4", lambda: _metacyclic(4, 4, 3, "Z4:Z4")
    yield 16, "(Z4xZ2):Z2", _make_z4z2_z2
    yield 16, "D8oZ4", _make_pauli


CATALOG_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5,
                  9: 2, 10: 2, 11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14}

# Non-isomorphic catalog groups that share (order, census, |Z(G)|, abelian).
INVARIANT_TWINS = frozenset({
    frozenset({"Z4:Z4", "Z2xQ8"}),
    frozenset({"(Z4xZ2):Z2", "D8oZ4"}),
})

_cache: dict[str, CatalogEntry] = {}


def _entry(name, builder) -> CatalogEntry:
    if name not in _cache:
        G = builder()
        if G.name != name:
            G = Group(name, G.table, G.element_names)
        _cache[name] = CatalogEntry(G, name, G.order, is_cyclic_group(G))
    return _cache[name]


def catalog_up_to(N: int) -> list[CatalogEntry]:
    """Every group of order ``<= N`` up to isomorphism, in (order, listing) order."""
    if N > 16:
        raise CatalogError("the built-in catalog stops at order 16; ingest larger groups from a table")
    return [_entry(name, b) for order, name, b in _builders() if order <= N]


def group_names() -> list[str]:
    return [name for _, name, _ in _builders()]


def get_group(name: str) -> Group:
    for _, n, b in _builders():
        if n == name:
            return _entry(n, b).group
    raise KeyError(f"unknown group {name!r}; known: {', '.join(group_names())}")


def invariant_tuple(G: Group) -> tuple:
    return (G.order, tuple(order_census(G).items()), len(G.center()), G.is_abelian())


def ingest_cayley_table(document: str | dict) -> Group:
    if isinstance(document, str):
        try:
            doc = json.loads(document)
        except json.JSONDecodeError as exc:
            raise CatalogError(f"malformed Cayley-table document: {exc}") from None
    else:
        doc = document
    if not isinstance(doc, dict):
        raise CatalogError("Cayley-table document must be a JSON object")
    missing = [k for k in ("name", "order", "elements", "table") if k not in doc]
    if missing:
        raise CatalogError(f"missing fields: {', '.join(missing)}")
    name, n, elements, table = doc["name"], doc["order"], doc["elements"], doc["table"]
    if not isinstance(name, str):
        raise CatalogError("name must be a string")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise CatalogError("order must be a positive integer")
    if not isinstance(elements, list) or len(elements) != n or not all(isinstance(e, str) for e in elements):
        raise CatalogError(f"elements must be a list of {n} strings")
    if len(set(elements)) != n:
        raise CatalogError("element names must be distinct")
    if (not isinstance(table, list) or len(table) != n
            or not all(isinstance(r, list) and len(r) == n for r in table)):
        raise CatalogError(f"table must be {n} rows of {n} indices")
    if not all(isinstance(x, int) and not isinstance(x, bool) for r in table for x in r):
        raise CatalogError("table entries must be integers")
    return Group(name, table, elements)


def export_cayley_table(G: Group) -> str:
    rows = ",\n".join("    " + json.dumps(list(r), separators=(", ", ": ")) for r in G.table)
    return (
        "{\n"
        f'  "name": {json.dumps(G.name)},\n'
        f'  "order": {G.order},\n'
        f'  "elements": {json.dumps(list(G.element_names))},\n'
        '  "table": [\n'
        f"{rows}\n"
        "  ]\n"
        "}\n"
    )
