"""Finite groups given by Cayley tables.

Elements are the integers ``0..n-1`` with ``0`` the identity.  Everything here
is brute force over the table, which is all we need for groups of order at
most a few dozen.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GroupAxiomError(ValueError):
    """A table that fails one of the group axioms."""


@dataclass(frozen=True, eq=False)
class Group:
    name: str
    table: tuple[tuple[int, ...], ...]
    element_names: tuple[str, ...]
    _orders: tuple[int, ...] = field(init=False, repr=False)
    _inverses: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "element_names", tuple(self.element_names))
        validate_table(table, len(self.element_names))
        n = len(table)
        inverses = [0] * n
        for a in range(n):
            inverses[a] = table[a].index(0)
        orders = []
        for a in range(n):
            k, x = 1, a
            while x != 0:
                x = table[x][a]
                k += 1
            orders.append(k)
        object.__setattr__(self, "_inverses", tuple(inverses))
        object.__setattr__(self, "_orders", tuple(orders))

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self._inverses[a]

    def power(self, a: int, k: int) -> int:
        k %= self._orders[a]
        x = 0
        for _ in range(k):
            x = self.table[x][a]
        return x

    def index(self, name: str) -> int:
        try:
            return self.element_names.index(name)
        except ValueError:
            raise KeyError(f"{self.name} has no element named {name!r}") from None

    def is_abelian(self) -> bool:
        t = self.table
        n = self.order
        return all(t[a][b] == t[b][a] for a in range(n) for b in range(a + 1, n))

    def center(self) -> frozenset[int]:
        t = self.table
        return frozenset(a for a in self.elements if all(t[a][b] == t[b][a] for b in self.elements))

    def __repr__(self):
        return f"Group({self.name!r}, order={self.order})"


def validate_table(table: Sequence[Sequence[int]], n: int | None = None) -> None:
    """Raise :class:`GroupAxiomError` naming the first failing element or triple."""
    if n is None:
        n = len(table)
    if n < 1:
        raise GroupAxiomError("a group needs at least one element")
    if len(table) != n or any(len(row) != n for row in table):
        raise GroupAxiomError(f"table must be {n}x{n}")
    for i, row in enumerate(table):
        for j, x in enumerate(row):
            if not 0 <= x < n:
                raise GroupAxiomError(f"entry table[{i}][{j}] = {x} out of range")
    for a in range(n):
        if table[0][a] != a or table[a][0] != a:
            raise GroupAxiomError(f"element 0 is not an identity for element {a}")
    for a in range(n):
        if 0 not in table[a]:
            raise GroupAxiomError(f"element {a} has no right inverse")
        b = table[a].index(0)
        if table[b][a] != 0:
            raise GroupAxiomError(f"element {a} has no two-sided inverse")
    for a in range(n):
        ra = table[a]
        for b in range(n):
            ab = ra[b]
            rab = table[ab]
            rb = table[b]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    raise GroupAxiomError(f"associativity fails for triple ({a}, {b}, {c})")


def _check_element(G: Group, g: int) -> None:
    if not 0 <= g < G.order:
        raise IndexError(f"element index {g} out of range for {G.name} (order {G.order})")


def element_order(G: Group, g: int) -> int:
    _check_element(G, g)
    return G._orders[g]


def subgroup_generated(G: Group, S: Iterable[int]) -> frozenset[int]:
    gens = list(dict.fromkeys(S))
    if not gens:
        raise ValueError("generating set must be nonempty")
    for g in gens:
        _check_element(G, g)
    t = G.table
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            row = t[x]
            for g in gens:
                y = row[g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def is_cyclic_subset(G: Group, S: Iterable[int]) -> bool:
    """True iff the subgroup generated by ``S`` is cyclic."""
    H = subgroup_generated(G, S)
    size = len(H)
    return any(G._orders[h] == size for h in H)


def is_cyclic_group(G: Group) -> bool:
    return max(G._orders) == G.order


def cyclicizer(G: Group) -> frozenset[int]:
    """Elements ``a`` such that ``<a, b>`` is cyclic for every ``b``."""
    n = G.order
    ok = []
    for a in range(n):
        if all(is_cyclic_subset(G, (a, b)) for b in range(n)):
            ok.append(a)
    return frozenset(ok)


def is_normal_subset(G: Group, H: Iterable[int]) -> bool:
    H = frozenset(H)
    t = G.table
    for g in G.elements:
        gi = G.inverse(g)
        for h in H:
            if t[t[g][h]][gi] not in H:
                return False
    return True


def is_closed(G: Group, H: Iterable[int]) -> bool:
    H = frozenset(H)
    return 0 in H and all(G.table[a][b] in H for a in H for b in H)


def element_order_spectrum(G: Group) -> frozenset[int]:
    return frozenset(G._orders)


def order_census(G: Group) -> dict[int, int]:
    """Map each element order to the number of elements having it."""
    census: dict[int, int] = {}
    for k in G._orders:
        census[k] = census.get(k, 0) + 1
    return dict(sorted(census.items()))


def count_elements_of_order(G: Group, k: int) -> int:
    if k < 1:
        raise ValueError("order must be positive")
    return sum(1 for x in G._orders if x == k)


def cyclic_subgroups(G: Group) -> list[frozenset[int]]:
    """All distinct cyclic subgroups, smallest first."""
    subs = {subgroup_generated(G, (g,)) for g in G.elements}
    return sorted(subs, key=lambda H: (len(H), sorted(H)))


def count_cyclic_subgroups_of_order(G: Group, k: int) -> int:
    if k < 1:
        raise ValueError("order must be positive")
    return sum(1 for H in cyclic_subgroups(G) if len(H) == k)


def all_subgroups(G: Group) -> set[frozenset[int]]:
    """Every subgroup, found by closing known subgroups under one more generator.

    Any subgroup is generated by adding elements one at a time starting from
    a cyclic subgroup, so iterating ``H -> <H, g>`` from the trivial group
    reaches all of them.  Each subgroup is expanded once.
    """
    trivial = frozenset({0})
    found = {trivial}
    queue = [trivial]
    while queue:
        H = queue.pop()
        for g in G.elements:
            if g in H:
                continue
            K = subgroup_generated(G, (*H, g))
            if K not in found:
                found.add(K)
                queue.append(K)
    return found


def count_subgroups_of_order(G: Group, k: int) -> int:
    if k < 1:
        raise ValueError("order must be positive")
    if G.order % k:
        return 0
    return sum(1 for H in all_subgroups(G) if len(H) == k)


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def prime_divisors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and all(n % p for p in range(2, math.isqrt(n) + 1))
