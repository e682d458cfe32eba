import json
from collections import Counter

import pytest

from noncyclic.catalog import (INVARIANT_TWINS, CatalogError, catalog_up_to, export_cayley_table, get_group,
                               group_names, ingest_cayley_table, invariant_tuple, make_alternating_4,
                               make_cyclic, make_dicyclic, make_dihedral, make_direct_product,
                               make_elementary_abelian, make_modular_16, make_semidihedral_16, make_symmetric)
from noncyclic.groups import (count_elements_of_order, count_subgroups_of_order, element_order,
                              element_order_spectrum, is_cyclic_group, subgroup_generated)

EXPECTED_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2, 11: 1, 12: 5,
                   13: 1, 14: 2, 15: 1, 16: 14}


def test_per_order_counts():
    counts = Counter(e.order for e in catalog_up_to(16))
    assert dict(counts) == EXPECTED_COUNTS


def test_catalog_slices():
    assert len(catalog_up_to(8)) == 14
    assert [e.canonical_name for e in catalog_up_to(4)] == ["Z1", "Z2", "Z3", "Z4", "Z2^2"]
    assert sum(1 for e in catalog_up_to(16) if e.order == 16) == 14


def test_beyond_16_refused():
    with pytest.raises(CatalogError):
        catalog_up_to(17)


def test_names_unique_and_consistent():
    entries = catalog_up_to(16)
    names = [e.canonical_name for e in entries]
    assert len(set(names)) == len(names) == len(group_names())
    for e in entries:
        assert e.group.name == e.canonical_name
        assert e.order == e.group.order
        assert e.is_cyclic == is_cyclic_group(e.group)


def test_invariant_tuples_distinguish_all_but_twins():
    by_tuple = {}
    for e in catalog_up_to(16):
        by_tuple.setdefault(invariant_tuple(e.group), []).append(e.canonical_name)
    clashes = {frozenset(v) for v in by_tuple.values() if len(v) > 1}
    assert clashes == set(INVARIANT_TWINS)


def _square_count(G):
    return len({G.mul(g, g) for g in G.elements})


def test_twins_are_not_isomorphic():
    # the number of distinct squares is an isomorphism invariant
    for pair in INVARIANT_TWINS:
        a, b = sorted(pair)
        A, B = get_group(a), get_group(b)
        assert invariant_tuple(A) == invariant_tuple(B)
        assert _square_count(A) != _square_count(B) or _commutator_size(A) != _commutator_size(B)


def _commutator_size(G):
    comms = {G.mul(G.mul(G.inverse(a), G.inverse(b)), G.mul(a, b)) for a in G.elements for b in G.elements}
    return len(subgroup_generated(G, comms))


def test_unknown_name():
    with pytest.raises(KeyError):
        get_group("Z17")


class TestConstructors:
    def test_trivial(self):
        G = make_cyclic(1)
        assert G.order == 1 and G.table == ((0,),)

    def test_elementary_abelian(self):
        G = make_elementary_abelian(2, 3)
        assert G.order == 8 and count_elements_of_order(G, 2) == 7

    def test_direct_product(self):
        G = make_direct_product(make_cyclic(2), make_cyclic(6))
        assert G.order == 12 and element_order_spectrum(G) == {1, 2, 3, 6}

    def test_dihedral(self):
        assert count_elements_of_order(make_dihedral(8), 2) == 5
        assert count_elements_of_order(make_dihedral(16), 2) == 9
        S3 = make_dihedral(6)
        assert S3.order == 6 and not S3.is_abelian()

    def test_dicyclic(self):
        Q8 = make_dicyclic(8)
        assert count_elements_of_order(Q8, 2) == 1
        assert element_order_spectrum(make_dicyclic(16)) == {1, 2, 4, 8}
        for n in (8, 16):
            assert count_elements_of_order(make_dicyclic(n), 2) == 1

    def test_dicyclic_12_presentation(self):
        G = make_dicyclic(12)
        a, b = G.index("a"), G.index("b")
        assert element_order(G, a) == 6 and element_order(G, b) == 4
        assert G.mul(b, b) == G.power(a, 3)
        assert G.mul(G.mul(G.inverse(b), a), b) == G.power(a, 5)

    def test_semidihedral(self):
        G = make_semidihedral_16()
        a, b = G.index("a"), G.index("b")
        assert element_order(G, a) == 8 and element_order(G, b) == 2
        assert G.mul(G.mul(b, a), b) == G.power(a, 3)
        assert count_elements_of_order(G, 4) == 6
        assert count_subgroups_of_order(G, 8) == 3
        assert len(subgroup_generated(G, [a])) == 8

    def test_modular(self):
        G = make_modular_16()
        a, b = G.index("a"), G.index("b")
        assert G.mul(G.mul(b, a), b) == G.power(a, 5)

    def test_symmetric(self):
        assert make_symmetric(3).order == 6
        assert count_elements_of_order(make_symmetric(3), 2) == 3
        assert make_symmetric(2).order == 2 and is_cyclic_group(make_symmetric(2))
        assert make_symmetric(4).order == 24
        assert make_alternating_4().order == 12

    @pytest.mark.parametrize("call", [
        lambda: make_cyclic(0), lambda: make_elementary_abelian(4, 2), lambda: make_elementary_abelian(2, 0),
        lambda: make_dihedral(7), lambda: make_dihedral(2), lambda: make_dicyclic(10),
        lambda: make_dicyclic(4), lambda: make_symmetric(5), lambda: make_symmetric(0),
    ])
    def test_invalid_parameters(self, call):
        with pytest.raises(ValueError):
            call()


class TestTables:
    def test_valid_z2(self):
        doc = {"name": "Z2", "order": 2, "elements": ["0", "1"], "table": [[0, 1], [1, 0]]}
        G = ingest_cayley_table(doc)
        assert G.order == 2
        assert export_cayley_table(G) == export_cayley_table(ingest_cayley_table(json.dumps(doc)))

    def test_broken_associativity(self):
        t = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
        doc = {"name": "L5", "order": 5, "elements": list("abcde"), "table": t}
        with pytest.raises(ValueError, match="associativ"):
            ingest_cayley_table(doc)

    @pytest.mark.parametrize("doc", [
        "not json", "[]", {"name": "x", "order": 2, "elements": ["a", "b"]},
        {"name": "x", "order": 2, "elements": ["a", "a"], "table": [[0, 1], [1, 0]]},
        {"name": "x", "order": 2, "elements": ["a", "b"], "table": [[0, 1]]},
        {"name": "x", "order": 2, "elements": ["a", "b"], "table": [[0, 1], [1, "0"]]},
        {"name": "x", "order": 0, "elements": [], "table": []},
    ])
    def test_malformed(self, doc):
        with pytest.raises(ValueError):
            ingest_cayley_table(doc)

    @pytest.mark.parametrize("name", group_names())
    def test_round_trip(self, name):
        G = get_group(name)
        text = export_cayley_table(G)
        H = ingest_cayley_table(text)
        assert H.table == G.table and H.element_names == G.element_names
        assert export_cayley_table(H) == text
        assert invariant_tuple(H) == invariant_tuple(G)
