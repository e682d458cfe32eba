import itertools

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from noncyclic.catalog import catalog_up_to, get_group, make_cyclic
from noncyclic.groups import (Group, GroupAxiomError, all_subgroups, count_cyclic_subgroups_of_order,
                              count_elements_of_order, count_subgroups_of_order, cyclic_subgroups, cyclicizer,
                              element_order, element_order_spectrum, euler_phi, is_closed, is_cyclic_group,
                              is_cyclic_subset, is_normal_subset, prime_divisors, subgroup_generated,
                              validate_table)

CATALOG = [e.group for e in catalog_up_to(16)]


def idx(G, *names):
    return [G.index(n) for n in names]


class TestElementOrder:
    def test_identity(self):
        for G in CATALOG:
            assert element_order(G, 0) == 1

    def test_d16_rotation(self):
        D16 = get_group("D16")
        assert element_order(D16, D16.index("r")) == 8

    def test_z2xz6(self):
        G = get_group("Z2xZ6")
        assert element_order(G, G.index("(1,1)")) == 6

    def test_divides_order(self):
        for G in CATALOG:
            assert all(G.order % element_order(G, g) == 0 for g in G.elements)

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            element_order(get_group("S3"), 6)


class TestSubgroupGenerated:
    def test_identity(self):
        assert subgroup_generated(get_group("D8"), [0]) == {0}

    def test_q8_i_j(self):
        Q8 = get_group("Q8")
        assert subgroup_generated(Q8, idx(Q8, "i", "j")) == set(Q8.elements)

    def test_cyclic_closure(self):
        G = get_group("Z2xZ4")
        H = subgroup_generated(G, idx(G, "(0,1)"))
        assert {G.element_names[h] for h in H} == {"(0,0)", "(0,1)", "(0,2)", "(0,3)"}

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            subgroup_generated(get_group("S3"), [])

    def test_lagrange(self):
        for G in CATALOG:
            for a, b in itertools.combinations(G.elements, 2):
                assert G.order % len(subgroup_generated(G, (a, b))) == 0


class TestCyclicity:
    def test_singletons(self):
        for G in CATALOG:
            assert all(is_cyclic_subset(G, [g]) for g in G.elements)

    def test_z2_cubed_pairs(self):
        G = get_group("Z2^3")
        for a, b in itertools.combinations(range(1, 8), 2):
            assert not is_cyclic_subset(G, (a, b))

    def test_z2xz6_example(self):
        G = get_group("Z2xZ6")
        assert is_cyclic_subset(G, idx(G, "(0,2)", "(1,0)"))
        assert len(subgroup_generated(G, idx(G, "(0,2)", "(1,0)"))) == 6

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            is_cyclic_subset(get_group("S3"), [])

    def test_cyclic_group(self):
        assert is_cyclic_group(make_cyclic(12))
        assert not is_cyclic_group(get_group("Z2^2"))


class TestCyclicizer:
    def test_z2xz4(self):
        assert cyclicizer(get_group("Z2xZ4")) == {0}

    def test_q8(self):
        Q8 = get_group("Q8")
        assert {Q8.element_names[g] for g in cyclicizer(Q8)} == {"1", "-1"}

    def test_z2xz6_size(self):
        assert len(cyclicizer(get_group("Z2xZ6"))) == 3

    @pytest.mark.parametrize("G", CATALOG, ids=lambda G: G.name)
    def test_matches_brute_force(self, G):
        assert cyclicizer(G) == oracles.cyclicizer(G.table)

    @pytest.mark.parametrize("G", CATALOG, ids=lambda G: G.name)
    def test_normal_subgroup(self, G):
        cyc = cyclicizer(G)
        assert is_closed(G, cyc)
        assert is_normal_subset(G, cyc)


class TestCounts:
    def test_spectra(self):
        assert element_order_spectrum(get_group("Z2^2")) == {1, 2}
        assert element_order_spectrum(get_group("QD16")) == {1, 2, 4, 8}
        assert element_order_spectrum(get_group("Z2xZ6")) == {1, 2, 3, 6}

    def test_element_counts(self):
        assert count_elements_of_order(get_group("QD16"), 4) == 6
        assert count_elements_of_order(get_group("D16"), 2) == 9
        for n in range(1, 17):
            assert count_elements_of_order(make_cyclic(n), 1) == 1

    def test_cyclic_subgroup_counts(self):
        assert count_cyclic_subgroups_of_order(get_group("Q8"), 4) == 3
        assert count_cyclic_subgroups_of_order(get_group("Z3^2"), 3) == 4
        for G in CATALOG:
            assert count_cyclic_subgroups_of_order(G, 1) == 1

    def test_subgroup_counts(self):
        assert count_subgroups_of_order(get_group("S3"), 3) == 1
        assert count_subgroups_of_order(get_group("Z2^3"), 2) == 7
        assert count_subgroups_of_order(get_group("S3"), 4) == 0
        for G in CATALOG:
            assert count_subgroups_of_order(G, G.order) == 1

    def test_all_subgroups_s4(self):
        # S4 has 30 subgroups
        from noncyclic.catalog import make_symmetric
        assert len(all_subgroups(make_symmetric(4))) == 30

    def test_totient(self):
        assert [euler_phi(n) for n in (1, 3, 8, 12)] == [1, 2, 4, 4]
        for n in range(1, 40):
            assert euler_phi(n) == sum(1 for k in range(1, n + 1) if __import__("math").gcd(k, n) == 1)

    def test_prime_divisors(self):
        assert prime_divisors(12) == [2, 3]
        assert prime_divisors(1) == []


@pytest.mark.parametrize("G", CATALOG, ids=lambda G: G.name)
def test_phi_relation(G):
    for k in element_order_spectrum(G):
        assert count_elements_of_order(G, k) == euler_phi(k) * count_cyclic_subgroups_of_order(G, k)


@pytest.mark.parametrize("G", CATALOG, ids=lambda G: G.name)
def test_sylow_counts(G):
    for p in prime_divisors(G.order):
        assert count_subgroups_of_order(G, p) % p == 1
        pk = p
        while G.order % (pk * p) == 0:
            pk *= p
        sylow = count_subgroups_of_order(G, pk)
        assert sylow % p == 1 and (G.order // pk) % sylow == 0


def test_cyclic_subgroups_are_cyclic():
    for G in CATALOG:
        for H in cyclic_subgroups(G):
            assert any(element_order(G, h) == len(H) for h in H)


class TestAxioms:
    @pytest.mark.parametrize("G", CATALOG, ids=lambda G: G.name)
    def test_catalog_axioms(self, G):
        t, n = G.table, G.order
        assert all(t[0][a] == a == t[a][0] for a in range(n))
        assert all(0 in t[a] for a in range(n))
        for a, b, c in itertools.product(range(n), repeat=3):
            assert t[t[a][b]][c] == t[a][t[b][c]]

    def test_broken_associativity_names_triple(self):
        # a Latin square with identity 0 that is not associative
        table = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
        with pytest.raises(GroupAxiomError, match=r"\(\d+, \d+, \d+\)"):
            validate_table(table)

    def test_identity_must_be_first(self):
        with pytest.raises(GroupAxiomError):
            Group("bad", [[1, 0], [0, 1]], ["a", "e"])

    def test_out_of_range_entry(self):
        with pytest.raises(GroupAxiomError):
            Group("bad", [[0, 1], [1, 2]], ["e", "a"])


# ---------------------------------------------------------------- properties

group_st = st.sampled_from(CATALOG)


@settings(max_examples=200, deadline=None)
@given(group_st, st.data())
def test_cyclic_subset_symmetric_and_contains_powers(G, data):
    a = data.draw(st.integers(0, G.order - 1))
    b = data.draw(st.integers(0, G.order - 1))
    assert is_cyclic_subset(G, (a, b)) == is_cyclic_subset(G, (b, a))
    c = data.draw(st.sampled_from(sorted(subgroup_generated(G, [a]))))
    assert is_cyclic_subset(G, (a, c))


@settings(max_examples=200, deadline=None)
@given(group_st, st.data())
def test_generated_subgroup_is_closed(G, data):
    S = data.draw(st.lists(st.integers(0, G.order - 1), min_size=1, max_size=3))
    H = subgroup_generated(G, S)
    assert is_closed(G, H) and set(S) <= H
    assert H == oracles.generated(G.table, S)
