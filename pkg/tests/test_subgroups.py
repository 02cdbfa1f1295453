import random

import pytest

from davlab import (commutator_subgroup, is_normal, nilpotency_class, power_subgroup,
                    product_subgroup, quotient_order, subgroup_closure,
                    trivial_subgroup, whole_subgroup)
from davlab.errors import DavlabError
from davlab.subgroups import Subgroup, power_set


def test_closure_empty_is_trivial(grp):
    G = grp("q[8]")
    assert subgroup_closure(G, set()).elements() == [0]


def test_closure_of_a_is_cyclic_of_order_p_alpha(grp):
    G = grp("g1[3,2,1,1]")
    H = subgroup_closure(G, {G.generators["a"]})
    assert len(H) == 9
    assert sorted(H.elements()) == sorted(G.pow(G.generators["a"], k) for k in range(9))


def test_closure_of_both_generators_is_whole_group(grp):
    for text in ("g1[3,1,1,1]", "g2[3,2,1,1]", "g3[3,3,2,2,1]", "q[12]", "sd[16]"):
        G = grp(text)
        names = [n for n in ("a", "b", "x", "y") if n in G.generators]
        H = subgroup_closure(G, {G.generators[n] for n in names})
        assert len(H) == G.order


def test_closure_contains_inverses(grp):
    G = grp("d[16]")
    H = subgroup_closure(G, {G.generators["y"]})
    for h in H.elements():
        assert G.inv(h) in H


def test_closure_idempotent_and_monotone(grp):
    G = grp("d[16]")
    rng = random.Random(3)
    for _ in range(20):
        gens = {rng.randrange(G.order) for _ in range(rng.randrange(1, 4))}
        H = subgroup_closure(G, gens)
        assert subgroup_closure(G, set(H.elements())).mask == H.mask
        bigger = subgroup_closure(G, gens | {rng.randrange(G.order)})
        assert H <= bigger


def test_lagrange_on_random_closures(grp):
    G = grp("sd[32]")
    rng = random.Random(5)
    for _ in range(25):
        gens = {rng.randrange(G.order) for _ in range(rng.randrange(1, 4))}
        assert G.order % len(subgroup_closure(G, gens)) == 0


def test_commutator_subgroup_g1(grp):
    G = grp("g1[3,1,1,1]")
    whole = whole_subgroup(G)
    gamma2 = commutator_subgroup(G, whole, whole)
    c = G.generators["c"]
    assert sorted(gamma2.elements()) == sorted(G.pow(c, k) for k in range(3))


def test_commutator_subgroup_g2_is_a_cubed(grp):
    G = grp("g2[3,2,1,1]")
    whole = whole_subgroup(G)
    gamma2 = commutator_subgroup(G, whole, whole)
    a3 = G.pow(G.generators["a"], 3)
    assert sorted(gamma2.elements()) == sorted(G.pow(a3, k) for k in range(3))


def test_commutator_subgroup_abelian_trivial(grp):
    G = grp("ab[3,3]")
    whole = whole_subgroup(G)
    assert commutator_subgroup(G, whole, whole).is_trivial


def test_power_subgroup_examples(grp):
    C9 = grp("c[9]")
    assert len(power_subgroup(C9, whole_subgroup(C9), 3)) == 3
    G = grp("g1[3,1,1,1]")
    whole = whole_subgroup(G)
    cubes = power_subgroup(G, whole, 3)
    assert cubes.is_trivial  # exponent 3 kills every cube
    assert power_subgroup(G, whole, 1).mask == whole.mask


def test_power_set_equals_power_subgroup_in_class_two(grp):
    # in class two with p odd the set of p-th powers is already the subgroup
    G = grp("g2[3,2,1,1]")
    whole = whole_subgroup(G)
    assert power_set(G, whole, 3) == set(power_subgroup(G, whole, 3).elements())


def test_product_subgroup_g2(grp):
    G = grp("g2[3,2,1,1]")
    a, b = G.generators["a"], G.generators["b"]
    Ha = subgroup_closure(G, {G.pow(a, 3)})
    Hb = subgroup_closure(G, {G.pow(b, 3)})
    prod = product_subgroup(G, Ha, Hb)
    assert prod.mask == power_subgroup(G, whole_subgroup(G), 3).mask


def test_quotient_order_frattini(grp):
    G = grp("g1[3,1,1,1]")
    whole = whole_subgroup(G)
    gamma2 = commutator_subgroup(G, whole, whole)
    cubes = power_subgroup(G, whole, 3)
    frattini = product_subgroup(G, gamma2, cubes)
    assert quotient_order(whole, frattini) == 9
    assert quotient_order(frattini, frattini) == 1


def test_quotient_order_rejects_non_subset(grp):
    G = grp("d[8]")
    x = subgroup_closure(G, {G.generators["x"]})
    y = subgroup_closure(G, {G.generators["y"]})
    with pytest.raises(DavlabError, match="not contained"):
        quotient_order(x, y)


def test_quotient_order_rejects_non_normal(grp):
    G = grp("d[6]")
    whole = whole_subgroup(G)
    flip = subgroup_closure(G, {G.generators["x"]})
    assert not is_normal(G, flip)
    with pytest.raises(DavlabError, match="not normal"):
        quotient_order(whole, flip)


def test_is_normal_center_and_rotations(grp):
    G = grp("d[8]")
    rot = subgroup_closure(G, {G.generators["y"]})
    assert is_normal(G, rot)
    assert is_normal(G, trivial_subgroup(G))
    assert is_normal(G, whole_subgroup(G))


def test_class_two_families(grp):
    for text in ("g1[3,1,1,1]", "g1[3,2,2,2]", "g2[3,2,1,1]", "g2[3,4,2,2]",
                 "g3[3,3,2,2,1]", "g1[5,1,1,1]"):
        G = grp(text)
        assert nilpotency_class(G) == 2, text


def test_commutator_order_matches_gamma_parameter(grp):
    # o([a,b]) = p^gamma for g1/g2, |gamma_2| = p^gamma for g3
    cases = {"g1[3,2,2,2]": 9, "g1[3,2,1,1]": 3, "g2[3,4,2,2]": 9, "g2[3,2,1,1]": 3}
    for text, expect in cases.items():
        G = grp(text)
        assert G.element_order(G.commutator(G.generators["a"], G.generators["b"])) == expect
    G = grp("g3[3,3,2,2,1]")
    whole = whole_subgroup(G)
    assert len(commutator_subgroup(G, whole, whole)) == 9  # p^gamma = 3^2


def test_dihedral_class_grows(grp):
    assert nilpotency_class(grp("d[8]")) == 2
    assert nilpotency_class(grp("d[16]")) == 3
    assert nilpotency_class(grp("d[6]")) is None  # S_3 is not nilpotent


def test_subgroup_container_protocol(grp):
    G = grp("c[12]")
    H = subgroup_closure(G, {G.pow(G.generators["g"], 4)})
    assert len(H) == 3
    assert 0 in H and G.pow(G.generators["g"], 4) in H
    assert G.generators["g"] not in H
    assert H == Subgroup.from_elements(G, H.elements())
