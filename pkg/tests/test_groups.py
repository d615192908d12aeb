from collections import Counter

import pytest

from fullreal.groups import (
    MODULE_KINDS,
    GroupAction,
    GroupError,
    GroupHom,
    GroupTable,
    build_cyclic,
    build_dihedral,
    build_quaternion,
    center,
    centralizer,
    direct_product,
    elementary_abelian,
    fixed_subgroup,
    is_subgroup,
    iterated_family,
    module_action,
    sdp_module,
    semidirect_product,
)
from oracles import naive_center, naive_order


def histogram(G):
    return dict(Counter(naive_order(G.mul, g) for g in range(G.order)))


def assert_group_axioms(G):
    n = G.order
    for g in range(n):
        assert G.mul[0][g] == G.mul[g][0] == g
        assert G.mul[g][G.inv[g]] == G.mul[G.inv[g]][g] == 0
        assert sorted(G.mul[g]) == list(range(n))
        assert sorted(G.mul[h][g] for h in range(n)) == list(range(n))
        assert n % naive_order(G.mul, g) == 0


def all_catalog_groups():
    yield build_cyclic(1)
    yield build_cyclic(12)
    yield build_dihedral(8)
    yield build_dihedral(12)
    yield build_quaternion(8)
    yield build_quaternion(12)
    yield direct_product(build_cyclic(2), build_cyclic(6))
    for k in MODULE_KINDS:
        yield sdp_module(k)


@pytest.mark.parametrize("G", list(all_catalog_groups()), ids=lambda G: G.name)
def test_constructors_satisfy_axioms(G):
    assert_group_axioms(G)
    for i, row in enumerate(G.mul[:12]):
        for j in range(G.order):
            for k in range(0, G.order, max(1, G.order // 12)):
                assert G.mul[row[j]][k] == G.mul[i][G.mul[j][k]]


def test_bad_tables_rejected():
    with pytest.raises(GroupError):
        GroupTable(((0, 1), (1, 1)))
    with pytest.raises(GroupError):
        GroupTable(((1, 0), (0, 1)))
    # Latin square with identity that is not associative (order 5 loop)
    loop = ((0, 1, 2, 3, 4), (1, 0, 3, 4, 2), (2, 4, 0, 1, 3), (3, 2, 4, 0, 1), (4, 3, 1, 2, 0))
    with pytest.raises(GroupError):
        GroupTable(loop)


def test_cyclic():
    assert build_cyclic(1).order == 1
    C4 = build_cyclic(4)
    assert sorted(C4.orders) == [1, 2, 4, 4]
    C12 = build_cyclic(12)
    assert C12.element_order(1) == 12 and C12.element_order(0) == 1
    with pytest.raises(GroupError):
        build_cyclic(0)


def test_dihedral():
    assert build_dihedral(2).is_abelian
    D8 = build_dihedral(8)
    assert not D8.is_abelian and len(center(D8)) == 2 == len(naive_center(D8.mul))
    D12 = build_dihedral(12)
    C2xD6 = direct_product(build_cyclic(2), build_dihedral(6))
    assert D12.fingerprint() == C2xD6.fingerprint()
    with pytest.raises(GroupError):
        build_dihedral(7)


def test_quaternion():
    Q8 = build_quaternion(8)
    assert histogram(Q8) == {1: 1, 2: 1, 4: 6}
    assert Q8.element_order(Q8.index_of("y")) == 4
    assert center(Q8) == {0, Q8.index_of("x^2")}
    Q12 = build_quaternion(12)
    assert Q12.order == 12 and sum(o == 2 for o in Q12.orders) == 1
    with pytest.raises(GroupError):
        build_quaternion(10)


def test_direct_products():
    V4 = direct_product(build_cyclic(2), build_cyclic(2))
    assert V4.is_abelian and V4.exponent == 2
    G = build_quaternion(8)
    assert direct_product(build_cyclic(1), G).fingerprint() == G.fingerprint()
    P = direct_product(build_cyclic(2), build_cyclic(6))
    assert P.order == 12 and P.is_abelian


def test_trivial_action_is_direct_product():
    A, B = elementary_abelian("ab"), build_cyclic(3)
    assert semidirect_product(GroupAction.trivial(B, A)).mul == direct_product(A, B).mul


def test_y_c3_gives_a4():
    G = sdp_module("Y_C3")
    assert G.order == 12 and 6 not in G.orders and len(center(G)) == 1
    assert histogram(G) == {1: 1, 2: 3, 3: 8}


def test_inversion_action_gives_d8():
    A = build_cyclic(4, "r")
    inv = GroupHom(A, A, (0, 3, 2, 1))
    G = semidirect_product(GroupAction.from_generator(build_cyclic(2, "s"), A, 1, inv))
    assert G.fingerprint() == build_dihedral(8).fingerprint()


def test_module_actions():
    q = module_action("Q_C2")
    a, b = 1, 2
    assert q.act(1, a) == a ^ b and q.act(1, b) == b
    assert fixed_subgroup(q) == {0, b}
    y = module_action("Y_C3")
    assert y.act(1, a) == a ^ b and y.act(1, b) == a
    assert y.auto_of[1].image != tuple(range(4)) and y.auto_of[2].image != tuple(range(4))
    assert fixed_subgroup(y) == {0}
    yq = module_action("YQ_C6")
    assert all(yq.auto_of[k].image != tuple(range(16)) for k in range(1, 6))
    assert fixed_subgroup(GroupAction.trivial(build_cyclic(3), elementary_abelian("ab"))) == set(range(4))


def test_yq_module_matches_listed_checks():
    act = module_action("YQ_C6")
    al, be, ga, de = 1, 2, 4, 8
    x3, x2 = act.auto_of[3], act.auto_of[2]
    assert [x3(al), x3(be), x3(ga), x3(de)] == [al ^ be, be, ga ^ de, de]
    assert [x2(al), x2(be), x2(ga), x2(de)] == [ga, de, al ^ ga, be ^ de]


@pytest.mark.parametrize("kind", MODULE_KINDS)
def test_actions_respect_composition(kind):
    act = module_action(kind)
    B = act.actor
    for b1 in range(B.order):
        for b2 in range(B.order):
            lhs = act.auto_of[B.mul[b1][b2]].image
            rhs = act.auto_of[b1].compose(act.auto_of[b2]).image
            assert lhs == rhs


def test_fingerprints():
    assert histogram(sdp_module("Q_C4")) == {1: 1, 2: 7, 4: 8}
    assert len(center(sdp_module("Q_C4"))) == 4
    S = sdp_module("S_C4")
    assert S.order == 64 and histogram(S) == {1: 1, 2: 19, 4: 28, 8: 16} and len(center(S)) == 2
    U = sdp_module("U_C4")
    assert U.order == 32 and histogram(U) == {1: 1, 2: 11, 4: 20}
    YQ = sdp_module("YQ_C6")
    assert YQ.order == 96 and len(center(YQ)) == 1
    assert histogram(YQ) == {1: 1, 2: 19, 3: 32, 4: 12, 6: 32}
    assert sdp_module("F2_C6").fingerprint() == direct_product(build_cyclic(2), build_cyclic(6)).fingerprint()
    assert sdp_module("Y_C6").fingerprint() == direct_product(build_cyclic(2), sdp_module("Y_C3")).fingerprint()


def test_iterated_family():
    assert iterated_family("Y_C3", 1).mul == sdp_module("Y_C3").mul
    assert iterated_family("Q_C4", 1).fingerprint() == sdp_module("Q_C4").fingerprint()
    G = iterated_family("Y_C3", 2)
    assert G.order == 48
    assert_group_axioms(G)
    with pytest.raises(GroupError):
        iterated_family("Y_C3", 0)


def test_centralizers():
    A4 = sdp_module("Y_C3")
    A = [a * 3 for a in range(4)]
    assert centralizer(A4, [0]) == set(range(12))
    assert centralizer(A4, A) == set(A)
    G = sdp_module("Q_C4")
    Q = [a * 4 for a in range(4)]
    C = centralizer(G, Q)
    assert len(C) == 8 and C == G.subgroup_generated(Q + [2])
    for S in ([1], [5], Q, [3, 7]):
        C = centralizer(G, S)
        assert is_subgroup(G, C) and all(G.inv[c] in C for c in C)


def test_text_roundtrip(tmp_path):
    G = sdp_module("YQ_C6")
    G.save(tmp_path / "g.txt")
    H = GroupTable.load(tmp_path / "g.txt")
    assert H.mul == G.mul and H.labels == G.labels
    assert GroupTable.from_text(build_cyclic(3).to_text()).mul == build_cyclic(3).mul
    with pytest.raises(GroupError):
        GroupTable.from_text("group 2\n0 1\n1 1\n")
