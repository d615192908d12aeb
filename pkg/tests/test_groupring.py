import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fullreal.endos import ResourceError
from fullreal.groupring import (
    RingElem,
    augmentation,
    c3_is_unit,
    embeds,
    ideal_closure,
    is_unit,
    is_unit_full_algebra,
    is_unit_via_sylow3_quotient,
    parse_ideal_text,
    quotient,
    read_ideal_file,
    unit_coords,
    unit_group,
    unit_inverse,
    write_ideal_file,
)
from fullreal.groups import (
    build_cyclic,
    build_dihedral,
    build_quaternion,
    elementary_abelian,
    module_action,
    sdp_module,
)
from fullreal.engine.ideals import sdp_c3_ideal
from oracles import naive_closure_rank, table_mul

V4 = elementary_abelian("ab")
Q8 = build_quaternion(8)
A4_ACT = module_action("Y_C3")
A4 = sdp_module("Y_C3")

GROUPS = [build_cyclic(2), build_cyclic(3), V4, build_cyclic(6), build_dihedral(6), build_dihedral(8),
          Q8, A4, build_quaternion(12), sdp_module("Q_C4"), elementary_abelian("abcd")]


def elem(G, text):
    return RingElem.parse(G, text)


def a4_quotient():
    return quotient(ideal_closure(A4, sdp_c3_ideal(A4_ACT)))


def test_parse_and_print():
    u = elem(Q8, "1+x+y+xy")
    assert str(u) == "1+x+y+xy"
    assert elem(Q8, "{0,1,4,5}") == u
    assert elem(Q8, "0").bits == 0
    assert elem(Q8, "x+x").bits == 0
    with pytest.raises(ValueError):
        elem(Q8, "1+z")


def test_ring_mul_examples():
    assert elem(V4, "a") * elem(V4, "b") == elem(V4, "ab")
    assert elem(V4, "1+a") * elem(V4, "1+b") == elem(V4, "1+a+b+ab")
    D6 = build_dihedral(6)
    sigma = RingElem.of(D6, 0, 1, 2)
    assert sigma * sigma == sigma


@pytest.mark.parametrize("k", [1, 3, 5, 7, 9])
def test_sigma_idempotent_and_central(k):
    for G in (build_cyclic(k), build_dihedral(2 * k)):
        sigma = RingElem.of(G, *range(k))
        assert sigma * sigma == sigma
        for g in range(G.order):
            e = RingElem.of(G, g)
            assert e * sigma == sigma * e


def test_augmentation_examples():
    assert augmentation(elem(Q8, "x^3y")) == 1
    u = elem(Q8, "1+x+y")
    assert augmentation(u) == 1 and is_unit_full_algebra(Q8, u)
    C2 = build_cyclic(2)
    assert augmentation(elem(C2, "1+x")) == 0
    assert (elem(C2, "1+x") * elem(C2, "1+x")).bits == 0


def test_augmentation_is_multiplicative(rng):
    for _ in range(1000):
        G = rng.choice(GROUPS)
        u, v = RingElem(G, rng.getrandbits(G.order)), RingElem(G, rng.getrandbits(G.order))
        assert augmentation(u * v) == augmentation(u) & augmentation(v)
        assert augmentation(u + v) == augmentation(u) ^ augmentation(v)


small_groups = st.sampled_from([G for G in GROUPS if G.order <= 8])


@given(small_groups.flatmap(lambda G: st.tuples(
    st.just(G), *(st.integers(0, (1 << G.order) - 1) for _ in range(3)))))
@settings(max_examples=300)
def test_ring_axioms(data):
    G, a, b, c = data
    u, v, w = (RingElem(G, x) for x in (a, b, c))
    assert (u * v) * w == u * (v * w)
    assert u * (v + w) == u * v + u * w
    assert (u + v) * w == u * w + v * w
    assert (u * v).bits == table_mul(G.mul, a, b)


def test_closure_examples():
    assert ideal_closure(Q8, []).rank == 0
    assert ideal_closure(V4, [elem(V4, "1+a+b+ab")]).rank == 1
    gens = [elem(Q8, "1+x+y+xy")]
    assert ideal_closure(Q8, gens).rank == naive_closure_rank(Q8.mul, [g.bits for g in gens])


def test_closure_audit_on_random_generator_sets(rng):
    for _ in range(50):
        G = rng.choice([G for G in GROUPS if G.order <= 16])
        gens = [RingElem(G, rng.getrandbits(G.order)) for _ in range(rng.randint(1, 3))]
        ideal = ideal_closure(G, gens, audit=True)
        assert ideal.audit() is None
        assert all(ideal.contains(w) for w in gens)
        if G.order <= 8:
            assert ideal.rank == naive_closure_rank(G.mul, [w.bits for w in gens])


def test_quotient_examples():
    assert quotient(ideal_closure(Q8, [])).dim == 8
    Q = quotient(ideal_closure(V4, [elem(V4, "1+a+b+ab")]))
    assert Q.dim == 3 and len({Q.rep(RingElem(V4, x)).bits for x in range(16)}) == 8
    assert a4_quotient().dim <= 6


def test_is_unit_examples():
    Q = a4_quotient()
    one = RingElem.of(A4, 0)
    assert is_unit(Q, one) and Q.rep(unit_inverse(Q, one)) == Q.rep(one)
    assert not is_unit(Q, RingElem(A4, 0))
    c = A4.index_of("c")
    assert not is_unit(Q, RingElem.of(A4, 0, c, A4.mul[c][c]))


def test_is_unit_full_algebra_examples():
    assert all(is_unit_full_algebra(Q8, RingElem.of(Q8, g)) for g in range(8))
    assert is_unit_full_algebra(Q8, elem(Q8, "1+x+y"))
    assert not is_unit_full_algebra(build_cyclic(2), elem(build_cyclic(2), "1+x"))


def test_sylow3_quotient_predicate(rng):
    H = [a * 3 for a in range(4)]
    c = A4.index_of("c")
    h = A4.index_of("a")
    assert is_unit_via_sylow3_quotient(A4, H, RingElem.of(A4, 0, h, c))
    assert is_unit_via_sylow3_quotient(A4, H, RingElem.of(A4, h))
    assert [p for p in range(8) if c3_is_unit(p)] == [1, 2, 4]
    for _ in range(200):
        u = RingElem(A4, rng.getrandbits(12))
        assert is_unit_via_sylow3_quotient(A4, H, u) == is_unit_full_algebra(A4, u)
    with pytest.raises(Exception):
        is_unit_via_sylow3_quotient(A4, [0, 1, 2], RingElem.of(A4, 0))


def brute_force_units(Q):
    d = Q.dim
    return [x for x in range(1 << d)
            if any(Q.mul_coords(x, y) == Q.one for y in range(1 << d))]


def random_quotients(rng, count, max_dim):
    out = []
    while len(out) < count:
        G = rng.choice([G for G in GROUPS if G.order <= 16])
        gens = [RingElem(G, rng.getrandbits(G.order)) for _ in range(rng.randint(0, 2))]
        Q = quotient(ideal_closure(G, gens))
        if Q.dim <= max_dim:
            out.append(Q)
    return out


def test_unit_census_matches_exhaustive_inverse_search(rng):
    for Q in random_quotients(rng, 12, 8):
        assert unit_coords(Q) == brute_force_units(Q)


def test_is_unit_matches_inverse_search_up_to_dim_10(rng):
    fixed = [quotient(ideal_closure(G, [])) for G in (build_dihedral(10), Q8, elementary_abelian("abc"))]
    fixed.append(quotient(ideal_closure(A4, [RingElem.of(A4, 0, 3, 6, 9)])))
    assert max(Q.dim for Q in fixed) == 10
    for Q in fixed + random_quotients(rng, 6, 10):
        d = Q.dim
        for _ in range(8):
            x = rng.getrandbits(d) if d else 0
            expected = any(Q.mul_coords(x, y) == Q.one for y in range(1 << d))
            y = Q.inverse_coords(x)
            assert (y is not None) == expected
            if y is not None:
                assert Q.mul_coords(x, y) == Q.one == Q.mul_coords(y, x)


def test_unit_group_examples():
    Q = quotient(ideal_closure(V4, [elem(V4, "1+a+b+ab")]))
    units = {u.bits for u in unit_group(Q)}
    assert units == {Q.rep(RingElem.of(V4, g)).bits for g in range(4)}
    QA = a4_quotient()
    units = {u.bits for u in unit_group(QA)}
    assert units == {QA.rep(RingElem.of(A4, g)).bits for g in range(12)}
    C2 = build_cyclic(2)
    assert len(unit_group(quotient(ideal_closure(C2, [])))) == 2
    C3 = build_cyclic(3)
    assert len(unit_group(quotient(ideal_closure(C3, [])))) == 3
    with pytest.raises(ResourceError):
        unit_group(quotient(ideal_closure(sdp_module("U_C4"), [])), cap_dim=22)


def test_embeds_examples():
    assert embeds(ideal_closure(Q8, [])) == (True, None)
    assert embeds(ideal_closure(V4, [elem(V4, "1+a+b+ab")]))[0]
    C2 = build_cyclic(2)
    assert embeds(ideal_closure(C2, [elem(C2, "1+x")])) == (False, (0, 1))


def test_quotient_multiplication_is_associative(rng):
    for Q in random_quotients(rng, 5, 16):
        d = Q.dim
        for _ in range(1000 // 5):
            x, y, z = (rng.getrandbits(d) if d else 0 for _ in range(3))
            assert Q.mul_coords(Q.mul_coords(x, y), z) == Q.mul_coords(x, Q.mul_coords(y, z))


def test_group_image_closed_when_embedded(rng):
    for Q in random_quotients(rng, 20, 16):
        ok, _ = embeds(Q.ideal)
        if not ok:
            continue
        image = set(Q.group_coords)
        assert all(Q.mul_coords(a, b) in image for a in image for b in image)


def test_ideal_file_roundtrip(tmp_path):
    gens = [elem(Q8, "1+x+y+xy"), elem(Q8, "x^2+x^3y")]
    write_ideal_file(tmp_path / "i.txt", gens)
    assert read_ideal_file(Q8, tmp_path / "i.txt") == gens
    assert parse_ideal_text(Q8, "# comment\n{0,1}\n\n1+x^2\n") == [elem(Q8, "1+x"), elem(Q8, "1+x^2")]
    with pytest.raises(ValueError, match="line 2"):
        parse_ideal_text(Q8, "1+x\n1+q\n")
