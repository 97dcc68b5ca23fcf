import pytest
from hypothesis import given, strategies as st

from stoimenow import bijections as bij
from stoimenow.errors import NotDyck, NotNonnesting, PatternViolation
from stoimenow.matchings import EMPTY, merge, parse_matching, reverse, stat_cr
from stoimenow.patterns import P1, P2, avoiders, avoids, build_family
from stoimenow.posets import (
    Poset,
    canonical_form,
    enumerate_posets,
    omega,
)
from stoimenow.sequences import enumerate_ascent_sequences, enumerate_fishburn, parse_sequence
from test_posets import TEN_POINT_POSET, NINE_POINT_POSET

PHI_IN = "1-3,2-10,4-7,5-8,6-11,9-12,13-16,14-18,15-21,17-19,20-22"
PHI_OUT = "1-7,2-9,3-10,4-12,5-16,6-18,8-13,11-14,15-21,17-19,20-22"


def p2_avoider(max_n=6):
    return st.integers(0, max_n).flatmap(lambda n: st.sampled_from(avoiders(n, P2)))


def p1_avoider(max_n=6):
    return st.integers(0, max_n).flatmap(lambda n: st.sampled_from(avoiders(n, P1)))


# -- Dyck paths -------------------------------------------------------------------


def test_gamma_examples():
    assert str(bij.gamma("UUDUUDDDUDUD")) == "1-3,2-6,4-7,5-8,9-10,11-12"
    assert str(bij.gamma("UD")) == "1-2"
    assert bij.dyck_height("UD") == 1
    assert sorted(bij.dyck_height(mu) for mu in bij.enumerate_dyck(3)) == [1, 2, 2, 2, 3]


def test_gamma_errors():
    with pytest.raises(NotDyck):
        bij.gamma("UUD")
    with pytest.raises(NotNonnesting):
        bij.gamma_inverse(parse_matching("1-4,2-3"))


@given(p1_avoider(7))
def test_gamma_round_trip(m):
    mu = bij.gamma_inverse(m)
    assert bij.gamma(mu) == m
    assert bij.dyck_height(mu) == stat_cr(m)


# -- P1 and P2 gluing --------------------------------------------------------------


def test_split_p1_example():
    m1, m2 = bij.split_p1(parse_matching("1-3,2-6,4-7,5-8,9-10,11-12"))
    assert (str(m1), str(m2)) == ("1-2,3-5,4-6", "1-2,3-4")
    assert str(bij.theta(EMPTY)) == "1-2"


def test_v_map_examples():
    out = bij.v_map(parse_matching("1-4,2-5,3-8,6-9,7-10"))
    assert str(out) == "1-5,2-6,3-9,4-10,7-11,8-12"
    assert bij.redarc(out) == (3, 9)
    assert str(bij.v_map(parse_matching("1-2"))) == "1-3,2-4"


@given(p1_avoider(6))
def test_p1_split_glue(m):
    if m.n:
        assert bij.glue_p1(*bij.split_p1(m)) == m


@given(p2_avoider(6))
def test_p2_split_glue(m):
    if m.n:
        a, b = bij.split_p2(m)
        assert avoids(a, P2) and avoids(b, P2)
        assert bij.glue_p2(a, b) == m


def test_glue_rejects_pattern():
    with pytest.raises(PatternViolation):
        bij.theta(P1.matching)


def test_irreducible_p2_count_is_previous_catalan():
    cat = [1, 1, 2, 5, 14, 42, 132]
    for n in range(1, 7):
        irreducible = [m for m in avoiders(n, P2) if len(bij.first_block(m)[1].arcs) == 0]
        assert len(irreducible) == cat[n - 1]


# -- Phi ---------------------------------------------------------------------------


def test_phi_worked_example():
    trace = []
    out = bij.phi(parse_matching(PHI_IN), 4, trace)
    assert str(out) == PHI_OUT
    assert len(trace) == 3
    assert bij.phi_inverse(out, 4) == parse_matching(PHI_IN)


def test_phi_fixes_p4_avoiders():
    for m in avoiders(5, build_family(4, 4)):
        if avoids(m, build_family(2, 4)):
            assert bij.phi(m, 4) == m


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_phi_bijective(k):
    p2k, p4k = build_family(2, k), build_family(4, k)
    for n in range(7):
        dom = avoiders(n, p2k)
        images = [bij.phi(m, k) for m in dom]
        assert len(set(images)) == len(dom)
        assert set(images) == set(avoiders(n, p4k))
        assert all(bij.phi_inverse(y, k) == x for x, y in zip(dom, images))


@pytest.mark.parametrize("k", [2, 3, 4])
def test_reversal_carries_p5_to_p3_counts(k):
    for n in range(7):
        p5 = avoiders(n, build_family(5, k))
        assert {reverse(m) for m in p5} == set(avoiders(n, build_family(4, k)))
        assert len(p5) == len(avoiders(n, build_family(3, k)))


# -- sequences and permutations -----------------------------------------------------


def test_seq_and_perm_decompositions():
    assert bij.decompose_seq_101(parse_sequence("01002232")) == ((0, 1, 0), (0, 0, 1, 0))
    assert bij.decompose_perm_3142((4, 1, 3, 2, 8, 6, 5, 7)) == ((1, 3, 2), (4, 2, 1, 3))
    assert bij.decompose_seq_101((0,)) == ((), ())
    alpha = parse_sequence("01002232")
    glued = bij.glue_p2(bij.psi_p2_inverse((0, 1, 0)), bij.psi_p2_inverse((0, 0, 1, 0)))
    assert bij.psi_p2_inverse(alpha) == glued


def test_psi_and_upsilon_small():
    assert bij.psi_p2(parse_matching("1-2")) == (0,)
    assert bij.psi_p2(parse_matching("1-3,2-4")) == (0, 0)
    assert bij.psi_p2(parse_matching("1-2,3-4")) == (0, 1)
    assert bij.upsilon_p2(parse_matching("1-2")) == (1,)
    assert bij.upsilon_p2(parse_matching("1-3,2-4")) == (2, 1)
    assert bij.upsilon_p2(parse_matching("1-2,3-4")) == (1, 2)


@pytest.mark.parametrize("n", range(8))
def test_psi_upsilon_bijective(n):
    dom = avoiders(n, P2)
    psi = [bij.psi_p2(m) for m in dom]
    ups = [bij.upsilon_p2(m) for m in dom]
    assert set(psi) == set(enumerate_ascent_sequences(n, "101")) and len(set(psi)) == len(dom)
    assert set(ups) == set(enumerate_fishburn(n, True)) and len(set(ups)) == len(dom)
    assert all(bij.psi_p2_inverse(a) == m for m, a in zip(dom, psi))
    assert all(bij.upsilon_p2_inverse(p) == m for m, p in zip(dom, ups))


def test_psi_rejects_101():
    with pytest.raises(PatternViolation):
        bij.psi_p2_inverse((0, 1, 0, 1))


# -- posets ------------------------------------------------------------------------


def test_3plus1_decomposition_fixture():
    first, second = bij.decompose_poset_3plus1(TEN_POINT_POSET)
    assert (first.n, second.n) == (4, 5)
    assert first.relations() == [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]
    assert canonical_form(bij.compose_poset_3plus1(first, second)) == canonical_form(TEN_POINT_POSET)
    assert bij.decompose_poset_3plus1(Poset.chain(1)) == (Poset(0, ()), Poset(0, ()))


def test_n_decomposition_fixture():
    first, second = bij.decompose_poset_N(NINE_POINT_POSET)
    assert (first.n, second.n) == (4, 4)
    assert canonical_form(bij.compose_poset_N(first, second)) == canonical_form(NINE_POINT_POSET)
    a, b = bij.decompose_poset_N(Poset.chain(2))
    assert (a.n, b.n) == (0, 1)


def test_n_decomposition_rejects_n():
    from stoimenow.posets import N_POSET, isolated_elements, ordinal_summands

    with pytest.raises(PatternViolation):
        bij.decompose_poset_N(N_POSET)
    # the isolated element it relies on always exists for N-free posets
    for n in range(1, 7):
        for p in enumerate_posets(n, "N"):
            assert isolated_elements(p.restrict(ordinal_summands(p)[0]))


@pytest.mark.parametrize("avoid, q", [("3+1", P1), ("N", P2)])
def test_omega_commutes_with_decomposition(avoid, q):
    split = {"3+1": (bij.split_p1, bij.decompose_poset_3plus1), "N": (bij.split_p2, bij.decompose_poset_N)}
    msplit, psplit = split[avoid]
    for n in range(1, 7):
        for m in avoiders(n, q):
            a, b = msplit(m)
            pa, pb = psplit(omega(m))
            assert canonical_form(omega(a)) == canonical_form(pa)
            assert canonical_form(omega(b)) == canonical_form(pb)


@pytest.mark.parametrize("avoid", ["3+1", "N"])
def test_poset_round_trips(avoid):
    dec = bij.decompose_poset_3plus1 if avoid == "3+1" else bij.decompose_poset_N
    com = bij.compose_poset_3plus1 if avoid == "3+1" else bij.compose_poset_N
    for n in range(1, 7):
        ps = enumerate_posets(n, avoid)
        for p in ps:
            assert canonical_form(com(*dec(p))) == canonical_form(p)


def test_merge_of_glued_parts_is_consistent():
    m = bij.glue_p1(parse_matching("1-2"), parse_matching("1-2"))
    assert m == merge(bij.theta(parse_matching("1-2")), parse_matching("1-2"))


@pytest.mark.parametrize("q, split, glue", [(P1, bij.split_p1, bij.glue_p1), (P2, bij.split_p2, bij.glue_p2)])
def test_glue_statistic_recurrences(q, split, glue):
    from stoimenow.matchings import stat_bl, stat_fcr, stat_mcr

    for n in range(1, 7):
        for m in avoiders(n, q):
            a, b = split(m)
            assert stat_bl(m) == stat_bl(b) + 1
            if a.n:
                assert stat_mcr(m) == stat_mcr(a) + stat_mcr(b)
                assert stat_fcr(m) == stat_fcr(a) + 1
            else:
                assert stat_mcr(m) == stat_mcr(b) + 1
                assert stat_fcr(m) == 1
