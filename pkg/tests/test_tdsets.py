"""Closure operators, TD/STD sets, type covers, central classification."""

import itertools

import pytest

import oracles
from pealab import (DomainError, as_tdset, bicommutant, builtin, center,
                    classify_central, closure_down, closure_gamma,
                    closure_sup, commutant, is_std, is_td, std_generated,
                    td_generated, type_cover)

C2 = builtin("C2")
M3 = builtin("M3")
B4 = builtin("B4")
MO2 = builtin("MO2")
C2xM3 = builtin("C2xM3")


def all_subsets(t):
    for r in range(t.n + 1):
        yield from map(frozenset, itertools.combinations(range(t.n), r))


def test_sup_closure_of_empty_is_zero(fixture_algebra):
    assert closure_sup(fixture_algebra, frozenset()) == {fixture_algebra.zero}


def test_sup_closure_of_the_b4_atoms():
    # subfamilies: none, p, q, and the disjointly dominated pair p,q
    assert closure_sup(B4, {1, 2}) == {0, 1, 2, 3}


def test_sup_closure_in_mo2_is_blocked_by_the_trivial_center():
    atoms = {1, 2, 3, 4}
    assert closure_sup(MO2, atoms) == atoms | {0}


def test_gamma_closure_of_empty_or_zero():
    assert closure_gamma(M3, frozenset()) == frozenset()
    assert closure_gamma(M3, {0}) == {0}


def test_gamma_closure_in_m3():
    assert closure_gamma(M3, {1}) == {0, 1}


def test_gamma_closure_in_the_product():
    # meets of (1,a) with the four central elements
    assert closure_gamma(C2xM3, {4}) == {0, 3, 1, 4}


def test_down_closure_reaches_the_whole_algebra_from_one(fixture_algebra):
    t = fixture_algebra
    assert closure_down(t, {t.one}) == frozenset(range(t.n))


def test_down_closure_in_m3_and_mo2():
    assert closure_down(M3, {1}) == {0, 1}
    assert closure_down(MO2, {1, 3}) == {0, 1, 3}


def test_commutant_of_empty_is_everything(fixture_algebra):
    t = fixture_algebra
    assert commutant(t, frozenset()) == frozenset(range(t.n))


def test_commutant_of_one_is_zero(fixture_algebra):
    t = fixture_algebra
    assert commutant(t, {t.one}) == {t.zero}


def test_commutant_in_mo2_by_pairwise_meets():
    expected = {e for e in range(6) if oracles.common_lower(MO2, 1, e) == [0]}
    assert expected == {0, 2, 3, 4}
    assert commutant(MO2, {1}) == expected


def test_zero_singleton_is_td_and_std(fixture_algebra):
    t = fixture_algebra
    assert is_td(t, {t.zero})
    assert is_std(t, {t.zero})


def test_central_intervals_are_td(corpus5):
    from pealab import derive_order

    for t in corpus5:
        p = derive_order(t)
        cs = center(t)
        for c in cs.members:
            k = frozenset(d for d in cs.members if p.leq(d, c))
            assert is_td(t, k)


def test_m3_interval_below_the_atom_is_std():
    assert is_std(M3, {0, 1})


def test_td_generated_from_nothing(fixture_algebra):
    t = fixture_algebra
    assert td_generated(t, frozenset()).members == {t.zero}


def test_td_generated_in_m3():
    k = td_generated(M3, {1})
    assert k.members == {0, 1}
    assert k.td and k.std


def test_std_generated_from_one_covers_everything():
    assert std_generated(MO2, {5}).members == frozenset(range(6))


def test_type_cover_of_the_zero_set(fixture_algebra):
    t = fixture_algebra
    assert type_cover(t, {t.zero}) == (t.zero, t.zero)


def test_type_covers_in_m3_and_b4():
    assert type_cover(M3, {0, 1}) == (2, 0)
    assert type_cover(B4, {0, 1, 2, 3}) == (3, 3)


def test_type_cover_requires_td():
    with pytest.raises(DomainError):
        type_cover(M3, {1})  # misses zero, not sup-closed


def test_classify_zero_is_degenerately_everything(fixture_algebra):
    t = fixture_algebra
    k = td_generated(t, frozenset())
    cls = classify_central(t, k, t.zero)
    assert (cls.type_k, cls.locally_type_k, cls.purely_non_k, cls.properly_non_k) \
        == (True, True, True, True)


def test_classify_the_unit_of_m3_against_the_polyatoms():
    k = td_generated(M3, {1})
    cls = classify_central(M3, k, 2)
    assert cls.locally_type_k and not cls.type_k
    assert cls.properly_non_k and not cls.purely_non_k


def test_classify_the_unit_of_b4_against_the_polyatoms():
    k = td_generated(B4, {1, 2})
    assert classify_central(B4, k, 3).type_k


def test_classify_requires_central_argument():
    k = td_generated(M3, {1})
    with pytest.raises(DomainError):
        classify_central(M3, k, 1)


# --- closure laws over the whole small corpus -------------------------------


def test_closure_operator_laws(corpus5):
    ops = (closure_sup, closure_gamma, closure_down, bicommutant)
    for t in corpus5:
        subsets = list(all_subsets(t))
        for op in ops:
            for q in subsets:
                once = op(t, q)
                if op is closure_gamma and not q:
                    # the only operator that does not add zero to nothing
                    assert once == frozenset()
                else:
                    assert q <= once or (op is closure_sup and not q)
                assert op(t, once) == once
            for q in subsets:
                for r in subsets:
                    if q <= r:
                        assert op(t, q) <= op(t, r)


def test_commutant_antitone_and_triple(corpus5):
    for t in corpus5:
        subsets = list(all_subsets(t))
        for q in subsets:
            for r in subsets:
                if q <= r:
                    assert commutant(t, r) <= commutant(t, q)
            assert commutant(t, bicommutant(t, q)) == commutant(t, q)


def test_commutant_ignores_both_generated_closures(corpus5):
    for t in corpus5:
        for q in all_subsets(t):
            c = commutant(t, q)
            assert c == commutant(t, td_generated(t, q).members)
            assert c == commutant(t, std_generated(t, q).members)


def test_commutants_are_std(corpus5):
    for t in corpus5:
        for q in all_subsets(t):
            assert is_std(t, commutant(t, q))
            assert is_std(t, bicommutant(t, q))


def test_td_sets_meet_the_center_exactly(corpus5):
    # K n gammaK = K n Gamma(E) inside gammaK inside Gamma(E)
    for t in corpus5:
        cs = center(t)
        central = set(cs.members)
        for q in all_subsets(t):
            k = td_generated(t, q)
            gamma_k = {cs.cover[e] for e in k.members}
            assert k.members & gamma_k == k.members & central
            assert gamma_k <= central
            # both cover sets are TD again
            assert is_td(t, gamma_k)
            assert is_td(t, k.members & gamma_k)


def test_restricted_cover_of_the_commutant_is_the_complement(corpus5):
    for t in corpus5:
        cs = center(t)
        for q in all_subsets(t):
            k = td_generated(t, q)
            kp = as_tdset(t, commutant(t, k.members))
            assert kp.restricted_type_cover == cs.complement[k.type_cover]


def test_std_type_means_interval_containment(corpus5):
    # for STD K and central c: c is type-K iff the whole interval sits in K
    from pealab import derive_order

    for t in corpus5:
        p = derive_order(t)
        for q in all_subsets(t):
            k = std_generated(t, q)
            for c in center(t).members:
                cls = classify_central(t, k, c)
                interval_in = all(
                    x in k.members for x in range(t.n) if p.leq(x, c))
                assert cls.type_k == interval_in
