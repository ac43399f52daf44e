"""Atoms, boolean/subcentral/monad elements, commutativity, Riesz flags."""

import pytest

import oracles
from pealab import (CLASS_REGISTRY, DomainError, bicommutant, builtin,
                    class_profile, enumerate_peas, is_atomic,
                    is_boolean_element, is_commutative, is_lattice_ordered,
                    is_monad, is_subcentral, is_weak_commutative, monads,
                    polyatoms, riesz_properties, td_from_class,
                    verify_type_class)

C2 = builtin("C2")
M3 = builtin("M3")
B4 = builtin("B4")
MO2 = builtin("MO2")
C2xM3 = builtin("C2xM3")
NC5 = builtin("NC5")


def test_atoms_of_the_fixtures():
    assert oracles.atoms(C2) == {1}
    assert oracles.atoms(MO2) == {1, 2, 3, 4}
    assert oracles.atoms(B4) == {1, 2}
    from pealab import atoms
    for t in (C2, MO2, B4, NC5):
        assert atoms(t) == oracles.atoms(t)


def test_polyatoms_of_the_fixtures():
    assert polyatoms(MO2).members == {0, 1, 2, 3, 4}
    assert polyatoms(B4).members == {0, 1, 2, 3}
    assert polyatoms(M3).members == {0, 1}


def test_boolean_elements():
    assert is_boolean_element(M3, 0)
    assert is_boolean_element(M3, 1)
    assert not is_boolean_element(M3, 2)


def test_central_elements_are_subcentral(fixture_algebra):
    from pealab import center

    t = fixture_algebra
    for c in center(t).members:
        assert is_subcentral(t, c)


def test_atoms_are_subcentral_monads(fixture_algebra):
    t = fixture_algebra
    for a in oracles.atoms(t):
        assert is_subcentral(t, a)
        assert is_monad(t, a)


def test_subcentral_verdict_in_the_product():
    # the interval below (1,a) is a four-element Boolean algebra whose
    # central elements are all meets with global centrals
    assert is_subcentral(C2xM3, 4)


def test_monads():
    assert is_monad(M3, 0) and is_monad(M3, 1)
    assert not is_monad(M3, 2)
    assert is_monad(B4, 3)  # Boolean algebras are all monads
    assert monads(MO2) == {0, 1, 2, 3, 4}
    assert monads(C2xM3) == {0, 1, 3, 4}


def test_polyatoms_inside_monads(corpus5):
    for t in corpus5:
        assert polyatoms(t).members <= monads(t)


def test_weak_commutativity():
    for t in (C2, M3, B4, MO2, C2xM3):
        assert is_commutative(t)
        assert is_weak_commutative(t)
    assert not is_weak_commutative(NC5)
    assert not is_commutative(NC5)


def test_riesz_flags_on_fixtures():
    assert riesz_properties(B4) == riesz_properties(C2)
    assert riesz_properties(B4).rdp2
    mo2 = riesz_properties(MO2)
    assert (mo2.rip, mo2.rdp0, mo2.rdp, mo2.rdp1, mo2.rdp2) \
        == (True, False, False, False, False)
    m3 = riesz_properties(M3)
    assert m3.rdp2 and is_lattice_ordered(M3)


def test_riesz_hierarchy_over_the_corpus(corpus5):
    for t in corpus5:
        f = riesz_properties(t)
        assert (not f.rdp2 or f.rdp1) and (not f.rdp1 or f.rdp) \
            and (not f.rdp or f.rdp0) and (not f.rdp0 or f.rip)
        assert f.rdp2 == (is_lattice_ordered(t) and f.rdp0)
        if is_commutative(t):
            assert f.rdp1 == f.rdp == f.rdp0


def test_lattice_order():
    assert is_lattice_ordered(C2)
    assert is_lattice_ordered(MO2)


def test_nonlattice_examples_from_enumeration(corpus5):
    nonlattice = [t for t in corpus5 if not is_lattice_ordered(t)]
    # the five-element cyclic-complement algebra is the first one
    assert [t.n for t in nonlattice] == [5]
    from pealab import find_isomorphism
    assert find_isomorphism(nonlattice[0], NC5) is not None


def test_atomfree_iff_no_polyatoms(corpus5):
    from pealab import derive_order

    for t in corpus5:
        p = derive_order(t)
        poly = polyatoms(t).members
        for e in range(t.n):
            atom_free = not any(a in oracles.atoms(t) for a in p.below(e))
            assert atom_free == (poly & set(p.below(e)) == {t.zero})


def test_atom_commutants(corpus5):
    # A' consists of the atom-free elements; A'' has atomic intervals
    from pealab import commutant, derive_order, interval_algebra

    for t in corpus5:
        p = derive_order(t)
        a = oracles.atoms(t)
        ap = commutant(t, a)
        for e in range(t.n):
            assert (e in ap) == (not a & set(p.below(e)))
        for e in bicommutant(t, a):
            assert is_atomic(interval_algebra(t, e).table)
        assert bicommutant(t, a) == {
            e for e in range(t.n)
            if is_atomic(interval_algebra(t, e).table)}


def test_td_from_class_lattice_is_std():
    k = td_from_class(MO2, "lattice")
    assert k.std and k.members == frozenset(range(6))


def test_td_from_class_rdp2_on_a_chain_is_everything():
    assert td_from_class(M3, "rdp2").members == {0, 1, 2}


def test_td_from_class_weakcomm_on_nc5():
    k = td_from_class(NC5, "weakcomm")
    # the unit interval is not weak-commutative, all proper ones are
    assert k.members == {0, 1, 2, 3}
    assert k.td


def test_td_from_class_rejects_unknown_names():
    with pytest.raises(DomainError):
        td_from_class(M3, "wrong")


def test_registry_classes_produce_td_sets_everywhere(corpus5):
    for t in corpus5:
        for name, spec in CLASS_REGISTRY.items():
            k = td_from_class(t, name)
            assert k.td
            if spec.strong:
                assert k.std


def test_commutative_class_is_a_strong_type_class(corpus4):
    assert verify_type_class("commutative", corpus4)
    assert verify_type_class("commutative", corpus4, strong=True)


def test_lattice_class_is_a_strong_type_class(corpus4):
    assert verify_type_class("lattice", corpus4, strong=True)


def test_weakcomm_class_closure_at_the_reachable_scale(corpus5):
    # a strong-closure counterexample needs a weak-commutative algebra
    # that is not commutative; none exists with at most 8 elements, so
    # the strong check cannot fail on this corpus
    assert verify_type_class("weakcomm", corpus5)
    assert verify_type_class("weakcomm", corpus5, strong=True)
    assert not [t for t in corpus5
                if is_weak_commutative(t) and not is_commutative(t)]


def test_class_profile_of_mo2():
    profile = class_profile(MO2)
    assert profile.algebra == {
        "atomic": True, "atom-free": False, "lattice": True,
        "commutative": True, "weakcomm": True,
        "rip": True, "rdp0": False, "rdp": False, "rdp1": False, "rdp2": False,
    }
    assert profile.element["atom"] == (False, True, True, True, True, False)
    assert profile.element["monad"] == (True, True, True, True, True, False)
    assert profile.element["boolean"] == (True, True, True, True, True, False)
    assert profile.element["subcentral"] == (True, True, True, True, True, True)


def test_class_profile_of_nc5():
    profile = class_profile(NC5)
    assert profile.algebra["commutative"] is False
    assert profile.algebra["weakcomm"] is False
    assert profile.algebra["lattice"] is False
    assert profile.algebra["atomic"] is True
    # every proper interval of the five-element algebra is tiny, so the
    # failure of the properties lives at the top element only
    assert profile.element["weakcomm"] == (True, True, True, True, False)


def test_finite_scale_aliases():
    k = td_from_class(NC5, "archimedean")
    assert k.members == frozenset(range(5))
    assert td_from_class(MO2, "sigma-complete").members == \
        td_from_class(MO2, "lattice").members
    assert td_from_class(MO2, "sigma-rip").members == \
        td_from_class(MO2, "rip").members
