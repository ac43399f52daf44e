"""Tables, axioms, order, residuals, intervals, products, isomorphisms."""

import itertools

import pytest

import oracles
from pealab import (DomainError, PeaTable, ResourceError, StructuralError,
                    builtin, canonical_key, derive_order, direct_product,
                    find_isomorphism, interval_algebra, pogroup_interval,
                    residuals, verify_axioms, verify_morphism)

C2 = builtin("C2")
M3 = builtin("M3")
B4 = builtin("B4")
MO2 = builtin("MO2")
NC5 = builtin("NC5")


def test_two_element_algebra_is_valid():
    assert verify_axioms(C2).valid


def test_unit_sum_violates_the_fourth_axiom():
    sums = dict(C2.sums)
    sums[(1, 1)] = 1
    broken = PeaTable(2, 0, 1, sums)
    report = verify_axioms(broken)
    assert not report.valid
    assert any(v.axiom == "unit" for v in report.violations)


def test_three_element_chain_is_valid():
    assert verify_axioms(M3).valid


def test_missing_complement_is_reported():
    # drop a+a=1 from the chain: a loses both complements
    sums = {k: v for k, v in M3.sums.items() if k != (1, 1)}
    report = verify_axioms(PeaTable(3, 0, 2, sums))
    assert {v.axiom for v in report.violations} >= {"complement"}


def test_out_of_range_index_is_structural_not_axiomatic():
    with pytest.raises(StructuralError):
        verify_axioms(PeaTable(2, 0, 1, {(0, 5): 1}))


def test_zero_one_collision_flagged():
    report = verify_axioms(PeaTable(2, 0, 0, dict(C2.sums)))
    assert any(v.axiom == "zero-one" for v in report.violations)


def test_degenerate_single_element_algebra_is_permitted():
    one = builtin("ONE")
    assert verify_axioms(one).valid
    assert one.is_degenerate


def test_m3_order_is_a_chain():
    p = derive_order(M3)
    expected = [[oracles.leq(M3, a, b) for b in range(3)] for a in range(3)]
    assert expected == [[True, True, True], [False, True, True], [False, False, True]]
    for a in range(3):
        for b in range(3):
            assert p.leq(a, b) == expected[a][b]


def test_b4_order_has_incomparable_atoms():
    p = derive_order(B4)
    assert not p.leq(1, 2) and not p.leq(2, 1)
    assert p.leq(0, 1) and p.leq(1, 3) and p.leq(2, 3)


def test_order_is_bounded_on_every_fixture(fixture_algebra):
    t = fixture_algebra
    p = derive_order(t)
    for x in range(t.n):
        assert p.leq(t.zero, x) and p.leq(x, t.one)


def test_m3_residuals_at_zero():
    assert residuals(M3, 0, 1) == (1, 1)


def test_m3_complements_solved_in_the_table():
    assert oracles.right_complements(M3, 1) == [1]
    assert oracles.left_complements(M3, 1) == [1]
    p = derive_order(M3)
    assert p.right_complement(1) == 1 and p.left_complement(1) == 1


def test_b4_complements():
    assert oracles.right_complements(B4, 1) == [2]
    p = derive_order(B4)
    assert p.right_complement(1) == 2 and p.left_complement(1) == 2


def test_residuals_undefined_without_order():
    with pytest.raises(DomainError):
        residuals(B4, 1, 2)  # p and q incomparable


def test_residual_identities_on_chains_of_fixtures(fixture_algebra):
    # for a <= b <= c: (c\a)\(b\a) = c\b and the three companions
    t = fixture_algebra
    p = derive_order(t)
    for a in range(t.n):
        for b in p.above(a):
            for c in p.above(b):
                ca, ba, cb = (p.left_residual(a, c), p.left_residual(a, b),
                              p.left_residual(b, c))
                ac, ab, bc = (p.right_residual(a, c), p.right_residual(a, b),
                              p.right_residual(b, c))
                assert p.leq(ba, ca)
                assert p.left_residual(ba, ca) == cb
                assert p.leq(ab, ac)
                assert p.right_residual(ab, ac) == bc
                # mixed forms
                assert p.leq(cb, ca)
                assert p.right_residual(cb, ca) == ba
                assert p.leq(bc, ac)
                assert p.left_residual(bc, ac) == ab


def test_sums_are_cancellative(fixture_algebra):
    t = fixture_algebra
    for a in range(t.n):
        seen = {}
        for c in range(t.n):
            v = t.sums.get((a, c))
            if v is not None:
                assert v not in seen, "a+c = a+c' with c != c'"
                seen[v] = c


def test_interval_at_one_is_the_whole_algebra():
    iv = interval_algebra(M3, M3.one)
    assert find_isomorphism(iv.table, M3) is not None


def test_interval_at_zero_is_degenerate():
    iv = interval_algebra(B4, B4.zero)
    assert iv.table.n == 1


def test_mo2_interval_below_an_atom_is_c2():
    iv = interval_algebra(MO2, 1)
    assert iv.table.n == 2
    assert find_isomorphism(iv.table, C2) is not None
    assert iv.embed == (0, 1)


def test_intervals_pass_the_axioms(fixture_algebra):
    t = fixture_algebra
    for e in range(t.n):
        assert verify_axioms(interval_algebra(t, e).table).valid


def test_unary_product_is_the_factor():
    prod = direct_product([C2])
    assert find_isomorphism(prod.table, C2) is not None


def test_product_of_c2_and_m3():
    prod = direct_product([C2, M3]).table
    assert prod.n == 6
    assert verify_axioms(prod).valid
    assert oracles.atoms(prod) == {
        i for i, c in enumerate(itertools.product(range(2), range(3)))
        if c in ((1, 0), (0, 1))}


def test_product_of_two_c2_is_b4():
    prod = direct_product([C2, C2]).table
    assert oracles.exists_isomorphism(prod, B4)
    assert find_isomorphism(prod, B4) is not None


def test_empty_product_rejected():
    with pytest.raises(DomainError):
        direct_product([])


def test_projections_are_morphisms_and_recover_factors():
    from pealab import MorphismWitness

    prod = direct_product([C2, M3])
    for k, factor in enumerate(prod.factors):
        witness = MorphismWitness(prod.projections[k], "morphism")
        assert verify_morphism(prod.table, factor, witness)
        unit = prod.index_of[tuple(
            f.one if i == k else f.zero for i, f in enumerate(prod.factors))]
        assert find_isomorphism(interval_algebra(prod.table, unit).table, factor)


def test_identity_isomorphism_on_c2():
    w = find_isomorphism(C2, C2)
    assert w.map == (0, 1)


def test_no_isomorphism_across_cardinalities():
    assert find_isomorphism(M3, B4) is None


def test_no_isomorphism_between_b4_and_the_chain():
    c4 = pogroup_interval(3)
    assert not oracles.exists_isomorphism(c4, B4)
    assert find_isomorphism(c4, B4) is None


def test_witnesses_survive_independent_verification():
    w = find_isomorphism(direct_product([C2, C2]).table, B4)
    assert oracles.is_isomorphism_map(direct_product([C2, C2]).table, B4, list(w.map))


def test_pogroup_unit_interval_is_c2():
    t = pogroup_interval(1)
    assert verify_axioms(t).valid
    assert find_isomorphism(t, C2) is not None


def test_pogroup_two_interval_is_the_three_chain():
    t = pogroup_interval(2)
    assert verify_axioms(t).valid
    assert t.sums[(1, 1)] == 2
    assert find_isomorphism(t, M3) is not None


def test_pogroup_square_is_b4():
    t = pogroup_interval((1, 1))
    assert verify_axioms(t).valid
    assert find_isomorphism(t, B4) is not None


def test_pogroup_rejects_negative_u():
    with pytest.raises(DomainError):
        pogroup_interval((1, -1))


def test_pogroup_resource_bound():
    with pytest.raises(ResourceError):
        pogroup_interval((100, 100), max_elements=512)


def test_canonical_key_is_an_isomorphism_invariant():
    prod = direct_product([C2, C2]).table
    assert canonical_key(prod) == canonical_key(B4)
    assert canonical_key(M3) != canonical_key(pogroup_interval(3))


def test_nc5_is_valid_and_five_elements():
    assert verify_axioms(NC5).valid
    assert NC5.sums.get((1, 3)) == 4 and NC5.sums.get((3, 1)) is None
