from itertools import product

import pytest

from hilbertalg import (
    NonMonomialFilterError,
    NotClosureRetractError,
    NotSpecialError,
    all_closure_endos,
    all_multipliers,
    ce_from_monomial_filter,
    ce_from_retract,
    compose,
    cross_meets,
    endomorphisms_bruteforce,
    filter_generated,
    finitely_generated_ce,
    fixpoints,
    identity_map,
    is_closure_endomorphism,
    is_closure_operator,
    is_closure_retract,
    is_endomorphism,
    is_filter,
    is_idempotent,
    is_isotone,
    is_multiplier,
    is_special,
    kernel,
    peirce_map,
    search_endomorphisms,
    special_closure_retracts,
    translation,
)
from hilbertalg.closure import (
    ce_structure_report,
    fixpoint_embedding_report,
    fixpoint_filter_report,
    idempotent_composition_report,
    implication_extras_report,
    isotone_kernel_special_report,
    kernel_embedding_report,
    monomial_roundtrip,
)

from _oracles import closure_endos_brute, endomorphisms_brute


def test_characterizations_agree_on_all_maps(algebras4):
    for alg in algebras4:
        imp, leq, n = alg.imp, alg.leq, alg.n
        for f in product(range(n), repeat=n):
            m1 = is_multiplier(alg, f)
            m3 = is_endomorphism(alg, f)
            m6 = all(
                imp[f[x]][f[y]] == imp[x][f[y]] for x in range(n) for y in range(n)
            )
            leto = all(
                leq[f[x]][imp[f[y]][f[z]]]
                for x in range(n)
                for y in range(n)
                for z in range(n)
                if leq[x][imp[y][z]]
            )
            lc = all(
                any(f[x] == imp[p][x] for p in range(n)) for x in range(n)
            )
            direct = is_closure_endomorphism(alg, f)
            assert direct == (m1 and m3) == (m1 and m6) == (m3 and m6)
            assert direct == (leto and lc)
            assert direct == (m1 and is_isotone(alg, f))


def test_named_maps_are_closure_endos(algebras4):
    for alg in algebras4:
        ce = set(all_closure_endos(alg).carrier)
        assert identity_map(alg) in ce
        for p in alg.elements:
            assert translation(alg, p) in ce
            assert peirce_map(alg, p) in ce


def test_ce_carriers(chain2, godel3, tarski3):
    assert all_closure_endos(chain2).carrier == ((0, 1), (1, 1))
    godel_ce = all_closure_endos(godel3)
    assert godel_ce.carrier == ((0, 1, 2), (0, 2, 2), (2, 2, 2))
    # a 3-chain: the order is total
    assert all(
        godel_ce.lattice.leq[i][j] or godel_ce.lattice.leq[j][i]
        for i in range(3)
        for j in range(3)
    )
    # the chain has 4 multipliers but only 3 closure endomorphisms
    assert len(all_multipliers(godel3)) == 4
    tarski_ce = all_closure_endos(tarski3)
    assert tarski_ce.carrier == ((0, 1, 2), (0, 2, 2), (2, 1, 2), (2, 2, 2))
    assert tarski_ce.lattice.join(1, 2) == 3  # boolean square


def test_tarski3_complement_example(tarski3):
    from hilbertalg import join_translation, pointwise_imp

    alpha_a = translation(tarski3, 0)
    alpha_b = translation(tarski3, 1)
    # complement of the translation by a is the join translation by a,
    # which coincides with the translation by the other atom
    complement = pointwise_imp(tarski3, alpha_a, identity_map(tarski3))
    assert complement == join_translation(tarski3, 0) == alpha_b
    assert fixpoints(tarski3, alpha_a) == kernel(tarski3, alpha_b) == frozenset({1, 2})


def test_ce_against_direct_definition(algebras4):
    for alg in algebras4:
        assert list(all_closure_endos(alg).carrier) == closure_endos_brute(alg)


def test_ce_equals_filter_route(algebras4):
    from hilbertalg.closure import closure_endos_via_filters

    for alg in algebras4:
        assert list(all_closure_endos(alg).carrier) == closure_endos_via_filters(alg)


def test_kernels(godel3, algebras4):
    assert kernel(godel3, translation(godel3, 1)) == frozenset({1, 2})
    assert fixpoints(godel3, translation(godel3, 1)) == frozenset({0, 2})
    for alg in algebras4:
        for p in alg.elements:
            # kernel of a translation is the principal filter, and conversely:
            # the principal filter rebuilds the translation
            principal = filter_generated(alg, [p])
            assert kernel(alg, translation(alg, p)) == principal
            assert ce_from_monomial_filter(alg, principal) == translation(alg, p)


def test_non_isotone_multiplier_is_rejected(godel3):
    f = (2, 1, 2)  # the join translation by a; a multiplier but not isotone
    assert is_multiplier(godel3, f)
    assert not is_isotone(godel3, f)
    assert not is_closure_endomorphism(godel3, f)
    assert not is_filter(godel3, kernel(godel3, f))
    assert not is_special(godel3, fixpoints(godel3, f))


def test_isotone_kernel_special_report(algebras4):
    for alg in algebras4:
        report = isotone_kernel_special_report(alg)
        assert report.ok, report.as_dict()


def test_endomorphism_search(algebras4, godel3):
    for alg in algebras4:
        assert search_endomorphisms(alg) == endomorphisms_brute(alg)
        assert endomorphisms_bruteforce(alg) == endomorphisms_brute(alg)
    assert search_endomorphisms(godel3) == [
        (0, 1, 2),
        (0, 2, 2),
        (1, 2, 2),
        (2, 2, 2),
    ]


def test_non_closure_endomorphism_fails_idempotent_composite(godel3):
    f = (1, 2, 2)  # an endomorphism that is not idempotent
    assert is_endomorphism(godel3, f)
    assert not is_closure_operator(godel3, f)
    idems = [t for t in search_endomorphisms(godel3) if is_idempotent(t)]
    assert any(not is_idempotent(compose(t, f)) for t in idems)


def test_idempotent_composition_report(algebras4):
    for alg in algebras4:
        report = idempotent_composition_report(alg)
        assert report.ok, report.as_dict()


def test_kernel_embedding_report(algebras4):
    for alg in algebras4:
        report = kernel_embedding_report(alg)
        assert report.ok, report.as_dict()
        assert not any(c.status == "skip" for c in report.checks)


def test_ce_structure_report(algebras4):
    for alg in algebras4:
        report = ce_structure_report(alg)
        assert report.ok, report.as_dict()


def test_monomial_filter_roundtrip_examples(godel3):
    assert ce_from_monomial_filter(godel3, {2}) == identity_map(godel3)
    assert ce_from_monomial_filter(godel3, {0, 1, 2}) == (2, 2, 2)
    assert ce_from_monomial_filter(godel3, {1, 2}) == translation(godel3, 1)
    with pytest.raises(ValueError):
        ce_from_monomial_filter(godel3, {0, 2})  # not a filter


def test_mock_monomial_domain_error(mock_nonmonomial):
    mock = mock_nonmonomial
    bad = frozenset({2, 3})
    assert is_filter(mock, bad)
    with pytest.raises(NonMonomialFilterError) as err:
        ce_from_monomial_filter(mock, bad)
    assert err.value.element == 0
    assert err.value.class_members == frozenset({0, 1})
    fails, skips = monomial_roundtrip(
        mock, [frozenset({3}), bad, frozenset(range(4))]
    )
    assert fails == []
    assert len(skips) == 1 and "no greatest element" in skips[0]


def test_special_and_retract_examples(godel3, tarski3, fixtures):
    for alg in fixtures:
        universe = frozenset(alg.elements)
        unit = frozenset([alg.one])
        for s in (universe, unit):
            assert is_special(alg, s) and is_closure_retract(alg, s)
    assert is_special(godel3, frozenset({0, 2}))
    assert is_closure_retract(godel3, frozenset({0, 2}))
    # {a, 1} on the chain is a closure retract but not special
    assert is_closure_retract(godel3, frozenset({1, 2}))
    assert not is_special(godel3, frozenset({1, 2}))
    # the atoms have nothing above the unit, so no closure retract
    assert not is_closure_retract(tarski3, frozenset({0, 1}))


def test_retract_roundtrip_examples(godel3, fixtures):
    for alg in fixtures:
        assert ce_from_retract(alg, frozenset(alg.elements)) == identity_map(alg)
        assert ce_from_retract(alg, frozenset([alg.one])) == (alg.one,) * alg.n
    assert ce_from_retract(godel3, frozenset({0, 2})) == translation(godel3, 1)


def test_retract_domain_errors(godel3, tarski3):
    with pytest.raises(NotClosureRetractError) as err:
        ce_from_retract(tarski3, frozenset({0, 1}))
    assert err.value.element == 2
    with pytest.raises(NotSpecialError) as err:
        ce_from_retract(godel3, frozenset({1, 2}))
    assert err.value.pair == (0, 1)
    with pytest.raises(NotClosureRetractError):
        ce_from_retract(godel3, frozenset())


def test_cross_meets_examples(godel3, tarski3):
    # fixpoint sets of the two translations on the tarski algebra
    fa = fixpoints(tarski3, translation(tarski3, 0))
    fb = fixpoints(tarski3, translation(tarski3, 1))
    assert cross_meets(tarski3, fa, fb) == frozenset({0, 1, 2})
    assert cross_meets(godel3, frozenset({0, 2}), frozenset({2})) == frozenset({0, 2})


def test_fixpoint_lattice_of_chain_is_dual_chain(godel3):
    fixes = sorted(
        (fixpoints(godel3, f) for f in all_closure_endos(godel3).carrier),
        key=lambda s: (len(s), sorted(s)),
    )
    assert fixes == [frozenset({2}), frozenset({0, 2}), frozenset({0, 1, 2})]


def test_fixpoint_embedding_report(algebras4):
    for alg in algebras4:
        report = fixpoint_embedding_report(alg)
        assert report.ok, report.as_dict()


def test_special_retract_scan(tarski3):
    retracts = special_closure_retracts(tarski3)
    ce = all_closure_endos(tarski3)
    assert set(retracts) == {fixpoints(tarski3, f) for f in ce.carrier}


def test_implication_extras(catalog4, godel3):
    ran = 0
    for entry in catalog4:
        if entry.implication_algebra:
            report = implication_extras_report(entry.algebra)
            assert report.ok, report.as_dict()
            ran += 1
    assert ran >= 4
    with pytest.raises(ValueError):
        implication_extras_report(godel3)


def test_fixpoint_filter_characterization(algebras4, godel3, tarski3):
    for alg in algebras4:
        report = fixpoint_filter_report(alg)
        assert report.ok, report.as_dict()
    # explicit instance on the chain: fixpoints of the translation by a
    fa = fixpoints(godel3, translation(godel3, 1))
    assert fa == frozenset({0, 2})
    assert not is_filter(godel3, fa)  # 0 <= a but a is missing
    for f in all_closure_endos(tarski3).carrier:
        assert is_filter(tarski3, fixpoints(tarski3, f))


def test_finitely_generated_closure_endos(algebras4):
    for alg in algebras4:
        assert finitely_generated_ce(alg) == list(all_closure_endos(alg).carrier)
