import json

import pytest

from lawvere.cat import (ERROR, FAIL, PASS, Cases, ComputableCategory, ComputableFunctor,
                         LawReport, ProductSpace, check_category_laws, check_functor_laws,
                         compose_functors, functors_equal_on, identity_functor, run_law)
from lawvere.errors import CompositionError
from lawvere.finset import FINSET, FinFunction, fs_compose, fs_identity, identity_on_f


def test_product_space_is_lexicographic():
    space = ProductSpace([[0, 1], "ab"])
    assert len(space) == 4
    assert list(space) == [(0, "a"), (0, "b"), (1, "a"), (1, "b")]
    assert space[2] == (1, "a")
    with pytest.raises(IndexError):
        space[4]


def test_cases_exhaustive_below_cap_and_seeded_above():
    c = Cases(cap=10, samples=3, seed=1)
    assert len(list(c.product(range(3), range(3)))) == 9
    assert c.mode == "exhaustive"
    drawn = list(c.product(range(10), range(10)))
    assert len(drawn) == 3 and drawn == sorted(drawn)
    assert c.mode == "mixed"
    again = Cases(cap=10, samples=3, seed=1)
    list(again.product(range(3), range(3)))
    assert list(again.product(range(10), range(10))) == drawn


def test_run_law_stops_at_first_failure_and_replays():
    rep = run_law("ints", "below five", [(i,) for i in range(10)], lambda i: i < 5,
                  lambda i: {"i": i})
    assert rep.status == FAIL and rep.witness == {"i": 5} and rep.cases == 6
    assert rep.replay() is True


def test_run_law_turns_contract_errors_into_failures():
    def boom(i):
        raise CompositionError("nope")

    rep = run_law("x", "y", [(1,)], boom, lambda i: {"i": i})
    assert rep.status == FAIL and "nope" in rep.detail


def test_report_json_round_trip():
    rep = LawReport("F", "associativity", FAIL, 7, {"f": [1, 2]}, mode="sampled", detail="d")
    data = json.loads(json.dumps(rep.to_json()))
    assert set(data) >= {"structure", "law", "status", "cases", "witness"}
    assert LawReport.from_json(data).render() == rep.render()


def test_f_passes_category_laws_at_bound_2():
    reports = check_category_laws(FINSET, 2, cap=None)
    assert [r.status for r in reports] == [PASS] * 4
    assert reports[3].cases == sum(
        (b ** a) * (c ** b) * (d ** c) for a in range(3) for b in range(3)
        for c in range(3) for d in range(3))


def test_bound_must_be_positive():
    with pytest.raises(ValueError):
        check_category_laws(FINSET, 0)


def _sabotaged_f():
    """Composites of endomorphisms of 2 come out as the identity."""

    def compose(u, v):
        w = fs_compose(u, v)
        if u.dom == u.cod == v.cod == 2:
            return fs_identity(2)
        return w

    return ComputableCategory("F-sabotaged", FINSET.objects, FINSET.hom, fs_identity, compose,
                              FINSET.source, FINSET.target, FINSET.key)


def test_sabotaged_composition_is_caught_with_replayable_witness():
    reports = check_category_laws(_sabotaged_f(), 2, cap=None)
    bad = [r for r in reports if r.status == FAIL]
    assert bad
    assert bad[0].witness is not None and bad[0].replay()


def test_lying_sampler_is_an_integrity_error():
    def hom(a, b, size):
        return FINSET.hom(a, b, size) + ([FinFunction(0, 0, ())] if (a, b) == (1, 1) else [])

    lying = ComputableCategory("F-lying", FINSET.objects, hom, fs_identity, fs_compose,
                               FINSET.source, FINSET.target, FINSET.key)
    assert check_category_laws(lying, 1, cap=None)[0].status == ERROR


def test_functor_laws_and_pointwise_equality():
    assert all(r.passed for r in check_functor_laws(identity_on_f(), 2, cap=None))
    collapse = ComputableFunctor("collapse", FINSET, FINSET, lambda n: n,
                                 lambda u: fs_identity(u.dom) if u.dom == u.cod else u)
    assert not all(r.passed for r in check_functor_laws(collapse, 2, cap=None))
    eq = functors_equal_on(identity_on_f(), collapse, 2, cap=None)
    assert eq.status == FAIL and eq.replay()


def test_swap_on_one_one_differs_from_identity():
    swap = FinFunction(2, 2, (1, 0))

    def on_mor(u):
        return fs_compose(u, swap) if (u.dom, u.cod) == (1, 2) else u

    g = ComputableFunctor("swap12", FINSET, FINSET, lambda n: n, on_mor)
    rep = functors_equal_on(identity_on_f(), g, 2, cap=None)
    assert rep.status == FAIL and rep.witness["f"]["dom"] == 1


def test_functor_composition_checks_endpoints():
    idf = identity_on_f()
    assert compose_functors(idf, idf)(fs_identity(3)) == fs_identity(3)
    other = ComputableCategory("G", FINSET.objects, FINSET.hom, fs_identity, fs_compose,
                               FINSET.source, FINSET.target, FINSET.key)
    with pytest.raises(CompositionError):
        compose_functors(idf, identity_functor(other))
