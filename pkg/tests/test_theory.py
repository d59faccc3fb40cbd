import dataclasses

import pytest

from lawvere.cat import FAIL
from lawvere.errors import CompositionError
from lawvere.finset import FinFunction
from lawvere.terms import MONOID_SIGNATURE, Var, parse
from lawvere.theory import (TermTuple, check_lawvere_structure, check_theory_morphism,
                            compose_theory_morphisms, eval_theory_morphism, finset_theory,
                            free_term_theory, from_initial, identity_theory_morphism,
                            make_theory, monoid_theory, presented_theory, theory_morphism)


def test_finset_theory_is_lawful():
    assert all(r.passed for r in check_lawvere_structure(finset_theory(), 3))


@pytest.mark.parametrize("theory", [free_term_theory(), monoid_theory()], ids=lambda t: t.name)
def test_presented_theories_lawful_at_small_bound(theory):
    reports = check_lawvere_structure(theory, 2)
    assert all(r.passed for r in reports), [r.render() for r in reports if not r.passed]


def test_injections_and_copairs_in_a_presented_theory():
    t = monoid_theory()
    assert t.injection(3, 1) == TermTuple(1, 3, (Var(1),))
    pts = [TermTuple(1, 2, (parse("(mul x1 x0)"),)), TermTuple(1, 2, (parse("e"),))]
    assert t.copair_points(pts, 2).terms == (parse("(mul x1 x0)"), parse("e"))
    assert t.copair_points([], 2) == TermTuple(0, 2, ())
    assert t.structure(FinFunction(2, 3, (2, 2))) == TermTuple(2, 3, (Var(2), Var(2)))


def test_composition_substitutes_and_normalizes():
    t = monoid_theory()
    f = TermTuple(1, 2, (parse("(mul x0 (mul e x1))"),))
    g = TermTuple(2, 1, (parse("x0"), parse("e")))
    assert t.category.compose(f, g) == TermTuple(1, 1, (Var(0),))
    with pytest.raises(CompositionError):
        t.category.compose(f, f)


def test_hom_examples():
    t = monoid_theory()
    listed = [str(u.terms[0]) for u in t.category.hom(1, 1, 3)]
    assert {"x0", "e", "(mul x0 x0)"} <= set(listed)
    assert len(t.category.hom(0, 3, 3)) == 1


def test_nonconfluent_presentation_breaks_associativity():
    bad = presented_theory(MONOID_SIGNATURE, [("(mul x0 e)", "x0"),
                                              ("(mul (mul x0 x1) x2)", "x0")], name="bad")
    reports = check_lawvere_structure(bad, 1, size=3)
    failing = [r for r in reports if r.status == FAIL]
    assert failing and failing[0].law == "associativity"
    assert failing[0].replay()


def test_swapped_copair_breaks_the_coproduct_laws():
    f = finset_theory()
    swapped = make_theory("F-swapped", f.category, lambda u: u,
                          lambda a, b: f.binary.copair(b, a) if a.dom == b.dom else f.binary.copair(a, b),
                          f.initial.bang)
    reports = check_lawvere_structure(swapped, 2)
    assert any(r.status == FAIL and "triangles" in r.law for r in reports)


def test_builtin_theory_morphisms():
    for h in (eval_theory_morphism(), from_initial(monoid_theory()),
              identity_theory_morphism(free_term_theory())):
        reports = check_theory_morphism(h, 2)
        assert all(r.passed for r in reports), [r.render() for r in reports if not r.passed]


def test_permuting_variables_is_not_a_theory_morphism():
    t = free_term_theory()
    swap = lambda s: parse(str(s).replace("x0", "#").replace("x1", "x0").replace("#", "x1"))

    def on_mor(u):
        if (u.dom, u.cod) == (1, 2):
            return TermTuple(1, 2, tuple(swap(s) for s in u.terms))
        return u

    h = theory_morphism("swap(1,2)", t, t, on_mor)
    by_law = {r.law: r for r in check_theory_morphism(h, 2)}
    assert by_law["L ; G = L'"].status == FAIL


def test_theory_morphism_composition():
    ev = eval_theory_morphism()
    comp = compose_theory_morphisms(from_initial(free_term_theory()), ev)
    assert comp(FinFunction(1, 2, (1,))) == TermTuple(1, 2, (Var(1),))
    with pytest.raises(CompositionError):
        compose_theory_morphisms(ev, ev)
