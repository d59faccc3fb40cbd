"""Acceptance criteria 1-10, each with its stated bound and time limit."""

import itertools
import json
import time
from pathlib import Path

import pytest

from lawvere import cli
from lawvere.coproducts import check_binary_laws, derive_ordered
from lawvere.equivalence import check_round_trip, rml
from lawvere.finset import (check_f_exhaustive, enumerate_homs, fs_compose, fs_identity,
                            initial_object, nonstandard_coproduct_11,
                            ordered_injection_formula, standard_binary_coproduct)
from lawvere.relmonad import (KleisliMor, builtin_monads, check_relmonad_laws, identity_monad,
                              kleisli, monoid_term_monad)
from lawvere.terms import (MONOID_SIGNATURE, Var, enumerate_terms, monoid_rewriting, parse,
                           subst)
from lawvere.theory import (builtin_theories, check_lawvere_structure, eval_theory_morphism)

FIXTURES = Path(__file__).parent / "fixtures"


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def failures(reports):
    return [r.render() for r in reports if not r.passed]


def test_criterion_01_category_f_exhaustive(verdict):
    reports, dt = timed(lambda: check_f_exhaustive(4))
    assoc = next(r for r in reports if r.law == "associativity")
    ok = not failures(reports) and dt < 5.0 and assoc.cases == 37_147_243
    verdict(1, ok, f"F laws over all functions between 0..4, {assoc.cases} triples, {dt:.2f}s")
    assert not failures(reports), failures(reports)
    assert assoc.cases == 37_147_243
    assert dt < 5.0


def test_criterion_02_coproduct_witnesses(verdict):
    std, odd = standard_binary_coproduct(), nonstandard_coproduct_11()

    def run():
        reports = check_binary_laws(std, 4) + check_binary_laws(odd, 4)
        differ = set()
        for m, n in itertools.product(range(5), repeat=2):
            if std.inj0(m, n) != odd.inj0(m, n) or std.inj1(m, n) != odd.inj1(m, n):
                differ.add((m, n))
            for t in range(5):
                for f in enumerate_homs(m, t):
                    for g in enumerate_homs(n, t):
                        if std.copair(f, g) != odd.copair(f, g):
                            differ.add((m, n))
        return reports, differ

    (reports, differ), dt = timed(run)
    exhaustive = all(r.mode == "exhaustive" for r in reports)
    ok = not failures(reports) and exhaustive and differ == {(1, 1)} and dt < 10.0
    verdict(2, ok, f"standard and swapped(1,1) witnesses, m,n,t <= 4, differ at {sorted(differ)}, {dt:.2f}s")
    assert not failures(reports), failures(reports)
    assert exhaustive
    assert differ == {(1, 1)}
    assert dt < 10.0


def test_criterion_03_ordered_coproduct_oracle(verdict):
    w = derive_ordered(initial_object(), standard_binary_coproduct())
    checked, bad = 0, []
    for k in range(5):
        for xs in itertools.product(range(4), repeat=k):
            checked += 1
            if w.coproduct(xs) != sum(xs):
                bad.append((xs, "object"))
            for i in range(k):
                if w.inj(xs, i) != ordered_injection_formula(xs, i):
                    bad.append((xs, i))
    verdict(3, not bad, f"derived ordered coproducts equal the offset formula on {checked} sequences")
    assert checked == sum(4 ** k for k in range(5))
    assert not bad, bad[:5]


def test_criterion_04_monad_laws(verdict):
    monads = builtin_monads()

    def run():
        return {m.name: check_relmonad_laws(m, nmax=3, bound=3, table_cap=4096, seed=42,
                                            samples=200) for m in monads}

    results, dt = timed(run)
    bad = [line for reports in results.values() for line in failures(reports)]
    # a sampled product contributes at least 200 cases
    sampled_ok = all(r.cases >= 200 for reports in results.values() for r in reports
                     if r.mode != "exhaustive")
    ok = not bad and sampled_ok and dt < 20.0
    verdict(4, ok, f"three laws for {len(monads)} builtin monads, {dt:.2f}s")
    assert {"identity", "maybe", "free_monoid", "terminal"} <= set(results)
    assert any(name.startswith("term") for name in results)
    assert not bad, bad
    assert sampled_ok
    assert dt < 20.0


def test_criterion_05_kleisli_of_identity_is_f(verdict):
    monad = identity_monad()
    K = kleisli(monad)
    as_kleisli = lambda u: KleisliMor(u.dom, u.cod, u.table)
    cases, bad = 0, []
    for n in range(4):
        cases += 1
        if K.identity(n) != as_kleisli(fs_identity(n)):
            bad.append(("identity", n))
    for m, n, k in itertools.product(range(4), repeat=3):
        for f in enumerate_homs(m, n):
            for g in enumerate_homs(n, k):
                cases += 1
                if K.compose(as_kleisli(f), as_kleisli(g)) != as_kleisli(fs_compose(f, g)):
                    bad.append((f, g))
    verdict(5, not bad, f"K(identity) agrees with F on {cases} identities and composites")
    assert not bad, bad[:3]


@pytest.mark.parametrize("monad", builtin_monads(), ids=lambda m: m.name)
def test_criterion_06_rml_is_a_lawvere_theory(monad, verdict):
    reports = check_lawvere_structure(rml(monad), bound=3)
    laws = {r.law for r in reports}
    ok = not failures(reports) and "initiality" in laws
    verdict(6, ok, f"RML({monad.name}) passes the Lawvere suite at bound 3 ({len(reports)} reports)")
    assert "L(u) is the copair of the injections selected by u" in laws
    assert not failures(reports), failures(reports)


@pytest.mark.parametrize("monad", builtin_monads(), ids=lambda m: m.name)
def test_criterion_07_unit_isomorphism(monad, verdict):
    rt = check_round_trip(monad, nmax=3, bound=3)
    laws = [r.law for r in rt.reports]
    squares = [l for l in laws if l.startswith("naturality square")]
    ok = rt.passed and "components are bijections" in laws and len(squares) == len(rt.exercised)
    verdict(7, ok, f"unit iso for {monad.name}: bijective, lawful, {len(squares)} naturality squares")
    assert "preserves the unit" in laws and "commutes with extension" in laws
    assert squares and len(squares) == len(rt.exercised)
    assert rt.passed, [r.render() for r in rt.failures()]


@pytest.mark.parametrize("theory", builtin_theories(), ids=lambda t: t.name)
def test_criterion_08_counit_isomorphism(theory, verdict):
    rt = check_round_trip(theory, nmax=2, bound=3)
    by_law = {r.law: r for r in rt.reports}
    inverse = [by_law["G* after G is the identity"], by_law["G after G* is the identity"]]
    ok = (rt.passed and all(r.mode == "exhaustive" for r in inverse)
          and "L ; G = L'" in by_law)
    if theory.name != "F":
        ok = ok and "eval" in rt.exercised
    verdict(8, ok, f"counit iso for {theory.name}: mutual inverses on hom(m,n), m,n <= 2; "
                   f"naturality against {', '.join(rt.exercised)}")
    assert all(r.mode == "exhaustive" for r in inverse)
    assert "L ; G = L'" in by_law
    if theory.name != "F":
        assert "eval" in rt.exercised
        assert f"naturality square for {eval_theory_morphism().name}" in by_law
    assert rt.passed, [r.render() for r in rt.failures()]


def test_criterion_09_substitution_engine(verdict):
    pools = {n: enumerate_terms(MONOID_SIGNATURE, n, 3) for n in range(3)}
    unit_cases = assoc_cases = 0
    bad = []
    for n in range(3):
        ident = [Var(i) for i in range(n)]
        for t in pools[n]:
            unit_cases += 1
            if subst(t, ident) != t:
                bad.append(("unit", t))
    for m, k, n in itertools.product(range(3), repeat=3):
        sigmas, taus = list(itertools.product(pools[k], repeat=m)), list(itertools.product(pools[n], repeat=k))
        # (s ; r) entrywise, shared across every t
        inner = {(si, r): subst(si, r) for si in pools[k] for r in taus}
        for t in pools[m]:
            for s in sigmas:
                ts = subst(t, s)
                for r in taus:
                    assoc_cases += 1
                    if subst(ts, r) != subst(t, [inner[si, r] for si in s]):
                        bad.append(("assoc", t, s, r))
    normal = str(monoid_rewriting().normalize(parse("(mul (mul x0 e) x1)")))
    ok = not bad and normal == "(mul x0 x1)"
    verdict(9, ok, f"substitution unit ({unit_cases}) and associativity ({assoc_cases}) exhaustive; "
                   f"normal form {normal}")
    assert not bad, bad[:3]
    assert normal == "(mul x0 x1)"


def test_criterion_10_cli_exit_codes(verdict, capsys, tmp_path):
    codes = {
        "monoid": cli.main(["laws", "--spec", str(FIXTURES / "monoid.json"), "--bound", "3"]),
        "nonconfluent": cli.main(["laws", "--spec", str(FIXTURES / "nonconfluent.json")]),
        "malformed": cli.main(["laws", "--spec", str(FIXTURES / "malformed.json")]),
    }
    out = capsys.readouterr()
    ok = codes == {"monoid": 0, "nonconfluent": 1, "malformed": 2}
    verdict(10, ok, f"CLI exit codes {codes}")
    assert codes == {"monoid": 0, "nonconfluent": 1, "malformed": 2}
    assert "witness:" in out.out          # the counterexample is shown
    assert "line 4, column 3" in out.err  # the parse error says where


@pytest.mark.runs_last
def test_criterion_10_suite_wall_clock(verdict, session_clock):
    elapsed = time.perf_counter() - session_clock["start"]
    ok = elapsed < 60.0
    verdict(10, ok, f"full default suite wall-clock {elapsed:.1f}s (limit 60s)")
    assert ok
