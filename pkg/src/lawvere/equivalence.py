"""Passing between relative monads and Lawvere theories.

``rml`` sends a monad to its Kleisli category with the embedding of F;
``lrm`` sends a theory to the monad whose carrier at ``n`` is ``hom(1, n)``.
The two round trips come back isomorphic, not equal, and the isomorphisms
are explicit: :func:`unit_iso` on the monad side (a one-entry table goes to
its entry) and :func:`counit_iso` on the theory side (a table of points goes
to their copairing).
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

from .cat import (DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_TABLE_CAP, FAIL, PASS, Cases,
                  LawReport, run_law)
from .errors import ContractError, NotAnIsomorphism
from .relmonad import (CarrierSet, JfRelativeMonad, KleisliMor, MonadMorphism,
                       builtin_morphisms, check_monad_morphism, invert_pointwise_iso,
                       kleisli, kleisli_embedding, kleisli_functor, make_monad)
from .theory import (LawvereTheory, TheoryMorphism, builtin_theory_morphisms,
                     check_theory_morphism, make_theory, theory_morphism)


@functools.lru_cache(maxsize=None)
def rml(monad: JfRelativeMonad) -> LawvereTheory:
    """``(K(RR), L_RR)``: coproducts are sums, copairing concatenates tables."""
    embed = kleisli_embedding(monad)

    def copair(f, g):
        if f.cod != g.cod:
            raise ContractError("copair of Kleisli tables with different codomains")
        return KleisliMor(f.dom + g.dom, f.cod, f.table + g.table)

    theory = make_theory(f"RML({monad.name})", kleisli(monad), embed.on_morphisms, copair,
                         lambda n: KleisliMor(0, n, ()))
    object.__setattr__(theory, "monad", monad)
    return theory


def rml_mor(phi: MonadMorphism) -> TheoryMorphism:
    return TheoryMorphism(f"RML({phi.name})", rml(phi.source), rml(phi.target),
                          kleisli_functor(phi))


@functools.lru_cache(maxsize=None)
def lrm(t: LawvereTheory) -> JfRelativeMonad:
    """Carrier ``hom(1, n)``, unit the ordered injections, extension
    ``g |-> g ; copair(f)``."""
    cat = t.category

    def carrier(n):
        @functools.lru_cache(maxsize=None)
        def enum(b):
            return list(cat.hom(1, n, b))

        @functools.lru_cache(maxsize=None)
        def members(b):
            return frozenset(enum(b))

        def contains(f):
            try:
                if cat.source(f) != 1 or cat.target(f) != n:
                    return False
            except AttributeError:
                return False
            return f in members(cat.size(f))

        return CarrierSet(f"{t.name}(1,{n})", contains, cat.size, enum, cat.key)

    def extend(f, g):
        return cat.compose(g, t.copair_points(f.table, f.cod))

    monad = make_monad(f"LRM({t.name})", carrier, t.injection, extend)
    object.__setattr__(monad, "theory", t)
    return monad


def lrm_mor(h: TheoryMorphism) -> MonadMorphism:
    G = h.functor
    return MonadMorphism(f"LRM({h.name})", lrm(h.source), lrm(h.target), lambda n, f: G(f))


def unit_iso(monad: JfRelativeMonad) -> MonadMorphism:
    """``LRM(RML(RR)) -> RR``: a one-entry table goes to its entry."""
    return MonadMorphism(f"phi[{monad.name}]", lrm(rml(monad)), monad,
                         lambda n, f: f.table[0])


def unit_iso_inverse(monad: JfRelativeMonad) -> MonadMorphism:
    return MonadMorphism(f"phi*[{monad.name}]", monad, lrm(rml(monad)),
                         lambda n, x: KleisliMor(1, n, (x,)))


def counit_iso(t: LawvereTheory) -> TheoryMorphism:
    """``RML(LRM(T, L)) -> (T, L)``: a table of points ``1 -> n`` goes to their copair."""
    return theory_morphism(f"G[{t.name}]", rml(lrm(t)), t,
                           lambda f: t.copair_points(f.table, f.cod))


def counit_inverse(t: LawvereTheory) -> TheoryMorphism:
    """``u |-> [inj_i ; u]``: restrict a morphism ``m -> n`` along each injection."""
    cat = t.category

    def restrict(u):
        m, n = cat.source(u), cat.target(u)
        return KleisliMor(m, n, tuple(cat.compose(t.injection(m, i), u) for i in range(m)))

    return theory_morphism(f"G*[{t.name}]", t, rml(lrm(t)), restrict)


# ---------------------------------------------------------------------------
# round trips


@dataclass
class RoundTripReport:
    direction: str
    subject: str
    reports: list = field(default_factory=list)
    exercised: list = field(default_factory=list)

    @property
    def status(self):
        return PASS if all(r.passed for r in self.reports) else FAIL

    @property
    def passed(self):
        return self.status == PASS

    def failures(self):
        return [r for r in self.reports if not r.passed]

    def to_json(self):
        return {"direction": self.direction, "subject": self.subject, "status": self.status,
                "exercised": list(self.exercised),
                "reports": [r.to_json() for r in self.reports]}

    @classmethod
    def from_json(cls, data):
        return cls(data["direction"], data["subject"],
                   [LawReport.from_json(r) for r in data["reports"]],
                   list(data.get("exercised", [])))

    def render(self):
        lines = [f"{self.status.upper()} round trip ({self.direction}) for {self.subject}"]
        if self.exercised:
            lines.append("  naturality checked against: " + ", ".join(self.exercised))
        lines += ["  " + r.render().replace("\n", "\n  ") for r in self.reports]
        return "\n".join(lines)


def _bijection_report(phi, nmax, bound):
    try:
        inv = invert_pointwise_iso(phi, nmax, bound)
    except NotAnIsomorphism as exc:
        return None, LawReport(phi.name, "components are bijections", FAIL, 1,
                               {"n": exc.n, "element": exc.witness}, detail=str(exc),
                               _replay=lambda: _fails_inversion(phi, nmax, bound))
    cases = sum(len(phi.source.carrier(n).enumerate(bound)) for n in range(nmax + 1))
    return inv, LawReport(phi.name, "components are bijections", PASS, cases)


def _fails_inversion(phi, nmax, bound):
    try:
        invert_pointwise_iso(phi, nmax, bound)
    except NotAnIsomorphism:
        return True
    return False


def monad_naturality(u: MonadMorphism, nmax, bound, cap=DEFAULT_TABLE_CAP,
                     samples=DEFAULT_SAMPLES, seed=DEFAULT_SEED) -> LawReport:
    """``u'(n) ; phi2(n) == phi1(n) ; u(n)`` where ``u' = LRM(RML(u))``."""
    u_prime = lrm_mor(rml_mor(u))
    phi1, phi2 = unit_iso(u.source), unit_iso(u.target)
    src = u_prime.source
    stream = Cases(cap, samples, seed)

    def square(n, f):
        return phi2.component(n, u_prime.component(n, f)) == u.component(n, phi1.component(n, f))

    return run_law(phi1.name, f"naturality square for {u.name}",
                   ((n, f) for n in range(nmax + 1)
                    for (f,) in stream.product(src.carrier(n).enumerate(bound))),
                   square, lambda n, f: {"n": n, "f": src.carrier(n).key(f)}, stream)


def theory_naturality(h: TheoryMorphism, nmax, bound, cap=DEFAULT_TABLE_CAP,
                      samples=DEFAULT_SAMPLES, seed=DEFAULT_SEED) -> list[LawReport]:
    """``H' ; G2 == G1 ; H`` with ``H' = RML(LRM(H))``, plus the explicit
    form ``H'(f) = [H(f_i)]``."""
    h_prime = rml_mor(lrm_mor(h))
    g1, g2 = counit_iso(h.source), counit_iso(h.target)
    src = h_prime.source.category
    out = []
    for law, pred in (
        (f"H' acts entrywise for {h.name}",
         lambda f: h_prime(f) == KleisliMor(f.dom, f.cod, tuple(h(x) for x in f.table))),
        (f"naturality square for {h.name}",
         lambda f: h.target.category.eq(g2(h_prime(f)), h(g1(f)))),
    ):
        stream = Cases(cap, samples, seed)
        cases = ((f,) for m, n in itertools.product(range(nmax + 1), repeat=2)
                 for (f,) in stream.product(src.hom(m, n, bound)))
        out.append(run_law(g1.name, law, cases, pred, lambda f: {"f": src.key(f)}, stream))
    return out


def _is_monad(subject):
    return isinstance(subject, JfRelativeMonad)


def check_round_trip(subject, nmax=3, bound=3, table_cap=DEFAULT_TABLE_CAP, seed=DEFAULT_SEED,
                     samples=DEFAULT_SAMPLES, morphisms=None,
                     check_morphisms=True) -> RoundTripReport:
    """Verify the round-trip isomorphism for a monad or a theory.

    ``morphisms`` is the catalog used for naturality (defaults to the builtin
    monad or theory morphisms); only those touching ``subject`` are used.  On
    the monad side each catalog entry is also checked to be a monad morphism
    (``check_morphisms``), since its square is only meaningful if it is one.
    """
    if _is_monad(subject):
        return _monad_round_trip(subject, nmax, bound, table_cap, seed, samples, morphisms,
                                 check_morphisms)
    if isinstance(subject, LawvereTheory):
        return _theory_round_trip(subject, nmax, bound, table_cap, seed, samples, morphisms)
    raise TypeError(f"expected a monad or a theory, got {subject!r}")


def _touches(mor, subject):
    return (mor.source is subject or mor.target is subject
            or mor.source.name == subject.name or mor.target.name == subject.name)


def _monad_round_trip(monad, nmax, bound, cap, seed, samples, morphisms, check_morphisms):
    out = RoundTripReport("monad-side", monad.name)
    phi = unit_iso(monad)
    inv, bij = _bijection_report(phi, nmax, bound)
    out.reports.append(bij)
    if inv is not None:
        explicit = unit_iso_inverse(monad)

        def both_ways(n, which, x):
            if which == "there":
                return inv.component(n, phi.component(n, x)) == x
            return phi.component(n, inv.component(n, x)) == x and inv.component(n, x) == explicit.component(n, x)

        cases = [(n, "there", x) for n in range(nmax + 1)
                 for x in phi.source.carrier(n).enumerate(bound)]
        cases += [(n, "back", y) for n in range(nmax + 1)
                  for y in monad.carrier(n).enumerate(bound)]
        out.reports.append(run_law(phi.name, "inverse composites are identities", cases,
                                   both_ways, lambda n, w, x: {"n": n, "direction": w,
                                                               "element": repr(x)}))
        out.reports += check_monad_morphism(inv, nmax, bound, cap, seed, samples)
    out.reports += check_monad_morphism(phi, nmax, bound, cap, seed, samples)

    catalog = builtin_morphisms() if morphisms is None else morphisms
    for u in catalog:
        if _touches(u, monad):
            out.exercised.append(u.name)
            if check_morphisms:
                out.reports += check_monad_morphism(u, nmax, bound, cap, seed, samples)
            out.reports.append(monad_naturality(u, nmax, bound, cap, samples, seed))
    return out


def _theory_round_trip(t, nmax, bound, cap, seed, samples, morphisms):
    out = RoundTripReport("theory-side", t.name)
    G, Gstar = counit_iso(t), counit_inverse(t)
    there = G.source.category
    objs = range(nmax + 1)

    s1 = Cases(cap, samples, seed)
    out.reports.append(run_law(
        G.name, "G* after G is the identity",
        ((f,) for m, n in itertools.product(objs, repeat=2)
         for (f,) in s1.product(there.hom(m, n, bound))),
        lambda f: Gstar(G(f)) == f, lambda f: {"f": there.key(f)}, s1))

    s2 = Cases(cap, samples, seed)
    out.reports.append(run_law(
        G.name, "G after G* is the identity",
        ((u,) for m, n in itertools.product(objs, repeat=2)
         for (u,) in s2.product(t.category.hom(m, n, bound))),
        lambda u: t.category.eq(G(Gstar(u)), u), lambda u: {"u": t.category.key(u)}, s2))

    out.reports += check_theory_morphism(G, nmax, bound, cap, samples, seed)

    catalog = builtin_theory_morphisms() if morphisms is None else morphisms
    for h in catalog:
        if _touches(h, t):
            out.exercised.append(h.name)
            out.reports += theory_naturality(h, nmax, bound, cap, samples, seed)
    return out
