"""Lawvere theories, their morphisms and presented theories.

A theory here is a category whose objects are the naturals, together with a
structure functor ``L: F -> T`` that is the identity on objects.  The
binary coproduct of ``m`` and ``n`` is ``m + n`` with injections ``L`` of the
standard injections of F; the theory supplies only the copairing and the
morphisms out of ``0``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .cat import (DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_TABLE_CAP, ComputableCategory,
                  ComputableFunctor, LawReport, check_category_laws, check_functor_laws,
                  compose_functors, functors_equal_on, run_law, table_space)
from .coproducts import (BinaryCoproductWitness, InitialObjectWitness, OrderedCoproductWitness,
                         check_binary_laws, check_initial, check_strict_respect_binary,
                         check_strict_respect_ordered, derive_ordered)
from .errors import CompositionError, ContractError
from .finset import FINSET, FinFunction, enumerate_homs, standard_binary_coproduct
from .terms import (MONOID_SIGNATURE, RewriteSystem, Signature, Var, enumerate_terms,
                    monoid_rewriting, size as term_size, subst)


@dataclass(frozen=True, eq=False)
class LawvereTheory:
    name: str
    category: ComputableCategory
    structure: ComputableFunctor
    initial: InitialObjectWitness
    binary: BinaryCoproductWitness
    ordered: OrderedCoproductWitness
    display: callable = str

    def __repr__(self):
        return f"<theory {self.name}>"

    def ones(self, m):
        return (1,) * m

    def injection(self, n, i):
        """The ``i``-th injection ``1 -> n`` of the standard ordered structure."""
        return self.ordered.inj(self.ones(n), i)

    def copair_points(self, fs, n):
        """Copair of ``m`` morphisms ``1 -> n`` into a morphism ``m -> n``."""
        return self.ordered.copair(self.ones(len(fs)), fs, n)


def make_theory(name, category, structure_map, copair, bang, display=str) -> LawvereTheory:
    structure = ComputableFunctor(f"L[{name}]", FINSET, category, lambda n: n, structure_map)
    std = standard_binary_coproduct()

    @functools.lru_cache(maxsize=None)
    def inj0(x, y):
        return structure_map(std.inj0(x, y))

    @functools.lru_cache(maxsize=None)
    def inj1(x, y):
        return structure_map(std.inj1(x, y))

    binary = BinaryCoproductWitness(category, lambda x, y: x + y, inj0, inj1, copair,
                                    name=f"standard[{name}]")
    initial = InitialObjectWitness(category, 0, bang)
    return LawvereTheory(name, category, structure, initial, binary,
                         derive_ordered(initial, binary), display)


@functools.lru_cache(maxsize=None)
def finset_theory() -> LawvereTheory:
    """``(F, Id)``, the initial theory."""
    std = standard_binary_coproduct()
    return make_theory("F", FINSET, lambda u: u, std.copair, lambda n: FinFunction(0, n, ()))


# ---------------------------------------------------------------------------
# presented theories


@dataclass(frozen=True, slots=True)
class TermTuple:
    """A morphism ``dom -> cod``: ``dom`` normal-form terms over ``x0..x(cod-1)``."""

    dom: int
    cod: int
    terms: tuple

    def __post_init__(self):
        if not isinstance(self.terms, tuple):
            object.__setattr__(self, "terms", tuple(self.terms))
        if len(self.terms) != self.dom:
            raise ValueError(f"{len(self.terms)} terms for domain {self.dom}")

    def __str__(self):
        return "(" + ", ".join(map(str, self.terms)) + f") : {self.dom}->{self.cod}"

    def to_json(self):
        return [str(t) for t in self.terms]


def presented_theory(signature: Signature, rules=(), name=None, fuel=None) -> LawvereTheory:
    """The theory of ``signature`` modulo oriented ``rules``.

    ``hom(m, n)`` is the set of ``m``-tuples of normal forms over ``n``
    variables; composition substitutes the second tuple into the first and
    normalizes.
    """
    if isinstance(rules, RewriteSystem):
        system = rules
    elif fuel is None:
        system = RewriteSystem(signature, rules)
    else:
        system = RewriteSystem(signature, rules, fuel)
    name = name or f"Th{signature!r}" + (f"/{len(system.rules)} rules" if system.rules else "")
    norm = system.normalize

    @functools.lru_cache(maxsize=None)
    def normal_forms(n, size):
        return [t for t in enumerate_terms(signature, n, size) if system.is_normal(t)]

    def hom(m, n, size):
        return table_space(normal_forms(n, size), m, wrap=lambda ts: TermTuple(m, n, ts))

    composites = {}

    def compose(f, g):
        if f.cod != g.dom:
            raise CompositionError(f"cannot compose {f} with {g}")
        key = (f.terms, g.terms, g.cod)
        hit = composites.get(key)
        if hit is None:
            sigma = g.terms
            hit = TermTuple(f.dom, g.cod, tuple([norm(subst(t, sigma)) for t in f.terms]))
            if len(composites) < 500_000:
                composites[key] = hit
        return hit

    def copair(f, g):
        if f.cod != g.cod:
            raise ContractError(f"copair of {f} and {g}: codomains differ")
        return TermTuple(f.dom + g.dom, f.cod, f.terms + g.terms)

    category = ComputableCategory(
        name=name,
        objects=lambda bound: range(bound + 1),
        hom=hom,
        identity=lambda m: TermTuple(m, m, tuple(Var(i) for i in range(m))),
        compose=compose,
        source=lambda f: f.dom,
        target=lambda f: f.cod,
        key=lambda f: {"dom": f.dom, "cod": f.cod, "terms": f.to_json()},
        size=lambda f: max((term_size(t) for t in f.terms), default=0),
    )
    theory = make_theory(
        name, category,
        lambda u: TermTuple(u.dom, u.cod, tuple(Var(j) for j in u.table)),
        copair, lambda n: TermTuple(0, n, ()))
    object.__setattr__(theory, "rewriting", system)
    object.__setattr__(theory, "signature", signature)
    return theory


@functools.lru_cache(maxsize=None)
def free_term_theory() -> LawvereTheory:
    return presented_theory(MONOID_SIGNATURE, (), name="Th(mul,e)")


@functools.lru_cache(maxsize=None)
def monoid_theory() -> LawvereTheory:
    return presented_theory(MONOID_SIGNATURE, monoid_rewriting(), name="Th(mul,e)/monoid")


def builtin_theories() -> list[LawvereTheory]:
    return [finset_theory(), free_term_theory(), monoid_theory()]


# ---------------------------------------------------------------------------
# checks


def check_lawvere_structure(t: LawvereTheory, bound=3, size=None, cap=DEFAULT_TABLE_CAP,
                            samples=DEFAULT_SAMPLES, seed=DEFAULT_SEED) -> list[LawReport]:
    """Category laws, functoriality of ``L``, bijectivity on objects,
    initiality of ``L(0)``, the binary coproduct laws, strict respect of the
    standard structure of F, and ``L(u) = copair of injections selected by u``.
    """
    size = bound if size is None else size
    cat, L = t.category, t.structure
    reports = check_category_laws(cat, bound, size, cap, samples, seed)
    reports += check_functor_laws(L, bound, size, cap, samples, seed)

    objs = list(cat.objects(bound))
    reports.append(run_law(
        t.name, "structure functor is the identity on objects",
        [(n,) for n in range(bound + 1)],
        lambda n: L.on_objects(n) == n and n in objs, lambda n: {"n": n}))
    reports.append(check_initial(t.initial, bound, size))
    reports += check_binary_laws(t.binary, bound, size, cap, samples, seed)
    reports.append(check_strict_respect_binary(L, standard_binary_coproduct(), t.binary, bound))

    def selected_copair(u):
        n = u.cod
        return cat.eq(L(u), t.copair_points([t.injection(n, j) for j in u.table], n))

    reports.append(run_law(
        t.name, "L(u) is the copair of the injections selected by u",
        ((u,) for m in range(bound + 1) for n in range(bound + 1) for u in enumerate_homs(m, n)),
        selected_copair, lambda u: {"u": u.to_json()}))
    return reports


@dataclass(frozen=True, eq=False)
class TheoryMorphism:
    name: str
    source: LawvereTheory
    target: LawvereTheory
    functor: ComputableFunctor

    def __call__(self, f):
        return self.functor(f)

    def __repr__(self):
        return f"<theory morphism {self.name}: {self.source.name} -> {self.target.name}>"


def theory_morphism(name, source, target, on_morphisms) -> TheoryMorphism:
    return TheoryMorphism(name, source, target,
                          ComputableFunctor(name, source.category, target.category,
                                            lambda n: n, on_morphisms))


def identity_theory_morphism(t: LawvereTheory) -> TheoryMorphism:
    return theory_morphism(f"id[{t.name}]", t, t, lambda f: f)


def compose_theory_morphisms(h1: TheoryMorphism, h2: TheoryMorphism) -> TheoryMorphism:
    if h1.target is not h2.source and h1.target.name != h2.source.name:
        raise CompositionError(f"cannot compose {h1.name} with {h2.name}")
    return TheoryMorphism(f"{h1.name};{h2.name}", h1.source, h2.target,
                          compose_functors(h1.functor, h2.functor))


def from_initial(t: LawvereTheory) -> TheoryMorphism:
    """The structure functor as the morphism ``(F, Id) -> (T, L)``."""
    return TheoryMorphism(f"L[{t.name}]", finset_theory(), t, t.structure)


def eval_theory_morphism() -> TheoryMorphism:
    """Free term theory to the monoid theory: normalize every entry."""
    norm = monoid_theory().rewriting.normalize
    return theory_morphism(
        "eval", free_term_theory(), monoid_theory(),
        lambda f: TermTuple(f.dom, f.cod, tuple(norm(s) for s in f.terms)))


def builtin_theory_morphisms() -> list[TheoryMorphism]:
    out = [eval_theory_morphism()]
    for t in builtin_theories():
        out.append(identity_theory_morphism(t))
        if t.name != "F":
            out.append(from_initial(t))
    return out


def check_theory_morphism(h: TheoryMorphism, bound=3, size=None, cap=DEFAULT_TABLE_CAP,
                          samples=DEFAULT_SAMPLES, seed=DEFAULT_SEED,
                          max_len=None) -> list[LawReport]:
    """Functoriality, ``L ; G = L'``, and strict respect of both the binary
    and the derived ordered coproduct structures."""
    size = bound if size is None else size
    max_len = min(bound, 3) if max_len is None else max_len
    src, dst = h.source, h.target
    reports = check_functor_laws(h.functor, bound, size, cap, samples, seed)
    eq = functors_equal_on(compose_functors(src.structure, h.functor), dst.structure,
                           bound, size, cap, samples, seed)
    eq.structure, eq.law = h.name, "L ; G = L'"
    reports.append(eq)
    reports.append(check_strict_respect_binary(h.functor, src.binary, dst.binary, bound))
    reports.append(check_strict_respect_ordered(h.functor, src.ordered, dst.ordered,
                                                max_len, bound, size, cap, samples, seed))
    return reports
