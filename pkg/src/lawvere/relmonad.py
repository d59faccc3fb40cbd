"""Relative monads on the inclusion of F into sets.

Such a monad assigns to each natural ``n`` a carrier set ``RR(n)``, a unit
``stn(n) -> RR(n)`` and, for every table ``f`` of ``m`` elements of
``RR(n)``, an extension ``rho(f): RR(m) -> RR(n)``.  Concretely this is an
abstract clone: ``RR(n)`` is "things in ``n`` variables", the unit picks out
the variables and ``rho(f)`` substitutes the entries of ``f`` for them.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Any, Callable

from .cat import (DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_TABLE_CAP, Cases,
                  ComputableCategory, ComputableFunctor, LawReport, run_law, table_space)
from .errors import CompositionError, NotAnIsomorphism
from .finset import FINSET, FinFunction
from .terms import (MONOID_SIGNATURE, App, RewriteSystem, Signature, Var, enumerate_terms,
                    monoid_rewriting, size as term_size, subst, variables)


@dataclass(frozen=True, eq=False)
class CarrierSet:
    """A computably represented set.

    Elements are hashable values in canonical form, so ``==`` decides
    equality.  ``enumerate(b)`` lists every element of size at most ``b``.
    """

    name: str
    contains: Callable[[Any], bool]
    size: Callable[[Any], int]
    enumerate: Callable[[int], list]
    key: Callable[[Any], Any] = lambda x: x

    def __repr__(self):
        return f"<carrier {self.name}>"


def cached_enumeration(fn):
    return functools.lru_cache(maxsize=None)(fn)


def standard_finite_set(n) -> CarrierSet:
    """``stn(n) = {0, ..., n-1}``; every element has size 1."""
    elems = list(range(n))
    return CarrierSet(f"stn({n})", lambda x: isinstance(x, int) and 0 <= x < n,
                      lambda x: 1, lambda b: elems if b >= 1 else [])


@dataclass(frozen=True, slots=True)
class KleisliMor:
    """A table of ``dom`` carrier elements of ``RR(cod)``: a map ``stn(dom) -> RR(cod)``."""

    dom: int
    cod: int
    table: tuple

    def __post_init__(self):
        if not isinstance(self.table, tuple):
            object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != self.dom:
            raise ValueError(f"table of length {len(self.table)} for domain {self.dom}")


@dataclass(frozen=True, eq=False)
class JfRelativeMonad:
    name: str
    carrier: Callable[[int], CarrierSet]
    unit: Callable[[int, int], Any]
    extend: Callable[[KleisliMor, Any], Any]

    def __repr__(self):
        return f"<monad {self.name}>"

    def unit_table(self, n) -> KleisliMor:
        return KleisliMor(n, n, tuple(self.unit(n, i) for i in range(n)))

    def rho(self, f: KleisliMor):
        return functools.partial(self.extend, f)

    def table(self, dom, cod, entries) -> KleisliMor:
        """Build a Kleisli table, checking every entry lies in ``RR(cod)``."""
        f = KleisliMor(dom, cod, tuple(entries))
        car = self.carrier(cod)
        for x in f.table:
            if not car.contains(x):
                raise ValueError(f"{x!r} is not an element of {car.name}")
        return f

    def key(self, f: KleisliMor):
        car = self.carrier(f.cod)
        return {"dom": f.dom, "cod": f.cod, "table": [car.key(x) for x in f.table]}

    def same_as(self, other):
        return self is other or self.name == other.name


def make_monad(name, carrier, unit, extend) -> JfRelativeMonad:
    return JfRelativeMonad(name, functools.lru_cache(maxsize=None)(carrier), unit, extend)


def kleisli_compose(monad: JfRelativeMonad, f: KleisliMor, g: KleisliMor) -> KleisliMor:
    """``f`` then ``g``: apply ``rho(g)`` to every entry of ``f``."""
    if f.cod != g.dom:
        raise CompositionError(f"Kleisli composite {f.dom}->{f.cod} then {g.dom}->{g.cod}")
    ext = monad.extend
    return KleisliMor(f.dom, g.cod, tuple(ext(g, x) for x in f.table))


def tables(monad, m, n, size):
    """All Kleisli tables ``m -> n`` whose entries have size at most ``size``."""
    return table_space(monad.carrier(n).enumerate(size), m,
                       wrap=lambda t: KleisliMor(m, n, t))


# ---------------------------------------------------------------------------
# laws


def check_relmonad_laws(monad: JfRelativeMonad, nmax=3, bound=3, table_cap=DEFAULT_TABLE_CAP,
                        seed=DEFAULT_SEED, samples=DEFAULT_SAMPLES) -> list[LawReport]:
    """The three unit/extension laws on bounded data.

    1. ``rho(unit(n))`` is the identity on ``RR(n)``;
    2. ``rho(f)(unit(m)(i)) == f[i]``;
    3. ``rho(g)(rho(f)(h)) == rho(f ; rho(g))(h)``.
    """
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    ns = range(nmax + 1)
    name = monad.name
    ext, key = monad.extend, monad.key

    def enum(n):
        return monad.carrier(n).enumerate(bound)

    def ekey(n, x):
        return monad.carrier(n).key(x)

    s1 = Cases(table_cap, samples, seed)
    law1 = run_law(
        name, "extension along the unit is the identity",
        ((n, x) for n in ns for (x,) in s1.product(enum(n))),
        lambda n, x: ext(monad.unit_table(n), x) == x,
        lambda n, x: {"n": n, "element": ekey(n, x)}, s1)

    s2 = Cases(table_cap, samples, seed)

    def law2_cases():
        for m, n in itertools.product(ns, repeat=2):
            for (f,) in s2.product(tables(monad, m, n, bound)):
                for i in range(m):
                    yield f, i

    law2 = run_law(
        name, "extension restricted along the unit recovers the table", law2_cases(),
        lambda f, i: ext(f, monad.unit(f.dom, i)) == f.table[i],
        lambda f, i: {"f": key(f), "i": i}, s2)

    s3 = Cases(table_cap, samples, seed)

    def law3_cases():
        for k, m, n in itertools.product(ns, repeat=3):
            yield from s3.product(tables(monad, k, m, bound), tables(monad, m, n, bound), enum(k))

    law3 = run_law(
        name, "extension composes", law3_cases(),
        lambda f, g, h: ext(g, ext(f, h)) == ext(kleisli_compose(monad, f, g), h),
        lambda f, g, h: {"f": key(f), "g": key(g), "h": ekey(f.dom, h)}, s3)
    return [law1, law2, law3]


# ---------------------------------------------------------------------------
# Kleisli category and functors


def kleisli(monad: JfRelativeMonad) -> ComputableCategory:
    def size(f):
        car = monad.carrier(f.cod)
        return max((car.size(x) for x in f.table), default=0)

    return ComputableCategory(
        name=f"K({monad.name})",
        objects=lambda bound: range(bound + 1),
        hom=lambda m, n, size_: tables(monad, m, n, size_),
        identity=monad.unit_table,
        compose=lambda f, g: kleisli_compose(monad, f, g),
        source=lambda f: f.dom,
        target=lambda f: f.cod,
        key=monad.key,
        size=size,
    )


def kleisli_embedding(monad: JfRelativeMonad) -> ComputableFunctor:
    """``F -> K(RR)``: identity on objects, ``u |-> [unit(n)(u(i))]``."""

    def on_mor(u: FinFunction):
        n = u.cod
        return KleisliMor(u.dom, n, tuple(monad.unit(n, j) for j in u.table))

    return ComputableFunctor(f"L[{monad.name}]", FINSET, kleisli(monad), lambda n: n, on_mor)


@dataclass(frozen=True, eq=False)
class MonadMorphism:
    """Components ``phi(n): RR(n) -> RR'(n)`` given as a function of ``(n, x)``."""

    name: str
    source: JfRelativeMonad
    target: JfRelativeMonad
    component: Callable[[int, Any], Any]

    def __repr__(self):
        return f"<monad morphism {self.name}: {self.source.name} -> {self.target.name}>"

    def on_table(self, f: KleisliMor) -> KleisliMor:
        c = self.component
        return KleisliMor(f.dom, f.cod, tuple(c(f.cod, x) for x in f.table))


def kleisli_functor(phi: MonadMorphism) -> ComputableFunctor:
    """``K(phi)``: identity on objects, apply ``phi(cod)`` to every table entry."""
    return ComputableFunctor(f"K({phi.name})", kleisli(phi.source), kleisli(phi.target),
                             lambda n: n, phi.on_table)


def check_monad_morphism(phi: MonadMorphism, nmax=3, bound=3, table_cap=DEFAULT_TABLE_CAP,
                         seed=DEFAULT_SEED, samples=DEFAULT_SAMPLES) -> list[LawReport]:
    """Unit preservation and compatibility with extension on bounded data."""
    src, dst = phi.source, phi.target
    ns = range(nmax + 1)
    c = phi.component
    name = phi.name

    s0 = Cases(table_cap, samples, seed)
    lands = run_law(
        name, "components land in the target carriers",
        ((n, x) for n in ns for (x,) in s0.product(src.carrier(n).enumerate(bound))),
        lambda n, x: dst.carrier(n).contains(c(n, x)),
        lambda n, x: {"n": n, "element": src.carrier(n).key(x)}, s0)

    unit = run_law(
        name, "preserves the unit",
        ((n, i) for n in ns for i in range(n)),
        lambda n, i: c(n, src.unit(n, i)) == dst.unit(n, i),
        lambda n, i: {"n": n, "i": i})

    s2 = Cases(table_cap, samples, seed)

    def cases():
        for m, n in itertools.product(ns, repeat=2):
            yield from s2.product(tables(src, m, n, bound), src.carrier(m).enumerate(bound))

    def commutes(f, g):
        return c(f.cod, src.extend(f, g)) == dst.extend(phi.on_table(f), c(f.dom, g))

    ext = run_law(name, "commutes with extension", cases(), commutes,
                  lambda f, g: {"f": src.key(f), "g": src.carrier(f.dom).key(g)}, s2)
    return [lands, unit, ext]


def rm_identity(monad: JfRelativeMonad) -> MonadMorphism:
    return MonadMorphism(f"id[{monad.name}]", monad, monad, lambda n, x: x)


def rm_compose(phi: MonadMorphism, psi: MonadMorphism) -> MonadMorphism:
    """``phi`` then ``psi``."""
    if not phi.target.same_as(psi.source):
        raise CompositionError(f"cannot compose {phi.name} with {psi.name}")
    a, b = phi.component, psi.component
    return MonadMorphism(f"{phi.name};{psi.name}", phi.source, psi.target,
                         lambda n, x: b(n, a(n, x)))


def invert_pointwise_iso(phi: MonadMorphism, nmax=3, bound=3, search_slack=4) -> MonadMorphism:
    """Componentwise inverse of a morphism that is bijective on enumerations.

    For each ``n <= nmax`` the component must map ``enumerate(bound)`` of the
    source bijectively onto ``enumerate(bound)`` of the target.  Elements
    beyond the verified bound are inverted by searching the source
    enumeration up to ``size + search_slack``.
    """
    src, dst = phi.source, phi.target
    tables_ = {}
    for n in range(nmax + 1):
        xs = src.carrier(n).enumerate(bound)
        ys = dst.carrier(n).enumerate(bound)
        inv = {}
        for x in xs:
            y = phi.component(n, x)
            if y in inv:
                raise NotAnIsomorphism(
                    f"component {n} of {phi.name} is not injective: two elements map to {y!r}",
                    n, src.carrier(n).key(x))
            inv[y] = x
        missing = [y for y in ys if y not in inv]
        if missing or len(xs) != len(ys):
            wit = missing[0] if missing else next((y for y in inv if y not in set(ys)), None)
            raise NotAnIsomorphism(
                f"component {n} of {phi.name} is not surjective at bound {bound} "
                f"({len(xs)} vs {len(ys)} elements)", n,
                None if wit is None else dst.carrier(n).key(wit))
        tables_[n] = inv

    def inverse(n, y):
        inv = tables_.setdefault(n, {})
        if y in inv:
            return inv[y]
        top = dst.carrier(n).size(y) + search_slack
        for b in range(top + 1):
            for x in src.carrier(n).enumerate(b):
                if phi.component(n, x) == y:
                    inv[y] = x
                    return x
        raise NotAnIsomorphism(f"no preimage of {y!r} under {phi.name}({n})", n, y)

    return MonadMorphism(f"inv({phi.name})", dst, src, inverse)


# ---------------------------------------------------------------------------
# builtin monads


@functools.lru_cache(maxsize=None)
def identity_monad() -> JfRelativeMonad:
    """``RR(n) = stn(n)``; its Kleisli category is F itself."""
    return make_monad("identity", standard_finite_set,
                      lambda n, i: i, lambda f, x: f.table[x])


@functools.lru_cache(maxsize=None)
def maybe_monad() -> JfRelativeMonad:
    """``RR(n) = stn(n+1)`` where ``n`` is the error element; errors propagate."""

    def carrier(n):
        c = standard_finite_set(n + 1)
        return CarrierSet(f"stn({n})+err", c.contains, c.size, c.enumerate)

    def extend(f, x):
        return f.table[x] if x < f.dom else f.cod

    return make_monad("maybe", carrier, lambda n, i: i, extend)


def words(n, max_len):
    out = []
    for k in range(max_len + 1):
        out.extend(itertools.product(range(n), repeat=k))
    return out


@functools.lru_cache(maxsize=None)
def free_monoid_monad() -> JfRelativeMonad:
    """``RR(n)`` = words over ``stn(n)``; extension is the concatenating map."""

    def carrier(n):
        enum = cached_enumeration(lambda b: words(n, b))
        return CarrierSet(
            f"words({n})",
            lambda w: isinstance(w, tuple) and all(isinstance(c, int) and 0 <= c < n for c in w),
            len, enum, list)

    def extend(f, w):
        t = f.table
        return tuple(itertools.chain.from_iterable(t[c] for c in w))

    return make_monad("free_monoid", carrier, lambda n, i: (i,), extend)


@functools.lru_cache(maxsize=None)
def terminal_monad() -> JfRelativeMonad:
    """``RR(n) = stn(1)`` for every ``n``."""
    return make_monad("terminal", lambda n: standard_finite_set(1), lambda n, i: 0,
                      lambda f, x: 0)


def term_monad(signature: Signature, rules=(), name=None, fuel=None) -> JfRelativeMonad:
    """Normal-form terms over ``x0..x(n-1)``; extension substitutes then normalizes."""
    system = rules if isinstance(rules, RewriteSystem) else (
        RewriteSystem(signature, rules) if fuel is None else RewriteSystem(signature, rules, fuel))
    name = name or f"term{signature!r}" + (f"/{len(system.rules)} rules" if system.rules else "")

    def carrier(n):
        @cached_enumeration
        def enum(b):
            return [t for t in enumerate_terms(signature, n, b) if system.is_normal(t)]

        def contains(t):
            if not isinstance(t, (Var, App)):
                return False
            try:
                signature.check(t)
            except ValueError:
                return False
            return all(i < n for i in variables(t)) and system.is_normal(t)

        return CarrierSet(f"terms({n})", contains, term_size, enum, str)

    def extend(f, t):
        return system.normalize(subst(t, f.table))

    monad = make_monad(name, carrier, lambda n, i: Var(i), extend)
    object.__setattr__(monad, "rewriting", system)
    return monad


@functools.lru_cache(maxsize=None)
def free_term_monad() -> JfRelativeMonad:
    """Terms over ``{mul/2, e/0}`` with no equations."""
    return term_monad(MONOID_SIGNATURE, (), name="term(mul,e)")


@functools.lru_cache(maxsize=None)
def monoid_term_monad() -> JfRelativeMonad:
    """Terms over ``{mul/2, e/0}`` modulo the monoid equations, as normal forms."""
    return term_monad(MONOID_SIGNATURE, monoid_rewriting(), name="term(mul,e)/monoid")


def builtin_monads() -> list[JfRelativeMonad]:
    return [identity_monad(), maybe_monad(), free_monoid_monad(), terminal_monad(),
            free_term_monad(), monoid_term_monad()]


# ---------------------------------------------------------------------------
# builtin morphisms


def inclusion_identity_maybe() -> MonadMorphism:
    return MonadMorphism("incl", identity_monad(), maybe_monad(), lambda n, x: x)


def to_terminal(monad: JfRelativeMonad) -> MonadMorphism:
    return MonadMorphism(f"!{monad.name}", monad, terminal_monad(), lambda n, x: 0)


def from_identity(monad: JfRelativeMonad) -> MonadMorphism:
    """The unit viewed as a morphism out of the identity monad."""
    return MonadMorphism(f"unit[{monad.name}]", identity_monad(), monad, monad.unit)


def evaluate_in_words(t):
    """Interpret ``mul`` as concatenation and ``e`` as the empty word."""
    match t:
        case Var(i):
            return (i,)
        case App("e", ()):
            return ()
        case App("mul", (a, b)):
            return evaluate_in_words(a) + evaluate_in_words(b)
    raise ValueError(f"cannot evaluate {t} in the free monoid")


def eval_terms_in_words(source: JfRelativeMonad | None = None) -> MonadMorphism:
    source = source or free_term_monad()
    return MonadMorphism(f"eval[{source.name}]", source, free_monoid_monad(),
                         lambda n, t: evaluate_in_words(t))


def normalize_morphism() -> MonadMorphism:
    """Free terms to monoid normal forms."""
    system = monoid_term_monad().rewriting
    return MonadMorphism("normalize", free_term_monad(), monoid_term_monad(),
                         lambda n, t: system.normalize(t))


def builtin_morphisms() -> list[MonadMorphism]:
    out = [inclusion_identity_maybe(), eval_terms_in_words(),
           eval_terms_in_words(monoid_term_monad()), normalize_morphism()]
    for m in builtin_monads():
        out.append(rm_identity(m))
        if m.name != "terminal":
            out.append(to_terminal(m))
        if m.name != "identity":
            out.append(from_identity(m))
    return out
