"""Binary and finite ordered coproduct structures over computable categories.

A finite ordered structure is usually obtained from an initial object and a
binary structure by :func:`derive_ordered`, which recurses on the length of
the sequence: the coproduct of ``(X0, ..., Xm)`` is ``(X0 + ... + X(m-1)) + Xm``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Any, Callable

from .cat import (DEFAULT_SAMPLES, DEFAULT_SEED, FAIL, Cases, ComputableCategory,
                  ComputableFunctor, LawReport, run_law)
from .errors import ContractError


@dataclass(frozen=True, eq=False)
class InitialObjectWitness:
    category: ComputableCategory
    obj: Any
    bang: Callable[[Any], Any]


@dataclass(frozen=True, eq=False)
class BinaryCoproductWitness:
    """Chosen coproducts ``X + Y`` with injections and copairing.

    ``copair(f, g)`` takes ``f: X -> W`` and ``g: Y -> W`` and returns the
    mediating morphism ``X + Y -> W``.
    """

    category: ComputableCategory
    coproduct: Callable[[Any, Any], Any]
    inj0: Callable[[Any, Any], Any]
    inj1: Callable[[Any, Any], Any]
    copair: Callable[[Any, Any], Any]
    name: str = "binary"


@dataclass(frozen=True, eq=False)
class OrderedCoproductWitness:
    """Coproducts of finite sequences of objects.

    ``copair(xs, fs, target)`` is the mediating morphism out of the coproduct
    of ``xs``; ``target`` is needed only when ``xs`` is empty.  ``provenance``
    is ``"derived"`` when built by :func:`derive_ordered`, in which case
    ``initial`` and ``binary`` hold the generating data.
    """

    category: ComputableCategory
    coproduct: Callable[[tuple], Any]
    inj: Callable[[tuple, int], Any]
    copair: Callable[..., Any]
    provenance: str = "external"
    initial: InitialObjectWitness | None = None
    binary: BinaryCoproductWitness | None = None
    name: str = "ordered"


def derive_ordered(initial: InitialObjectWitness,
                   binary: BinaryCoproductWitness) -> OrderedCoproductWitness:
    cat = binary.category
    if not initial.category.same_as(cat):
        raise ContractError("initial and binary witnesses live in different categories")

    @functools.lru_cache(maxsize=None)
    def _coproduct(xs):
        if not xs:
            return initial.obj
        if len(xs) == 1:
            return xs[0]
        return binary.coproduct(_coproduct(xs[:-1]), xs[-1])

    def coproduct(xs):
        return _coproduct(tuple(xs))

    @functools.lru_cache(maxsize=None)
    def _inj(xs, i):
        m = len(xs)
        if not 0 <= i < m:
            raise IndexError(f"injection index {i} out of range for a sequence of length {m}")
        if m == 1:
            return cat.identity(xs[0])
        head = coproduct(xs[:-1])
        if i == m - 1:
            return binary.inj1(head, xs[-1])
        return cat.compose(_inj(xs[:-1], i), binary.inj0(head, xs[-1]))

    def inj(xs, i):
        return _inj(tuple(xs), i)

    def copair(xs, fs, target=None):
        xs, fs = tuple(xs), tuple(fs)
        if len(xs) != len(fs):
            raise ContractError("copair needs one morphism per summand")
        if not xs:
            if target is None:
                raise ContractError("copair of the empty family needs an explicit target")
            return initial.bang(target)
        if len(xs) == 1:
            return fs[0]
        return binary.copair(copair(xs[:-1], fs[:-1], target), fs[-1])

    return OrderedCoproductWitness(cat, coproduct, inj, copair, "derived", initial, binary,
                                   name=f"ordered({binary.name})")


# ---------------------------------------------------------------------------
# law checks


def check_initial(w: InitialObjectWitness, bound, size=None) -> LawReport:
    """Every sampled morphism out of the initial object equals ``bang``,
    and each sampled hom-set out of it is a singleton."""
    cat = w.category
    size = bound if size is None else size

    def ok(b):
        homs = list(cat.hom(w.obj, b, size))
        return len(homs) == 1 and cat.eq(homs[0], w.bang(b))

    return run_law(cat.name, "initiality", ((b,) for b in cat.objects(bound)), ok,
                   lambda b: {"target": b,
                              "hom": [cat.key(f) for f in list(cat.hom(w.obj, b, size))[:4]]})


def check_binary_laws(w: BinaryCoproductWitness, bound, size=None, cap=None,
                      samples=DEFAULT_SAMPLES, seed=DEFAULT_SEED) -> list[LawReport]:
    """Both triangle equations and uniqueness of the copairing.

    Uniqueness is checked by asking, for every sampled ``h: X+Y -> W``,
    whether ``copair(inj0;h, inj1;h) == h``: ``h`` is a competitor for
    exactly that pair, so this covers every competitor in the sample.
    """
    cat = w.category
    size = bound if size is None else size
    objs = list(cat.objects(bound))
    comp, key = cat.compose, cat.key
    name = f"{cat.name}/{w.name}"

    s1 = Cases(cap, samples, seed)

    def pairs():
        for x, y, t in itertools.product(objs, repeat=3):
            for f, g in s1.product(cat.hom(x, t, size), cat.hom(y, t, size)):
                yield x, y, f, g

    def triangles(x, y, f, g):
        s = w.copair(f, g)
        return (cat.eq(comp(w.inj0(x, y), s), f) and cat.eq(comp(w.inj1(x, y), s), g))

    existence = run_law(name, "copair triangles", pairs(), triangles,
                        lambda x, y, f, g: {"X": x, "Y": y, "f": key(f), "g": key(g)}, s1)

    s2 = Cases(cap, samples, seed)

    def competitors():
        for x, y, t in itertools.product(objs, repeat=3):
            for (h,) in s2.product(cat.hom(w.coproduct(x, y), t, size)):
                yield x, y, h

    def unique(x, y, h):
        return cat.eq(w.copair(comp(w.inj0(x, y), h), comp(w.inj1(x, y), h)), h)

    uniqueness = run_law(name, "copair uniqueness", competitors(), unique,
                         lambda x, y, h: {"X": x, "Y": y, "h": key(h)}, s2)
    return [existence, uniqueness]


def object_sequences(objs, max_len):
    for m in range(max_len + 1):
        yield from itertools.product(objs, repeat=m)


def check_ordered_laws(w: OrderedCoproductWitness, max_len, bound, size=None, cap=None,
                       samples=DEFAULT_SAMPLES, seed=DEFAULT_SEED) -> list[LawReport]:
    """Triangles, uniqueness, ``copair(injections) == id`` and distribution
    of post-composition over copairing, for sequences up to ``max_len``."""
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    cat = w.category
    size = bound if size is None else size
    objs = list(cat.objects(bound))
    comp, key = cat.compose, cat.key
    name = f"{cat.name}/{w.name}"
    seqs = list(object_sequences(objs, max_len))

    s1 = Cases(cap, samples, seed)

    def families():
        for xs in seqs:
            for t in objs:
                for fs in s1.product(*[cat.hom(x, t, size) for x in xs]):
                    yield xs, t, fs

    def triangles(xs, t, fs):
        s = w.copair(xs, fs, t)
        return all(cat.eq(comp(w.inj(xs, j), s), fs[j]) for j in range(len(xs)))

    def fam_witness(xs, t, fs):
        return {"X": list(xs), "target": t, "fs": [key(f) for f in fs]}

    tri = run_law(name, "copair triangles", families(), triangles, fam_witness, s1)

    s2 = Cases(cap, samples, seed)

    def competitors():
        for xs in seqs:
            for t in objs:
                for (g,) in s2.product(cat.hom(w.coproduct(xs), t, size)):
                    yield xs, t, g

    def unique(xs, t, g):
        restricted = [comp(w.inj(xs, j), g) for j in range(len(xs))]
        return cat.eq(w.copair(xs, restricted, t), g)

    uniq = run_law(name, "copair uniqueness", competitors(), unique,
                   lambda xs, t, g: {"X": list(xs), "target": t, "g": key(g)}, s2)

    def copair_of_injections(xs):
        total = w.coproduct(xs)
        injs = [w.inj(xs, i) for i in range(len(xs))]
        return cat.eq(w.copair(xs, injs, total), cat.identity(total))

    ident = run_law(name, "copair of injections is identity", ((xs,) for xs in seqs),
                    copair_of_injections, lambda xs: {"X": list(xs)})

    s4 = Cases(cap, samples, seed)

    def distrib_cases():
        for xs in seqs:
            for t, z in itertools.product(objs, repeat=2):
                factors = [cat.hom(x, t, size) for x in xs] + [cat.hom(t, z, size)]
                for combo in s4.product(*factors):
                    yield xs, t, combo[:-1], combo[-1]

    def distributes(xs, t, fs, g):
        lhs = comp(w.copair(xs, fs, t), g)
        rhs = w.copair(xs, [comp(f, g) for f in fs], cat.target(g))
        return cat.eq(lhs, rhs)

    dist = run_law(name, "post-composition distributes over copair", distrib_cases(),
                   distributes,
                   lambda xs, t, fs, g: {"X": list(xs), "fs": [key(f) for f in fs], "g": key(g)},
                   s4)
    return [tri, uniq, ident, dist]


# ---------------------------------------------------------------------------
# strict respect


def check_strict_respect_binary(g: ComputableFunctor, wsrc: BinaryCoproductWitness,
                                wdst: BinaryCoproductWitness, bound) -> LawReport:
    """``G(X+Y) = G(X)+'G(Y)`` and ``G`` sends both injections to injections."""
    src, dst = g.source, g.target
    objs = list(src.objects(bound))
    go = g.on_objects

    def respects(x, y):
        gx, gy = go(x), go(y)
        return (go(wsrc.coproduct(x, y)) == wdst.coproduct(gx, gy)
                and dst.eq(g(wsrc.inj0(x, y)), wdst.inj0(gx, gy))
                and dst.eq(g(wsrc.inj1(x, y)), wdst.inj1(gx, gy)))

    return run_law(g.name, f"strictly respects {wsrc.name} -> {wdst.name}",
                   itertools.product(objs, repeat=2), respects,
                   lambda x, y: {"X": x, "Y": y})


def check_strict_respect_ordered(g: ComputableFunctor, wsrc: OrderedCoproductWitness,
                                 wdst: OrderedCoproductWitness, max_len, bound, size=None,
                                 cap=None, samples=DEFAULT_SAMPLES,
                                 seed=DEFAULT_SEED) -> LawReport:
    """Strict respect of derived ordered structures.

    Uses the shortcut: for derived witnesses it suffices that ``G`` preserves
    the initial object and strictly respects the binary structures.  The
    copair-commutation ``G(copair fs) = copair (G fs)`` is then spot-checked.
    """
    if wsrc.provenance != "derived" or wdst.provenance != "derived":
        raise ContractError("ordered strict-respect shortcut requires derived witnesses")
    size = bound if size is None else size
    name = g.name
    law = f"strictly respects {wsrc.name} -> {wdst.name}"
    src, dst = g.source, g.target
    if g.on_objects(wsrc.initial.obj) != wdst.initial.obj:
        return LawReport(name, law, FAIL, 1, {"initial": wsrc.initial.obj},
                         detail="initial object not preserved",
                         _replay=lambda: g.on_objects(wsrc.initial.obj) != wdst.initial.obj)
    binary = check_strict_respect_binary(g, wsrc.binary, wdst.binary, bound)
    if not binary.passed:
        binary.law = law
        binary.detail = "binary structure not strictly respected"
        return binary

    objs = list(src.objects(bound))
    stream = Cases(cap, samples, seed)

    def families():
        for xs in object_sequences(objs, max_len):
            for t in objs:
                for fs in stream.product(*[src.hom(x, t, size) for x in xs]):
                    yield xs, t, fs

    def commutes(xs, t, fs):
        lhs = g(wsrc.copair(xs, fs, t))
        rhs = wdst.copair(tuple(g.on_objects(x) for x in xs), [g(f) for f in fs], g.on_objects(t))
        return dst.eq(lhs, rhs)

    report = run_law(name, law, families(), commutes,
                     lambda xs, t, fs: {"X": list(xs), "fs": [src.key(f) for f in fs]}, stream)
    report.cases += binary.cases + 1
    return report

