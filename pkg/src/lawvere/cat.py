"""Computable categories, functors and the bounded law-checking harness.

Every law check in the package goes through :func:`run_law`, which walks a
stream of cases, stops at the first counterexample and packs the result into
a :class:`LawReport`.  Case streams come from :class:`Cases`, which enumerates
a product of finite sequences exhaustively (lexicographic order) when it is
small enough and otherwise draws a seeded sample of indices.
"""

from __future__ import annotations

import itertools
import math
import random
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator

from .errors import CompositionError, LawvereError

PASS = "pass"
FAIL = "fail"
ERROR = "error"

DEFAULT_TABLE_CAP = 4096
DEFAULT_SAMPLES = 200
DEFAULT_SEED = 42


# ---------------------------------------------------------------------------
# finite index spaces


class ProductSpace(Sequence):
    """Cartesian product of finite sequences with random access.

    Index ``i`` decodes to a tuple in lexicographic order, first factor most
    significant, so ``list(ProductSpace(...))`` agrees with
    ``itertools.product``.
    """

    def __init__(self, factors, wrap=None):
        self.factors = [f if isinstance(f, Sequence) else list(f) for f in factors]
        self.wrap = wrap
        self._len = math.prod(len(f) for f in self.factors)

    def __len__(self):
        return self._len

    def __getitem__(self, index):
        if isinstance(index, slice):
            return [self[i] for i in range(*index.indices(self._len))]
        if index < 0:
            index += self._len
        if not 0 <= index < self._len:
            raise IndexError(index)
        out = []
        for f in reversed(self.factors):
            index, r = divmod(index, len(f))
            out.append(f[r])
        out.reverse()
        t = tuple(out)
        return self.wrap(t) if self.wrap else t

    def __iter__(self):
        for t in itertools.product(*self.factors):
            yield self.wrap(t) if self.wrap else t


def table_space(elements, length, wrap=None):
    """All length-``length`` tables over ``elements``."""
    return ProductSpace([elements] * length, wrap)


class Cases:
    """Bounded case generator shared by the checks of one report.

    ``cap=None`` means always exhaustive.  Otherwise a product larger than
    ``cap`` contributes ``samples`` seeded index draws (sorted, so the first
    counterexample found is the first in enumeration order among those drawn).
    """

    def __init__(self, cap=None, samples=DEFAULT_SAMPLES, seed=DEFAULT_SEED):
        self.cap = cap
        self.samples = samples
        self.rng = random.Random(seed)
        self.sampled = False
        self.exhaustive = False

    def product(self, *factors) -> Iterator[tuple]:
        space = ProductSpace(factors)
        total = len(space)
        if self.cap is None or total <= self.cap:
            self.exhaustive = True
            yield from space
            return
        self.sampled = True
        for i in sorted(self.rng.sample(range(total), min(self.samples, total))):
            yield space[i]

    @property
    def mode(self):
        if self.sampled and self.exhaustive:
            return "mixed"
        return "sampled" if self.sampled else "exhaustive"


# ---------------------------------------------------------------------------
# reports


@dataclass
class LawReport:
    structure: str
    law: str
    status: str
    cases: int = 0
    witness: dict | None = None
    mode: str = "exhaustive"
    detail: str | None = None
    _replay: Callable[[], bool] | None = field(default=None, repr=False, compare=False)

    @property
    def passed(self):
        return self.status == PASS

    def replay(self) -> bool:
        """Re-evaluate the failing case; True iff it still fails."""
        if self._replay is None:
            raise ValueError("report carries no replayable witness")
        return self._replay()

    def to_json(self):
        out = {"structure": self.structure, "law": self.law, "status": self.status,
               "cases": self.cases, "mode": self.mode}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail is not None:
            out["detail"] = self.detail
        return out

    @classmethod
    def from_json(cls, data):
        return cls(structure=data["structure"], law=data["law"], status=data["status"],
                   cases=data.get("cases", 0), witness=data.get("witness"),
                   mode=data.get("mode", "exhaustive"), detail=data.get("detail"))

    def render(self):
        line = f"{self.status.upper():5} {self.structure}: {self.law} [{self.cases} cases, {self.mode}]"
        if self.witness is not None:
            parts = ", ".join(f"{k}={_compact(v)}" for k, v in self.witness.items())
            line += f"\n      witness: {parts}"
        if self.detail:
            line += f"\n      detail: {self.detail}"
        return line


def _compact(value):
    import json
    return json.dumps(value, separators=(",", ":"), sort_keys=True)


def all_passed(reports: Iterable[LawReport]) -> bool:
    return all(r.passed for r in reports)


def run_law(structure, law, cases, predicate, describe, stream=None) -> LawReport:
    """Evaluate ``predicate(*case)`` over ``cases`` until the first failure.

    ``describe(*case)`` builds the JSON witness for a failing case.  Package
    errors raised while evaluating a case count as failures.
    """
    count = 0
    for case in cases:
        count += 1
        try:
            ok = predicate(*case)
            detail = None
        except LawvereError as exc:
            ok = False
            detail = f"{type(exc).__name__}: {exc}"
        if not ok:

            def replay(case=case):
                try:
                    return not predicate(*case)
                except LawvereError:
                    return True

            return LawReport(structure, law, FAIL, count, describe(*case),
                             stream.mode if stream else "exhaustive", detail, replay)
    return LawReport(structure, law, PASS, count, None,
                     stream.mode if stream else "exhaustive")


# ---------------------------------------------------------------------------
# categories and functors


@dataclass(frozen=True, eq=False)
class ComputableCategory:
    """A category whose objects can be listed and whose hom-sets can be sampled.

    ``compose(f, g)`` is diagrammatic: first ``f`` then ``g``.  ``hom(a, b,
    size)`` returns a finite sequence of morphisms ``a -> b`` whose size
    measure is at most ``size``; ``objects(bound)`` lists the objects checked
    at a given bound.
    """

    name: str
    objects: Callable[[int], Sequence]
    hom: Callable[[Any, Any, int], Sequence]
    identity: Callable[[Any], Any]
    compose: Callable[[Any, Any], Any]
    source: Callable[[Any], Any]
    target: Callable[[Any], Any]
    key: Callable[[Any], Any] = repr
    size: Callable[[Any], int] = lambda f: 0
    eq: Callable[[Any, Any], bool] = lambda f, g: f == g

    def __repr__(self):
        return f"<category {self.name}>"

    def same_as(self, other):
        return self is other or self.name == other.name


@dataclass(frozen=True, eq=False)
class ComputableFunctor:
    name: str
    source: ComputableCategory
    target: ComputableCategory
    on_objects: Callable[[Any], Any]
    on_morphisms: Callable[[Any], Any]

    def __call__(self, f):
        return self.on_morphisms(f)

    def __repr__(self):
        return f"<functor {self.name}: {self.source.name} -> {self.target.name}>"


def identity_functor(cat: ComputableCategory) -> ComputableFunctor:
    return ComputableFunctor(f"Id[{cat.name}]", cat, cat, lambda x: x, lambda f: f)


def compose_functors(f1: ComputableFunctor, f2: ComputableFunctor) -> ComputableFunctor:
    """``f1`` then ``f2``."""
    if not f1.target.same_as(f2.source):
        raise CompositionError(
            f"cannot compose {f1.name} (into {f1.target.name}) with {f2.name} (from {f2.source.name})")
    return ComputableFunctor(
        f"{f1.name};{f2.name}", f1.source, f2.target,
        lambda x: f2.on_objects(f1.on_objects(x)),
        lambda f: f2.on_morphisms(f1.on_morphisms(f)))


class _Sampler:
    """Hom sampling with endpoint auditing for the integrity report."""

    def __init__(self, cat, size):
        self.cat = cat
        self.size = size
        self.violations = []
        self._cache = {}

    def hom(self, a, b):
        k = (a, b)
        if k not in self._cache:
            homs = self.cat.hom(a, b, self.size)
            self._cache[k] = homs
            # cheap audit of the first and last entries; each drawn case is audited too
            for f in (homs[:1] + homs[-1:]) if len(homs) else []:
                self.audit(f, a, b)
        return self._cache[k]

    def audit(self, f, a, b):
        c = self.cat
        if c.source(f) != a or c.target(f) != b:
            if len(self.violations) < 5:
                self.violations.append({"requested": [a, b], "got": [c.source(f), c.target(f)],
                                        "morphism": c.key(f)})
            return False
        return True

    def report(self, structure):
        if self.violations:
            return LawReport(structure, "sampler integrity", ERROR, len(self.violations),
                             {"violations": self.violations})
        return LawReport(structure, "sampler integrity", PASS)


def check_category_laws(cat: ComputableCategory, bound: int, size: int | None = None,
                        cap: int | None = None, samples=DEFAULT_SAMPLES,
                        seed=DEFAULT_SEED) -> list[LawReport]:
    """Left identity, right identity and associativity on sampled data.

    Objects come from ``cat.objects(bound)``; morphisms from ``cat.hom`` with
    size bound ``size`` (defaults to ``bound``).  The first report audits the
    sampler itself; a mismatch there is an integrity error, not a law failure.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    size = bound if size is None else size
    sampler = _Sampler(cat, size)
    objs = list(cat.objects(bound))
    key = cat.key
    name = cat.name

    def endpoints(a, b):
        def gen(stream):
            for (f,) in stream.product(sampler.hom(a, b)):
                if sampler.audit(f, a, b):
                    yield (f,)
        return gen

    s1 = Cases(cap, samples, seed)
    left = run_law(
        name, "left identity",
        (c for a in objs for b in objs for c in endpoints(a, b)(s1)),
        lambda f: cat.eq(cat.compose(cat.identity(cat.source(f)), f), f),
        lambda f: {"f": key(f)}, s1)

    s2 = Cases(cap, samples, seed)
    right = run_law(
        name, "right identity",
        (c for a in objs for b in objs for c in endpoints(a, b)(s2)),
        lambda f: cat.eq(cat.compose(f, cat.identity(cat.target(f))), f),
        lambda f: {"f": key(f)}, s2)

    s3 = Cases(cap, samples, seed)

    def triples():
        for a, b, c, d in itertools.product(objs, repeat=4):
            hs = (sampler.hom(a, b), sampler.hom(b, c), sampler.hom(c, d))
            for f, g, h in s3.product(*hs):
                if sampler.audit(f, a, b) and sampler.audit(g, b, c) and sampler.audit(h, c, d):
                    yield f, g, h

    comp = cat.compose
    assoc = run_law(
        name, "associativity", triples(),
        lambda f, g, h: cat.eq(comp(comp(f, g), h), comp(f, comp(g, h))),
        lambda f, g, h: {"f": key(f), "g": key(g), "h": key(h)}, s3)
    return [sampler.report(name), left, right, assoc]


def check_functor_laws(fn: ComputableFunctor, bound: int, size: int | None = None,
                       cap: int | None = None, samples=DEFAULT_SAMPLES,
                       seed=DEFAULT_SEED) -> list[LawReport]:
    """Identity and composition preservation on sampled objects and pairs."""
    size = bound if size is None else size
    src, dst = fn.source, fn.target
    sampler = _Sampler(src, size)
    objs = list(src.objects(bound))
    key = src.key

    def preserves_identity(a):
        return dst.eq(fn(src.identity(a)), dst.identity(fn.on_objects(a)))

    ident = run_law(fn.name, "identity preservation", ((a,) for a in objs),
                    preserves_identity, lambda a: {"object": a})

    stream = Cases(cap, samples, seed)

    def pairs():
        for a, b, c in itertools.product(objs, repeat=3):
            for f, g in stream.product(sampler.hom(a, b), sampler.hom(b, c)):
                if sampler.audit(f, a, b) and sampler.audit(g, b, c):
                    yield f, g

    def preserves_composite(f, g):
        Ff, Fg = fn(f), fn(g)
        if dst.source(Ff) != fn.on_objects(src.source(f)) or dst.target(Ff) != fn.on_objects(src.target(f)):
            return False
        return dst.eq(fn(src.compose(f, g)), dst.compose(Ff, Fg))

    comp = run_law(fn.name, "composition preservation", pairs(), preserves_composite,
                   lambda f, g: {"f": key(f), "g": key(g)}, stream)
    return [sampler.report(fn.name), ident, comp]


def functors_equal_on(fn1: ComputableFunctor, fn2: ComputableFunctor, bound: int,
                      size: int | None = None, cap: int | None = None,
                      samples=DEFAULT_SAMPLES, seed=DEFAULT_SEED) -> LawReport:
    """Pointwise agreement of two parallel functors on bounded data."""
    size = bound if size is None else size
    src, dst = fn1.source, fn1.target
    objs = list(src.objects(bound))
    name = f"{fn1.name} vs {fn2.name}"
    for a in objs:
        if fn1.on_objects(a) != fn2.on_objects(a):
            return LawReport(name, "pointwise equality", FAIL, 1, {"object": a},
                             _replay=lambda a=a: fn1.on_objects(a) != fn2.on_objects(a))
    stream = Cases(cap, samples, seed)

    def cases():
        for a, b in itertools.product(objs, repeat=2):
            yield from stream.product(src.hom(a, b, size))

    report = run_law(name, "pointwise equality", cases(),
                     lambda f: dst.eq(fn1(f), fn2(f)),
                     lambda f: {"f": src.key(f)}, stream)
    report.cases += len(objs)
    return report
