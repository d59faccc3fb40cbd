"""The skeletal category F of standard finite sets.

Objects are naturals ``n`` standing for ``{0, ..., n-1}``; a morphism
``m -> n`` is a :class:`FinFunction`, a dense table of ``m`` values below
``n``.
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass

import numpy as np

from .cat import FAIL, PASS, ComputableCategory, ComputableFunctor, LawReport
from .coproducts import BinaryCoproductWitness, InitialObjectWitness, derive_ordered
from .errors import CompositionError, ContractError


@dataclass(frozen=True, slots=True)
class FinFunction:
    dom: int
    cod: int
    table: tuple

    def __post_init__(self):
        if not isinstance(self.table, tuple):
            object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != self.dom:
            raise ValueError(f"table of length {len(self.table)} for domain {self.dom}")
        for v in self.table:
            if not 0 <= v < self.cod:
                raise ValueError(f"value {v} outside codomain {self.cod}")

    @classmethod
    def trusted(cls, dom, cod, table):
        """Skip validation; for composites of already valid functions."""
        out = object.__new__(cls)
        object.__setattr__(out, "dom", dom)
        object.__setattr__(out, "cod", cod)
        object.__setattr__(out, "table", table)
        return out

    def __call__(self, i):
        return self.table[i]

    def __str__(self):
        return f"{self.dom}->{self.cod}:[{','.join(map(str, self.table))}]"

    def to_json(self):
        return {"dom": self.dom, "cod": self.cod, "table": list(self.table)}

    @classmethod
    def from_json(cls, data):
        return cls(data["dom"], data["cod"], tuple(data["table"]))

    @classmethod
    def parse(cls, text):
        m = re.fullmatch(r"\s*(\d+)\s*->\s*(\d+)\s*:\s*\[([\d,\s]*)\]\s*", text)
        if not m:
            raise ValueError(f"not a finite function: {text!r}")
        entries = [int(v) for v in m.group(3).split(",") if v.strip()]
        return cls(int(m.group(1)), int(m.group(2)), tuple(entries))


def fs_identity(n) -> FinFunction:
    return FinFunction(n, n, tuple(range(n)))


def fs_compose(u: FinFunction, v: FinFunction) -> FinFunction:
    """``u`` then ``v``."""
    if u.cod != v.dom:
        raise CompositionError(f"cannot compose {u} with {v}")
    vt = v.table
    return FinFunction.trusted(u.dom, v.cod, tuple([vt[i] for i in u.table]))


def enumerate_homs(m, n) -> list[FinFunction]:
    """All ``n**m`` functions ``m -> n`` in lexicographic table order."""
    return [FinFunction(m, n, t) for t in itertools.product(range(n), repeat=m)]


def _key(u):
    return u.to_json()


FINSET = ComputableCategory(
    name="F",
    objects=lambda bound: range(bound + 1),
    hom=lambda m, n, size: enumerate_homs(m, n),
    identity=fs_identity,
    compose=fs_compose,
    source=lambda u: u.dom,
    target=lambda u: u.cod,
    key=_key,
)


def identity_on_f() -> ComputableFunctor:
    return ComputableFunctor("Id[F]", FINSET, FINSET, lambda n: n, lambda u: u)


# ---------------------------------------------------------------------------
# coproducts in F


def standard_binary_coproduct() -> BinaryCoproductWitness:
    """``m + n`` with the initial-segment and final-segment injections."""

    def copair(f, g):
        if f.cod != g.cod:
            raise ContractError(f"copair of {f} and {g}: codomains differ")
        return FinFunction.trusted(f.dom + g.dom, f.cod, f.table + g.table)

    return BinaryCoproductWitness(
        FINSET,
        coproduct=lambda m, n: m + n,
        inj0=functools.lru_cache(maxsize=None)(
            lambda m, n: FinFunction(m, m + n, tuple(range(m)))),
        inj1=functools.lru_cache(maxsize=None)(
            lambda m, n: FinFunction(n, m + n, tuple(range(m, m + n)))),
        copair=copair,
        name="standard",
    )


def nonstandard_coproduct_11() -> BinaryCoproductWitness:
    """The standard structure except at ``(1, 1)``, where the injections swap."""
    std = standard_binary_coproduct()

    def inj0(m, n):
        if (m, n) == (1, 1):
            return FinFunction(1, 2, (1,))
        return std.inj0(m, n)

    def inj1(m, n):
        if (m, n) == (1, 1):
            return FinFunction(1, 2, (0,))
        return std.inj1(m, n)

    def copair(f, g):
        if f.dom == 1 and g.dom == 1:
            if f.cod != g.cod:
                raise ContractError(f"copair of {f} and {g}: codomains differ")
            return FinFunction(2, f.cod, (g.table[0], f.table[0]))
        return std.copair(f, g)

    return BinaryCoproductWitness(FINSET, std.coproduct, inj0, inj1, copair, name="swapped(1,1)")


def initial_object() -> InitialObjectWitness:
    return InitialObjectWitness(FINSET, 0, lambda n: FinFunction(0, n, ()))


def standard_ordered_coproduct():
    return derive_ordered(initial_object(), standard_binary_coproduct())


def ordered_injection_formula(ns, i) -> FinFunction:
    """Closed form of the ``i``-th injection into ``sum(ns)``: ``j -> sum(ns[:i]) + j``."""
    ns = tuple(ns)
    if not 0 <= i < len(ns):
        raise IndexError(f"index {i} out of range for {ns}")
    offset = sum(ns[:i])
    return FinFunction(ns[i], sum(ns), tuple(offset + j for j in range(ns[i])))


# ---------------------------------------------------------------------------
# exhaustive checks at scale


def _hom_array(m, n):
    homs = enumerate_homs(m, n)
    arr = np.array([u.table for u in homs], dtype=np.int16).reshape(len(homs), m)
    return homs, arr


def check_f_exhaustive(bound) -> list[LawReport]:
    """Unit and associativity laws of F over every function between ``0..bound``.

    The triple count grows like ``bound**(3*bound)``, so associativity runs on
    integer arrays.  Soundness: the array composite is first checked against
    :func:`fs_compose` on *every* composable pair, so associativity of the
    array composite on all triples is associativity of ``fs_compose``.
    """
    objs = range(bound + 1)
    homs = {(m, n): _hom_array(m, n) for m in objs for n in objs}

    def array_compose(fa, ga):
        # fa: (F, m) tables into n, ga: (G, n) tables; result (F, G, m)
        if fa.shape[1] == 0:
            return np.zeros((fa.shape[0], ga.shape[0], 0), dtype=np.int16)
        return ga[:, fa].transpose(1, 0, 2)

    agree = 0
    for m, n, k in itertools.product(objs, repeat=3):
        fl, fa = homs[m, n]
        gl, ga = homs[n, k]
        if not fl or not gl:
            continue
        comp = array_compose(fa, ga)
        for i, f in enumerate(fl):
            for j, g in enumerate(gl):
                agree += 1
                if fs_compose(f, g).table != tuple(int(v) for v in comp[i, j]):
                    return [LawReport("F", "array composite matches fs_compose", FAIL, agree,
                                      {"f": f.to_json(), "g": g.to_json()})]
    reports = [LawReport("F", "array composite matches fs_compose", PASS, agree)]

    unit_cases = 0
    for m, n in itertools.product(objs, repeat=2):
        for u in homs[m, n][0]:
            unit_cases += 1
            if fs_compose(fs_identity(m), u) != u or fs_compose(u, fs_identity(n)) != u:
                reports.append(LawReport("F", "identity laws", FAIL, unit_cases,
                                         {"f": u.to_json()}))
                break
        else:
            continue
        break
    else:
        reports.append(LawReport("F", "identity laws", PASS, unit_cases))

    triples = 0
    for a, b, c, d in itertools.product(objs, repeat=4):
        fa, ga, ha = homs[a, b][1], homs[b, c][1], homs[c, d][1]
        nf, ng, nh = len(fa), len(ga), len(ha)
        if not nf or not ng or not nh:
            continue
        triples += nf * ng * nh
        if a == 0:
            continue  # every triple out of 0 is the empty table on both sides
        gh = array_compose(ga, ha)            # (ng, nh, b)
        for i in range(nf):
            fg = ga[:, fa[i]]                 # (ng, a)
            left = ha[:, fg]                  # (nh, ng, a)
            right = gh[:, :, fa[i]].transpose(1, 0, 2)
            bad = np.argwhere((left != right).any(axis=-1))
            if len(bad):
                l, j = bad[0]
                f, g, h = homs[a, b][0][i], homs[b, c][0][j], homs[c, d][0][l]
                reports.append(LawReport("F", "associativity", FAIL, triples,
                                         {"f": f.to_json(), "g": g.to_json(), "h": h.to_json()}))
                return reports
    reports.append(LawReport("F", "associativity", PASS, triples))
    return reports
