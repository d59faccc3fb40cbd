"""
Monads to theories and back
===========================

rml turns a monad into its Kleisli category; lrm turns a theory into the
monad of its points hom(1, n).  Neither round trip is the identity on the
nose, but both come back isomorphic, and we can check the isomorphisms.
"""

from lawvere.equivalence import (check_round_trip, counit_inverse, counit_iso, lrm, rml,
                                 unit_iso)
from lawvere.relmonad import KleisliMor, builtin_monads, free_monoid_monad
from lawvere.terms import parse
from lawvere.theory import TermTuple, builtin_theories, monoid_theory

fm = free_monoid_monad()
back = lrm(rml(fm))
print(back.name)
print(back.carrier(2).enumerate(2)[:5])
print(unit_iso(fm).component(2, KleisliMor(1, 2, ((1, 0),))))

T = monoid_theory()
u = TermTuple(2, 2, (parse("(mul x1 x0)"), parse("x0")))
tab = counit_inverse(T)(u)
print(tab.table)
print(counit_iso(T)(tab) == u)

###############################################################################
# Every builtin, both directions

for m in builtin_monads():
    rt = check_round_trip(m)
    print(f"{rt.status.upper()}  {m.name}: {len(rt.reports)} reports, squares for {', '.join(rt.exercised)}")

for t in builtin_theories():
    rt = check_round_trip(t, nmax=2)
    print(f"{rt.status.upper()}  {t.name}: {len(rt.reports)} reports, squares for {', '.join(rt.exercised)}")
