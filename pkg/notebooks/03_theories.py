"""
Lawvere theories from signatures
================================

A presented theory has hom(m, n) = m-tuples of normal-form terms in n
variables.  Composition is substitution, copairing is concatenation, and the
structure functor from F picks variables.
"""

from lawvere.finset import FinFunction
from lawvere.terms import MONOID_SIGNATURE, parse
from lawvere.theory import (TermTuple, check_lawvere_structure, check_theory_morphism,
                            eval_theory_morphism, monoid_theory, presented_theory)

T = monoid_theory()
print([str(u.terms[0]) for u in T.category.hom(1, 2, 3)])

u = T.structure(FinFunction(2, 3, (2, 0)))
print("L(2->3:[2,0]) =", u)
print("injection 1 of 3:", T.injection(3, 1))

for r in check_lawvere_structure(T, 2):
    print(r.render())

###############################################################################
# Dropping the associativity rule
# -------------------------------
# Replacing it with something that loses information breaks composition.

bad = presented_theory(MONOID_SIGNATURE, [("(mul x0 e)", "x0"),
                                          ("(mul (mul x0 x1) x2)", "x0")], name="lossy")
for r in check_lawvere_structure(bad, 1, size=3):
    if not r.passed:
        print(r.render())
        print("still fails on replay:", r.replay())

###############################################################################
# A theory morphism: evaluate free terms in monoids

ev = eval_theory_morphism()
print(ev(TermTuple(1, 2, (parse("(mul (mul x0 e) x1)"),))))
print(all(r.passed for r in check_theory_morphism(ev, 2)))
