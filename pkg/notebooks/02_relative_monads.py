"""
Relative monads as substitution
===============================

A relative monad on the inclusion of F gives, for each n, a set of
"things in n variables", the variables themselves (the unit), and a way to
substitute (the extension).  Here we try the builtin examples.
"""

from lawvere.relmonad import (KleisliMor, builtin_monads, check_relmonad_laws, free_monoid_monad,
                              kleisli, maybe_monad, monoid_term_monad)
from lawvere.terms import parse

# the free monoid: substituting words for letters
fm = free_monoid_monad()
f = KleisliMor(2, 3, ((2, 2), ()))          # x0 -> "x2 x2", x1 -> ""
print(fm.extend(f, (0, 1, 0)))

# maybe: the extra element n is an error and it propagates
mb = maybe_monad()
print([mb.extend(KleisliMor(2, 2, (1, 2)), x) for x in range(3)])

# monoid terms: substitute, then normalize
mt = monoid_term_monad()
g = KleisliMor(2, 2, (parse("(mul x1 e)"), parse("e")))
print(mt.extend(g, parse("(mul x0 (mul x1 x0))")))

###############################################################################
# The three laws, on every builtin
# --------------------------------

for m in builtin_monads():
    reports = check_relmonad_laws(m, nmax=3, bound=3)
    print(m.name)
    for r in reports:
        print("   ", r.render())

###############################################################################
# Kleisli composition
# -------------------
# Composing tables is substituting entrywise.

K = kleisli(fm)
a = KleisliMor(1, 2, ((0, 1),))
b = KleisliMor(2, 2, ((1,), (0, 0)))
print(K.compose(a, b))
