"""
Finite sets and their coproducts
================================

The category F has the naturals as objects and dense tables as morphisms.
This script builds a few functions, checks the category laws exhaustively,
and looks at two different (but equally valid) choices of binary coproduct.
"""

import itertools
import time

from lawvere.finset import (FinFunction, check_f_exhaustive, fs_compose,
                            nonstandard_coproduct_11, ordered_injection_formula,
                            standard_binary_coproduct, standard_ordered_coproduct)
from lawvere.coproducts import check_binary_laws

# composition is diagrammatic: u first, then v
u = FinFunction(2, 3, (2, 0))
v = FinFunction(3, 2, (1, 1, 0))
print(u, ";", v, "=", fs_compose(u, v))

# every function between 0..4, every composable triple
t0 = time.perf_counter()
for r in check_f_exhaustive(4):
    print(r.render())
print(f"({time.perf_counter() - t0:.2f}s)")

###############################################################################
# Two coproduct witnesses
# -----------------------
# The standard one puts the first summand first.  The other swaps the two
# injections at (1, 1) only.  Both satisfy the universal property.

std, odd = standard_binary_coproduct(), nonstandard_coproduct_11()
print(std.inj0(1, 1), std.inj1(1, 1))
print(odd.inj0(1, 1), odd.inj1(1, 1))
for w in (std, odd):
    for r in check_binary_laws(w, 3):
        print(r.render())

###############################################################################
# Ordered coproducts by induction
# -------------------------------
# Coproducts of sequences come from the binary witness and the empty set.
# For the standard witness the i-th injection is just an offset.

ordered = standard_ordered_coproduct()
for xs in [(2, 0, 3), (1, 1, 1, 1)]:
    print(xs, "->", ordered.coproduct(xs))
    for i in range(len(xs)):
        print("   ", ordered.inj(xs, i), ordered.inj(xs, i) == ordered_injection_formula(xs, i))

agree = all(ordered.inj(xs, i) == ordered_injection_formula(xs, i)
            for k in range(5) for xs in itertools.product(range(4), repeat=k)
            for i in range(k))
print("offset formula agrees on all sequences of length <= 4, entries <= 3:", agree)
