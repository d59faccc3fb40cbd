"""Relative monads on finite sets, Lawvere theories, and the passage between them.

Everything is computable and checked on bounded data: categories expose
finite hom samplers, and each law check returns :class:`LawReport` objects
carrying a replayable counterexample when something breaks.
"""

from .cat import (ComputableCategory, ComputableFunctor, LawReport, all_passed,
                  check_category_laws, check_functor_laws, functors_equal_on)
from .coproducts import (BinaryCoproductWitness, InitialObjectWitness, OrderedCoproductWitness,
                         check_binary_laws, check_initial, check_ordered_laws,
                         check_strict_respect_binary, check_strict_respect_ordered,
                         derive_ordered)
from .equivalence import (RoundTripReport, check_round_trip, counit_inverse, counit_iso, lrm,
                          lrm_mor, rml, rml_mor, unit_iso, unit_iso_inverse)
from .errors import (CompositionError, ContractError, LawvereError, NormalizationError,
                     NotAnIsomorphism, ScopeError, SpecError, TermSyntaxError)
from .finset import (FINSET, FinFunction, check_f_exhaustive, enumerate_homs, fs_compose,
                     fs_identity, nonstandard_coproduct_11, ordered_injection_formula,
                     standard_binary_coproduct, standard_ordered_coproduct)
from .relmonad import (CarrierSet, JfRelativeMonad, KleisliMor, MonadMorphism,
                       builtin_monads, builtin_morphisms, check_monad_morphism,
                       check_relmonad_laws, free_monoid_monad, free_term_monad,
                       identity_monad, invert_pointwise_iso, kleisli, kleisli_embedding,
                       kleisli_functor, make_monad, maybe_monad, monoid_term_monad, term_monad,
                       terminal_monad)
from .terms import (App, RewriteSystem, Signature, Var, enumerate_terms, monoid_rewriting,
                    parse, subst)
from .theory import (LawvereTheory, TheoryMorphism, builtin_theories,
                     builtin_theory_morphisms, check_lawvere_structure, check_theory_morphism,
                     eval_theory_morphism, finset_theory, free_term_theory, make_theory,
                     monoid_theory, presented_theory, theory_morphism)

__version__ = "0.1.0"
