"""Finite semigroups, their morphisms and hierarchical compositions."""

__version__ = "0.1.0"

from .automata import Automaton, run, transition_semigroup
from .errors import (ArgError, AssocError, DegreeMismatch, RangeError, SemigroupError,
                     SizeExceeded)
from .hierarchy import (InfluenceRelation, cascade_emulates, direct_product,
                        influence_relation, wreath_product)
from .morphisms import (UNKNOWN, DivisionResult, InterpretationResult, Morphism,
                        MorphismClass, SearchBudget, Verdict, check_morphism, divides,
                        find_embeddings, find_interpretation, find_morphisms)
from .table import (CayleyTable, ElementInfo, check_associativity, element_info,
                    generated_subsemigroup, generating_set, identity_element,
                    is_subsemigroup, make_cyclic, make_flip_flop, make_left_zero,
                    make_trivial, monogenic, right_regular_representation, subtable,
                    validate_table)
from .transformations import (ClosureResult, GenSet, Transformation, closure, compose,
                              full_transformation_monoid, is_permutation,
                              make_Tn_generators)
from .universality import UniversalityVerdict, is_computer, is_universal
