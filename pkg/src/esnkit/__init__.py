"""Finite Ehresmann, restriction and inverse semigroupoids and their categories."""

from esnkit.algebra import (OrderRel, PartialTable, UnaryStructure, check_associativity, check_inverse,
                            check_local_meet_semilattice, check_unary_axioms, derive_order,
                            gen_relation_semigroup)
from esnkit.category import (BiorderedCategory, FiniteCategory, check_category, check_lbec,
                             check_locally_inductive, check_ordered, pseudo_product)
from esnkit.enumeration import canonicalize, enumerate_structures, oracle_count
from esnkit.errors import AxiomFailure, InputError, SizeError
from esnkit.esn import build_category, build_semigroupoid, classify, roundtrip_verify
from esnkit.fileio import parse_structure, parse_structure_text, serialize
from esnkit.morphisms import CarrierMap, check_cat_functor, check_sgpd_map, verify_correspondence
from esnkit.report import Report

__version__ = "0.1.0"
