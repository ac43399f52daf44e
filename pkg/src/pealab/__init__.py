"""A workbench for finite pseudo-effect algebras.

Verify the defining laws, derive order and residuals, compute Boolean
centers and central covers, close sets under the four closure operators,
and produce the unique three-part, six-part and I/II/III direct
decompositions with machine-checked isomorphism witnesses.
"""

from .center import (CentralStructure, center, central_cover,
                     gamma_orthogonal, is_central, orthosum, projection,
                     verify_hull)
from .classes import (CLASS_REGISTRY, ClassProfile, RieszFlags, atoms,
                      boolean_elements, class_profile, is_atomic,
                      is_boolean_element, is_commutative, is_lattice_ordered,
                      is_monad, is_subcentral, is_weak_commutative, monads,
                      polyatoms, riesz_properties, subcentral_elements,
                      td_from_class, verify_type_class)
from .core import (AxiomReport, AxiomViolation, Interval, MorphismWitness,
                   PeaTable, Poset, Product, canonical_key, canonicalize,
                   check_structure, derive_order, direct_product,
                   find_isomorphism, interval_algebra, pogroup_interval,
                   residuals, verify_axioms, verify_morphism)
from .decomposition import (DecompositionPart, DecompositionReport,
                            decompose_six, decompose_three, decompose_types,
                            phi_isomorphism)
from .enumeration import enumerate_peas
from .errors import (DomainError, InvariantViolation, ParseError, PeaError,
                     ResourceError, StructuralError)
from .fileformat import emit_pea, load_pea, parse_pea, save_pea
from .fixtures import builtin, builtin_names
from .tdsets import (CentralClassification, TDSet, as_tdset, bicommutant,
                     classify_central, closure_down, closure_gamma,
                     closure_sup, commutant, is_std, is_td, std_generated,
                     td_generated, type_cover)

decompose_I_II_III = decompose_types

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
