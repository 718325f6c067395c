"""covercalc: exact covering numbers of direct sums of cyclic modules.

Public surface: ring adapters (rings), symbolic descriptors and
normalization (modules), covering thresholds and witnesses (covering),
punctured coset covers (cosets), cyclic-monoid sums (monoids), and the
brute-force oracle (oracle).  The text grammar lives in parser and the
command line in cli.
"""

from .cardinal import ALEPH0, Cardinal, UNCOUNTABLE, finite
from .covering import (CoverAnswer, CoverWitness, Trichotomy,
                       build_cover_witness, classify, nu1, s_set, sigma,
                       sigma_integer)
from .cosets import (CosetCoverWitness, build_coset_cover, phi_cyclic,
                     phi_conjecture_value, phi_finite_abelian, phi_prime,
                     phi_vector_space, verify_coset_cover)
from .modules import (ModuleDescriptor, NormalizedDescriptor, NCSet,
                      descriptor_from_presentation, make_descriptor, nc_set,
                      normalize, q_value, reduced_divisible_split)
from .monoids import (MonoidAnswer, MonoidDescriptor, classify_monoid,
                      verify_monoid_partition)
from .oracle import (FiniteModule, SubmoduleSet, enumerate_submodules,
                     materialize, min_coset_cover_punctured,
                     min_submodule_cover, verify_cover_witness)
from .parser import parse_monoid, parse_ring, parse_spec, render_descriptor
from .rings import (FactoredIdeal, MaximalIdealId, RingHandle,
                    abstract_dedekind, abstract_local, factor_ideal,
                    field_ring, gaussian_integers, integers,
                    layer_cardinality, maximal_ideals_with_residue_at_most,
                    min_residue_cardinality, poly_over_prime_field,
                    residue_cardinality)
from .snf import smith_normal_form

__version__ = "0.1.0"
