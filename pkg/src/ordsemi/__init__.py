"""Finite ordered semigroups, their bi-ideals and Green's relations."""

from .biideals import (BiIdealSemigroup, InducedKind, band_and_regular, build_biideal_semigroup,
                       induced_relation, relation_compare, star)
from .core import (ElementSet, OrderedSemigroup, PartialOrder, PlainSemigroup, SemigroupError,
                   downward_closure, subset_product, validate_ordered_semigroup,
                   validate_semigroup)
from .greens import (EggBox, EquivalencePartition, GreensMode, egg_box, greens_partitions,
                     l_witness_regular, r_witness_regular)
from .ideals import (IdealFamily, IdealKind, classify_subset, enumerate_family, principal_ideal,
                     regularity)
from .laws import LawReport, Verdict, verify_instance, verify_transformation
from .transform import (Transformation, build_full_transformation, image_of, kernel_of,
                        natural_partial_order)

__version__ = "0.1.0"
