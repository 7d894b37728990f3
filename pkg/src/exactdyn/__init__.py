"""exactdyn: exact-arithmetic dynamical classification.

Decides amplified / PCD / entropy classes of integer-matrix endomorphisms
of E^n, isometries of hyperbolic lattices, and linear maps of polyhedral
cones, with exact certificates throughout (Sturm chains, rational LP,
number-field arithmetic with isolating intervals).
"""

__version__ = "1.0.0"

from .common import (BadSignature, EntropyClass, FieldTooLarge,
                     HypothesisViolated, InputError, NoConvergence,
                     NoneInPositiveCone, NotContractible, NotInvariant,
                     NotIsometry, SearchFailed, TranslationUnsupported)
from .intpoly import (IntPoly, SalemVerdict, cyclotomic, cyclotomic_divisors,
                      is_cyclotomic_product, root_location_summary,
                      salem_check, sturm_count, unit_circle_root_count)
from .algnum import AlgebraicRadius, NumberField, isolate_largest_real_root
from .abelian import (DynReport, EndoSpec, classify, degree, fix_count,
                      fixed_nef_witness, is_pcd_via_periods, pcd_nef_witness,
                      spectral_radius, torsion_fixed_count)
from .conedyn import (ConeEndo, DescentTrace, PolyCone, amplified_test,
                      contains, contract, descend, extremal_rays,
                      minimal_face, power_limit_ray, ray_permutation)
from .hyperlattice import (LatticeIsometry, QuadLattice, entropy_class,
                           finite_order_test, null_fixed_witness,
                           positive_entropy_witness, verify_isometry)
