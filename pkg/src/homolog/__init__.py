"""Exact computations in derived categories over Euclidean domains.

Rings: ``ZZ`` (the integers), ``QQt`` (polynomials over the rationals) and
``QQ``.  Everything is exact; no floating point is used anywhere.
"""

__version__ = "0.1.0"

from .rings import QQ, QQt, ZZ, Poly, ring_from_tag
from .errors import (
    CoefficientOverflow,
    HomologError,
    IllDefinedMap,
    LiftError,
    NotAComplex,
    NotDualizing,
    NotQuasiIsomorphism,
)
from .matrix import Matrix, SmithForm, det, entry_bit_cap, image_basis, kernel_basis, rank, smith_form, snf, solve_linear
from .fpmod import (
    FpModule,
    InvariantFactors,
    ModuleMap,
    cokernel,
    direct_sum,
    hom_module,
    image,
    inverse,
    is_iso,
    kernel,
    normal_form,
    tensor_module,
)
from .complexes import (
    ChainMap,
    FreeComplex,
    Homotopy,
    ModuleComplex,
    TurnedTriangle,
    cohomology,
    cohomology_table,
    cone,
    hom_complex,
    induced_map,
    is_acyclic,
    is_null_homotopic,
    is_quasi_iso,
    shift,
    smart_truncate_ge,
    smart_truncate_le,
    stupid_truncate,
    tensor_complex,
    turn_triangle,
)
from .resolve import Resolution, free_resolution, lift_through_qis
from .derived import (
    Roof,
    derived_hom_group,
    derived_tensor,
    ext,
    inverse_roof,
    plain_roof,
    identity_roof,
    resolve_complex,
    rhom,
    roof_compose,
    roof_eq,
    tor,
)
from .duality import DualizingCandidate, DualizingReport, biduality_map, classify_dualizing, dual, verify_dualizing
