"""Exact arithmetic with the indeterminate I (I*I = I) over Z, Q and Z_n,
and decision procedures for finite set, semigroup and group vector spaces
and linear algebras built on it."""

from .algebra import (
    Kind,
    MagmaClass,
    Mixedness,
    ScalarSet,
    StructureDef,
    VerificationReport,
    classify,
    magma_profile,
    mixedness,
    neutro_closure,
    scalar_profile,
    verify,
)
from .bistructure import (
    BiFuzzyMap,
    BiStructureDef,
    bigenerator,
    classify_bisubstructure,
    restrict_bifuzzy,
    verify_bifuzzy,
    verify_bistructure,
)
from .carrier import Matrix, Poly, Scalar, Tuple, degree, elem_add, scalar_act, zero_like
from .fuzzy import FuzzyKind, FuzzyMap, restrict_fuzzy, verify_fuzzy
from .kernels import BACKEND
from .linmap import MapTable, enumerate_maps, invert_map, is_projection_onto, preservation_profile, verify_map
from .ring import (
    Q,
    Z,
    BaseRing,
    FuzzyNeutroValue,
    NeutroNumber,
    Zn,
    classify_number,
    fuzzy_leq,
    fuzzy_min,
    neutro_add,
    neutro_mul,
)
from .span import Mode, is_generating, is_independent, minimal_generating_set, span
from .substructure import (
    Duo,
    Plain,
    Pseudo,
    PseudoSemigroup,
    PseudoSet,
    SubsetScalars,
    check_direct_sum,
    check_direct_union,
    check_pseudo_direct_sum,
    enumerate_substructures,
    is_substructure,
    simplicity,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BaseRing",
    "BiFuzzyMap",
    "bigenerator",
    "BiStructureDef",
    "check_direct_sum",
    "check_direct_union",
    "check_pseudo_direct_sum",
    "classify",
    "classify_bisubstructure",
    "classify_number",
    "degree",
    "Duo",
    "elem_add",
    "enumerate_maps",
    "enumerate_substructures",
    "fuzzy_leq",
    "fuzzy_min",
    "FuzzyKind",
    "FuzzyMap",
    "FuzzyNeutroValue",
    "invert_map",
    "is_generating",
    "is_independent",
    "is_projection_onto",
    "is_substructure",
    "Kind",
    "magma_profile",
    "MagmaClass",
    "MapTable",
    "Matrix",
    "minimal_generating_set",
    "Mixedness",
    "mixedness",
    "Mode",
    "neutro_add",
    "neutro_closure",
    "neutro_mul",
    "NeutroNumber",
    "Plain",
    "Poly",
    "preservation_profile",
    "Pseudo",
    "PseudoSemigroup",
    "PseudoSet",
    "Q",
    "restrict_bifuzzy",
    "restrict_fuzzy",
    "Scalar",
    "scalar_act",
    "scalar_profile",
    "ScalarSet",
    "simplicity",
    "span",
    "StructureDef",
    "SubsetScalars",
    "Tuple",
    "VerificationReport",
    "verify",
    "verify_bifuzzy",
    "verify_bistructure",
    "verify_fuzzy",
    "verify_map",
    "Z",
    "zero_like",
    "Zn",
]

