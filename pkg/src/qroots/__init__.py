"""Root systems of acyclic quivers.

Classification of the Tits form, generic hom/ext dimensions, canonical
decompositions with Kac-criterion verification, and the accumulation
behavior of normalized real Schur roots.
"""

from .quiver import Quiver, build_quiver, quiver_from_json, quiver_to_json
from .forms import (
    BaseType,
    FormData,
    Signature,
    classify,
    coxeter_apply,
    coxeter_apply_inverse,
    coxeter_matrix,
    euler_form,
    form_data,
    height,
    simple_reflection,
    symmetric_form,
    tits_form,
)
from .homext import (
    HomExtTable,
    ext_generic,
    hom_generic,
    hom_randomized,
    left_orthogonal,
    table_for,
)
from .roots import (
    Ray,
    RootClass,
    RootKind,
    classify_with_schur,
    enumerate_real_schur_roots,
    is_schur,
    normalize,
    ray_distance,
    root_classify,
)
from .candecomp import (
    CanonicalDecomposition,
    KacCheck,
    SchurSequenceState,
    SequenceEntry,
    canonical_decomposition,
    refine_isotropic,
    resolve_rank2,
    self_ext,
    self_hom,
    trivial_schur_sequence,
    verify_kac_criterion,
)
from .accumulation import (
    AccumulationPoint,
    CategoryType,
    RankTwoInfo,
    RationalAccumulation,
    SpecialEigenData,
    acc2_scan,
    enumerate_exceptional_pairs,
    is_rational_accumulation,
    isotropic_witness_sequence,
    rank2_isotropic_rays,
    segment_sign_probe,
    special_eigenvectors,
    strict_imaginary_neighborhood_probe,
    tangency_report,
    tau_orbit,
    y_pm_avoidance_check,
)
from .corpus import corpus, corpus_names

__version__ = "0.1.0"

__all__ = [
    "AccumulationPoint",
    "BaseType",
    "CanonicalDecomposition",
    "CategoryType",
    "FormData",
    "HomExtTable",
    "KacCheck",
    "Quiver",
    "RankTwoInfo",
    "RationalAccumulation",
    "Ray",
    "RootClass",
    "RootKind",
    "SchurSequenceState",
    "SequenceEntry",
    "Signature",
    "SpecialEigenData",
    "acc2_scan",
    "build_quiver",
    "canonical_decomposition",
    "classify",
    "classify_with_schur",
    "corpus",
    "corpus_names",
    "coxeter_apply",
    "coxeter_apply_inverse",
    "coxeter_matrix",
    "enumerate_exceptional_pairs",
    "enumerate_real_schur_roots",
    "euler_form",
    "ext_generic",
    "form_data",
    "height",
    "hom_generic",
    "hom_randomized",
    "is_rational_accumulation",
    "is_schur",
    "isotropic_witness_sequence",
    "left_orthogonal",
    "normalize",
    "quiver_from_json",
    "quiver_to_json",
    "rank2_isotropic_rays",
    "ray_distance",
    "refine_isotropic",
    "resolve_rank2",
    "root_classify",
    "segment_sign_probe",
    "self_ext",
    "self_hom",
    "simple_reflection",
    "special_eigenvectors",
    "strict_imaginary_neighborhood_probe",
    "symmetric_form",
    "table_for",
    "tangency_report",
    "tau_orbit",
    "tits_form",
    "trivial_schur_sequence",
    "verify_kac_criterion",
    "y_pm_avoidance_check",
]
