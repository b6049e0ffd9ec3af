"""m-cluster tilted algebras of type A_n.

Tilting complexes in the bounded derived category of a type-A_n path algebra,
their endomorphism algebras, the m-cluster category and its graded
endomorphism algebras, m-relation (trivial) extensions, and the m-rolling
procedure that moves a tilting complex into the fundamental domain.
"""

from .reps import (
    Orientation,
    Interval,
    Representation,
    ModuleMap,
    Ext1Class,
    BoundaryError,
    CoxeterData,
    linear,
    all_intervals,
    interval_module,
    hom_basis,
    hom_basis_itv,
    hom_dim_itv,
    ext1_basis,
    ext1_dim,
    proj_presentation,
    indecomposable_projective,
    indecomposable_injective,
    coxeter_data,
    tau_module,
    decompose,
)
from .derived import (
    DerivedObject,
    DerivedSum,
    GradedMorphism,
    SectionMap,
    OrbitCoordinates,
    PreconditionError,
    InternalCheckError,
    CapExceededError,
    d_hom_basis,
    d_hom_dim,
    d_compose,
    shift,
    tau_derived,
    tau_inv_derived,
    apply_F,
    coordinates,
    from_coordinates,
    in_fundamental_domain,
    is_tilting_complex,
    endo_algebra,
    ext_profile,
    section_of,
    rolling_split,
    roll,
    roll_to_fundamental,
)
from .algebras import (
    StructureAlgebra,
    RightModule,
    NotBasicLocalError,
    EXCEEDS_BOUND,
    radical_basis,
    quiver_of,
    minimal_relations,
    global_dimension,
    cartan_matrix,
    present_algebra,
    regular_module,
    dual_regular_module,
    ext_dim_oracle,
)
from .presentations import (
    Quiver,
    Relation,
    Presentation,
    ISOMORPHIC,
    NOT_ISOMORPHIC,
    INCONCLUSIVE,
    presentation_iso,
    is_gentle_with_cycles,
)
from .cluster import (
    OrbitRepresentative,
    GradedHomSpace,
    canonical_rep,
    cluster_hom,
    is_m_cluster_tilting,
    cluster_endo,
    relation_extension,
    positive_square_zero,
    grade_support,
    fundamental_domain_objects,
)
from .io import (
    SchemaError,
    parse_derived_sum,
    emit_derived_sum,
    parse_presentation,
    emit_presentation,
    io_roundtrip,
)
from .enumeration import enumerate_tilting, EnumerationReport
from .pipeline import run_pipeline, PipelineReport
from .sampling import (
    random_tilting_complex,
    random_tilting_in_fundamental_domain,
    random_tilting_with_gldim,
)
