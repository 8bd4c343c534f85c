"""Higher Nakayama algebras: cluster-tilting combinatorics, syzygies,
resolution quivers, the singularity presentation, and a matrix oracle."""

from .combinatorics import (
    KupischSeries,
    canonicalize,
    cycle_vertices,
    enumerate_ct_labels,
    enumerate_vertices,
    f_bar,
    f_map,
    interleaves,
    is_ordered_sequence,
    sigma_shift,
    validate_kupisch,
)
from .ct import (
    BasisMorphism,
    HomWindow,
    Quiver,
    compose_basis,
    ct_quiver,
    dimension_vector,
    gabriel_quiver,
    hom_dim,
    hom_window,
    is_injective,
    is_projective,
    is_simple,
    module_dimension,
    socle_vertex,
    tau_d,
    top_vertex,
)
from .homology import (
    FinitePd,
    InfinitePd,
    SyzygyStep,
    d_syzygy_step,
    extended_f,
    proj_dim_class,
    stable_shift_witness,
)
from .singularity import (
    AlgebraSpec,
    DerivedKupisch,
    ResolutionQuiver,
    SingularityReport,
    analyze,
    b_spec,
    derived_kupisch,
    iota_inverse,
    iota_map,
    label_from_b,
    label_to_b,
    lambda_spec,
    make_algebra_spec,
    phi,
    phi_inverse,
    resolution_quiver,
    wide_labels,
    wide_quiver,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
