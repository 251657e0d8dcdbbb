"""Tilting modules and tilting quivers of representation-finite path algebras.

All linear algebra is exact over Q.  For Dynkin quivers every indecomposable
is defined over the prime field, so the Hom and Ext dimensions computed here
agree with those over an algebraically closed field.
"""
from .ar import dual, knit_indecomposables, tau, tau_inv, transpose
from .bb import (
    BBTiltData,
    BModule,
    GeneralTiltData,
    b_enumerate_tilting,
    b_ext_dim,
    b_hasse,
    b_is_tilting,
    classify_torsion,
    is_admissible,
    is_apr,
    make_bb_tilt,
    make_general_tilt,
    partition_tilting,
    phi,
    phi_both,
    phi_inverse,
    phi_reject,
    run_bb,
    run_tilted,
    transport_construct,
    verify_tilt_properties,
)
from .errors import *  # noqa: F401,F403
from .linalg import Matrix, kernel_basis, rank, solve
from .quiver import (
    Arrow,
    Quiver,
    euler_form,
    injective_rep,
    is_representation_finite,
    parse_quiver,
    projective_rep,
    serialize_quiver,
    simple_rep,
)
from .representation import (
    Morphism,
    Representation,
    Subrep,
    decompose,
    direct_sum,
    ext1,
    ext1_dim,
    hom_basis,
    hom_dim,
    is_generated_by,
    is_iso,
    quotient,
    reject,
    trace,
    universal_extension,
)
from .tilting import (
    IndTable,
    TiltingModule,
    TiltingQuiver,
    build_ind_table,
    enumerate_tilting,
    exchange_quiver,
    hasse,
    leq,
)

__version__ = "0.1.0"
