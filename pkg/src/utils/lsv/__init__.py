from .algebra import AlgebraSpec, build_spec, base_field, torus_generator
from .generators import (
    GenSetS,
    rep_torus,
    rep_z,
    gen_b,
    gen_b_matrix,
    torus,
    gens_S,
    trivial_eigs,
    abcc_gens,
    abcc_data,
)
from .error import UnsupportedConfigError, DegenerateIdealError, ConstructionError
