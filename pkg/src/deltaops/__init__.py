"""Exact arithmetic for Delta-operator symmetric functions and the labeled
Dyck-path and ordered-multiset-partition combinatorics they conjecturally
count, plus a CLI that checks every identity at desk scale."""

from .poly import (
    MultiPoly,
    RatFunc,
    cyclotomic,
    poly_divides,
    q_lucas_check,
    qbinom,
    qfact,
    qint,
    qtint,
    specialize,
)
from .partitions import compositions, conjugate, partitions
from .symfunc import (
    SymFunc,
    convert,
    expand_vars,
    from_expansion,
    hall_inner,
    kostka,
    omega,
    plethysm,
    qsym_coeff,
    schur_expand,
)
from .macdonald import (
    MacdonaldCache,
    bmu,
    delta,
    delta_identity_check,
    delta_prime,
    delta_t_recip,
    expand_in_htilde,
    nabla,
    tmu,
)
from .genfunc import (
    cat4,
    cat4_touch,
    catmod4,
    catmod4_comp,
    catmod4_touch,
    k1_formula,
    llt,
    partial_gf,
    q1_formula,
    rise_gf,
    val_gf,
    yamanouchi_schur,
)
from .osp import dinv, enumerate_osp, gamma, gamma_inverse, inv, maj, minimaj
from .config import Config
from .checks import CHECKS, run_check, run_suite

__all__ = [name for name in dir() if not name.startswith("_")]
