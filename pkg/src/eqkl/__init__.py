"""Exact equivariant Kazhdan-Lusztig, inverse KL and Z-polynomials of matroids.

The package computes the three polynomials both from their defining
recursions (small ground sets, enumerable symmetry groups) and through the
relaxation fast path for paving matroids, which reaches the Steiner-system
matroids acted on by the Mathieu groups.  All arithmetic is exact.
"""

from .chartab import (
    CharacterTable,
    ClassFunction,
    QuadraticValue,
    decompose,
    inner_product,
    load_table,
    product_table,
    symmetric_table,
    validate_table,
)
from .equivariant import (
    Brute,
    EquivPoly,
    direct_sum_poly,
    eq_q_residual,
    fast_paving,
    gedeon_check,
    p_brute,
    q_brute,
    relaxation_delta,
    z_brute,
)
from .groups import EnumerationBoundError, PermGroup, symmetric_group
from .matroid import (
    Matroid,
    SteinerSystem,
    boolean,
    direct_sum,
    from_steiner,
    load_matroid,
    uniform,
    vamos,
)
from .partitions import (
    SkewShape,
    branch_remove_box,
    branch_skew_add_inner_box,
    dim_specht,
    lr_expand,
    mn_character,
    pieri_row,
)
from .perms import Perm, parse_perm
from .symrep import (
    SymmPoly,
    SymmRep,
    correction_p,
    correction_q,
    correction_r,
    correction_z,
    induct_product,
    palindromic_completion,
    restrict_one,
    uniform_p,
    uniform_q,
    uniform_z,
)

__version__ = "0.1.0"
