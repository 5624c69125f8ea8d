"""Weighted generalised projective spaces over quotient rings."""

from .projspace import (  # noqa: F401
    ProjPoint,
    WeightVector,
    canon,
    enumerate_pf,
    integer_ideal,
    is_unital_tuple,
    make_point,
    pf_count,
    proj_equiv,
)
