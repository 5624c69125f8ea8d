"""Decision procedures and witnesses for the unital set condition, strong
approximation and the co-maximal congruence identities."""

from .usc import (  # noqa: F401
    UscReport,
    UscWitness,
    ZeroIdealRefutation,
    usc_check_finite,
    usc_refute_poly_example,
    usc_refute_zero_ideal,
    usc_witness,
    usc_witness_z,
)
from .sap_check import SapReport, sap_check_small, sap_ge_converse_check  # noqa: F401
from .lemma41 import Lemma41Report, factor_through, lemma41_check, sampled_membership  # noqa: F401
