"""Row completion, strong approximation lifts and the congruence-subgroup pipelines.

The surjectivity runner lives in :mod:`src.lifting.surjectivity`; it is not
imported here because it depends on :mod:`src.projective`, which in turn
needs :func:`lift_unital_residue` from this package.
"""

from .completion import complete_row_sl, complete_row_sp, lift_unital_residue, lift_unital_residue_z  # noqa: F401
from .sap import sap_lift_sl, sap_lift_sp  # noqa: F401
from .assembly import crt_matrix  # noqa: F401
from .certificate import (  # noqa: F401
    CongruenceLevel,
    GroupKind,
    LiftCertificate,
    compute_verdicts,
    identity_certificate,
    verify_certificate,
)
from .pipelines import lift_for, omega_lift, sigma_lift  # noqa: F401
