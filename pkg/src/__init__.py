"""Top-level package for exact congruence-subgroup lifting.

This package exposes the subpackages for ring arithmetic, matrix groups,
projective spaces, lifting and ring-condition checks to simplify imports.
For example::

    from src.rings import QuotRing
    from src.lifting import omega_lift, verify_certificate

"""

from . import rings        # noqa: F401
from . import groups       # noqa: F401
from . import lifting      # noqa: F401
from . import projective   # noqa: F401
from . import conditions   # noqa: F401
