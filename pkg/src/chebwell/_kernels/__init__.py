"""Backend selection for the band-matrix kernels.

The compiled extension is preferred when it imported successfully; the
pure-Python twin is used otherwise, or when the environment variable
``CHEBWELL_PURE_KERNELS`` is set to a non-empty value.  ``BACKEND`` names the
active choice and both implementations stay importable for the parity tests
and the benchmark.
"""

import os

from . import _band_py as pure

compiled = None
try:
    from . import _band as compiled
except ImportError:
    compiled = None

if compiled is not None and not os.environ.get("CHEBWELL_PURE_KERNELS"):
    BACKEND = "compiled"
    _active = compiled
else:
    BACKEND = "pure"
    _active = pure

count_below = _active.count_below
eig_bounds = _active.eig_bounds
min_eig = _active.min_eig

__all__ = [
    "BACKEND",
    "compiled",
    "count_below",
    "eig_bounds",
    "min_eig",
    "pure",
]
