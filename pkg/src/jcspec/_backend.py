"""Select the grid-kernel backend at import time.

The compiled extension ``jcspec._kernels`` is preferred when it importable;
otherwise the numpy implementation in ``_kernels_py`` is used.  Setting the
environment variable ``JCSPEC_PURE_PYTHON`` (to any non-empty value) forces
the fallback, which is handy for benchmarking and debugging.
"""

import os

if os.environ.get("JCSPEC_PURE_PYTHON"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # compiled extension
    except ImportError:
        from . import _kernels_py as kernels

BACKEND = kernels.BACKEND_NAME
