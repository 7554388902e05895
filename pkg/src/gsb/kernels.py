"""Select the word-scan kernel backend at import time.

The compiled extension is preferred when present; set ``GSB_KERNELS=py``
to force the pure-Python twin (used by the benchmark and for debugging).
"""

import os

_choice = os.environ.get("GSB_KERNELS", "").strip().lower()

if _choice in ("py", "python", "pure"):
    from ._kernels_py import (  # noqa: F401
        BACKEND,
        factor_positions,
        find_factor,
        is_factor,
        overlap_lengths,
    )
else:
    try:
        from ._speedups import (  # noqa: F401
            BACKEND,
            factor_positions,
            find_factor,
            is_factor,
            overlap_lengths,
        )
    except ImportError:
        from ._kernels_py import (  # noqa: F401
            BACKEND,
            factor_positions,
            find_factor,
            is_factor,
            overlap_lengths,
        )
