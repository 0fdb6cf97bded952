"""Backend selection for the orbit-counting kernel.

The compiled extension is used when it was built; otherwise the pure-Python
twin is used. Setting ``COXETERK_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

import numpy as np

from coxeterk._orbits_py import count_fconj_orbits as count_fconj_orbits_py

count_fconj_orbits_compiled = None
if not os.environ.get("COXETERK_PURE_PYTHON"):
    try:
        from coxeterk._orbits import count_fconj_orbits as count_fconj_orbits_compiled
    except ImportError:  # extension not built
        pass

BACKEND = "python" if count_fconj_orbits_compiled is None else "compiled"


def count_fconj_orbits(mul, inv, powers, regular) -> int:
    """Dispatch to the selected backend. Arguments may be lists or arrays."""
    if count_fconj_orbits_compiled is None:
        return count_fconj_orbits_py(
            np.asarray(mul).tolist(),
            np.asarray(inv).tolist(),
            np.asarray(powers).reshape(-1, len(inv)).tolist(),
            np.asarray(regular).tolist(),
        )
    return count_fconj_orbits_compiled(
        np.ascontiguousarray(mul, dtype=np.intc),
        np.ascontiguousarray(inv, dtype=np.intc),
        np.ascontiguousarray(np.asarray(powers).reshape(-1, len(inv)), dtype=np.intc),
        np.ascontiguousarray(regular, dtype=np.uint8),
    )
