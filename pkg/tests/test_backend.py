from __future__ import annotations

import os
import subprocess
import sys

import numpy as np
import pytest

from coxeterk import orbits
from coxeterk.groups import A5xC2, D, DxC2, FiniteField, Padic, RATIONALS, REALS, cayley, galois_subgroup, regular_lcm

CASES = [(D(12), RATIONALS), (D(15), Padic(3)), (DxC2(10), FiniteField(2)), (A5xC2, FiniteField(5)), (D(9), REALS)]


def kernel_inputs(g, f):
    data = cayley(g)
    p = f.characteristic
    m = regular_lcm(g, p)
    exps = sorted(galois_subgroup(f, m).elements) if m > 1 else [1]
    powers = np.stack([data.power_map(t) for t in exps])
    regular = np.array([p == 0 or k % p != 0 for k in data.orders.tolist()], dtype=np.uint8)
    return data.mul, data.inv, powers, regular


@pytest.mark.skipif(orbits.count_fconj_orbits_compiled is None, reason="compiled kernel not built")
@pytest.mark.parametrize("g, f", CASES, ids=str)
def test_kernels_agree(g, f):
    mul, inv, powers, regular = kernel_inputs(g, f)
    fast = orbits.count_fconj_orbits_compiled(
        np.ascontiguousarray(mul, dtype=np.intc),
        np.ascontiguousarray(inv, dtype=np.intc),
        np.ascontiguousarray(powers, dtype=np.intc),
        np.ascontiguousarray(regular, dtype=np.uint8),
    )
    slow = orbits.count_fconj_orbits_py(mul.tolist(), inv.tolist(), powers.tolist(), regular.tolist())
    assert fast == slow


def test_backend_name_is_consistent():
    assert orbits.BACKEND == ("python" if orbits.count_fconj_orbits_compiled is None else "compiled")


def test_forced_fallback_gives_same_counts():
    script = (
        "from coxeterk import orbits\n"
        "from coxeterk.groups import A5xC2, DxC2, carter_rank\n"
        "print(orbits.BACKEND, carter_rank(A5xC2), carter_rank(DxC2(12)))\n"
    )
    env = {**os.environ, "COXETERK_PURE_PYTHON": "1"}
    out = subprocess.run([sys.executable, "-c", script], capture_output=True, text=True, env=env, check=True)
    from coxeterk.groups import carter_rank

    assert out.stdout.split() == ["python", str(carter_rank(A5xC2)), str(carter_rank(DxC2(12)))]
