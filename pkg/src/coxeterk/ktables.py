"""Closed-form lower K-theory of the cell stabilizers.

K_{-1} and Wh of D_n and D_n x Z_2 come from divisor/unit-index arithmetic;
the exceptional vertex groups and the reduced projective class groups come
from a small table of known facts. Each table fact carries a provenance
string so reports can show which values are theorems and which are left
symbolic.
"""

from __future__ import annotations

from coxeterk.abelian import (
    OMEGA,
    ZERO,
    FormalAbelianGroup,
    NilK,
    UnknownClassGroup,
)
from coxeterk.groups import D, DxC2, GroupSpec
from coxeterk.numtheory import delta, epsilon, nu_mu, sigma_p, tau

free = FormalAbelianGroup.free
cyclic = FormalAbelianGroup.cyclic

# Smallest n for which K~_0(Z[D_n]) is not known to vanish.
K0_DIHEDRAL_BOUND = 60

PROVENANCE = {
    "k0_dihedral_small": (
        "K~_0(Z[D_n]) = 0 for n < 60: the kernel group D(Z[D_n]) vanishes "
        "and h^+_n = 1 in that range"
    ),
    "k0_dihedral_odd_product": "D_n x Z_2 is isomorphic to D_2n for odd n",
    "k0_swan": (
        "D(Z[D_n x Z_2]) surjects onto D(Z[D_2^r x Z_2]) = Z/2^r (Swan subgroup) "
        "when 2^r exactly divides n"
    ),
    "k0_fixed": (
        "tabulated: K~_0 of D_2 x Z_2 = Z/2, D_4 x Z_2 = Z/4, D_6 x Z_2 = (Z/2)^2, "
        "S_4 x Z_2 = Z/4, A_5 x Z_2 = Z/2, S_4 = 0"
    ),
    "nil_d2": "NK_0 and NK_1 of Z[D_2] are countably infinite direct sums of Z/2",
    "nil_d4": (
        "NK_0(Z[D_4]) = (Z/2)^inf (+) (Z/4)^inf; NK_1(Z[D_4]) is countably "
        "infinite torsion of exponent 2 or 4"
    ),
    "nil_vanish": "NK_q(Z[D_3]) and NK_q(Z[D_5]) vanish for q <= 1",
}


def _dihedral_param(g: GroupSpec) -> tuple[int, int, int]:
    n = g.n
    return n, delta(n), epsilon(n)


def k_minus1_rank(g: GroupSpec) -> int:
    if g.kind == "D":
        return 1 - delta(g.n) + tau(g.n)
    if g.kind == "DxC2":
        n = g.n
        return 1 - 2 * delta(n) + sigma_p(2, n) + 2 * tau(n)
    return {"Trivial": 0, "C2": 0, "S4": 0, "S4xC2": 1, "A5xC2": 2}[g.kind]


def k_minus1(g: GroupSpec) -> FormalAbelianGroup:
    """K_{-1}(ZG); torsion-free for every stabilizer type."""
    return free(k_minus1_rank(g))


def wh_rank(g: GroupSpec) -> int:
    if g.kind == "D":
        n, d, e = _dihedral_param(g)
        return (n + e) // 2 - d
    if g.kind == "DxC2":
        n, d, e = _dihedral_param(g)
        return n + e - 2 * d
    return {"Trivial": 0, "C2": 0, "S4": 0, "S4xC2": 0, "A5xC2": 2}[g.kind]


def wh(g: GroupSpec) -> FormalAbelianGroup:
    return free(wh_rank(g))


def k1(g: GroupSpec) -> FormalAbelianGroup:
    """K_1 of the integral group ring, for dihedral kinds only."""
    if g.kind == "D":
        return cyclic(2, epsilon(g.n) + 1) + wh(g)
    if g.kind == "DxC2":
        return cyclic(2, epsilon(g.n) + 2) + wh(g)
    raise ValueError(f"k1 is only tabulated for D_n and D_n x Z_2, not {g}")


_K0_FIXED = {
    DxC2(2): cyclic(2),
    DxC2(4): cyclic(4),
    DxC2(6): cyclic(2, 2),
    DxC2(5): ZERO,
    GroupSpec("S4xC2"): cyclic(4),
    GroupSpec("A5xC2"): cyclic(2),
    GroupSpec("S4"): ZERO,
    GroupSpec("Trivial"): ZERO,
    GroupSpec("C2"): ZERO,
}


def k0_with_source(g: GroupSpec) -> tuple[FormalAbelianGroup, str]:
    """K~_0(ZG) together with the provenance key of the fact used."""
    if g in _K0_FIXED:
        return _K0_FIXED[g], "k0_fixed"
    if g.kind == "D":
        if g.n < K0_DIHEDRAL_BOUND:
            return ZERO, "k0_dihedral_small"
        return FormalAbelianGroup.symbol(UnknownClassGroup(f"K~_0(Z[D_{g.n}])")), "unknown"
    # D_n x Z_2 outside the fixed table
    n = g.n
    if n % 2:
        value, _ = k0_with_source(D(2 * n))
        if value.is_zero():
            return value, "k0_dihedral_odd_product"
        return FormalAbelianGroup.symbol(UnknownClassGroup(f"K~_0(Z[D_{2 * n}])")), "unknown"
    bound = 2 ** nu_mu(2, n)[0]
    desc = f"K~_0(Z[D_{n} x Z_2]); surjects onto Z/{bound}"
    return FormalAbelianGroup.symbol(UnknownClassGroup(desc)), "k0_swan"


def k0(g: GroupSpec) -> FormalAbelianGroup:
    return k0_with_source(g)[0]


def nil(q: int, n: int) -> FormalAbelianGroup:
    """Bass Nil group NK_q(Z[D_n]) for q in {0, 1}."""
    if q not in (0, 1):
        raise ValueError(f"nil degree must be 0 or 1, got {q}")
    if n < 2:
        raise ValueError(f"dihedral index must be >= 2, got {n}")
    if n == 2:
        return cyclic(2, OMEGA)
    if n in (3, 5):
        return ZERO
    if n == 4:
        if q == 0:
            return cyclic(2, OMEGA) + cyclic(4, OMEGA)
        return FormalAbelianGroup.symbol(NilK(1, 4, "torsion of exponent 2 or 4"))
    return FormalAbelianGroup.symbol(NilK(q, n))


def wh_q(q: int, g: GroupSpec) -> FormalAbelianGroup:
    """Wh_q: Wh for q = 1, K~_0 for q = 0, K_q for q <= -1."""
    if q == 1:
        return wh(g)
    if q == 0:
        return k0(g)
    if q == -1:
        return k_minus1(g)
    if q <= -2:
        return ZERO
    raise ValueError(f"no lower K-group in degree {q}")
