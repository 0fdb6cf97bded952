"""Brute-force finite-group oracle.

The stabilizer groups of a reflection polyhedron are realized concretely
(dihedral symbol pairs, permutations) so that conjugacy, element orders and
Berman's count of F-conjugacy classes of p-regular elements can be decided
by enumeration. These counts feed Carter's rank formula for K_{-1}, giving
an independent check of the closed forms in :mod:`coxeterk.ktables`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import gcd, lcm
from typing import Callable, Hashable

import numpy as np

from coxeterk.numtheory import UnitGroup, is_prime, prime_factors
from coxeterk.orbits import count_fconj_orbits

GroupElement = Hashable

_KINDS = ("Trivial", "C2", "D", "DxC2", "S4", "S4xC2", "A5xC2")


@dataclass(frozen=True, order=True)
class GroupSpec:
    """One of the finite stabilizer types: Trivial, C2, D_n, D_n x Z_2, S_4,
    S_4 x Z_2 or A_5 x Z_2. ``n`` is set only for the two dihedral kinds."""

    kind: str
    n: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.kind in ("D", "DxC2"):
            if self.n is None or self.n < 2:
                raise ValueError(f"{self.kind} needs n >= 2, got {self.n}")
        elif self.n is not None:
            raise ValueError(f"{self.kind} takes no parameter")

    @property
    def order(self) -> int:
        return {
            "Trivial": 1,
            "C2": 2,
            "D": 2 * (self.n or 0),
            "DxC2": 4 * (self.n or 0),
            "S4": 24,
            "S4xC2": 48,
            "A5xC2": 120,
        }[self.kind]

    def __str__(self) -> str:
        if self.kind == "D":
            return f"D_{self.n}"
        if self.kind == "DxC2":
            return f"D_{self.n} x Z_2"
        return {
            "Trivial": "1",
            "C2": "Z_2",
            "S4": "S_4",
            "S4xC2": "S_4 x Z_2",
            "A5xC2": "A_5 x Z_2",
        }[self.kind]

    def to_dict(self) -> dict:
        return {"kind": self.kind} if self.n is None else {"kind": self.kind, "n": self.n}

    @classmethod
    def from_dict(cls, data: dict) -> GroupSpec:
        return cls(data["kind"], data.get("n"))


def D(n: int) -> GroupSpec:
    return GroupSpec("D", n)


def DxC2(n: int) -> GroupSpec:
    return GroupSpec("DxC2", n)


TRIVIAL = GroupSpec("Trivial")
C2 = GroupSpec("C2")
S4 = GroupSpec("S4")
S4xC2 = GroupSpec("S4xC2")
A5xC2 = GroupSpec("A5xC2")


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field for Berman counting: Q, R, Q_p or F_p."""

    kind: str
    p: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("Rationals", "Reals", "Padic", "FiniteField"):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind in ("Padic", "FiniteField"):
            if self.p is None or not is_prime(self.p):
                raise ValueError(f"{self.kind} needs a prime, got {self.p}")

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "FiniteField" else 0

    def __str__(self) -> str:
        return {
            "Rationals": "Q",
            "Reals": "R",
            "Padic": f"Q_{self.p}",
            "FiniteField": f"F_{self.p}",
        }[self.kind]


RATIONALS = FieldSpec("Rationals")
REALS = FieldSpec("Reals")


def Padic(p: int) -> FieldSpec:
    return FieldSpec("Padic", p)


def FiniteField(p: int) -> FieldSpec:
    return FieldSpec("FiniteField", p)


# -- concrete realizations ---------------------------------------------------

def _dihedral_mul(n: int) -> Callable:
    # (i, f) stands for a^i b^f, with b a b = a^-1
    def mul(x, y):
        (i, f), (j, g) = x, y
        return ((i + (j if f == 0 else -j)) % n, f ^ g)
    return mul


def _perm_mul(x, y):
    return tuple(x[k] for k in y)


def _with_sign(base_mul: Callable) -> Callable:
    def mul(x, y):
        return (base_mul(x[0], y[0]), x[1] ^ y[1])
    return mul


def _is_even(perm: tuple[int, ...]) -> bool:
    inversions = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])
    return inversions % 2 == 0


def _realize(g: GroupSpec) -> tuple[list, Callable]:
    if g.kind == "Trivial":
        return [()], lambda x, y: ()
    if g.kind == "C2":
        return [0, 1], lambda x, y: x ^ y
    if g.kind == "D":
        return [(i, f) for f in (0, 1) for i in range(g.n)], _dihedral_mul(g.n)
    if g.kind == "DxC2":
        base = [(i, f) for f in (0, 1) for i in range(g.n)]
        return [(x, c) for c in (0, 1) for x in base], _with_sign(_dihedral_mul(g.n))
    if g.kind == "S4":
        return sorted(permutations(range(4))), _perm_mul
    if g.kind == "S4xC2":
        return [(p, c) for c in (0, 1) for p in sorted(permutations(range(4)))], _with_sign(_perm_mul)
    even = [p for p in sorted(permutations(range(5))) if _is_even(p)]
    return [(p, c) for c in (0, 1) for p in even], _with_sign(_perm_mul)


def elements(g: GroupSpec) -> list[GroupElement]:
    return list(_realize(g)[0])


def multiply(g: GroupSpec, x: GroupElement, y: GroupElement) -> GroupElement:
    return _realize(g)[1](x, y)


@dataclass(frozen=True)
class CayleyData:
    """Index-based multiplication data for one realization of a group."""

    elements: tuple
    mul: np.ndarray       # mul[i, j] = index of elements[i] * elements[j]
    inv: np.ndarray
    identity: int
    orders: np.ndarray

    def power_map(self, t: int) -> np.ndarray:
        """Index array of x -> x^t, for t >= 0."""
        n = len(self.elements)
        result = np.full(n, self.identity, dtype=np.intc)
        base = np.arange(n, dtype=np.intc)
        while t:
            if t & 1:
                result = self.mul[result, base]
            base = self.mul[base, base]
            t >>= 1
        return result


def cayley(g: GroupSpec, seed: int | None = None) -> CayleyData:
    """Build the Cayley table; ``seed`` shuffles the element indexing."""
    if seed is None:
        return _cayley_cached(g)
    elems, mul = _realize(g)
    elems = list(elems)
    random.Random(seed).shuffle(elems)
    return _build_cayley(elems, mul)


@lru_cache(maxsize=None)
def _cayley_cached(g: GroupSpec) -> CayleyData:
    elems, mul = _realize(g)
    return _build_cayley(elems, mul)


def _build_cayley(elems: list, mul: Callable) -> CayleyData:
    index = {x: i for i, x in enumerate(elems)}
    n = len(elems)
    table = np.empty((n, n), dtype=np.intc)
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            table[i, j] = index[mul(x, y)]
    identity = next(i for i in range(n) if all(table[i, j] == j for j in range(n)))
    inv = np.array([int(np.flatnonzero(table[i] == identity)[0]) for i in range(n)], dtype=np.intc)
    orders = np.empty(n, dtype=np.int64)
    for i in range(n):
        k, cur = 1, i
        while cur != identity:
            cur = table[cur, i]
            k += 1
        orders[i] = k
    if len(index) != n:
        raise AssertionError("duplicate elements in realization")
    return CayleyData(tuple(elems), table, inv, identity, orders)


def conjugacy_classes(g: GroupSpec) -> list[frozenset]:
    data = cayley(g)
    seen: set[int] = set()
    classes = []
    for x in range(len(data.elements)):
        if x in seen:
            continue
        orbit = {int(data.mul[data.mul[h, x], data.inv[h]]) for h in range(len(data.elements))}
        seen |= orbit
        classes.append(frozenset(data.elements[i] for i in orbit))
    return classes


def regular_lcm(g: GroupSpec, p: int) -> int:
    """lcm of the orders of the p-regular elements (p = 0: all elements)."""
    if p and not is_prime(p):
        raise ValueError(f"{p} is neither 0 nor prime")
    m = 1
    for k in cayley(g).orders.tolist():
        if p == 0 or k % p:
            m = lcm(m, k)
    return m


def _cyclic_closure(base: int, modulus: int) -> set[int]:
    out, x = set(), 1 % modulus
    while x not in out:
        out.add(x)
        x = x * base % modulus
    return out


def galois_subgroup(f: FieldSpec, m: int) -> UnitGroup:
    """Image of Gal(F(zeta_m)/F) in (Z/m)^* as an explicit residue set."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if m == 1:
        return UnitGroup(1, frozenset({0}))
    units = [t for t in range(1, m) if gcd(t, m) == 1]
    if f.kind == "Rationals":
        chosen = set(units)
    elif f.kind == "Reals":
        chosen = {1, m - 1}
    elif f.kind == "FiniteField":
        if m % f.p == 0:
            raise ValueError(f"F_{f.p}: modulus {m} is divisible by the characteristic")
        chosen = _cyclic_closure(f.p, m)
    else:
        q = m
        while q % f.p == 0:
            q //= f.p
        allowed = _cyclic_closure(f.p, q) if q > 1 else {0}
        chosen = {t for t in units if t % q in allowed}
    return UnitGroup(m, frozenset(chosen))


def berman_count(g: GroupSpec, f: FieldSpec, seed: int | None = None) -> int:
    """Number r_F of simple FG-modules, as the number of F-conjugacy classes
    of p-regular elements (p the characteristic of F)."""
    data = cayley(g, seed)
    p = f.characteristic
    m = regular_lcm(g, p)
    gal = galois_subgroup(f, m)
    exps = sorted(gal.elements) if m > 1 else [1]
    powers = np.stack([data.power_map(t) for t in exps])
    regular = np.array([p == 0 or k % p != 0 for k in data.orders.tolist()], dtype=np.uint8)
    return count_fconj_orbits(data.mul, data.inv, powers, regular)


_CARTER_KINDS = ("D", "DxC2", "A5xC2")


def field_counts(g: GroupSpec) -> dict[str, int]:
    """All r_F entering Carter's formula, keyed by field name."""
    counts = {"Q": berman_count(g, RATIONALS)}
    for p in prime_factors(g.order):
        counts[f"Q_{p}"] = berman_count(g, Padic(p))
        counts[f"F_{p}"] = berman_count(g, FiniteField(p))
    return counts


def carter_rank(g: GroupSpec) -> int:
    """Free rank of K_{-1}(ZG) from Carter's formula
    ``1 - r_Q + sum_{p | |G|} (r_{Q_p} - r_{F_p})``.

    Only for groups whose rational group algebra has all Schur indices 1
    (dihedral, dihedral x Z_2, A_5 x Z_2), where K_{-1} is torsion-free.
    """
    if g.kind not in _CARTER_KINDS:
        raise ValueError(f"carter_rank is not supported for {g}")
    counts = field_counts(g)
    rank = 1 - counts["Q"]
    for p in prime_factors(g.order):
        rank += counts[f"Q_{p}"] - counts[f"F_{p}"]
    return rank
