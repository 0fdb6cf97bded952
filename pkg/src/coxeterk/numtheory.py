"""Exact integer helpers: divisor counts, p-parts, unit groups mod d and the
sigma/tau sums that feed the dihedral K_{-1} rank formulas.

Everything here is integer-only; there is no floating point in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

#: Largest modulus accepted by the breadth-first subgroup closure.
MAX_MODULUS = 10**6


@dataclass(frozen=True)
class UnitGroup:
    """A subgroup of (Z/d)^*, stored as an explicit set of residues.

    ``Z/1`` is treated as the trivial group ``{0}`` so that index
    computations at ``d = 1`` come out as 1.
    """

    modulus: int
    elements: frozenset[int]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, t: int) -> bool:
        return t % self.modulus in self.elements


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``n``, ascending."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def delta(n: int) -> int:
    """Number of positive divisors of ``n``."""
    return len(divisors(n))


def epsilon(n: int) -> int:
    """Number of conjugacy classes of reflections in D_n: 1 for odd n, 2 for even n."""
    if n < 2:
        raise ValueError(f"epsilon is defined for n >= 2, got {n}")
    return 2 if n % 2 == 0 else 1


def nu_mu(p: int, n: int) -> tuple[int, int]:
    """Split ``n = p**nu * mu`` with ``p`` not dividing ``mu``."""
    _require_prime(p)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    nu = 0
    while n % p == 0:
        n //= p
        nu += 1
    return nu, n


def phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    result = n
    for p in prime_factors(n):
        result -= result // p
    return result


def unit_group(d: int) -> UnitGroup:
    if d < 1:
        raise ValueError(f"modulus must be positive, got {d}")
    if d == 1:
        return UnitGroup(1, frozenset({0}))
    return UnitGroup(d, frozenset(t for t in range(1, d) if gcd(t, d) == 1))


def generated_subgroup(d: int, gens: Iterable[int]) -> UnitGroup:
    """Multiplicative closure of ``gens`` in (Z/d)^*, by breadth-first search."""
    if d < 1:
        raise ValueError(f"modulus must be positive, got {d}")
    if d > MAX_MODULUS:
        raise ValueError(f"modulus {d} exceeds MAX_MODULUS={MAX_MODULUS}")
    if d == 1:
        return UnitGroup(1, frozenset({0}))
    residues = set()
    for g in gens:
        r = g % d
        if gcd(r, d) != 1:
            raise ValueError(f"generator {g} is not coprime to {d}")
        residues.add(r)
    seen = {1}
    frontier = [1]
    while frontier:
        nxt = []
        for x in frontier:
            for g in residues:
                y = x * g % d
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return UnitGroup(d, frozenset(seen))


def subgroup_index(d: int, gens: Iterable[int]) -> int:
    """Index in (Z/d)^* of the subgroup generated by ``gens``."""
    sub = generated_subgroup(d, gens)
    if d == 1:
        return 1
    return phi(d) // sub.order


def sigma_p(p: int, n: int) -> int:
    """Sum over divisors d of the p-free part of n of [(Z/d)^* : <-1, p>]."""
    _, mu = nu_mu(p, n)
    return sum(subgroup_index(d, (-1, p)) for d in divisors(mu))


def tau(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return sum(nu_mu(p, n)[0] * sigma_p(p, n) for p in prime_factors(n)) if n > 1 else 0


def is_prime_power(n: int) -> bool:
    return n > 1 and len(prime_factors(n)) == 1
