"""Pure-Python twin of the compiled orbit kernel (same algorithm, same result)."""

from __future__ import annotations

from typing import Sequence


def count_fconj_orbits(
    mul: Sequence[Sequence[int]],
    inv: Sequence[int],
    powers: Sequence[Sequence[int]],
    regular: Sequence[int],
) -> int:
    """Count orbits of the regular elements under x -> g x^t g^-1.

    ``mul`` is the Cayley table, ``inv`` the inverse map, ``powers[j]`` the
    map x -> x^t for the j-th exponent t, and ``regular`` a 0/1 mask.
    """
    n = len(mul)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        a, b = find(a), find(b)
        if a < b:
            parent[b] = a
        elif b < a:
            parent[a] = b

    for x in range(n):
        if not regular[x]:
            continue
        for g in range(n):
            union(x, mul[mul[g][x]][inv[g]])
    for x in range(n):
        if not regular[x]:
            continue
        for row in powers:
            union(x, row[x])
    return sum(1 for x in range(n) if regular[x] and find(x) == x)
