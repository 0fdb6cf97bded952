"""Formal abelian groups: free part, prime-power torsion with finite or
countably infinite multiplicity, and named symbolic summands for values no
closed form resolves (Nil groups, class-group quotients)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from coxeterk.numtheory import prime_factors


class _Omega:
    """Countably infinite multiplicity. Absorbing under addition."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "OMEGA"

    def __reduce__(self):
        return (_Omega, ())


OMEGA = _Omega()
Multiplicity = Union[int, _Omega]


def add_mult(a: Multiplicity, b: Multiplicity) -> Multiplicity:
    if a is OMEGA or b is OMEGA:
        return OMEGA
    return a + b


def scale_mult(k: int, a: Multiplicity) -> Multiplicity:
    if k == 0:
        return 0
    return OMEGA if a is OMEGA else k * a


# -- symbolic summands -------------------------------------------------------

@dataclass(frozen=True)
class NilK:
    """Bass Nil group NK_q(Z[D_n]) whose value is not known in closed form."""

    q: int
    n: int
    note: str = field(default="", compare=False)

    def render(self) -> str:
        return f"NK_{self.q}(Z[D_{self.n}])"

    def sort_key(self) -> tuple:
        return (0, self.q, self.n, "")


@dataclass(frozen=True)
class QuotientK0:
    """The cokernel 2*K~_0(Z[D_n x Z_2]) / K~_0(Z[D_n]) of a large edge."""

    n: int

    def render(self) -> str:
        return f"2*K~_0(Z[D_{self.n} x Z_2])/K~_0(Z[D_{self.n}])"

    def sort_key(self) -> tuple:
        return (1, 0, self.n, "")


@dataclass(frozen=True)
class UnknownClassGroup:
    """A reduced projective class group with no known closed form."""

    descriptor: str

    def render(self) -> str:
        return f"{{{self.descriptor}}}"

    def sort_key(self) -> tuple:
        return (2, 0, 0, self.descriptor)


SymbolicSummand = Union[NilK, QuotientK0, UnknownClassGroup]


def symbol_to_dict(sym: SymbolicSummand) -> dict:
    if isinstance(sym, NilK):
        out = {"type": "NilK", "q": sym.q, "n": sym.n}
        if sym.note:
            out["note"] = sym.note
        return out
    if isinstance(sym, QuotientK0):
        return {"type": "QuotientK0", "n": sym.n}
    return {"type": "UnknownClassGroup", "descriptor": sym.descriptor}


def symbol_from_dict(data: dict) -> SymbolicSummand:
    kind = data["type"]
    if kind == "NilK":
        return NilK(data["q"], data["n"], data.get("note", ""))
    if kind == "QuotientK0":
        return QuotientK0(data["n"])
    if kind == "UnknownClassGroup":
        return UnknownClassGroup(data["descriptor"])
    raise ValueError(f"unknown symbol type {kind!r}")


# -- the group type ----------------------------------------------------------

def _prime_power_split(q: int) -> list[int]:
    """Z/q as a sum of cyclic groups of prime-power order."""
    out = []
    for p in prime_factors(q):
        pk = 1
        while q % p == 0:
            q //= p
            pk *= p
        out.append(pk)
    return out


class FormalAbelianGroup:
    """Z^r (+) sum (Z/q)^{m_q} (+) symbolic summands, kept in normal form.

    Torsion orders are prime powers; multiplicities are positive ints or
    ``OMEGA``. Two values are equal iff their normal forms coincide.
    """

    __slots__ = ("free_rank", "torsion", "symbols")

    def __init__(self, free_rank: int = 0, torsion=None, symbols=None):
        if free_rank < 0:
            raise ValueError(f"negative free rank {free_rank}")
        tors: dict[int, Multiplicity] = {}
        for q, m in dict(torsion or {}).items():
            if q < 2:
                raise ValueError(f"torsion order must be >= 2, got {q}")
            if m is not OMEGA and m < 0:
                raise ValueError(f"negative multiplicity for Z/{q}")
            for pk in _prime_power_split(q):
                tors[pk] = add_mult(tors.get(pk, 0), m)
        syms: dict[SymbolicSummand, int] = {}
        for s, m in dict(symbols or {}).items():
            if m < 0:
                raise ValueError(f"negative multiplicity for {s}")
            syms[s] = syms.get(s, 0) + m
        self.free_rank = free_rank
        self.torsion = {q: m for q, m in sorted(tors.items()) if m is OMEGA or m > 0}
        self.symbols = {
            s: m for s, m in sorted(syms.items(), key=lambda kv: kv[0].sort_key()) if m > 0
        }

    # constructors
    @classmethod
    def zero(cls) -> FormalAbelianGroup:
        return cls()

    @classmethod
    def free(cls, rank: int) -> FormalAbelianGroup:
        return cls(rank)

    @classmethod
    def cyclic(cls, q: int, mult: Multiplicity = 1) -> FormalAbelianGroup:
        return cls(0, {q: mult})

    @classmethod
    def symbol(cls, sym: SymbolicSummand, mult: int = 1) -> FormalAbelianGroup:
        return cls(0, None, {sym: mult})

    # algebra
    def __add__(self, other: FormalAbelianGroup) -> FormalAbelianGroup:
        if not isinstance(other, FormalAbelianGroup):
            return NotImplemented
        tors = dict(self.torsion)
        for q, m in other.torsion.items():
            tors[q] = add_mult(tors.get(q, 0), m)
        syms = dict(self.symbols)
        for s, m in other.symbols.items():
            syms[s] = syms.get(s, 0) + m
        return FormalAbelianGroup(self.free_rank + other.free_rank, tors, syms)

    def __radd__(self, other):
        if other == 0:
            return self
        return NotImplemented

    def __rmul__(self, k: int) -> FormalAbelianGroup:
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        return FormalAbelianGroup(
            k * self.free_rank,
            {q: scale_mult(k, m) for q, m in self.torsion.items()},
            {s: k * m for s, m in self.symbols.items()},
        )

    def _key(self) -> tuple:
        return (
            self.free_rank,
            tuple((q, "w" if m is OMEGA else m) for q, m in self.torsion.items()),
            tuple((s.sort_key(), m) for s, m in self.symbols.items()),
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, FormalAbelianGroup):
            return self._key() == other._key()
        if other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._key())

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion and not self.symbols

    def is_torsion_free(self) -> bool:
        return not self.torsion

    def torsion_part(self) -> FormalAbelianGroup:
        return FormalAbelianGroup(0, self.torsion)

    def render(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        for q, m in self.torsion.items():
            if m is OMEGA:
                parts.append(f"(Z/{q})^(inf)")
            elif m == 1:
                parts.append(f"Z/{q}")
            else:
                parts.append(f"(Z/{q})^{m}")
        for s, m in self.symbols.items():
            parts.append(s.render() if m == 1 else f"{m}*{s.render()}")
        return " (+) ".join(parts) if parts else "0"

    __str__ = render

    def __repr__(self) -> str:
        return f"FormalAbelianGroup({self.render()!r})"

    def to_dict(self) -> dict:
        return {
            "free_rank": self.free_rank,
            "torsion": [[q, "inf" if m is OMEGA else m] for q, m in self.torsion.items()],
            "symbols": [[symbol_to_dict(s), m] for s, m in self.symbols.items()],
        }

    @classmethod
    def from_dict(cls, data: dict) -> FormalAbelianGroup:
        return cls(
            data["free_rank"],
            {q: OMEGA if m == "inf" else m for q, m in data["torsion"]},
            {symbol_from_dict(s): m for s, m in data["symbols"]},
        )


ZERO = FormalAbelianGroup()
