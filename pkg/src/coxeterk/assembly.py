"""Equivariant homology H_q(E_fin; Wh_q) of a reflection group, q in {1, 0, -1}.

The two-column chain complex of the truncated polyhedron has one term per
cell: 0-cells are the spherical vertices (stabilizer Gamma_v) and, for every
edge ending at an ideal vertex, a truncation vertex with the edge's dihedral
stabilizer; 1-cells are the edges. The edge-to-vertex maps are split
injective on Wh_q, so the homology is concentrated in the 0-column and is
the cokernel, which is what :func:`homology` assembles cell by cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from coxeterk.abelian import ZERO, FormalAbelianGroup, QuotientK0
from coxeterk.groups import D, DxC2, GroupSpec
from coxeterk.ktables import k0, wh_rank
from coxeterk import ktables
from coxeterk.numtheory import delta, epsilon, sigma_p, tau
from coxeterk.polyhedron import CellCensus, LabeledPolyhedron, census

#: Edge labels from which the K~_0 contribution is the quotient symbol.
LARGE_LABEL = 7


@dataclass(frozen=True)
class HomologyTriple:
    h1: FormalAbelianGroup
    h0: FormalAbelianGroup
    hm1: FormalAbelianGroup

    def degree(self, q: int) -> FormalAbelianGroup:
        return {1: self.h1, 0: self.h0, -1: self.hm1}[q]

    def to_dict(self) -> dict:
        return {"h1": self.h1.to_dict(), "h0": self.h0.to_dict(), "hm1": self.hm1.to_dict()}

    @classmethod
    def from_dict(cls, data: dict) -> HomologyTriple:
        return cls(*(FormalAbelianGroup.from_dict(data[k]) for k in ("h1", "h0", "hm1")))


@dataclass(frozen=True)
class CellTerm:
    """One summand of the chain complex: sign +1 for 0-cells, -1 for 1-cells."""

    cell: str
    group: GroupSpec
    sign: int


def cells(P: LabeledPolyhedron) -> list[CellTerm]:
    """Every cell of the truncated polyhedron with a stabilizer that can carry
    nonzero lower K-theory (faces and truncation edges have stabilizer Z_2 or 1)."""
    out = []
    for v in P.vertices:
        if not v.vclass.is_ideal:
            out.append(CellTerm(P.vertex_name(v), v.vclass.group, +1))
    for e in P.edges:
        out.append(CellTerm(P.edge_name(e), D(e.label), -1))
        for v in P.edge_vertices(e):
            if v.vclass.is_ideal:
                out.append(CellTerm(f"{P.edge_name(e)}@{P.vertex_name(v)}", D(e.label), +1))
    return out


def _rank(q: int, g: GroupSpec) -> int:
    return wh_rank(g) if q == 1 else ktables.k_minus1_rank(g)


def free_degree_rank(P: LabeledPolyhedron, q: int) -> int:
    """Rank of H_q for q = 1 or -1: alternating sum of the cell ranks."""
    if q not in (1, -1):
        raise ValueError(f"free ranks are computed for q = 1, -1, not {q}")
    total = sum(t.sign * _rank(q, t.group) for t in cells(P))
    if total < 0:
        raise AssertionError(f"negative rank {total} for H_{q}")
    return total


def quotient_k0(n: int) -> FormalAbelianGroup:
    """Contribution 2*K~_0(Z[D_n x Z_2]) / K~_0(Z D_n) of one large edge."""
    if k0(DxC2(n)).is_zero() and k0(D(n)).is_zero():
        return ZERO
    return FormalAbelianGroup.symbol(QuotientK0(n))


def h0(P: LabeledPolyhedron) -> FormalAbelianGroup:
    """H_0 with coefficients in K~_0.

    Vertices whose link has all labels <= 6 contribute their K~_0 directly
    (edge groups D_n, n <= 6, have K~_0 = 0). A vertex D_n x Z_2 with n >= 7
    is folded into the quotient term of its unique label-n edge.
    """
    total = ZERO
    for v in P.vertices:
        g = v.vclass.group
        if g is None or (g.kind == "DxC2" and g.n >= LARGE_LABEL):
            continue
        total = total + k0(g)
    for e in P.edges:
        if e.label >= LARGE_LABEL:
            total = total + quotient_k0(e.label)
    return total


def homology(P: LabeledPolyhedron) -> HomologyTriple:
    return HomologyTriple(
        FormalAbelianGroup.free(free_degree_rank(P, 1)),
        h0(P),
        FormalAbelianGroup.free(free_degree_rank(P, -1)),
    )


def closed_form_homology(c: CellCensus) -> HomologyTriple:
    """The census formulas, valid when every spherical vertex has at most one
    incident edge of label >= 4 (always true for triangle links)."""
    cyc = FormalAbelianGroup.cyclic
    large = {n: m for n, m in c.E.items() if n >= LARGE_LABEL}
    h1 = 3 * c.e(5)
    hm1 = 2 * c.r + c.s + c.t + c.v + 2 * c.e(5) + c.e(6)
    q0 = ZERO
    for n, m in large.items():
        h1 += m * (2 * wh_rank(DxC2(n)) - wh_rank(D(n)))
        hm1 += m * (2 * ktables.k_minus1_rank(DxC2(n)) - ktables.k_minus1_rank(D(n)))
        q0 = q0 + m * quotient_k0(n)
    torsion = cyc(2, 2 * c.r + c.s + c.w) + cyc(4, 2 * c.e(4) - 2 * c.u)
    return HomologyTriple(FormalAbelianGroup.free(h1), torsion + q0, FormalAbelianGroup.free(hm1))


def wh_rational_rank(P: LabeledPolyhedron) -> int:
    """Rank of Wh(Gamma_P) (x) Q: (3/2) * sum_n E_n (n + eps(n) - 2 delta(n))."""
    value = Fraction(3, 2) * sum(
        m * (n + epsilon(n) - 2 * delta(n)) for n, m in census(P).E.items()
    )
    if value.denominator != 1 or value < 0:
        raise AssertionError(f"rationalized Whitehead rank {value} is not a non-negative integer")
    return int(value)


def k_minus1_rank(P: LabeledPolyhedron) -> int:
    """Rank of K_{-1}(Z Gamma_P) from the census expression."""
    c = census(P)
    rank = 2 * c.r + c.s + c.t + c.v + 2 * c.e(5) + c.e(6)
    for n, m in c.E.items():
        if n >= LARGE_LABEL:
            rank += m * (1 - 3 * delta(n) + 3 * tau(n) + 2 * sigma_p(2, n))
    return rank
