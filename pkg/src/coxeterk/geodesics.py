"""Geodesics with infinite stabilizer over the 1-skeleton, and their Nil terms.

A geodesic extending an edge of label n has fixed subgroup D_n. Its orbit
class is read off from how the edge continues through its endpoint
vertices: a geodesic is reflected back at a vertex unless the vertex lets it
pass straight through to another edge with the same fixed subgroup. Classes
whose projection is a path have stabilizer D_n x D_inf (up to amalgam
variants with the same Nil term); closed loops give D_n x| Z.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx

from coxeterk.abelian import ZERO, FormalAbelianGroup
from coxeterk.assembly import homology
from coxeterk.ktables import nil
from coxeterk.polyhedron import Edge, LabeledPolyhedron, Vertex

DN_X_DINF = "DnxDinfinity"
DN_SEMI_Z = "DnSemidirectZ"


@dataclass(frozen=True)
class GeodesicClass:
    """One Gamma-orbit of geodesics with fixed subgroup D_n.

    ``support`` lists the polyhedron edges the projection runs over, as
    sorted face-name pairs. ``twist`` is "identity" for loops whose
    stabilizer is known to be a direct product.
    """

    fix_label: int
    stabilizer_kind: str
    support: tuple[tuple[str, str], ...]
    twist: str | None = field(default=None)

    @property
    def is_loop(self) -> bool:
        return self.stabilizer_kind == DN_SEMI_Z

    def describe(self) -> str:
        n = self.fix_label
        if self.is_loop:
            stab = f"D_{n} x Z" if self.twist == "identity" else f"D_{n} x| Z"
        else:
            stab = f"D_{n} x D_inf"
        edges = " ".join("{" + ",".join(p) + "}" for p in self.support)
        return f"{stab} over {edges}"

    def to_dict(self) -> dict:
        out = {
            "fix_label": self.fix_label,
            "stabilizer_kind": self.stabilizer_kind,
            "support": [list(p) for p in self.support],
        }
        if self.twist is not None:
            out["twist"] = self.twist
        return out

    @classmethod
    def from_dict(cls, data: dict) -> GeodesicClass:
        return cls(data["fix_label"], data["stabilizer_kind"],
                   tuple(tuple(p) for p in data["support"]), data.get("twist"))


def _pair(P: LabeledPolyhedron, faces: frozenset) -> tuple[str, str]:
    a, b = sorted(faces, key=P.face_index.__getitem__)
    return a, b


def _chains(P: LabeledPolyhedron, label: int, passes) -> list[tuple[list[Edge], list[Vertex]]]:
    """Group the label-``label`` edges into maximal chains.

    Two such edges are chained at a common vertex when ``passes(vertex,
    edges_there)`` holds. Returns each chain with its unchained end vertices
    (empty for a closed loop).
    """
    edges = [e for e in P.edges if e.label == label]
    g = nx.Graph()
    g.add_nodes_from(e.faces for e in edges)
    joined: dict[frozenset, set] = {e.faces: set() for e in edges}
    for v in P.vertices:
        here = [p for p in P.incident_pairs(v) if P.label(*p) == label]
        if len(here) == 2 and passes(v, here):
            a, b = here
            g.add_edge(a, b)
            joined[a].add(v.faces)
            joined[b].add(v.faces)
    by_faces = {e.faces: e for e in edges}
    out = []
    for comp in nx.connected_components(g):
        chain = sorted((by_faces[f] for f in comp), key=lambda e: sorted(P.face_index[x] for x in e.faces))
        ends = []
        for e in chain:
            for v in P.edge_vertices(e):
                if v.faces not in joined[e.faces]:
                    ends.append(v)
        out.append((chain, ends))
    out.sort(key=lambda ce: sorted(P.face_index[x] for x in ce[0][0].faces))
    return out


def _d2_passes(P: LabeledPolyhedron):
    def passes(v: Vertex, here: list) -> bool:
        # a G_2-vertex of degree 2 on a triangle link joins its edges when the
        # third edge has odd label; degree 3 and 4 always split
        if len(v.faces) != 3:
            return False
        third = [p for p in P.incident_pairs(v) if p not in here]
        return len(third) == 1 and P.label(*third[0]) % 2 == 1
    return passes


def d2_classes(P: LabeledPolyhedron) -> list[GeodesicClass]:
    """Classes of geodesics with fixed subgroup D_2.

    Label-2 edges are chained through degree-2 vertices whose third edge is
    odd. Chains ending at an ideal vertex (in particular at a square cusp)
    carry no geodesic with cocompact stabilizer and are dropped.
    """
    out = []
    for chain, ends in _chains(P, 2, _d2_passes(P)):
        support = tuple(_pair(P, e.faces) for e in chain)
        if not ends:
            out.append(GeodesicClass(2, DN_SEMI_Z, support, "identity"))
        elif not any(v.vclass.is_ideal for v in ends):
            out.append(GeodesicClass(2, DN_X_DINF, support))
    return out


def d2_components(P: LabeledPolyhedron) -> int:
    return len(d2_classes(P))


def dn_classes(P: LabeledPolyhedron, n: int) -> list[GeodesicClass]:
    """Classes with fixed subgroup D_n for n >= 3."""
    if n < 3:
        raise ValueError(f"dn_classes needs n >= 3, got {n}")
    if n == 3:
        def passes(v: Vertex, here: list) -> bool:
            return v.vclass.group is not None and v.vclass.group.kind == "S4"
    else:
        def passes(v: Vertex, here: list) -> bool:
            return False
    out = []
    for chain, ends in _chains(P, n, passes):
        support = tuple(_pair(P, e.faces) for e in chain)
        if not ends:
            out.append(GeodesicClass(n, DN_SEMI_Z, support))
        elif not any(v.vclass.is_ideal for v in ends):
            out.append(GeodesicClass(n, DN_X_DINF, support))
    return out


def all_classes(P: LabeledPolyhedron) -> list[GeodesicClass]:
    labels = sorted({e.label for e in P.edges if e.label >= 3})
    out = d2_classes(P)
    for n in labels:
        out += dn_classes(P, n)
    return out


def class_nil(c: GeodesicClass, q: int) -> FormalAbelianGroup:
    """Cokernel of the relative assembly map for one class, degree q."""
    if q <= -1:
        return ZERO
    if c.fix_label == 2:
        return nil(q, 2)
    if c.is_loop:
        # Farrell Nil of D_3 x| Z vanishes in degrees <= 1
        return ZERO
    return nil(q, c.fix_label)


def nil_terms(P: LabeledPolyhedron, q: int) -> FormalAbelianGroup:
    if q not in (1, 0) and q > -1:
        raise ValueError(f"nil terms are defined for q <= 1, got {q}")
    total = ZERO
    for c in all_classes(P):
        total = total + class_nil(c, q)
    return total


def nil_expression(P: LabeledPolyhedron, q: int) -> list[tuple[int, str, FormalAbelianGroup]]:
    """The Nil summands before evaluation: (count, name, value) per fixed label,
    omitting labels whose Nil groups vanish."""
    counts: dict[int, int] = {}
    for c in all_classes(P):
        if class_nil(c, q).is_zero():
            continue
        counts[c.fix_label] = counts.get(c.fix_label, 0) + 1
    return [(k, f"NK_{q}(Z[D_{n}])", nil(q, n)) for n, k in sorted(counts.items())]


def total_k(P: LabeledPolyhedron, degree: int) -> FormalAbelianGroup:
    """Wh (degree 1), K~_0 (degree 0), K_{-1}, and 0 below -1."""
    if degree <= -2:
        return ZERO
    if degree > 1:
        raise ValueError(f"only degrees <= 1 are computed, got {degree}")
    h = homology(P)
    if degree == -1:
        return h.hm1
    return h.degree(degree) + nil_terms(P, degree)
