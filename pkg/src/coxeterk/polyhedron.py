"""Labeled polyhedra and the Coxeter-matrix decision pipeline.

A reflection group is given either by its Coxeter matrix or by a labeled
polyhedron (faces, edges with dihedral-angle labels, vertices). From a matrix
the polyhedron is recovered by dualizing the unique planar embedding of the
graph of finite labels: embedding faces become polyhedron vertices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Union

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from coxeterk.groups import A5xC2, DxC2, GroupSpec, S4, S4xC2


# -- errors ------------------------------------------------------------------

class PolyhedronError(ValueError):
    """A document or polyhedron violating a structural condition."""

    code = "PolyhedronError"

    def __str__(self) -> str:
        return f"{self.code}: {super().__str__()}"


class ParseError(PolyhedronError):
    code = "ParseError"


class NotPlanar(PolyhedronError):
    code = "NotPlanar"


class Not3Connected(PolyhedronError):
    code = "Not3Connected"


class BadFace(PolyhedronError):
    code = "BadFace"


class BadLink(PolyhedronError):
    code = "BadLink"


class HyperbolicLink(BadLink):
    code = "HyperbolicLink"


class InvalidPolyhedron(PolyhedronError):
    code = "InvalidPolyhedron"


# -- labels ------------------------------------------------------------------

class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


#: Label of a pair of faces that do not meet.
INF = _Infinity()
Label = Union[int, _Infinity]


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric labels on generator pairs, 0-based; absent pairs are INF."""

    size: int
    labels: dict = field(default_factory=dict)  # {(i, j): m} with i < j, m finite

    def __post_init__(self) -> None:
        if self.size < 4:
            raise ParseError(f"a polyhedron needs at least 4 faces, got size {self.size}")
        for (i, j), m in self.labels.items():
            if not (0 <= i < j < self.size):
                raise ParseError(f"bad generator pair ({i}, {j})")
            if not isinstance(m, int) or m < 2:
                raise ParseError(f"label {m!r} on ({i}, {j}) is not an integer >= 2")

    def label(self, i: int, j: int) -> Label:
        if i == j:
            return 1
        return self.labels.get((min(i, j), max(i, j)), INF)

    def finite_pairs(self) -> list[tuple[int, int, int]]:
        return [(i, j, m) for (i, j), m in sorted(self.labels.items())]

    def to_document(self) -> dict:
        return {
            "format": "coxeter-matrix",
            "size": self.size,
            "labels": [[i + 1, j + 1, m] for i, j, m in self.finite_pairs()],
        }


# -- vertex links -------------------------------------------------------------

SQUARE = (2, 2, 2, 2)

_IDEAL_TRIANGLES = {(2, 4, 4): "P4m", (2, 3, 6): "P6m", (3, 3, 3): "P3m"}


@dataclass(frozen=True)
class VertexClass:
    """Spherical (finite stabilizer ``group``) or Ideal (cusp ``ideal_kind``)."""

    kind: str
    group: GroupSpec | None = None
    ideal_kind: str | None = None

    @property
    def is_ideal(self) -> bool:
        return self.kind == "Ideal"

    def __str__(self) -> str:
        return f"Spherical({self.group})" if self.group else f"Ideal({self.ideal_kind})"

    def to_dict(self) -> dict:
        if self.group is not None:
            return {"kind": self.kind, "group": self.group.to_dict()}
        return {"kind": self.kind, "ideal": self.ideal_kind}


def classify_vertex(labels: Iterable[int]) -> VertexClass:
    """Classify a vertex from the labels of the edges meeting there.

    Three labels give a triangle link, spherical when the reciprocal sum
    exceeds 1 and Euclidean (ideal vertex) when it equals 1. The only
    four-label link accepted is the square ``(2, 2, 2, 2)``.
    """
    ls = tuple(sorted(labels))
    if any(not isinstance(m, int) or m < 2 for m in ls):
        raise BadLink(f"vertex labels must be integers >= 2, got {ls}")
    if len(ls) == 4:
        if ls != SQUARE:
            raise BadLink(f"four-valent vertex must have labels (2, 2, 2, 2), got {ls}")
        return VertexClass("Ideal", ideal_kind="Square")
    if len(ls) != 3:
        raise BadLink(f"a vertex link has 3 or 4 sides, got {len(ls)}")
    total = sum(Fraction(1, m) for m in ls)
    if total < 1:
        raise HyperbolicLink(f"labels {ls} have reciprocal sum {total} < 1")
    if total == 1:
        return VertexClass("Ideal", ideal_kind=_IDEAL_TRIANGLES[ls])
    a, b, c = ls
    if (a, b) == (2, 2):
        return VertexClass("Spherical", DxC2(c))
    return VertexClass("Spherical", {(2, 3, 3): S4, (2, 3, 4): S4xC2, (2, 3, 5): A5xC2}[ls])


# -- polyhedra ---------------------------------------------------------------

@dataclass(frozen=True)
class Edge:
    faces: frozenset
    label: int

    def sorted_faces(self, order: dict[str, int]) -> tuple[str, str]:
        a, b = sorted(self.faces, key=order.__getitem__)
        return a, b


@dataclass(frozen=True)
class Vertex:
    faces: frozenset
    vclass: VertexClass


class LabeledPolyhedron:
    """Faces, labeled edges (face pairs) and classified vertices.

    The constructor checks the combinatorial invariants: every edge lies in
    exactly two vertices, the faces at a vertex are pairwise adjacent (the
    diagonals of a square cusp are non-adjacent), and V - E + F = 2.
    """

    def __init__(self, faces: Iterable[str], edges: Iterable[tuple[Iterable[str], int]],
                 vertices: Iterable[Iterable[str]]):
        self.faces: tuple[str, ...] = tuple(faces)
        self.face_index = {f: i for i, f in enumerate(self.faces)}
        if len(self.face_index) != len(self.faces):
            raise InvalidPolyhedron("duplicate face names")
        if len(self.faces) < 4:
            raise InvalidPolyhedron("a polyhedron needs at least 4 faces")

        self._labels: dict[frozenset, int] = {}
        for pair, m in edges:
            key = frozenset(pair)
            if len(key) != 2 or not key <= self.face_index.keys():
                raise InvalidPolyhedron(f"edge {sorted(pair)} does not join two known faces")
            if not isinstance(m, int) or m < 2:
                raise InvalidPolyhedron(f"edge {sorted(key)} has label {m!r}, need an integer >= 2")
            if key in self._labels:
                raise InvalidPolyhedron(f"edge {sorted(key)} listed twice")
            self._labels[key] = m
        self.edges: tuple[Edge, ...] = tuple(
            sorted((Edge(k, m) for k, m in self._labels.items()), key=self._edge_key)
        )

        built = []
        seen = set()
        for vfaces in vertices:
            key = frozenset(vfaces)
            if key in seen:
                raise InvalidPolyhedron(f"vertex {sorted(key)} listed twice")
            seen.add(key)
            built.append(Vertex(key, self._classify(key)))
        self.vertices: tuple[Vertex, ...] = tuple(sorted(built, key=self._vertex_key))

        self._edge_vertices: dict[frozenset, list[Vertex]] = {e.faces: [] for e in self.edges}
        for v in self.vertices:
            for pair in self.incident_pairs(v):
                self._edge_vertices[pair].append(v)
        for e in self.edges:
            if len(self._edge_vertices[e.faces]) != 2:
                raise InvalidPolyhedron(
                    f"edge {self.edge_name(e)} lies in {len(self._edge_vertices[e.faces])} vertices, expected 2"
                )
        chi = len(self.vertices) - len(self.edges) + len(self.faces)
        if chi != 2:
            raise InvalidPolyhedron(f"Euler characteristic V - E + F = {chi}, expected 2")

    # ordering helpers
    def _edge_key(self, e: Edge) -> tuple:
        return tuple(sorted(self.face_index[f] for f in e.faces))

    def _vertex_key(self, v: Vertex) -> tuple:
        return tuple(sorted(self.face_index[f] for f in v.faces))

    def _classify(self, faces: frozenset) -> VertexClass:
        if len(faces) not in (3, 4):
            raise InvalidPolyhedron(f"vertex {sorted(faces)} must have 3 or 4 faces")
        if not faces <= self.face_index.keys():
            raise InvalidPolyhedron(f"vertex {sorted(faces)} names an unknown face")
        pairs = [frozenset(p) for p in combinations(faces, 2)]
        present = [p for p in pairs if p in self._labels]
        if len(faces) == 3:
            if len(present) != 3:
                raise InvalidPolyhedron(f"faces of vertex {sorted(faces)} are not pairwise adjacent")
            return classify_vertex(self._labels[p] for p in present)
        if len(present) != 4 or not _is_four_cycle(present):
            raise InvalidPolyhedron(
                f"four-valent vertex {sorted(faces)} must have its faces in a 4-cycle with non-adjacent diagonals"
            )
        return classify_vertex(self._labels[p] for p in present)

    # queries
    def label(self, a: str, b: str) -> Label:
        return self._labels.get(frozenset((a, b)), INF)

    def incident_pairs(self, v: Vertex) -> list[frozenset]:
        """The polyhedron edges ending at ``v``."""
        pairs = [frozenset(p) for p in combinations(v.faces, 2)]
        return sorted((p for p in pairs if p in self._labels),
                      key=lambda p: sorted(self.face_index[f] for f in p))

    def edge_vertices(self, e: Edge | frozenset) -> tuple[Vertex, Vertex]:
        faces = e.faces if isinstance(e, Edge) else e
        a, b = self._edge_vertices[faces]
        return a, b

    def edge(self, a: str, b: str) -> Edge:
        key = frozenset((a, b))
        return Edge(key, self._labels[key])

    def edge_name(self, e: Edge) -> str:
        return "{" + ",".join(e.sorted_faces(self.face_index)) + "}"

    def vertex_name(self, v: Vertex) -> str:
        return "{" + ",".join(sorted(v.faces, key=self.face_index.__getitem__)) + "}"

    def face_graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.faces)
        for e in self.edges:
            a, b = tuple(e.faces)
            g.add_edge(a, b, label=e.label)
        return g

    def to_document(self) -> dict:
        order = self.face_index
        return {
            "format": "polyhedron",
            "faces": list(self.faces),
            "edges": [{"faces": list(e.sorted_faces(order)), "m": e.label} for e in self.edges],
            "vertices": [sorted(v.faces, key=order.__getitem__) for v in self.vertices],
        }

    def relabeled(self, mapping: dict[str, str]) -> LabeledPolyhedron:
        """Copy with faces renamed; face order follows the sorted new names."""
        return LabeledPolyhedron(
            sorted(mapping[f] for f in self.faces),
            [([mapping[f] for f in e.faces], e.label) for e in self.edges],
            [[mapping[f] for f in v.faces] for v in self.vertices],
        )

    def __repr__(self) -> str:
        return f"LabeledPolyhedron(F={len(self.faces)}, E={len(self.edges)}, V={len(self.vertices)})"


def _is_four_cycle(pairs: list[frozenset]) -> bool:
    g = nx.Graph([tuple(p) for p in pairs])
    return g.number_of_nodes() == 4 and all(d == 2 for _, d in g.degree()) and nx.is_connected(g)


def dumps(doc: dict) -> str:
    """Canonical text form of a document: fixed key order, one item per line."""
    if doc["format"] == "coxeter-matrix":
        rows = ",\n    ".join(json.dumps(r) for r in doc["labels"])
        return (
            '{\n  "format": "coxeter-matrix",\n'
            f'  "size": {doc["size"]},\n'
            f'  "labels": [\n    {rows}\n  ]\n}}\n'
        )
    edges = ",\n    ".join(json.dumps(e) for e in doc["edges"])
    verts = ",\n    ".join(json.dumps(v) for v in doc["vertices"])
    return (
        '{\n  "format": "polyhedron",\n'
        f'  "faces": {json.dumps(doc["faces"])},\n'
        f'  "edges": [\n    {edges}\n  ],\n'
        f'  "vertices": [\n    {verts}\n  ]\n}}\n'
    )


# -- parsing -----------------------------------------------------------------

def _expect(cond: bool, path: str, msg: str) -> None:
    if not cond:
        raise ParseError(f"at {path}: {msg}")


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_input(text: str) -> CoxeterMatrix | LabeledPolyhedron:
    """Parse a JSON input document.

    Schema errors raise :class:`ParseError` with the JSON position or path;
    structurally invalid polyhedra raise the matching PolyhedronError.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    _expect(isinstance(doc, dict), "$", "document must be an object")
    fmt = doc.get("format")
    if fmt == "coxeter-matrix":
        return _parse_matrix(doc)
    if fmt == "polyhedron":
        return _parse_polyhedron(doc)
    raise ParseError(f"at $.format: expected 'coxeter-matrix' or 'polyhedron', got {fmt!r}")


def _parse_matrix(doc: dict) -> CoxeterMatrix:
    size = doc.get("size")
    _expect(_is_int(size) and size >= 4, "$.size", f"expected an integer >= 4, got {size!r}")
    rows = doc.get("labels")
    _expect(isinstance(rows, list), "$.labels", "expected a list of [i, j, m] triples")
    labels: dict[tuple[int, int], int] = {}
    explicit_inf: set[tuple[int, int]] = set()
    for k, row in enumerate(rows):
        path = f"$.labels[{k}]"
        _expect(isinstance(row, list) and len(row) == 3 and all(_is_int(x) for x in row),
                path, "expected [i, j, m] with integer entries")
        i, j, m = row
        _expect(1 <= i <= size and 1 <= j <= size, path, f"index out of range 1..{size}")
        _expect(i != j, path, "diagonal entries are implicitly 1 and may not be listed")
        _expect(m == 0 or m >= 2, path, f"label {m} is invalid: use an integer >= 2 or 0 for infinity")
        key = (min(i, j) - 1, max(i, j) - 1)
        prior = labels.get(key, INF if key in explicit_inf else None)
        value = INF if m == 0 else m
        _expect(prior is None or prior == value, path,
                f"asymmetric labels for pair ({key[0] + 1}, {key[1] + 1}): {prior} vs {value}")
        if m == 0:
            explicit_inf.add(key)
        else:
            labels[key] = m
    return CoxeterMatrix(size, labels)


def _parse_polyhedron(doc: dict) -> LabeledPolyhedron:
    faces = doc.get("faces")
    _expect(isinstance(faces, list) and faces, "$.faces", "expected a non-empty list of face names")
    names = []
    for k, f in enumerate(faces):
        _expect(isinstance(f, str) or _is_int(f), f"$.faces[{k}]", "face names are strings or integers")
        names.append(str(f))
    _expect(len(set(names)) == len(names), "$.faces", "duplicate face names")
    known = set(names)
    edges_in = doc.get("edges")
    _expect(isinstance(edges_in, list), "$.edges", "expected a list")
    edges = []
    for k, e in enumerate(edges_in):
        path = f"$.edges[{k}]"
        _expect(isinstance(e, dict), path, "expected an object with 'faces' and 'm'")
        pair, m = e.get("faces"), e.get("m")
        _expect(isinstance(pair, list) and len(pair) == 2, f"{path}.faces", "expected two face names")
        pair = [str(x) for x in pair]
        _expect(set(pair) <= known and pair[0] != pair[1], f"{path}.faces", f"unknown or repeated face in {pair}")
        _expect(_is_int(m) and m >= 2, f"{path}.m", f"edge label must be an integer >= 2, got {m!r}")
        edges.append((pair, m))
    verts_in = doc.get("vertices")
    _expect(isinstance(verts_in, list), "$.vertices", "expected a list of face lists")
    verts = []
    for k, v in enumerate(verts_in):
        path = f"$.vertices[{k}]"
        _expect(isinstance(v, list) and len(v) in (3, 4), path, "a vertex lists 3 or 4 faces")
        v = [str(x) for x in v]
        _expect(set(v) <= known and len(set(v)) == len(v), path, f"unknown or repeated face in {v}")
        verts.append(v)
    return LabeledPolyhedron(names, edges, verts)


# -- the decision pipeline ----------------------------------------------------

def finite_label_graph(M: CoxeterMatrix) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(M.size))
    for i, j, m in M.finite_pairs():
        g.add_edge(i, j, label=m)
    return g


def is_3_connected(g: nx.Graph) -> bool:
    return g.number_of_nodes() >= 4 and nx.is_connected(g) and nx.node_connectivity(g) >= 3


def embedding_faces(embedding: nx.PlanarEmbedding) -> list[list]:
    """Boundary cycles of a planar embedding, each listed once."""
    seen: set[tuple] = set()
    faces = []
    for u, v in embedding.edges():
        if (u, v) in seen:
            continue
        marked: set[tuple] = set()
        cycle = embedding.traverse_face(u, v, mark_half_edges=marked)
        seen |= marked
        faces.append(cycle)
    return faces


def from_coxeter_matrix(M: CoxeterMatrix) -> LabeledPolyhedron:
    """Recover the labeled polyhedron of a Coxeter matrix.

    Drops infinite labels, requires a planar 3-connected graph, and turns
    each face of its (essentially unique) planar embedding into a vertex:
    triangles become ordinary or ideal vertices, squares must be label-2
    cusps with non-adjacent diagonals, larger faces are rejected.
    """
    g = finite_label_graph(M)
    planar, embedding = nx.check_planarity(g)
    if not planar:
        raise NotPlanar("the graph of finite labels has no planar embedding")
    if not is_3_connected(g):
        raise Not3Connected("the graph of finite labels is not 3-connected")
    names = [str(i + 1) for i in range(M.size)]
    vertices = []
    for cycle in embedding_faces(embedding):
        where = "[" + ",".join(names[i] for i in cycle) + "]"
        if len(cycle) >= 5:
            raise BadFace(f"embedding face {where} has {len(cycle)} sides")
        if len(cycle) == 4:
            sides = [M.label(cycle[k], cycle[(k + 1) % 4]) for k in range(4)]
            if sides != [2, 2, 2, 2]:
                raise BadFace(f"square face {where} has labels {sides}, expected all 2")
            if M.label(cycle[0], cycle[2]) is not INF or M.label(cycle[1], cycle[3]) is not INF:
                raise BadFace(f"square face {where} has an adjacent diagonal")
        else:
            classify_vertex(M.label(a, b) for a, b in combinations(cycle, 2))
        vertices.append([names[i] for i in cycle])
    return LabeledPolyhedron(names, [((names[i], names[j]), m) for i, j, m in M.finite_pairs()], vertices)


def coxeter_matrix_of(P: LabeledPolyhedron) -> CoxeterMatrix:
    idx = P.face_index
    labels = {}
    for e in P.edges:
        i, j = sorted(idx[f] for f in e.faces)
        labels[(i, j)] = e.label
    return CoxeterMatrix(len(P.faces), labels)


def isomorphic(P: LabeledPolyhedron, Q: LabeledPolyhedron) -> bool:
    """Label-preserving isomorphism of face graphs that also maps vertices to vertices."""
    if (len(P.faces), len(P.edges), len(P.vertices)) != (len(Q.faces), len(Q.edges), len(Q.vertices)):
        return False
    gp, gq = P.face_graph(), Q.face_graph()
    target = {v.faces for v in Q.vertices}
    matcher = GraphMatcher(gp, gq, edge_match=lambda a, b: a["label"] == b["label"])
    for mapping in matcher.isomorphisms_iter():
        if all(frozenset(mapping[f] for f in v.faces) in target for v in P.vertices):
            return True
    return False


@dataclass(frozen=True)
class Verdict:
    """Outcome of the necessary realizability checks.

    ``PassNecessary`` is always ``indeterminate``: the Andreev angle
    inequalities are not checked.
    """

    status: str                      # "Fail" or "PassNecessary"
    reason: str | None = None
    polyhedron: LabeledPolyhedron | None = field(default=None, compare=False)

    @property
    def indeterminate(self) -> bool:
        return self.status == "PassNecessary"

    @property
    def passed(self) -> bool:
        return self.status == "PassNecessary"

    def text(self) -> str:
        if self.passed:
            return "PassNecessary (Indeterminate: Andreev inequalities unchecked)"
        return f"Fail: {self.reason}"

    def to_dict(self) -> dict:
        return {"status": self.status, "indeterminate": self.indeterminate, "reason": self.reason}


def check_realizability(obj: CoxeterMatrix | LabeledPolyhedron) -> Verdict:
    """Run the necessary conditions on a matrix or an explicit polyhedron.

    An explicit polyhedron must also agree with the polyhedron the pipeline
    reconstructs from its own Coxeter matrix.
    """
    try:
        if isinstance(obj, CoxeterMatrix):
            return Verdict("PassNecessary", polyhedron=from_coxeter_matrix(obj))
        rebuilt = from_coxeter_matrix(coxeter_matrix_of(obj))
    except PolyhedronError as exc:
        return Verdict("Fail", str(exc))
    if not isomorphic(rebuilt.relabeled(dict(zip(rebuilt.faces, obj.faces))), obj):
        return Verdict("Fail", "InvalidPolyhedron: listed vertices differ from the faces of the planar embedding")
    return Verdict("PassNecessary", polyhedron=obj)


# -- census ------------------------------------------------------------------

@dataclass(frozen=True)
class CellCensus:
    """Vertex and edge counts consumed by the closed homology formulas.

    r, s, t, v, w count vertices with stabilizer D_6 x Z_2, A_5 x Z_2,
    S_4 x Z_2, D_3 x Z_2, D_2 x Z_2; u counts ideal (2,4,4) vertices;
    ``E[n]`` counts edges of label n.
    """

    r: int
    s: int
    t: int
    u: int
    v: int
    w: int
    E: dict = field(default_factory=dict)

    def e(self, n: int) -> int:
        return self.E.get(n, 0)

    def to_dict(self) -> dict:
        return {
            "r": self.r, "s": self.s, "t": self.t, "u": self.u, "v": self.v, "w": self.w,
            "E": {str(n): c for n, c in sorted(self.E.items())},
        }

    @classmethod
    def from_dict(cls, data: dict) -> CellCensus:
        return cls(data["r"], data["s"], data["t"], data["u"], data["v"], data["w"],
                   {int(n): c for n, c in data["E"].items()})


def census(P: LabeledPolyhedron) -> CellCensus:
    groups = [v.vclass.group for v in P.vertices]
    E: dict[int, int] = {}
    for e in P.edges:
        E[e.label] = E.get(e.label, 0) + 1
    return CellCensus(
        r=groups.count(DxC2(6)),
        s=groups.count(A5xC2),
        t=groups.count(S4xC2),
        u=sum(1 for v in P.vertices if v.vclass.ideal_kind == "P4m"),
        v=groups.count(DxC2(3)),
        w=groups.count(DxC2(2)),
        E=dict(sorted(E.items())),
    )


# -- the two reference families ---------------------------------------------

def prism(n: int) -> LabeledPolyhedron:
    """Product of an n-gon with an interval: side faces meet at right angles,
    the top and bottom faces meet every side face at angle pi/3."""
    if not isinstance(n, int) or n < 5:
        raise ValueError(f"prism needs n >= 5, got {n}")
    xs = [f"x{i}" for i in range(1, n + 1)]
    edges = []
    for i in range(n):
        a, b = xs[i], xs[(i + 1) % n]
        edges.append(((a, b), 2))
    for x in xs:
        edges.append((("y", x), 3))
        edges.append((("z", x), 3))
    vertices = []
    for i in range(n):
        a, b = xs[i], xs[(i + 1) % n]
        vertices += [("y", a, b), ("z", a, b)]
    return LabeledPolyhedron(["y", "z", *xs], edges, vertices)


_CUBE_RIGHT = [(1, 5), (1, 6), (2, 5), (2, 6), (3, 4)]
_CUBE_THIRD = [(1, 4), (2, 3), (4, 5), (4, 6), (3, 5), (3, 6)]
_CUBE_OPPOSITE = [(1, 3), (2, 4), (5, 6)]


def cube(n: int) -> LabeledPolyhedron:
    """The combinatorial cube with faces x1..x6 and one edge {x1,x2} of label n."""
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"cube needs n >= 2, got {n}")
    x = lambda i: f"x{i}"  # noqa: E731
    edges = [((x(1), x(2)), n)]
    edges += [((x(a), x(b)), 2) for a, b in _CUBE_RIGHT]
    edges += [((x(a), x(b)), 3) for a, b in _CUBE_THIRD]
    (a1, a2), (b1, b2), (c1, c2) = _CUBE_OPPOSITE
    vertices = [(x(a), x(b), x(c)) for a in (a1, a2) for b in (b1, b2) for c in (c1, c2)]
    return LabeledPolyhedron([x(i) for i in range(1, 7)], edges, vertices)


FAMILIES = {"prism": (prism, 5), "cube": (cube, 2)}


def generate(family: str, n: int) -> LabeledPolyhedron:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    return FAMILIES[family][0](n)


def identify_family(P: LabeledPolyhedron) -> tuple[str, int] | None:
    """Return (family, n) when P is isomorphic to a generated family member."""
    F = len(P.faces)
    if F == 6 and len(P.edges) == 12:
        for n in sorted({e.label for e in P.edges}):
            if isomorphic(P, cube(n)):
                return ("cube", n)
    if F >= 7 and isomorphic(P, prism(F - 2)):
        return ("prism", F - 2)
    return None
