"""Polyhedra used across the test modules."""

from __future__ import annotations

import random

from coxeterk.polyhedron import LabeledPolyhedron, PolyhedronError, cube, prism


def relabel_labels(P: LabeledPolyhedron, labels: dict) -> LabeledPolyhedron:
    """Same combinatorics, new edge labels (keyed by the edge's face set)."""
    return LabeledPolyhedron(
        P.faces,
        [(tuple(e.faces), labels.get(e.faces, e.label)) for e in P.edges],
        [tuple(v.faces) for v in P.vertices],
    )


def random_labelings(count: int, seed: int, choices=(2, 2, 2, 3, 3, 4, 5, 6, 7, 8, 9, 10)) -> list:
    """Rejection-sample labelings of cube and small prism combinatorics whose
    vertex links are all spherical or Euclidean."""
    rng = random.Random(seed)
    bases = [cube(2), prism(5), prism(6)]
    out = []
    while len(out) < count:
        base = rng.choice(bases)
        labels = {e.faces: rng.choice(choices) for e in base.edges}
        try:
            out.append(relabel_labels(base, labels))
        except PolyhedronError:
            continue
    return out


def shuffled_names(P: LabeledPolyhedron, rng: random.Random) -> LabeledPolyhedron:
    names = [f"f{i}" for i in range(len(P.faces))]
    rng.shuffle(names)
    return P.relabeled(dict(zip(P.faces, names)))


def square_pyramid(side: int = 3) -> LabeledPolyhedron:
    """Pyramid over a square: the apex is a 4-valent square cusp."""
    sides = ["s1", "s2", "s3", "s4"]
    edges = [((sides[i], sides[(i + 1) % 4]), 2) for i in range(4)]
    edges += [(("b", s), side) for s in sides]
    vertices = [sides] + [("b", sides[i], sides[(i + 1) % 4]) for i in range(4)]
    return LabeledPolyhedron(["b", *sides], edges, vertices)


def cube_with_ideal_vertex() -> LabeledPolyhedron:
    """Cube whose vertex {x1,x2,x5} is an ideal (2,4,4) cusp."""
    x = lambda i: f"x{i}"  # noqa: E731
    labels = {
        (1, 2): 2, (1, 5): 4, (2, 5): 4, (1, 4): 2, (2, 3): 2, (1, 6): 2, (2, 6): 2, (3, 4): 2,
        (4, 5): 3, (4, 6): 3, (3, 5): 3, (3, 6): 3,
    }
    vertices = [(x(a), x(b), x(c)) for a in (1, 3) for b in (2, 4) for c in (5, 6)]
    return LabeledPolyhedron(
        [x(i) for i in range(1, 7)], [((x(a), x(b)), m) for (a, b), m in labels.items()], vertices
    )
