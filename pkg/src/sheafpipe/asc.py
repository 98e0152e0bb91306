"""Abstract simplicial complexes and their face categories.

A complex is a downward-closed set of nonempty faces on string vertices.
The face category has one object per face and one morphism per containment;
it is the index category for sheaves of spaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple

from .errors import ClosureError


@dataclass(frozen=True, order=True)
class Simplex:
    """A face, stored as the sorted tuple of its distinct vertices.

    Any iterable of vertices is accepted and canonicalized; the empty face
    is excluded.
    """

    vertices: tuple

    def __init__(self, vertices: Iterable[str]):
        vs = tuple(sorted(set(vertices)))
        if not vs:
            raise ClosureError("the empty simplex is not a face")
        object.__setattr__(self, "vertices", vs)

    @property
    def dimension(self) -> int:
        return len(self.vertices) - 1

    def is_subface_of(self, other: "Simplex") -> bool:
        return set(self.vertices) <= set(other.vertices)

    def proper_subfaces(self) -> list:
        out = []
        for size in range(1, len(self.vertices)):
            for combo in combinations(self.vertices, size):
                out.append(Simplex(combo))
        return out

    def __repr__(self) -> str:
        return "[" + ",".join(str(v) for v in self.vertices) + "]"


def face_key(s: Simplex) -> tuple:
    """Canonical face ordering key: by dimension, then lexicographic."""
    return (len(s.vertices), s.vertices)


@dataclass(frozen=True)
class SimplicialComplex:
    faces: frozenset

    @property
    def sorted_faces(self) -> tuple:
        return tuple(sorted(self.faces, key=face_key))

    @property
    def vertices(self) -> tuple:
        return tuple(sorted({v for f in self.faces for v in f.vertices}))

    def __contains__(self, face: Simplex) -> bool:
        return face in self.faces

    def attachments(self) -> list:
        """All containment pairs (x, y) with x a proper subface of y,
        in canonical order."""
        ordered = self.sorted_faces
        out = []
        for x in ordered:
            for y in ordered:
                if x != y and x.is_subface_of(y):
                    out.append((x, y))
        return out


def validate_complex(faces: Iterable[Simplex]) -> SimplicialComplex:
    """Check downward closure of a literal face list.

    Raises ClosureError listing every missing subface; otherwise returns
    the complex.
    """
    face_set = set(faces)
    missing = set()
    for f in face_set:
        for sub in f.proper_subfaces():
            if sub not in face_set:
                missing.add(sub)
    if missing:
        ordered = sorted(missing, key=face_key)
        raise ClosureError(
            "face list is not downward closed; missing "
            + ", ".join(repr(m) for m in ordered),
            missing=ordered,
        )
    return SimplicialComplex(frozenset(face_set))


def close(maximal_faces: Iterable[Simplex]) -> SimplicialComplex:
    """Build the downward closure of the given faces."""
    all_faces = set()
    for f in maximal_faces:
        all_faces.add(f)
        all_faces.update(f.proper_subfaces())
    return SimplicialComplex(frozenset(all_faces))


class FaceCategory(NamedTuple):
    """The partial-order category of a complex: objects are faces, morphisms
    are containments (including identities), composition is transitivity."""

    objects: tuple
    morphisms: tuple  # pairs (x, y) with x a subface of y, identities included

    def identity(self, x: Simplex) -> tuple:
        return (x, x)

    def is_identity(self, m: tuple) -> bool:
        return m[0] == m[1]

    def compose(self, second: tuple, first: tuple) -> tuple:
        # (y, z) after (x, y) is (x, z); uniqueness holds because there is
        # at most one morphism between any two faces
        if first[1] != second[0]:
            raise ValueError("containments do not chain")
        return (first[0], second[1])


def face_category(complex: SimplicialComplex) -> FaceCategory:
    objects = complex.sorted_faces
    identities = [(x, x) for x in objects]
    morphisms = tuple(sorted(identities + complex.attachments(),
                             key=lambda m: (face_key(m[0]), face_key(m[1]))))
    return FaceCategory(objects, morphisms)


class Chain2(NamedTuple):
    """A composable pair of non-identity containments and their composite."""

    first: tuple
    second: tuple
    composite: tuple


def attachment_chains(category: FaceCategory) -> list:
    """All 2-chains of non-identity morphisms, for functoriality checks."""
    non_identity = [m for m in category.morphisms if not category.is_identity(m)]
    chains = []
    for first in non_identity:
        for second in non_identity:
            if first[1] == second[0]:
                chains.append(Chain2(first, second, category.compose(second, first)))
    return chains
