"""Sheaves of vector spaces on simplicial complexes, and bundles.

A sheaf assigns a stalk space to every face and a restriction map to every
attachment (subface into containing face), functorially. An assignment picks
one stalk vector per face; it is a global section when every restriction
carries the subface value onto the containing face's value, up to the
configured tolerance of the stalk pseudo-distance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .asc import Simplex, SimplicialComplex, face_category, attachment_chains, face_key
from .errors import (
    BoundError,
    IncompleteAssignmentError,
    IncompleteSheafError,
    SpaceError,
)
from .fvect import LinearMap, Vector, VectorSpace, apply, compose, identity_map, pseudo_distance


@dataclass(frozen=True)
class Bundle:
    """A finite bundle: total set, base set, and a projection total -> base."""

    total: tuple
    base: tuple
    projection: dict

    def __post_init__(self):
        object.__setattr__(self, "total", tuple(self.total))
        object.__setattr__(self, "base", tuple(self.base))
        for a in self.total:
            if a not in self.projection:
                raise IncompleteSheafError(f"projection misses {a!r}")
            if self.projection[a] not in self.base:
                raise SpaceError(
                    f"projection sends {a!r} outside the base set"
                )

    def stalk(self, x) -> tuple:
        return tuple(a for a in self.total if self.projection[a] == x)


def bundle_sections(b: Bundle) -> list:
    """All sections of the bundle: maps x -> stalk over x, base point order.

    Empty over any empty stalk.
    """
    stalks = [b.stalk(x) for x in b.base]
    out = []
    for combo in product(*stalks):
        out.append({x: a for x, a in zip(b.base, combo)})
    return out


@dataclass(frozen=True)
class TerminalityResult:
    maps_checked: int
    morphisms: tuple
    is_terminal: bool


def bundle_terminality_check(b: Bundle) -> TerminalityResult:
    """Brute-force check that the identity bundle over the base is terminal.

    Enumerates every map from the total set to the base and keeps those that
    commute with the projections; terminality means exactly one survives,
    and it is the projection itself.
    """
    candidates = product(b.base, repeat=len(b.total))
    found = []
    checked = 0
    for combo in candidates:
        checked += 1
        phi = {a: x for a, x in zip(b.total, combo)}
        if all(phi[a] == b.projection[a] for a in b.total):
            found.append(phi)
    is_terminal = len(found) == 1 and found[0] == dict(b.projection)
    return TerminalityResult(checked, tuple(found), is_terminal)


@dataclass(frozen=True)
class SheafOfSpaces:
    """Stalk spaces per face plus restriction maps per non-identity
    attachment; identity attachments may be stored and are then checked."""

    complex: SimplicialComplex
    stalks: dict
    restrictions: dict


def restriction(sheaf: SheafOfSpaces, x: Simplex, y: Simplex) -> LinearMap:
    """The restriction map for an attachment, the identity when x == y."""
    if x == y:
        try:
            return sheaf.restrictions[(x, y)]
        except KeyError:
            return identity_map(sheaf.stalks[x])
    try:
        return sheaf.restrictions[(x, y)]
    except KeyError:
        raise IncompleteSheafError(
            f"no restriction map stored for {x!r} -> {y!r}"
        ) from None


@dataclass
class SheafReport:
    """Outcome of the functoriality validation of a sheaf."""

    ok: bool
    violations: list
    attachments_checked: int = 0
    chains_checked: int = 0


def validate_sheaf(sheaf: SheafOfSpaces) -> SheafReport:
    """Check that the sheaf is a functor on the face category.

    Missing stalks or restrictions raise IncompleteSheafError; wrong
    endpoints, non-identity identities, and failed two-step compositions are
    reported as violations in canonical face order.
    """
    cat = face_category(sheaf.complex)
    for face in cat.objects:
        if face not in sheaf.stalks:
            raise IncompleteSheafError(f"no stalk space for face {face!r}")
    violations = []
    attachments = [m for m in cat.morphisms if not cat.is_identity(m)]
    for (x, y) in attachments:
        if (x, y) not in sheaf.restrictions:
            raise IncompleteSheafError(f"no restriction map for {x!r} -> {y!r}")
        r = sheaf.restrictions[(x, y)]
        if r.domain != sheaf.stalks[x] or r.codomain != sheaf.stalks[y]:
            violations.append(
                f"restriction {x!r} -> {y!r} does not map stalk to stalk"
            )
    for key, r in sorted(sheaf.restrictions.items(),
                         key=lambda kv: (face_key(kv[0][0]), face_key(kv[0][1]))):
        x, y = key
        if x == y:
            if r != identity_map(sheaf.stalks[x]):
                violations.append(
                    f"stored identity restriction at {x!r} is not the identity"
                )
        elif (x, y) not in attachments:
            violations.append(
                f"restriction stored for non-attachment {x!r} -> {y!r}"
            )
    chains = attachment_chains(cat)
    checked = 0
    for chain in chains:
        x, y = chain.first
        _, z = chain.second
        r_xy = sheaf.restrictions[(x, y)]
        r_yz = sheaf.restrictions[(y, z)]
        r_xz = sheaf.restrictions[(x, z)]
        if (
            r_xy.domain != sheaf.stalks[x]
            or r_xy.codomain != sheaf.stalks[y]
            or r_yz.domain != sheaf.stalks[y]
            or r_yz.codomain != sheaf.stalks[z]
            or r_xz.domain != sheaf.stalks[x]
            or r_xz.codomain != sheaf.stalks[z]
        ):
            continue  # endpoint mismatch already reported above
        checked += 1
        if compose(r_yz, r_xy) != r_xz:
            violations.append(
                f"restrictions do not compose along {x!r} -> {y!r} -> {z!r}"
            )
    return SheafReport(
        ok=not violations,
        violations=violations,
        attachments_checked=len(attachments),
        chains_checked=checked,
    )


@dataclass(frozen=True)
class Assignment:
    """One stalk vector per face."""

    values: dict

    def value(self, face: Simplex) -> Vector:
        try:
            return self.values[face]
        except KeyError:
            raise IncompleteAssignmentError(f"no value assigned to {face!r}") from None


@dataclass
class SectionReport:
    """Per-attachment consistency of an assignment.

    ``distances`` lists every attachment with its pseudo-distance between the
    restricted subface value and the containing face's value; ``violations``
    keeps those exceeding the tolerance. The assignment is a global section
    exactly when ``violations`` is empty.
    """

    is_section: bool
    tolerance: float
    distances: list
    violations: list
    max_violation: float


def is_global_section(sheaf: SheafOfSpaces, assignment: Assignment,
                      tolerance: float = 0.0) -> SectionReport:
    """Test the global-section condition attachment by attachment.

    Raises IncompleteAssignmentError when a face has no value and SpaceError
    when a value is not a stalk vector of its face.
    """
    ordered = sheaf.complex.sorted_faces
    for face in ordered:
        v = assignment.value(face)
        stalk = sheaf.stalks.get(face)
        if stalk is None:
            raise IncompleteSheafError(f"no stalk space for face {face!r}")
        if v.space != stalk:
            raise SpaceError(f"value at {face!r} is not a vector of its stalk")
    distances = []
    violations = []
    for (x, y) in sheaf.complex.attachments():
        moved = apply(restriction(sheaf, x, y), assignment.value(x))
        d = pseudo_distance(moved, assignment.value(y))
        distances.append((x, y, d))
        if d > tolerance:
            violations.append((x, y, d))
    max_violation = max((d for _, _, d in distances), default=0.0)
    return SectionReport(
        is_section=not violations,
        tolerance=tolerance,
        distances=distances,
        violations=violations,
        max_violation=max_violation,
    )


def enumerate_sections_over_grid(sheaf: SheafOfSpaces, grid,
                                 max_count: int = 100000,
                                 tolerance: float = 0.0) -> list:
    """All assignments with coordinates drawn from a finite grid that pass
    the global-section test.

    ``grid`` is one iterable of coordinate values, or a dict from face to
    such an iterable. Raises BoundError when the candidate count exceeds
    ``max_count``.
    """
    ordered = sheaf.complex.sorted_faces
    per_face = []
    total = 1
    for face in ordered:
        values = tuple(grid[face]) if isinstance(grid, dict) else tuple(grid)
        dim = sheaf.stalks[face].dim
        count = len(values) ** dim
        total *= count
        if total > max_count:
            raise BoundError(
                f"grid enumeration needs {total} candidates, over {max_count}"
            )
        per_face.append(tuple(product(values, repeat=dim)))
    sections = []
    for combo in product(*per_face):
        values = {
            face: Vector(sheaf.stalks[face], coords)
            for face, coords in zip(ordered, combo)
        }
        assignment = Assignment(values)
        if is_global_section(sheaf, assignment, tolerance).is_section:
            sections.append(assignment)
    return sections
