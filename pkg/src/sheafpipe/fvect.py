"""Finite-dimensional vector spaces with labeled bases, exact where it counts.

Structural matrices (functor images, restriction maps) are kept in exact
rational arithmetic via :class:`fractions.Fraction`; floats appear only when
measured quantities enter through coordinates. Rank and membership questions
are settled by exact Gaussian elimination, never by float thresholding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import CompositionError, SpaceError

Scalar = int | float | Fraction
Label = object


def exact(value) -> Fraction:
    """Coerce an int, string, or Fraction to an exact rational."""
    if isinstance(value, float):
        return Fraction(value).limit_denominator(10**12)
    return Fraction(value)


@dataclass(frozen=True)
class VectorSpace:
    """A free real vector space on a finite tuple of distinct basis labels.

    ``metric`` names the registered pseudo-distance used by
    :func:`pseudo_distance`; the default compares coordinates Euclidean-wise.
    """

    basis_labels: tuple
    metric: str = "euclidean"

    def __post_init__(self):
        labels = tuple(self.basis_labels)
        object.__setattr__(self, "basis_labels", labels)
        if len(set(labels)) != len(labels):
            raise SpaceError(f"duplicate basis labels in {labels!r}")

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    def index_of(self, label) -> int:
        try:
            return self.basis_labels.index(label)
        except ValueError:
            raise SpaceError(f"{label!r} is not a basis label of this space") from None

    def vector(self, coords: Sequence[Scalar]) -> "Vector":
        return Vector(self, tuple(coords))

    def zero(self) -> "Vector":
        return Vector(self, (Fraction(0),) * self.dim)

    def basis_vector(self, label) -> "Vector":
        i = self.index_of(label)
        coords = [Fraction(0)] * self.dim
        coords[i] = Fraction(1)
        return Vector(self, tuple(coords))


@dataclass(frozen=True)
class Vector:
    """A coordinate vector tied to its space; length must equal the dimension."""

    space: VectorSpace
    coords: tuple

    def __post_init__(self):
        coords = tuple(self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != self.space.dim:
            raise SpaceError(
                f"vector has {len(coords)} coordinates, space has dim {self.space.dim}"
            )

    def _require_same_space(self, other: "Vector"):
        if self.space != other.space:
            raise SpaceError("vectors live in different spaces")

    def __add__(self, other: "Vector") -> "Vector":
        self._require_same_space(other)
        return Vector(self.space, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Vector") -> "Vector":
        self._require_same_space(other)
        return Vector(self.space, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Vector":
        return Vector(self.space, tuple(-a for a in self.coords))

    def scale(self, c: Scalar) -> "Vector":
        return Vector(self.space, tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)


@dataclass(frozen=True)
class LinearMap:
    """A linear map stored as a matrix: rows index the codomain basis,
    columns index the domain basis, so column j is the image of basis j."""

    domain: VectorSpace
    codomain: VectorSpace
    matrix: tuple

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.matrix)
        object.__setattr__(self, "matrix", rows)
        if len(rows) != self.codomain.dim:
            raise SpaceError(
                f"matrix has {len(rows)} rows, codomain has dim {self.codomain.dim}"
            )
        for row in rows:
            if len(row) != self.domain.dim:
                raise SpaceError(
                    f"matrix row has {len(row)} entries, domain has dim {self.domain.dim}"
                )

    def column(self, j: int) -> Vector:
        return Vector(self.codomain, tuple(row[j] for row in self.matrix))


def identity_map(space: VectorSpace) -> LinearMap:
    n = space.dim
    rows = tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )
    return LinearMap(space, space, rows)


def zero_map(domain: VectorSpace, codomain: VectorSpace) -> LinearMap:
    rows = tuple((Fraction(0),) * domain.dim for _ in range(codomain.dim))
    return LinearMap(domain, codomain, rows)


def compose(g: LinearMap, f: LinearMap) -> LinearMap:
    """Return g after f. Raises CompositionError unless f.codomain == g.domain."""
    if f.codomain != g.domain:
        raise CompositionError("cannot compose: codomain of f differs from domain of g")
    mid = f.codomain.dim
    rows = tuple(
        tuple(
            sum((g.matrix[i][k] * f.matrix[k][j] for k in range(mid)), Fraction(0))
            for j in range(f.domain.dim)
        )
        for i in range(g.codomain.dim)
    )
    return LinearMap(f.domain, g.codomain, rows)


def apply(f: LinearMap, v: Vector) -> Vector:
    if v.space != f.domain:
        raise SpaceError("vector is not in the domain of the map")
    coords = tuple(
        sum((row[j] * v.coords[j] for j in range(f.domain.dim)), Fraction(0))
        for row in f.matrix
    )
    return Vector(f.codomain, coords)


def _exactify(x):
    # ints become Fractions so that division below never falls into floats
    return x if isinstance(x, (float, Fraction)) else Fraction(x)


def _echelon(rows: list) -> list:
    """Reduce rows to row-echelon form, exactly.

    First-nonzero pivoting: scan the current column top down and take the
    first nonzero entry as pivot. Returns the nonzero rows.
    """
    rows = [[_exactify(a) for a in r] for r in rows]
    if not rows:
        return []
    ncols = len(rows[0])
    pivot_row = 0
    for col in range(ncols):
        found = None
        for r in range(pivot_row, len(rows)):
            if rows[r][col] != 0:
                found = r
                break
        if found is None:
            continue
        rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
        pivot = rows[pivot_row][col]
        for r in range(pivot_row + 1, len(rows)):
            if rows[r][col] != 0:
                factor = rows[r][col] / pivot
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return [r for r in rows if any(a != 0 for a in r)]


def _reduce_against(echelon_rows: list, coords: list) -> list:
    """Subtract multiples of echelon rows from coords; the result is zero
    exactly when coords lies in their span."""
    coords = list(coords)
    for row in echelon_rows:
        lead = next(i for i, a in enumerate(row) if a != 0)
        if coords[lead] != 0:
            factor = coords[lead] / row[lead]
            coords = [a - factor * b for a, b in zip(coords, row)]
    return coords


@dataclass(frozen=True)
class Subspace:
    """The span of a set of generators inside an ambient space.

    ``reduced_basis`` holds the nonzero echelon rows as vectors; its length
    is the rank.
    """

    ambient: VectorSpace
    generators: tuple
    reduced_basis: tuple

    @property
    def rank(self) -> int:
        return len(self.reduced_basis)

    def contains(self, v: Vector) -> bool:
        if v.space != self.ambient:
            raise SpaceError("vector is not in the ambient space of the subspace")
        residual = _reduce_against([list(b.coords) for b in self.reduced_basis], list(v.coords))
        return all(a == 0 for a in residual)


def span(ambient: VectorSpace, vectors: Iterable[Vector]) -> Subspace:
    """Span of the given vectors inside ambient, computed by exact elimination."""
    gens = tuple(vectors)
    for v in gens:
        if v.space != ambient:
            raise SpaceError("generator is not in the ambient space")
    echelon = _echelon([list(v.coords) for v in gens])
    basis = tuple(Vector(ambient, tuple(row)) for row in echelon)
    return Subspace(ambient, gens, basis)


def image(f: LinearMap) -> Subspace:
    return span(f.codomain, [f.column(j) for j in range(f.domain.dim)])


def rank(f: LinearMap) -> int:
    return image(f).rank


def _euclidean(v: Vector, w: Vector) -> float:
    total = 0
    for a, b in zip(v.coords, w.coords):
        d = a - b
        total += d * d
    if total == 0:
        return 0.0
    return math.sqrt(total)


_METRICS: dict[str, Callable[[Vector, Vector], float]] = {"euclidean": _euclidean}


def register_metric(tag: str, fn: Callable[[Vector, Vector], float]) -> None:
    """Register a pseudo-distance under a tag usable as VectorSpace.metric."""
    _METRICS[tag] = fn


def pseudo_distance(v: Vector, w: Vector) -> float:
    """Distance between two vectors of the same space under its metric tag.

    With exact coordinates, equality is decided exactly: the result is 0.0
    precisely when the coordinates agree.
    """
    if v.space != w.space:
        raise SpaceError("pseudo_distance needs two vectors of one space")
    try:
        fn = _METRICS[v.space.metric]
    except KeyError:
        raise SpaceError(f"unknown metric tag {v.space.metric!r}") from None
    return fn(v, w)
