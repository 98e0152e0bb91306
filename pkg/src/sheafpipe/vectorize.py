"""Vectorization: functors from the data-type categories into vector spaces.

Sets (and truth values) go to free vector spaces on their elements, with set
maps becoming 0/1 matrices that sum coefficients over preimages. Relations
go to the span of indicator vectors inside the free space on the diagonal
completion of the relation. Measure collections go to spaces of signed
measures, kernels to their transition matrices transposed. Random variables
and processes go to free spaces on their graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import WindowRequired
from .fvect import LinearMap, Subspace, Vector, VectorSpace, span
from .measure import (
    FiniteMeasurableSpace,
    Kernel,
    Measure,
    MeasureFamily,
    ProbabilityFamily,
    RandomVariable,
    RVElement,
    RVMorphism,
    STOMorphism,
    StochasticProcess,
)
from .typesys import (
    BoolObject,
    PosetObject,
    RelObject,
    SemiringObject,
    SetObject,
    TotalOrderObject,
    TypedMorphism,
)


def set_to_fvect(S) -> VectorSpace:
    """Free vector space on the elements of a set-like object."""
    return VectorSpace(S.elements)


def element_vector(space: VectorSpace, s) -> Vector:
    """The basis vector named by an element; injective but never surjective."""
    return space.basis_vector(s)


def _label_map_matrix(domain: VectorSpace, codomain: VectorSpace, image_of) -> LinearMap:
    rows = [[Fraction(0)] * domain.dim for _ in range(codomain.dim)]
    for j, label in enumerate(domain.basis_labels):
        rows[codomain.index_of(image_of(label))][j] = Fraction(1)
    return LinearMap(domain, codomain, tuple(tuple(r) for r in rows))


def set_map_to_linear(f: TypedMorphism) -> LinearMap:
    """The linear map sending basis s to basis f(s); on a general vector this
    sums coefficients over preimages."""
    return _label_map_matrix(
        set_to_fvect(f.source), set_to_fvect(f.target), lambda s: f.mapping[s]
    )


@dataclass(frozen=True)
class RHat:
    """The diagonal completion of a relation: the input tuples in their
    stored order, followed by the missing diagonal tuples in base order."""

    relation: RelObject
    tuples: tuple


def rhat(rel: RelObject) -> RHat:
    present = set(rel.tuples)
    extended = list(rel.tuples)
    for s in rel.base.elements:
        diag = (s,) * rel.arity
        if diag not in present:
            extended.append(diag)
    return RHat(rel, tuple(extended))


@dataclass(frozen=True)
class KRelVectorization:
    """A relation vectorized: the ambient free space on the completed tuple
    set, one indicator vector per base element, and their span."""

    relation: RelObject
    ambient: VectorSpace
    basis: tuple
    subspace: Subspace

    def vector_for(self, s) -> Vector:
        return self.basis[self.relation.base.elements.index(s)]


def krel_to_fvect(rel: RelObject) -> KRelVectorization:
    """Vectorize a relation: element s becomes the indicator vector of the
    completed tuples containing s."""
    completed = rhat(rel)
    ambient = VectorSpace(completed.tuples)
    basis = tuple(
        Vector(
            ambient,
            tuple(
                Fraction(1) if s in t else Fraction(0) for t in completed.tuples
            ),
        )
        for s in rel.base.elements
    )
    return KRelVectorization(rel, ambient, basis, span(ambient, basis))


def krel_map_to_linear(f: TypedMorphism) -> LinearMap:
    """A relation-preserving map in the coordinates given by the indicator
    bases: basis element s goes to basis element f(s)."""
    return _label_map_matrix(
        VectorSpace(f.source.base.elements),
        VectorSpace(f.target.base.elements),
        lambda s: f.mapping[s],
    )


def _order_to_rel(P) -> RelObject:
    return RelObject(P.base, 2, P.pairs)


def pordinal_to_fvect(P) -> KRelVectorization:
    """Vectorize a poset or total order through its order relation.

    Reflexivity puts every diagonal pair in the relation already, so the
    completed tuple set is the order itself.
    """
    return krel_to_fvect(_order_to_rel(P))


def ordinal_to_fvect(P: TotalOrderObject) -> KRelVectorization:
    return pordinal_to_fvect(P)


def pordinal_map_to_linear(f: TypedMorphism) -> LinearMap:
    """Monotone maps in indicator coordinates, same shape as for relations."""
    return _label_map_matrix(
        VectorSpace(f.source.base.elements),
        VectorSpace(f.target.base.elements),
        lambda s: f.mapping[s],
    )


def interval_to_fvect(R: SemiringObject, window: int | None) -> KRelVectorization:
    """Vectorize a windowed semiring carrier through its order poset.

    Only the order survives this route; the semiring operations have no
    structure-preserving image here.
    """
    if window is None:
        raise WindowRequired("vectorizing a semiring carrier needs a window size")
    members = R.window(window)
    pairs = tuple((a, b) for a in members for b in members if R.leq(a, b))
    return pordinal_to_fvect(PosetObject(SetObject(members), pairs))


@dataclass(frozen=True)
class SignedMeasureSpace:
    """Signed measures on a finite space, as the free space on its points."""

    space: FiniteMeasurableSpace
    vect: VectorSpace


def meas_to_fvect(X) -> SignedMeasureSpace:
    """Signed-measure space of a measure collection or a bare space."""
    space = X.space if isinstance(X, (MeasureFamily, ProbabilityFamily)) else X
    return SignedMeasureSpace(space, VectorSpace(space.points))


def prob_to_fvect(X: ProbabilityFamily) -> SignedMeasureSpace:
    """Probability collections embed in the same signed-measure space; their
    image is the convex set of nonnegative unit-mass vectors."""
    return meas_to_fvect(X)


def measure_vector(sms: SignedMeasureSpace, m: Measure) -> Vector:
    return Vector(sms.vect, m.weights)


def kernel_to_linear(k: Kernel) -> LinearMap:
    """The linear action of a kernel on signed measures.

    Entry (y, x) of the matrix is k(x, y), so applying the map to a measure's
    weight vector is exactly the pushforward.
    """
    domain = meas_to_fvect(k.source).vect
    codomain = meas_to_fvect(k.target).vect
    rows = tuple(
        tuple(k.entries[i][j] for i in range(k.source.size))
        for j in range(k.target.size)
    )
    return LinearMap(domain, codomain, rows)


def rv_to_fvect(R: RandomVariable) -> VectorSpace:
    """Free space on the graph of the variable, one axis per sample point."""
    return VectorSpace(tuple((w, R.x(w)) for w in R.omega.points))


def rv_element_vector(space: VectorSpace, elem: RVElement) -> Vector:
    return space.basis_vector((elem.omega_point, elem.state_point))


def rv_map_to_linear(m: RVMorphism) -> LinearMap:
    """The graph map of a variable morphism, linearized.

    (w, s) goes to (phi1(w), phi2(s)), which lies in the target graph exactly
    because the defining square commutes.
    """
    return _label_map_matrix(
        rv_to_fvect(m.source),
        rv_to_fvect(m.target),
        lambda label: (m.phi1[label[0]], m.phi2[label[1]]),
    )


def sto_to_fvect(P: StochasticProcess) -> VectorSpace:
    """Free space on the indexed graph points (t, w, state of w at t)."""
    labels = tuple(
        (t, w, P.x(t, w)) for t in P.index for w in P.omega.points
    )
    return VectorSpace(labels)


def sto_map_to_linear(m: STOMorphism) -> LinearMap:
    """The per-index graph map of a process morphism, linearized."""
    return _label_map_matrix(
        sto_to_fvect(m.source),
        sto_to_fvect(m.target),
        lambda label: (
            label[0],
            m.phi1s[label[0]][label[1]],
            m.phi2s[label[0]][label[2]],
        ),
    )
