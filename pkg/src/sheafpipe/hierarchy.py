"""Functors between the data-type categories.

Five inclusions embed a stricter category into a laxer one; seven more
functors translate structure (orders from semirings, underlying sets from
relations, probability collections from random variables, and so on).
Functors with infinite or unbounded carriers carry a finite window, a
measure grid, or a product-size bound as configuration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import BoundError, FunctorError, WindowRequired
from .measure import (
    Kernel,
    Measure,
    MeasureFamily,
    FiniteMeasurableSpace,
    ProbabilityFamily,
    RandomVariable,
    RVMorphism,
    STOMorphism,
    StochasticProcess,
    compose_kernels,
    compose_rv_morphisms,
    compose_sto_morphisms,
    identity_kernel,
    push_measure,
    rv_identity,
    sto_identity,
)
from .typesys import (
    BI_REL,
    BOOL,
    INTERVAL,
    K_REL,
    N_REL,
    ORDINAL,
    PORDINAL,
    SCALAR,
    SET,
    BoolObject,
    PosetObject,
    RelObject,
    SemiringObject,
    SetObject,
    TotalOrderObject,
    TypedMorphism,
    check_morphism,
    compose_morphism,
    identity_morphism,
)

MEAS = "meas"
PROB = "prob"
RV = "rv"
STO = "sto"

# id -> (source tag, target tag, is an inclusion)
FUNCTOR_TABLE = {
    "bool-to-set": (BOOL, SET, True),
    "pordinal-to-birel": (PORDINAL, BI_REL, True),
    "ordinal-to-pordinal": (ORDINAL, PORDINAL, True),
    "krel-to-nrel": (K_REL, N_REL, True),
    "scalar-to-interval": (SCALAR, INTERVAL, True),
    "scalar-to-ordinal": (SCALAR, ORDINAL, False),
    "interval-to-pordinal": (INTERVAL, PORDINAL, False),
    "nrel-to-set": (N_REL, SET, False),
    "prob-to-meas": (PROB, MEAS, False),
    "meas-to-set": (MEAS, SET, False),
    "rv-to-prob": (RV, PROB, False),
    "sto-to-prob": (STO, PROB, False),
}

INCLUSION_IDS = tuple(fid for fid, row in FUNCTOR_TABLE.items() if row[2])
NON_INCLUSION_IDS = tuple(fid for fid, row in FUNCTOR_TABLE.items() if not row[2])


@dataclass(frozen=True)
class HierarchyFunctor:
    """One functor of the hierarchy, plus the finite configuration it needs.

    ``window`` bounds semiring carriers, ``grids`` fixes the finite measure
    sets used by the measure-to-set translation, ``bound`` caps the product
    space built from a stochastic process.
    """

    id: str
    source: str
    target: str
    inclusion: bool
    window: int | None = None
    grids: tuple | None = None
    bound: int = 512

    def grid_for(self, space: FiniteMeasurableSpace) -> tuple:
        for sp, measures in self.grids or ():
            if sp == space:
                return measures
        raise FunctorError(
            f"no measure grid configured for space {space.points!r}"
        )


def functor(fid: str, *, window: int | None = None, grids=None,
            bound: int = 512) -> HierarchyFunctor:
    """Build a configured hierarchy functor by id.

    ``grids`` maps spaces to iterables of measures (dict or pair iterable).
    """
    try:
        source, target, inclusion = FUNCTOR_TABLE[fid]
    except KeyError:
        raise FunctorError(f"unknown functor id {fid!r}") from None
    if grids is not None:
        if isinstance(grids, dict):
            items = grids.items()
        else:
            items = grids
        grids = tuple(
            sorted(
                ((sp, tuple(ms)) for sp, ms in items),
                key=lambda pair: pair[0].points,
            )
        )
    return HierarchyFunctor(fid, source, target, inclusion,
                            window=window, grids=grids, bound=bound)


def _expect(condition: bool, message: str):
    if not condition:
        raise FunctorError(message)


def _windowed_order(F: HierarchyFunctor, A: SemiringObject):
    if F.window is None:
        raise WindowRequired(f"functor {F.id} needs a window size")
    members = A.window(F.window)
    pairs = tuple(
        (a, b) for a in members for b in members if A.leq(a, b)
    )
    return members, pairs


def _product_space(P: StochasticProcess, bound: int) -> FiniteMeasurableSpace:
    size = P.state.size ** len(P.index)
    if size > bound:
        raise BoundError(
            f"product state space has {size} points, over the bound {bound}"
        )
    return FiniteMeasurableSpace(tuple(product(P.state.points, repeat=len(P.index))))


def apply_object(F: HierarchyFunctor, A):
    """Image of an object under the functor.

    Raises FunctorError when A is not an object of the source category,
    WindowRequired / BoundError when the needed configuration is missing
    or exceeded.
    """
    fid = F.id
    if fid == "bool-to-set":
        _expect(isinstance(A, BoolObject), f"{fid} expects a truth-value object")
        return SetObject(A.elements)
    if fid == "pordinal-to-birel":
        _expect(isinstance(A, PosetObject), f"{fid} expects a poset")
        return RelObject(A.base, 2, A.pairs)
    if fid == "ordinal-to-pordinal":
        _expect(isinstance(A, TotalOrderObject), f"{fid} expects a total order")
        return PosetObject(A.base, A.pairs)
    if fid == "krel-to-nrel":
        _expect(isinstance(A, RelObject), f"{fid} expects a relation object")
        return A
    if fid == "scalar-to-interval":
        _expect(isinstance(A, SemiringObject) and A.total,
                f"{fid} expects a totally ordered semiring")
        return A
    if fid == "scalar-to-ordinal":
        _expect(isinstance(A, SemiringObject) and A.total,
                f"{fid} expects a totally ordered semiring")
        members, pairs = _windowed_order(F, A)
        return TotalOrderObject(SetObject(members), pairs)
    if fid == "interval-to-pordinal":
        _expect(isinstance(A, SemiringObject), f"{fid} expects a semiring")
        members, pairs = _windowed_order(F, A)
        return PosetObject(SetObject(members), pairs)
    if fid == "nrel-to-set":
        _expect(isinstance(A, RelObject), f"{fid} expects a relation object")
        return A.base
    if fid == "prob-to-meas":
        _expect(isinstance(A, ProbabilityFamily),
                f"{fid} expects a probability-measure collection")
        return MeasureFamily(A.space)
    if fid == "meas-to-set":
        _expect(isinstance(A, MeasureFamily),
                f"{fid} expects a measure collection")
        return SetObject(F.grid_for(A.space))
    if fid == "rv-to-prob":
        _expect(isinstance(A, RandomVariable), f"{fid} expects a random variable")
        return ProbabilityFamily(A.state)
    if fid == "sto-to-prob":
        _expect(isinstance(A, StochasticProcess),
                f"{fid} expects a stochastic process")
        return ProbabilityFamily(_product_space(A, F.bound))
    raise FunctorError(f"unknown functor id {fid!r}")


def apply_morphism(F: HierarchyFunctor, f):
    """Image of a morphism under the functor, re-validated in the target
    category."""
    fid = F.id
    if fid == "bool-to-set":
        _expect(isinstance(f, TypedMorphism) and f.category == BOOL,
                f"{fid} expects a truth-value morphism")
        return check_morphism(SET, f.mapping,
                              apply_object(F, f.source), apply_object(F, f.target))
    if fid == "pordinal-to-birel":
        _expect(isinstance(f, TypedMorphism) and f.category == PORDINAL,
                f"{fid} expects a monotone map")
        return check_morphism(BI_REL, f.mapping,
                              apply_object(F, f.source), apply_object(F, f.target))
    if fid == "ordinal-to-pordinal":
        _expect(isinstance(f, TypedMorphism) and f.category == ORDINAL,
                f"{fid} expects a monotone map")
        return check_morphism(PORDINAL, f.mapping,
                              apply_object(F, f.source), apply_object(F, f.target))
    if fid == "krel-to-nrel":
        _expect(isinstance(f, TypedMorphism) and f.category in (K_REL, BI_REL),
                f"{fid} expects a relation-preserving map")
        return check_morphism(N_REL, f.mapping, f.source, f.target)
    if fid == "scalar-to-interval":
        _expect(isinstance(f, TypedMorphism) and f.category == SCALAR,
                f"{fid} expects a scalar morphism")
        window = f.window if f.window is not None else F.window
        return check_morphism(INTERVAL, f.mapping, f.source, f.target, window=window)
    if fid in ("scalar-to-ordinal", "interval-to-pordinal"):
        expected = SCALAR if fid == "scalar-to-ordinal" else INTERVAL
        _expect(isinstance(f, TypedMorphism) and f.category == expected,
                f"{fid} expects a {expected} morphism")
        src = apply_object(F, f.source)
        tgt = apply_object(F, f.target)
        table = {}
        for a in src.base.elements:
            fa = f(a)
            if fa not in tgt.base.elements:
                raise FunctorError(
                    f"{fid}: image {fa!r} of {a!r} leaves the target window"
                )
            table[a] = fa
        cat = ORDINAL if fid == "scalar-to-ordinal" else PORDINAL
        return check_morphism(cat, table, src, tgt)
    if fid == "nrel-to-set":
        _expect(isinstance(f, TypedMorphism) and f.category in (N_REL, K_REL, BI_REL),
                f"{fid} expects a relation-preserving map")
        return check_morphism(SET, f.mapping, f.source.base, f.target.base)
    if fid == "prob-to-meas":
        _expect(isinstance(f, Kernel), f"{fid} expects a kernel")
        _expect(f.stochastic, f"{fid} expects a stochastic kernel")
        return f
    if fid == "meas-to-set":
        _expect(isinstance(f, Kernel), f"{fid} expects a kernel")
        src_grid = F.grid_for(f.source)
        tgt_grid = F.grid_for(f.target)
        table = {m: push_measure(f, m) for m in src_grid}
        return check_morphism(SET, table, SetObject(src_grid), SetObject(tgt_grid))
    if fid == "rv-to-prob":
        _expect(isinstance(f, RVMorphism), f"{fid} expects a random-variable morphism")
        source = f.source.state
        target = f.target.state
        rows = tuple(
            tuple(
                Fraction(1) if f.phi2[s] == s2 else Fraction(0)
                for s2 in target.points
            )
            for s in source.points
        )
        return Kernel(source, target, rows, stochastic=True)
    if fid == "sto-to-prob":
        _expect(isinstance(f, STOMorphism), f"{fid} expects a process morphism")
        source = _product_space(f.source, F.bound)
        target = _product_space(f.target, F.bound)
        index = f.source.index

        def maps_to(sy: tuple, sz: tuple) -> bool:
            return all(
                f.phi2s[t][sy[i]] == sz[i] for i, t in enumerate(index)
            )

        rows = tuple(
            tuple(
                Fraction(1) if maps_to(sy, sz) else Fraction(0)
                for sz in target.points
            )
            for sy in source.points
        )
        return Kernel(source, target, rows, stochastic=True)
    raise FunctorError(f"unknown functor id {fid!r}")


def _identity_in(cat: str, obj, window: int | None = None):
    if cat in (MEAS, PROB):
        return identity_kernel(obj.space)
    if cat == RV:
        return rv_identity(obj)
    if cat == STO:
        return sto_identity(obj)
    return identity_morphism(obj, cat=cat, window=window)


def _compose_in(cat: str, g, f):
    if cat in (MEAS, PROB):
        return compose_kernels(g, f)
    if cat == RV:
        return compose_rv_morphisms(g, f)
    if cat == STO:
        return compose_sto_morphisms(g, f)
    return compose_morphism(g, f)


def morphisms_equal(m1, m2, window: int | None = None) -> bool:
    """Equality of two morphisms of one category, exact where possible.

    Semiring morphisms (callables) are compared pointwise on the source
    window sample.
    """
    if isinstance(m1, TypedMorphism) and isinstance(m2, TypedMorphism):
        if isinstance(m1.mapping, dict) and isinstance(m2.mapping, dict):
            return m1 == m2
        if (m1.category, m1.source, m1.target) != (m2.category, m2.source, m2.target):
            return False
        size = window
        if size is None:
            size = m1.window if m1.window is not None else m2.window
        if size is None:
            raise WindowRequired("comparing semiring morphisms needs a window")
        return all(m1(a) == m2(a) for a in m1.source.window(size))
    return m1 == m2


@dataclass(frozen=True)
class LawFailure:
    law: str
    witness: str


@dataclass
class FunctorLawReport:
    """Outcome of checking F(id) = id and F(g after f) = F(g) after F(f)."""

    functor_id: str
    identities_checked: int = 0
    compositions_checked: int = 0
    failures: list = None

    def __post_init__(self):
        if self.failures is None:
            self.failures = []

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_functor_laws(F: HierarchyFunctor, sample_objects,
                        sample_pairs) -> FunctorLawReport:
    """Check the functor laws on samples.

    ``sample_objects`` are source-category objects; ``sample_pairs`` are
    composable morphism pairs (f, g), read as g after f. Every failure is
    reported with a witness description.
    """
    report = FunctorLawReport(F.id)
    for A in sample_objects:
        image_identity = apply_morphism(F, _identity_in(F.source, A, F.window))
        direct_identity = _identity_in(F.target, apply_object(F, A), F.window)
        report.identities_checked += 1
        if not morphisms_equal(image_identity, direct_identity, window=F.window):
            report.failures.append(
                LawFailure("identity", f"object {A!r}")
            )
    for f, g in sample_pairs:
        composed_then_mapped = apply_morphism(F, _compose_in(F.source, g, f))
        mapped_then_composed = _compose_in(
            F.target, apply_morphism(F, g), apply_morphism(F, f)
        )
        report.compositions_checked += 1
        if not morphisms_equal(composed_then_mapped, mapped_then_composed,
                               window=F.window):
            report.failures.append(
                LawFailure("composition", f"pair ({f!r}, {g!r})")
            )
    return report
