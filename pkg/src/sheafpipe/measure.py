"""Finite measure spaces, kernels, random variables, stochastic processes.

Points carry the full power-set sigma-algebra implicitly, so a measure is a
nonnegative weight per point and a kernel is a weight matrix. Exact rational
weights stay exact through pushforward and composition; floats are tolerated
with a 1e-12 slack on stochasticity checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable

from .errors import (
    CommutationError,
    CompositionError,
    SpaceError,
    ViolationError,
)

_FLOAT_TOL = 1e-12


def _ordered(items: Iterable) -> tuple:
    unique = set(items)
    try:
        return tuple(sorted(unique))
    except TypeError:
        return tuple(sorted(unique, key=repr))


@dataclass(frozen=True)
class FiniteMeasurableSpace:
    """A finite set of points with the power-set sigma-algebra."""

    points: tuple

    def __post_init__(self):
        object.__setattr__(self, "points", _ordered(self.points))

    @property
    def size(self) -> int:
        return len(self.points)


@dataclass(frozen=True, eq=False)
class Measure:
    """A nonnegative weight per point, aligned with the space's point order.

    Equality and hashing compare space and weights only, so a probability
    measure equals the plain measure with the same weights.
    """

    space: FiniteMeasurableSpace
    weights: tuple

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Measure)
            and other.space == self.space
            and other.weights == self.weights
        )

    def __hash__(self) -> int:
        return hash((self.space, self.weights))

    def __post_init__(self):
        weights = tuple(self.weights)
        object.__setattr__(self, "weights", weights)
        if len(weights) != self.space.size:
            raise SpaceError(
                f"measure has {len(weights)} weights for {self.space.size} points"
            )
        for w in weights:
            if w < 0:
                raise ViolationError(f"negative weight {w!r}", witness=w)

    def weight(self, point):
        try:
            i = self.space.points.index(point)
        except ValueError:
            raise SpaceError(f"{point!r} is not a point of the space") from None
        return self.weights[i]

    @property
    def total(self):
        return sum(self.weights)


def _is_one(total) -> bool:
    if isinstance(total, float):
        return abs(total - 1) <= _FLOAT_TOL
    return total == 1


@dataclass(frozen=True, eq=False)
class ProbabilityMeasure(Measure):
    """A measure with total mass one (exactly, or within 1e-12 for floats)."""

    def __post_init__(self):
        super().__post_init__()
        if not _is_one(self.total):
            raise ViolationError(
                f"probability measure has total mass {self.total!r}", witness=self.total
            )


@dataclass(frozen=True)
class Kernel:
    """A nonnegative weight matrix from source points to target points.

    ``entries[i][j]`` weighs the transition from source point i to target
    point j. ``stochastic`` asserts unit row sums and is validated.
    """

    source: FiniteMeasurableSpace
    target: FiniteMeasurableSpace
    entries: tuple
    stochastic: bool = False

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if len(rows) != self.source.size:
            raise SpaceError(
                f"kernel has {len(rows)} rows for {self.source.size} source points"
            )
        for row in rows:
            if len(row) != self.target.size:
                raise SpaceError(
                    f"kernel row has {len(row)} entries for {self.target.size} "
                    "target points"
                )
            for w in row:
                if w < 0:
                    raise ViolationError(f"negative kernel entry {w!r}", witness=w)
            if self.stochastic and not _is_one(sum(row)):
                raise ViolationError(
                    f"stochastic kernel row sums to {sum(row)!r}", witness=row
                )

    def entry(self, x, y):
        return self.entries[self.source.points.index(x)][self.target.points.index(y)]


def identity_kernel(space: FiniteMeasurableSpace) -> Kernel:
    n = space.size
    rows = tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )
    return Kernel(space, space, rows, stochastic=True)


def push_measure(kernel: Kernel, m: Measure) -> Measure:
    """Pushforward of m along the kernel: n(y) = sum_x kernel(x, y) * m(x).

    A stochastic kernel pushes a probability measure to a probability measure.
    """
    if m.space != kernel.source:
        raise SpaceError("measure does not live on the kernel's source space")
    weights = tuple(
        sum(kernel.entries[i][j] * m.weights[i] for i in range(kernel.source.size))
        for j in range(kernel.target.size)
    )
    if kernel.stochastic and isinstance(m, ProbabilityMeasure):
        return ProbabilityMeasure(kernel.target, weights)
    return Measure(kernel.target, weights)


def compose_kernels(nu: Kernel, mu: Kernel) -> Kernel:
    """Return nu after mu: rho(x, z) = sum_y nu(y, z) * mu(x, y)."""
    if mu.target != nu.source:
        raise CompositionError("cannot compose: target of mu differs from source of nu")
    mid = mu.target.size
    rows = tuple(
        tuple(
            sum(mu.entries[i][k] * nu.entries[k][j] for k in range(mid))
            for j in range(nu.target.size)
        )
        for i in range(mu.source.size)
    )
    return Kernel(mu.source, nu.target, rows,
                  stochastic=mu.stochastic and nu.stochastic)


@dataclass(frozen=True)
class MeasureFamily:
    """The collection of all measures on a space (an object of the measure
    category; its morphisms are kernels)."""

    space: FiniteMeasurableSpace


@dataclass(frozen=True)
class ProbabilityFamily:
    """The collection of all probability measures on a space (an object of
    the probability category; its morphisms are stochastic kernels)."""

    space: FiniteMeasurableSpace


def _canonical_grid(grid: Iterable) -> tuple:
    values = []
    for v in grid:
        if isinstance(v, float):
            values.append(v)
        else:
            values.append(Fraction(v))
    unique = sorted(set(values), key=lambda v: (float(v), str(v)))
    return tuple(unique)


def meas_element(space: FiniteMeasurableSpace, grid: Iterable) -> list:
    """All measures on the space whose weights come from the finite grid.

    Enumeration order is the lexicographic product over points of the sorted
    grid values.
    """
    values = _canonical_grid(grid)
    for v in values:
        if v < 0:
            raise ViolationError(f"grid value {v!r} is negative", witness=v)
    return [
        Measure(space, combo) for combo in product(values, repeat=space.size)
    ]


def prob_element(space: FiniteMeasurableSpace, grid: Iterable) -> list:
    """The grid measures of total mass one, as probability measures."""
    out = []
    for m in meas_element(space, grid):
        if _is_one(m.total):
            out.append(ProbabilityMeasure(m.space, m.weights))
    return out


@dataclass(frozen=True)
class RandomVariable:
    """A random variable: sample space with probability, state space, and a
    measurable assignment of a state to each sample point.

    ``images`` is aligned with ``omega.points``; a dict from sample point to
    state is also accepted and canonicalized.
    """

    omega: FiniteMeasurableSpace
    prob: ProbabilityMeasure
    state: FiniteMeasurableSpace
    images: tuple

    def __post_init__(self):
        if self.prob.space != self.omega:
            raise SpaceError("probability measure does not live on the sample space")
        images = self.images
        if isinstance(images, dict):
            missing = [w for w in self.omega.points if w not in images]
            if missing:
                raise ViolationError(
                    f"no state assigned to sample point {missing[0]!r}",
                    witness=missing[0],
                )
            images = tuple(images[w] for w in self.omega.points)
        else:
            images = tuple(images)
            if len(images) != self.omega.size:
                raise SpaceError(
                    f"{len(images)} states assigned over {self.omega.size} sample points"
                )
        for s in images:
            if s not in self.state.points:
                raise ViolationError(
                    f"assigned state {s!r} is outside the state space", witness=s
                )
        object.__setattr__(self, "images", images)

    def x(self, point):
        return self.images[self.omega.points.index(point)]


@dataclass(frozen=True)
class RVElement:
    """An element of a random variable: a sample point paired with its state.

    These are exactly the points of the variable's graph; the state entry is
    forced to equal x(omega_point).
    """

    omega_point: object
    state_point: object


def rv_elements(R: RandomVariable) -> list:
    """The graph of R as elements, one per sample point, in point order."""
    return [RVElement(w, R.x(w)) for w in R.omega.points]


@dataclass(frozen=True)
class StochasticProcess:
    """A finite family of random variables over one sample space, indexed by
    a finite totally ordered index set.

    ``images`` holds one state tuple per index, each aligned with
    ``omega.points``; a dict of dicts is accepted and canonicalized.
    """

    omega: FiniteMeasurableSpace
    prob: ProbabilityMeasure
    state: FiniteMeasurableSpace
    index: tuple
    images: tuple

    def __post_init__(self):
        if self.prob.space != self.omega:
            raise SpaceError("probability measure does not live on the sample space")
        idx = _ordered(self.index)
        object.__setattr__(self, "index", idx)
        images = self.images
        if isinstance(images, dict):
            rows = []
            for t in idx:
                if t not in images:
                    raise ViolationError(f"no variable at index {t!r}", witness=t)
                row = images[t]
                if isinstance(row, dict):
                    row = tuple(row[w] for w in self.omega.points)
                rows.append(tuple(row))
            images = tuple(rows)
        else:
            images = tuple(tuple(row) for row in images)
        if len(images) != len(idx):
            raise SpaceError(f"{len(images)} variables over {len(idx)} indices")
        for row in images:
            if len(row) != self.omega.size:
                raise SpaceError("variable row does not match the sample space")
            for s in row:
                if s not in self.state.points:
                    raise ViolationError(
                        f"assigned state {s!r} is outside the state space", witness=s
                    )
        object.__setattr__(self, "images", images)

    def x(self, t, point):
        return self.images[self.index.index(t)][self.omega.points.index(point)]

    def rv_at(self, t) -> RandomVariable:
        return RandomVariable(
            self.omega, self.prob, self.state, self.images[self.index.index(t)]
        )


def sto_elements(P: StochasticProcess) -> list:
    """Elements of a process: one family {(x_t, s_t)} per free choice of a
    sample point at every index, with the state forced to x_t's image.

    There are exactly |omega| ** |index| of them.
    """
    choices = product(P.omega.points, repeat=len(P.index))
    out = []
    for combo in choices:
        family = tuple(
            (x_t, P.x(t, x_t)) for t, x_t in zip(P.index, combo)
        )
        out.append(family)
    return out


@dataclass(frozen=True, eq=False)
class RVMorphism:
    """A morphism of random variables: a pair of maps (phi1 on samples,
    phi2 on states) making the evaluation square commute."""

    source: RandomVariable
    target: RandomVariable
    phi1: dict
    phi2: dict

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RVMorphism)
            and other.source == self.source
            and other.target == self.target
            and other.phi1 == self.phi1
            and other.phi2 == self.phi2
        )


def check_rv_morphism(phi1: dict, phi2: dict, Y: RandomVariable,
                      Z: RandomVariable) -> RVMorphism:
    """Validate (phi1, phi2) as a morphism Y -> Z.

    Raises CommutationError with the witness sample point when
    phi2(X_Y(w)) != X_Z(phi1(w)).
    """
    for w in Y.omega.points:
        if w not in phi1:
            raise ViolationError(f"phi1 is not total: missing {w!r}", witness=w)
        if phi1[w] not in Z.omega.points:
            raise ViolationError(
                f"phi1 image {phi1[w]!r} is outside the target sample space",
                witness=w,
            )
    for s in Y.state.points:
        if s not in phi2:
            raise ViolationError(f"phi2 is not total: missing {s!r}", witness=s)
        if phi2[s] not in Z.state.points:
            raise ViolationError(
                f"phi2 image {phi2[s]!r} is outside the target state space",
                witness=s,
            )
    for w in Y.omega.points:
        if phi2[Y.x(w)] != Z.x(phi1[w]):
            raise CommutationError(
                f"square does not commute at sample point {w!r}: "
                f"phi2(X({w!r})) = {phi2[Y.x(w)]!r} but X'(phi1({w!r})) = "
                f"{Z.x(phi1[w])!r}",
                witness=w,
            )
    return RVMorphism(Y, Z, dict(phi1), dict(phi2))


def rv_identity(R: RandomVariable) -> RVMorphism:
    return check_rv_morphism(
        {w: w for w in R.omega.points},
        {s: s for s in R.state.points},
        R,
        R,
    )


def compose_rv_morphisms(b: RVMorphism, a: RVMorphism) -> RVMorphism:
    if a.target != b.source:
        raise CompositionError("cannot compose: target of a differs from source of b")
    phi1 = {w: b.phi1[a.phi1[w]] for w in a.phi1}
    phi2 = {s: b.phi2[a.phi2[s]] for s in a.phi2}
    return check_rv_morphism(phi1, phi2, a.source, b.target)


@dataclass(frozen=True, eq=False)
class STOMorphism:
    """A morphism of stochastic processes: per-index pairs of maps, each an
    RV morphism between the variables at that index."""

    source: StochasticProcess
    target: StochasticProcess
    phi1s: dict
    phi2s: dict

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, STOMorphism)
            and other.source == self.source
            and other.target == self.target
            and other.phi1s == self.phi1s
            and other.phi2s == self.phi2s
        )


def check_sto_morphism(phi1s: dict, phi2s: dict, Y: StochasticProcess,
                       Z: StochasticProcess) -> STOMorphism:
    """Validate per-index map pairs as a morphism of processes Y -> Z."""
    if Y.index != Z.index:
        raise ViolationError(
            "processes are indexed by different sets", witness=(Y.index, Z.index)
        )
    for t in Y.index:
        if t not in phi1s or t not in phi2s:
            raise ViolationError(f"no map pair at index {t!r}", witness=t)
        try:
            check_rv_morphism(phi1s[t], phi2s[t], Y.rv_at(t), Z.rv_at(t))
        except CommutationError as err:
            raise CommutationError(
                f"square at index {t!r} does not commute: {err}",
                witness=(t, err.witness),
            ) from None
    return STOMorphism(Y, Z, {t: dict(phi1s[t]) for t in Y.index},
                       {t: dict(phi2s[t]) for t in Y.index})


def sto_identity(P: StochasticProcess) -> STOMorphism:
    phi1 = {w: w for w in P.omega.points}
    phi2 = {s: s for s in P.state.points}
    return check_sto_morphism(
        {t: phi1 for t in P.index}, {t: phi2 for t in P.index}, P, P
    )


def compose_sto_morphisms(b: STOMorphism, a: STOMorphism) -> STOMorphism:
    if a.target != b.source:
        raise CompositionError("cannot compose: target of a differs from source of b")
    phi1s = {
        t: {w: b.phi1s[t][a.phi1s[t][w]] for w in a.phi1s[t]} for t in a.source.index
    }
    phi2s = {
        t: {s: b.phi2s[t][a.phi2s[t][s]] for s in a.phi2s[t]} for t in a.source.index
    }
    return check_sto_morphism(phi1s, phi2s, a.source, b.target)
