"""Finite models of the data-type categories and their structure-checked maps.

Each category is modeled by an object class (carrier plus structure) and a
single :class:`TypedMorphism` type tagged with the category name. Morphism
constructors verify the preservation law of the category and raise
:class:`ViolationError` with a witness when it fails. Elements of an object
are morphisms out of the category's terminal(-like) object.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable

from .errors import (
    CompositionError,
    IntervalError,
    ViolationError,
    WindowRequired,
)

SET = "set"
BOOL = "bool"
BI_REL = "bi-rel"
K_REL = "k-rel"
N_REL = "n-rel"
PORDINAL = "pordinal"
ORDINAL = "ordinal"
INTERVAL = "interval"
SCALAR = "scalar"

CATEGORIES = (SET, BOOL, BI_REL, K_REL, N_REL, PORDINAL, ORDINAL, INTERVAL, SCALAR)

_REL_CATEGORIES = (BI_REL, K_REL, N_REL)
_ORDER_CATEGORIES = (PORDINAL, ORDINAL)
_SEMIRING_CATEGORIES = (INTERVAL, SCALAR)


def _ordered(items: Iterable) -> tuple:
    unique = set(items)
    try:
        return tuple(sorted(unique))
    except TypeError:
        return tuple(sorted(unique, key=repr))


@dataclass(frozen=True)
class SetObject:
    """A finite set, carrier stored in canonical order."""

    elements: tuple

    def __post_init__(self):
        object.__setattr__(self, "elements", _ordered(self.elements))


@dataclass(frozen=True)
class BoolObject:
    """A subset of {0, 1}; truth values are represented by the ints 0 and 1."""

    elements: tuple

    def __post_init__(self):
        members = _ordered(self.elements)
        for x in members:
            if x not in (0, 1):
                raise ViolationError(f"{x!r} is not a truth value", witness=x)
        object.__setattr__(self, "elements", members)


@dataclass(frozen=True)
class RelObject:
    """A finite set with a k-ary relation.

    Tuples keep their input order (deduplicated); that order is the canonical
    one used downstream by the vectorization of relations.
    """

    base: SetObject
    arity: int
    tuples: tuple

    def __post_init__(self):
        if self.arity < 1:
            raise ViolationError("relation arity must be at least 1", witness=self.arity)
        seen = dict.fromkeys(tuple(t) for t in self.tuples)
        for t in seen:
            if len(t) != self.arity:
                raise ViolationError(
                    f"tuple {t!r} does not have arity {self.arity}", witness=t
                )
            for x in t:
                if x not in self.base.elements:
                    raise ViolationError(
                        f"tuple {t!r} mentions {x!r} outside the base set", witness=t
                    )
        object.__setattr__(self, "tuples", tuple(seen))


def _check_reflexive(base: SetObject, pairs: set):
    for x in base.elements:
        if (x, x) not in pairs:
            raise ViolationError(f"order is not reflexive at {x!r}", witness=x)


def _check_transitive(pairs: set):
    for (x, y1) in pairs:
        for (y2, z) in pairs:
            if y1 == y2 and (x, z) not in pairs:
                raise ViolationError(
                    f"order is not transitive: ({x!r},{y1!r}) and ({y2!r},{z!r}) "
                    f"hold but ({x!r},{z!r}) does not",
                    witness=((x, y1), (y2, z)),
                )


def _check_antisymmetric(pairs: set):
    for (x, y) in pairs:
        if x != y and (y, x) in pairs:
            raise ViolationError(
                f"order is not antisymmetric on {x!r}, {y!r}", witness=(x, y)
            )


def _check_pairs_in_base(base: SetObject, pairs: Iterable[tuple]):
    for (x, y) in pairs:
        if x not in base.elements or y not in base.elements:
            raise ViolationError(
                f"order pair ({x!r},{y!r}) mentions a point outside the base set",
                witness=(x, y),
            )


@dataclass(frozen=True)
class PosetObject:
    """A finite partially ordered set; construction validates the axioms."""

    base: SetObject
    pairs: tuple

    def __post_init__(self):
        pair_set = {tuple(p) for p in self.pairs}
        _check_pairs_in_base(self.base, pair_set)
        _check_reflexive(self.base, pair_set)
        _check_transitive(pair_set)
        _check_antisymmetric(pair_set)
        object.__setattr__(self, "pairs", _ordered(pair_set))

    def leq(self, x, y) -> bool:
        return (x, y) in self.pairs


@dataclass(frozen=True)
class TotalOrderObject:
    """A finite totally ordered set; construction validates the axioms."""

    base: SetObject
    pairs: tuple

    def __post_init__(self):
        pair_set = {tuple(p) for p in self.pairs}
        _check_pairs_in_base(self.base, pair_set)
        for x in self.base.elements:
            for y in self.base.elements:
                if (x, y) not in pair_set and (y, x) not in pair_set:
                    raise ViolationError(
                        f"order is not total on {x!r}, {y!r}", witness=(x, y)
                    )
        _check_transitive(pair_set)
        _check_antisymmetric(pair_set)
        object.__setattr__(self, "pairs", _ordered(pair_set))

    def leq(self, x, y) -> bool:
        return (x, y) in self.pairs


@dataclass(frozen=True, order=True)
class Interval:
    """A closed interval with exact rational endpoints, lo <= hi."""

    lo: Fraction
    hi: Fraction

    def __init__(self, lo, hi):
        lo = Fraction(lo)
        hi = Fraction(hi)
        if lo > hi:
            raise IntervalError(f"interval endpoints out of order: {lo} > {hi}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __repr__(self) -> str:
        def fmt(q: Fraction) -> str:
            return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"

        return f"[{fmt(self.lo)},{fmt(self.hi)}]"


def interval_add(a: Interval, b: Interval) -> Interval:
    return Interval(a.lo + b.lo, a.hi + b.hi)


def interval_mul(a: Interval, b: Interval) -> Interval:
    products = (a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi)
    return Interval(min(products), max(products))


def interval_leq(a: Interval, b: Interval) -> bool:
    """Containment order: a <= b exactly when a is a subinterval of b."""
    return b.lo <= a.lo and a.hi <= b.hi


@dataclass(frozen=True, eq=False)
class SemiringObject:
    """A (partially or totally) ordered semiring given by its operations.

    Carriers are infinite, so enumeration goes through ``window(n)``, which
    returns the canonical finite sample at size n. Two semiring objects are
    equal when their kind tags match.
    """

    kind: str
    zero: object
    one: object
    add: Callable
    mul: Callable
    leq: Callable
    total: bool
    contains: Callable
    window: Callable

    def __eq__(self, other) -> bool:
        return isinstance(other, SemiringObject) and other.kind == self.kind

    def __hash__(self) -> int:
        return hash(("semiring", self.kind))


def _is_plain_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def naturals() -> SemiringObject:
    """The natural numbers with usual +, *, and total order."""
    return SemiringObject(
        kind="naturals",
        zero=0,
        one=1,
        add=lambda a, b: a + b,
        mul=lambda a, b: a * b,
        leq=lambda a, b: a <= b,
        total=True,
        contains=lambda x: _is_plain_int(x) and x >= 0,
        window=lambda n: tuple(range(n + 1)),
    )


def _interval_window(values) -> tuple:
    values = sorted(values)
    out = []
    for i, lo in enumerate(values):
        for hi in values[i:]:
            out.append(Interval(lo, hi))
    return tuple(sorted(out))


def integer_intervals() -> SemiringObject:
    """Closed intervals with integer endpoints; order is containment.

    window(n) yields every interval with endpoints in [-n, n].
    """
    return SemiringObject(
        kind="integer-intervals",
        zero=Interval(0, 0),
        one=Interval(1, 1),
        add=interval_add,
        mul=interval_mul,
        leq=interval_leq,
        total=False,
        contains=lambda x: isinstance(x, Interval)
        and x.lo.denominator == 1
        and x.hi.denominator == 1,
        window=lambda n: _interval_window(range(-n, n + 1)),
    )


def rational_intervals() -> SemiringObject:
    """Closed intervals with rational endpoints; order is containment.

    window(n) yields every interval with half-integer endpoints in [-n, n].
    """
    return SemiringObject(
        kind="rational-intervals",
        zero=Interval(0, 0),
        one=Interval(1, 1),
        add=interval_add,
        mul=interval_mul,
        leq=interval_leq,
        total=False,
        contains=lambda x: isinstance(x, Interval),
        window=lambda n: _interval_window(
            Fraction(k, 2) for k in range(-2 * n, 2 * n + 1)
        ),
    )


_SEMIRING_FACTORIES = {
    "naturals": naturals,
    "integer-intervals": integer_intervals,
    "rational-intervals": rational_intervals,
}


def get_semiring(kind: str) -> SemiringObject:
    try:
        return _SEMIRING_FACTORIES[kind]()
    except KeyError:
        raise ViolationError(f"unknown semiring kind {kind!r}", witness=kind) from None


@dataclass(frozen=True)
class AxiomViolation:
    axiom: str
    witness: tuple

    def __str__(self) -> str:
        return f"{self.axiom} fails at {self.witness!r}"


def check_semiring_axioms(R: SemiringObject, members: Iterable, first_only: bool = False):
    """Test every semiring and order axiom on a finite sample, exactly.

    Returns the list of violations found (empty means the sample passed).
    Binary and unary axioms run over pairs and singles; associativity,
    distributivity, and transitivity run over all triples.
    """
    sample = tuple(members)
    add, mul, leq = R.add, R.mul, R.leq
    zero, one = R.zero, R.one
    out = []

    def report(axiom: str, witness: tuple) -> bool:
        out.append(AxiomViolation(axiom, witness))
        return first_only

    for a in sample:
        if add(a, zero) != a or add(zero, a) != a:
            if report("additive identity", (a,)):
                return out
        if mul(a, one) != a or mul(one, a) != a:
            if report("multiplicative identity", (a,)):
                return out
        if mul(a, zero) != zero or mul(zero, a) != zero:
            if report("annihilation by zero", (a,)):
                return out
        if not leq(a, a):
            if report("order reflexivity", (a,)):
                return out
    for a in sample:
        for b in sample:
            if add(a, b) != add(b, a):
                if report("additive commutativity", (a, b)):
                    return out
            if leq(a, b) and leq(b, a) and a != b:
                if report("order antisymmetry", (a, b)):
                    return out
    for a in sample:
        for b in sample:
            for c in sample:
                if add(add(a, b), c) != add(a, add(b, c)):
                    if report("additive associativity", (a, b, c)):
                        return out
                if mul(mul(a, b), c) != mul(a, mul(b, c)):
                    if report("multiplicative associativity", (a, b, c)):
                        return out
                if mul(a, add(b, c)) != add(mul(a, b), mul(a, c)):
                    if report("left distributivity", (a, b, c)):
                        return out
                if mul(add(a, b), c) != add(mul(a, c), mul(b, c)):
                    if report("right distributivity", (a, b, c)):
                        return out
                if leq(a, b) and leq(b, c) and not leq(a, c):
                    if report("order transitivity", (a, b, c)):
                        return out
                if leq(a, b) and not leq(add(a, c), add(b, c)):
                    if report("order compatibility with addition", (a, b, c)):
                        return out
                if leq(a, b) and leq(zero, c):
                    if not (leq(mul(a, c), mul(b, c)) and leq(mul(c, a), mul(c, b))):
                        if report("order compatibility with multiplication", (a, b, c)):
                            return out
    return out


@dataclass(frozen=True, eq=False)
class TypedMorphism:
    """A morphism in one of the data-type categories.

    ``mapping`` is a dict for finite carriers and a callable for semiring
    categories; ``window`` records the finite sample size a semiring morphism
    was validated on.
    """

    category: str
    source: object
    target: object
    mapping: object
    window: int | None = None

    def __call__(self, x):
        if callable(self.mapping) and not isinstance(self.mapping, dict):
            return self.mapping(x)
        return self.mapping[x]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TypedMorphism):
            return NotImplemented
        if (self.category, self.source, self.target) != (
            other.category,
            other.source,
            other.target,
        ):
            return False
        if isinstance(self.mapping, dict) and isinstance(other.mapping, dict):
            return self.mapping == other.mapping
        return self.mapping is other.mapping


def _as_lookup(f, carrier, what: str):
    """Materialize f (dict, callable, or TypedMorphism) as a dict on carrier."""
    if isinstance(f, TypedMorphism):
        f = f.mapping
    if isinstance(f, dict):
        missing = [a for a in carrier if a not in f]
        if missing:
            raise ViolationError(
                f"{what} is not total: no image for {missing[0]!r}", witness=missing[0]
            )
        return {a: f[a] for a in carrier}
    if callable(f):
        return {a: f(a) for a in carrier}
    raise ViolationError(f"{what} must be a dict or callable", witness=f)


def _require(condition: bool, message: str, witness):
    if not condition:
        raise ViolationError(message, witness=witness)


def check_morphism(cat: str, f, A, B, window: int | None = None) -> TypedMorphism:
    """Validate f as a morphism A -> B in category ``cat``.

    Returns the checked TypedMorphism; raises ViolationError with a witness
    when a preservation law fails, WindowRequired when a semiring check is
    attempted without a finite window.
    """
    if cat in (SET, BOOL):
        _require(hasattr(A, "elements") and hasattr(B, "elements"),
                 f"{cat} morphisms need set-like objects", (A, B))
        mapping = _as_lookup(f, A.elements, "set map")
        for a, b in mapping.items():
            _require(b in B.elements,
                     f"image {b!r} of {a!r} is outside the target set", (a, b))
        return TypedMorphism(cat, A, B, mapping)

    if cat in _REL_CATEGORIES:
        _require(isinstance(A, RelObject) and isinstance(B, RelObject),
                 f"{cat} morphisms need relation objects", (A, B))
        if cat == BI_REL:
            _require(A.arity == 2 and B.arity == 2,
                     "binary-relation objects must have arity 2", (A.arity, B.arity))
        if cat in (BI_REL, K_REL):
            _require(A.arity == B.arity,
                     f"objects of different arity do not share a {cat} category",
                     (A.arity, B.arity))
        if cat == N_REL and A.arity != B.arity:
            # hom-sets across arities are empty by definition
            raise ViolationError(
                "hom-set is empty: relations have different arity",
                witness=(A.arity, B.arity),
            )
        mapping = _as_lookup(f, A.base.elements, "relation map")
        target_tuples = set(B.tuples)
        for t in A.tuples:
            image = tuple(mapping[x] for x in t)
            _require(image in target_tuples,
                     f"related tuple {t!r} maps to unrelated {image!r}", (t, image))
        return TypedMorphism(cat, A, B, mapping)

    if cat in _ORDER_CATEGORIES:
        wanted = PosetObject if cat == PORDINAL else TotalOrderObject
        _require(isinstance(A, wanted) and isinstance(B, wanted),
                 f"{cat} morphisms need {wanted.__name__} endpoints", (A, B))
        mapping = _as_lookup(f, A.base.elements, "monotone map")
        target_pairs = set(B.pairs)
        for (x, y) in A.pairs:
            image = (mapping[x], mapping[y])
            _require(image in target_pairs,
                     f"{x!r} <= {y!r} but images {image[0]!r}, {image[1]!r} "
                     "are not ordered", ((x, y), image))
        return TypedMorphism(cat, A, B, mapping)

    if cat in _SEMIRING_CATEGORIES:
        _require(isinstance(A, SemiringObject) and isinstance(B, SemiringObject),
                 f"{cat} morphisms need semiring objects", (A, B))
        if cat == SCALAR:
            _require(A.total and B.total,
                     "scalar morphisms need totally ordered semirings",
                     (A.kind, B.kind))
        if isinstance(f, TypedMorphism):
            window = window if window is not None else f.window
            f = f.mapping
        if not callable(f) or isinstance(f, dict):
            raise ViolationError("semiring morphisms must be callables", witness=f)
        if window is None:
            raise WindowRequired(
                "checking a semiring morphism needs a finite window size"
            )
        sample = A.window(window)
        _require(f(A.one) == B.one, "unit is not preserved", (A.one, f(A.one)))
        for a in sample:
            fa = f(a)
            _require(B.contains(fa),
                     f"image {fa!r} of {a!r} is outside the target carrier", (a, fa))
            for b in sample:
                _require(f(A.add(a, b)) == B.add(fa, f(b)),
                         "addition is not preserved", (a, b))
                _require(f(A.mul(a, b)) == B.mul(fa, f(b)),
                         "multiplication is not preserved", (a, b))
                if A.leq(a, b):
                    _require(B.leq(fa, f(b)), "order is not preserved", (a, b))
        return TypedMorphism(cat, A, B, f, window=window)

    raise ViolationError(f"unknown category tag {cat!r}", witness=cat)


def compose_morphism(g: TypedMorphism, f: TypedMorphism) -> TypedMorphism:
    """Compose g after f and re-validate the composite in their category."""
    if f.category != g.category:
        raise CompositionError(
            f"cannot compose across categories {f.category!r} and {g.category!r}"
        )
    if f.target != g.source:
        raise CompositionError("cannot compose: target of f differs from source of g")
    if isinstance(f.mapping, dict):
        composed = {a: g.mapping[b] for a, b in f.mapping.items()}
        window = None
    else:
        f_fn, g_fn = f.mapping, g.mapping
        composed = lambda x: g_fn(f_fn(x))  # noqa: E731
        window = f.window if f.window is not None else g.window
    return check_morphism(f.category, composed, f.source, g.target, window=window)


def identity_morphism(A, cat: str | None = None, window: int | None = None) -> TypedMorphism:
    """The identity on A, checked in the given (or inferred) category."""
    if cat is None:
        cat = infer_category(A)
    if isinstance(A, SemiringObject):
        return check_morphism(cat, lambda x: x, A, A, window=window)
    carrier = A.base.elements if hasattr(A, "base") else A.elements
    return check_morphism(cat, {x: x for x in carrier}, A, A)


def infer_category(A) -> str:
    if isinstance(A, BoolObject):
        return BOOL
    if isinstance(A, SetObject):
        return SET
    if isinstance(A, RelObject):
        return BI_REL if A.arity == 2 else K_REL
    if isinstance(A, PosetObject):
        return PORDINAL
    if isinstance(A, TotalOrderObject):
        return ORDINAL
    if isinstance(A, SemiringObject):
        return SCALAR if A.total else INTERVAL
    raise ViolationError(f"no category known for {type(A).__name__}", witness=A)


def terminal_set() -> SetObject:
    return SetObject((0,))


def terminal_bool() -> SetObject:
    # elements of a truth-value object are computed through the one-point set
    return terminal_set()


def terminal_rel(arity: int) -> RelObject:
    return RelObject(terminal_set(), arity, ())


def terminal_pordinal() -> PosetObject:
    return PosetObject(terminal_set(), ((0, 0),))


def terminal_ordinal() -> TotalOrderObject:
    return TotalOrderObject(terminal_set(), ((0, 0),))


@dataclass(frozen=True, eq=False)
class Element:
    """An element of an object: a carrier value plus the morphism from the
    terminal object that names it (None for windowed semiring carriers)."""

    value: object
    morphism: TypedMorphism | None

    def __eq__(self, other) -> bool:
        return isinstance(other, Element) and other.value == self.value


def elements(A, cat: str | None = None, window: int | None = None) -> list:
    """Enumerate the elements of A as morphisms out of the terminal object.

    Semiring carriers are infinite and need a window; their elements carry
    the generator image as value and no materialized morphism.
    """
    if cat is None:
        cat = infer_category(A)

    if cat in (SET, BOOL):
        src = terminal_set()
        return [
            Element(v, check_morphism(SET, {0: v}, src, A))
            for v in A.elements
        ]
    if cat in _REL_CATEGORIES:
        src = terminal_rel(A.arity)
        return [
            Element(v, check_morphism(cat, {0: v}, src, A))
            for v in A.base.elements
        ]
    if cat == PORDINAL:
        src = terminal_pordinal()
        return [
            Element(v, check_morphism(cat, {0: v}, src, A))
            for v in A.base.elements
        ]
    if cat == ORDINAL:
        src = terminal_ordinal()
        return [
            Element(v, check_morphism(cat, {0: v}, src, A))
            for v in A.base.elements
        ]
    if cat in _SEMIRING_CATEGORIES:
        if window is None:
            raise WindowRequired("enumerating semiring elements needs a window size")
        return [Element(v, None) for v in A.window(window)]
    raise ViolationError(f"unknown category tag {cat!r}", witness=cat)
