"""From raw sensor payloads to a sheaf assignment, in three steps.

Step one (mathematize) turns a payload into a mathematical datum in the
variable's native category. Step two (cook) maps that datum to an element of
the variable's cooked finite object. Step three happens in the sheaf: cooked
elements become stalk basis vectors, faces without sensors inherit values
along restrictions, and the global-section test scores the integration.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .asc import Simplex, SimplicialComplex, close
from .errors import (
    AnalyticMissing,
    ConfigError,
    DomainError,
    IncompleteAssignmentError,
    IncompleteSheafError,
    PayloadError,
)
from .fvect import VectorSpace, apply, identity_map
from .measure import RVElement
from .sheaf import (
    Assignment,
    SectionReport,
    SheafOfSpaces,
    is_global_section,
    restriction,
)
from .typesys import BoolObject


@dataclass(frozen=True)
class Reading:
    """One raw observation from one sensor."""

    sensor: str
    payload: object
    timestamp: float


@dataclass(frozen=True)
class AnalyticSpec:
    """Names the analytic turning a payload into a mathematical datum.

    ``params`` holds analytic-specific configuration as (name, value) pairs.
    """

    kind: str
    params: tuple = ()

    def param(self, name, default=None):
        for key, value in self.params:
            if key == name:
                return value
        return default


@dataclass(frozen=True)
class SensorSpec:
    """A sensor: its raw payload format and one analytic per variable."""

    id: str
    raw_format: str
    analytics: dict


@dataclass(frozen=True)
class VariableSpec:
    """A variable of interest: where it lives, what finite object its cooked
    values inhabit, and which cooking map applies per sensor."""

    id: str
    native_category: str
    cooked_object: object
    face: Simplex
    cooking: dict


def _check_score_payload(payload):
    if isinstance(payload, bool) or not isinstance(payload, (int, float)):
        raise PayloadError(f"score payload must be a number, got {payload!r}")
    return float(payload)


def _check_token_payload(payload):
    if not isinstance(payload, (list, tuple)) or not all(
        isinstance(t, str) for t in payload
    ):
        raise PayloadError(f"token payload must be a sequence of strings")
    return tuple(payload)


def bag_of_words(tokens, violent, calm) -> tuple:
    """Count tokens from the violent and calm word sets, in that order.

    The two sets must be disjoint; other tokens are ignored.
    """
    violent = set(violent)
    calm = set(calm)
    overlap = violent & calm
    if overlap:
        raise ConfigError(
            f"word sets overlap on {sorted(overlap)!r}"
        )
    i = sum(1 for t in tokens if t in violent)
    j = sum(1 for t in tokens if t in calm)
    return (i, j)


def _analytic_event_score(payload, spec: AnalyticSpec):
    score = _check_score_payload(payload)
    # the raw observation stands in for the sample point of the variable
    return RVElement(omega_point=payload, state_point=score)


def _analytic_word_counts(payload, spec: AnalyticSpec):
    tokens = _check_token_payload(payload)
    violent = spec.param("violent")
    calm = spec.param("calm")
    if violent is None or calm is None:
        raise ConfigError("word-counts analytic needs violent and calm word sets")
    return bag_of_words(tokens, violent, calm)


ANALYTICS = {
    "event-score": _analytic_event_score,
    "word-counts": _analytic_word_counts,
}


def mathematize(reading: Reading, sensor: SensorSpec, variable_id: str):
    """Apply the sensor's analytic for the variable to the reading."""
    if variable_id not in sensor.analytics:
        raise AnalyticMissing(
            f"sensor {sensor.id!r} has no analytic for variable {variable_id!r}"
        )
    spec = sensor.analytics[variable_id]
    if spec.kind not in ANALYTICS:
        raise ConfigError(f"unknown analytic kind {spec.kind!r}")
    if sensor.raw_format == "score":
        _check_score_payload(reading.payload)
    elif sensor.raw_format == "tokens":
        _check_token_payload(reading.payload)
    else:
        raise ConfigError(f"unknown raw format {sensor.raw_format!r}")
    return ANALYTICS[spec.kind](reading.payload, spec)


def cook_f1(score) -> int:
    """Threshold an event probability at one half: 0 below 0.5, else 1."""
    if isinstance(score, bool) or not isinstance(score, (int, float)):
        raise DomainError(f"classifier score must be a number, got {score!r}")
    if not 0 <= score <= 1:
        raise DomainError(f"classifier score {score!r} is outside [0, 1]")
    return 0 if score < 0.5 else 1


def cook_f2(i, j) -> int:
    """Compare word counts: 0 when violent words are outnumbered, else 1."""
    for n in (i, j):
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise DomainError(f"word count {n!r} is not a natural number")
    return 0 if i < j else 1


def _cook_threshold(datum) -> int:
    if not isinstance(datum, RVElement):
        raise DomainError(f"threshold cooking expects a variable element, got {datum!r}")
    return cook_f1(datum.state_point)


def _cook_compare_counts(datum) -> int:
    if not (isinstance(datum, tuple) and len(datum) == 2):
        raise DomainError(f"count cooking expects a count pair, got {datum!r}")
    return cook_f2(datum[0], datum[1])


COOKINGS = {
    "threshold-event-score": _cook_threshold,
    "compare-word-counts": _cook_compare_counts,
}


def latest_readings(readings) -> dict:
    """Latest reading per sensor; on equal timestamps the later entry wins."""
    latest = {}
    for r in readings:
        held = latest.get(r.sensor)
        if held is None or r.timestamp >= held.timestamp:
            latest[r.sensor] = r
    return latest


def run_pipeline(readings, sensors: dict, variables: dict,
                 complex: SimplicialComplex, sheaf: SheafOfSpaces,
                 tolerance: float = 0.0):
    """Cook the latest readings into stalk vectors and score the assignment.

    Sensor vertices get the cooked value of their latest reading; every other
    face inherits, along the stored restriction, the value of its first
    valued vertex in canonical order. Returns (Assignment, SectionReport).
    """
    latest = latest_readings(readings)
    values = {}
    for var in variables.values():
        if var.face not in complex:
            raise ConfigError(f"variable {var.id!r} lives on a face outside the complex")
        carrier = var.cooked_object.elements
        for sensor_id in sorted(var.cooking):
            vertex = Simplex((sensor_id,))
            if vertex not in complex:
                raise ConfigError(
                    f"sensor {sensor_id!r} is not a vertex of the complex"
                )
            if sensor_id not in sensors:
                raise ConfigError(f"unknown sensor {sensor_id!r}")
            if sensor_id not in latest:
                raise IncompleteAssignmentError(
                    f"no reading from sensor {sensor_id!r}"
                )
            kind = var.cooking[sensor_id]
            if kind not in COOKINGS:
                raise ConfigError(f"unknown cooking kind {kind!r}")
            datum = mathematize(latest[sensor_id], sensors[sensor_id], var.id)
            value = COOKINGS[kind](datum)
            if value not in carrier:
                raise DomainError(
                    f"cooked value {value!r} is outside the carrier of {var.id!r}"
                )
            stalk = sheaf.stalks.get(vertex)
            if stalk is None:
                raise IncompleteSheafError(f"no stalk space for face {vertex!r}")
            values[vertex] = stalk.basis_vector(value)
    for face in sheaf.complex.sorted_faces:
        if face in values:
            continue
        for v in face.vertices:
            vertex = Simplex((v,))
            if vertex in values:
                values[face] = apply(restriction(sheaf, vertex, face), values[vertex])
                break
        else:
            raise IncompleteAssignmentError(
                f"no value derivable for face {face!r}"
            )
    assignment = Assignment(values)
    report = is_global_section(sheaf, assignment, tolerance)
    return assignment, report


DEFAULT_VIOLENT_WORDS = ("clash", "fight", "riot", "violence")
DEFAULT_CALM_WORDS = ("calm", "orderly", "peaceful", "quiet")


@dataclass(frozen=True)
class TwoSensorExample:
    """The worked two-sensor scenario: a camera scored by a classifier and a
    text feed scored by word counts, fused over a single edge."""

    complex: SimplicialComplex
    sheaf: SheafOfSpaces
    sensors: dict
    variables: dict
    violent: tuple
    calm: tuple


def build_L_example(violent=DEFAULT_VIOLENT_WORDS,
                    calm=DEFAULT_CALM_WORDS) -> TwoSensorExample:
    """Build the camera-and-text scenario.

    Vertices C (camera) and E (text feed) share the edge where the boolean
    variable L (is the event violent) lives; all stalks are the free space
    on {0, 1} and both restrictions are identities.
    """
    complex = close([Simplex(("C", "E"))])
    stalk = VectorSpace((0, 1))
    vertex_c = Simplex(("C",))
    vertex_e = Simplex(("E",))
    edge = Simplex(("C", "E"))
    from .fvect import identity_map

    sheaf = SheafOfSpaces(
        complex=complex,
        stalks={vertex_c: stalk, vertex_e: stalk, edge: stalk},
        restrictions={
            (vertex_c, edge): identity_map(stalk),
            (vertex_e, edge): identity_map(stalk),
        },
    )
    sensors = {
        "C": SensorSpec("C", "score", {"L": AnalyticSpec("event-score")}),
        "E": SensorSpec(
            "E",
            "tokens",
            {
                "L": AnalyticSpec(
                    "word-counts",
                    params=(("violent", tuple(violent)), ("calm", tuple(calm))),
                )
            },
        ),
    }
    variables = {
        "L": VariableSpec(
            id="L",
            native_category="rv",
            cooked_object=BoolObject((0, 1)),
            face=edge,
            cooking={
                "C": "threshold-event-score",
                "E": "compare-word-counts",
            },
        )
    }
    return TwoSensorExample(complex, sheaf, sensors, variables,
                            tuple(violent), tuple(calm))


def demo_readings(example: TwoSensorExample, score: float, i: int, j: int,
                  timestamp: float = 0.0) -> list:
    """Synthesize one camera reading with the given score and one text
    reading containing i violent and j calm words."""
    tokens = [example.violent[0]] * i + [example.calm[0]] * j
    return [
        Reading("C", score, timestamp),
        Reading("E", tokens, timestamp),
    ]
