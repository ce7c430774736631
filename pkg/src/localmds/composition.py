"""Error-tolerant composition of a uniform sub-algorithm (algorithm B).

Given a sub-algorithm with uniform approximation guarantees on some
hereditary class, the composition runs three phases on an arbitrary graph:

1. every vertex inspects its radius-T view and flags itself as an *error*
   when that view falls outside the class;
2. the sub-algorithm runs, but flagged vertices are filtered out of its
   output;
3. whatever is left uncovered is repaired exactly, component by component,
   with the centralized oracle (unbounded local computation).

T is derived from the sub-algorithm's constants and a configurable control
function f as T = f(2k+2) + max(k+1, r). Rounds are charged T+1 for the
combined detection/filter phase (detection and the sub-algorithm run in
parallel; detection dominates) and delta+1 for repair, where delta is the
largest weak diameter of a component of the distance-2 neighborhood of the
error set: T + delta + 2 in total.

This module also ships the checker for bounded colorings of graph powers,
the machinery that justifies the composition's ratio; the algorithm itself
never consumes a coloring.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

from .domination import DEFAULT_BUDGET, minimum_dominating_set, _vertex_set
from .errors import InputError, InvariantError
from .graph import (
    LabeledGraph,
    VertexSet,
    components,
    neighborhood,
    ranked_form,
    weak_diameter,
)
from .nomination import ALPHA, K_UNIFORM, ROUNDS, algorithm_a
from .planarity import ClassPredicate, is_planar
from .runtime import LocalAlgorithm, RoundLedger, run_by_views


@dataclass(frozen=True)
class ControlFunction:
    """A named nondecreasing map from power radius to weak-diameter bound."""

    name: str
    fn: Callable[[int], int]

    def __call__(self, x: int) -> int:
        return self.fn(x)


def linear_control(c: int = 1) -> ControlFunction:
    if c < 1:
        raise InputError(f"linear control factor must be >= 1, got {c}")
    return ControlFunction(f"linear:{c}", lambda x: c * x)


def parse_control(spec: str) -> ControlFunction:
    """Parse a control-function spec of the form 'linear:c'."""
    kind, _, arg = spec.partition(":")
    if kind == "linear":
        try:
            return linear_control(int(arg) if arg else 1)
        except ValueError:
            pass
    raise InputError(f"unknown control function {spec!r} (expected 'linear:c')")


@dataclass(frozen=True)
class UniformSubAlgorithm:
    """A whole-graph runner plus its declared uniformity constants."""

    name: str
    k: int
    alpha: int
    rounds: int
    run: Callable[[LabeledGraph], VertexSet]


def planar_nomination(k: int = K_UNIFORM, alpha: int = ALPHA) -> UniformSubAlgorithm:
    """The 5-round nomination algorithm with its planar uniformity constants."""
    return UniformSubAlgorithm("A", k, alpha, ROUNDS, algorithm_a)


@dataclass(frozen=True)
class BConfig:
    sub: UniformSubAlgorithm
    predicate: ClassPredicate
    control: ControlFunction = field(default_factory=linear_control)
    dim: int = 2

    def __post_init__(self):
        if self.dim < 0:
            raise InputError(f"dimension must be >= 0, got {self.dim}")
        probe = [self.control(x) for x in range(2 * self.sub.k + 3)]
        if any(v < 0 for v in probe):
            raise InputError("control function must be non-negative")
        if any(b < a for a, b in zip(probe, probe[1:])):
            raise InputError("control function must be nondecreasing")

    @property
    def error_radius(self) -> int:
        """T: the view radius used for error detection."""
        return self.control(2 * self.sub.k + 2) + max(self.sub.k + 1, self.sub.rounds)

    @property
    def claimed_ratio(self) -> int:
        """Reported ratio alpha*(dim+1)+1; holds when the configured control
        function truly certifies dimension `dim` for the input class."""
        return self.sub.alpha * (self.dim + 1) + 1


@dataclass(frozen=True)
class ErrorSetReport:
    """The error set X, the components of its distance-2 neighborhood, and
    their weak diameters in the host graph."""

    radius: int
    errors: VertexSet
    components: tuple[VertexSet, ...]
    weak_diameters: tuple[int, ...]

    @property
    def delta(self) -> int:
        return max(self.weak_diameters, default=0)


@lru_cache(maxsize=65536)
def _planar_ranked(n: int, edges: tuple[tuple[int, int], ...]) -> bool:
    return is_planar(LabeledGraph.from_edges(n, edges))


def _predicate_holds(predicate: ClassPredicate, h: LabeledGraph) -> bool:
    # Planarity is isomorphism-invariant, so verdicts are cached on the
    # order-preserving compact form; other predicates run directly.
    if predicate.test is is_planar:
        labels, edges = ranked_form(h)
        return _planar_ranked(len(labels), edges)
    return predicate.test(h)


def detection_algorithm(predicate: ClassPredicate, radius: int) -> LocalAlgorithm:
    """Radius-`radius` rule flagging vertices whose view leaves the class."""
    if radius < 0:
        raise InputError(f"detection radius must be >= 0, got {radius}")

    def rule(view) -> bool:
        return not _predicate_holds(predicate, view.subgraph)

    return LocalAlgorithm(f"errors[{predicate.name},r={radius}]", radius, rule)


def t_error_set(g: LabeledGraph, predicate: ClassPredicate, radius: int) -> VertexSet:
    """All vertices whose radius-`radius` view falls outside the class."""
    flags = run_by_views(g, detection_algorithm(predicate, radius))
    return frozenset(u for u, bad in flags.items() if bad)


def _error_components(g: LabeledGraph, errors: VertexSet) -> tuple[tuple[VertexSet, ...], tuple[int, ...]]:
    hood = neighborhood(g, errors, 2)
    comps = tuple(components(g, hood))
    return comps, tuple(weak_diameter(g, c) for c in comps)


def error_set(g: LabeledGraph, cfg: BConfig) -> ErrorSetReport:
    """Detect errors at the configured radius and measure their spread."""
    t = cfg.error_radius
    errors = t_error_set(g, cfg.predicate, t)
    comps, diams = _error_components(g, errors)
    return ErrorSetReport(t, errors, comps, diams)


def measure_delta(g: LabeledGraph, errors: VertexSet) -> int:
    """Largest weak diameter of a component of the distance-2 neighborhood
    of `errors`; 0 when the error set is empty."""
    errors = _vertex_set(g, errors, "errors")
    _, diams = _error_components(g, errors)
    return max(diams, default=0)


def repair_step(
    g: LabeledGraph,
    dominated_by: VertexSet,
    errors: VertexSet,
    *,
    budget: int = DEFAULT_BUDGET,
) -> VertexSet:
    """Exact minimum set covering everything `dominated_by` misses.

    Requires that every uncovered vertex lies within distance 1 of the
    error set (guaranteed by the filtered phase when the sub-algorithm's
    output dominates); violation raises InvariantError. Each connected
    component of the distance-2 neighborhood of the errors is solved
    independently; the union is exact because an uncovered vertex's whole
    closed neighborhood sits inside a single component.
    """
    dominated_by = _vertex_set(g, dominated_by, "dominated_by")
    errors = _vertex_set(g, errors, "errors")
    uncovered = frozenset(g.labels) - neighborhood(g, dominated_by, 1)
    if not uncovered:
        return frozenset()
    if not uncovered <= neighborhood(g, errors, 1):
        raise InvariantError("uncovered vertices stray beyond the error neighborhood")
    comps, _ = _error_components(g, errors)
    out: set[int] = set()
    for comp in comps:
        local_target = uncovered & comp
        if not local_target:
            continue
        for u in local_target:
            if not g.closed_neighborhood(u) <= comp:
                raise InvariantError(f"closed neighborhood of {u} crosses component boundary")
        out |= minimum_dominating_set(g.induced(comp), local_target, budget=budget)
    return frozenset(out)


@dataclass(frozen=True)
class BRunResult:
    """Everything one composition run produced."""

    output: VertexSet
    errors: ErrorSetReport
    filtered: VertexSet  # sub-algorithm output minus the error set
    repair: VertexSet
    ledger: RoundLedger


def algorithm_b(g: LabeledGraph, cfg: BConfig, *, budget: int = DEFAULT_BUDGET) -> BRunResult:
    """Run the composition: detect, filter, repair."""
    report = error_set(g, cfg)
    sub_output = _vertex_set(g, cfg.sub.run(g), f"{cfg.sub.name} output")
    filtered = sub_output - report.errors
    repaired = repair_step(g, filtered, report.errors, budget=budget)
    ledger = RoundLedger(view_collection=report.radius + 1, repair=report.delta + 1)
    return BRunResult(filtered | repaired, report, filtered, repaired, ledger)


@dataclass(frozen=True)
class BoundedColoring:
    """A coloring of `colored` whose monochromatic components should stay
    within weak diameter `bound` measured in `host`."""

    colors: Mapping[int, int]
    host: LabeledGraph
    colored: LabeledGraph
    num_colors: int
    bound: int


@dataclass(frozen=True)
class ColoringCheck:
    ok: bool
    worst_color: int | None
    worst_component: VertexSet | None
    worst_weak_diameter: int


def check_bounded_coloring(c: BoundedColoring) -> ColoringCheck:
    """Verify the weak-diameter bound; report the extremal component.

    The extremal component is the violating one when the check fails and
    the widest one otherwise.
    """
    if c.host.labels != c.colored.labels:
        raise InputError("host and colored graphs must share one vertex set")
    if c.num_colors < 1 or c.bound < 0:
        raise InputError("need num_colors >= 1 and bound >= 0")
    for v in c.colored.labels:
        if v not in c.colors:
            raise InputError(f"vertex {v} has no color")
        if not 0 <= c.colors[v] < c.num_colors:
            raise InputError(f"color {c.colors[v]} of vertex {v} out of range")
    worst = ColoringCheck(True, None, None, 0)
    for color in range(c.num_colors):
        cls = frozenset(v for v in c.colored.labels if c.colors[v] == color)
        for comp in components(c.colored, cls):
            wd = weak_diameter(c.host, comp)
            if wd > worst.worst_weak_diameter or worst.worst_color is None:
                worst = ColoringCheck(wd <= c.bound, color, comp, wd)
    return ColoringCheck(worst.worst_weak_diameter <= c.bound, worst.worst_color, worst.worst_component, worst.worst_weak_diameter)


def check_b_uniformity(
    g: LabeledGraph,
    result: BRunResult,
    s: VertexSet,
    cfg: BConfig,
    *,
    budget: int = DEFAULT_BUDGET,
):
    """Uniformity check of a composition run at its claimed ratio."""
    from .nomination import check_uniformity

    return check_uniformity(
        g, result.output, s, cfg.sub.k, Fraction(cfg.claimed_ratio), budget=budget
    )
