"""Cubic Hermite splines under interchangeable tangent-selection strategies.

Interior tangents come from one of four rules: the chord rule
(Catmull-Rom), the tension-scaled chord (Cardinal), the Kochanek-Bartels
blend, or the tangent of the minimum-energy quadratic through each triple
of consecutive points.  A single tangent per knot is shared by adjoining
segments, so every spline here is C1.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import CollinearPoints, DomainError, TooFewPoints
from .geometry import Point2, Vec2
from .minquad import build_solution, tangent_at_p2


@dataclass(frozen=True)
class MinEnergyQuad:
    """Tangents from the minimum-energy quadratic through each point triple."""


@dataclass(frozen=True)
class CatmullRom:
    """Chord tangents (p_next - p_prev) / (t_next - t_prev)."""


@dataclass(frozen=True)
class Cardinal:
    """Chord tangents scaled by (1 - tension)."""

    tension: float = 0.0


@dataclass(frozen=True)
class KochanekBartels:
    """Tension / bias / continuity blend of the two adjacent chords.

    Implemented exactly as the comparison tables were produced: no knot-span
    divisor, so knot spacing does not enter.  This differs from some KB
    formulations in the literature.
    """

    tension: float = 0.0
    bias: float = 0.0
    continuity: float = 0.0


TangentMethod = Union[MinEnergyQuad, CatmullRom, Cardinal, KochanekBartels]

# Parameter presets matching the published method comparison.
COMPARISON_METHODS: tuple[tuple[str, TangentMethod], ...] = (
    ("min-energy", MinEnergyQuad()),
    ("catmull-rom", CatmullRom()),
    ("cardinal(t=0.1)", Cardinal(tension=0.1)),
    ("cardinal(t=0.5)", Cardinal(tension=0.5)),
    ("kochanek-bartels(b=0.5)", KochanekBartels(bias=0.5)),
    ("kochanek-bartels(b=-0.5)", KochanekBartels(bias=-0.5)),
)


def tangent_catmull_rom(p_prev: Point2, p_next: Point2, t_prev: float, t_next: float) -> Vec2:
    if not t_next > t_prev:
        raise DomainError("knot values must increase")
    return (p_next - p_prev) / (t_next - t_prev)


def tangent_cardinal(p_prev: Point2, p_next: Point2, t_prev: float, t_next: float,
                     tension: float) -> Vec2:
    return tangent_catmull_rom(p_prev, p_next, t_prev, t_next) * (1.0 - tension)


def tangent_kochanek_bartels(p_prev: Point2, p_i: Point2, p_next: Point2,
                             tension: float, bias: float, continuity: float) -> Vec2:
    w_in = (1.0 - tension) * (1.0 + bias) * (1.0 + continuity) * 0.5
    w_out = (1.0 - tension) * (1.0 - bias) * (1.0 - continuity) * 0.5
    return (p_i - p_prev) * w_in + (p_next - p_i) * w_out


def tangent_min_energy(p_prev: Point2, p_i: Point2, p_next: Point2,
                       t_prev: float, t_next: float) -> Vec2:
    """Tangent of the minimum-energy quadratic at p_i, rescaled by the knot span.

    Raises CollinearPoints for degenerate triples; callers wanting the chord
    fallback use build_spline.
    """
    if not t_next > t_prev:
        raise DomainError("knot values must increase")
    sol = build_solution(p_prev, p_i, p_next)
    return tangent_at_p2(sol) / (t_next - t_prev)


def hermite_eval(p_a: Point2, p_b: Point2, v_a: Vec2, v_b: Vec2, t: float) -> Vec2:
    """Cubic Hermite basis evaluation on the unit interval."""
    t2 = t * t
    t3 = t2 * t
    return (p_a * (2.0 * t3 - 3.0 * t2 + 1.0) + p_b * (-2.0 * t3 + 3.0 * t2)
            + v_a * (t3 - 2.0 * t2 + t) + v_b * (t3 - t2))


def uniform_knots(n: int) -> tuple[float, ...]:
    """Knots t_i = i - 1 in 1-based terms, i.e. 0, 1, ..., n-1."""
    return tuple(float(i) for i in range(n))


def chord_length_knots(points: Sequence[Point2]) -> tuple[float, ...]:
    """Cumulative chord-length knots starting at 0."""
    knots = [0.0]
    for a, b in zip(points, points[1:]):
        step = (b - a).norm()
        if step == 0.0:
            raise DomainError("repeated point makes chord-length knots non-increasing")
        knots.append(knots[-1] + step)
    return tuple(knots)


def _validate_knots(knots: Sequence[float], n: int) -> tuple[float, ...]:
    knots = tuple(float(t) for t in knots)
    if len(knots) != n:
        raise DomainError(f"knot count {len(knots)} != point count {n}")
    if any(b <= a for a, b in zip(knots, knots[1:])):
        raise DomainError("knot values must be strictly increasing")
    return knots


class HermiteSegmentCurve:
    """CurveEvaluator for one spline segment over its global knot interval.

    Derivatives carry the 1 / (t_b - t_a) chain-rule factors, so fairness
    integrals taken in the global parameter match the knot convention.
    """

    def __init__(self, p_a: Point2, p_b: Point2, v_a: Vec2, v_b: Vec2,
                 t_a: float, t_b: float):
        self.t_a = t_a
        self.t_b = t_b
        self.span = t_b - t_a
        # Local cubic c0 + c1 s + c2 s^2 + c3 s^3 with m = span * v (local tangents).
        m_a = v_a * self.span
        m_b = v_b * self.span
        self.c0 = p_a
        self.c1 = m_a
        self.c2 = (p_b - p_a) * 3.0 - m_a * 2.0 - m_b
        self.c3 = (p_a - p_b) * 2.0 + m_a + m_b

    def _local(self, t: float) -> float:
        return (t - self.t_a) / self.span

    def position(self, t: float) -> Vec2:
        s = self._local(t)
        return ((self.c3 * s + self.c2) * s + self.c1) * s + self.c0

    def first_derivative(self, t: float) -> Vec2:
        s = self._local(t)
        return ((self.c3 * (3.0 * s) + self.c2 * 2.0) * s + self.c1) / self.span

    def second_derivative(self, t: float) -> Vec2:
        s = self._local(t)
        return (self.c3 * (6.0 * s) + self.c2 * 2.0) / (self.span * self.span)

    def third_derivative(self, t: float) -> Vec2:
        return self.c3 * (6.0 / self.span ** 3)


@dataclass(frozen=True)
class HermiteSpline:
    """Interpolating C1 spline: points, knots, and one tangent per point.

    Tangents are derivatives with respect to the global knot parameter.
    """

    points: tuple[Point2, ...]
    knots: tuple[float, ...]
    tangents: tuple[Vec2, ...]
    method: TangentMethod

    @property
    def segment_count(self) -> int:
        return len(self.points) - 1

    def segment_evaluator(self, i: int) -> HermiteSegmentCurve:
        """Evaluator for segment i (0-based, over [knots[i], knots[i+1]])."""
        if not 0 <= i < self.segment_count:
            raise IndexError(f"segment index {i} out of range [0, {self.segment_count})")
        return HermiteSegmentCurve(self.points[i], self.points[i + 1],
                                   self.tangents[i], self.tangents[i + 1],
                                   self.knots[i], self.knots[i + 1])

    def evaluate(self, t: float) -> Vec2:
        if not self.knots[0] <= t <= self.knots[-1]:
            raise DomainError(f"parameter {t} outside [{self.knots[0]}, {self.knots[-1]}]")
        i = bisect.bisect_right(self.knots, t) - 1
        i = min(max(i, 0), self.segment_count - 1)
        span = self.knots[i + 1] - self.knots[i]
        s = (t - self.knots[i]) / span
        return hermite_eval(self.points[i], self.points[i + 1],
                            self.tangents[i] * span, self.tangents[i + 1] * span, s)


def middle_segment_index(n_points: int) -> int:
    """Index of the middle segment, the one metrics are reported over."""
    return (n_points - 2) // 2


def _interior_tangent(method: TangentMethod, p_prev: Point2, p_i: Point2, p_next: Point2,
                      t_prev: float, t_next: float) -> Vec2:
    if isinstance(method, MinEnergyQuad):
        try:
            return tangent_min_energy(p_prev, p_i, p_next, t_prev, t_next)
        except CollinearPoints:
            # Straight chord is the zero-energy limit of the quadratic.
            return tangent_catmull_rom(p_prev, p_next, t_prev, t_next)
    if isinstance(method, CatmullRom):
        return tangent_catmull_rom(p_prev, p_next, t_prev, t_next)
    if isinstance(method, Cardinal):
        return tangent_cardinal(p_prev, p_next, t_prev, t_next, method.tension)
    if isinstance(method, KochanekBartels):
        return tangent_kochanek_bartels(p_prev, p_i, p_next,
                                        method.tension, method.bias, method.continuity)
    raise TypeError(f"unknown tangent method {method!r}")


def _endpoint_tangents(method: TangentMethod, points: Sequence[Point2],
                       knots: Sequence[float]) -> tuple[Vec2, Vec2]:
    n = len(points)
    first_chord = (points[1] - points[0]) / (knots[1] - knots[0])
    last_chord = (points[-1] - points[-2]) / (knots[-1] - knots[-2])
    if not isinstance(method, MinEnergyQuad) or n < 3:
        return first_chord, last_chord
    try:
        sol = build_solution(points[0], points[1], points[2])
        first = sol.curve.velocity(0.0) / (knots[2] - knots[0])
    except CollinearPoints:
        first = first_chord
    try:
        sol = build_solution(points[-3], points[-2], points[-1])
        last = sol.curve.velocity(1.0) / (knots[-1] - knots[-3])
    except CollinearPoints:
        last = last_chord
    return first, last


def build_spline(points: Sequence[Point2], knots: Sequence[float],
                 method: TangentMethod) -> HermiteSpline:
    """Assign tangents per the chosen method and assemble the spline.

    Interior tangents follow the method; endpoint tangents are one-sided
    chords for the classical methods and the end tangents of the boundary
    minimum-energy quadratics (scaled by the outer knot span) for the
    min-energy method.  Collinear triples under the min-energy method fall
    back to the chord tangent.
    """
    points = tuple(points)
    if len(points) < 2:
        raise TooFewPoints(f"need at least 2 points, got {len(points)}")
    knots = _validate_knots(knots, len(points))

    first, last = _endpoint_tangents(method, points, knots)
    tangents = [first]
    for i in range(1, len(points) - 1):
        tangents.append(_interior_tangent(method, points[i - 1], points[i], points[i + 1],
                                          knots[i - 1], knots[i + 1]))
    tangents.append(last)
    return HermiteSpline(points=points, knots=knots, tangents=tuple(tangents), method=method)
