"""Planar vectors and the similarity normalization of point triples.

A triple (p1, p2, p3) is mapped by translate / scale / rotate into the
canonical frame where p1 lands on the origin and p3 on (1, 0); the image
of p2 is the only remaining degree of freedom and everything downstream
(the cubic solve, the minimizing parameter) depends on it alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CoincidentEndpoints, CollinearPoints

# Scale-invariant thresholds; see the docstring of normalize_triple.
COLLINEAR_REL_TOL = 1e-9
COINCIDENT_REL_TOL = 1e-12


@dataclass(frozen=True)
class Vec2:
    """Immutable planar vector / point with finite coordinates."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinates ({self.x}, {self.y})")

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __mul__(self, s: float) -> "Vec2":
        return Vec2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> "Vec2":
        return Vec2(self.x / s, self.y / s)

    def __neg__(self) -> "Vec2":
        return Vec2(-self.x, -self.y)

    def dot(self, other: "Vec2") -> float:
        return self.x * other.x + self.y * other.y

    def norm2(self) -> float:
        return self.x * self.x + self.y * self.y

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)


# Points and displacement vectors share the representation.
Point2 = Vec2


def cross2(u: Vec2, v: Vec2) -> float:
    """Signed scalar cross product u.x * v.y - u.y * v.x."""
    return u.x * v.y - u.y * v.x


@dataclass(frozen=True)
class NormalizedTriple:
    """Similarity frame carrying a triple to the canonical position.

    q2 is the canonical image of the middle point.  The frame maps
    p -> rotation @ ((p - translation) / scale), so p1 -> (0,0) and
    p3 -> (1,0) by construction.  rotation is stored as the row pair
    ((c, s), (-s, c)) of an orientation-preserving orthogonal matrix.
    """

    q2: Vec2
    translation: Vec2
    scale: float
    rotation: tuple[tuple[float, float], tuple[float, float]]

    def to_canonical(self, p: Vec2) -> Vec2:
        d = (p - self.translation) / self.scale
        (a, b), (c, dd) = self.rotation
        return Vec2(a * d.x + b * d.y, c * d.x + dd * d.y)

    def from_canonical(self, q: Vec2) -> Vec2:
        # Inverse of an orthogonal matrix is its transpose.
        (a, b), (c, dd) = self.rotation
        d = Vec2(a * q.x + c * q.y, b * q.x + dd * q.y)
        return d * self.scale + self.translation


def normalize_triple(p1: Point2, p2: Point2, p3: Point2) -> NormalizedTriple:
    """Build the canonical frame for a non-collinear triple.

    Raises CoincidentEndpoints when |p3 - p1| <= 1e-12 times the largest
    coordinate magnitude, and CollinearPoints when
    |cross2(p2 - p1, p3 - p1)| <= 1e-9 * |p3 - p1|^2.
    """
    s3 = p3 - p1
    max_mag = max(abs(v) for p in (p1, p2, p3) for v in (p.x, p.y))
    if s3.norm() <= COINCIDENT_REL_TOL * max(max_mag, 1e-300):
        raise CoincidentEndpoints(f"|p3 - p1| = {s3.norm():g} is below tolerance")
    if abs(cross2(p2 - p1, s3)) <= COLLINEAR_REL_TOL * s3.norm2():
        raise CollinearPoints(f"triple {p1.as_tuple()}, {p2.as_tuple()}, {p3.as_tuple()} is collinear")

    scale = s3.norm()
    # Rotation built directly from the scaled endpoint, no angle extraction.
    c = s3.x / scale
    s = s3.y / scale
    rotation = ((c, s), (-s, c))
    frame = NormalizedTriple(q2=Vec2(0.0, 0.0), translation=p1, scale=scale, rotation=rotation)
    q2 = frame.to_canonical(p2)
    return NormalizedTriple(q2=q2, translation=p1, scale=scale, rotation=rotation)
