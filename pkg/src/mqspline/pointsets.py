"""Built-in benchmark point sets and the published middle-segment metrics."""

from __future__ import annotations

from .geometry import Vec2

POINT_SET_1 = (Vec2(0, 0), Vec2(1, 3), Vec2(2, 1), Vec2(3, 2))
POINT_SET_2 = (Vec2(0, 0), Vec2(0, 3), Vec2(3, 3), Vec2(3, 0))
POINT_SET_3 = (Vec2(0, 0), Vec2(1, 0), Vec2(2, 0), Vec2(3, 3))
POINT_SET_4 = (Vec2(0, 0), Vec2(1, 0), Vec2(2, 1), Vec2(3, 3))

BENCHMARK_SETS: dict[str, tuple[Vec2, ...]] = {
    "set1": POINT_SET_1,
    "set2": POINT_SET_2,
    "set3": POINT_SET_3,
    "set4": POINT_SET_4,
}

# Published middle-segment (E, V) per set and method, for comparison output.
# Method keys match spline.COMPARISON_METHODS.
PUBLISHED_METRICS: dict[str, dict[str, tuple[float, float]]] = {
    "set1": {
        "min-energy": (6.83, 465.0),
        "catmull-rom": (13.46, 1742.0),
        "cardinal(t=0.1)": (16.90, 2684.0),
        "cardinal(t=0.5)": (71.53, 41012.0),
        "kochanek-bartels(b=0.5)": (15.73, 2689.0),
        "kochanek-bartels(b=-0.5)": (9.41, 943.0),
    },
    "set2": {
        "min-energy": (0.50, 25.6),
        "catmull-rom": (0.50, 25.6),
        "cardinal(t=0.1)": (0.66, 55.0),
        "cardinal(t=0.5)": (3.65, 2194.0),
        "kochanek-bartels(b=0.5)": (0.85, 15.1),
        "kochanek-bartels(b=-0.5)": (0.85, 15.1),
    },
    "set3": {
        "min-energy": (0.49, 14.6),
        "catmull-rom": (4.00, 81.6),
        "cardinal(t=0.1)": (3.69, 78.6),
        "cardinal(t=0.5)": (4.93, 404.0),
        "kochanek-bartels(b=0.5)": (1.57, 16.4),
        "kochanek-bartels(b=-0.5)": (6.62, 212.0),
    },
    "set4": {
        "min-energy": (0.45, 3.0),
        "catmull-rom": (0.17, 0.3),
        "cardinal(t=0.1)": (0.19, 1.8),
        "cardinal(t=0.5)": (0.90, 351.0),
        "kochanek-bartels(b=0.5)": (0.69, 10.2),
        "kochanek-bartels(b=-0.5)": (0.12, 1.1),
    },
}
