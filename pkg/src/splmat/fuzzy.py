"""Exact piecewise-linear fuzzy set algebra on the 0..50 score scale.

Sets are stored as ordered breakpoints and every operation (clipping,
union, defuzzification) inserts the exact intersection points it needs,
so results carry no discretization error.
"""
from __future__ import annotations

import bisect
from dataclasses import dataclass
from functools import lru_cache

SCALE_MIN = 0.0
SCALE_MAX = 50.0

# Absolute tolerance for breakpoint normalization and approximate equality.
TOL = 1e-9


class EmptySetError(ValueError):
    """Raised when defuzzifying a set with zero area (no rule fired)."""


@dataclass(frozen=True)
class PiecewiseLinearSet:
    """Fuzzy set given by ordered (x, mu) breakpoints.

    Membership is linear between consecutive breakpoints and constant,
    at the first/last mu value, outside them.  Breakpoints are strictly
    increasing in x and all mu values lie in [0, 1].
    """

    breakpoints: tuple[tuple[float, float], ...]

    def __post_init__(self):
        pts = tuple((float(x), float(mu)) for x, mu in self.breakpoints)
        object.__setattr__(self, "breakpoints", pts)
        if len(pts) < 2:
            raise ValueError("a piecewise-linear set needs at least 2 breakpoints")
        for (x1, _), (x2, _) in zip(pts, pts[1:]):
            if not x2 > x1:
                raise ValueError(f"breakpoints not strictly increasing: {x1} then {x2}")
        for x, mu in pts:
            if not SCALE_MIN <= x <= SCALE_MAX:
                raise ValueError(f"breakpoint x={x} outside [{SCALE_MIN}, {SCALE_MAX}]")
            if not 0.0 <= mu <= 1.0:
                raise ValueError(f"membership {mu} outside [0, 1]")

    def membership(self, x: float) -> float:
        """Membership degree at x; exact at breakpoints."""
        pts = self.breakpoints
        if x <= pts[0][0]:
            return pts[0][1]
        if x >= pts[-1][0]:
            return pts[-1][1]
        xs = [p[0] for p in pts]
        i = bisect.bisect_left(xs, x)
        if xs[i] == x:
            return pts[i][1]
        x1, m1 = pts[i - 1]
        x2, m2 = pts[i]
        return m1 + (m2 - m1) * (x - x1) / (x2 - x1)

    def __call__(self, x: float) -> float:
        return self.membership(x)

    def approx_equal(self, other: "PiecewiseLinearSet", tol: float = TOL) -> bool:
        """Breakpoint-wise equality within an absolute tolerance on x and mu."""
        if len(self.breakpoints) != len(other.breakpoints):
            return False
        return all(
            abs(x1 - x2) <= tol and abs(m1 - m2) <= tol
            for (x1, m1), (x2, m2) in zip(self.breakpoints, other.breakpoints)
        )

    def support_hull(self) -> tuple[float, float]:
        """Smallest closed interval containing all points with mu > 0."""
        pts = self.breakpoints
        idx = [i for i, (_, mu) in enumerate(pts) if mu > 0.0]
        if not idx:
            raise EmptySetError("set is identically zero")
        i0, i1 = idx[0], idx[-1]
        lo = pts[i0 - 1][0] if i0 > 0 else pts[0][0]
        hi = pts[i1 + 1][0] if i1 < len(pts) - 1 else pts[-1][0]
        return lo, hi


def zero_set() -> PiecewiseLinearSet:
    """The identically-zero set over the whole scale."""
    return PiecewiseLinearSet(((SCALE_MIN, 0.0), (SCALE_MAX, 0.0)))


@dataclass(frozen=True)
class Trapezoid:
    """Trapezoid shape parameters a <= b <= c <= d on the score scale.

    Degenerate ramps follow the shoulder rule: a == b means the left
    edge is a shoulder (membership 1 at and left of a), c == d likewise
    on the right.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        if not SCALE_MIN <= self.a <= self.b <= self.c <= self.d <= SCALE_MAX:
            raise ValueError(f"require {SCALE_MIN} <= a <= b <= c <= d <= {SCALE_MAX}, got {self}")

    def to_set(self) -> PiecewiseLinearSet:
        """Convert to breakpoints, applying the shoulder rule."""
        pts: list[tuple[float, float]] = []
        if self.a == self.b:
            pts.append((self.a, 1.0))
        else:
            pts.append((self.a, 0.0))
            pts.append((self.b, 1.0))
        if self.c > self.b:
            pts.append((self.c, 1.0))
        if self.d > self.c:
            pts.append((self.d, 0.0))
        if len(pts) < 2:
            raise ValueError(f"fully degenerate trapezoid {self}")
        return PiecewiseLinearSet(tuple(pts))

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)


def trapezoid_membership(x: float, t: Trapezoid) -> float:
    """Membership of x in trapezoid t, with the degenerate-ramp shoulder rule."""
    if x < t.a:
        return 1.0 if t.a == t.b else 0.0
    if x < t.b:
        return (x - t.a) / (t.b - t.a)
    if x <= t.c:
        return 1.0
    if x < t.d:
        return (t.d - x) / (t.d - t.c)
    return 1.0 if t.c == t.d else 0.0


@dataclass(frozen=True)
class LinguisticVariable:
    """Named universe with an ordered map of term name to fuzzy set.

    Instances are treated as immutable after construction; do not mutate
    the terms mapping.
    """

    name: str
    terms: dict[str, PiecewiseLinearSet]
    universe: tuple[float, float] = (SCALE_MIN, SCALE_MAX)

    def __post_init__(self):
        if not self.terms:
            raise ValueError(f"variable {self.name!r} has no terms")
        lo, hi = self.universe
        for term, s in self.terms.items():
            for x, _ in s.breakpoints:
                if not lo <= x <= hi:
                    raise ValueError(f"term {term!r} breakpoint x={x} outside universe")
        self._check_coverage()

    def _check_coverage(self):
        # For piecewise-linear terms the max-envelope can only reach zero on
        # a whole refined segment, so probing every breakpoint plus the
        # universe edges is an exact coverage test.
        xs = {x for s in self.terms.values() for x, _ in s.breakpoints}
        xs.update(self.universe)
        for x in sorted(xs):
            if all(s.membership(x) <= 0.0 for s in self.terms.values()):
                raise ValueError(f"variable {self.name!r} leaves x={x} uncovered")

    def membership(self, term: str, x: float) -> float:
        return self.terms[term].membership(x)

    def fuzzify(self, x: float) -> dict[str, float]:
        """All term membership degrees at a crisp point."""
        return {term: s.membership(x) for term, s in self.terms.items()}

    def term_names(self) -> tuple[str, ...]:
        return tuple(self.terms)


INPUT_TERMS: dict[str, Trapezoid] = {
    "No": Trapezoid(0.0, 0.0, 16.5, 21.5),
    "Partial": Trapezoid(16.5, 21.5, 33.0, 38.0),
    "Yes": Trapezoid(33.0, 38.0, 50.0, 50.0),
}

OUTPUT_TERMS: dict[str, Trapezoid] = {
    "Very Low": Trapezoid(0.0, 0.0, 10.0, 15.0),
    "Low": Trapezoid(10.0, 15.0, 20.0, 25.0),
    "Medium": Trapezoid(20.0, 25.0, 30.0, 35.0),
    "High": Trapezoid(30.0, 35.0, 40.0, 45.0),
    "Very High": Trapezoid(40.0, 45.0, 50.0, 50.0),
}


@lru_cache(maxsize=1)
def make_input_variable() -> LinguisticVariable:
    """The three-term answer variable: No, Partial, Yes."""
    return LinguisticVariable(
        "input", {name: t.to_set() for name, t in INPUT_TERMS.items()}
    )


@lru_cache(maxsize=1)
def make_output_variable() -> LinguisticVariable:
    """The five-term maturity variable: Very Low through Very High."""
    return LinguisticVariable(
        "output", {name: t.to_set() for name, t in OUTPUT_TERMS.items()}
    )


def _normalize(points: list[tuple[float, float]]) -> tuple[tuple[float, float], ...]:
    """Merge near-duplicate x values and drop collinear interior points.

    The span endpoints always survive, and points merge only when close
    in both coordinates, so near-vertical edges keep their shape.
    """

    def near(p, q):
        return abs(p[0] - q[0]) <= TOL and abs(p[1] - q[1]) <= TOL

    last = points[-1]
    merged = [points[0]]
    for point in points[1:-1]:
        if near(point, merged[-1]) or near(point, last):
            continue
        if point[0] <= merged[-1][0]:
            # rounding collapsed a crossing onto the previous x across a
            # near-vertical edge; keep the directly evaluated degree,
            # except at the span start whose value anchors the extension
            if len(merged) > 1:
                merged[-1] = point
            continue
        merged.append(point)
    if last[0] <= merged[-1][0]:
        merged[-1] = last
    else:
        merged.append(last)
    out = [merged[0]]
    for i in range(1, len(merged) - 1):
        x0, m0 = out[-1]
        x1, m1 = merged[i]
        x2, m2 = merged[i + 1]
        interp = m0 + (m2 - m0) * (x1 - x0) / (x2 - x0)
        if abs(m1 - interp) <= TOL:
            continue
        out.append((x1, m1))
    out.append(merged[-1])
    return tuple(out)


def clip(s: PiecewiseLinearSet, alpha: float) -> PiecewiseLinearSet:
    """Pointwise min(mu, alpha) with exact intersection breakpoints."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"clip level {alpha} outside [0, 1]")
    bp = s.breakpoints
    pts = [(bp[0][0], min(bp[0][1], alpha))]
    for (x1, y1), (x2, y2) in zip(bp, bp[1:]):
        if (y1 - alpha) * (y2 - alpha) < 0.0:
            xc = x1 + (alpha - y1) * (x2 - x1) / (y2 - y1)
            pts.append((xc, alpha))
        pts.append((x2, min(y2, alpha)))
    return PiecewiseLinearSet(_normalize(pts))


def union(s1: PiecewiseLinearSet, s2: PiecewiseLinearSet) -> PiecewiseLinearSet:
    """Pointwise max with crossing breakpoints inserted exactly."""
    xs = sorted({x for x, _ in s1.breakpoints} | {x for x, _ in s2.breakpoints})
    pts: list[tuple[float, float]] = []
    prev: tuple[float, float, float] | None = None
    for x in xs:
        m1 = s1.membership(x)
        m2 = s2.membership(x)
        if prev is not None:
            px, p1, p2 = prev
            d_prev = p1 - p2
            d_here = m1 - m2
            if d_prev * d_here < 0.0:
                # both sets are linear between refined breakpoints, so they
                # cross at most once strictly inside the interval; evaluating
                # the crossing degree through max() keeps union symmetric
                t = d_prev / (d_prev - d_here)
                xc = px + t * (x - px)
                mc = max(s1.membership(xc), s2.membership(xc))
                pts.append((xc, mc))
        pts.append((x, max(m1, m2)))
        prev = (x, m1, m2)
    return PiecewiseLinearSet(_normalize(pts))


def centroid(s: PiecewiseLinearSet) -> float:
    """Center of gravity, integrated exactly segment by segment.

    Raises EmptySetError when the set has zero area, which signals that
    no rule fired.
    """
    area = 0.0
    moment = 0.0
    for (x1, y1), (x2, y2) in zip(s.breakpoints, s.breakpoints[1:]):
        w = x2 - x1
        area += w * (y1 + y2) / 2.0
        moment += w * (x1 * (2.0 * y1 + y2) + x2 * (y1 + 2.0 * y2)) / 6.0
    if area <= 0.0:
        raise EmptySetError("set has zero area, nothing to defuzzify")
    return moment / area
