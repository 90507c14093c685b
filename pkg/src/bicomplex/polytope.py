"""Exact real polytope geometry: V-rep/H-rep, conversions, gauges.

Everything here works over exact rationals (float inputs are converted to
their exact binary values), so hulls, conversions, memberships and gauges
are certificate-grade.  V↔H conversion is deliberately limited to full
dimension <= 3 — the scale the rest of the library needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, inf
from typing import Iterable, Optional, Sequence

from .backend import Real, rdiv, rle, rlt
from .errors import (
    DimensionMismatch,
    EmptySetError,
    LPUnboundedError,
    NotAbsorbingError,
)
from .lp import OPTIMAL, UNBOUNDED, LinearProgram

Point = tuple[Real, ...]


@dataclass(frozen=True, slots=True)
class Halfspace:
    """The constraint a·x <= b (or < b when strict)."""

    a: tuple[Real, ...]
    b: Real
    strict: bool = False

    def holds(self, point: Sequence[Real]) -> bool:
        v = _dot(self.a, point)
        return rlt(v, self.b) if self.strict else rle(v, self.b)


# -- exact linear algebra ---------------------------------------------------


def _dot(a: Sequence[Real], b: Sequence[Real]) -> Real:
    return sum(x * y for x, y in zip(a, b))


def _frac_point(p: Sequence[Real]) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in p)


def solve_square(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Optional[list[Fraction]]:
    """Solve A x = b exactly; None when A is singular."""
    n = len(b)
    M = [[Fraction(v) for v in row] + [Fraction(rhs)] for row, rhs in zip(A, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        inv = M[col][col]
        M[col] = [v / inv for v in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [v - f * w for v, w in zip(M[r], M[col])]
    return [M[r][n] for r in range(n)]


def matrix_rank(rows: Iterable[Sequence[Fraction]]) -> int:
    work = [list(map(Fraction, r)) for r in rows]
    rank, col = 0, 0
    ncols = len(work[0]) if work else 0
    while rank < len(work) and col < ncols:
        piv = next((r for r in range(rank, len(work)) if work[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = work[rank][col]
        work[rank] = [v / inv for v in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col] != 0:
                f = work[r][col]
                work[r] = [v - f * w for v, w in zip(work[r], work[rank])]
        rank += 1
        col += 1
    return rank


def affine_rank(points: Sequence[Point]) -> int:
    """Dimension of the affine hull of the points."""
    pts = [_frac_point(p) for p in points]
    if len(pts) <= 1:
        return 0
    base = pts[0]
    return matrix_rank([[x - y for x, y in zip(p, base)] for p in pts[1:]])


def _primitive(vals: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector (same direction)."""
    denoms = [v.denominator for v in vals]
    scale = 1
    for d in denoms:
        scale = scale * d // gcd(scale, d)
    ints = [int(v * scale) for v in vals]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints)


# -- hull machinery ---------------------------------------------------------


def point_in_hull(point: Sequence[Real], vertices: Sequence[Point]) -> bool:
    """Exact membership of a point in the convex hull of finitely many points."""
    if not vertices:
        return False
    p = _frac_point(point)
    verts = [_frac_point(v) for v in vertices]
    dim = len(p)
    lp = LinearProgram(len(verts), nonneg=True)
    for c in range(dim):
        lp.add_eq([v[c] for v in verts], p[c])
    lp.add_eq([1] * len(verts), 1)
    return lp.solve().status == OPTIMAL


def _lex_argmax(points: Sequence[Point], form: Sequence[int]) -> Point:
    """The lexicographically largest maximizer of form . x — always extreme."""
    return max(points, key=lambda p: (_dot(form, p), p))


def _probe_forms(dim: int) -> list[tuple[int, ...]]:
    forms: list[tuple[int, ...]] = []
    for c in range(dim):
        e = [0] * dim
        e[c] = 1
        forms.append(tuple(e))
        e2 = [0] * dim
        e2[c] = -1
        forms.append(tuple(e2))
    if dim <= 4:
        from itertools import product as _product

        forms.extend(t for t in _product((1, -1), repeat=dim))
    return forms


def extreme_points(points: Sequence[Point]) -> list[Point]:
    """The extreme points of the convex hull, deterministically ordered.

    Dimensions 1 and 2 are closed-form (interval ends, monotone chain).
    Higher dimensions seed the hull with lexicographic maximizers of a probe
    set of linear forms (each provably extreme), discard everything inside
    their hull with small membership LPs, and confirm the survivors against
    the reduced pool only.
    """
    unique: list[Point] = []
    seen = set()
    for p in points:
        fp = _frac_point(p)
        if fp not in seen:
            seen.add(fp)
            unique.append(fp)
    if not unique:
        return []
    dim = len(unique[0])
    if len(unique) == 1:
        return unique

    if dim == 1:
        lo = min(unique)
        hi = max(unique)
        return [lo, hi] if lo != hi else [lo]

    if dim == 2:
        return _convex_hull_2d(unique)

    seeds: list[Point] = []
    seed_set = set()
    for form in _probe_forms(dim):
        p = _lex_argmax(unique, form)
        if p not in seed_set:
            seed_set.add(p)
            seeds.append(p)

    survivors = [
        p for p in unique
        if p not in seed_set and not point_in_hull(p, seeds)
    ]
    pool = seeds + survivors
    keep = list(seeds)
    for p in survivors:
        others = [q for q in pool if q != p]
        if not point_in_hull(p, others):
            keep.append(p)
    return keep


def _convex_hull_2d(points: Sequence[Point]) -> list[Point]:
    """Monotone chain; returns hull vertices counter-clockwise."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return list(pts)

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


# -- V <-> H conversion (full-dimensional, dim <= 3) ------------------------


def facet_enumeration(vertices: Sequence[Point], dim: int) -> list[Halfspace]:
    """Facets of a full-dimensional polytope from its points (dim <= 3)."""
    verts = [_frac_point(v) for v in vertices]
    if not verts:
        raise EmptySetError("no vertices")
    if dim > 3:
        raise DimensionMismatch("V->H conversion supports dim <= 3 only")
    if affine_rank(verts) < dim:
        raise DimensionMismatch("V->H conversion needs a full-dimensional polytope")

    if dim == 1:
        xs = [v[0] for v in verts]
        return [Halfspace((Fraction(1),), max(xs)), Halfspace((Fraction(-1),), -min(xs))]

    if dim == 2:
        hull = _convex_hull_2d(verts)
        faces = []
        for t in range(len(hull)):
            p, q = hull[t], hull[(t + 1) % len(hull)]
            d = (q[0] - p[0], q[1] - p[1])
            a = (d[1], -d[0])  # outward normal for a CCW hull
            n = _primitive(a)
            faces.append(Halfspace(tuple(Fraction(v) for v in n), _dot(n, p)))
        return faces

    faces: dict[tuple, Halfspace] = {}
    for i, j, k in combinations(range(len(verts)), 3):
        p, q, r = verts[i], verts[j], verts[k]
        u = [q[c] - p[c] for c in range(3)]
        w = [r[c] - p[c] for c in range(3)]
        n = (
            u[1] * w[2] - u[2] * w[1],
            u[2] * w[0] - u[0] * w[2],
            u[0] * w[1] - u[1] * w[0],
        )
        if n == (0, 0, 0):
            continue
        d = _dot(n, p)
        side_le = all(_dot(n, v) <= d for v in verts)
        side_ge = all(_dot(n, v) >= d for v in verts)
        if side_le:
            a = _primitive([Fraction(x) for x in n])
            key = (a, Fraction(_dot(a, p)))
            faces.setdefault(key, Halfspace(tuple(Fraction(v) for v in a), key[1]))
        if side_ge:
            a = _primitive([Fraction(-x) for x in n])
            key = (a, Fraction(_dot(a, p)))
            faces.setdefault(key, Halfspace(tuple(Fraction(v) for v in a), key[1]))
    return list(faces.values())


def vertex_enumeration(halfspaces: Sequence[Halfspace], dim: int) -> list[Point]:
    """Vertices of a bounded H-rep polytope (dim <= 3), ignoring strict flags."""
    if dim > 3:
        raise DimensionMismatch("H->V conversion supports dim <= 3 only")
    faces = [(tuple(Fraction(x) for x in h.a), Fraction(h.b)) for h in halfspaces]

    for c in range(dim):
        for sign in (1, -1):
            lp = LinearProgram(dim)
            for a, b in faces:
                lp.add_le(a, b)
            obj = [0] * dim
            obj[c] = sign
            lp.set_maximize(obj)
            if lp.solve().status == UNBOUNDED:
                raise LPUnboundedError("polytope is unbounded")

    def feasible(p):
        return all(_dot(a, p) <= b for a, b in faces)

    candidates: set[tuple[Fraction, ...]] = set()
    if dim == 1:
        los = [b / a[0] for a, b in faces if a[0] < 0]
        his = [b / a[0] for a, b in faces if a[0] > 0]
        lo = max(los) if los else None
        hi = min(his) if his else None
        if lo is None or hi is None or lo > hi:
            if lo is not None and hi is not None and lo > hi:
                raise EmptySetError("empty polytope")
            raise LPUnboundedError("polytope is unbounded")
        candidates.update({(lo,), (hi,)})
    else:
        for combo in combinations(faces, dim):
            A = [list(a) for a, _ in combo]
            b = [b for _, b in combo]
            x = solve_square(A, b)
            if x is not None and feasible(x):
                candidates.add(tuple(x))
    if not candidates:
        raise EmptySetError("empty polytope")
    return extreme_points(sorted(candidates))


# -- the polytope type ------------------------------------------------------


class RealPolytope:
    """A polytope with V-rep and/or H-rep, converting lazily (dim <= 3).

    The stored representations always describe the closed set; openness is
    a property of the containing DConvexSet (plus per-face strict flags on
    H-rep input).
    """

    def __init__(self, dim: int, vertices: Optional[Sequence[Point]] = None,
                 halfspaces: Optional[Sequence[Halfspace]] = None):
        if dim < 1:
            raise DimensionMismatch("dim must be >= 1")
        if vertices is None and halfspaces is None:
            raise EmptySetError("polytope needs at least one representation")
        if vertices is not None:
            if not vertices:
                raise EmptySetError("V-rep must be nonempty")
            for v in vertices:
                if len(v) != dim:
                    raise DimensionMismatch("vertex length != dim")
        if halfspaces is not None:
            for h in halfspaces:
                if len(h.a) != dim:
                    raise DimensionMismatch("halfspace normal length != dim")
        self.dim = dim
        self._vertices = tuple(tuple(v) for v in vertices) if vertices is not None else None
        self._halfspaces = tuple(halfspaces) if halfspaces is not None else None

    @classmethod
    def from_vertices(cls, vertices: Sequence[Point]) -> RealPolytope:
        if not vertices:
            raise EmptySetError("V-rep must be nonempty")
        return cls(len(vertices[0]), vertices=vertices)

    @classmethod
    def from_halfspaces(cls, halfspaces: Sequence[Halfspace], dim: int) -> RealPolytope:
        return cls(dim, halfspaces=halfspaces)

    @classmethod
    def box(cls, dim: int, lo: Real, hi: Real) -> RealPolytope:
        faces = []
        for c in range(dim):
            a = [0] * dim
            a[c] = 1
            faces.append(Halfspace(tuple(a), hi))
            a = [0] * dim
            a[c] = -1
            faces.append(Halfspace(tuple(a), -lo))
        return cls(dim, halfspaces=faces)

    @classmethod
    def whole_space(cls, dim: int) -> RealPolytope:
        return cls(dim, halfspaces=[])

    # -- representations ----------------------------------------------

    def has_vrep(self) -> bool:
        return self._vertices is not None

    def has_hrep(self) -> bool:
        return self._halfspaces is not None

    def vertices(self) -> tuple[Point, ...]:
        if self._vertices is None:
            self._vertices = tuple(vertex_enumeration(self._halfspaces, self.dim))
        return self._vertices

    def halfspaces(self) -> tuple[Halfspace, ...]:
        if self._halfspaces is None:
            self._halfspaces = tuple(facet_enumeration(self._vertices, self.dim))
        return self._halfspaces

    # -- queries --------------------------------------------------------

    def contains(self, point: Sequence[Real]) -> bool:
        """Closed membership, except that strict H-rep faces stay strict."""
        if len(point) != self.dim:
            raise DimensionMismatch("point length != dim")
        if self._halfspaces is not None:
            return all(h.holds(point) for h in self._halfspaces)
        return point_in_hull(point, self._vertices)

    def interior_contains(self, point: Sequence[Real]) -> bool:
        """Membership in the interior of the closure."""
        if len(point) != self.dim:
            raise DimensionMismatch("point length != dim")
        return all(rlt(_dot(h.a, point), h.b) for h in self.halfspaces())

    def origin_interior(self) -> bool:
        """Is 0 an interior point?  Uses H-rep when available, else a V-rep LP."""
        if self._halfspaces is not None:
            return all(rlt(0, h.b) for h in self._halfspaces)
        verts = [_frac_point(v) for v in self._vertices]
        if affine_rank(verts) < self.dim:
            return False
        # 0 is interior iff no nonzero w satisfies w·v <= 0 for all vertices
        lp = LinearProgram(self.dim)
        total = [Fraction(0)] * self.dim
        for v in verts:
            lp.add_le(v, 0)
            total = [t + x for t, x in zip(total, v)]
        for c in range(self.dim):
            e = [0] * self.dim
            e[c] = 1
            lp.add_le(e, 1)
            e[c] = -1
            lp.add_le(e, 1)
        lp.set_minimize(total)  # minimize sum of w·v over vertices
        res = lp.solve()
        return res.status == OPTIMAL and res.value == 0

    def support(self, direction: Sequence[Real]) -> tuple[Real, Point]:
        """max a·x over the closed polytope, with a maximizing point."""
        if self._vertices is not None:
            best = None
            arg = None
            for v in self._vertices:
                val = _dot(direction, v)
                if best is None or val > best:
                    best, arg = val, v
            return best, arg
        lp = LinearProgram(self.dim)
        for h in self.halfspaces():
            lp.add_le(h.a, h.b)
        lp.set_maximize(direction)
        res = lp.solve()
        if res.status == UNBOUNDED:
            raise LPUnboundedError("support is unbounded")
        if res.status != OPTIMAL:
            raise EmptySetError("empty polytope")
        return res.value, tuple(res.x)

    def translate(self, shift: Sequence[Real]) -> RealPolytope:
        if self._vertices is not None:
            verts = [tuple(x + s for x, s in zip(v, shift)) for v in self._vertices]
            return RealPolytope(self.dim, vertices=verts)
        faces = [
            Halfspace(h.a, h.b + _dot(h.a, shift), h.strict) for h in self.halfspaces()
        ]
        return RealPolytope(self.dim, halfspaces=faces)

    # -- gauges -----------------------------------------------------------

    def gauge_hrep(self, point: Sequence[Real]) -> Real:
        """Closed-form gauge max(0, max_i (a_i·x)/b_i); needs all b_i > 0."""
        best: Real = 0
        for h in self.halfspaces():
            if not rlt(0, h.b):
                raise NotAbsorbingError("gauge formula requires 0 in the interior")
            val = rdiv(_dot(h.a, point), h.b)
            if val > best:
                best = val
        return best

    def gauge_vrep(self, point: Sequence[Real]) -> Real:
        """Gauge by LP: min sum(mu) with sum(mu_i v_i) = x, mu >= 0."""
        verts = [_frac_point(v) for v in self.vertices()]
        p = _frac_point(point)
        lp = LinearProgram(len(verts), nonneg=True)
        for c in range(self.dim):
            lp.add_eq([v[c] for v in verts], p[c])
        lp.set_minimize([1] * len(verts))
        res = lp.solve()
        if res.status != OPTIMAL:
            return inf
        return res.value
