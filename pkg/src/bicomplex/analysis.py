"""Theorem engines: dominated extension, separation, hyperplanes, and the
uniform-boundedness / open-mapping / inverse-mapping / closed-graph checks.

The separation path executes the gauge construction end to end: translate the
problem so the origin becomes interior (G = A - B + x0), take the hyperbolic
Minkowski gauge of G, seed a functional on the ray through x0, and extend it
one real dimension at a time under the gauge bound.  Every numeric step is an
exact rational LP, so certificates re-check by plain evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

import numpy as np

from .backend import Real
from .convex import DConvexSet, is_dabsorbing, minkowski_diff_translate, minkowski_gauge
from .errors import (
    BicomplexError,
    DegenerateBasisError,
    DegenerateFunctionalError,
    DegenerateVarietyError,
    DimensionMismatch,
    DominationError,
    EmptyFamilyError,
    NotAbsorbingError,
    NotAGraphError,
    NotBijectiveError,
    NotDisjointError,
    NotOpenError,
    NotSurjectiveError,
    ZeroDivisorLevelError,
)
from .linear import (
    BCLinearFunctional,
    BCLinearMap,
    DLinearFunctional,
    hyperbolic_functional_from_pairs,
    operator_dnorm,
    reconstruct,
)
from .lp import INFEASIBLE, UNBOUNDED, LinearProgram
from .order import le, lt_strict
from .polytope import RealPolytope, matrix_rank, solve_square
from .scalars import BicomplexScalar, ComplexScalar, HyperbolicScalar
from .vectors import DVector

# Stand-in radius when a UBP bound divides by a zero operator norm, and the
# tolerance under which singular values count as rank deficiency.
LARGE = 1e9
SIGMA_TOL = 1e-12


# -- exact linear algebra over the complex rationals -------------------------


def _rref(mat: list[list[ComplexScalar]], width: int) -> list[int]:
    """In-place reduced row echelon form on the first ``width`` columns.

    Returns the pivot column indices; entries beyond ``width`` ride along
    (augmented columns).
    """
    pivots: list[int] = []
    row = 0
    for col in range(width):
        piv = next((r for r in range(row, len(mat)) if not mat[r][col].is_zero()), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        inv = ComplexScalar(1) / mat[row][col]
        mat[row] = [e * inv for e in mat[row]]
        for r in range(len(mat)):
            if r != row and not mat[r][col].is_zero():
                factor = mat[r][col]
                mat[r] = [e - factor * p for e, p in zip(mat[r], mat[row])]
        pivots.append(col)
        row += 1
        if row == len(mat):
            break
    return pivots


def complex_rank(rows: Sequence[Sequence[ComplexScalar]]) -> int:
    if not rows:
        return 0
    mat = [list(r) for r in rows]
    return len(_rref(mat, len(mat[0])))


def complex_solve(
    rows: Sequence[Sequence[ComplexScalar]],
    rhs: Sequence[ComplexScalar],
) -> Optional[list[ComplexScalar]]:
    """Any exact solution of a rectangular system, or None when inconsistent.

    Free variables are set to zero.
    """
    if not rows:
        return []
    width = len(rows[0])
    mat = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = _rref(mat, width)
    for r in range(len(pivots), len(mat)):
        if not mat[r][width].is_zero():
            return None
    x = [ComplexScalar(0)] * width
    for r, col in enumerate(pivots):
        x[col] = mat[r][width]
    return x


def complex_invert(
    rows: Sequence[Sequence[ComplexScalar]],
) -> Optional[list[list[ComplexScalar]]]:
    n = len(rows)
    one, zero = ComplexScalar(1), ComplexScalar(0)
    mat = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(rows)]
    pivots = _rref(mat, n)
    if len(pivots) < n:
        return None
    return [row[n:] for row in mat]


def _real_solve(rows: Sequence[Sequence[Real]], rhs: Sequence[Real]) -> Optional[list[Real]]:
    sol = complex_solve(
        [[ComplexScalar(v) for v in row] for row in rows],
        [ComplexScalar(v) for v in rhs],
    )
    if sol is None:
        return None
    return [z.re for z in sol]


# -- gauge-bounded extension --------------------------------------------------


def _faces(P: RealPolytope) -> list[tuple[tuple[Fraction, ...], Fraction]]:
    """H-rep faces as exact (a, b) pairs (strictness is irrelevant to gauges)."""
    return [
        (tuple(Fraction(c) for c in hs.a), Fraction(hs.b))
        for hs in P.halfspaces()
    ]


def _max_over_body(
    faces: Sequence[tuple[tuple[Fraction, ...], Fraction]],
    span: Sequence[Sequence[Real]],
    objective: Sequence[Real],
) -> Optional[Fraction]:
    """max sum_i s_i*objective_i over {sum s_i u_i in the gauge body}.

    None signals an unbounded value (a recession direction with positive
    objective), which can only happen for unbounded bodies.
    """
    p = len(span)
    if p == 0:
        return Fraction(0)
    lp = LinearProgram(p)
    for a, b in faces:
        lp.add_le([sum(Fraction(c) * Fraction(u) for c, u in zip(a, vec)) for vec in span], b)
    lp.set_maximize(objective)
    res = lp.solve()
    if res.status == UNBOUNDED:
        return None
    if not res:
        raise BicomplexError("gauge body LP unexpectedly infeasible")
    return res.value


def _extension_interval(
    faces: Sequence[tuple[tuple[Fraction, ...], Fraction]],
    span: Sequence[Sequence[Fraction]],
    vals: Sequence[Fraction],
    xhat: Sequence[Fraction],
) -> tuple[Fraction, Fraction]:
    """The admissible value interval [lo, hi] for the next extension step.

    lo = sup_y g(y) - q(y - xhat),  hi = inf_y q(y + xhat) - g(y)
    over the current subspace; both are exact LPs with the epigraph variable t
    standing for the H-rep gauge max(0, max_i a_i.y / b_i).
    """
    p = len(span)

    def face_row(sign: int) -> LinearProgram:
        lp = LinearProgram(p + 1)
        for a, b in faces:
            row = [
                sum(c * u for c, u in zip(a, vec))
                for vec in span
            ]
            shift = sum(c * v for c, v in zip(a, xhat))
            # a.(y + sign*xhat) <= t*b
            lp.add_le(row + [-b], -sign * shift)
        lp.add_ge([0] * p + [1], 0)
        return lp

    lo_lp = face_row(-1)
    lo_lp.set_maximize(list(vals) + [-1])
    lo_res = lo_lp.solve()
    hi_lp = face_row(+1)
    hi_lp.set_minimize([-v for v in vals] + [1])
    hi_res = hi_lp.solve()
    if not lo_res or not hi_res:
        raise BicomplexError("extension interval LP failed")
    return lo_res.value, hi_res.value


def _complete_basis(span: list[list[Fraction]], n: int) -> list[int]:
    """Indices of standard basis vectors that extend span to all of R^n."""
    added = []
    current = [list(v) for v in span]
    rank = matrix_rank(current)
    for m in range(n):
        unit = [Fraction(0)] * n
        unit[m] = Fraction(1)
        if matrix_rank(current + [unit]) > rank:
            current.append(unit)
            added.append(m)
            rank += 1
        if rank == n:
            break
    return added


def _extend_component(
    faces: Sequence[tuple[tuple[Fraction, ...], Fraction]],
    basis: list[list[Fraction]],
    vals: list[Fraction],
    n: int,
    interp: Fraction,
) -> list[Fraction]:
    """One-dimension-at-a-time extension for a single component.

    Returns the coefficient vector of the extended functional on R^n.
    """
    span = [list(v) for v in basis]
    values = list(vals)
    for m in _complete_basis(span, n):
        xhat = [Fraction(0)] * n
        xhat[m] = Fraction(1)
        lo, hi = _extension_interval(faces, span, values, xhat)
        if lo > hi:
            raise BicomplexError("empty extension interval; domination was violated")
        span.append(xhat)
        values.append(lo + interp * (hi - lo))
    coeff = solve_square(span, values)
    if coeff is None:
        raise BicomplexError("extension basis became singular")
    return coeff


def extend_dominated(
    g: DLinearFunctional,
    basisY: Sequence[DVector],
    B: DConvexSet,
    interp: Fraction = Fraction(1, 2),
) -> DLinearFunctional:
    """Extend g from span(basisY) to the whole space under the gauge of B.

    The result f agrees with g on the subspace and satisfies f <=' q_B
    everywhere; the new value at each adjoined direction is chosen at the
    ``interp`` point of the admissible interval (midpoint by default).  The
    domination hypothesis g <=' q_B on the subspace is checked first by LP,
    and the global bound of the result is certified the same way before
    returning.
    """
    n = B.dim
    if g.dim != n or any(u.dim != n for u in basisY):
        raise DimensionMismatch("ambient dimensions disagree")
    if not is_dabsorbing(B):
        raise NotAbsorbingError("extension gauge needs an absorbing set")
    if not Fraction(0) <= interp <= Fraction(1):
        raise ValueError("interp must lie in [0, 1]")
    out: list[list[Fraction]] = []
    for l in (1, 2):
        span = [[Fraction(c) for c in u.part(l)] for u in basisY]
        if span and matrix_rank(span) < len(span):
            raise DegenerateBasisError(f"dependent basis in component {l}")
        coeffs = [Fraction(c) for c in g.component(l)]
        vals = [sum(c * u for c, u in zip(coeffs, vec)) for vec in span]
        faces = _faces(B.component(l))
        bound = _max_over_body(faces, span, vals)
        if bound is None or bound > 1:
            raise DominationError(f"g exceeds the gauge on Y in component {l}")
        full = _extend_component(faces, span, vals, n, interp)
        check = _max_over_body(faces, [[Fraction(1) if i == m else Fraction(0) for i in range(n)] for m in range(n)],
                               full)
        if check is None or check > 1:
            raise BicomplexError("extension failed its global gauge certificate")
        out.append(full)
    return DLinearFunctional.from_parts(out[0], out[1])


# -- hyperbolic and bicomplex separation --------------------------------------


@dataclass(frozen=True, slots=True)
class VertexCheck:
    """One verified certificate inequality at a product vertex."""

    side: str
    vertex: tuple[tuple[Real, ...], tuple[Real, ...]]
    value: HyperbolicScalar


@dataclass(frozen=True, slots=True)
class SeparationCertificate:
    """A functional/level pair with its construction trace and vertex checks.

    Every A-side check satisfies value <' gamma strictly in both components;
    every B-side check satisfies gamma <=' value.
    """

    f: DLinearFunctional
    gamma: HyperbolicScalar
    trace: dict
    checks: tuple[VertexCheck, ...]


def _overlap_witness(Pa: RealPolytope, Pb: RealPolytope, dim: int) -> Optional[tuple]:
    """A point interior to Pa and inside Pb, or None when none exists.

    Interiority on the Pa side implements openness: the LP maximizes a common
    slack t on Pa's faces, and only t > 0 counts as an intersection.  Pb may
    be lower-dimensional; its membership is encoded as a convex combination
    of vertices when a V-rep is available, avoiding any H-rep conversion.
    """
    vb = Pb.vertices() if Pb.has_vrep() else None
    k = len(vb) if vb is not None else 0
    # Variables: x (free), t (free), lambda (nonneg, V-rep route only).
    lp = LinearProgram(dim + 1 + k, nonneg=[False] * (dim + 1) + [True] * k)
    pad = [0] * k
    for a, b in _faces(Pa):
        lp.add_le(list(a) + [1] + pad, b)
    if vb is not None:
        for c in range(dim):
            row = [Fraction(1) if i == c else Fraction(0) for i in range(dim)]
            lp.add_eq(row + [0] + [-Fraction(v[c]) for v in vb], 0)
        lp.add_eq([0] * (dim + 1) + [1] * k, 1)
    else:
        for a, b in _faces(Pb):
            lp.add_le(list(a) + [0] + pad, b)
    lp.add_le([0] * dim + [1] + pad, 1)
    lp.set_maximize([0] * dim + [1] + pad)
    res = lp.solve()
    if res.status == INFEASIBLE:
        return None
    if res.status == UNBOUNDED:
        raise BicomplexError("capped slack LP cannot be unbounded")
    if res.value > 0:
        return tuple(res.x[:dim])
    return None


def _component_disjoint_or_raise(A: DConvexSet, B: DConvexSet) -> None:
    for l in (1, 2):
        witness = _overlap_witness(A.component(l), B.component(l), A.dim)
        if witness is not None:
            raise NotDisjointError(
                f"components {l} of A and B intersect",
                component=l,
                witness=witness,
            )


def _centroid(P: RealPolytope) -> tuple[Fraction, ...]:
    verts = P.vertices()
    k = Fraction(len(verts))
    return tuple(sum(Fraction(v[i]) for v in verts) / k for i in range(len(verts[0])))


def _functional_values(f: DLinearFunctional, S: DConvexSet) -> list[tuple]:
    """(vertex pair, hyperbolic value) over all product vertices of S."""
    out = []
    for v1 in S.component(1).vertices():
        x1 = f.eval_component(1, v1)
        for v2 in S.component(2).vertices():
            out.append(((v1, v2), HyperbolicScalar(x1, f.eval_component(2, v2))))
    return out


_INTERP_SCHEDULE = (
    Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1, 4), Fraction(3, 4),
)


def separate_hyperbolic(A: DConvexSet, B: DConvexSet) -> SeparationCertificate:
    """A hyperbolic separation certificate for an open A and a disjoint B.

    Runs the gauge construction: G = A - B + x0 with x0 = b0 - a0 for interior
    base points, q_G its Minkowski gauge, g(lambda*x0) = lambda on the ray,
    extended to f <=' q_G on the whole space; gamma is the componentwise
    minimum of f over B's vertices.  The returned certificate is verified
    exactly: f <' gamma at every product vertex of A and gamma <=' f(b) at
    every product vertex of B.
    """
    if not A.open:
        raise NotOpenError("strict separation needs an open first set")
    if A.dim != B.dim:
        raise DimensionMismatch("sets live in different dimensions")
    _component_disjoint_or_raise(A, B)
    a0 = DVector.from_parts(_centroid(A.component(1)), _centroid(A.component(2)))
    b0 = DVector.from_parts(_centroid(B.component(1)), _centroid(B.component(2)))
    G = minkowski_diff_translate(A, B, a0, b0)
    x0 = b0 - a0
    qg_x0 = minkowski_gauge(G, x0).hyper()
    # Seed functional: any ambient representative with g(x0) = 1 per component.
    rep = []
    for l in (1, 2):
        part = [Fraction(c) for c in x0.part(l)]
        norm_sq = sum(c * c for c in part)
        if norm_sq == 0:
            raise BicomplexError("x0 vanished in a component despite disjointness")
        rep.append([c / norm_sq for c in part])
    g = DLinearFunctional.from_parts(rep[0], rep[1])

    failure = None
    for interp in _INTERP_SCHEDULE:
        f = extend_dominated(g, [x0], G, interp=interp)
        b_values = _functional_values(f, B)
        gamma = HyperbolicScalar(
            min(v.a1 for _, v in b_values),
            min(v.a2 for _, v in b_values),
        )
        checks = []
        strict_ok = True
        for vertex, value in _functional_values(f, A):
            strict_ok = strict_ok and lt_strict(value, gamma)
            checks.append(VertexCheck("A", vertex, value))
        for vertex, value in b_values:
            if not le(gamma, value):
                raise BicomplexError("gamma exceeded a B vertex value")
            checks.append(VertexCheck("B", vertex, value))
        if strict_ok:
            trace = {
                "x0": x0,
                "G": G,
                "qg_x0": qg_x0,
                "a0": a0,
                "b0": b0,
                "interp": interp,
            }
            return SeparationCertificate(f, gamma, trace, tuple(checks))
        failure = gamma
    raise BicomplexError(
        f"no extension in the schedule gave strict vertex inequalities (gamma={failure})"
    )


def lp_separation_oracle(A: DConvexSet, B: DConvexSet) -> bool:
    """Independent componentwise check that A and B are strictly separable.

    For each component, an LP searches for a functional w with a positive gap
    between max w on A's vertices and min w on B's vertices (w is box-normalized
    to keep the program bounded).  True means both components admit a gap —
    it never looks at the certificate construction.
    """
    if A.dim != B.dim:
        raise DimensionMismatch("sets live in different dimensions")
    n = A.dim
    for l in (1, 2):
        va = A.component(l).vertices()
        vb = B.component(l).vertices()
        # Variables: w (n, free), s.  Maximize s subject to
        # w.b - w.a >= s for all vertex pairs, |w_c| <= 1.
        lp = LinearProgram(n + 1)
        for a in va:
            for b in vb:
                row = [Fraction(bc) - Fraction(ac) for ac, bc in zip(a, b)]
                lp.add_ge(row + [-1], 0)
        for c in range(n):
            unit = [Fraction(0)] * (n + 1)
            unit[c] = Fraction(1)
            lp.add_le(unit, 1)
            lp.add_ge(unit, -1)
        lp.set_maximize([0] * n + [1])
        res = lp.solve()
        if not res or res.value <= 0:
            return False
    return True


def separate_bicomplex(A: DConvexSet, B: DConvexSet) -> tuple[BCLinearFunctional, HyperbolicScalar]:
    """Separation with a BC-linear functional, via its hyperbolic part.

    The sets are read as subsets of BC^n (components carry interleaved re/im
    coordinates, so their dimension must be even).  The hyperbolic certificate
    functional f is lifted to h with h_D = f by the i-axis reconstruction;
    h_D(a) <' gamma <=' h_D(b) restates the certificate inequalities.
    """
    if A.dim % 2 or B.dim % 2:
        raise DimensionMismatch("bicomplex separation needs even real dimension")
    cert = separate_hyperbolic(A, B)
    h = reconstruct(hyperbolic_functional_from_pairs(cert.f), axis="i")
    return h, cert.gamma


# -- hyperplanes ---------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class DHyperplane:
    """The level set {x : f(x) = c} of a functional taking invertible values."""

    f: DLinearFunctional
    c: HyperbolicScalar

    def __post_init__(self):
        for l in (1, 2):
            if all(v == 0 for v in self.f.component(l)):
                raise DegenerateFunctionalError(f"zero coefficients in component {l}")

    def contains(self, x: DVector) -> bool:
        return self.f(x).isclose(self.c)

    def component_level(self, l: int) -> tuple[tuple[Real, ...], Real]:
        """The real hyperplane data (coefficients, level) of one component."""
        return self.f.component(l), (self.c.a1 if l == 1 else self.c.a2)


def hyperplane_normalize(g: DLinearFunctional, c: HyperbolicScalar) -> DHyperplane:
    """Rescale {g = c} to level-one form {f = 1}, f = g/c.

    The level must be invertible — a zero-divisor level cannot be normalized —
    and g must be componentwise nonzero so the level set is a genuine
    hyperplane pair.  Rescaling g and c by any invertible factor yields the
    same hyperplane.
    """
    if not c.is_invertible():
        raise ZeroDivisorLevelError(f"level {c} has a zero component")
    for l in (1, 2):
        if all(v == 0 for v in g.component(l)):
            raise DegenerateFunctionalError(f"zero coefficients in component {l}")
    inv = HyperbolicScalar(_recip(c.a1), _recip(c.a2))
    return DHyperplane(DLinearFunctional(g.coeffs.scale(inv)), HyperbolicScalar.one())


def _recip(v: Real) -> Real:
    return 1 / Fraction(v) if isinstance(v, (int, Fraction)) else 1.0 / v


def _hyperplane_disjoint_or_raise(B: DConvexSet, L: DHyperplane) -> None:
    n = B.dim
    for l in (1, 2):
        coeffs, level = L.component_level(l)
        lp = LinearProgram(n + 1)
        for a, b in _faces(B.component(l)):
            lp.add_le(list(a) + [1 if B.open else 0], b)
        lp.add_eq([Fraction(c) for c in coeffs] + [0], level)
        lp.add_le([0] * n + [1], 1)
        lp.set_maximize([0] * n + [1])
        res = lp.solve()
        if res.status == INFEASIBLE:
            continue
        if not res:
            raise BicomplexError("hyperplane intersection LP failed")
        if (B.open and res.value > 0) or (not B.open and res.value >= 0):
            raise NotDisjointError(
                f"hyperplane meets component {l} of the set",
                component=l,
                witness=tuple(res.x[:n]),
            )


def _grid_points(dim: int) -> list[tuple[Fraction, ...]]:
    levels = [Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(1)]
    if dim >= 3:
        levels = [Fraction(-1), Fraction(0), Fraction(1)]
    return [tuple(p) for p in product(levels, repeat=dim)]


def hyperplane_gauge_bound(B: DConvexSet, L: DHyperplane) -> DLinearFunctional:
    """The normalized functional of L, certified against the gauge of B.

    Requires B absorbing and componentwise disjoint from L.  The returned f
    has {f = 1} = L and satisfies -q_B(-x) <=' f(x) <=' q_B(x); the bound is
    verified exactly at B's vertices and on a deterministic grid, along with
    B ⊆ {f <' 1} (weak at closure vertices when B is open).
    """
    if not is_dabsorbing(B):
        raise NotAbsorbingError("gauge bound needs an absorbing set")
    normalized = hyperplane_normalize(L.f, L.c)
    _hyperplane_disjoint_or_raise(B, normalized)
    f = normalized.f
    n = B.dim
    for l in (1, 2):
        P = B.component(l)
        samples = list(P.vertices()) + _grid_points(n)
        for v in samples:
            fv = f.eval_component(l, v)
            q_plus = P.gauge_hrep(v)
            q_minus = P.gauge_hrep([-c for c in v])
            if not (-q_minus <= fv <= q_plus):
                raise BicomplexError("gauge bound check failed; construction is wrong")
        for v in P.vertices():
            fv = f.eval_component(l, v)
            if B.open:
                if fv > 1:
                    raise BicomplexError("open set escapes the unit level")
            elif fv >= 1:
                raise BicomplexError("closed set touches its separating hyperplane")
    return f


def variety_extend_hyperplane(
    x0: DVector,
    basisM: Sequence[DVector],
    B: DConvexSet,
) -> DHyperplane:
    """A hyperplane containing the variety x0 + span(basisM) with f <=' q_B.

    Per component the functional is pinned to 0 on the directions, 1 at x0,
    then extended under the gauge of B; hence L ⊆ {f = 1} exactly and
    B ⊆ {x : f(x) <=' 1}.
    """
    n = B.dim
    if x0.dim != n or any(u.dim != n for u in basisM):
        raise DimensionMismatch("ambient dimensions disagree")
    if not is_dabsorbing(B):
        raise NotAbsorbingError("variety extension needs an absorbing gauge")
    rep = []
    for l in (1, 2):
        rows = [[Fraction(c) for c in u.part(l)] for u in basisM]
        point = [Fraction(c) for c in x0.part(l)]
        if matrix_rank(rows + [point]) == matrix_rank(rows):
            raise DegenerateVarietyError(f"x0 lies in the span of M in component {l}")
        # Disjointness of the affine variety from the component set.
        lp = LinearProgram(len(rows) + n + 1)
        width = len(rows) + n + 1
        for a, b in _faces(B.component(l)):
            row = [Fraction(0)] * len(rows) + list(a) + [1 if B.open else 0]
            lp.add_le(row, b)
        for i in range(n):
            row = [vec[i] for vec in rows] + [
                Fraction(-1) if j == i else Fraction(0) for j in range(n)
            ] + [0]
            lp.add_eq(row, -point[i])
        lp.add_le([0] * (width - 1) + [1], 1)
        lp.set_maximize([0] * (width - 1) + [1])
        res = lp.solve()
        if res.status != INFEASIBLE:
            if not res:
                raise BicomplexError("variety intersection LP failed")
            if (B.open and res.value > 0) or (not B.open and res.value >= 0):
                witness = tuple(res.x[len(rows):len(rows) + n])
                raise NotDisjointError(
                    f"variety meets component {l} of the set",
                    component=l,
                    witness=witness,
                )
        sol = _real_solve(rows + [point], [Fraction(0)] * len(rows) + [Fraction(1)])
        if sol is None:
            raise BicomplexError("variety seed system was inconsistent")
        rep.append(sol)
    g = DLinearFunctional.from_parts(rep[0], rep[1])
    f = extend_dominated(g, list(basisM) + [x0], B)
    return DHyperplane(f, HyperbolicScalar.one())


# -- uniform boundedness, open/inverse mapping, closed graph -------------------


@dataclass(frozen=True, slots=True)
class MapFamily:
    """A finite indexed family of maps with common domain and codomain."""

    maps: tuple[BCLinearMap, ...]

    def __post_init__(self):
        if self.maps:
            rows, cols = self.maps[0].rows, self.maps[0].cols
            for T in self.maps:
                if T.rows != rows or T.cols != cols:
                    raise DimensionMismatch("family members differ in shape")


@dataclass(frozen=True, slots=True)
class OpenMapBound:
    """delta >' 0 such that T(open unit ball) contains the open delta-ball."""

    delta: HyperbolicScalar


def ubp_bound(F: MapFamily, eps: HyperbolicScalar) -> tuple[HyperbolicScalar, HyperbolicScalar]:
    """The uniform bound M = sup over the family of |T|_D, and delta = eps/M.

    Whenever |x|_D <' delta, every member satisfies |T x|_D <' eps.  A zero
    component of M imposes no constraint; its delta component is the LARGE
    stand-in rather than infinity.
    """
    if not F.maps:
        raise EmptyFamilyError("no maps in the family")
    if not (eps.in_plus_cone() and eps.is_invertible()):
        raise ValueError("eps must be >' 0")
    norms = [operator_dnorm(T) for T in F.maps]
    m1 = max(v.a1 for v in norms)
    m2 = max(v.a2 for v in norms)
    d1 = float(eps.a1) / m1 if m1 > 0 else LARGE
    d2 = float(eps.a2) / m2 if m2 > 0 else LARGE
    return HyperbolicScalar(m1, m2), HyperbolicScalar(d1, d2)


def _component_scalar_rows(T: BCLinearMap, l: int) -> list[list[ComplexScalar]]:
    return T.component(l)


def omt_delta(T: BCLinearMap) -> OpenMapBound:
    """The open-mapping radius: delta_l is the smallest singular value of T_l.

    Surjectivity per component is decided first by exact row rank; singular
    values below the rank tolerance are rejected rather than reported.
    """
    for l in (1, 2):
        if complex_rank(_component_scalar_rows(T, l)) < T.rows:
            raise NotSurjectiveError(f"component {l} has deficient row rank", component=l)
    sigmas = []
    for l in (1, 2):
        s = np.linalg.svd(T.component_array(l), compute_uv=False)
        smallest = float(s[T.rows - 1])
        if smallest < SIGMA_TOL:
            raise NotSurjectiveError(
                f"component {l} is numerically rank deficient", component=l
            )
        sigmas.append(smallest)
    return OpenMapBound(HyperbolicScalar(sigmas[0], sigmas[1]))


def inverse_map(T: BCLinearMap) -> tuple[BCLinearMap, HyperbolicScalar]:
    """The exact inverse of a componentwise-invertible square map, with bound.

    T * inverse is the identity exactly in the exact backend; the continuity
    bound is the operator norm of the inverse (float spectral norms).
    """
    if T.rows != T.cols:
        raise NotBijectiveError("map is not square", component=None)
    inverses = []
    for l in (1, 2):
        inv = complex_invert(_component_scalar_rows(T, l))
        if inv is None:
            raise NotBijectiveError(f"component {l} is singular", component=l)
        inverses.append(inv)
    n = T.rows
    matrix = tuple(
        tuple(BicomplexScalar(inverses[0][r][c], inverses[1][r][c]) for c in range(n))
        for r in range(n)
    )
    T_inv = BCLinearMap(matrix)
    return T_inv, operator_dnorm(T_inv)


def map_from_graph(basisG: Sequence, n: int) -> BCLinearMap:
    """Recover T from a spanning set of its graph in BC^n x BC^m.

    The span is a graph over BC^n iff, per component, the first-block rows
    have full rank n and adjoining the second block adds no rank (no vertical
    directions).  T is then solved exactly column by column.
    """
    if not basisG:
        raise NotAGraphError("empty spanning set")
    total = basisG[0].dim
    if total <= n:
        raise DimensionMismatch("graph vectors must have dim n + m with m >= 1")
    m = total - n
    columns: list[list[list[ComplexScalar]]] = []
    for l in (1, 2):
        pick = (lambda Z: Z.z1) if l == 1 else (lambda Z: Z.z2)
        U = [[pick(v.coords[i]) for i in range(n)] for v in basisG]
        V = [[pick(v.coords[n + i]) for i in range(m)] for v in basisG]
        rank_u = complex_rank(U)
        if rank_u < n:
            raise NotAGraphError(f"projection to BC^n is not surjective in component {l}")
        joint = [u + v for u, v in zip(U, V)]
        if complex_rank(joint) > rank_u:
            raise NotAGraphError(f"vertical vector present in component {l}")
        # Solve sum_b c_b u_b = e_i and read off the image column sum_b c_b v_b.
        A = [[U[b][i] for b in range(len(basisG))] for i in range(n)]
        cols = []
        for i in range(n):
            rhs = [ComplexScalar(1) if r == i else ComplexScalar(0) for r in range(n)]
            c = complex_solve(A, rhs)
            if c is None:
                raise NotAGraphError("column solve failed despite full rank")
            col = []
            for j in range(m):
                acc = ComplexScalar(0)
                for b, cb in enumerate(c):
                    acc = acc + cb * V[b][j]
                col.append(acc)
            cols.append(col)
        columns.append(cols)
    matrix = tuple(
        tuple(BicomplexScalar(columns[0][i][j], columns[1][i][j]) for i in range(n))
        for j in range(m)
    )
    return BCLinearMap(matrix)
