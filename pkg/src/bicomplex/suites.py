"""Deterministic property-test suites with machine-readable reports.

Each suite draws its instances from a :class:`random.Random` seeded with the
suite name and the user seed, runs ``cases`` independent cases, and collects
failure records (inputs, the expected relation, the observed values).  A
report with an empty failure list is a pass.

Scalar- and vector-level suites honor the float backend by converting the
drawn instances to floats (comparisons then go through the epsilon-tolerant
backend helpers).  The LP-driven geometry suites always construct their
certificates in exact arithmetic — that is what makes them certificates —
and note the requested backend in the report only.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from random import Random
from typing import Callable, Optional

import numpy as np

from . import scalars
from .backend import EPSILON, EXACT, FLOAT, Real, req
from .convex import (
    DConvexSet,
    dconvex_hull,
    is_dabsorbing,
    is_dconvex,
    minkowski_gauge,
    minkowski_diff_translate,
)
from .errors import (
    BicomplexError,
    ConstantComponentError,
    DegenerateFunctionalError,
    DominationError,
    NonPositiveBoundError,
    NotACoverError,
    NotAbsorbingError,
    NotAGraphError,
    NotBijectiveError,
    NotDisjointError,
    NotSurjectiveError,
    NullConeError,
    ZeroDivisorLevelError,
)
from . import generators as gen
from .analysis import (
    MapFamily,
    extend_dominated,
    hyperplane_gauge_bound,
    hyperplane_normalize,
    inverse_map,
    lp_separation_oracle,
    map_from_graph,
    omt_delta,
    separate_bicomplex,
    separate_hyperbolic,
    ubp_bound,
    variety_extend_hyperplane,
)
from .linear import (
    BCLinearFunctional,
    BCLinearMap,
    DLinearFunctional,
    FunctionalForm,
    functional_dbound,
    hyperbolic_part,
    hyperbolic_part_of_value,
    hyperbolic_functional_from_pairs,
    image_convex,
    operator_dnorm,
    reconstruct,
)
from .metric import (
    DBall,
    ball_contains,
    ball_in_rect,
    baire_witness,
    check_exact_cover,
    dmetric,
    dmetric_bc,
    dnorm,
    dnorm_bc,
)
from .order import OrderResult, compare, inf_d, is_d_bounded, le, lt_strict, sup_d
from .polytope import RealPolytope
from .scalars import (
    BicomplexScalar,
    ComplexScalar,
    ConjugationKind,
    HyperbolicScalar,
    bc_from_w,
    bc_inverse,
    conjugate,
    dnorm_k_sq,
    is_zero_divisor,
    modulus,
)
from .vectors import BCVector, DVector

SUITE_NAMES = (
    "algebra",
    "order",
    "metric",
    "linear",
    "convex",
    "separation",
    "theorems",
)


@dataclass
class SuiteReport:
    """Outcome of one suite run; an empty failure list means it passed."""

    suite: str
    seed: int
    cases: int
    backend: str
    failures: list
    wall_time_s: float

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "cases": self.cases,
            "backend": self.backend,
            "failures": self.failures,
            "wall_time_s": self.wall_time_s,
        }

    def text(self) -> str:
        status = "PASS" if self.ok else f"FAIL ({len(self.failures)} failures)"
        lines = [
            f"suite={self.suite} cases={self.cases} seed={self.seed} "
            f"backend={self.backend} time={self.wall_time_s:.2f}s ... {status}"
        ]
        for rec in self.failures[:20]:
            lines.append(
                f"  case {rec['case']}: {rec['property']}: expected {rec['expected']}; "
                f"observed {rec['observed']} [inputs: {rec['inputs']}]"
            )
        if len(self.failures) > 20:
            lines.append(f"  ... and {len(self.failures) - 20} more")
        return "\n".join(lines)


class _Recorder:
    """Collects failures; check() guards a predicate, expect_raises an error."""

    def __init__(self):
        self.failures: list = []
        self.case = 0

    def check(self, ok: bool, prop: str, inputs, expected, observed) -> bool:
        if not ok:
            self.failures.append(
                {
                    "case": self.case,
                    "property": prop,
                    "inputs": repr(inputs),
                    "expected": str(expected),
                    "observed": repr(observed),
                }
            )
        return ok

    def expect_raises(self, exc_type, prop: str, inputs, thunk: Callable) -> None:
        try:
            value = thunk()
        except exc_type:
            return
        except BicomplexError as other:
            self.check(False, prop, inputs, exc_type.__name__, type(other).__name__)
            return
        self.check(False, prop, inputs, exc_type.__name__, f"no error; got {value!r}")

    def guard(self, prop: str, inputs, thunk: Callable):
        """Run thunk, recording an unexpected exception as a failure."""
        try:
            return thunk()
        except Exception as exc:  # noqa: BLE001 - suites must not crash
            self.check(False, prop, inputs, "no exception", f"{type(exc).__name__}: {exc}")
            return None


# -- backend coercion ------------------------------------------------------------


def _h_cast(a: HyperbolicScalar, backend: str) -> HyperbolicScalar:
    if backend == EXACT:
        return a
    return HyperbolicScalar(float(a.a1), float(a.a2))


def _c_cast(z: ComplexScalar, backend: str) -> ComplexScalar:
    if backend == EXACT:
        return z
    return ComplexScalar(float(z.re), float(z.im))


def _bc_cast(Z: BicomplexScalar, backend: str) -> BicomplexScalar:
    if backend == EXACT:
        return Z
    return BicomplexScalar(_c_cast(Z.z1, backend), _c_cast(Z.z2, backend))


def _dv_cast(x: DVector, backend: str) -> DVector:
    if backend == EXACT:
        return x
    return DVector(tuple(_h_cast(h, backend) for h in x.coords))


def _bcv_cast(x: BCVector, backend: str) -> BCVector:
    if backend == EXACT:
        return x
    return BCVector(tuple(_bc_cast(Z, backend) for Z in x.coords))


def _h_eq(a: HyperbolicScalar, b: HyperbolicScalar) -> bool:
    return req(a.a1, b.a1) and req(a.a2, b.a2)


def _bc_eq(a: BicomplexScalar, b: BicomplexScalar) -> bool:
    return (
        req(a.z1.re, b.z1.re)
        and req(a.z1.im, b.z1.im)
        and req(a.z2.re, b.z2.re)
        and req(a.z2.im, b.z2.im)
    )


def _rng(name: str, seed: int) -> Random:
    return Random(f"{name}:{seed}")


# -- algebra ---------------------------------------------------------------------


def suite_algebra(seed: int, cases: int, backend: str = EXACT) -> SuiteReport:
    """Ring laws, the conjugation table, moduli, units, and inverses."""
    start = time.perf_counter()
    rng = _rng("algebra", seed)
    rec = _Recorder()
    one = BicomplexScalar.one()
    zero = BicomplexScalar.zero()
    k = BicomplexScalar.unit_k()
    e1 = HyperbolicScalar.e1().to_bicomplex()
    e2 = HyperbolicScalar.e2().to_bicomplex()

    # unit table: constant inputs, so once per run (still through the module
    # attribute, so a patched product is what gets tested)
    mul = scalars.bc_mul
    kk = mul(k, k)
    rec.check(_bc_eq(kk, one), "k-squared", k, "one", kk)
    rec.check(_bc_eq(k, e1 - e2), "k-idempotent-form", k, "e1 - e2", e1 - e2)
    e1e2 = mul(e1, e2)
    rec.check(_bc_eq(e1e2, zero), "idempotent-orthogonal", (e1, e2), "zero", e1e2)
    e1e1 = mul(e1, e1)
    rec.check(_bc_eq(e1e1, e1), "idempotent-e1", e1, "e1", e1e1)

    for idx in range(cases):
        rec.case = idx
        Z = _bc_cast(gen.rand_bicomplex(rng), backend)
        W = _bc_cast(gen.rand_bicomplex(rng), backend)
        V = _bc_cast(gen.rand_bicomplex(rng), backend)
        ins = (Z, W, V)

        # additive group
        sum_zw = Z + W
        assoc_l, assoc_r = sum_zw + V, Z + (W + V)
        rec.check(_bc_eq(assoc_l, assoc_r), "add-associative", ins, "equal", (assoc_l, assoc_r))
        sum_wz = W + Z
        rec.check(_bc_eq(sum_zw, sum_wz), "add-commutative", ins, "equal", (sum_zw, sum_wz))
        plus_zero = Z + zero
        rec.check(_bc_eq(plus_zero, Z), "add-identity", Z, "equal", plus_zero)
        minus_self = Z - Z
        rec.check(minus_self.is_zero() if backend == EXACT else _bc_eq(minus_self, zero),
                  "add-inverse", Z, "zero", minus_self)

        # multiplicative monoid
        mul = scalars.bc_mul
        zw, wz = mul(Z, W), mul(W, Z)
        rec.check(_bc_eq(zw, wz), "mul-commutative", ins, "equal", (zw, wz))
        massoc_l, massoc_r = mul(zw, V), mul(Z, mul(W, V))
        rec.check(_bc_eq(massoc_l, massoc_r), "mul-associative", ins, "equal", (massoc_l, massoc_r))
        one_z = mul(one, Z)
        rec.check(_bc_eq(one_z, Z), "mul-identity", Z, "equal", one_z)
        dist_l, dist_r = mul(Z, W + V), zw + mul(Z, V)
        rec.check(_bc_eq(dist_l, dist_r), "distributive", ins, "equal", (dist_l, dist_r))

        # conjugation table: involutions, products, composition
        for kind in ConjugationKind:
            twice = conjugate(conjugate(Z, kind), kind)
            rec.check(_bc_eq(twice, Z), f"involution-{kind.value}", Z, "identity", twice)
            conj_of_prod = conjugate(zw, kind)
            prod_of_conj = mul(conjugate(Z, kind), conjugate(W, kind))
            rec.check(
                _bc_eq(conj_of_prod, prod_of_conj),
                f"conjugation-multiplicative-{kind.value}", (Z, W), "equal", conj_of_prod,
            )
        composed = conjugate(conjugate(Z, ConjugationKind.DAGGER1), ConjugationKind.DAGGER2)
        d3 = conjugate(Z, ConjugationKind.DAGGER3)
        rec.check(
            _bc_eq(composed, d3),
            "dagger1-then-dagger2-is-dagger3", Z, "equal", (composed, d3),
        )

        # moduli: Z * Z^dagger3 = |Z|^2_k and multiplicativity of |.|_k^2
        mk = modulus(Z, "k")
        z_d3 = mul(Z, d3)
        rec.check(_bc_eq(mk, z_d3), "modulus-k-definition", Z, "equal", mk)
        prod_sq = dnorm_k_sq(zw)
        split_sq = dnorm_k_sq(Z) * dnorm_k_sq(W)
        rec.check(_h_eq(prod_sq, split_sq), "norm-k-multiplicative", (Z, W), "equal", (prod_sq, split_sq))
        mk_hyp = mk.hyp_part()
        rec.check(le(HyperbolicScalar.zero(), mk_hyp), "modulus-k-nonnegative", Z, ">=' 0", mk_hyp)

        # inverses off the null cone; zero divisors on it
        if Z.is_invertible():
            z_zinv = mul(Z, bc_inverse(Z))
            rec.check(_bc_eq(z_zinv, one), "inverse-law", Z, "one", z_zinv)
        D = _bc_cast(gen.rand_zero_divisor(rng), backend)
        rec.check(is_zero_divisor(D), "null-cone-detected", D, "True", is_zero_divisor(D))
        rec.expect_raises(NullConeError, "null-cone-inverse-rejected", D, lambda: bc_inverse(D))
        opposite = BicomplexScalar(ComplexScalar(0), D.z1) if D.z2.is_zero() else BicomplexScalar(D.z2, ComplexScalar(0))
        annihilated = mul(D, opposite)
        rec.check(annihilated.is_zero(), "complementary-divisors-annihilate", (D, opposite), "zero", annihilated)

        # w-coordinates round trip
        w_back = bc_from_w(Z.w1, Z.w2)
        rec.check(_bc_eq(w_back, Z), "w-roundtrip", Z, "equal", w_back)

        # hyperbolic subring
        a = _h_cast(gen.rand_hyperbolic(rng), backend)
        b = _h_cast(gen.rand_hyperbolic(rng), backend)
        ab, ba = a * b, b * a
        rec.check(_h_eq(ab, ba), "hyperbolic-commutative", (a, b), "equal", (ab, ba))
        absk_prod = ab.abs_k()
        absk_split = a.abs_k() * b.abs_k()
        rec.check(_h_eq(absk_prod, absk_split), "hyperbolic-absk-multiplicative",
                  (a, b), "equal", (absk_prod, absk_split))
        emb = mul(a.to_bicomplex(), b.to_bicomplex())
        rec.check(_bc_eq(ab.to_bicomplex(), emb), "hyperbolic-embedding", (a, b), "equal", emb)

    return SuiteReport("algebra", seed, cases, backend, rec.failures, time.perf_counter() - start)


# -- order -----------------------------------------------------------------------


def suite_order(seed: int, cases: int, backend: str = EXACT) -> SuiteReport:
    """Partial-order axioms, four-way comparison, sup/inf, boundedness."""
    start = time.perf_counter()
    rng = _rng("order", seed)
    rec = _Recorder()
    zero = HyperbolicScalar.zero()

    for idx in range(cases):
        rec.case = idx
        a = _h_cast(gen.rand_hyperbolic(rng), backend)
        step1 = _h_cast(HyperbolicScalar(gen.rand_fraction(rng, 0, 2), gen.rand_fraction(rng, 0, 2)), backend)
        step2 = _h_cast(HyperbolicScalar(gen.rand_fraction(rng, 0, 2), gen.rand_fraction(rng, 0, 2)), backend)
        b = a + step1
        c = b + step2
        x = _h_cast(gen.rand_hyperbolic(rng), backend)

        rec.check(le(a, a), "reflexive", a, "a <=' a", le(a, a))
        rec.check(le(a, b), "chain-le-1", (a, b), "a <=' a+p", le(a, b))
        rec.check(le(a, c), "transitive", (a, b, c), "a <=' c", le(a, c))
        if le(a, x) and le(x, a):
            rec.check(_h_eq(a, x), "antisymmetric", (a, x), "equal", (a, x))

        # compare() agrees with le / lt_strict
        cmp_ab = compare(a, b)
        rec.check(
            cmp_ab in (OrderResult.LESS, OrderResult.EQUAL),
            "compare-chain", (a, b), "LESS or EQUAL", cmp_ab,
        )
        cmp_ax = compare(a, x)
        if cmp_ax is OrderResult.INCOMPARABLE:
            rec.check(
                not le(a, x) and not le(x, a),
                "incomparable-consistent", (a, x), "neither <='", (le(a, x), le(x, a)),
            )
        if lt_strict(a, x):
            rec.check(le(a, x) and not _h_eq(a, x), "strict-implies-weak", (a, x), "<=' and !=", cmp_ax)

        # translation and positive-scaling invariance
        rec.check(le(a + x, b + x) == le(a, b), "translation-invariant", (a, b, x), "same truth", le(a + x, b + x))
        lam = _h_cast(gen.rand_positive_hyperbolic(rng), backend)
        rec.check(le(lam * a, lam * b) == le(a, b), "positive-scaling", (a, b, lam), "same truth", le(lam * a, lam * b))

        # sup / inf on a finite set
        S = [_h_cast(gen.rand_hyperbolic(rng), backend) for _ in range(2 + idx % 4)]
        s, i = sup_d(S), inf_d(S)
        rec.check(all(le(v, s) for v in S), "sup-upper-bound", S, "all <=' sup", s)
        rec.check(all(le(i, v) for v in S), "inf-lower-bound", S, "inf <=' all", i)
        rec.check(
            req(s.a1, max(v.a1 for v in S)) and req(s.a2, max(v.a2 for v in S)),
            "sup-least", S, "componentwise max", s,
        )
        rec.check(
            req(i.a1, min(v.a1 for v in S)) and req(i.a2, min(v.a2 for v in S)),
            "inf-greatest", S, "componentwise min", i,
        )

        # boundedness against the componentwise absolute values
        m = sup_d([v.abs_k() for v in S])
        bound = m + HyperbolicScalar.one()
        rec.check(is_d_bounded(S, bound), "bounded-above-sup", (S, bound), "True", is_d_bounded(S, bound))
        if lt_strict(zero, m):  # only a >' 0 value is a legal bound
            rec.check(not is_d_bounded(S, m) or all(lt_strict(v.abs_k(), m) for v in S),
                      "bound-strictness", (S, m), "strict below only", is_d_bounded(S, m))
        rec.expect_raises(
            NonPositiveBoundError, "nonpositive-bound-rejected", S,
            lambda: is_d_bounded(S, zero),
        )

    return SuiteReport("order", seed, cases, backend, rec.failures, time.perf_counter() - start)


# -- metric ----------------------------------------------------------------------


def suite_metric(seed: int, cases: int, backend: str = EXACT) -> SuiteReport:
    """D-metric axioms, ball strictness, and the nested-ball cover harness.

    Every tenth case runs the rectangle-cover pipeline: an exact partition is
    verified and a witness ball produced; a punctured copy must be rejected
    with a witness point.
    """
    start = time.perf_counter()
    rng = _rng("metric", seed)
    rec = _Recorder()

    for idx in range(cases):
        rec.case = idx
        dim = 1 + idx % 4
        x = _dv_cast(gen.rand_dvector(rng, dim), backend)
        y = _dv_cast(gen.rand_dvector(rng, dim), backend)
        z = _dv_cast(gen.rand_dvector(rng, dim), backend)

        zero_v = DVector.zero(dim)
        rec.check(_h_eq(dnorm(zero_v), HyperbolicScalar.zero()), "norm-of-zero", dim, "0", dnorm(zero_v))
        rec.check(
            le(HyperbolicScalar.zero(), dmetric(x, y)), "metric-nonnegative", (x, y), ">=' 0", dmetric(x, y)
        )
        rec.check(_h_eq(dmetric(x, y), dmetric(y, x)), "metric-symmetric", (x, y), "equal", dmetric(y, x))
        rec.check(_h_eq(dmetric(x, x), HyperbolicScalar.zero()), "metric-identity", x, "0", dmetric(x, x))
        triangle = dmetric(x, y) + dmetric(y, z)
        rec.check(le(dmetric(x, z), triangle), "triangle", (x, y, z), "<='", (dmetric(x, z), triangle))
        rec.check(
            _h_eq(dmetric(x + z, y + z), dmetric(x, y)),
            "translation-invariant", (x, y, z), "equal", dmetric(x + z, y + z),
        )
        lam = _h_cast(gen.rand_positive_hyperbolic(rng), backend)
        rec.check(
            _h_eq(dnorm(x.scale(lam)), lam * dnorm(x)),
            "positive-homogeneous", (x, lam), "equal", (dnorm(x.scale(lam)), lam * dnorm(x)),
        )

        u = _bcv_cast(gen.rand_bcvector(rng, dim), backend)
        v = _bcv_cast(gen.rand_bcvector(rng, dim), backend)
        w = _bcv_cast(gen.rand_bcvector(rng, dim), backend)
        tri_bc = dmetric_bc(u, v) + dmetric_bc(v, w)
        rec.check(le(dmetric_bc(u, w), tri_bc), "bc-triangle", (u, v, w), "<='", (dmetric_bc(u, w), tri_bc))
        rec.check(_h_eq(dnorm_bc(u.scale(-1)), dnorm_bc(u)), "bc-norm-even", u, "equal", dnorm_bc(u.scale(-1)))

        # ball strictness: boundary points are outside, interior points inside
        r = HyperbolicScalar(Fraction(3, 2), Fraction(1, 2))
        ball = DBall(x if backend == EXACT else _dv_cast(x, backend), _h_cast(r, backend))
        inner = x + DVector.of(*([HyperbolicScalar.zero()] * (dim - 1) + [HyperbolicScalar(Fraction(1, 2), Fraction(1, 4))]))
        rec.check(ball_contains(ball, _dv_cast(inner, backend)), "ball-interior", (ball, inner), "True", True)
        edge = x + DVector.of(*([HyperbolicScalar.zero()] * (dim - 1) + [r]))
        if backend == EXACT:
            rec.check(not ball_contains(ball, edge), "ball-boundary-strict", (ball, edge), "False", ball_contains(ball, edge))

        if idx % 10 == 0:
            cover, bounding = gen.rand_cover(Random(f"cover:{seed}:{idx}"), 5)
            inputs = (cover, bounding)
            rec.guard("cover-verifies", inputs, lambda: check_exact_cover(cover, bounding))
            got = rec.guard("baire-witness", inputs, lambda: baire_witness(cover, bounding))
            if got is not None:
                n, ball = got
                rec.check(0 <= n < len(cover), "witness-index", inputs, "valid index", n)
                rec.check(ball_in_rect(ball, cover[n]), "witness-ball-inside", (n, ball), "contained", ball)
            pcov, pbound = gen.punctured_cover(Random(f"puncture:{seed}:{idx}"), 4)
            try:
                check_exact_cover(pcov, pbound)
                rec.check(False, "puncture-rejected", (pcov, pbound), "NotACoverError", "verified")
            except NotACoverError as exc:
                rec.check(
                    pbound.contains(exc.witness) and not any(r.contains(exc.witness) for r in pcov),
                    "puncture-witness-uncovered", exc.witness, "in box, outside all rects", exc.witness,
                )

    return SuiteReport("metric", seed, cases, backend, rec.failures, time.perf_counter() - start)


# -- linear ----------------------------------------------------------------------


_ALL_FORMS = tuple(FunctionalForm)


def suite_linear(seed: int, cases: int, backend: str = EXACT) -> SuiteReport:
    """BC/D-linearity, the six hyperbolic-part forms, reconstruction, bounds."""
    start = time.perf_counter()
    rng = _rng("linear", seed)
    rec = _Recorder()

    for idx in range(cases):
        rec.case = idx
        dim = 1 + idx % 4
        h = gen.rand_bcfunctional(rng, dim)
        if backend == FLOAT:
            h = BCLinearFunctional(_bcv_cast(h.coeffs, backend))
        x = _bcv_cast(gen.rand_bcvector(rng, dim), backend)
        y = _bcv_cast(gen.rand_bcvector(rng, dim), backend)
        Z0 = _bc_cast(gen.rand_bicomplex(rng), backend)

        rec.check(_bc_eq(h(x + y), h(x) + h(y)), "functional-additive", (h, x, y), "equal", (h(x + y), h(x) + h(y)))
        rec.check(
            _bc_eq(h(x.scale(Z0)), scalars.bc_mul(Z0, h(x))),
            "functional-homogeneous", (h, x, Z0), "equal", (h(x.scale(Z0)), scalars.bc_mul(Z0, h(x))),
        )

        # six equal derivations of the hyperbolic part, at the value level
        hp = hyperbolic_part(h)
        ref = hp(x)
        value = h(x)
        for form in _ALL_FORMS:
            derived = hyperbolic_part_of_value(value, form)
            rec.check(_h_eq(derived, ref), f"hyperbolic-part-{form.name}", (h, x), "equal", (derived, ref))

        # reconstruction along both imaginary axes is exact
        for axis in ("i", "j"):
            back = reconstruct(hp, axis)
            rec.check(
                all(_bc_eq(p, q) for p, q in zip(back.coeffs.coords, h.coeffs.coords)),
                f"reconstruct-{axis}", h, "same coefficients", back.coeffs,
            )

        # D-linearity of a functional built from real-pair values
        f2n = gen.rand_dfunctional(rng, 2 * dim)
        F = hyperbolic_functional_from_pairs(f2n)
        alpha = _h_cast(gen.rand_hyperbolic(rng), backend)
        rec.check(_h_eq(F(x + y), F(x) + F(y)), "pairs-additive", (f2n, x, y), "equal", (F(x + y), F(x) + F(y)))
        rec.check(
            _h_eq(F(x.scale(alpha)), alpha * F(x)),
            "pairs-d-homogeneous", (f2n, x, alpha), "equal", (F(x.scale(alpha)), alpha * F(x)),
        )

        # norm bounds: |f(x)|_k <=' bound * |x|_D, |T x|_D <=' |T|_D |x|_D
        fD = gen.rand_dfunctional(rng, dim)
        if backend == FLOAT:
            fD = DLinearFunctional(_dv_cast(fD.coeffs, backend))
        xD = _dv_cast(gen.rand_dvector(rng, dim), backend)
        bnd = functional_dbound(fD)
        rec.check(
            le(fD(xD).abs_k(), bnd * dnorm(xD)),
            "functional-bound", (fD, xD), "<='", (fD(xD).abs_k(), bnd * dnorm(xD)),
        )
        T = gen.rand_bcmap(rng, 1 + (idx // 2) % 3, dim)
        norm_T = operator_dnorm(T)
        rec.check(
            le(dnorm_bc(T(x)), norm_T * dnorm_bc(x) + HyperbolicScalar(EPSILON, EPSILON)),
            "operator-bound", (T, x), "<='", (dnorm_bc(T(x)), norm_T * dnorm_bc(x)),
        )

        # image of a convex pair under a D-functional is the interval pair
        if idx % 5 == 0:
            sdim = 1 + idx % 2
            A = gen.rand_absorbing_pair(Random(f"img:{seed}:{idx}"), sdim)
            fI = DLinearFunctional(DVector.from_parts(
                [gen.rand_nonzero_fraction(rng) for _ in range(sdim)],
                [gen.rand_nonzero_fraction(rng) for _ in range(sdim)],
            ))
            img = image_convex(fI, A)
            for v1 in A.p1.vertices():
                for v2 in A.p2.vertices():
                    val = HyperbolicScalar(fI.eval_component(1, v1), fI.eval_component(2, v2))
                    rec.check(img.contains(val), "image-contains-vertices", (fI, v1, v2), "inside", val)
            mid = HyperbolicScalar(
                fI.eval_component(1, A.p1.vertices()[0]),
                fI.eval_component(2, A.p2.vertices()[0]),
            ) * HyperbolicScalar(Fraction(1, 2), Fraction(1, 2))
            rec.check(img.contains(mid), "image-contains-midpoint", fI, "inside", mid)
            zero_f = DLinearFunctional(DVector.from_parts([0] * sdim, [1] * sdim))
            rec.expect_raises(
                ConstantComponentError, "zero-component-rejected", zero_f,
                lambda: image_convex(zero_f, A),
            )

    return SuiteReport("linear", seed, cases, backend, rec.failures, time.perf_counter() - start)


# -- convex ----------------------------------------------------------------------


def _bisection_gauge(P: RealPolytope, point) -> float:
    """Brute-force float gauge: bisect the smallest t with x in t*P (H-rep)."""
    faces = [(np.array([float(c) for c in h.a]), float(h.b)) for h in P.halfspaces()]
    x = np.array([float(c) for c in point])

    def member(t: float) -> bool:
        return all(a.dot(x) <= t * b + 1e-15 for a, b in faces)

    if member(0.0):
        return 0.0
    hi = 1.0
    for _ in range(120):
        if member(hi):
            break
        hi *= 2
    else:
        return math.inf
    lo = 0.0
    for _ in range(100):
        mid = (lo + hi) / 2
        if member(mid):
            hi = mid
        else:
            lo = mid
    return hi


def suite_convex(seed: int, cases: int, backend: str = EXACT) -> SuiteReport:
    """Gauges (three ways), hulls, absorbency, and membership criteria."""
    start = time.perf_counter()
    rng = _rng("convex", seed)
    rec = _Recorder()
    one = HyperbolicScalar.one()

    for idx in range(cases):
        rec.case = idx
        dim = 1 + idx % 3
        A = gen.rand_absorbing_pair(rng, dim)
        x = gen.rand_dvector(rng, dim)
        y = gen.rand_dvector(rng, dim)

        qx = minkowski_gauge(A, x).hyper()
        qy = minkowski_gauge(A, y).hyper()
        qsum = minkowski_gauge(A, x + y).hyper()
        rec.check(le(qsum, qx + qy), "gauge-sublinear", (A, x, y), "<='", (qsum, qx + qy))
        lam = gen.rand_positive_hyperbolic(rng)
        qlam = minkowski_gauge(A, x.scale(lam)).hyper()
        rec.check(_h_eq(qlam, lam * qx), "gauge-homogeneous", (A, x, lam), "equal", (qlam, lam * qx))

        # membership: q(x) <=' 1 iff x in the closed set
        inside = A.contains(x)
        rec.check(le(qx, one) == inside, "gauge-membership", (A, x), "agree", (qx, inside))

        # the hull touches the unit level: max vertex gauge is exactly 1
        for l in (1, 2):
            P = A.component(l)
            vals = [P.gauge_hrep(v) for v in P.vertices()]
            rec.check(
                all(val <= 1 for val in vals) and max(vals) == 1,
                "vertex-gauge-one", (A, l), "max == 1", vals,
            )

        # three gauge computations agree: V-rep LP, H-rep closed form, bisection
        for l in (1, 2):
            P = A.component(l)
            pt = x.part(l)
            q_v = P.gauge_vrep(pt)
            q_h = P.gauge_hrep(pt)
            rec.check(q_v == q_h, "gauge-vrep-equals-hrep", (P, pt), "exact equal", (q_v, q_h))
            q_b = _bisection_gauge(P, pt)
            rec.check(abs(q_b - float(q_h)) <= 1e-9, "gauge-bisection", (P, pt), "within 1e-9", (q_b, float(q_h)))

        # hull idempotence and D-convexity criteria
        pts = [gen.rand_dvector(rng, dim) for _ in range(dim + 2)]
        hull = dconvex_hull(pts)
        rec.check(is_dconvex(hull.vertex_points()), "hull-is-dconvex", pts, "True", True)
        hull2 = dconvex_hull(hull.vertex_points())
        rec.check(
            sorted(hull2.p1.vertices()) == sorted(hull.p1.vertices())
            and sorted(hull2.p2.vertices()) == sorted(hull.p2.vertices()),
            "hull-idempotent", pts, "same vertices", (hull.p1.vertices(), hull2.p1.vertices()),
        )
        a_pt = HyperbolicScalar(Fraction(0), Fraction(0))
        b_pt = HyperbolicScalar(Fraction(1), Fraction(1))
        mixed = [DVector.of(*([a_pt] * dim)), DVector.of(*([b_pt] * dim))]
        rec.check(not is_dconvex(mixed), "two-points-not-dconvex", mixed, "False", is_dconvex(mixed))

        # absorbency
        rec.check(is_dabsorbing(A), "absorbing-positive", A, "True", True)
        shift = tuple(Fraction(10) for _ in range(dim))
        moved = DConvexSet(
            RealPolytope.from_vertices([tuple(c + s for c, s in zip(v, shift)) for v in A.p1.vertices()]),
            A.p2,
        )
        rec.check(not is_dabsorbing(moved), "shifted-not-absorbing", moved, "False", is_dabsorbing(moved))
        if idx % 10 == 0:
            away = DVector.zero(dim) - DVector.from_parts(shift, [0] * dim)
            rec.expect_raises(
                NotAbsorbingError, "shifted-gauge-rejected", (moved, away),
                lambda: minkowski_gauge(moved, away),
            )

        # difference body: contains 0 (dims 1-2; the separation suite works
        # the three-dimensional difference bodies hard already)
        if dim <= 2:
            B = gen.rand_absorbing_pair(rng, dim)
            G = minkowski_diff_translate(A, B, DVector.zero(dim), DVector.zero(dim))
            rec.check(G.contains(DVector.zero(dim)), "difference-contains-zero", (A, B), "True", True)

    return SuiteReport("convex", seed, cases, backend, rec.failures, time.perf_counter() - start)


# -- separation ------------------------------------------------------------------


def suite_separation(seed: int, cases: int, backend: str = EXACT) -> SuiteReport:
    """Certificates on gapped instances, rejections with witnesses, LP oracle.

    Every case builds a component-disjoint pair and fully re-verifies the
    returned certificate; every fourth case additionally runs an overlapping
    pair through both the separator (expecting a witness) and the oracle.
    """
    start = time.perf_counter()
    rng = _rng("separation", seed)
    rec = _Recorder()

    for idx in range(cases):
        rec.case = idx
        dim = 1 + idx % 3
        A, B = gen.rand_separation_instance(rng, dim)
        cert = rec.guard("separate", (A, B), lambda: separate_hyperbolic(A, B))
        if cert is not None:
            f, gamma = cert.f, cert.gamma
            ok_a = all(
                lt_strict(HyperbolicScalar(f.eval_component(1, v1), f.eval_component(2, v2)), gamma)
                for v1 in A.p1.vertices()
                for v2 in A.p2.vertices()
            )
            rec.check(ok_a, "certificate-strict-on-A", (A, B), "f <' gamma", gamma)
            ok_b = all(
                le(gamma, HyperbolicScalar(f.eval_component(1, v1), f.eval_component(2, v2)))
                for v1 in B.p1.vertices()
                for v2 in B.p2.vertices()
            )
            rec.check(ok_b, "certificate-weak-on-B", (A, B), "gamma <=' f", gamma)
            sides = {c.side for c in cert.checks}
            rec.check(sides == {"A", "B"}, "certificate-check-log", (A, B), "both sides logged", sides)
        rec.check(lp_separation_oracle(A, B) is True, "oracle-agrees-disjoint", (A, B), "True", True)

        if idx % 4 == 0:
            Ao, Bo, w_comp = gen.rand_overlap_instance(rng, dim)
            try:
                separate_hyperbolic(Ao, Bo)
                rec.check(False, "overlap-rejected", (Ao, Bo), "NotDisjointError", "certificate produced")
            except NotDisjointError as exc:
                comp = exc.component
                witness = exc.witness
                Pa, Pb = Ao.component(comp), Bo.component(comp)
                rec.check(
                    Pa.contains(witness) and Pb.contains(witness),
                    "overlap-witness-in-both", (Ao, Bo), "common point", witness,
                )
            rec.check(lp_separation_oracle(Ao, Bo) is False, "oracle-agrees-overlap", (Ao, Bo), "False", True)

        if idx % 5 == 0:
            # the bicomplex lift on a plane pair (BC^1 encoded in R^2 pairs)
            A2, B2 = gen.rand_separation_instance(rng, 2)
            got = rec.guard("separate-bicomplex", (A2, B2), lambda: separate_bicomplex(A2, B2))
            if got is not None:
                h, gamma2 = got
                hp = hyperbolic_part(h)
                ok_a = all(
                    lt_strict(hp(BCVector.from_real_parts(v1, v2)), gamma2)
                    for v1 in A2.p1.vertices()
                    for v2 in A2.p2.vertices()
                )
                ok_b = all(
                    le(gamma2, hp(BCVector.from_real_parts(v1, v2)))
                    for v1 in B2.p1.vertices()
                    for v2 in B2.p2.vertices()
                )
                rec.check(ok_a and ok_b, "bicomplex-lift-verifies", (A2, B2), "h_D separates", gamma2)

    return SuiteReport("separation", seed, cases, backend, rec.failures, time.perf_counter() - start)


# -- theorem harnesses -------------------------------------------------------------


def _np_rng(tag: str, seed: int, idx: int) -> np.random.RandomState:
    return np.random.RandomState(Random(f"{tag}:{seed}:{idx}").randrange(2**32))


def _sampled_rows(rs: np.random.RandomState, count: int, n: int) -> np.ndarray:
    """count complex row vectors with unit Euclidean norm."""
    raw = rs.standard_normal((count, n)) + 1j * rs.standard_normal((count, n))
    norms = np.linalg.norm(raw, axis=1)
    norms[norms == 0] = 1.0
    return raw / norms[:, None]


def check_ubp_guarantee(
    F: MapFamily,
    eps: HyperbolicScalar,
    delta: HyperbolicScalar,
    samples: int,
    rs: np.random.RandomState,
) -> bool:
    """Sample |x|_D <' delta and confirm sup over the family |T x|_D <' eps."""
    n = F.maps[0].cols
    for l in (1, 2):
        d = min(float(delta.a1 if l == 1 else delta.a2), 1e6)
        e = float(eps.a1 if l == 1 else eps.a2)
        X = _sampled_rows(rs, samples, n) * (0.9 * d)
        for T in F.maps:
            M = T.component_array(l)
            norms = np.linalg.norm(X @ M.T, axis=1)
            if not bool(np.all(norms < e)):
                return False
    return True


def check_omt_guarantee(
    T: BCLinearMap,
    delta: HyperbolicScalar,
    samples: int,
    rs: np.random.RandomState,
) -> bool:
    """Sample |y|_D <' delta and confirm a preimage of norm <' 1 exists."""
    for l in (1, 2):
        M = T.component_array(l)
        d = float(delta.a1 if l == 1 else delta.a2)
        Y = _sampled_rows(rs, samples, T.rows) * (0.9 * d)
        if T.rows == T.cols:
            X = np.linalg.solve(M, Y.T).T
        else:
            X = (np.linalg.pinv(M) @ Y.T).T
        if not bool(np.all(np.linalg.norm(X, axis=1) < 1.0)):
            return False
    return True


def suite_theorems(seed: int, cases: int, backend: str = EXACT) -> SuiteReport:
    """Rotates through the six theorem harnesses, one sub-check per case.

    Case index mod 6 selects: uniform boundedness, open mapping, inverse
    mapping, closed graph, dominated extension, hyperplanes/varieties.
    """
    start = time.perf_counter()
    rng = _rng("theorems", seed)
    rec = _Recorder()
    one = HyperbolicScalar.one()

    for idx in range(cases):
        rec.case = idx
        kind = idx % 6
        if kind == 0:
            _ubp_case(rec, rng, seed, idx)
        elif kind == 1:
            _omt_case(rec, rng, seed, idx)
        elif kind == 2:
            _imt_case(rec, rng)
        elif kind == 3:
            _cgt_case(rec, rng)
        elif kind == 4:
            _extension_case(rec, rng)
        else:
            _hyperplane_case(rec, rng, seed, idx)

    return SuiteReport("theorems", seed, cases, backend, rec.failures, time.perf_counter() - start)


def _ubp_case(rec: _Recorder, rng: Random, seed: int, idx: int, samples: int = 64) -> None:
    n = 1 + idx % 3
    m = 1 + (idx // 2) % 3
    F = MapFamily(tuple(gen.rand_bcmap(rng, m, n) for _ in range(1 + idx % 4)))
    eps = gen.rand_positive_hyperbolic(rng)
    got = rec.guard("ubp-bound", (F, eps), lambda: ubp_bound(F, eps))
    if got is None:
        return
    M, delta = got
    rec.check(
        le(HyperbolicScalar.zero(), M), "ubp-M-nonnegative", (F, eps), ">=' 0", M
    )
    norms = [operator_dnorm(T) for T in F.maps]
    rec.check(
        all(le(nv, M + HyperbolicScalar(EPSILON, EPSILON)) for nv in norms),
        "ubp-M-dominates", F, "all member norms <=' M", (M, norms),
    )
    ok = check_ubp_guarantee(F, eps, delta, samples, _np_rng("ubp", seed, idx))
    rec.check(ok, "ubp-guarantee-sampled", (F, eps), "|Tx| <' eps", (M, delta))

    # doubling a family member doubles M and halves delta (power-of-two exact)
    T0 = F.maps[0]
    M0, d0 = ubp_bound(MapFamily((T0,)), eps)
    M1, d1 = ubp_bound(MapFamily((_scale_map(T0, 2),)), eps)
    if M0.a1 > 0 and M0.a2 > 0:
        rec.check(
            abs(M1.a1 / M0.a1 - 2) < 1e-9 and abs(M1.a2 / M0.a2 - 2) < 1e-9,
            "ubp-scaling-doubles-M", T0, "ratio 2", (M0, M1),
        )
        rec.check(
            abs(d1.a1 / d0.a1 - 0.5) < 1e-9 and abs(d1.a2 / d0.a2 - 0.5) < 1e-9,
            "ubp-scaling-halves-delta", T0, "ratio 1/2", (d0, d1),
        )
    from .errors import EmptyFamilyError

    rec.expect_raises(EmptyFamilyError, "ubp-empty-family", (), lambda: ubp_bound(MapFamily(()), eps))


def _scale_map(T: BCLinearMap, c: int) -> BCLinearMap:
    s = BicomplexScalar(ComplexScalar(c), ComplexScalar(c))
    return BCLinearMap(tuple(tuple(scalars.bc_mul(s, entry) for entry in row) for row in T.matrix))


def _omt_case(rec: _Recorder, rng: Random, seed: int, idx: int, samples: int = 64) -> None:
    n = 1 + idx % 3
    T = gen.rand_component_invertible_map(rng, n)
    got = rec.guard("omt-delta", T, lambda: omt_delta(T))
    if got is not None:
        delta = got.delta
        rec.check(lt_strict(HyperbolicScalar.zero(), delta), "omt-delta-positive", T, ">' 0", delta)
        for l, d_val in ((1, delta.a1), (2, delta.a2)):
            direct = float(np.linalg.svd(T.component_array(l), compute_uv=False)[-1])
            rec.check(
                abs(float(d_val) - direct) <= 1e-6 * max(1.0, direct),
                "omt-delta-tight", (T, l), "within 1e-6 of sigma_min", (float(d_val), direct),
            )
        ok = check_omt_guarantee(T, delta, samples, _np_rng("omt", seed, idx))
        rec.check(ok, "omt-guarantee-sampled", T, "preimages in unit ball", delta)
    # rank-deficient and tall maps are rejected with the failing component
    deficient = _null_row_map(rng, n)
    rec.expect_raises(NotSurjectiveError, "omt-rejects-deficient", deficient, lambda: omt_delta(deficient))
    tall = gen.rand_bcmap(rng, n + 1, n)
    rec.expect_raises(NotSurjectiveError, "omt-rejects-tall", tall, lambda: omt_delta(tall))


def _null_row_map(rng: Random, n: int) -> BCLinearMap:
    """A square map whose first row vanishes in idempotent component 2."""
    e1 = HyperbolicScalar.e1().to_bicomplex()
    rows = [[gen.rand_bicomplex(rng) for _ in range(n)] for _ in range(n)]
    rows[0] = [scalars.bc_mul(e1, v) for v in rows[0]]
    return BCLinearMap(tuple(tuple(r) for r in rows))


def _imt_case(rec: _Recorder, rng: Random) -> None:
    n = 1 + rng.randrange(3)
    T = gen.rand_component_invertible_map(rng, n)
    got = rec.guard("imt-invert", T, lambda: inverse_map(T))
    if got is not None:
        T_inv, bound = got
        ident = BCLinearMap.identity(n)
        prod_rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = BicomplexScalar.zero()
                for t in range(n):
                    acc = acc + scalars.bc_mul(T.matrix[i][t], T_inv.matrix[t][j])
                row.append(acc)
            prod_rows.append(tuple(row))
        exact_identity = all(
            (a - b).is_zero()
            for ra, rb in zip(prod_rows, ident.matrix)
            for a, b in zip(ra, rb)
        )
        rec.check(exact_identity, "imt-exact-identity", T, "T * T^-1 = I", prod_rows)
        # the continuity bound is 1/sigma_min per component, within 1e-6
        for l, b_val in ((1, bound.a1), (2, bound.a2)):
            sigma = np.linalg.svd(T.component_array(l), compute_uv=False)[-1]
            direct = 1.0 / sigma
            rec.check(
                abs(float(b_val) - direct) <= 1e-6 * max(1.0, direct),
                "imt-bound-tight", (T, l), "within 1e-6 of 1/sigma_min", (float(b_val), direct),
            )
    # non-square and component-singular maps are rejected
    rect = gen.rand_bcmap(rng, n, n + 1)
    rec.expect_raises(NotBijectiveError, "imt-rejects-rectangular", rect, lambda: inverse_map(rect))
    singular = _null_row_map(rng, n)
    rec.expect_raises(NotBijectiveError, "imt-rejects-singular", singular, lambda: inverse_map(singular))


def _cgt_case(rec: _Recorder, rng: Random) -> None:
    n = 1 + rng.randrange(3)
    m = 1 + rng.randrange(3)
    vecs, T = gen.rand_graph_basis(rng, n, m)
    got = rec.guard("cgt-reconstruct", (vecs, n), lambda: map_from_graph(vecs, n))
    if got is not None:
        rec.check(
            all(
                _bc_eq(a, b)
                for ra, rb in zip(got.matrix, T.matrix)
                for a, b in zip(ra, rb)
            ),
            "cgt-exact-recovery", (vecs, n), "same matrix", got.matrix,
        )
    bad = gen.rand_non_graph(rng, n, m)
    rec.expect_raises(NotAGraphError, "cgt-rejects-non-graph", (bad, n), lambda: map_from_graph(bad, n))


def _extension_case(rec: _Recorder, rng: Random) -> None:
    dim = 2 + rng.randrange(2)
    B = gen.rand_absorbing_pair(rng, dim)
    # a random subspace basis of rank < dim
    k = 1 + rng.randrange(dim - 1)
    while True:
        basis = [gen.rand_dvector(rng, dim) for _ in range(k)]
        from .polytope import matrix_rank

        r1 = matrix_rank([list(map(Fraction, v.part1())) for v in basis])
        r2 = matrix_rank([list(map(Fraction, v.part2())) for v in basis])
        if r1 == k and r2 == k:
            break
    g = gen.rand_dfunctional(rng, dim)
    f = None
    scaled = g
    for _ in range(10):
        try:
            f = extend_dominated(scaled, basis, B)
            break
        except DominationError:
            half = HyperbolicScalar(Fraction(1, 2), Fraction(1, 2))
            scaled = DLinearFunctional(scaled.coeffs.scale(half))
    rec.check(f is not None, "extension-after-rescaling", (g, basis, B), "extension found", f)
    if f is None:
        return
    for v in basis:
        rec.check(_h_eq(f(v), scaled(v)), "extension-agrees-on-subspace", (v,), "g(v)", (f(v), scaled(v)))
    for _ in range(3):
        x = gen.rand_dvector(rng, dim)
        q = minkowski_gauge(B, x).hyper()
        rec.check(le(f(x), q), "extension-dominated", (x,), "f <=' q", (f(x), q))
    # an oversized functional on a line with nonzero value cannot be dominated
    y0 = basis[0]
    if not scaled(y0).is_zero():
        big = DLinearFunctional(scaled.coeffs.scale(HyperbolicScalar(Fraction(1000), Fraction(1000))))
        rec.expect_raises(
            DominationError, "extension-rejects-oversized", (big, y0),
            lambda: extend_dominated(big, [y0], B),
        )


def _hyperplane_case(rec: _Recorder, rng: Random, seed: int, idx: int) -> None:
    dim = 1 + idx % 3
    B = gen.rand_absorbing_pair(rng, dim, open_flag=bool(rng.getrandbits(1)))
    g = DLinearFunctional(DVector.from_parts(
        [gen.rand_nonzero_fraction(rng) for _ in range(dim)],
        [gen.rand_nonzero_fraction(rng) for _ in range(dim)],
    ))
    peaks = []
    for l in (1, 2):
        peaks.append(max(abs(g.eval_component(l, v)) for v in B.component(l).vertices()))
    c = HyperbolicScalar(peaks[0] + 1, peaks[1] + 1)
    L = rec.guard("hyperplane-normalize", (g, c), lambda: hyperplane_normalize(g, c))
    if L is None:
        return
    f = rec.guard("hyperplane-gauge-bound", (B, L), lambda: hyperplane_gauge_bound(B, L))
    if f is not None:
        # invariance under invertible rescaling of (g, c)
        lam = gen.rand_invertible_hyperbolic(rng)
        g2 = DLinearFunctional(g.coeffs.scale(lam))
        L2 = hyperplane_normalize(g2, lam * c)
        rec.check(
            all(_h_eq(a, b) for a, b in zip(L.f.coeffs.coords, L2.f.coeffs.coords)),
            "normalization-invariant", (g, c, lam), "same functional", L2.f.coeffs,
        )
        ok = _grid_gauge_sweep(B, f, 1000)
        rec.check(ok, "gauge-bound-grid", (B, L), "-q(-x) <=' f <=' q on grid", ok)
    zd = HyperbolicScalar(Fraction(1), Fraction(0))
    rec.expect_raises(
        ZeroDivisorLevelError, "zero-divisor-level-rejected", (g, zd),
        lambda: hyperplane_normalize(g, zd),
    )
    bad_g = DLinearFunctional(DVector.from_parts([0] * dim, [1] * dim))
    rec.expect_raises(
        DegenerateFunctionalError, "degenerate-normal-rejected", bad_g,
        lambda: hyperplane_normalize(bad_g, HyperbolicScalar.one()),
    )
    if idx % 2 == 0:
        half = HyperbolicScalar(
            peaks[0] / 2 if peaks[0] else Fraction(1, 2),
            peaks[1] / 2 if peaks[1] else Fraction(1, 2),
        )
        if half.is_invertible():
            rec.expect_raises(
                NotDisjointError, "crossing-level-rejected", (B, g, half),
                lambda: hyperplane_gauge_bound(B, hyperplane_normalize(g, half)),
            )
    # affine variety extension: a plane beyond the body extends to {f = 1}
    axis = rng.randrange(dim)
    reach = []
    for l in (1, 2):
        reach.append(max(abs(Fraction(v[axis])) for v in B.component(l).vertices()))
    coords = [HyperbolicScalar.zero()] * dim
    coords[axis] = HyperbolicScalar(reach[0] + 1, reach[1] + 1)
    x0 = DVector.of(*coords)
    basisM = []
    for d in range(dim):
        if d != axis:
            e = [HyperbolicScalar.zero()] * dim
            e[d] = HyperbolicScalar.one()
            basisM.append(DVector.of(*e))
    if basisM:
        Lv = rec.guard("variety-extend", (x0, basisM, B), lambda: variety_extend_hyperplane(x0, basisM, B))
        if Lv is not None:
            rec.check(_h_eq(Lv.f(x0), HyperbolicScalar.one()), "variety-level-one", x0, "f(x0) = 1", Lv.f(x0))
            rec.check(
                all(_h_eq(Lv.f(mv), HyperbolicScalar.zero()) for mv in basisM),
                "variety-directions-null", basisM, "f = 0 on directions", [Lv.f(mv) for mv in basisM],
            )


def _grid_gauge_sweep(B: DConvexSet, f: DLinearFunctional, total: int) -> bool:
    """Float sweep of -q(-x) <=' f(x) <=' q(x) over a dense grid per component."""
    dim = B.dim
    per = max(2, math.ceil(total ** (1.0 / dim)))
    axes = np.linspace(-2.0, 2.0, per)
    pts = np.array(list(product(axes, repeat=dim)))
    for l in (1, 2):
        P = B.component(l)
        A_rows = []
        b_vals = []
        for h in P.halfspaces():
            A_rows.append([float(c) for c in h.a])
            b_vals.append(float(h.b))
        A_m = np.array(A_rows)
        b_v = np.array(b_vals)
        ratios = (pts @ A_m.T) / b_v
        q_plus = np.maximum(0.0, ratios.max(axis=1))
        ratios_neg = (-pts @ A_m.T) / b_v
        q_minus = np.maximum(0.0, ratios_neg.max(axis=1))
        fx = pts @ np.array([float(c) for c in f.component(l)])
        if not bool(np.all(fx <= q_plus + 1e-9)) or not bool(np.all(-q_minus - 1e-9 <= fx)):
            return False
    return True


# -- dispatch --------------------------------------------------------------------


_SUITES: dict[str, Callable[[int, int, str], SuiteReport]] = {
    "algebra": suite_algebra,
    "order": suite_order,
    "metric": suite_metric,
    "linear": suite_linear,
    "convex": suite_convex,
    "separation": suite_separation,
    "theorems": suite_theorems,
}


def run_suite(name: str, seed: int, cases: int, backend: str = EXACT) -> SuiteReport:
    try:
        fn = _SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}") from None
    return fn(seed, cases, backend)


def run_all(seed: int, cases: int, backend: str = EXACT) -> list[SuiteReport]:
    return [run_suite(name, seed, cases, backend) for name in SUITE_NAMES]
