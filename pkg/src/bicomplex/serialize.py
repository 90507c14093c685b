"""JSON wire formats for the domain types.

Exact rationals travel as "p/q" strings, everything else as plain JSON
numbers, so certificate files round-trip without precision loss.  All
decoders validate shape and raise :class:`SchemaError` with a path hint;
they never partially construct objects.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .analysis import DHyperplane, SeparationCertificate, VertexCheck
from .backend import EXACT, decode_real, encode_real
from .convex import DConvexSet
from .errors import BicomplexError, SchemaError
from .linear import BCLinearFunctional, BCLinearMap, DLinearFunctional
from .metric import RectSet
from .polytope import Halfspace, RealPolytope
from .scalars import BicomplexScalar, ComplexScalar, HyperbolicScalar
from .vectors import BCVector, DVector


def _real(obj, where: str, backend: str):
    try:
        return decode_real(obj, backend)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"{where}: bad number {obj!r}") from exc


def _expect_dict(obj, keys: tuple[str, ...], where: str) -> dict:
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected an object")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise SchemaError(f"{where}: missing keys {missing}")
    return obj


def _expect_list(obj, where: str) -> list:
    if not isinstance(obj, list):
        raise SchemaError(f"{where}: expected an array")
    return obj


# -- scalars ------------------------------------------------------------------


def encode_hyperbolic(h: HyperbolicScalar) -> dict:
    return {"e1": encode_real(h.a1), "e2": encode_real(h.a2)}


def decode_hyperbolic(obj, backend: str = EXACT, where: str = "hyperbolic") -> HyperbolicScalar:
    d = _expect_dict(obj, ("e1", "e2"), where)
    return HyperbolicScalar(_real(d["e1"], where, backend), _real(d["e2"], where, backend))


def encode_complex(z: ComplexScalar) -> dict:
    return {"re": encode_real(z.re), "im": encode_real(z.im)}


def decode_complex(obj, backend: str = EXACT, where: str = "complex") -> ComplexScalar:
    d = _expect_dict(obj, ("re", "im"), where)
    return ComplexScalar(_real(d["re"], where, backend), _real(d["im"], where, backend))


def encode_bicomplex(Z: BicomplexScalar) -> dict:
    return {"z1": encode_complex(Z.z1), "z2": encode_complex(Z.z2)}


def decode_bicomplex(obj, backend: str = EXACT, where: str = "bicomplex") -> BicomplexScalar:
    d = _expect_dict(obj, ("z1", "z2"), where)
    return BicomplexScalar(
        decode_complex(d["z1"], backend, f"{where}.z1"),
        decode_complex(d["z2"], backend, f"{where}.z2"),
    )


# -- vectors and functionals ---------------------------------------------------


def encode_dvector(x: DVector) -> dict:
    return {"coords": [encode_hyperbolic(h) for h in x.coords]}


def decode_dvector(obj, backend: str = EXACT, where: str = "dvector") -> DVector:
    d = _expect_dict(obj, ("coords",), where)
    coords = _expect_list(d["coords"], f"{where}.coords")
    if not coords:
        raise SchemaError(f"{where}: empty coordinate list")
    return DVector(tuple(
        decode_hyperbolic(c, backend, f"{where}.coords[{i}]") for i, c in enumerate(coords)
    ))


def encode_bcvector(x: BCVector) -> dict:
    return {"coords": [encode_bicomplex(Z) for Z in x.coords]}


def decode_bcvector(obj, backend: str = EXACT, where: str = "bcvector") -> BCVector:
    d = _expect_dict(obj, ("coords",), where)
    coords = _expect_list(d["coords"], f"{where}.coords")
    if not coords:
        raise SchemaError(f"{where}: empty coordinate list")
    return BCVector(tuple(
        decode_bicomplex(c, backend, f"{where}.coords[{i}]") for i, c in enumerate(coords)
    ))


def encode_dfunctional(f: DLinearFunctional) -> dict:
    return {"coeffs": [encode_hyperbolic(h) for h in f.coeffs.coords]}


def decode_dfunctional(obj, backend: str = EXACT, where: str = "functional") -> DLinearFunctional:
    d = _expect_dict(obj, ("coeffs",), where)
    coeffs = _expect_list(d["coeffs"], f"{where}.coeffs")
    if not coeffs:
        raise SchemaError(f"{where}: empty coefficient list")
    return DLinearFunctional(DVector(tuple(
        decode_hyperbolic(c, backend, f"{where}.coeffs[{i}]") for i, c in enumerate(coeffs)
    )))


def encode_bcfunctional(h: BCLinearFunctional) -> dict:
    return {"coeffs": [encode_bicomplex(Z) for Z in h.coeffs.coords]}


def decode_bcfunctional(obj, backend: str = EXACT, where: str = "functional") -> BCLinearFunctional:
    d = _expect_dict(obj, ("coeffs",), where)
    coeffs = _expect_list(d["coeffs"], f"{where}.coeffs")
    if not coeffs:
        raise SchemaError(f"{where}: empty coefficient list")
    return BCLinearFunctional(BCVector(tuple(
        decode_bicomplex(c, backend, f"{where}.coeffs[{i}]") for i, c in enumerate(coeffs)
    )))


def encode_map(T: BCLinearMap) -> dict:
    return {"rows": [[encode_bicomplex(e) for e in row] for row in T.matrix]}


def decode_map(obj, backend: str = EXACT, where: str = "map") -> BCLinearMap:
    d = _expect_dict(obj, ("rows",), where)
    rows = _expect_list(d["rows"], f"{where}.rows")
    if not rows:
        raise SchemaError(f"{where}: empty matrix")
    decoded = []
    for r, row in enumerate(rows):
        entries = _expect_list(row, f"{where}.rows[{r}]")
        decoded.append(tuple(
            decode_bicomplex(e, backend, f"{where}.rows[{r}][{c}]") for c, e in enumerate(entries)
        ))
    width = len(decoded[0])
    if width == 0 or any(len(row) != width for row in decoded):
        raise SchemaError(f"{where}: ragged or empty rows")
    return BCLinearMap(tuple(decoded))


# -- geometry -----------------------------------------------------------------


def encode_polytope(P: RealPolytope) -> dict:
    if P.has_vrep():
        return {"vertices": [[encode_real(c) for c in v] for v in P.vertices()]}
    return {
        "halfspaces": [
            {"a": [encode_real(c) for c in h.a], "b": encode_real(h.b), "strict": h.strict}
            for h in P.halfspaces()
        ]
    }


def decode_polytope(obj, backend: str = EXACT, where: str = "polytope") -> RealPolytope:
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected an object")
    if "vertices" in obj:
        verts = _expect_list(obj["vertices"], f"{where}.vertices")
        if not verts:
            raise SchemaError(f"{where}: no vertices")
        points = []
        for i, v in enumerate(verts):
            row = _expect_list(v, f"{where}.vertices[{i}]")
            points.append(tuple(_real(c, f"{where}.vertices[{i}]", backend) for c in row))
        if any(len(p) != len(points[0]) for p in points):
            raise SchemaError(f"{where}: mixed vertex dimensions")
        return RealPolytope.from_vertices(points)
    if "halfspaces" in obj:
        rows = _expect_list(obj["halfspaces"], f"{where}.halfspaces")
        faces = []
        dim = None
        for i, h in enumerate(rows):
            d = _expect_dict(h, ("a", "b"), f"{where}.halfspaces[{i}]")
            a = tuple(
                _real(c, f"{where}.halfspaces[{i}].a", backend)
                for c in _expect_list(d["a"], f"{where}.halfspaces[{i}].a")
            )
            if dim is None:
                dim = len(a)
            elif len(a) != dim:
                raise SchemaError(f"{where}: mixed halfspace dimensions")
            strict = d.get("strict", False)
            if not isinstance(strict, bool):
                raise SchemaError(f"{where}.halfspaces[{i}].strict: expected a boolean")
            faces.append(Halfspace(a, _real(d["b"], f"{where}.halfspaces[{i}].b", backend), strict))
        if dim is None:
            raise SchemaError(f"{where}: empty halfspace list")
        return RealPolytope.from_halfspaces(faces, dim)
    raise SchemaError(f"{where}: need either vertices or halfspaces")


def encode_dconvex(S: DConvexSet) -> dict:
    return {"p1": encode_polytope(S.p1), "p2": encode_polytope(S.p2), "open": S.open}


def decode_dconvex(obj, backend: str = EXACT, where: str = "set") -> DConvexSet:
    d = _expect_dict(obj, ("p1", "p2"), where)
    open_flag = d.get("open", False)
    if not isinstance(open_flag, bool):
        raise SchemaError(f"{where}.open: expected a boolean")
    try:
        return DConvexSet(
            decode_polytope(d["p1"], backend, f"{where}.p1"),
            decode_polytope(d["p2"], backend, f"{where}.p2"),
            open=open_flag,
        )
    except SchemaError:
        raise
    except BicomplexError as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def encode_rectset(R: RectSet) -> dict:
    return {
        "c1": [encode_real(R.c1[0]), encode_real(R.c1[1])],
        "c2": [encode_real(R.c2[0]), encode_real(R.c2[1])],
    }


def decode_rectset(obj, backend: str = EXACT, where: str = "rect") -> RectSet:
    d = _expect_dict(obj, ("c1", "c2"), where)
    out = []
    for key in ("c1", "c2"):
        pair = _expect_list(d[key], f"{where}.{key}")
        if len(pair) != 2:
            raise SchemaError(f"{where}.{key}: expected [lo, hi]")
        out.append((_real(pair[0], f"{where}.{key}", backend), _real(pair[1], f"{where}.{key}", backend)))
    try:
        return RectSet(out[0], out[1])
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def encode_cover(cover: list[RectSet], bounding: RectSet) -> dict:
    return {
        "bounding": encode_rectset(bounding),
        "cover": [encode_rectset(r) for r in cover],
    }


def decode_cover(obj, backend: str = EXACT) -> tuple[list[RectSet], RectSet]:
    """A cover file: {"bounding": RectSet, "cover": [RectSet, ...]}."""
    d = _expect_dict(obj, ("bounding", "cover"), "cover file")
    rects = _expect_list(d["cover"], "cover file.cover")
    cover = [decode_rectset(r, backend, f"cover[{i}]") for i, r in enumerate(rects)]
    return cover, decode_rectset(d["bounding"], backend, "bounding")


# -- certificates and hyperplanes ----------------------------------------------


def encode_certificate(cert: SeparationCertificate) -> dict:
    trace = cert.trace
    return {
        "f": encode_dfunctional(cert.f),
        "gamma": encode_hyperbolic(cert.gamma),
        "trace": {
            "x0": encode_dvector(trace["x0"]),
            "G": encode_dconvex(trace["G"]),
            "qg_x0": encode_hyperbolic(trace["qg_x0"]),
            "a0": encode_dvector(trace["a0"]),
            "b0": encode_dvector(trace["b0"]),
            "interp": encode_real(trace["interp"]),
        },
        "checks": [
            {
                "vertex": [
                    [encode_real(c) for c in ch.vertex[0]],
                    [encode_real(c) for c in ch.vertex[1]],
                ],
                "side": ch.side,
                "value": encode_hyperbolic(ch.value),
            }
            for ch in cert.checks
        ],
    }


def decode_certificate(obj, backend: str = EXACT) -> SeparationCertificate:
    d = _expect_dict(obj, ("f", "gamma", "trace", "checks"), "certificate")
    t = _expect_dict(d["trace"], ("x0", "G", "qg_x0", "a0", "b0", "interp"), "certificate.trace")
    trace = {
        "x0": decode_dvector(t["x0"], backend, "trace.x0"),
        "G": decode_dconvex(t["G"], backend, "trace.G"),
        "qg_x0": decode_hyperbolic(t["qg_x0"], backend, "trace.qg_x0"),
        "a0": decode_dvector(t["a0"], backend, "trace.a0"),
        "b0": decode_dvector(t["b0"], backend, "trace.b0"),
        "interp": _real(t["interp"], "trace.interp", backend),
    }
    checks = []
    for i, ch in enumerate(_expect_list(d["checks"], "certificate.checks")):
        c = _expect_dict(ch, ("vertex", "side", "value"), f"checks[{i}]")
        pair = _expect_list(c["vertex"], f"checks[{i}].vertex")
        if len(pair) != 2:
            raise SchemaError(f"checks[{i}].vertex: expected a component pair")
        if c["side"] not in ("A", "B"):
            raise SchemaError(f"checks[{i}].side: expected 'A' or 'B'")
        v1 = tuple(_real(x, f"checks[{i}].vertex[0]", backend) for x in _expect_list(pair[0], f"checks[{i}].vertex[0]"))
        v2 = tuple(_real(x, f"checks[{i}].vertex[1]", backend) for x in _expect_list(pair[1], f"checks[{i}].vertex[1]"))
        checks.append(VertexCheck(
            c["side"], (v1, v2), decode_hyperbolic(c["value"], backend, f"checks[{i}].value")
        ))
    return SeparationCertificate(
        decode_dfunctional(d["f"], backend, "certificate.f"),
        decode_hyperbolic(d["gamma"], backend, "certificate.gamma"),
        trace,
        tuple(checks),
    )


def encode_hyperplane(L: DHyperplane) -> dict:
    return {"f": encode_dfunctional(L.f), "c": encode_hyperbolic(L.c)}


def decode_hyperplane(obj, backend: str = EXACT) -> DHyperplane:
    d = _expect_dict(obj, ("f", "c"), "hyperplane")
    return DHyperplane(
        decode_dfunctional(d["f"], backend, "hyperplane.f"),
        decode_hyperbolic(d["c"], backend, "hyperplane.c"),
    )
