"""JSON wire-format round-trips and schema validation."""

import json
from fractions import Fraction
from random import Random

import pytest

from bicomplex.analysis import separate_hyperbolic
from bicomplex.backend import EXACT, FLOAT
from bicomplex.convex import DConvexSet
from bicomplex.errors import SchemaError
from bicomplex.generators import (
    rand_bcfunctional,
    rand_bcmap,
    rand_bcvector,
    rand_bicomplex,
    rand_cover,
    rand_dfunctional,
    rand_dvector,
    rand_hyperbolic,
    rand_separation_instance,
)
from bicomplex.polytope import Halfspace, RealPolytope
from bicomplex.scalars import ComplexScalar, HyperbolicScalar
from bicomplex.serialize import (
    decode_bcfunctional,
    decode_bcvector,
    decode_bicomplex,
    decode_certificate,
    decode_complex,
    decode_cover,
    decode_dconvex,
    decode_dfunctional,
    decode_dvector,
    decode_hyperbolic,
    decode_hyperplane,
    decode_map,
    decode_polytope,
    decode_rectset,
    encode_bcfunctional,
    encode_bcvector,
    encode_bicomplex,
    encode_certificate,
    encode_complex,
    encode_cover,
    encode_dconvex,
    encode_dfunctional,
    encode_dvector,
    encode_hyperbolic,
    encode_hyperplane,
    encode_map,
    encode_polytope,
    encode_rectset,
)
from bicomplex.analysis import DHyperplane
from bicomplex.linear import DLinearFunctional
from bicomplex.metric import RectSet

F = Fraction


def through_json(obj):
    """Force a real serialization pass, not just dict identity."""
    return json.loads(json.dumps(obj))


class TestScalarCodecs:
    def test_fraction_encoding_is_string(self):
        doc = encode_hyperbolic(HyperbolicScalar(F(1, 2), F(3)))
        assert doc == {"e1": "1/2", "e2": "3"}

    def test_roundtrips(self):
        rng = Random("scalar-codec")
        for _ in range(25):
            a = rand_hyperbolic(rng)
            assert decode_hyperbolic(through_json(encode_hyperbolic(a))) == a
            z = rand_bicomplex(rng)
            assert decode_bicomplex(through_json(encode_bicomplex(z))) == z
            assert decode_complex(through_json(encode_complex(z.z1))) == z.z1

    def test_float_backend_decodes_to_floats(self):
        v = decode_hyperbolic({"e1": "1/2", "e2": 1}, FLOAT)
        assert v.a1 == 0.5 and isinstance(v.a1, float)
        assert v.a2 == 1.0 and isinstance(v.a2, float)

    def test_missing_key_rejected(self):
        with pytest.raises(SchemaError):
            decode_hyperbolic({"e1": 1})

    def test_bad_number_rejected(self):
        with pytest.raises(SchemaError):
            decode_hyperbolic({"e1": "zero", "e2": 1})
        with pytest.raises(SchemaError):
            decode_hyperbolic({"e1": True, "e2": 1})
        with pytest.raises(SchemaError):
            decode_hyperbolic({"e1": "1/0", "e2": 1})


class TestVectorAndMapCodecs:
    def test_roundtrips(self):
        rng = Random("vector-codec")
        for _ in range(15):
            dim = rng.randint(1, 3)
            x = rand_dvector(rng, dim)
            assert decode_dvector(through_json(encode_dvector(x))) == x
            y = rand_bcvector(rng, dim)
            assert decode_bcvector(through_json(encode_bcvector(y))) == y
            f = rand_dfunctional(rng, dim)
            assert decode_dfunctional(through_json(encode_dfunctional(f))) == f
            g = rand_bcfunctional(rng, dim)
            assert decode_bcfunctional(through_json(encode_bcfunctional(g))) == g
            T = rand_bcmap(rng, rng.randint(1, 2), dim)
            assert decode_map(through_json(encode_map(T))) == T

    def test_empty_collections_rejected(self):
        with pytest.raises(SchemaError):
            decode_dvector({"coords": []})
        with pytest.raises(SchemaError):
            decode_bcfunctional({"coeffs": []})
        with pytest.raises(SchemaError):
            decode_map({"rows": []})

    def test_ragged_matrix_rejected(self):
        z = encode_bicomplex(rand_bicomplex(Random("ragged")))
        with pytest.raises(SchemaError):
            decode_map({"rows": [[z, z], [z]]})


class TestGeometryCodecs:
    def test_vrep_roundtrip(self):
        P = RealPolytope.box(2, F(-1), F(1))
        doc = through_json(encode_polytope(P))
        Q = decode_polytope(doc)
        assert sorted(Q.vertices()) == sorted(P.vertices())

    def test_hrep_roundtrip_keeps_strict_flags(self):
        faces = [
            Halfspace((F(1),), F(1), True),
            Halfspace((F(-1),), F(1), False),
        ]
        P = RealPolytope.from_halfspaces(faces, 1)
        doc = through_json(encode_polytope(P))
        Q = decode_polytope(doc)
        got = Q.halfspaces()
        assert [(hs.a, hs.b, hs.strict) for hs in got] == [
            ((F(1),), F(1), True),
            ((F(-1),), F(1), False),
        ]

    def test_polytope_schema_errors(self):
        with pytest.raises(SchemaError):
            decode_polytope({})
        with pytest.raises(SchemaError):
            decode_polytope({"vertices": []})
        with pytest.raises(SchemaError):
            decode_polytope({"vertices": [[1], [1, 2]]})
        with pytest.raises(SchemaError):
            decode_polytope({"halfspaces": [{"a": [1], "b": 1, "strict": "yes"}]})

    def test_dconvex_roundtrip_with_open_flag(self):
        A = DConvexSet(
            RealPolytope.box(1, F(-1), F(1)),
            RealPolytope.box(1, F(0), F(2)),
            open=True,
        )
        doc = through_json(encode_dconvex(A))
        got = decode_dconvex(doc)
        assert got.open
        assert sorted(got.p1.vertices()) == sorted(A.p1.vertices())
        assert sorted(got.p2.vertices()) == sorted(A.p2.vertices())

    def test_dconvex_component_dimension_mismatch_is_schema_error(self):
        doc = {
            "p1": {"vertices": [[0], [1]]},
            "p2": {"vertices": [[0, 0], [1, 1]]},
        }
        with pytest.raises(SchemaError):
            decode_dconvex(doc)

    def test_rectset_roundtrip_and_validation(self):
        R = RectSet((F(-1), F(1)), (F(0), F(2)))
        assert decode_rectset(through_json(encode_rectset(R))) == R
        with pytest.raises(SchemaError):
            decode_rectset({"c1": [0, 1, 2], "c2": [0, 1]})
        with pytest.raises(SchemaError):
            decode_rectset({"c1": [1, 0], "c2": [0, 1]})

    def test_cover_roundtrip(self):
        cover, bounding = rand_cover(Random("cover-codec"))
        doc = through_json(encode_cover(cover, bounding))
        got_cover, got_bounding = decode_cover(doc)
        assert got_cover == cover
        assert got_bounding == bounding


class TestCertificateCodecs:
    def build_cert(self):
        A, B = rand_separation_instance(Random("cert-codec"), 2)
        return separate_hyperbolic(A, B)

    def test_certificate_roundtrip(self):
        cert = self.build_cert()
        doc = through_json(encode_certificate(cert))
        got = decode_certificate(doc)
        assert got.f == cert.f
        assert got.gamma == cert.gamma
        assert got.checks == cert.checks
        assert got.trace["x0"] == cert.trace["x0"]
        assert got.trace["a0"] == cert.trace["a0"]
        assert got.trace["b0"] == cert.trace["b0"]
        assert got.trace["qg_x0"] == cert.trace["qg_x0"]
        assert got.trace["interp"] == cert.trace["interp"]
        assert sorted(got.trace["G"].p1.vertices()) == sorted(cert.trace["G"].p1.vertices())

    def test_certificate_schema_errors(self):
        cert = self.build_cert()
        doc = through_json(encode_certificate(cert))
        bad = json.loads(json.dumps(doc))
        bad["checks"][0]["side"] = "C"
        with pytest.raises(SchemaError):
            decode_certificate(bad)
        with pytest.raises(SchemaError):
            decode_certificate({"f": doc["f"], "gamma": doc["gamma"]})

    def test_hyperplane_roundtrip(self):
        L = DHyperplane(
            DLinearFunctional.from_parts([F(1, 2), F(3)], [F(-1), F(2, 7)]),
            HyperbolicScalar(F(1), F(1)),
        )
        got = decode_hyperplane(through_json(encode_hyperplane(L)))
        assert got == L
