"""Tests for the deterministic JSON interchange layer."""

import json
import math

import numpy as np
import pytest

from neartoeplitz import (
    DenseMatrix,
    MatrixFormatError,
    TridiagonalMatrix,
    build_K,
    build_R,
    build_S,
    diag_symmetrize,
    near_toeplitz_eigen,
    reduce_R,
    spectrum_compare,
)
from neartoeplitz.serialize import (
    comparison_to_doc,
    format_complex,
    format_float,
    load_matrix_file,
    matrix_from_doc,
    matrix_to_doc,
    reduction_to_doc,
    render_json,
    report_to_doc,
    symmetrization_to_doc,
)


class TestFloatFormatting:
    def test_seventeen_significant_digits(self):
        assert format_float(math.sqrt(2.0)) == "1.4142135623730951"
        assert format_float(2.0 / 3.0) == "0.66666666666666663"

    def test_zero_canonicalized(self):
        assert format_float(0.0) == "0"
        assert format_float(-0.0) == "0"

    def test_integers_render_plainly(self):
        assert format_float(1.0) == "1"
        assert format_float(-2.0) == "-2"

    def test_round_trip(self):
        for x in (math.pi, -1e-300, 3.5e17, 0.1):
            assert float(format_float(x)) == x

    def test_complex_literals(self):
        assert format_complex(-1.0) == "-1"
        assert format_complex(1j) == "0+1i"
        assert format_complex(2.0 - 3.0j) == "2-3i"


class TestRenderJson:
    def test_output_is_valid_json(self):
        doc = report_to_doc(near_toeplitz_eigen(5))
        parsed = json.loads(render_json(doc))
        assert parsed["n"] == 5
        assert parsed["zero_multiplicity"] == 1

    def test_field_order_is_fixed(self):
        doc = report_to_doc(near_toeplitz_eigen(2))
        text = render_json(doc)
        order = [
            text.index('"matrix"'),
            text.index('"n"'),
            text.index('"pairs"'),
            text.index('"zero_multiplicity"'),
            text.index('"max_residual"'),
            text.index('"verified"'),
        ]
        assert order == sorted(order)

    def test_determinism(self):
        a = render_json(report_to_doc(near_toeplitz_eigen(7)))
        b = render_json(report_to_doc(near_toeplitz_eigen(7)))
        assert a == b


class TestMatrixDocs:
    def test_tridiagonal_round_trip(self):
        k = build_K(4)
        back = matrix_from_doc(json.loads(render_json(matrix_to_doc(k))))
        assert isinstance(back, TridiagonalMatrix)
        assert np.array_equal(back.sub, k.sub)
        assert np.array_equal(back.diag, k.diag)
        assert np.array_equal(back.sup, k.sup)

    def test_dense_round_trip(self):
        s = build_S(3)
        back = matrix_from_doc(json.loads(render_json(matrix_to_doc(s))))
        assert isinstance(back, DenseMatrix)
        assert np.array_equal(back.entries, s.entries)

    def test_complex_entries_survive(self):
        m = TridiagonalMatrix(
            sub=np.array([1.5 - 2.0j]),
            diag=np.array([0.25j, -3.0]),
            sup=np.array([1e-30]),
        )
        back = matrix_from_doc(json.loads(render_json(matrix_to_doc(m))))
        assert np.array_equal(back.diag, m.diag)
        assert np.array_equal(back.sup, m.sup)

    @pytest.mark.parametrize(
        "doc",
        [
            [],
            {"kind": "dense"},
            {"n": 0, "kind": "dense", "entries": []},
            {"n": 2, "kind": "sparse"},
            {"n": 2, "kind": "dense", "entries": [{"re": 0, "im": 0}] * 3},
            {"n": 2, "kind": "tridiagonal", "sub": [], "diag": []},
            {
                "n": 1,
                "kind": "dense",
                "entries": [{"re": "x", "im": 0}],
            },
            {"n": 1, "kind": "dense", "entries": [{"real": 0, "imag": 0}]},
        ],
    )
    def test_malformed_documents_rejected(self, doc):
        with pytest.raises(MatrixFormatError):
            matrix_from_doc(doc)

    def test_load_matrix_file_diagnostics(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"n": 3, "kind": "tridiagonal"')
        with pytest.raises(MatrixFormatError):
            load_matrix_file(path)
        with pytest.raises(MatrixFormatError):
            load_matrix_file(tmp_path / "missing.json")


class TestCertificateDocs:
    def test_reduction_doc_shape(self):
        doc = reduction_to_doc(reduce_R(3))
        assert doc["identity"] == "reduction"
        assert doc["n"] == 3
        assert doc["exact_match"] is True
        assert set(doc["witnesses"]) == {"s", "s_inv", "conjugated", "expected"}
        json.loads(render_json(doc))

    def test_symmetrization_doc_shape(self):
        doc = symmetrization_to_doc(diag_symmetrize(4, 0, 1, 3))
        assert doc["identity"] == "symmetrization"
        assert doc["residual"] == 0.0
        assert doc["witnesses"]["d"] == {"re": 0.5, "im": 0.0}
        json.loads(render_json(doc))

    def test_comparison_doc_shape(self):
        comparison = spectrum_compare(near_toeplitz_eigen(4).eigenvalues(), build_R(4))
        doc = comparison_to_doc(comparison)
        assert doc["pass"] is True
        assert [c["name"] for c in doc["checks"]] == ["charpoly", "trace", "trace2", "det"]
        json.loads(render_json(doc))
