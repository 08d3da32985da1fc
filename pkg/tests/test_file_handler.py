from __future__ import annotations

import json
import shutil
import unittest
from pathlib import Path

import numpy as np

from core.errors import ValidationError
from core.file_handler import (
    load_function,
    load_spectrum,
    load_vertex_set,
    save_function,
    save_spectrum,
    save_vertex_set,
)
from core.json_store import dump_document, load_document, write_text_atomic
from core.product_graph import VertexSet
from core.transform import fast_forward
from core.zrn import GridFunction, GridShape


class FileHandlerTest(unittest.TestCase):
    def setUp(self) -> None:
        self.tmpdir = Path("data/test_tmp/test_file_handler")
        shutil.rmtree(self.tmpdir, ignore_errors=True)
        self.tmpdir.mkdir(parents=True, exist_ok=True)

    def tearDown(self) -> None:
        shutil.rmtree(self.tmpdir, ignore_errors=True)

    def _write(self, name: str, payload) -> Path:
        path = self.tmpdir / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return path

    def test_ones_form_matches_dense_form(self) -> None:
        dense = self._write("dense.json", {"r": 3, "n": 2, "values": [1, 0, 0, 1, 0, 0, 0, 0, 0]})
        ones = self._write("ones.json", {"r": 3, "n": 2, "ones": [0, 3]})
        np.testing.assert_array_equal(load_function(dense).values, load_function(ones).values)

    def test_complex_pairs_survive_a_save(self) -> None:
        shape = GridShape(3, 1)
        f = GridFunction(shape, [0.1 + 0.2j, -1 / 3, 2j])
        path = self.tmpdir / "f.json"
        save_function(f, path)
        np.testing.assert_array_equal(load_function(path).values, f.values)
        doc = json.loads(path.read_text(encoding="utf-8"))
        self.assertEqual(doc["values"][1], [-1 / 3, 0.0])

    def test_spectrum_file(self) -> None:
        spec = fast_forward(GridFunction.indicator(GridShape(3, 2), [0, 3]))
        path = self.tmpdir / "s.json"
        save_spectrum(spec, path)
        self.assertIn("coeffs", json.loads(path.read_text(encoding="utf-8")))
        np.testing.assert_array_equal(load_spectrum(path).coeffs, spec.coeffs)

    def test_vertex_set_forms(self) -> None:
        by_points = self._write("a.json", {"r": 3, "n": 2, "vertices": [[0, 1], [0, 0]]})
        by_index = self._write("b.json", {"r": 3, "n": 2, "indices": [3, 0]})
        self.assertEqual(load_vertex_set(by_points).members, (0, 3))
        self.assertEqual(load_vertex_set(by_index).members, (0, 3))

    def test_yaml_suffix(self) -> None:
        A = VertexSet(GridShape(3, 2), (0, 3))
        path = self.tmpdir / "a.yaml"
        save_vertex_set(A, path)
        self.assertIn("vertices:", path.read_text(encoding="utf-8"))
        self.assertEqual(load_vertex_set(path).members, A.members)

    def test_schema_violations(self) -> None:
        cases = [
            {"r": 1, "n": 2, "vertices": []},
            {"r": 3, "vertices": []},
            {"r": 3, "n": 2},
            {"r": 3, "n": 2, "vertices": [[0, 3]]},
            {"r": 3, "n": 2, "indices": [True]},
            [1, 2, 3],
        ]
        for k, payload in enumerate(cases):
            with self.assertRaises(ValidationError):
                load_vertex_set(self._write(f"bad{k}.json", payload))
        with self.assertRaises(ValidationError):
            load_function(self._write("badf.json", {"r": 3, "n": 2, "values": ["x"] * 9}))
        with self.assertRaises(ValidationError):
            load_function(self._write("badlen.json", {"r": 3, "n": 2, "values": [0] * 8}))

    def test_missing_file_is_an_os_error(self) -> None:
        with self.assertRaises(OSError):
            load_vertex_set(self.tmpdir / "missing.json")

    def test_invalid_utf8_is_a_validation_error(self) -> None:
        path = self.tmpdir / "latin.json"
        path.write_bytes(b'{"r": 3, "n": 2, "vertices": [], "note": "\xff\xfe"}')
        with self.assertRaises(ValidationError):
            load_document(path)
        with self.assertRaises(ValidationError):
            load_vertex_set(path)

    def test_malformed_json(self) -> None:
        path = self.tmpdir / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        with self.assertRaises(ValidationError):
            load_document(path)


class JsonStoreTest(unittest.TestCase):
    def setUp(self) -> None:
        self.tmpdir = Path("data/test_tmp/test_json_store")
        shutil.rmtree(self.tmpdir, ignore_errors=True)
        self.tmpdir.mkdir(parents=True, exist_ok=True)

    def tearDown(self) -> None:
        shutil.rmtree(self.tmpdir, ignore_errors=True)

    def test_atomic_write_leaves_no_temp_file(self) -> None:
        path = self.tmpdir / "nested" / "out.csv"
        write_text_atomic(path, "a,b\n")
        self.assertEqual(path.read_text(encoding="utf-8"), "a,b\n")
        self.assertEqual(sorted(p.name for p in path.parent.iterdir()), ["out.csv"])

    def test_failed_write_keeps_previous_content(self) -> None:
        path = self.tmpdir / "out.json"
        dump_document(path, {"ok": 1})
        with self.assertRaises(ValueError):
            dump_document(path, {"bad": float("nan")})
        self.assertEqual(load_document(path), {"ok": 1})
        self.assertFalse((self.tmpdir / "out.json.tmp").exists())


if __name__ == "__main__":
    unittest.main()
