"""Load and save grid functions, spectra and vertex sets (JSON, or YAML by suffix)."""
from __future__ import annotations

import logging
import os
from typing import Any

import numpy as np

from core.errors import ValidationError
from core.json_store import dump_document, load_document
from core.product_graph import VertexSet
from core.zrn import BooleanFunction, GridFunction, GridShape, Spectrum, point_of

logger = logging.getLogger(__name__)


def _float17(value: float) -> float:
    return float(format(float(value), ".17g"))


def _complex_pairs(values: np.ndarray) -> list[list[float]]:
    return [[_float17(z.real), _float17(z.imag)] for z in values]


def _require_mapping(doc: Any, path: str | os.PathLike) -> dict:
    if not isinstance(doc, dict):
        raise ValidationError(f"{path}: expected an object at the top level")
    return doc


def _shape_from(doc: dict, path: str | os.PathLike) -> GridShape:
    if "r" not in doc or "n" not in doc:
        raise ValidationError(f"{path}: missing 'r' or 'n'")
    return GridShape(doc["r"], doc["n"])


def _parse_pairs(raw: Any, key: str, path: str | os.PathLike) -> np.ndarray:
    if not isinstance(raw, list):
        raise ValidationError(f"{path}: '{key}' must be a list")
    out = np.empty(len(raw), dtype=np.complex128)
    for k, item in enumerate(raw):
        if isinstance(item, (int, float)) and not isinstance(item, bool):
            out[k] = complex(item, 0.0)
        elif (
            isinstance(item, list)
            and len(item) == 2
            and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in item)
        ):
            out[k] = complex(item[0], item[1])
        else:
            raise ValidationError(f"{path}: entry {k} of '{key}' is not a number or [re, im] pair")
    return out


def function_from_document(doc: Any, path: str | os.PathLike = "<document>") -> GridFunction:
    doc = _require_mapping(doc, path)
    shape = _shape_from(doc, path)
    if "values" in doc:
        return GridFunction(shape, _parse_pairs(doc["values"], "values", path))
    if "ones" in doc:
        ones = doc["ones"]
        if not isinstance(ones, list) or not all(isinstance(k, int) and not isinstance(k, bool) for k in ones):
            raise ValidationError(f"{path}: 'ones' must be a list of point indices")
        for k in ones:
            point_of(k, shape)
        return BooleanFunction.from_ones(shape, ones)
    raise ValidationError(f"{path}: expected 'values' or 'ones'")


def function_to_document(f: GridFunction) -> dict:
    return {"r": f.shape.r, "n": f.shape.n, "values": _complex_pairs(f.values)}


def load_function(path: str | os.PathLike) -> GridFunction:
    """Missing file -> OSError; schema violation -> ValidationError."""
    return function_from_document(load_document(path), path)


def save_function(f: GridFunction, path: str | os.PathLike) -> None:
    dump_document(path, function_to_document(f))
    logger.debug("wrote %s values to %s", f.shape.size, path)


def spectrum_to_document(spec: Spectrum) -> dict:
    return {"r": spec.shape.r, "n": spec.shape.n, "coeffs": _complex_pairs(spec.coeffs)}


def load_spectrum(path: str | os.PathLike) -> Spectrum:
    doc = _require_mapping(load_document(path), path)
    shape = _shape_from(doc, path)
    if "coeffs" not in doc:
        raise ValidationError(f"{path}: expected 'coeffs'")
    return Spectrum(shape, _parse_pairs(doc["coeffs"], "coeffs", path))


def save_spectrum(spec: Spectrum, path: str | os.PathLike) -> None:
    dump_document(path, spectrum_to_document(spec))


def vertex_set_from_document(doc: Any, path: str | os.PathLike = "<document>") -> VertexSet:
    doc = _require_mapping(doc, path)
    shape = _shape_from(doc, path)
    if "vertices" in doc:
        vertices = doc["vertices"]
        if not isinstance(vertices, list) or not all(isinstance(v, list) for v in vertices):
            raise ValidationError(f"{path}: 'vertices' must be a list of coordinate lists")
        return VertexSet.from_points(shape, vertices)
    if "indices" in doc:
        indices = doc["indices"]
        if not isinstance(indices, list) or not all(isinstance(k, int) and not isinstance(k, bool) for k in indices):
            raise ValidationError(f"{path}: 'indices' must be a list of point indices")
        return VertexSet(shape, tuple(indices))
    raise ValidationError(f"{path}: expected 'vertices' or 'indices'")


def vertex_set_to_document(A: VertexSet) -> dict:
    return {"r": A.shape.r, "n": A.shape.n, "vertices": [list(p) for p in A.points()]}


def load_vertex_set(path: str | os.PathLike) -> VertexSet:
    return vertex_set_from_document(load_document(path), path)


def save_vertex_set(A: VertexSet, path: str | os.PathLike) -> None:
    dump_document(path, vertex_set_to_document(A))
