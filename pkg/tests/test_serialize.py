"""Document formats: group specs, kernels, functions, coefficients, symbols."""

import json

import numpy as np
import pytest

from cosetpdo.catalog import load_entry
from cosetpdo.fourier import CosetFunction, forward_transform
from cosetpdo.groups import GroupError, coset_space, dual_object
from cosetpdo.quantize import identity_operator, symbol_from_operator
from cosetpdo.serialize import (coefficients_document, complex_to_pair,
                                function_document, group_document,
                                json_to_cmatrix, kernel_document,
                                load_group_document, pair_to_complex,
                                parse_coefficients_document,
                                parse_function_document,
                                parse_kernel_document, symbol_document)


def test_complex_pairs():
    assert complex_to_pair(1.5 - 2.0j) == [1.5, -2.0]
    assert pair_to_complex([1.5, -2.0]) == 1.5 - 2.0j
    with pytest.raises(GroupError):
        pair_to_complex([1.0])


def test_group_document_roundtrip():
    entry = load_entry("S3")
    doc = group_document(entry)
    text = json.dumps(doc)         # must be valid JSON end to end
    back = load_group_document(json.loads(text))
    assert back.group.order == 6
    assert np.array_equal(back.group.cayley, entry.group.cayley)
    assert set(back.subgroups) == set(entry.subgroups)
    assert [r.label for r in back.irreps] == [r.label for r in entry.irreps]
    for mine, loaded in zip(entry.irreps, back.irreps):
        assert np.abs(mine.matrices - loaded.matrices).max() < 1e-15


def test_loaded_group_is_fully_usable():
    entry = load_entry("Q8")
    back = load_group_document(group_document(entry))
    space = coset_space(back.group, back.subgroups["Z4i"])
    dual = dual_object(space, back.irreps)
    assert sum(c.dim * c.rank for c in dual.classes) == space.n_cosets


def test_group_document_rejects_bad_irrep():
    entry = load_entry("S3")
    doc = group_document(entry)
    doc["irreps"][0]["matrices"][1][0][0] = [5.0, 0.0]   # break unitarity
    with pytest.raises(GroupError, match="failed verification"):
        load_group_document(doc)


def test_group_document_rejects_missing_fields():
    with pytest.raises(GroupError, match="missing field"):
        load_group_document({"name": "x", "order": 2})


def test_group_document_rejects_bad_table():
    doc = {"name": "x", "order": 2, "cayley": [[0, 0], [1, 1]]}
    with pytest.raises(GroupError, match="Latin square"):
        load_group_document(doc)


def test_kernel_document_roundtrip():
    entry = load_entry("S3")
    space = coset_space(entry.group, entry.subgroups["Z2a"])
    op = identity_operator(space)
    doc = kernel_document(op)
    back = parse_kernel_document(json.loads(json.dumps(doc)), space)
    assert np.abs(back.kernel - op.kernel).max() == 0.0
    with pytest.raises(GroupError, match="size"):
        parse_kernel_document({"size": 5, "kernel": []}, space)


def test_function_and_coefficients_roundtrip():
    entry = load_entry("Z12")
    space = coset_space(entry.group, entry.subgroups["Z3"])
    dual = dual_object(space, entry.irreps)
    f = CosetFunction(space, np.arange(4) * (1 + 2j))
    fdoc = function_document(f)
    back = parse_function_document(json.loads(json.dumps(fdoc)), space)
    assert np.abs(back.values - f.values).max() == 0.0
    coeffs = forward_transform(f, dual)
    cdoc = coefficients_document(coeffs)
    cback = parse_coefficients_document(json.loads(json.dumps(cdoc)), dual)
    for a, b in zip(coeffs.blocks, cback.blocks):
        assert np.abs(a - b).max() == 0.0


def test_symbol_document_shape():
    entry = load_entry("S3")
    space = coset_space(entry.group, entry.subgroups["Z2a"])
    dual = dual_object(space, entry.irreps)
    sigma = symbol_from_operator(identity_operator(space), dual)
    doc = symbol_document(sigma)
    assert [c["label"] for c in doc["classes"]] == ["trivial", "std"]
    blocks = doc["classes"][1]["blocks"]
    assert len(blocks) == 3
    assert json_to_cmatrix(blocks[0]).shape == (2, 2)
