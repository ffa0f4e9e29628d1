"""JSON document formats: group specs, kernels, functions, coefficients, symbols.

Complex numbers are always serialized as two-element [re, im] arrays.
"""

import json

import numpy as np

from .catalog import CatalogEntry
from .groups import (GroupError, Irrep, finite_group, subgroup, verify_irrep)


def complex_to_pair(z):
    z = complex(z)
    return [z.real, z.imag]


def pair_to_complex(pair):
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise GroupError("complex values must be [re, im] pairs")
    return complex(float(pair[0]), float(pair[1]))


def cmatrix_to_json(m):
    m = np.asarray(m, dtype=complex)
    return [[complex_to_pair(z) for z in row] for row in m]


def json_to_cmatrix(rows):
    return np.array([[pair_to_complex(z) for z in row] for row in rows], dtype=complex)


def cvector_to_json(v):
    return [complex_to_pair(z) for z in np.asarray(v, dtype=complex)]


def json_to_cvector(items):
    return np.array([pair_to_complex(z) for z in items], dtype=complex)


# -- group spec documents ----------------------------------------------------

def load_group_document(doc):
    """Parse a group spec document into a CatalogEntry, verifying every axiom."""
    if not isinstance(doc, dict):
        raise GroupError("group document must be an object")
    for key in ("name", "order", "cayley"):
        if key not in doc:
            raise GroupError(f"group document missing field {key!r}")
    name = str(doc["name"])
    order = int(doc["order"])
    cayley = np.asarray(doc["cayley"], dtype=int)
    if cayley.shape != (order, order):
        raise GroupError("cayley table shape does not match the declared order")
    group = finite_group(name, cayley)

    subs = {"e": subgroup(group, [group.identity])}
    for sub_name, elements in dict(doc.get("subgroups", {})).items():
        subs[str(sub_name)] = subgroup(group, elements)
    subs.setdefault(name, subgroup(group, range(order)))

    irreps = []
    for item in doc.get("irreps", []):
        label = str(item["label"])
        dim = int(item["dim"])
        mats = np.array([json_to_cmatrix(m) for m in item["matrices"]])
        if mats.shape != (order, dim, dim):
            raise GroupError(f"irrep {label}: expected {order} matrices of size {dim}")
        rho = Irrep(label=label, dim=dim, matrices=mats)
        report = verify_irrep(group, rho)
        if not report.passed:
            raise GroupError(
                f"irrep {label} failed verification: hom {report.hom_residual:.2e}, "
                f"unitary {report.unitarity_residual:.2e}, "
                f"irreducibility {report.irreducibility_sum:.6f}")
        irreps.append(rho)

    generators = tuple(int(s) for s in doc.get(
        "laplacian_generators", [g for g in range(order) if g != group.identity]))
    return CatalogEntry(group=group, subgroups=subs, irreps=tuple(irreps),
                        laplacian_generators=generators)


def load_group_file(path):
    with open(path, encoding="utf-8") as fh:
        return load_group_document(json.load(fh))


def group_document(entry):
    """Serialize a CatalogEntry back to the document format."""
    group = entry.group
    return {
        "name": group.name,
        "order": group.order,
        "cayley": group.cayley.tolist(),
        "subgroups": {name: list(sub.elements)
                      for name, sub in entry.subgroups.items()},
        "irreps": [{
            "label": rho.label,
            "dim": rho.dim,
            "matrices": [cmatrix_to_json(m) for m in rho.matrices],
        } for rho in entry.irreps],
        "laplacian_generators": list(entry.laplacian_generators),
    }


# -- kernels, functions, coefficients, symbols -------------------------------

def kernel_document(op):
    return {"size": op.space.n_cosets, "kernel": cmatrix_to_json(op.kernel)}


def parse_kernel_document(doc, space):
    if not isinstance(doc, dict) or "size" not in doc or "kernel" not in doc:
        raise GroupError("kernel document must carry 'size' and 'kernel'")
    size = int(doc["size"])
    if size != space.n_cosets:
        raise GroupError(
            f"kernel size {size} does not match the coset space ({space.n_cosets})")
    kernel = json_to_cmatrix(doc["kernel"])
    if kernel.shape != (size, size):
        raise GroupError("kernel matrix shape does not match its declared size")
    from .quantize import LinearOperator
    return LinearOperator(space=space, kernel=kernel)


def function_document(f):
    return {"size": f.space.n_cosets, "values": cvector_to_json(f.values)}


def parse_function_document(doc, space):
    values = json_to_cvector(doc["values"])
    from .fourier import CosetFunction
    return CosetFunction(space=space, values=values)


def coefficients_document(coeffs):
    return {"classes": [{
        "label": cls.label,
        "dim": cls.dim,
        "matrix": cmatrix_to_json(block),
    } for cls, block in zip(coeffs.dual.classes, coeffs.blocks)]}


def parse_coefficients_document(doc, dual):
    blocks = []
    items = {item["label"]: item for item in doc["classes"]}
    for cls in dual.classes:
        if cls.label not in items:
            raise GroupError(f"coefficient document missing class {cls.label!r}")
        block = json_to_cmatrix(items[cls.label]["matrix"])
        if block.shape != (cls.dim, cls.dim):
            raise GroupError(f"block for {cls.label} has the wrong shape")
        blocks.append(block)
    from .fourier import FourierCoefficients
    return FourierCoefficients(dual=dual, blocks=tuple(blocks))


def symbol_document(sigma):
    return {"classes": [{
        "label": cls.label,
        "dim": cls.dim,
        "projection_rank": cls.rank,
        "blocks": [cmatrix_to_json(b) for b in blk],
    } for cls, blk in zip(sigma.dual.classes, sigma.blocks)]}
