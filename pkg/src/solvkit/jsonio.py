"""JSON loading and dumping for algebras, J matrices, forms, and lattice data.

The document format:

    { "dim": 4,
      "basis": ["X1", "X2", "X3", "X4"],
      "field": "real" | "complex",
      "brackets": [ {"i": 1, "j": 2, "out": {"3": "-1"}}, ... ],
      "sigma": [["1", "0", ...], ...],          # optional, complex field
      "J": [["0", "-1", ...], ...] }            # optional

Indices in documents are 1-based with i < j; scalars are exact literals
("p/q" or "p/q+r/s*i", plain ints allowed). Schema violations raise
SchemaError with a JSON-path diagnostic; Jacobi failures raise SchemaError
carrying the witness triple.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .cxstruct import AlmostComplexStructure
from .errors import SchemaError
from .liealg import LieAlgebra
from .pkforms import TwoForm
from .scalars import Scalar, format_scalar, parse_scalar


def load_document(path: str) -> dict:
    try:
        with open(path, "r") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise SchemaError("cannot read %s: %s" % (path, e))
    except json.JSONDecodeError as e:
        raise SchemaError("%s is not valid JSON: %s" % (path, e))
    if not isinstance(doc, dict):
        raise SchemaError("%s: top level must be a JSON object" % path)
    return doc


def _scalar_at(raw, where: str) -> Scalar:
    try:
        return parse_scalar(raw)
    except ValueError as e:
        raise SchemaError("%s: %s" % (where, e))


def _matrix_at(raw, dim: int, where: str) -> List[List[Scalar]]:
    if not isinstance(raw, list) or len(raw) != dim or \
            any(not isinstance(row, list) or len(row) != dim for row in raw):
        raise SchemaError("%s: expected a %dx%d matrix" % (where, dim, dim))
    return [[_scalar_at(x, "%s[%d][%d]" % (where, r, c))
             for c, x in enumerate(row)] for r, row in enumerate(raw)]


def algebra_from_document(doc: dict, validate: bool = True) -> LieAlgebra:
    dim = doc.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise SchemaError("dim: positive integer required")
    field = doc.get("field", "real")
    if field not in ("real", "complex"):
        raise SchemaError('field: must be "real" or "complex"')
    basis = doc.get("basis")
    if basis is not None:
        if not isinstance(basis, list) or len(basis) != dim or \
                any(not isinstance(b, str) for b in basis):
            raise SchemaError("basis: need %d label strings" % dim)
    raw_brackets = doc.get("brackets", [])
    if not isinstance(raw_brackets, list):
        raise SchemaError("brackets: expected a list")
    table: Dict[Tuple[int, int], Dict[int, Scalar]] = {}
    for t, item in enumerate(raw_brackets):
        where = "brackets[%d]" % t
        if not isinstance(item, dict):
            raise SchemaError("%s: expected an object" % where)
        i = item.get("i")
        j = item.get("j")
        for label, val in (("i", i), ("j", j)):
            if not isinstance(val, int) or isinstance(val, bool):
                raise SchemaError("%s.%s: integer required" % (where, label))
        if i == j:
            raise SchemaError("%s: diagonal bracket i == j == %d is not "
                              "allowed (antisymmetry)" % (where, i))
        if not (1 <= i < j <= dim):
            raise SchemaError("%s: need 1 <= i < j <= dim, got i=%d j=%d"
                              % (where, i, j))
        out = item.get("out")
        if not isinstance(out, dict):
            raise SchemaError("%s.out: expected an object" % where)
        row: Dict[int, Scalar] = {}
        for key, val in out.items():
            try:
                k = int(key)
            except (TypeError, ValueError):
                raise SchemaError("%s.out: bad index %r" % (where, key))
            if not 1 <= k <= dim:
                raise SchemaError("%s.out: index %d out of range" % (where, k))
            row[k - 1] = _scalar_at(val, "%s.out[%r]" % (where, key))
        if (i - 1, j - 1) in table:
            raise SchemaError("%s: duplicate bracket (%d, %d)" % (where, i, j))
        table[(i - 1, j - 1)] = row
    sigma = None
    if "sigma" in doc:
        sigma = _matrix_at(doc["sigma"], dim, "sigma")
    try:
        l = LieAlgebra(dim, table, basis=basis, form=field, sigma=sigma)
    except ValueError as e:
        raise SchemaError(str(e))
    if validate:
        report = l.jacobi_check()
        if not report.ok:
            i, j, k = report.witness
            err = SchemaError("brackets violate the Jacobi identity at basis "
                              "triple (%d, %d, %d)" % (i + 1, j + 1, k + 1))
            err.witness = (i + 1, j + 1, k + 1)
            raise err
    return l


def load_algebra(path: str, validate: bool = True) -> LieAlgebra:
    return algebra_from_document(load_document(path), validate=validate)


def j_from_document(doc: dict) -> Optional[AlmostComplexStructure]:
    if "J" not in doc:
        return None
    dim = doc.get("dim")
    if not isinstance(dim, int):
        raise SchemaError("dim: positive integer required")
    m = _matrix_at(doc["J"], dim, "J")
    try:
        return AlmostComplexStructure(m)
    except ValueError as e:
        raise SchemaError("J: %s" % e)


def load_j_matrix(path: str, dim: int) -> AlmostComplexStructure:
    """Read a J stored either bare ([[...]]) or under a "J" key."""
    try:
        with open(path, "r") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise SchemaError("cannot read %s: %s" % (path, e))
    except json.JSONDecodeError as e:
        raise SchemaError("%s is not valid JSON: %s" % (path, e))
    raw = doc.get("J") if isinstance(doc, dict) else doc
    m = _matrix_at(raw, dim, "J")
    try:
        return AlmostComplexStructure(m)
    except ValueError as e:
        raise SchemaError("J: %s" % e)


def load_holonomy(path: str) -> List[List[List[Fraction]]]:
    """Read holonomy generators: a list of square matrices with exact entries.

    Accepts either a bare list or {"generators": [...]}.
    """
    try:
        with open(path, "r") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise SchemaError("cannot read %s: %s" % (path, e))
    except json.JSONDecodeError as e:
        raise SchemaError("%s is not valid JSON: %s" % (path, e))
    raw = doc.get("generators") if isinstance(doc, dict) else doc
    if not isinstance(raw, list):
        raise SchemaError("holonomy: expected a list of matrices")
    out = []
    for g, mat in enumerate(raw):
        where = "generators[%d]" % g
        if not isinstance(mat, list) or not mat:
            raise SchemaError("%s: expected a nonempty matrix" % where)
        n = len(mat)
        if any(not isinstance(row, list) or len(row) != n for row in mat):
            raise SchemaError("%s: matrix must be square" % where)
        rows = []
        for r, row in enumerate(mat):
            vals = []
            for c, x in enumerate(row):
                s = _scalar_at(x, "%s[%d][%d]" % (where, r, c))
                if s.im != 0:
                    raise SchemaError("%s[%d][%d]: real entry required"
                                      % (where, r, c))
                vals.append(s.re)
            rows.append(vals)
        out.append(rows)
    return out


def load_two_form(path: str, dim: int) -> TwoForm:
    """Read a 2-form given as entries {"i": 1, "j": 4, "coeff": "2"} (1-based)."""
    try:
        with open(path, "r") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise SchemaError("cannot read %s: %s" % (path, e))
    except json.JSONDecodeError as e:
        raise SchemaError("%s is not valid JSON: %s" % (path, e))
    raw = doc.get("terms") if isinstance(doc, dict) else doc
    if not isinstance(raw, list):
        raise SchemaError("omega: expected a list of {i, j, coeff} entries")
    coeffs: Dict[Tuple[int, int], Scalar] = {}
    for t, item in enumerate(raw):
        where = "omega[%d]" % t
        if not isinstance(item, dict):
            raise SchemaError("%s: expected an object" % where)
        i = item.get("i")
        j = item.get("j")
        if not isinstance(i, int) or not isinstance(j, int):
            raise SchemaError("%s: integer i, j required" % where)
        if i == j:
            raise SchemaError("%s: i == j is not allowed" % where)
        if not (1 <= i < j <= dim):
            raise SchemaError("%s: need 1 <= i < j <= %d" % (where, dim))
        if (i - 1, j - 1) in coeffs:
            raise SchemaError("%s: duplicate entry (%d, %d)" % (where, i, j))
        coeffs[(i - 1, j - 1)] = _scalar_at(item.get("coeff"),
                                            "%s.coeff" % where)
    try:
        return TwoForm(dim, coeffs)
    except ValueError as e:
        raise SchemaError("omega: %s" % e)


# ---------------------------------------------------------------------------
# dumping

def dump_algebra(l: LieAlgebra, j: Optional[AlmostComplexStructure] = None) -> dict:
    brackets = []
    for (i, jj) in sorted(l._table):
        out = {str(k + 1): format_scalar(c)
               for k, c in sorted(l._table[(i, jj)].items())}
        brackets.append({"i": i + 1, "j": jj + 1, "out": out})
    doc = {"dim": l.dim, "basis": list(l.basis), "field": l.form,
           "brackets": brackets}
    if l.sigma is not None:
        doc["sigma"] = [[format_scalar(x) for x in row] for row in l.sigma]
    if j is not None:
        doc["J"] = [[format_scalar(x) for x in row] for row in j.matrix]
    return doc


def _complex_pair(z: complex) -> List[float]:
    return [float(z.real), float(z.imag)]


def dump_lattice_spec(spec) -> dict:
    doc = {
        "kind": spec.kind,
        "classification": spec.classification,
        "A": spec.a_matrix,
        "B": spec.b_matrix,
        "k": spec.k,
        "char_poly": [str(c) for c in spec.char_polynomial.coeffs]
        if spec.char_polynomial is not None else None,
        "delta_generators": [[_complex_pair(a), _complex_pair(b)]
                             for a, b in spec.delta_generators],
        "lambda_generators": [_complex_pair(z)
                              for z in spec.lambda_generators],
        "residual": spec.residual,
        "independence_margin": spec.independence_margin,
    }
    return doc


def dump_search_entries(entries) -> List[dict]:
    return [{
        "p": e.p,
        "q": e.q,
        "coeffs": [str(c) for c in e.polynomial.coeffs],
        "companion": [list(row) for row in e.companion],
        "classification": e.classification,
        "reason": e.reason,
    } for e in entries]


def dumps_canonical(obj) -> str:
    """Deterministic JSON text: fixed key order as constructed, 2-space indent."""
    return json.dumps(obj, indent=2, allow_nan=False)
