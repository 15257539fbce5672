"""JSON documents for algebras, ternary data and reports.

Every document carries ``"schema": 1``.  Coefficients are written as exact
rationals ("3/2", "-1") and read from strings or integers; floats are refused.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .algebras import AlgebraTable, BilinearMap, Sl2Data, TrilinearMap
from .exactlin import Matrix, format_scalar, to_scalar
from .jternary import JTernaryData
from .superspace import SuperSpace

SCHEMA = 1


class DocumentError(ValueError):
    """Malformed input; ``path`` names the offending field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


# ------------------------------------------------------------------ reading

def load_document(path) -> dict:
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    return check_header(doc)


def check_header(doc) -> dict:
    if not isinstance(doc, dict):
        raise DocumentError("$", "document must be a JSON object")
    if doc.get("schema") != SCHEMA:
        raise DocumentError("$.schema", f"expected {SCHEMA}, got {doc.get('schema')!r}")
    return doc


def _get(obj, key, path, kind=None, default=...):
    if not isinstance(obj, dict):
        raise DocumentError(path, "expected an object")
    if key not in obj:
        if default is not ...:
            return default
        raise DocumentError(f"{path}.{key}", "missing field")
    val = obj[key]
    if kind is not None and not isinstance(val, kind):
        raise DocumentError(f"{path}.{key}", f"expected {kind.__name__}")
    return val


def _coeff(x, path) -> Fraction:
    if isinstance(x, float):
        raise DocumentError(path, "floats are not exact; write the coefficient as a string")
    try:
        return to_scalar(x)
    except (TypeError, ValueError, ZeroDivisionError):
        raise DocumentError(path, f"cannot parse {x!r} as a rational") from None


def _basis(doc, role=None) -> SuperSpace:
    items = _get(doc, "basis", "$", list)
    labels, pars = [], []
    for i, b in enumerate(items):
        p = f"$.basis[{i}]"
        if role is not None and _get(b, "role", p, str, None) != role:
            continue
        lab = _get(b, "label", p, str)
        par = _get(b, "parity", p, int, 0)
        if par not in (0, 1):
            raise DocumentError(f"{p}.parity", "parity must be 0 or 1")
        if lab in labels:
            raise DocumentError(f"{p}.label", f"duplicate label {lab!r}")
        labels.append(lab)
        pars.append(par)
    return SuperSpace(tuple(labels), tuple(pars))


def _resolve(space: SuperSpace, label, path) -> int:
    if not isinstance(label, str):
        raise DocumentError(path, "expected a basis label")
    try:
        return space.index(label)
    except KeyError:
        raise DocumentError(path, f"unknown basis label {label!r}") from None


def _result(items, target: SuperSpace, path) -> list:
    if not isinstance(items, list):
        raise DocumentError(path, "expected a list of {basis, coeff}")
    out = {}
    for i, t in enumerate(items):
        p = f"{path}[{i}]"
        k = _resolve(target, _get(t, "basis", p), f"{p}.basis")
        out[k] = out.get(k, Fraction(0)) + _coeff(_get(t, "coeff", p), f"{p}.coeff")
    return [(k, c) for k, c in sorted(out.items()) if c]


def _product(doc, name, left, right, target, required=False) -> dict:
    prods = _get(doc, "products", "$", list, [])
    for i, pr in enumerate(prods):
        p = f"$.products[{i}]"
        if _get(pr, "name", p, str) != name:
            continue
        table = {}
        for j, e in enumerate(_get(pr, "entries", p, list)):
            q = f"{p}.entries[{j}]"
            a = _resolve(left, _get(e, "left", q), f"{q}.left")
            b = _resolve(right, _get(e, "right", q), f"{q}.right")
            if (a, b) in table:
                raise DocumentError(q, "repeated entry")
            table[(a, b)] = _result(_get(e, "result", q), target, f"{q}.result")
        return table
    if required:
        raise DocumentError("$.products", f"missing product {name!r}")
    return {}


def _guard(fn, path):
    try:
        return fn()
    except DocumentError:
        raise
    except ValueError as exc:
        raise DocumentError(path, str(exc)) from None


def _matrix(rows, n, path) -> Matrix:
    if not isinstance(rows, list) or len(rows) != n or any(not isinstance(r, list) or len(r) != n
                                                           for r in rows):
        raise DocumentError(path, f"expected a {n}x{n} matrix")
    return Matrix(n, n, [[_coeff(x, f"{path}[{i}][{j}]") for j, x in enumerate(r)]
                         for i, r in enumerate(rows)])


def parse_lie(doc) -> tuple[AlgebraTable, Sl2Data | None]:
    check_header(doc)
    space = _basis(doc)
    table = _product(doc, "bracket", space, space, space)
    g = _guard(lambda: AlgebraTable(space, table, "bracket"), "$.products")
    sl2 = _get(doc, "sl2", "$", dict, None)
    return g, (parse_sl2(g, sl2) if sl2 is not None else None)


def parse_sl2(g: AlgebraTable, spec: dict, path="$.sl2") -> Sl2Data:
    if all(k in spec for k in ("e", "f", "h")):
        v = [g.space.basis_vector(_resolve(g.space, spec[k], f"{path}.{k}")) for k in ("e", "f", "h")]
        return Sl2Data.from_elements(g, *v)
    if all(k in spec for k in ("E", "F", "H")):
        E, F, H = (_matrix(spec[k], g.dim, f"{path}.{k}") for k in ("E", "F", "H"))
        return Sl2Data(g.space, E, F, H)
    raise DocumentError(path, "give either element names e, f, h or matrices E, F, H")


def parse_jordan(doc) -> AlgebraTable:
    check_header(doc)
    space = _basis(doc)
    return _guard(lambda: AlgebraTable(space, _product(doc, "dot", space, space, space), "dot"),
                  "$.products")


def parse_ternary(doc) -> JTernaryData:
    check_header(doc)
    J, M = _basis(doc, "J"), _basis(doc, "M")
    jt = _guard(lambda: AlgebraTable(J, _product(doc, "dot", J, J, J), "dot"), "$.products")
    bul = _guard(lambda: BilinearMap(J, M, M, _product(doc, "bullet", J, M, M), "bullet"),
                 "$.products")
    st = _guard(lambda: BilinearMap(M, M, J, _product(doc, "star", M, M, J), "star"), "$.products")
    tt = {}
    for i, e in enumerate(_get(doc, "ternary", "$", list, [])):
        p = f"$.ternary[{i}]"
        key = tuple(_resolve(M, _get(e, k, p), f"{p}.{k}") for k in ("m1", "m2", "m3"))
        if key in tt:
            raise DocumentError(p, "repeated entry")
        tt[key] = _result(_get(e, "result", p), M, f"{p}.result")
    tri = _guard(lambda: TrilinearMap(M, tt), "$.ternary")
    return _guard(lambda: JTernaryData(jt, M, bul, st, tri), "$")


# ------------------------------------------------------------------ writing

def _res(vec_terms, target: SuperSpace) -> list:
    return [{"basis": target.labels[k], "coeff": format_scalar(c)} for k, c in vec_terms if c]


def _table_entries(table: dict, left: SuperSpace, right: SuperSpace, target: SuperSpace) -> list:
    out = []
    for (a, b) in sorted(table):
        res = _res(table[(a, b)], target)
        if res:
            out.append({"left": left.labels[a], "right": right.labels[b], "result": res})
    return out


def _basis_doc(space: SuperSpace, role=None) -> list:
    out = []
    for l, p in zip(space.labels, space.parities):
        d = {"label": l, "parity": p}
        if role:
            d["role"] = role
        out.append(d)
    return out


def matrix_doc(m: Matrix) -> list:
    return [[format_scalar(x) for x in row] for row in m.data]


def lie_document(g: AlgebraTable, name: str, sl2: Sl2Data | None = None, **extra) -> dict:
    doc = {"schema": SCHEMA, "name": name, "kind": "lie", "basis": _basis_doc(g.space),
           "products": [{"name": "bracket", "entries": _table_entries(g.table, g.space, g.space, g.space)}]}
    if sl2 is not None:
        doc["sl2"] = {"E": matrix_doc(sl2.E), "F": matrix_doc(sl2.F), "H": matrix_doc(sl2.H)}
    doc.update(extra)
    return doc


def lie_document_named_sl2(g: AlgebraTable, name: str, e: str, f: str, h: str) -> dict:
    doc = lie_document(g, name)
    doc["sl2"] = {"e": e, "f": f, "h": h}
    return doc


def jordan_document(j: AlgebraTable, name: str) -> dict:
    return {"schema": SCHEMA, "name": name, "kind": "jordan", "basis": _basis_doc(j.space),
            "products": [{"name": "dot", "entries": _table_entries(j.table, j.space, j.space, j.space)}]}


def ternary_document(d: JTernaryData, name: str) -> dict:
    J, M = d.J.space, d.M
    tern = []
    for key in sorted(d.triple.table):
        res = _res(d.triple.table[key], M)
        if res:
            tern.append({"m1": M.labels[key[0]], "m2": M.labels[key[1]], "m3": M.labels[key[2]],
                         "result": res})
    return {
        "schema": SCHEMA, "name": name, "kind": "ternary",
        "basis": _basis_doc(J, "J") + _basis_doc(M, "M"),
        "products": [
            {"name": "dot", "entries": _table_entries(d.J.table, J, J, J)},
            {"name": "bullet", "entries": _table_entries(d.bullet.table, J, M, M)},
            {"name": "star", "entries": _table_entries(d.star.table, M, M, J)},
        ],
        "ternary": tern,
    }


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False, sort_keys=False) + "\n"
