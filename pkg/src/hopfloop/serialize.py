"""Canonical file formats and byte-stable JSON emission.

Scalars serialize as canonical strings ("p/q" in lowest terms, "p" when the
denominator is 1; decimal residues over a prime field).  The machine form of
every structure and report is canonical JSON: sorted keys, compact
separators, one trailing newline.  Parsing the canonical form and emitting it
again reproduces the bytes exactly.
"""

from __future__ import annotations

import json

from .bialgebra import Bialgebra
from .errors import FormatError
from .exactmat import Matrix, RATIONALS
from .loops import CayleyTable, table_from_rows
from .ydq import GPair, YDQModule, automorphism_from_matrix, module_view, same_base


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


# -- matrices -----------------------------------------------------------------


def matrix_to_obj(m: Matrix):
    fmt = m.field.fmt
    return [[fmt(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def matrix_from_obj(obj, field=RATIONALS) -> Matrix:
    if not isinstance(obj, list) or not obj or not all(isinstance(r, list) for r in obj):
        raise FormatError("matrix must be a non-empty list of rows")
    rows = [[field.parse(x) for x in r] for r in obj]
    return Matrix.from_rows(rows, field)


# -- Cayley tables ---------------------------------------------------------------


def cayley_to_obj(t: CayleyTable):
    obj = {"order": t.order, "table": [list(r) for r in t.table]}
    if t.name:
        obj["name"] = t.name
    return obj


def cayley_to_text(t: CayleyTable) -> str:
    lines = [f"order {t.order}"]
    lines += [" ".join(str(x) for x in row) for row in t.table]
    return "\n".join(lines) + "\n"


def cayley_from_obj(obj) -> CayleyTable:
    if "order" not in obj or "table" not in obj:
        raise FormatError("table document needs 'order' and 'table'")
    return table_from_rows(obj["table"], obj.get("name"))


# -- bialgebras --------------------------------------------------------------------


def bialgebra_to_obj(b: Bialgebra):
    fmt = b.field.fmt
    obj = {
        "dim": b.dim,
        "mult": [[[fmt(x) for x in row] for row in plane] for plane in b.mult],
        "unit": [fmt(x) for x in b.unit],
        "comult": [[[fmt(x) for x in row] for row in plane] for plane in b.comult],
        "counit": [fmt(x) for x in b.counit],
    }
    if b.antipode is not None:
        obj["antipode"] = matrix_to_obj(b.antipode)
    if b.name:
        obj["name"] = b.name
    return obj


def bialgebra_from_obj(obj, field=RATIONALS) -> Bialgebra:
    for key in ("dim", "mult", "unit", "comult", "counit"):
        if key not in obj:
            raise FormatError(f"bialgebra document missing {key!r}")
    parse = field.parse
    mult = [[[parse(x) for x in row] for row in plane] for plane in obj["mult"]]
    comult = [[[parse(x) for x in row] for row in plane] for plane in obj["comult"]]
    unit = [parse(x) for x in obj["unit"]]
    counit = [parse(x) for x in obj["counit"]]
    antipode = matrix_from_obj(obj["antipode"], field) if "antipode" in obj else None
    return Bialgebra(obj["dim"], mult, unit, comult, counit, antipode, obj.get("name"), field)


# -- modules and index pairs ----------------------------------------------------------


def ydq_to_obj(m: YDQModule):
    return {
        "base": bialgebra_to_obj(m.base),
        "dim": m.dim,
        "action": matrix_to_obj(m.action),
        "coaction": matrix_to_obj(m.coaction),
        "alpha": matrix_to_obj(m.index.alpha.matrix),
        "beta": matrix_to_obj(m.index.beta.matrix),
    }


def ydq_from_obj(obj, field=RATIONALS, base: Bialgebra = None) -> YDQModule:
    for key in ("base", "dim", "action", "coaction", "alpha", "beta"):
        if key not in obj:
            raise FormatError(f"module document missing {key!r}")
    doc_base = obj["base"]
    if isinstance(doc_base, dict):
        inline = bialgebra_from_obj(doc_base, field)
        if base is not None and not same_base(base, inline):
            raise FormatError("module base does not match the supplied bialgebra")
        base = inline
    elif base is None:
        raise FormatError("module base given by name; supply the bialgebra file")
    alpha = automorphism_from_matrix(base, matrix_from_obj(obj["alpha"], field))
    beta = automorphism_from_matrix(base, matrix_from_obj(obj["beta"], field))
    return YDQModule(
        base,
        obj["dim"],
        matrix_from_obj(obj["action"], field),
        matrix_from_obj(obj["coaction"], field),
        GPair(alpha, beta),
    )


def gpair_to_obj(p: GPair):
    return {"alpha": matrix_to_obj(p.alpha.matrix), "beta": matrix_to_obj(p.beta.matrix)}


def gpair_from_obj(obj, base: Bialgebra, field=RATIONALS) -> GPair:
    for key in ("alpha", "beta"):
        if key not in obj:
            raise FormatError(f"pair document missing {key!r}")
    alpha = automorphism_from_matrix(base, matrix_from_obj(obj["alpha"], field))
    beta = automorphism_from_matrix(base, matrix_from_obj(obj["beta"], field))
    return GPair(alpha, beta)


# -- structure emission -----------------------------------------------------------------


def structure_to_obj(obj):
    if isinstance(obj, CayleyTable):
        return cayley_to_obj(obj)
    if isinstance(obj, Bialgebra):
        return bialgebra_to_obj(obj)
    if isinstance(obj, YDQModule):
        return ydq_to_obj(obj)
    if isinstance(obj, Matrix):
        return matrix_to_obj(obj)
    if isinstance(obj, GPair):
        return gpair_to_obj(obj)
    if isinstance(obj, dict):
        return obj
    raise FormatError(f"cannot serialize {type(obj).__name__}")


def emit(obj, path, form: str = "structured") -> str:
    """Write a structure to disk; structured form round-trips byte-for-byte."""
    if form == "structured":
        text = canonical_json(structure_to_obj(obj))
    elif form == "text":
        if isinstance(obj, CayleyTable):
            text = cayley_to_text(obj)
        else:
            text = json.dumps(structure_to_obj(obj), sort_keys=True, indent=2) + "\n"
    else:
        raise FormatError(f"unknown emission form {form!r}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text
