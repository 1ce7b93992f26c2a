"""Finite-dimensional bialgebras as exact structure constants.

Conventions, fixed once for the whole package:
  mult[k][i][j]   coefficient of b_k in b_i * b_j
  comult[i][j][k] coefficient of b_i (x) b_j in Delta(b_k)
  unit[r]         coordinates of 1
  counit[k]       value of eps on b_k
Tensor bases are flattened left factor major: (i, j) -> i * dim_right + j.

Identity checks quantify over basis elements only; multilinearity extends
every verdict to arbitrary elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .errors import DimensionMismatch, NotIPLoop
from .exactmat import RATIONALS, Matrix
from .loops import CayleyTable, check_quasigroup


# -- sparse vectors over a basis, as index -> nonzero scalar dicts ----------

def vec_add_scaled(target: dict, src: dict, c) -> None:
    if not c:
        return
    for k, v in src.items():
        cur = target.get(k)
        new = c * v if cur is None else cur + c * v
        if new:
            target[k] = new
        elif cur is not None:
            del target[k]


def vec_equal(a: dict, b: dict) -> bool:
    return {k: v for k, v in a.items() if v} == {k: v for k, v in b.items() if v}


def matrix_col_dict(m: Matrix, j: int) -> dict:
    out = {}
    for i in range(m.rows):
        x = m.data[i * m.cols + j]
        if x:
            out[i] = x
    return out


def matrix_apply(m: Matrix, vec: dict) -> dict:
    out = {}
    for j, c in vec.items():
        vec_add_scaled(out, matrix_col_dict(m, j), c)
    return out


def matrix_from_col_dicts(cols, rows: int, field) -> Matrix:
    zero = field.zero()
    n = len(cols)
    data = [zero] * (rows * n)
    for j, col in enumerate(cols):
        for i, x in col.items():
            data[i * n + j] = x
    return Matrix(rows, n, data, field)


@dataclass(frozen=True)
class LinMap:
    """A linear map between based spaces; matrix is dst_dim x src_dim."""

    src_dim: int
    dst_dim: int
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.rows != self.dst_dim or self.matrix.cols != self.src_dim:
            raise DimensionMismatch("LinMap shape mismatch")

    @staticmethod
    def from_matrix(m: Matrix) -> "LinMap":
        return LinMap(m.cols, m.rows, m)


class Bialgebra:
    """A (co)unital bialgebra with optional antipode, all exact scalars."""

    def __init__(self, dim, mult, unit, comult, counit, antipode=None, name=None, field=RATIONALS):
        self.dim = dim
        self.mult = tuple(tuple(tuple(row) for row in plane) for plane in mult)
        self.unit = tuple(unit)
        self.comult = tuple(tuple(tuple(row) for row in plane) for plane in comult)
        self.counit = tuple(counit)
        self.antipode = antipode
        self.name = name
        self.field = field
        d = dim
        if len(self.mult) != d or any(len(p) != d or any(len(r) != d for r in p) for p in self.mult):
            raise DimensionMismatch("mult tensor must be dim^3")
        if len(self.comult) != d or any(len(p) != d or any(len(r) != d for r in p) for p in self.comult):
            raise DimensionMismatch("comult tensor must be dim^3")
        if len(self.unit) != d or len(self.counit) != d:
            raise DimensionMismatch("unit/counit must have length dim")
        if antipode is not None and (antipode.rows != d or antipode.cols != d):
            raise DimensionMismatch("antipode must be dim x dim")

    # -- cached structure tables -------------------------------------------

    @cached_property
    def mult_entries(self):
        """mult_entries[i][j] = tuple of (k, coefficient) with k ascending."""
        d = self.dim
        out = []
        for i in range(d):
            row = []
            for j in range(d):
                row.append(tuple((k, self.mult[k][i][j]) for k in range(d) if self.mult[k][i][j]))
            out.append(tuple(row))
        return tuple(out)

    @cached_property
    def comult_entries(self):
        """comult_entries[k] = tuple of ((i, j), coefficient)."""
        d = self.dim
        out = []
        for k in range(d):
            legs = []
            for i in range(d):
                for j in range(d):
                    c = self.comult[i][j][k]
                    if c:
                        legs.append(((i, j), c))
            out.append(tuple(legs))
        return tuple(out)

    @cached_property
    def unit_dict(self):
        return {r: c for r, c in enumerate(self.unit) if c}

    @cached_property
    def mult_matrix(self) -> Matrix:
        """dim x dim^2 matrix of the product, columns indexed by (i, j)."""
        d = self.dim
        zero = self.field.zero()
        data = [zero] * (d * d * d)
        for i in range(d):
            for j in range(d):
                for k, c in self.mult_entries[i][j]:
                    data[k * d * d + i * d + j] = c
        return Matrix(d, d * d, data, self.field)

    @cached_property
    def comult_matrix(self) -> Matrix:
        """dim^2 x dim matrix of the coproduct, rows indexed by (i, j)."""
        d = self.dim
        zero = self.field.zero()
        data = [zero] * (d * d * d)
        for k in range(d):
            for (i, j), c in self.comult_entries[k]:
                data[(i * d + j) * d + k] = c
        return Matrix(d * d, d, data, self.field)

    @cached_property
    def is_associative(self) -> bool:
        return self.associativity_witness is None

    @cached_property
    def associativity_witness(self):
        d = self.dim
        for i in range(d):
            for j in range(d):
                ij = self.product_basis(i, j)
                for k in range(d):
                    lhs = self.product_vec(ij, {k: self.field.one()})
                    rhs = self.product_vec({i: self.field.one()}, self.product_basis(j, k))
                    if not vec_equal(lhs, rhs):
                        return (i, j, k)
        return None

    @cached_property
    def is_coassociative(self) -> bool:
        return self.coassociativity_witness is None

    @cached_property
    def coassociativity_witness(self):
        for k in range(self.dim):
            left = {}
            for (a, b), c in self.comult_entries[k]:
                for (a1, a2), c2 in self.comult_entries[a]:
                    vec_add_scaled(left, {(a1, a2, b): c * c2}, self.field.one())
            right = {}
            for (a, b), c in self.comult_entries[k]:
                for (b1, b2), c2 in self.comult_entries[b]:
                    vec_add_scaled(right, {(a, b1, b2): c * c2}, self.field.one())
            if not vec_equal(left, right):
                return k
        return None

    # -- elementwise operations --------------------------------------------

    def product_basis(self, i: int, j: int) -> dict:
        return dict(self.mult_entries[i][j])

    def product_vec(self, a: dict, b: dict) -> dict:
        out = {}
        for i, ca in a.items():
            for j, cb in b.items():
                for k, c in self.mult_entries[i][j]:
                    cur = out.get(k)
                    new = ca * cb * c if cur is None else cur + ca * cb * c
                    if new:
                        out[k] = new
                    elif cur is not None:
                        del out[k]
        return out

    def counit_vec(self, v: dict):
        tot = self.field.zero()
        for k, c in v.items():
            tot = tot + c * self.counit[k]
        return tot

    def delta2_right(self, k: int):
        """(id (x) Delta) Delta legs of b_k as ((a, b, c), coefficient)."""
        out = []
        for (a, b), c in self.comult_entries[k]:
            for (b1, b2), c2 in self.comult_entries[b]:
                out.append(((a, b1, b2), c * c2))
        return out

    def delta2_left(self, k: int):
        """(Delta (x) id) Delta legs of b_k as ((a, b, c), coefficient)."""
        out = []
        for (a, b), c in self.comult_entries[k]:
            for (a1, a2), c2 in self.comult_entries[a]:
                out.append(((a1, a2, b), c * c2))
        return out

    def antipode_basis(self, k: int) -> dict:
        return matrix_col_dict(self.antipode, k)

    def __repr__(self):
        tag = self.name or "bialgebra"
        return f"Bialgebra({tag}, dim={self.dim}, field={self.field.name})"


@dataclass
class BialgebraReport:
    """Axiom flags; the associativity pair is informational, not an axiom."""

    flags: dict
    witnesses: dict
    associative: bool = True
    coassociative: bool = True

    @property
    def ok(self) -> bool:
        return all(self.flags.values())

    def as_dict(self):
        out = {
            "flags": dict(sorted(self.flags.items())),
            "ok": self.ok,
            "associative": self.associative,
            "coassociative": self.coassociative,
        }
        if self.witnesses:
            out["witnesses"] = {k: list(v) if isinstance(v, tuple) else v
                                for k, v in sorted(self.witnesses.items())}
        return out


def bialgebra_report(b: Bialgebra) -> BialgebraReport:
    """Unit, counit and homomorphism axioms plus the two associativity flags."""
    d = b.dim
    one = b.field.one()
    flags, wit = {}, {}

    def record(name, ok, witness=None):
        flags[name] = flags.get(name, True) and ok
        if not ok and name not in wit and witness is not None:
            wit[name] = witness

    unit = b.unit_dict
    for i in range(d):
        e = {i: one}
        record("unit_left", vec_equal(b.product_vec(unit, e), e), (i,))
        record("unit_right", vec_equal(b.product_vec(e, unit), e), (i,))
    for k in range(d):
        left, right = {}, {}
        for (i, j), c in b.comult_entries[k]:
            vec_add_scaled(left, {j: c * b.counit[i]}, one)
            vec_add_scaled(right, {i: c * b.counit[j]}, one)
        record("counit_left", vec_equal(left, {k: one}), (k,))
        record("counit_right", vec_equal(right, {k: one}), (k,))
    for i in range(d):
        for j in range(d):
            lhs = {}
            for k, c in b.mult_entries[i][j]:
                for (p, q), c2 in b.comult_entries[k]:
                    vec_add_scaled(lhs, {(p, q): c * c2}, one)
            rhs = {}
            for (p1, q1), c1 in b.comult_entries[i]:
                for (p2, q2), c2 in b.comult_entries[j]:
                    for p, cp in b.mult_entries[p1][p2]:
                        for q, cq in b.mult_entries[q1][q2]:
                            vec_add_scaled(rhs, {(p, q): c1 * c2 * cp * cq}, one)
            record("comult_multiplicative", vec_equal(lhs, rhs), (i, j))
            eps_prod = b.counit_vec(b.product_basis(i, j))
            record("counit_multiplicative", eps_prod == b.counit[i] * b.counit[j], (i, j))
    delta_unit = {}
    for k, c in unit.items():
        for (p, q), c2 in b.comult_entries[k]:
            vec_add_scaled(delta_unit, {(p, q): c * c2}, one)
    unit_tensor = {(i, j): ci * cj for i, ci in unit.items() for j, cj in unit.items()}
    record("comult_of_unit", vec_equal(delta_unit, unit_tensor))
    record("counit_of_unit", b.counit_vec(unit) == one)
    return BialgebraReport(flags, wit, b.is_associative, b.is_coassociative)


def loop_algebra(t: CayleyTable, field=RATIONALS) -> Bialgebra:
    """Linear span of an IP loop: grouplike coproduct, antipode from inverses."""
    rep = check_quasigroup(t)
    if not (rep.latin and rep.has_identity and rep.ip):
        raise NotIPLoop("loop_algebra needs a Latin table with identity and inverse property")
    d = t.order
    zero, one = field.zero(), field.one()
    mult = [[[zero] * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(d):
            mult[t.table[i][j]][i][j] = one
    comult = [[[zero] * d for _ in range(d)] for _ in range(d)]
    for k in range(d):
        comult[k][k][k] = one
    unit = [one if r == 0 else zero for r in range(d)]
    counit = [one] * d
    sdata = [zero] * (d * d)
    for k in range(d):
        sdata[rep.inverse[k] * d + k] = one
    antipode = Matrix(d, d, sdata, field)
    return Bialgebra(d, mult, unit, comult, counit, antipode, t.name, field)


def dualize(b: Bialgebra) -> Bialgebra:
    """Structure constants of the dual: product and coproduct trade places."""
    d = b.dim
    mult = [[[b.comult[i][j][k] for j in range(d)] for i in range(d)] for k in range(d)]
    comult = [[[b.mult[k][i][j] for k in range(d)] for j in range(d)] for i in range(d)]
    antipode = b.antipode.transpose() if b.antipode is not None else None
    name = f"dual({b.name})" if b.name else None
    return Bialgebra(d, mult, comult=comult, unit=list(b.counit), counit=list(b.unit),
                     antipode=antipode, name=name, field=b.field)
