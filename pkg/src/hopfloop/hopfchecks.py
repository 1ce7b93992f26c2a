"""Convolution, Galois maps, antipode extraction and the axiom checkers.

The two Galois maps are
    T1(x (x) y) = Delta(x)(1 (x) y)      T2(x (x) y) = (x (x) 1)Delta(y)
and every characterization below reduces to exact statements about their
matrices.  Scans quantify over basis tuples in lexicographic order and report
the first counterexample together with both sides' coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .bialgebra import (
    Bialgebra,
    LinMap,
    matrix_col_dict,
    matrix_from_col_dicts,
    vec_add_scaled,
    vec_equal,
)
from .errors import (
    DimensionMismatch,
    FormatError,
    NoAntipodeExtractable,
    NotBijective,
    NotInvertible,
    PreconditionViolated,
)
from .exactmat import Matrix, invert, solve


def _pair(i: int, j: int, d: int) -> int:
    return i * d + j


def _pair_vec(left: dict, right: dict, d: int, coef, out: dict) -> None:
    for p, cp in left.items():
        for q, cq in right.items():
            key = p * d + q
            cur = out.get(key)
            new = coef * cp * cq if cur is None else cur + coef * cp * cq
            if new:
                out[key] = new
            elif cur is not None:
                del out[key]


def _fmt_vec(vec: dict, fmt) -> dict:
    return {str(k): fmt(v) for k, v in sorted(vec.items())}


# -- convolution -------------------------------------------------------------


def convolution_unit(c: Bialgebra, a: Bialgebra) -> LinMap:
    """The convolution unit mu . eps as a matrix from c to a."""
    cols = [{r: a.unit[r] * c.counit[k] for r in range(a.dim) if a.unit[r] and c.counit[k]}
            for k in range(c.dim)]
    return LinMap(c.dim, a.dim, matrix_from_col_dicts(cols, a.dim, a.field))


def convolve(f: LinMap, g: LinMap, c: Bialgebra, a: Bialgebra) -> LinMap:
    """(f * g)(x) = sum f(x1) g(x2), evaluated column by column."""
    if f.src_dim != c.dim or g.src_dim != c.dim or f.dst_dim != a.dim or g.dst_dim != a.dim:
        raise DimensionMismatch("convolve: maps must go from the coalgebra into the algebra")
    cols = []
    for k in range(c.dim):
        out = {}
        for (p, q), w in c.comult_entries[k]:
            fp = matrix_col_dict(f.matrix, p)
            gq = matrix_col_dict(g.matrix, q)
            vec_add_scaled(out, a.product_vec(fp, gq), w)
        cols.append(out)
    return LinMap(c.dim, a.dim, matrix_from_col_dicts(cols, a.dim, a.field))


# -- Galois maps --------------------------------------------------------------


def _check_which(which: str) -> str:
    if which not in ("t1", "t2"):
        raise FormatError(f"galois map must be 't1' or 't2', got {which!r}")
    return which


def galois_matrix(b: Bialgebra, which: str) -> Matrix:
    """The dim^2 x dim^2 matrix of T1 or T2 in the canonical tensor basis."""
    _check_which(which)
    d = b.dim
    one = b.field.one()
    unit = b.unit_dict
    cols = []
    for i in range(d):
        for j in range(d):
            out = {}
            if which == "t1":
                for (p, q), c in b.comult_entries[i]:
                    left = b.product_vec({p: one}, unit)
                    right = b.product_basis(q, j)
                    _pair_vec(left, right, d, c, out)
            else:
                for (p, q), c in b.comult_entries[j]:
                    left = b.product_basis(i, p)
                    right = b.product_vec(unit, {q: one})
                    _pair_vec(left, right, d, c, out)
            cols.append(out)
    return matrix_from_col_dicts(cols, d * d, b.field)


def closed_form_galois_inverse(b: Bialgebra, which: str, s: Matrix) -> Matrix:
    """a (x) b -> sum a1 (x) S(a2)b for T1; a (x) b -> sum aS(b1) (x) b2 for T2."""
    _check_which(which)
    d = b.dim
    one = b.field.one()
    cols = []
    for i in range(d):
        for j in range(d):
            out = {}
            if which == "t1":
                for (p, q), c in b.comult_entries[i]:
                    right = b.product_vec(matrix_col_dict(s, q), {j: one})
                    _pair_vec({p: one}, right, d, c, out)
            else:
                for (p, q), c in b.comult_entries[j]:
                    left = b.product_vec({i: one}, matrix_col_dict(s, p))
                    _pair_vec(left, {q: one}, d, c, out)
            cols.append(out)
    return matrix_from_col_dicts(cols, d * d, b.field)


@dataclass
class GaloisReport:
    which: str
    bijective: bool
    inverse: Optional[Matrix] = None
    formula_inverse_matches: Optional[bool] = None
    compat: Optional[dict] = None

    def as_dict(self):
        out = {"which": self.which, "bijective": self.bijective}
        if self.formula_inverse_matches is not None:
            out["formula_inverse_matches"] = self.formula_inverse_matches
        if self.compat is not None:
            out["compat"] = dict(sorted(self.compat.items()))
        return out


def invert_galois(b: Bialgebra, which: str) -> GaloisReport:
    """Bijectivity via exact rank; when possible, compare the generic inverse
    with the closed antipode formula entrywise."""
    t = galois_matrix(b, which)
    try:
        inv = invert(t)
    except NotInvertible:
        return GaloisReport(which, False)
    matches = None
    if b.antipode is not None:
        matches = closed_form_galois_inverse(b, which, b.antipode) == inv
    return GaloisReport(which, True, inv, matches)


def antipode_extract(b: Bialgebra, which: str) -> LinMap:
    """S(a) = (eps (x) id) T1^-1 (a (x) 1); dually via T2 on the other side."""
    _check_which(which)
    d = b.dim
    t = galois_matrix(b, which)
    try:
        inv = invert(t)
    except NotInvertible as exc:
        raise NotBijective(f"galois map {which} is singular") from exc
    cols = []
    for a in range(d):
        arg = {}
        if which == "t1":
            for r, c in b.unit_dict.items():
                arg[_pair(a, r, d)] = c
        else:
            for r, c in b.unit_dict.items():
                arg[_pair(r, a, d)] = c
        img = {}
        for key, c in arg.items():
            vec_add_scaled(img, matrix_col_dict(inv, key), c)
        out = {}
        for key, c in img.items():
            p, q = divmod(key, d)
            if which == "t1":
                vec_add_scaled(out, {q: c * b.counit[p]}, b.field.one())
            else:
                vec_add_scaled(out, {p: c * b.counit[q]}, b.field.one())
        cols.append(out)
    return LinMap(d, d, matrix_from_col_dicts(cols, d, b.field))


# -- axiom scans --------------------------------------------------------------


@dataclass
class ScanReport:
    """Named identity flags plus lexicographic-first witnesses."""

    kind: str
    flags: dict
    witnesses: dict = dc_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.flags.values())

    def as_dict(self, fmt=None):
        out = {"kind": self.kind, "flags": dict(sorted(self.flags.items())), "ok": self.ok}
        if self.witnesses:
            wit = {}
            for name, (tup, lhs, rhs) in sorted(self.witnesses.items()):
                wit[name] = {
                    "at": list(tup),
                    "lhs": _fmt_vec(lhs, fmt) if fmt else {str(k): str(v) for k, v in sorted(lhs.items())},
                    "rhs": _fmt_vec(rhs, fmt) if fmt else {str(k): str(v) for k, v in sorted(rhs.items())},
                }
            out["witnesses"] = wit
        return out


def _require(b: Bialgebra, assoc: bool = False, coassoc: bool = False):
    if assoc and not b.is_associative:
        raise PreconditionViolated("associative", f"witness {b.associativity_witness}")
    if coassoc and not b.is_coassociative:
        raise PreconditionViolated("coassociative", f"witness basis {b.coassociativity_witness}")


def check_antipode_axioms(b: Bialgebra, s, mode: str) -> ScanReport:
    """Antipode laws: convolution form for 'hopf', the four bracketed
    identities over basis pairs for 'quasigroup', the four coproduct-side
    identities for 'coquasigroup'."""
    if isinstance(s, LinMap):
        s = s.matrix
    d = b.dim
    one = b.field.one()
    if mode == "hopf":
        _require(b, assoc=True, coassoc=True)
    elif mode == "quasigroup":
        _require(b, coassoc=True)
    elif mode == "coquasigroup":
        _require(b, assoc=True)
    else:
        raise FormatError(f"unknown antipode mode {mode!r}")

    flags, wit = {}, {}

    def record(name, tup, lhs, rhs):
        ok = vec_equal(lhs, rhs)
        flags[name] = flags.get(name, True) and ok
        if not ok and name not in wit:
            wit[name] = (tup, lhs, rhs)

    if mode == "hopf":
        for h in range(d):
            target = {k: b.counit[h] * c for k, c in b.unit_dict.items() if b.counit[h]}
            left, right = {}, {}
            for (p, q), c in b.comult_entries[h]:
                vec_add_scaled(left, b.product_vec(matrix_col_dict(s, p), {q: one}), c)
                vec_add_scaled(right, b.product_vec({p: one}, matrix_col_dict(s, q)), c)
            record("left", (h,), left, target)
            record("right", (h,), right, target)
    elif mode == "quasigroup":
        for h in range(d):
            eps_h = b.counit[h]
            for g in range(d):
                target = {g: eps_h} if eps_h else {}
                lo, li, ri, ro = {}, {}, {}, {}
                for (p, q), c in b.comult_entries[h]:
                    sp = matrix_col_dict(s, p)
                    sq = matrix_col_dict(s, q)
                    vec_add_scaled(lo, b.product_vec(sp, b.product_basis(q, g)), c)
                    vec_add_scaled(li, b.product_vec({p: one}, b.product_vec(sq, {g: one})), c)
                    vec_add_scaled(ri, b.product_vec(b.product_vec({g: one}, sp), {q: one}), c)
                    vec_add_scaled(ro, b.product_vec(b.product_basis(g, p), sq), c)
                record("left_outer", (h, g), lo, target)
                record("left_inner", (h, g), li, target)
                record("right_inner", (h, g), ri, target)
                record("right_outer", (h, g), ro, target)
    else:
        for h in range(d):
            one_h = {}
            h_one = {}
            for r, c in b.unit_dict.items():
                one_h[_pair(r, h, d)] = c
                h_one[_pair(h, r, d)] = c
            lo, li = {}, {}
            for (a, b1, b2), c in b.delta2_right(h):
                sa = matrix_col_dict(s, a)
                sb1 = matrix_col_dict(s, b1)
                _pair_vec(b.product_vec(sa, {b1: one}), {b2: one}, d, c, lo)
                _pair_vec(b.product_vec({a: one}, sb1), {b2: one}, d, c, li)
            record("left_outer", (h,), lo, one_h)
            record("left_inner", (h,), li, one_h)
            ri, ro = {}, {}
            for (a1, a2, b2), c in b.delta2_left(h):
                sa2 = matrix_col_dict(s, a2)
                sb2 = matrix_col_dict(s, b2)
                _pair_vec({a1: one}, b.product_vec(sa2, {b2: one}), d, c, ri)
                _pair_vec({a1: one}, b.product_vec({a2: one}, sb2), d, c, ro)
            record("right_inner", (h,), ri, h_one)
            record("right_outer", (h,), ro, h_one)
    return ScanReport(f"antipode_{mode}", flags, wit)


def check_hqg_identity(b: Bialgebra, mode: str, variant: str) -> ScanReport:
    """Flexible / Moufang law at the bialgebra level, on either side of the
    duality: products over basis pairs for 'quasigroup', iterated coproducts
    for 'coquasigroup'."""
    if mode not in ("flexible", "moufang"):
        raise FormatError(f"unknown identity {mode!r}")
    d = b.dim
    one = b.field.one()
    flags, wit = {}, {}

    def record(tup, lhs, rhs):
        ok = vec_equal(lhs, rhs)
        flags[mode] = flags.get(mode, True) and ok
        if not ok and mode not in wit:
            wit[mode] = (tup, lhs, rhs)

    if variant == "quasigroup":
        _require(b, coassoc=True)
        if mode == "flexible":
            for h in range(d):
                for g in range(d):
                    lhs, rhs = {}, {}
                    for (p, q), c in b.comult_entries[h]:
                        vec_add_scaled(lhs, b.product_vec({p: one}, b.product_basis(g, q)), c)
                        vec_add_scaled(rhs, b.product_vec(b.product_basis(p, g), {q: one}), c)
                    record((h, g), lhs, rhs)
        else:
            for h in range(d):
                for g in range(d):
                    for f in range(d):
                        lhs, rhs = {}, {}
                        for (p, q), c in b.comult_entries[h]:
                            inner = b.product_vec({g: one}, b.product_basis(q, f))
                            vec_add_scaled(lhs, b.product_vec({p: one}, inner), c)
                            outer = b.product_vec(b.product_basis(p, g), {q: one})
                            vec_add_scaled(rhs, b.product_vec(outer, {f: one}), c)
                        record((h, g, f), lhs, rhs)
    elif variant == "coquasigroup":
        _require(b, assoc=True)
        if mode == "flexible":
            for h in range(d):
                lhs, rhs = {}, {}
                for (a, b1, b2), c in b.delta2_right(h):
                    _pair_vec(b.product_basis(a, b2), {b1: one}, d, c, lhs)
                for (a1, a2, b2), c in b.delta2_left(h):
                    _pair_vec(b.product_basis(a1, b2), {a2: one}, d, c, rhs)
                record((h,), lhs, rhs)
        else:
            for h in range(d):
                lhs, rhs = {}, {}
                for (a, b1, b2), c in b.delta2_right(h):
                    for (x, y), c2 in b.comult_entries[b2]:
                        for k, cm in b.mult_entries[a][x]:
                            key = (k * d + b1) * d + y
                            vec_add_scaled(lhs, {key: cm}, c * c2)
                for (a1, a2, b2), c in b.delta2_left(h):
                    for (x, y), c2 in b.comult_entries[a1]:
                        for k, cm in b.mult_entries[x][a2]:
                            key = (k * d + y) * d + b2
                            vec_add_scaled(rhs, {key: cm}, c * c2)
                record((h,), lhs, rhs)
    else:
        raise FormatError(f"unknown variant {variant!r}")
    return ScanReport(f"{mode}_{variant}", flags, wit)


# -- Galois compatibility ------------------------------------------------------


def _apply_pair_matrix(t: Matrix, pairvec: dict) -> dict:
    out = {}
    for key, c in pairvec.items():
        vec_add_scaled(out, matrix_col_dict(t, key), c)
    return out


def _galois_inverse_or_raise(b: Bialgebra, which: str) -> Matrix:
    t = galois_matrix(b, which)
    try:
        return invert(t)
    except NotInvertible as exc:
        raise NotBijective(f"galois map {which} is singular") from exc


def check_galois_compat(b: Bialgebra, which: str, condition: str) -> ScanReport:
    """Module/comodule map conditions on the Galois inverse, or the four
    coproduct/product compatibility laws used by the quasigroup theorem."""
    _check_which(which)
    d = b.dim
    one = b.field.one()
    tinv = _galois_inverse_or_raise(b, which)
    flags, wit = {}, {}

    def record(name, tup, lhs, rhs):
        ok = vec_equal(lhs, rhs)
        flags[name] = flags.get(name, True) and ok
        if not ok and name not in wit:
            wit[name] = (tup, lhs, rhs)

    if condition == "thm31_module_comodule":
        if which == "t1":
            # right module map: T((x (x) y) a) == T(x (x) y) a
            for a in range(d):
                for x in range(d):
                    for y in range(d):
                        arg = {}
                        _pair_vec({x: one}, b.product_basis(y, a), d, one, arg)
                        lhs = _apply_pair_matrix(tinv, arg)
                        rhs = {}
                        for key, c in _apply_pair_matrix(tinv, {_pair(x, y, d): one}).items():
                            p, q = divmod(key, d)
                            _pair_vec({p: one}, b.product_basis(q, a), d, c, rhs)
                        record("module_map", (a, x, y), lhs, rhs)
            # left comodule map: rho^l T == (id (x) T) rho^l
            for x in range(d):
                for y in range(d):
                    lhs = {}
                    for key, c in _apply_pair_matrix(tinv, {_pair(x, y, d): one}).items():
                        p, q = divmod(key, d)
                        for (p1, p2), c2 in b.comult_entries[p]:
                            vec_add_scaled(lhs, {(p1, _pair(p2, q, d)): c * c2}, one)
                    rhs = {}
                    for (x1, x2), c in b.comult_entries[x]:
                        for key, c2 in _apply_pair_matrix(tinv, {_pair(x2, y, d): one}).items():
                            vec_add_scaled(rhs, {(x1, key): c * c2}, one)
                    record("comodule_map", (x, y), lhs, rhs)
        else:
            # left module map: T(a (x (x) y)) == a T(x (x) y)
            for a in range(d):
                for x in range(d):
                    for y in range(d):
                        arg = {}
                        _pair_vec(b.product_basis(a, x), {y: one}, d, one, arg)
                        lhs = _apply_pair_matrix(tinv, arg)
                        rhs = {}
                        for key, c in _apply_pair_matrix(tinv, {_pair(x, y, d): one}).items():
                            p, q = divmod(key, d)
                            _pair_vec(b.product_basis(a, p), {q: one}, d, c, rhs)
                        record("module_map", (a, x, y), lhs, rhs)
            # right comodule map: rho^r T == (T (x) id) rho^r
            for x in range(d):
                for y in range(d):
                    lhs = {}
                    for key, c in _apply_pair_matrix(tinv, {_pair(x, y, d): one}).items():
                        p, q = divmod(key, d)
                        for (q1, q2), c2 in b.comult_entries[q]:
                            vec_add_scaled(lhs, {(_pair(p, q1, d), q2): c * c2}, one)
                    rhs = {}
                    for (y1, y2), c in b.comult_entries[y]:
                        for key, c2 in _apply_pair_matrix(tinv, {_pair(x, y1, d): one}).items():
                            vec_add_scaled(rhs, {(key, y2): c * c2}, one)
                    record("comodule_map", (x, y), lhs, rhs)
    elif condition == "def41_42_compat":
        if which == "t1":
            # coproduct from T: Dr(a) = T(a (x) 1); left compatible means
            # T(a (x) b) = Dr(a)(1 (x) b)
            for a in range(d):
                arg = {}
                for r, c in b.unit_dict.items():
                    arg[_pair(a, r, d)] = c
                dr = _apply_pair_matrix(tinv, arg)
                for x in range(d):
                    lhs = _apply_pair_matrix(tinv, {_pair(a, x, d): one})
                    rhs = {}
                    for key, c in dr.items():
                        p, q = divmod(key, d)
                        _pair_vec(b.product_vec({p: one}, b.unit_dict), b.product_basis(q, x), d, c, rhs)
                    record("left_compat_coprod", (a, x), lhs, rhs)
            # product from T: ml(a (x) b) = (eps (x) id) T(a (x) b); right
            # compatible means T(a (x) b) = (id (x) ml)(Delta (x) id)
            for a in range(d):
                for x in range(d):
                    lhs = _apply_pair_matrix(tinv, {_pair(a, x, d): one})
                    rhs = {}
                    for (a1, a2), c in b.comult_entries[a]:
                        inner = {}
                        for key, c2 in _apply_pair_matrix(tinv, {_pair(a2, x, d): one}).items():
                            p, q = divmod(key, d)
                            vec_add_scaled(inner, {q: c2 * b.counit[p]}, one)
                        _pair_vec({a1: one}, inner, d, c, rhs)
                    record("right_compat_prod", (a, x), lhs, rhs)
        else:
            # Dl(b) = T(1 (x) b); right compatible: T(a (x) b) = (a (x) 1)Dl(b)
            for x in range(d):
                arg = {}
                for r, c in b.unit_dict.items():
                    arg[_pair(r, x, d)] = c
                dl = _apply_pair_matrix(tinv, arg)
                for a in range(d):
                    lhs = _apply_pair_matrix(tinv, {_pair(a, x, d): one})
                    rhs = {}
                    for key, c in dl.items():
                        p, q = divmod(key, d)
                        _pair_vec(b.product_basis(a, p), b.product_vec(b.unit_dict, {q: one}), d, c, rhs)
                    record("right_compat_coprod", (a, x), lhs, rhs)
            # mr(a (x) b) = (id (x) eps) T(a (x) b); left compatible:
            # T(a (x) b) = (mr (x) id)(id (x) Delta)
            for a in range(d):
                for x in range(d):
                    lhs = _apply_pair_matrix(tinv, {_pair(a, x, d): one})
                    rhs = {}
                    for (x1, x2), c in b.comult_entries[x]:
                        inner = {}
                        for key, c2 in _apply_pair_matrix(tinv, {_pair(a, x1, d): one}).items():
                            p, q = divmod(key, d)
                            vec_add_scaled(inner, {p: c2 * b.counit[q]}, one)
                        _pair_vec(inner, {x2: one}, d, c, rhs)
                    record("left_compat_prod", (a, x), lhs, rhs)
    else:
        raise FormatError(f"unknown compat condition {condition!r}")
    return ScanReport(f"{which}_{condition}", flags, wit)


# -- convolution invertibility of the translation elements ---------------------


def lr_convolution_invertible(b: Bialgebra) -> ScanReport:
    """Two-sided convolution-inverse equations for left and right translations,
    with candidates built from the antipode extracted through the first Galois
    map; raises when that map is singular."""
    _require(b, coassoc=True)
    try:
        s = antipode_extract(b, "t1").matrix
    except NotBijective as exc:
        raise NoAntipodeExtractable(str(exc)) from exc
    d = b.dim
    one = b.field.one()
    flags, wit = {}, {}

    def record(name, tup, lhs, rhs):
        ok = vec_equal(lhs, rhs)
        flags[name] = flags.get(name, True) and ok
        if not ok and name not in wit:
            wit[name] = (tup, lhs, rhs)

    for a in range(d):
        eps_a = b.counit[a]
        for x in range(d):
            target = {x: eps_a} if eps_a else {}
            l1, l2, r1, r2 = {}, {}, {}, {}
            for (p, q), c in b.comult_entries[a]:
                sp = matrix_col_dict(s, p)
                sq = matrix_col_dict(s, q)
                vec_add_scaled(l1, b.product_vec(sp, b.product_basis(q, x)), c)
                vec_add_scaled(l2, b.product_vec({p: one}, b.product_vec(sq, {x: one})), c)
                vec_add_scaled(r1, b.product_vec(b.product_vec({x: one}, sp), {q: one}), c)
                vec_add_scaled(r2, b.product_vec(b.product_basis(x, p), sq), c)
            record("l_inverse_left", (a, x), l1, target)
            record("l_inverse_right", (a, x), l2, target)
            record("r_inverse_left", (a, x), r1, target)
            record("r_inverse_right", (a, x), r2, target)
    return ScanReport("lr_convolution_invertible", flags, wit)


# -- equivalence reports -------------------------------------------------------


@dataclass
class EquivalenceReport:
    theorem: str
    verdicts: dict
    coherent: bool
    disagreement: Optional[tuple]
    detail: dict = dc_field(default_factory=dict)

    @property
    def all_true(self) -> bool:
        return all(self.verdicts.values())

    def as_dict(self):
        out = {
            "theorem": self.theorem,
            "verdicts": dict(self.verdicts),
            "coherent": self.coherent,
            "all_true": self.all_true,
        }
        if self.disagreement:
            out["disagreement"] = list(self.disagreement)
        if self.detail:
            out["detail"] = {k: dict(sorted(v.items())) for k, v in sorted(self.detail.items())}
        return out


def _antipode_system_rows(b: Bialgebra, side: str):
    """Linear constraints on an unknown endomorphism U from the convolution
    equations; side 'left' is sum U(h1) h2 = eps(h) 1, side 'right' is
    sum h1 U(h2) = eps(h) 1.  Unknowns are flattened (row, col) of U."""
    d = b.dim
    zero = b.field.zero()
    rows, rhs = [], []
    for h in range(d):
        block = [[zero] * (d * d) for _ in range(d)]
        for (p, q), c in b.comult_entries[h]:
            if side == "left":
                for s in range(d):
                    for r, cm in b.mult_entries[s][q]:
                        block[r][s * d + p] = block[r][s * d + p] + c * cm
            else:
                for s in range(d):
                    for r, cm in b.mult_entries[p][s]:
                        block[r][s * d + q] = block[r][s * d + q] + c * cm
        for r in range(d):
            rows.append(block[r])
            rhs.append([b.counit[h] * b.unit[r]])
    return rows, rhs


def _solvable(b: Bialgebra, sides) -> bool:
    rows, rhs = [], []
    for side in sides:
        r, t = _antipode_system_rows(b, side)
        rows.extend(r)
        rhs.extend(t)
    a = Matrix.from_rows(rows, b.field)
    t = Matrix.from_rows(rhs, b.field)
    return solve(a, t) is not None


def equivalence_report(b: Bialgebra, theorem: str) -> EquivalenceReport:
    """Evaluate every numbered condition of the named characterization
    independently and assert the verdicts agree."""
    detail = {}
    if theorem == "t31":
        _require(b, assoc=True, coassoc=True)
        verdicts = {}
        verdicts["1_antipode_exists"] = _solvable(b, ("left", "right"))
        verdicts["2_id_convolution_invertible"] = _solvable(b, ("left",)) and _solvable(b, ("right",))
        for cond, which in (("3_t1_bijective_compatible", "t1"), ("4_t2_bijective_compatible", "t2")):
            try:
                rep = check_galois_compat(b, which, "thm31_module_comodule")
                verdicts[cond] = rep.ok
                detail[cond] = rep.flags
            except NotBijective:
                verdicts[cond] = False
                detail[cond] = {"bijective": False}
        try:
            lr = lr_convolution_invertible(b)
            verdicts["5_l_convolution_invertible"] = lr.flags["l_inverse_left"] and lr.flags["l_inverse_right"]
            verdicts["6_r_convolution_invertible"] = lr.flags["r_inverse_left"] and lr.flags["r_inverse_right"]
            detail["5_l_convolution_invertible"] = {k: v for k, v in lr.flags.items() if k.startswith("l_")}
            detail["6_r_convolution_invertible"] = {k: v for k, v in lr.flags.items() if k.startswith("r_")}
        except NoAntipodeExtractable:
            verdicts["5_l_convolution_invertible"] = False
            verdicts["6_r_convolution_invertible"] = False
    elif theorem == "t43":
        _require(b, coassoc=True)
        verdicts = {}
        try:
            s = antipode_extract(b, "t1")
            rep = check_antipode_axioms(b, s, "quasigroup")
            verdicts["1_hopf_quasigroup"] = rep.ok
            detail["1_hopf_quasigroup"] = rep.flags
        except NotBijective:
            verdicts["1_hopf_quasigroup"] = False
        try:
            rep1 = check_galois_compat(b, "t1", "def41_42_compat")
            rep2 = check_galois_compat(b, "t2", "def41_42_compat")
            verdicts["2_galois_compatible"] = rep1.ok and rep2.ok
            detail["2_galois_compatible"] = {**rep1.flags, **rep2.flags}
        except NotBijective:
            verdicts["2_galois_compatible"] = False
        try:
            lr = lr_convolution_invertible(b)
            verdicts["3_lr_convolution_invertible"] = lr.ok
            detail["3_lr_convolution_invertible"] = lr.flags
        except NoAntipodeExtractable:
            verdicts["3_lr_convolution_invertible"] = False
    else:
        raise FormatError(f"unknown theorem {theorem!r}")
    vals = list(verdicts.values())
    coherent = all(vals) or not any(vals)
    disagreement = None
    if not coherent:
        names = list(verdicts)
        true_one = next(n for n in names if verdicts[n])
        false_one = next(n for n in names if not verdicts[n])
        disagreement = (true_one, false_one)
    return EquivalenceReport(theorem, verdicts, coherent, disagreement, detail)
