"""Exact scalars and dense matrices.

Every identity checked by this package is evaluated over an exact field:
arbitrary-precision rationals by default, integers mod p as the alternative.
Matrices are immutable, dense, row-major; all operations are pure functions,
so concurrent use is safe and results are independent of evaluation order.

Basis order for tensor products is fixed globally, left factor major:
index(i, j) = i * dim(right) + j.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionMismatch, FormatError, NotInvertible


class Fp:
    """An element of the field of integers mod p."""

    __slots__ = ("val", "p")

    def __init__(self, val: int, p: int):
        self.val = val % p
        self.p = p

    def __add__(self, other):
        return Fp(self.val + other.val, self.p)

    def __sub__(self, other):
        return Fp(self.val - other.val, self.p)

    def __neg__(self):
        return Fp(-self.val, self.p)

    def __mul__(self, other):
        return Fp(self.val * other.val, self.p)

    def __truediv__(self, other):
        if other.val == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return Fp(self.val * pow(other.val, -1, self.p), self.p)

    def __eq__(self, other):
        return isinstance(other, Fp) and self.val == other.val and self.p == other.p

    def __hash__(self):
        return hash((self.val, self.p))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return f"Fp({self.val}, {self.p})"


class RationalField:
    """The rationals; scalars are fractions.Fraction (lowest terms, q > 0)."""

    name = "q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n: int):
        return Fraction(n)

    def parse(self, text: str):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad rational scalar {text!r}") from exc

    def fmt(self, x) -> str:
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("q")

    def __repr__(self):
        return "RationalField()"


class PrimeField:
    """Integers modulo a prime p."""

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise FormatError(f"{p} is not prime")
        self.p = p
        self.name = f"fp:{p}"

    def zero(self):
        return Fp(0, self.p)

    def one(self):
        return Fp(1, self.p)

    def from_int(self, n: int):
        return Fp(n, self.p)

    def parse(self, text: str):
        try:
            return Fp(int(text), self.p)
        except ValueError as exc:
            raise FormatError(f"bad GF({self.p}) scalar {text!r}") from exc

    def fmt(self, x) -> str:
        return str(x.val)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("fp", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


RATIONALS = RationalField()


def field_from_name(name: str):
    if name == "q":
        return RATIONALS
    if name.startswith("fp:"):
        return PrimeField(int(name[3:]))
    raise FormatError(f"unknown field {name!r}")


class Matrix:
    """Immutable dense matrix over an exact field."""

    __slots__ = ("rows", "cols", "data", "field")

    def __init__(self, rows: int, cols: int, data, field=RATIONALS):
        data = tuple(data)
        if len(data) != rows * cols:
            raise DimensionMismatch(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(data)}")
        self.rows = rows
        self.cols = cols
        self.data = data
        self.field = field

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rows(rows, field=RATIONALS) -> "Matrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise DimensionMismatch("ragged rows")
        return Matrix(n, m, [x for r in rows for x in r], field)

    @staticmethod
    def from_int_rows(rows, field=RATIONALS) -> "Matrix":
        return Matrix.from_rows([[field.from_int(x) for x in r] for r in rows], field)

    @staticmethod
    def identity(n: int, field=RATIONALS) -> "Matrix":
        one, zero = field.one(), field.zero()
        return Matrix(n, n, [one if i == j else zero for i in range(n) for j in range(n)], field)

    @staticmethod
    def zeros(rows: int, cols: int, field=RATIONALS) -> "Matrix":
        return Matrix(rows, cols, [field.zero()] * (rows * cols), field)

    @staticmethod
    def from_cols(cols, rows: int, field=RATIONALS) -> "Matrix":
        n = len(cols)
        data = [field.zero()] * (rows * n)
        for j, col in enumerate(cols):
            if len(col) != rows:
                raise DimensionMismatch("bad column length")
            for i, x in enumerate(col):
                data[i * n + j] = x
        return Matrix(rows, n, data, field)

    # -- access ------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i * self.cols + j]

    def row(self, i):
        return self.data[i * self.cols:(i + 1) * self.cols]

    def col(self, j):
        return tuple(self.data[i * self.cols + j] for i in range(self.rows))

    def to_lists(self):
        return [list(self.row(i)) for i in range(self.rows)]

    # -- algebra -----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.field == other.field
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __add__(self, other):
        self._same_shape(other)
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.data, other.data)], self.field)

    def __sub__(self, other):
        self._same_shape(other)
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.data, other.data)], self.field)

    def __neg__(self):
        return Matrix(self.rows, self.cols, [-a for a in self.data], self.field)

    def scale(self, c):
        return Matrix(self.rows, self.cols, [c * a for a in self.data], self.field)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        n, k, m = self.rows, self.cols, other.cols
        zero = self.field.zero()
        out = [zero] * (n * m)
        a, b = self.data, other.data
        for i in range(n):
            arow = a[i * k:(i + 1) * k]
            orow = out[i * m:(i + 1) * m]
            for p, apiv in enumerate(arow):
                if not apiv:
                    continue
                brow = b[p * m:(p + 1) * m]
                for j, bx in enumerate(brow):
                    if bx:
                        orow[j] = orow[j] + apiv * bx
            out[i * m:(i + 1) * m] = orow
        return Matrix(n, m, out, self.field)

    def transpose(self):
        return Matrix(self.cols, self.rows,
                      [self.data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
                      self.field)

    def is_zero(self):
        return not any(self.data)

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch(f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, {self.field.name})"


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; entry ((i*rb+k),(j*cb+l)) = a[i,j]*b[k,l]."""
    ra, ca, rb, cb = a.rows, a.cols, b.rows, b.cols
    zero = a.field.zero()
    out = [zero] * (ra * rb * ca * cb)
    ocols = ca * cb
    for i in range(ra):
        for j in range(ca):
            aij = a.data[i * ca + j]
            if not aij:
                continue
            for k in range(rb):
                base = (i * rb + k) * ocols + j * cb
                brow = b.data[k * cb:(k + 1) * cb]
                for l, bkl in enumerate(brow):
                    if bkl:
                        out[base + l] = aij * bkl
    return Matrix(ra * rb, ca * cb, out, a.field)


def invert(m: Matrix) -> Matrix:
    """Exact inverse; raises NotInvertible when rank < dimension."""
    if m.rows != m.cols:
        raise NotInvertible("matrix is not square")
    n = m.rows
    field = m.field
    zero, one = field.zero(), field.one()
    a = [list(m.row(i)) for i in range(n)]
    inv = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise NotInvertible(f"rank deficiency at column {col}")
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            inv[col], inv[piv] = inv[piv], inv[col]
        pivval = a[col][col]
        if pivval != one:
            pinv = one / pivval
            a[col] = [x * pinv for x in a[col]]
            inv[col] = [x * pinv for x in inv[col]]
        acol, icol = a[col], inv[col]
        for r in range(n):
            if r == col:
                continue
            f = a[r][col]
            if not f:
                continue
            a[r] = [x - f * y for x, y in zip(a[r], acol)]
            inv[r] = [x - f * y for x, y in zip(inv[r], icol)]
    return Matrix(n, n, [x for row in inv for x in row], field)


def rank(m: Matrix) -> int:
    """Exact rank.

    Over the rationals every row is cleared to integers first and the
    elimination is fraction-free (Bareiss); over GF(p) ordinary elimination
    is already exact.
    """
    if isinstance(m.field, RationalField):
        return _rank_bareiss(m)
    return _rank_gauss(m)


def _rank_bareiss(m: Matrix) -> int:
    rows = []
    for i in range(m.rows):
        r = m.row(i)
        if not any(r):
            continue
        lcm = 1
        for x in r:
            d = x.denominator
            if d != 1:
                g = _gcd(lcm, d)
                lcm = lcm // g * d
        rows.append([int(x * lcm) for x in r])
    if not rows:
        return 0
    ncols = m.cols
    rk = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rk, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        pivval = rows[rk][col]
        pivrow = rows[rk]
        for r in range(rk + 1, len(rows)):
            cur = rows[r]
            f = cur[col]
            rows[r] = [(pivval * x - f * y) // prev for x, y in zip(cur, pivrow)]
        rk += 1
        prev = pivval
        if rk == len(rows):
            break
    return rk


def _rank_gauss(m: Matrix) -> int:
    rows = [list(m.row(i)) for i in range(m.rows)]
    rk = 0
    for col in range(m.cols):
        piv = next((r for r in range(rk, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        pivrow = rows[rk]
        pivval = pivrow[col]
        for r in range(rk + 1, len(rows)):
            f = rows[r][col]
            if f:
                g = f / pivval
                rows[r] = [x - g * y for x, y in zip(rows[r], pivrow)]
        rk += 1
        if rk == len(rows):
            break
    return rk


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def solve(a: Matrix, b: Matrix):
    """A particular solution X of a @ X = b, or None when inconsistent.

    Free variables are set to zero, so the result is deterministic.
    """
    if a.rows != b.rows:
        raise DimensionMismatch("solve: row mismatch")
    field = a.field
    zero = field.zero()
    n, m, k = a.rows, a.cols, b.cols
    aug = [list(a.row(i)) + list(b.row(i)) for i in range(n)]
    pivots = []
    rk = 0
    for col in range(m):
        piv = next((r for r in range(rk, n) if aug[r][col]), None)
        if piv is None:
            continue
        aug[rk], aug[piv] = aug[piv], aug[rk]
        pivval = aug[rk][col]
        aug[rk] = [x / pivval for x in aug[rk]]
        pivrow = aug[rk]
        for r in range(n):
            if r != rk and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], pivrow)]
        pivots.append(col)
        rk += 1
    for r in range(rk, n):
        if any(aug[r][m:]):
            return None
    out = [zero] * (m * k)
    for r, col in enumerate(pivots):
        for j in range(k):
            out[col * k + j] = aug[r][m + j]
    return Matrix(m, k, out, field)
