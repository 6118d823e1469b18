"""Exact dense linear algebra over the rationals.

Matrices are ``flint.fmpq_mat`` values and scalars are ``flint.fmpq``; every
routine here is a pure function returning fresh matrices.  Vectors are
column matrices.  Pivoting is leftmost-nonzero and the only comparison is
exact equality.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from flint import fmpq, fmpq_mat

from .errors import InvariantError, UsageError

Rat = fmpq
Matrix = fmpq_mat

_RAT_RE = re.compile(r"^(-?)(0|[1-9][0-9]*)(?:/([1-9][0-9]*))?$")


def rat(value) -> fmpq:
    if isinstance(value, fmpq):
        return value
    if isinstance(value, str):
        return parse_rat(value, strict=False)
    return fmpq(value)


def parse_rat(text: str, strict: bool = True) -> fmpq:
    """Parse ``"p/q"`` or ``"p"``.

    With ``strict`` the string must already be canonical: lowest terms,
    positive denominator different from 1, no ``-0``.
    """
    match = _RAT_RE.match(text.strip() if not strict else text)
    if match is None:
        raise UsageError(f"not a rational: {text!r}")
    sign, num, den = match.groups()
    p = int(num) * (-1 if sign else 1)
    q = int(den) if den else 1
    value = fmpq(p, q)
    if strict and rat_str(value) != text:
        raise UsageError(
            f"non-canonical rational {text!r}; write it as {rat_str(value)!r}"
        )
    return value


def rat_str(x: fmpq) -> str:
    x = fmpq(x)
    if x.q == 1:
        return str(x.p)
    return f"{x.p}/{x.q}"


# -- construction -----------------------------------------------------------

def zeros(rows: int, cols: int) -> Matrix:
    return fmpq_mat(rows, cols)


def identity(n: int) -> Matrix:
    M = fmpq_mat(n, n)
    for i in range(n):
        M[i, i] = 1
    return M


def from_rows(rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
    rows = [list(r) for r in rows]
    if cols is None:
        cols = len(rows[0]) if rows else 0
    for r in rows:
        if len(r) != cols:
            raise UsageError("ragged matrix rows")
    flat = [rat(x) for r in rows for x in r]
    return fmpq_mat(len(rows), cols, flat)


def column(values: Iterable) -> Matrix:
    vals = [rat(v) for v in values]
    return fmpq_mat(len(vals), 1, vals)


def unit(n: int, k: int) -> Matrix:
    v = fmpq_mat(n, 1)
    v[k, 0] = 1
    return v


def to_rows(M: Matrix) -> list[list[fmpq]]:
    c = M.ncols()
    e = M.entries()
    return [list(e[i * c:(i + 1) * c]) for i in range(M.nrows())]


def shape(M: Matrix) -> tuple[int, int]:
    return M.nrows(), M.ncols()


def is_zero(M: Matrix) -> bool:
    return not any(M.entries())


def hstack(blocks: Sequence[Matrix], rows: int | None = None) -> Matrix:
    """Concatenate horizontally; ``rows`` fixes the height when blocks is empty."""
    if not blocks:
        return fmpq_mat(rows or 0, 0)
    r = blocks[0].nrows()
    if any(b.nrows() != r for b in blocks):
        raise UsageError("hstack: row counts differ")
    cols = sum(b.ncols() for b in blocks)
    out = fmpq_mat(r, cols)
    off = 0
    for b in blocks:
        bc = b.ncols()
        e = b.entries()
        for i in range(r):
            for j in range(bc):
                x = e[i * bc + j]
                if x:
                    out[i, off + j] = x
        off += bc
    return out


def vstack(blocks: Sequence[Matrix], cols: int | None = None) -> Matrix:
    if not blocks:
        return fmpq_mat(0, cols or 0)
    c = blocks[0].ncols()
    if any(b.ncols() != c for b in blocks):
        raise UsageError("vstack: column counts differ")
    flat: list = []
    for b in blocks:
        flat.extend(b.entries())
    return fmpq_mat(sum(b.nrows() for b in blocks), c, flat)


def block_diag(blocks: Sequence[Matrix]) -> Matrix:
    R = sum(b.nrows() for b in blocks)
    C = sum(b.ncols() for b in blocks)
    out = fmpq_mat(R, C)
    r0 = c0 = 0
    for b in blocks:
        bc = b.ncols()
        e = b.entries()
        for i in range(b.nrows()):
            for j in range(bc):
                x = e[i * bc + j]
                if x:
                    out[r0 + i, c0 + j] = x
        r0 += b.nrows()
        c0 += bc
    return out


def select_columns(M: Matrix, idx: Sequence[int]) -> Matrix:
    c = M.ncols()
    e = M.entries()
    out = fmpq_mat(M.nrows(), len(idx))
    for i in range(M.nrows()):
        base = i * c
        for jj, j in enumerate(idx):
            x = e[base + j]
            if x:
                out[i, jj] = x
    return out


def select_rows(M: Matrix, idx: Sequence[int]) -> Matrix:
    c = M.ncols()
    e = M.entries()
    flat: list = []
    for i in idx:
        flat.extend(e[i * c:(i + 1) * c])
    return fmpq_mat(len(idx), c, flat)


def row_range(M: Matrix, start: int, stop: int) -> Matrix:
    return select_rows(M, range(start, stop))


def col(M: Matrix, j: int) -> Matrix:
    return select_columns(M, [j])


def kronecker(A: Matrix, B: Matrix) -> Matrix:
    """Kronecker product with ``(A⊗B)[i*rB + k, j*cB + l] = A[i,j] B[k,l]``."""
    ra, ca = A.nrows(), A.ncols()
    rb, cb = B.nrows(), B.ncols()
    out = fmpq_mat(ra * rb, ca * cb)
    ea = A.entries()
    eb = B.entries()
    nzb = [(k, l, eb[k * cb + l]) for k in range(rb) for l in range(cb) if eb[k * cb + l]]
    for i in range(ra):
        for j in range(ca):
            a = ea[i * ca + j]
            if not a:
                continue
            for k, l, b in nzb:
                out[i * rb + k, j * cb + l] = a * b
    return out


def reshape(v: Matrix, rows: int, cols: int) -> Matrix:
    """Row-major reshape of a column vector (inverse of ``flatten``)."""
    return fmpq_mat(rows, cols, v.entries())


def flatten(M: Matrix) -> Matrix:
    e = M.entries()
    return fmpq_mat(len(e), 1, e)


# -- elimination ------------------------------------------------------------

def rref(M: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns (strictly increasing)."""
    if M.nrows() == 0 or M.ncols() == 0:
        return fmpq_mat(M.nrows(), M.ncols(), M.entries()), []
    R, rank = M.rref()
    c = R.ncols()
    e = R.entries()
    pivots = []
    j = 0
    for i in range(rank):
        base = i * c
        while not e[base + j]:
            j += 1
        pivots.append(j)
        j += 1
    return R, pivots


def rank(M: Matrix) -> int:
    if M.nrows() == 0 or M.ncols() == 0:
        return 0
    return M.rank()


def kernel_basis(M: Matrix) -> Matrix:
    """Columns form a basis of the null space of ``M``."""
    n = M.ncols()
    R, pivots = rref(M)
    pivset = set(pivots)
    free = [j for j in range(n) if j not in pivset]
    out = fmpq_mat(n, len(free))
    e = R.entries()
    for k, f in enumerate(free):
        out[f, k] = 1
        for r, p in enumerate(pivots):
            x = e[r * n + f]
            if x:
                out[p, k] = -x
    return out


def column_space(M: Matrix) -> Matrix:
    """Canonical basis (columns) of the column space: rows of rref(Mᵀ)."""
    if M.ncols() == 0:
        return fmpq_mat(M.nrows(), 0)
    R, pivots = rref(M.transpose())
    return select_rows(R, range(len(pivots))).transpose()


def independent_columns(M: Matrix) -> list[int]:
    return rref(M)[1]


def solve(A: Matrix, b: Matrix) -> Matrix | None:
    """One solution of ``A x = b`` (free variables set to zero), or None."""
    if A.nrows() != b.nrows():
        raise UsageError(f"solve: A has {A.nrows()} rows, b has {b.nrows()}")
    n = A.ncols()
    k = b.ncols()
    R, pivots = rref(hstack([A, b], A.nrows()))
    if pivots and pivots[-1] >= n:
        return None
    x = fmpq_mat(n, k)
    w = n + k
    e = R.entries()
    for r, p in enumerate(pivots):
        for j in range(k):
            v = e[r * w + n + j]
            if v:
                x[p, j] = v
    return x


def inverse(A: Matrix) -> Matrix:
    n = A.nrows()
    if A.ncols() != n:
        raise UsageError("inverse of a non-square matrix")
    if n == 0:
        return fmpq_mat(0, 0)
    R, pivots = rref(hstack([A, identity(n)], n))
    if len(pivots) < n or pivots[n - 1] >= n:
        raise InvariantError("matrix is singular")
    return select_columns(R, range(n, 2 * n))


def is_invertible(A: Matrix) -> bool:
    if A.nrows() != A.ncols():
        return False
    return rank(A) == A.nrows()


class LeftInverse:
    """Coordinates with respect to a full-column-rank basis ``B``.

    ``coords(Y)`` returns ``X`` with ``B X = Y`` and raises if some column of
    ``Y`` is outside the span of ``B``.
    """

    def __init__(self, B: Matrix):
        self.B = B
        k = B.ncols()
        if k == 0:
            self.rows, self.inv = [], fmpq_mat(0, 0)
            return
        self.rows = rref(B.transpose())[1]
        if len(self.rows) != k:
            raise InvariantError("basis columns are dependent")
        self.inv = inverse(select_rows(B, self.rows))

    def coords(self, Y: Matrix, check: bool = True) -> Matrix:
        if self.B.ncols() == 0:
            X = fmpq_mat(0, Y.ncols())
        else:
            X = self.inv * select_rows(Y, self.rows)
        if check and self.B * X != Y:
            raise InvariantError("vector outside the span of the basis")
        return X


def quotient_coords(ambient_dim: int, sub_basis: Matrix) -> tuple[Matrix, Matrix]:
    """Projection onto ``k^n / span(sub_basis)`` and a section of it.

    ``proj`` is ``(n-r) x n`` with ``proj @ sub_basis == 0`` and
    ``proj @ section == I``; the section uses standard basis vectors.
    """
    n = ambient_dim
    if sub_basis.nrows() != n:
        raise UsageError("sub_basis has the wrong length")
    r = sub_basis.ncols()
    if r == 0:
        return identity(n), identity(n)
    piv = rref(sub_basis.transpose())[1]
    if len(piv) != r:
        raise InvariantError("quotient_coords: sub_basis columns are dependent")
    pivset = set(piv)
    comp = [i for i in range(n) if i not in pivset]
    section = fmpq_mat(n, len(comp))
    for k, i in enumerate(comp):
        section[i, k] = 1
    inv = inverse(hstack([sub_basis, section], n))
    proj = select_rows(inv, range(r, n))
    return proj, section
