"""Exact rational linear algebra: vectors, matrices, subspaces, sections.

Everything is computed over arbitrary-precision rationals (``fractions.Fraction``),
so equality of maps and subspaces is decided exactly, never up to tolerance.
Subspace bases are kept in reduced row echelon form, which is canonical: two
subspaces are equal iff their bases are entry-wise identical.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)

Vec = list  # list[Fraction], length fixed by its ambient space


def vec(entries: Iterable) -> Vec:
    return [Fraction(e) for e in entries]


def zero_vec(n: int) -> Vec:
    return [ZERO] * n


def unit_vec(n: int, i: int) -> Vec:
    v = [ZERO] * n
    v[i] = ONE
    return v


def vec_add(u: Vec, v: Vec) -> Vec:
    return [a + b for a, b in zip(u, v)]


def vec_sub(u: Vec, v: Vec) -> Vec:
    return [a - b for a, b in zip(u, v)]


def vec_scale(c: Fraction, v: Vec) -> Vec:
    return [c * a for a in v]


def is_zero_vec(v: Vec) -> bool:
    return all(a == 0 for a in v)


class Matrix:
    """Dense rows x cols matrix of Fractions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[Sequence]):
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError("entry grid does not match declared shape")
        self.rows = rows
        self.cols = cols
        self.entries = [[Fraction(x) for x in row] for row in entries]

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        m = cls.zero(n, n)
        for i in range(n):
            m.entries[i][i] = ONE
        return m

    @classmethod
    def from_cols(cls, cols: Sequence[Vec]) -> "Matrix":
        if not cols:
            raise ValueError("need at least one column")
        n = len(cols[0])
        return cls(n, len(cols), [[c[i] for c in cols] for i in range(n)])

    def col(self, j: int) -> Vec:
        return [self.entries[i][j] for i in range(self.rows)]

    def columns(self) -> list:
        return [self.col(j) for j in range(self.cols)]

    def apply(self, v: Vec) -> Vec:
        """Matrix-vector product, skipping zero coordinates of v."""
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        out = [ZERO] * self.rows
        e = self.entries
        for j, c in enumerate(v):
            if c == 0:
                continue
            for i in range(self.rows):
                a = e[i][j]
                if a != 0:
                    out[i] += c * a
        return out

    def mul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        out = Matrix.zero(self.rows, other.cols)
        a, b, c = self.entries, other.entries, out.entries
        for i in range(self.rows):
            ai = a[i]
            ci = c[i]
            for k in range(self.cols):
                x = ai[k]
                if x == 0:
                    continue
                bk = b[k]
                for j in range(other.cols):
                    y = bk[j]
                    if y != 0:
                        ci[j] += x * y
        return out

    def add(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix sum")
        return Matrix(self.rows, self.cols,
                      [[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.entries, other.entries)])

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [[self.entries[i][j] for i in range(self.rows)]
                       for j in range(self.cols)])

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix)
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.entries)))

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols})"

    def rank(self) -> int:
        _, pivots = rref(self.entries)
        return len(pivots)


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple:
    """Reduced row echelon form with leftmost-pivot elimination.

    Returns (reduced rows, pivot column list). Deterministic: the first row
    with a nonzero entry in the leftmost open column is used as the pivot.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


class Subspace:
    """A subspace of Q^n with canonical reduced-echelon basis."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, spanning: Sequence[Vec]):
        self.ambient_dim = ambient_dim
        reduced, pivots = rref(spanning)
        self.basis = reduced
        self.pivots = pivots

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, [unit_vec(n, i) for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, [])

    def coords(self, v: Vec) -> Optional[Vec]:
        """Coordinates of v in the canonical basis, or None if v is outside."""
        cs = [v[p] for p in self.pivots]
        rest = list(v)
        for c, b in zip(cs, self.basis):
            if c != 0:
                rest = [a - c * x for a, x in zip(rest, b)]
        if not is_zero_vec(rest):
            return None
        return cs

    def contains(self, v: Vec) -> bool:
        return self.coords(v) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(b) for b in other.basis)

    def from_coords(self, cs: Vec) -> Vec:
        out = [ZERO] * self.ambient_dim
        for c, b in zip(cs, self.basis):
            if c != 0:
                for i, x in enumerate(b):
                    if x != 0:
                        out[i] += c * x
        return out

    def inclusion_matrix(self) -> Matrix:
        """ambient_dim x dim matrix whose columns are the basis vectors."""
        if self.dim == 0:
            return Matrix.zero(self.ambient_dim, 0) if self.ambient_dim else Matrix(0, 0, [])
        return Matrix.from_cols(self.basis)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace)
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, tuple(tuple(b) for b in self.basis)))

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"


def sparse_columns(m: Matrix) -> list:
    """Columns of m as sparse dicts {row: value}; used in hot loops."""
    e = m.entries
    return [{i: e[i][j] for i in range(m.rows) if e[i][j] != 0}
            for j in range(m.cols)]


def apply_sparse_columns(scols: list, v: Vec, rows: int) -> Vec:
    out = [ZERO] * rows
    for j, c in enumerate(v):
        if c == 0:
            continue
        for i, a in scols[j].items():
            out[i] += c * a
    return out


def kernel_basis(m: Matrix) -> Subspace:
    """Canonical basis of { v : m v = 0 }."""
    reduced, pivots = rref(m.entries)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -reduced[r][f]
        basis.append(v)
    return Subspace(m.cols, basis)


def image_basis(m: Matrix) -> Subspace:
    """Canonical basis of the column span of m."""
    return Subspace(m.rows, [m.col(j) for j in range(m.cols)])


class NoSolutionError(ValueError):
    pass


def solve(m: Matrix, b: Vec) -> Optional[Vec]:
    """Some v with m v = b, or None when b is outside the image.

    Deterministic: free variables (non-pivot columns, leftmost pivoting) are
    set to zero.
    """
    if len(b) != m.rows:
        raise ValueError("right-hand side length does not match row count")
    aug = [list(row) + [bv] for row, bv in zip(m.entries, b)]
    reduced, pivots = rref(aug)
    for row in reduced:
        if all(x == 0 for x in row[:-1]) and row[-1] != 0:
            return None
    v = [ZERO] * m.cols
    for r, p in enumerate(pivots):
        if p == m.cols:
            return None  # pivot in the augmented column
        v[p] = reduced[r][-1]
    return v


def section_of(m: Matrix, onto: Subspace) -> Matrix:
    """A right inverse sigma with m . sigma = id on `onto`.

    Columns are indexed by the canonical basis of `onto`; column j is the
    deterministic preimage of basis vector j under m.
    """
    if onto.ambient_dim != m.rows:
        raise ValueError("subspace does not live in the codomain of m")
    cols = []
    for b in onto.basis:
        v = solve(m, b)
        if v is None:
            raise NoSolutionError("subspace is not contained in the image of m")
        cols.append(v)
    if not cols:
        return Matrix.zero(m.cols, 0)
    return Matrix.from_cols(cols)


def tensor_contract(t: dict, arity: int, operands: Sequence[Optional[Vec]],
                    free_dim: Optional[int] = None):
    """Contract a sparse multi-index tensor with vectors on selected legs.

    ``t`` maps index tuples of length ``arity`` to Fractions. ``operands``
    must have one entry per leg; a vector contracts that leg, ``None`` leaves
    it free. Returns a Fraction when every leg is contracted, a dense Vec of
    length ``free_dim`` when exactly one leg is free, and a sparse dict keyed
    by free index tuples otherwise.
    """
    res = tensor_contract_sparse(t, arity, operands)
    free = [i for i, op in enumerate(operands) if op is None]
    if not free:
        return res.get((), ZERO)
    if len(free) == 1 and free_dim is not None:
        out = [ZERO] * free_dim
        for (i,), c in res.items():
            out[i] = c
        return out
    return res


def tensor_contract_sparse(t: dict, arity: int, operands: Sequence[Optional[Vec]]) -> dict:
    if len(operands) != arity:
        raise ValueError("operand count must equal tensor arity")
    out: dict = {}
    free = [i for i, op in enumerate(operands) if op is None]
    for idx, coeff in t.items():
        if len(idx) != arity:
            raise ValueError("tensor key arity mismatch")
        c = coeff
        for leg, op in enumerate(operands):
            if op is None:
                continue
            c *= op[idx[leg]]
            if c == 0:
                break
        if c == 0:
            continue
        key = tuple(idx[i] for i in free)
        out[key] = out.get(key, ZERO) + c
        if out[key] == 0:
            del out[key]
    return out
