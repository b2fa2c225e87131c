"""Dense exact linear algebra over the fields provided by this package.

Matrices are immutable row-major tuples of field elements.  Rank and
determinant use fraction-free (Bareiss) elimination with a deterministic
pivot rule (first nonzero entry in column order); reduced row echelon form,
kernels and solves use ordinary division-based elimination, whose results
are canonical because the pivot rule is fixed.  Everything is exact; the
same code serves rationals, cyclotomics, radical towers and finite fields
through the element operators.
"""

from __future__ import annotations

import csv
import io
import json
import math

from .errors import InvariantViolation


class Matrix:
    """An immutable dense matrix over an exact field."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field, rows):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise ValueError("matrix dimensions must be positive")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    # -- constructors -------------------------------------------------------

    @classmethod
    def identity(cls, field, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, nrows: int, ncols: int) -> "Matrix":
        zero = field.zero
        return cls(field, [[zero] * ncols for _ in range(nrows)])

    # -- structure ----------------------------------------------------------

    def transpose(self) -> "Matrix":
        return Matrix(self.field, [[self.rows[i][j] for i in range(self.nrows)]
                                   for j in range(self.ncols)])

    def __eq__(self, other):
        return (isinstance(other, Matrix) and other.field.key == self.field.key
                and other.rows == self.rows)

    def __add__(self, other):
        return Matrix(self.field, [[a + b for a, b in zip(r1, r2)]
                                   for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return Matrix(self.field, [[a - b for a, b in zip(r1, r2)]
                                   for r1, r2 in zip(self.rows, other.rows)])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        bt = other.transpose().rows
        out = []
        for r in self.rows:
            row = []
            for c in bt:
                acc = None
                for a, b in zip(r, c):
                    if a and b:
                        t = a * b
                        acc = t if acc is None else acc + t
                row.append(self.field.zero if acc is None else acc)
            out.append(row)
        return Matrix(self.field, out)

    def apply(self, vec):
        """Matrix times column vector, returned as a list."""
        if len(vec) != self.ncols:
            raise ValueError("shape mismatch in matrix-vector product")
        out = []
        for r in self.rows:
            acc = None
            for a, b in zip(r, vec):
                if a and b:
                    t = a * b
                    acc = t if acc is None else acc + t
            out.append(self.field.zero if acc is None else acc)
        return out

    def scale(self, c) -> "Matrix":
        return Matrix(self.field, [[c * a for a in r] for r in self.rows])

    def hstack(self, other: "Matrix") -> "Matrix":
        return Matrix(self.field, [r1 + r2 for r1, r2 in zip(self.rows, other.rows)])

    def vstack(self, other: "Matrix") -> "Matrix":
        return Matrix(self.field, self.rows + other.rows)

    def col(self, j: int):
        return [r[j] for r in self.rows]

    # -- fraction-free elimination -----------------------------------------

    def _bareiss(self, integralize: bool):
        """Fraction-free elimination; returns (rank, det_or_None, swaps).

        det is only meaningful without row scaling, so rank() integralizes
        rows first (cheap, rank-invariant) while det() does not.
        """
        f = self.field
        if integralize:
            rows = [list(f.row_integralize(r)) for r in self.rows]
        else:
            rows = [list(r) for r in self.rows]
        n, m = self.nrows, self.ncols
        rank = 0
        swaps = 0
        prev = None
        prev_inv = None
        last_pivot = None
        for col in range(m):
            if rank == n:
                break
            sel = next((r for r in range(rank, n) if rows[r][col]), None)
            if sel is None:
                continue
            if sel != rank:
                rows[rank], rows[sel] = rows[sel], rows[rank]
                swaps += 1
            if prev is not None and prev_inv is None:
                prev_inv = f.one / prev
            piv = rows[rank][col]
            for r in range(rank + 1, n):
                rc = rows[r][col]
                row_r = rows[r]
                row_p = rows[rank]
                if rc:
                    for c in range(col + 1, m):
                        v = piv * row_r[c] - rc * row_p[c]
                        if prev_inv is not None:
                            v = v * prev_inv
                        row_r[c] = v
                else:
                    if prev_inv is not None:
                        for c in range(col + 1, m):
                            v = row_r[c]
                            if v:
                                row_r[c] = (piv * v) * prev_inv
                    else:
                        for c in range(col + 1, m):
                            v = row_r[c]
                            if v:
                                row_r[c] = piv * v
                row_r[col] = f.zero
            prev = piv
            prev_inv = None
            last_pivot = piv
            rank += 1
        return rank, last_pivot, swaps

    def rank(self) -> int:
        """Exact rank via fraction-free elimination, first-nonzero pivoting."""
        if hasattr(self.field, "_pair") and self.field.characteristic == 0:
            return _vec_rank(self.field, self.rows)
        rank, _, _ = self._bareiss(integralize=True)
        return rank

    def det(self):
        """Exact determinant (square matrices) via fraction-free elimination."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        rank, last_pivot, swaps = self._bareiss(integralize=False)
        if rank < self.nrows:
            return self.field.zero
        return -last_pivot if swaps % 2 else last_pivot

    # -- division-based elimination ----------------------------------------

    def _rref_rows(self, rows):
        """In-place RREF; returns (rows, pivot_cols).  Zero rows are kept."""
        f = self.field
        n = len(rows)
        m = len(rows[0])
        piv = 0
        pivots = []
        for col in range(m):
            if piv == n:
                break
            sel = next((r for r in range(piv, n) if rows[r][col]), None)
            if sel is None:
                continue
            rows[piv], rows[sel] = rows[sel], rows[piv]
            inv = f.one / rows[piv][col]
            rows[piv] = [v * inv if v else v for v in rows[piv]]
            for r in range(n):
                if r != piv and rows[r][col]:
                    c = rows[r][col]
                    rows[r] = [a - c * b if b else a for a, b in zip(rows[r], rows[piv])]
            pivots.append(col)
            piv += 1
        return rows, pivots

    def rref(self):
        """Reduced row echelon form and pivot columns (zero rows dropped)."""
        rows, pivots = self._rref_rows([list(r) for r in self.rows])
        kept = [tuple(r) for r in rows[:len(pivots)]]
        return Matrix(self.field, kept) if kept else None, tuple(pivots)

    def kernel(self) -> "KSubspace":
        """The right kernel {x : M x = 0}, as an echelonized subspace."""
        f = self.field
        rows, pivots = self._rref_rows([list(r) for r in self.rows])
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for fc in free:
            vec = [f.zero] * self.ncols
            vec[fc] = f.one
            for r, pc in enumerate(pivots):
                v = rows[r][fc]
                if v:
                    vec[pc] = -v
            basis.append(vec)
        return KSubspace.from_vectors(f, self.ncols, basis)

    def left_kernel(self) -> "KSubspace":
        return self.transpose().kernel()

    def solve(self, rhs):
        """One solution of M x = rhs, or None if inconsistent.

        Free variables are set to zero, so the answer is deterministic.
        """
        f = self.field
        aug = [list(r) + [b] for r, b in zip(self.rows, rhs)]
        rows, pivots = self._rref_rows(aug)
        if self.ncols in pivots:
            return None
        sol = [f.zero] * self.ncols
        for r, pc in enumerate(pivots):
            sol[pc] = rows[r][self.ncols]
        return sol

    def solve_unique(self, rhs):
        """The unique solution of M x = rhs, or None if none or many exist."""
        aug = [list(r) + [b] for r, b in zip(self.rows, rhs)]
        rows, pivots = self._rref_rows(aug)
        if self.ncols in pivots or len(pivots) < self.ncols:
            return None
        sol = [self.field.zero] * self.ncols
        for r, pc in enumerate(pivots):
            sol[pc] = rows[r][self.ncols]
        return sol

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        f = self.field
        ident = Matrix.identity(f, n)
        aug = [list(r) + list(i) for r, i in zip(self.rows, ident.rows)]
        rows, pivots = self._rref_rows(aug)
        if len(pivots) < n or any(pc >= n for pc in pivots):
            raise ZeroDivisionError("matrix is singular")
        return Matrix(f, [r[n:] for r in rows[:n]])

    # -- serialization ------------------------------------------------------

    def to_nested(self):
        f = self.field
        return [[f.element_to_obj(x) for x in r] for r in self.rows]

    @classmethod
    def from_nested(cls, field, obj) -> "Matrix":
        return cls(field, [[field.element_from_obj(x) for x in r] for r in obj])

    def to_text(self) -> str:
        return json.dumps(self.to_nested())

    @classmethod
    def from_text(cls, field, text: str) -> "Matrix":
        return cls.from_nested(field, json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        f = self.field
        for r in self.rows:
            writer.writerow([_cell(f, x) for x in r])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, field, text: str) -> "Matrix":
        rows = []
        for rec in csv.reader(io.StringIO(text)):
            if not rec:
                continue
            rows.append([_uncell(field, cell) for cell in rec])
        return cls(field, rows)

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols} over {self.field.name})"


def _vec_rank(field, mrows) -> int:
    """Bareiss rank specialized to vector-element fields (raw integer rows).

    Entries are integralized per row (rank-safe), kept as plain int lists,
    multiplied through the field's pair table, and the exact division by the
    previous pivot happens as one convolution with the cached pivot inverse
    followed by an integer division (exactness checked).
    """
    dim = field.dim
    tab = field._pair

    def conv(a, b):
        out = [0] * dim
        for i, ai in enumerate(a):
            if not ai:
                continue
            ti = tab[i]
            for j, bj in enumerate(b):
                if not bj:
                    continue
                ab = ai * bj
                for k, c in ti[j]:
                    out[k] += c * ab
        return out

    rows = []
    for r in mrows:
        l = 1
        for e in r:
            if e.den != 1:
                l = l // math.gcd(l, e.den) * e.den
        rows.append([[a * (l // e.den) for a in e.vec] for e in r])

    n = len(rows)
    m = len(rows[0])
    rank = 0
    prev = None
    pinv_vec = None
    pinv_den = 1
    for col in range(m):
        if rank == n:
            break
        sel = next((r for r in range(rank, n) if any(rows[r][col])), None)
        if sel is None:
            continue
        if sel != rank:
            rows[rank], rows[sel] = rows[sel], rows[rank]
        if prev is not None and pinv_vec is None:
            inv = field._invert(field._elem(list(prev), 1))
            pinv_vec, pinv_den = list(inv.vec), inv.den
        piv = rows[rank][col]
        for r in range(rank + 1, n):
            row_r = rows[r]
            rc = row_r[col]
            row_p = rows[rank]
            rc_nz = any(rc)
            for c in range(col + 1, m):
                x = row_r[c]
                if rc_nz:
                    t1 = conv(piv, x)
                    t2 = conv(rc, row_p[c])
                    v = [a - b for a, b in zip(t1, t2)]
                elif any(x):
                    v = conv(piv, x)
                else:
                    continue
                if pinv_vec is not None:
                    v = conv(v, pinv_vec)
                    if pinv_den != 1:
                        for idx in range(dim):
                            q, rem = divmod(v[idx], pinv_den)
                            if rem:
                                raise InvariantViolation("inexact Bareiss division")
                            v[idx] = q
                row_r[c] = v
            row_r[col] = [0] * dim
        prev = piv
        pinv_vec = None
        rank += 1
    return rank


def _cell(field, x) -> str:
    obj = field.element_to_obj(x)
    if isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj)
    return json.dumps(obj)


def _uncell(field, cell: str):
    cell = cell.strip()
    if cell.startswith("["):
        return field.element_from_obj(json.loads(cell))
    obj = int(cell) if "/" not in cell else cell
    return field.element_from_obj(obj)


class KSubspace:
    """A subspace of K^n in reduced row echelon form (canonical)."""

    __slots__ = ("field", "ambient", "rows", "pivots")

    def __init__(self, field, ambient: int, rows, pivots):
        self.field = field
        self.ambient = ambient
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)

    @classmethod
    def from_vectors(cls, field, ambient: int, vectors) -> "KSubspace":
        vectors = [list(v) for v in vectors if any(v)]
        if not vectors:
            return cls(field, ambient, (), ())
        m = Matrix(field, vectors)
        red, pivots = m.rref()
        rows = red.rows if red is not None else ()
        return cls(field, ambient, rows, pivots)

    @classmethod
    def full(cls, field, ambient: int) -> "KSubspace":
        ident = Matrix.identity(field, ambient)
        return cls(field, ambient, ident.rows, tuple(range(ambient)))

    @classmethod
    def zero(cls, field, ambient: int) -> "KSubspace":
        return cls(field, ambient, (), ())

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce_vector(self, vec):
        """Residue of vec after elimination against the echelon rows."""
        vec = list(vec)
        for row, pc in zip(self.rows, self.pivots):
            c = vec[pc]
            if c:
                vec = [a - c * b if b else a for a, b in zip(vec, row)]
        return vec

    def contains(self, vec) -> bool:
        return not any(self.reduce_vector(vec))

    def contains_space(self, other: "KSubspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def __eq__(self, other):
        return (isinstance(other, KSubspace) and other.field.key == self.field.key
                and other.ambient == self.ambient and other.rows == self.rows)

    def sum(self, other: "KSubspace") -> "KSubspace":
        return KSubspace.from_vectors(self.field, self.ambient,
                                      list(self.rows) + list(other.rows))

    def intersect(self, other: "KSubspace") -> "KSubspace":
        if self.dim == 0 or other.dim == 0:
            return KSubspace.zero(self.field, self.ambient)
        stacked = Matrix(self.field, list(self.rows) + list(other.rows))
        lk = stacked.left_kernel()
        vecs = []
        r = self.dim
        for w in lk.rows:
            vec = [self.field.zero] * self.ambient
            for i in range(r):
                c = w[i]
                if c:
                    vec = [a + c * b for a, b in zip(vec, self.rows[i])]
            vecs.append(vec)
        return KSubspace.from_vectors(self.field, self.ambient, vecs)

    def basis_matrix(self):
        if self.dim == 0:
            return None
        return Matrix(self.field, self.rows)

    def __repr__(self):
        return f"KSubspace(dim={self.dim}, ambient={self.ambient}, field={self.field.name})"


def rank(m: Matrix) -> int:
    return m.rank()


def det(m: Matrix):
    return m.det()


def kernel(m: Matrix) -> KSubspace:
    return m.kernel()


def solve(m: Matrix, rhs):
    return m.solve(rhs)


def inverse(m: Matrix) -> Matrix:
    return m.inverse()
