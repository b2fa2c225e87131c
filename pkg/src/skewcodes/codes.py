"""Rank-metric codes as L-subspaces of the skew group algebra.

A code is stored once, as an echelonized list of group-algebra generators
(reduced row echelon form of the coefficient matrix over L); the vector and
matrix representations are derived on demand and never stored.  Minimum
distance over a finite backend is exact brute force (projective enumeration);
over infinite fields only bounds are reported, with a seeded sampling upper
bound.
"""

from __future__ import annotations

import itertools

from .errors import BudgetExceeded, FieldMismatchError
from .fields import Basis, _seeded_rng_int
from .group_algebra import (GroupAlgebraElement, dickson_matrix, endo_matrix,
                            lg_inner_product, zero_element)
from .linalg import KSubspace, Matrix


class Code:
    """An L-linear subspace of L[G] with echelonized generators."""

    __slots__ = ("field", "gens", "pivots")

    def __init__(self, field, gens, pivots):
        self.field = field
        self.gens = tuple(gens)
        self.pivots = tuple(pivots)

    @classmethod
    def from_generators(cls, field, elements) -> "Code":
        """Build a code from any generating set; dependent ones are dropped."""
        vectors = [list(e.coeffs) for e in elements if e]
        if not vectors:
            return cls(field, (), ())
        red, pivots = Matrix(field, vectors).rref()
        gens = [GroupAlgebraElement(field, row) for row in red.rows]
        return cls(field, gens, pivots)

    @classmethod
    def zero(cls, field) -> "Code":
        return cls(field, (), ())

    @classmethod
    def full(cls, field) -> "Code":
        n = len(field.group())
        gens = []
        for i in range(n):
            coeffs = [field.zero] * n
            coeffs[i] = field.one
            gens.append(GroupAlgebraElement(field, coeffs))
        return cls(field, gens, tuple(range(n)))

    @property
    def dim(self) -> int:
        return len(self.gens)

    @property
    def length(self) -> int:
        return len(self.field.group())

    def contains(self, elem: GroupAlgebraElement) -> bool:
        vec = list(elem.coeffs)
        for g, pc in zip(self.gens, self.pivots):
            c = vec[pc]
            if c:
                vec = [a - c * b if b else a for a, b in zip(vec, g.coeffs)]
        return not any(vec)

    def contains_code(self, other: "Code") -> bool:
        return all(self.contains(g) for g in other.gens)

    def __eq__(self, other):
        return (isinstance(other, Code) and other.field.key == self.field.key
                and tuple(g.coeffs for g in other.gens) == tuple(g.coeffs for g in self.gens))

    def __repr__(self):
        return f"Code[{self.length}, {self.dim}] over {self.field.name}"

    # -- algebra ----------------------------------------------------------

    def sum(self, other: "Code") -> "Code":
        return Code.from_generators(self.field, list(self.gens) + list(other.gens))

    def dual(self) -> "Code":
        """Orthogonal complement for the coefficientwise pairing on L[G]."""
        n = self.length
        if self.dim == 0:
            return Code.full(self.field)
        mat = Matrix(self.field, [g.coeffs for g in self.gens])
        ker = mat.kernel()
        return Code.from_generators(
            self.field, [GroupAlgebraElement(self.field, row) for row in ker.rows])

    def shorten(self, space: KSubspace) -> "Code":
        """Codewords whose kernel contains the given K-subspace of L.

        Evaluation is L-linear in the codeword, so each basis vector of the
        subspace contributes one L-linear condition on the coefficients.
        """
        f = self.field
        if self.dim == 0 or space.dim == 0:
            return self
        points = f.elements_of_subspace(space)
        rows = [[g.evaluate(w) for g in self.gens] for w in points]
        ker = Matrix(f, rows).kernel()
        gens = []
        for lam in ker.rows:
            acc = zero_element(f)
            for c, g in zip(lam, self.gens):
                if c:
                    acc = acc + g.scale(c)
            gens.append(acc)
        return Code.from_generators(f, gens)

    def product(self, other: "Code") -> "Code":
        """The span of pairwise compositions self o other (order matters)."""
        if self.field.key != other.field.key:
            raise FieldMismatchError("codes over different fields")
        gens = [b.compose(a) for b in self.gens for a in other.gens]
        return Code.from_generators(self.field, gens)

    # -- derived representations -------------------------------------------

    def evaluation_rows(self, basis: Basis) -> Matrix:
        """Generator matrix over L of the vector representation at a basis."""
        if self.dim == 0:
            raise ValueError("zero code has no generator matrix")
        return Matrix(self.field, [g.ev_vector(basis.elements) for g in self.gens])

    def ext_matrix_generators(self, basis1: Basis, basis2: Basis | None = None):
        """K-basis of the matrix representation: one matrix per (generator,
        scalar) pair, the scalar running over the canonical K-basis of L."""
        f = self.field
        if basis2 is None:
            basis2 = basis1
        out = []
        for g in self.gens:
            for s in f.canonical_basis_elements:
                word = g.scale(s)
                vec = word.ev_vector(basis1.elements)
                cols = [basis2.coords(x) for x in vec]
                out.append(Matrix(f.base,
                                  [[cols[j][i] for j in range(f.N)] for i in range(f.N)]))
        return out

    # -- distance ------------------------------------------------------------

    def min_distance_bruteforce(self, budget: int = 2**20) -> int:
        """Exact minimum rank over all nonzero codewords (finite backend).

        Enumerates projectively: the first nonzero combination coefficient is
        normalized to 1, which does not change ranks.  The configured budget
        bounds the full (q^N)^k count.
        """
        f = self.field
        if not f.is_finite:
            raise ValueError("brute force needs a finite backend; use the sampled bound")
        if self.dim == 0:
            raise ValueError("zero code has no minimum distance")
        q_n = f.p ** f.N
        if q_n ** self.dim > budget:
            raise BudgetExceeded(
                f"{q_n ** self.dim} codewords exceed budget {budget}; "
                "use min_rank_sampled_bound")
        basis = Basis.canonical(f)
        gen_mats = []
        for g in self.gens:
            mats = []
            for s in f.all_elements():
                word = g.scale(s)
                cols = [basis.coords(word.evaluate(b)) for b in basis]
                mats.append(tuple(tuple(cols[j][i].v for j in range(f.N))
                                  for i in range(f.N)))
            gen_mats.append(mats)
        elems = list(f.all_elements())
        index = {e: i for i, e in enumerate(elems)}
        one = index[f.one]
        p = f.p
        n = f.N
        best = n
        k = self.dim
        for lead in range(k):
            free = k - lead - 1
            for rest in itertools.product(range(q_n), repeat=free):
                mat = [list(r) for r in gen_mats[lead][one]]
                for off, ci in enumerate(rest):
                    if ci == 0:
                        continue
                    madd = gen_mats[lead + 1 + off][ci]
                    for r in range(n):
                        mr = mat[r]
                        ar = madd[r]
                        for c in range(n):
                            mr[c] = (mr[c] + ar[c]) % p
                r = _pf_rank(mat, p)
                if r < best:
                    best = r
                    if best == 1:
                        return 1
        return best

    def min_rank_sampled_bound(self, trials: int, seed: int, height: int = 3,
                               include=()) -> int:
        """Minimum rank over seeded random codewords: an upper bound on the
        true minimum distance.  Extra codewords can be injected via
        ``include`` (e.g. a constructed extremal word)."""
        import random

        f = self.field
        if self.dim == 0:
            raise ValueError("zero code has no minimum distance")
        best = f.N
        for word in include:
            if word:
                best = min(best, dickson_matrix(word).rank())
        for t in range(trials):
            rng = random.Random(_seeded_rng_int(seed, "sample", t))
            word = zero_element(f)
            while not word:
                word = zero_element(f)
                for g in self.gens:
                    c = f.random_element(rng, height)
                    if c:
                        word = word + g.scale(c)
            best = min(best, dickson_matrix(word).rank())
            if best == 1:
                break
        return best

    # -- serialization ---------------------------------------------------------

    def to_obj(self):
        return {
            "field_hash": self.field.descriptor_hash(),
            "generators": [g.to_obj() for g in self.gens],
        }

    @classmethod
    def from_obj(cls, field, obj) -> "Code":
        if obj.get("field_hash") != field.descriptor_hash():
            raise ValueError("code descriptor does not match the field descriptor")
        gens = [GroupAlgebraElement.from_obj(field, o) for o in obj["generators"]]
        return cls.from_generators(field, gens)


def _pf_rank(rows, p: int) -> int:
    """Rank of a small integer matrix modulo p (plain elimination)."""
    n = len(rows)
    m = len(rows[0])
    rank = 0
    for col in range(m):
        sel = None
        for r in range(rank, n):
            if rows[r][col] % p:
                sel = r
                break
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        prow = [v * inv % p for v in rows[rank]]
        rows[rank] = prow
        for r in range(rank + 1, n):
            c = rows[r][col] % p
            if c:
                rows[r] = [(a - c * b) % p for a, b in zip(rows[r], prow)]
        rank += 1
        if rank == n:
            break
    return rank


def vector_dual_rows(field, rows: Matrix) -> KSubspace:
    """Dual of a vector code under the standard inner product on L^M."""
    return rows.kernel()


def matrix_code_span(field, matrices) -> KSubspace:
    """K-span of flattened matrices: the subspace view of a matrix code."""
    K = field.base
    vecs = [[x for row in m.rows for x in row] for m in matrices]
    amb = len(vecs[0]) if vecs else field.N * field.N
    return KSubspace.from_vectors(K, amb, vecs)


def rank_of_vector(field, vec) -> int:
    """K-rank of a tuple of L-elements (dimension of their K-span)."""
    rows = [field.coords_over_base(x) for x in vec]
    return Matrix(field.base, rows).rank()
