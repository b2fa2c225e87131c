"""The skew group algebra L[G] and its rank theory.

Elements are formal L-linear combinations of the Galois group, multiplied by
the composition rule (a*g) o (b*h) = (a * g(b)) * (gh).  Every element acts
as a K-linear endomorphism of L, and its rank can be computed four
equivalent ways: as the rank of that endomorphism over K, as the L-rank of
the Moore matrix of its evaluation vector on a basis, as the L-rank of its
Dickson matrix, and through the dimension of its left annihilator ideal.
``rank_of`` computes all four and insists they agree.
"""

from __future__ import annotations

from .errors import FieldMismatchError, InvariantViolation
from .fields import Basis, ExtensionField, moore_rows
from .linalg import KSubspace, Matrix


class GroupAlgebraElement:
    """A formal sum over the canonical group order with coefficients in L."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: ExtensionField, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != len(field.group()):
            raise ValueError("coefficient vector must have one entry per group element")
        self.field = field
        self.coeffs = coeffs

    def _check(self, other):
        if not isinstance(other, GroupAlgebraElement) or other.field.key != self.field.key:
            raise FieldMismatchError("group algebra elements over different fields")

    # -- linear structure ---------------------------------------------------

    def __add__(self, other):
        self._check(other)
        return GroupAlgebraElement(self.field,
                                   [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return GroupAlgebraElement(self.field,
                                   [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return GroupAlgebraElement(self.field, [-a for a in self.coeffs])

    def scale(self, c) -> "GroupAlgebraElement":
        """Left multiplication by a field element."""
        return GroupAlgebraElement(self.field, [c * a for a in self.coeffs])

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, GroupAlgebraElement)
                and other.field.key == self.field.key and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.field.key, self.coeffs))

    # -- ring structure -------------------------------------------------------

    def compose(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        """(a_i g_i) o (a_j g_j) = (a_i g_i(a_j)) (g_i g_j), extended bilinearly."""
        self._check(other)
        f = self.field
        grp = f.group()
        out = [f.zero] * grp.order
        for i, ai in enumerate(self.coeffs):
            if not ai:
                continue
            gi = grp.autos[i]
            comp_row = grp.comp[i]
            for j, aj in enumerate(other.coeffs):
                if not aj:
                    continue
                k = comp_row[j]
                out[k] = out[k] + ai * gi(aj)
        return GroupAlgebraElement(f, out)

    def __matmul__(self, other):
        return self.compose(other)

    # -- action on L ----------------------------------------------------------

    def evaluate(self, x):
        """The induced K-linear endomorphism applied to x."""
        f = self.field
        acc = f.zero
        for a, g in zip(self.coeffs, f.group()):
            if a:
                acc = acc + a * g(x)
        return acc

    def ev_vector(self, points):
        """Evaluations (a(b_1), ..., a(b_M)) at the given field elements."""
        return [self.evaluate(b) for b in points]

    def adjoint(self) -> "GroupAlgebraElement":
        """The trace-form adjoint: coefficient at g becomes g(u_{g^-1})."""
        f = self.field
        grp = f.group()
        out = []
        for i, g in enumerate(grp.autos):
            j = grp.inv[i]
            out.append(g(self.coeffs[j]))
        return GroupAlgebraElement(f, out)

    def support_size_hint(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def to_obj(self):
        f = self.field
        return [f.element_to_obj(c) for c in self.coeffs]

    @classmethod
    def from_obj(cls, field, obj) -> "GroupAlgebraElement":
        return cls(field, [field.element_from_obj(o) for o in obj])

    def __repr__(self):
        parts = []
        for c, g in zip(self.coeffs, self.field.group()):
            if c:
                parts.append(f"({c!r})*{g!r}")
        return " + ".join(parts) if parts else "0"


# -- constructors -----------------------------------------------------------


def zero_element(field) -> GroupAlgebraElement:
    return GroupAlgebraElement(field, [field.zero] * len(field.group()))


def identity_element(field) -> GroupAlgebraElement:
    grp = field.group()
    return GroupAlgebraElement(
        field, [field.one if i == 0 else field.zero for i in range(grp.order)])


def monomial(field, aut, coeff=None) -> GroupAlgebraElement:
    """coeff * g for a single automorphism g (coeff defaults to 1)."""
    grp = field.group()
    idx = grp.index[aut.params]
    c = field.one if coeff is None else coeff
    return GroupAlgebraElement(
        field, [c if i == idx else field.zero for i in range(grp.order)])


def trace_element(field) -> GroupAlgebraElement:
    """The sum of all group elements; evaluates to the trace map."""
    return GroupAlgebraElement(field, [field.one] * len(field.group()))


def random_element(field, rng, height: int = 3) -> GroupAlgebraElement:
    return GroupAlgebraElement(
        field, [field.random_element(rng, height) for _ in range(len(field.group()))])


def lg_inner_product(a: GroupAlgebraElement, b: GroupAlgebraElement):
    """The coefficientwise pairing sum_g a_g b_g (L-valued, symmetric)."""
    a._check(b)
    f = a.field
    acc = f.zero
    for x, y in zip(a.coeffs, b.coeffs):
        if x and y:
            acc = acc + x * y
    return acc


# -- matrices attached to elements -------------------------------------------


def moore_matrix(field, points) -> Matrix:
    """The matrix [g_i(v_j)] over L, rows indexed by the canonical group order."""
    return Matrix(field, moore_rows(field, points))


def dickson_matrix(a: GroupAlgebraElement) -> Matrix:
    """Column j holds the coefficients of g_j o a (right multiplication by a)."""
    f = a.field
    grp = f.group()
    n = grp.order
    cols = []
    for j in range(n):
        gj = grp.autos[j]
        col = [f.zero] * n
        comp_row = grp.comp[j]
        for i, ai in enumerate(a.coeffs):
            if ai:
                col[comp_row[i]] = gj(ai)
        cols.append(col)
    return Matrix(f, [[cols[j][i] for j in range(n)] for i in range(n)])


def endo_matrix(a: GroupAlgebraElement, basis: Basis | None = None) -> Matrix:
    """Matrix over K of the endomorphism induced by a; columns are images."""
    f = a.field
    if basis is None:
        basis = Basis.canonical(f)
    cols = [basis.coords(a.evaluate(b)) for b in basis]
    n = f.N
    return Matrix(f.base, [[cols[j][i] for j in range(n)] for i in range(n)])


def interpolate(field, mat: Matrix, basis: Basis | None = None) -> GroupAlgebraElement:
    """The unique element of L[G] whose endomorphism matrix over K is ``mat``.

    Solves the Moore system through the dual basis: the inverse of the Moore
    matrix of a basis is the transposed Moore matrix of its dual.
    """
    if basis is None:
        basis = Basis.canonical(field)
    n = field.N
    if mat.nrows != n or mat.ncols != n:
        raise ValueError("endomorphism matrix must be N x N over K")
    targets = []
    for j in range(n):
        acc = field.zero
        for i in range(n):
            c = mat.rows[i][j]
            if c:
                acc = acc + field.embed_base(c) * basis[i]
        targets.append(acc)
    dual = basis.dual()
    coeffs = moore_matrix(field, dual.elements).apply(targets)
    return GroupAlgebraElement(field, coeffs)


# -- the four equivalent rank computations ------------------------------------


def annihilator_ideal(a: GroupAlgebraElement) -> list[GroupAlgebraElement]:
    """An L-basis of the left annihilator {f in L[G] : f o a = 0}.

    Coefficient vectors of annihilating elements are exactly the kernel of
    the transposed Moore matrix of the evaluation vector of a.
    """
    f = a.field
    v = a.ev_vector(Basis.canonical(f).elements)
    ker = moore_matrix(f, v).transpose().kernel()
    return [GroupAlgebraElement(f, row) for row in ker.rows]


def rank_of(a: GroupAlgebraElement) -> int:
    """The rank of a, computed four equivalent ways and cross-checked:

    over K as the rank of the induced endomorphism matrix; over L as the
    rank of the Moore matrix of the evaluation vector; over L as the rank of
    the Dickson matrix; and as N minus the dimension of the left annihilator
    ideal (the kernel of the transposed Moore matrix).
    """
    f = a.field
    n = f.N
    basis = Basis.canonical(f)
    r_endo = endo_matrix(a, basis).rank()
    v = a.ev_vector(basis.elements)
    mv = moore_matrix(f, v)
    r_moore = mv.rank()
    r_dickson = dickson_matrix(a).rank()
    mt = mv.transpose()
    r_ann = n - (mt.ncols - mt.rank())
    if not (r_endo == r_moore == r_dickson == r_ann):
        raise InvariantViolation(
            f"rank characterizations disagree: endo={r_endo} moore={r_moore} "
            f"dickson={r_dickson} annihilator={r_ann}")
    return r_endo


def kernel_subspace(a: GroupAlgebraElement) -> KSubspace:
    """ker(a) as a K-subspace of L in canonical coordinates."""
    return endo_matrix(a).kernel()


def support(a: GroupAlgebraElement) -> KSubspace:
    """supp(a) = ker(a)^perp (trace form) = image of the adjoint; cross-checked."""
    f = a.field
    ker = kernel_subspace(a)
    s1 = f.orth_complement_trace(ker)
    adj_mat = endo_matrix(a.adjoint())
    s2 = KSubspace.from_vectors(f.base, f.N, adj_mat.transpose().rows)
    if s1 != s2:
        raise InvariantViolation("support computed two ways disagrees")
    return s1


def dickson_similarity_check(a: GroupAlgebraElement) -> bool:
    """Verify that the transposed Dickson matrix is similar to the
    endomorphism matrix through the Moore matrix of an eigenvector.

    Steps: pick the deterministic primitive element alpha; compute its
    multiplication matrix A_alpha over K; over L, take the alpha-eigenvector
    v of A_alpha (the eigenspace is one-dimensional because alpha has
    distinct conjugates); rescale v so that sum_j v_j b_j = 1, which makes v
    exactly the dual basis vector and in particular independent of the
    kernel computation's scaling; then check

        A(a, B)_L * M_G(v)^T == M_G(v)^T * D_G(a)^T

    exactly.  A raw eigenvector only satisfies this up to a diagonal twist
    by (g(lambda))_g, so the rescale is part of the contract.
    """
    f = a.field
    n = f.N
    alpha = f.primitive_element()
    basis = Basis.canonical(f)
    mult_cols = [basis.coords(alpha * b) for b in basis]
    a_alpha = Matrix(f.base, [[mult_cols[j][i] for j in range(n)] for i in range(n)])
    a_alpha_l = Matrix(f, [[f.embed_base(x) for x in row] for row in a_alpha.rows])
    shifted = a_alpha_l - Matrix.identity(f, n).scale(alpha)
    eig = shifted.kernel()
    if eig.dim != 1:
        raise InvariantViolation(
            f"alpha-eigenspace has dimension {eig.dim}; primitive element invalid")
    v = list(eig.rows[0])
    lead = next(x for x in v if x)
    v = [x / lead for x in v]
    pairing = f.zero
    for vj, bj in zip(v, basis):
        pairing = pairing + vj * bj
    if not pairing:
        raise InvariantViolation("eigenvector pairs to zero with the basis")
    scale = pairing.inverse()
    v = [scale * x for x in v]
    mt = moore_matrix(f, v).transpose()
    endo = endo_matrix(a, basis)
    endo_l = Matrix(f, [[f.embed_base(x) for x in row] for row in endo.rows])
    lhs = endo_l * mt
    rhs = mt * dickson_matrix(a).transpose()
    return lhs == rhs
