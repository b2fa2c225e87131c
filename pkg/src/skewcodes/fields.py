"""Exact arithmetic in Galois extensions with explicit automorphism groups.

Two backends provide a field L together with the group of automorphisms
fixing a base field K:

* finite fields F_{p^N} over F_p, with the Frobenius as generator;
* radical towers L = Q(zeta_e)(a_1^{1/n_1}, ..., a_m^{1/n_m}), viewed either
  over K = Q(zeta_e) ("cyclotomic" base) or over K = Q ("rationals" base).

All elements are immutable and carry exact coefficients: integers modulo p
for the finite backend, integer vectors with a common positive denominator
for the characteristic-zero backends.  Equality is coefficient-wise because
every constructor normalizes.

Tower validity is certified at construction time: the Moore matrix of the
canonical monomial basis must be invertible over L, which pins both the
degree [L:K] = N and the order of the automorphism group.  Towers whose
radicands collide (or are otherwise multiplicatively dependent) fail this
certificate and are rejected.
"""

from __future__ import annotations

import hashlib
import itertools
import math
from fractions import Fraction
from functools import lru_cache, reduce

from .errors import FieldMismatchError, InvariantViolation

# ---------------------------------------------------------------------------
# small integer/polynomial helpers


def _gcd_all(values) -> int:
    g = 0
    for v in values:
        g = math.gcd(g, v)
        if g == 1:
            return 1
    return g


def _lcm(a: int, b: int) -> int:
    return a // math.gcd(a, b) * b


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Divide integer polynomials (coefficient lists, c0 first); den monic."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 0)
    while len(num) >= len(den) and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) < len(den):
            break
        shift = len(num) - len(den)
        c = num[-1]
        q[shift] = c
        for i, d in enumerate(den):
            num[shift + i] -= c * d
    while num and num[-1] == 0:
        num.pop()
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Integer coefficients (constant first) of the e-th cyclotomic polynomial.

    Computed by exact division of x^e - 1 by the lower-order cyclotomic
    polynomials, so no factoring is involved.
    """
    if e < 1:
        raise ValueError("order must be >= 1")
    poly = [-1] + [0] * (e - 1) + [1]
    for d in range(1, e):
        if e % d == 0:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_polynomial(d)))
            if rem:
                raise InvariantViolation("cyclotomic division must be exact")
    return tuple(poly)


def _euler_phi(e: int) -> int:
    return len(cyclotomic_polynomial(e)) - 1


def _zeta_power_table(e: int) -> list[tuple[int, ...]]:
    """zeta_e^s for s = 0..e-1 as integer vectors over 1, zeta, ..., zeta^(phi-1)."""
    cyclo = cyclotomic_polynomial(e)
    phi = len(cyclo) - 1
    cur = [1] + [0] * (phi - 1)
    table = [tuple(cur)]
    for _ in range(1, e):
        nxt = [0] * phi
        for i in range(phi - 1):
            nxt[i + 1] = cur[i]
        top = cur[phi - 1]
        if top:
            for i in range(phi):
                nxt[i] -= top * cyclo[i]
        table.append(tuple(nxt))
        cur = nxt
    # one more shift must wrap to 1 (zeta^e = 1); cheap self-check of cyclo
    nxt = [0] * phi
    for i in range(phi - 1):
        nxt[i + 1] = cur[i]
    top = cur[phi - 1]
    if top:
        for i in range(phi):
            nxt[i] -= top * cyclo[i]
    if nxt != [1] + [0] * (phi - 1):
        raise InvariantViolation("zeta^e != 1 in reduction table")
    return table


def _seeded_rng_int(seed: int, *labels) -> int:
    """Derive a stable sub-seed from a seed and labels (no salted hash())."""
    text = str(seed) + "|" + "|".join(str(x) for x in labels)
    return int.from_bytes(hashlib.sha256(text.encode()).digest()[:8], "big")


# ---------------------------------------------------------------------------
# the rational base field: plain Fractions behind a thin field object


class RationalField:
    """Field object for Q; elements are fractions.Fraction."""

    key = ("QQ",)
    name = "Q"
    is_finite = False
    characteristic = 0
    dim = 1

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    def from_int(self, k: int) -> Fraction:
        return Fraction(k)

    def row_integralize(self, row):
        l = 1
        for x in row:
            l = _lcm(l, x.denominator)
        if l == 1:
            return list(row)
        return [x * l for x in row]

    def random_element(self, rng, height: int = 3) -> Fraction:
        return Fraction(rng.randint(-height, height))

    def format_element(self, x: Fraction) -> str:
        return f"{x.numerator}/{x.denominator}"

    def parse_element(self, s: str) -> Fraction:
        num, _, den = s.partition("/")
        return Fraction(int(num), int(den) if den else 1)

    def element_to_obj(self, x: Fraction):
        return self.format_element(x)

    def element_from_obj(self, obj) -> Fraction:
        if isinstance(obj, str):
            return self.parse_element(obj)
        if isinstance(obj, int):
            return Fraction(obj)
        raise ValueError(f"bad rational payload {obj!r}")


QQ = RationalField()


# ---------------------------------------------------------------------------
# prime fields


class PFElem:
    """Element of a prime field GF(p)."""

    __slots__ = ("field", "v")

    def __init__(self, field, v: int):
        self.field = field
        self.v = v % field.p

    def _check(self, other):
        if not isinstance(other, PFElem) or other.field.p != self.field.p:
            raise FieldMismatchError("prime field mismatch")

    def __add__(self, other):
        self._check(other)
        return PFElem(self.field, self.v + other.v)

    def __sub__(self, other):
        self._check(other)
        return PFElem(self.field, self.v - other.v)

    def __neg__(self):
        return PFElem(self.field, -self.v)

    def __mul__(self, other):
        self._check(other)
        return PFElem(self.field, self.v * other.v)

    def __truediv__(self, other):
        self._check(other)
        if other.v == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return PFElem(self.field, self.v * pow(other.v, self.field.p - 2, self.field.p))

    def __eq__(self, other):
        return isinstance(other, PFElem) and other.field.p == self.field.p and other.v == self.v

    def __bool__(self):
        return self.v != 0

    def __hash__(self):
        return hash(("pf", self.field.p, self.v))

    def __repr__(self):
        return f"{self.v}"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in range(2, int(p**0.5) + 1):
        if p % q == 0:
            return False
    return True


class PrimeField:
    """GF(p) for prime p."""

    is_finite = True
    dim = 1

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.key = ("GF", p)
        self.name = f"GF({p})"
        self.characteristic = p
        self.zero = PFElem(self, 0)
        self.one = PFElem(self, 1)

    def coerce(self, x):
        if isinstance(x, PFElem) and x.field.p == self.p:
            return x
        if isinstance(x, int):
            return PFElem(self, x)
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def from_int(self, k: int) -> PFElem:
        return PFElem(self, k)

    def row_integralize(self, row):
        return list(row)

    def random_element(self, rng, height: int = 0) -> PFElem:
        return PFElem(self, rng.randrange(self.p))

    def format_element(self, x: PFElem) -> str:
        return str(x.v)

    def parse_element(self, s: str) -> PFElem:
        return PFElem(self, int(s))

    def element_to_obj(self, x: PFElem):
        return x.v

    def element_from_obj(self, obj) -> PFElem:
        return PFElem(self, int(obj))


@lru_cache(maxsize=None)
def prime_field(p: int) -> PrimeField:
    return PrimeField(p)


# ---------------------------------------------------------------------------
# characteristic-zero vector elements (cyclotomic fields and radical towers)


class VecElem:
    """Element of a Q-algebra given by an integer vector / denominator pair.

    The owning field supplies a pairwise multiplication table for its basis
    monomials.  Instances are normalized (gcd of all numerators and the
    denominator is 1, denominator positive), so equality is literal.
    """

    __slots__ = ("field", "vec", "den")

    def __init__(self, field, vec: tuple[int, ...], den: int):
        self.field = field
        self.vec = vec
        self.den = den

    def _check(self, other):
        if not isinstance(other, VecElem) or other.field.key != self.field.key:
            raise FieldMismatchError(
                f"cannot combine elements of {getattr(other, 'field', '?')} and {self.field.name}")

    def __add__(self, other):
        self._check(other)
        d1, d2 = self.den, other.den
        if d1 == d2:
            return self.field._elem([a + b for a, b in zip(self.vec, other.vec)], d1)
        l = _lcm(d1, d2)
        m1, m2 = l // d1, l // d2
        return self.field._elem([a * m1 + b * m2 for a, b in zip(self.vec, other.vec)], l)

    def __sub__(self, other):
        self._check(other)
        d1, d2 = self.den, other.den
        if d1 == d2:
            return self.field._elem([a - b for a, b in zip(self.vec, other.vec)], d1)
        l = _lcm(d1, d2)
        m1, m2 = l // d1, l // d2
        return self.field._elem([a * m1 - b * m2 for a, b in zip(self.vec, other.vec)], l)

    def __neg__(self):
        return VecElem(self.field, tuple(-a for a in self.vec), self.den)

    def __mul__(self, other):
        self._check(other)
        table = self.field._pair
        out = [0] * self.field.dim
        for i, a in enumerate(self.vec):
            if not a:
                continue
            ti = table[i]
            for j, b in enumerate(other.vec):
                if not b:
                    continue
                ab = a * b
                for k, c in ti[j]:
                    out[k] += c * ab
        return self.field._elem(out, self.den * other.den)

    def mul_int(self, k: int):
        if k == 0:
            return self.field.zero
        return self.field._elem([a * k for a in self.vec], self.den)

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def inverse(self):
        return self.field._invert(self)

    def __eq__(self, other):
        return (isinstance(other, VecElem) and other.field.key == self.field.key
                and other.vec == self.vec and other.den == self.den)

    def __bool__(self):
        return any(self.vec)

    def __hash__(self):
        return hash((self.field.key, self.vec, self.den))

    def __repr__(self):
        return self.field.format_element(self)


class _VecFieldCore:
    """Shared machinery for fields whose elements are VecElem vectors."""

    def _elem(self, vec, den: int) -> VecElem:
        if den != 1:
            g = math.gcd(_gcd_all(vec), den)
            if g > 1:
                den //= g
                vec = [a // g for a in vec]
            if not any(vec):
                return VecElem(self, tuple(vec), 1)
        return VecElem(self, tuple(vec), den)

    def from_int(self, k: int) -> VecElem:
        vec = [0] * self.dim
        vec[0] = k
        return VecElem(self, tuple(vec), 1)

    def coerce(self, x):
        if isinstance(x, VecElem) and x.field.key == self.key:
            return x
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, Fraction):
            vec = [0] * self.dim
            vec[0] = x.numerator
            return self._elem(vec, x.denominator)
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def _mult_matrix(self, x: VecElem) -> list[list[int]]:
        """Integer matrix of multiplication by x.vec on the monomial basis."""
        table = self._pair
        dim = self.dim
        cols = []
        for j in range(dim):
            col = [0] * dim
            for i, a in enumerate(x.vec):
                if not a:
                    continue
                for k, c in table[i][j]:
                    col[k] += c * a
            cols.append(col)
        return [[cols[j][i] for j in range(dim)] for i in range(dim)]

    def _invert(self, x: VecElem) -> VecElem:
        """Exact inverse by solving the multiplication-matrix system over Q."""
        if not x:
            raise ZeroDivisionError(f"division by zero in {self.name}")
        m = self._mult_matrix(x)
        dim = self.dim
        rows = [[Fraction(m[i][j]) for j in range(dim)] + [Fraction(x.den if i == 0 else 0)]
                for i in range(dim)]
        # plain Gaussian elimination over Q; dim is small
        piv = 0
        pivots = []
        for col in range(dim):
            sel = next((r for r in range(piv, dim) if rows[r][col]), None)
            if sel is None:
                continue
            rows[piv], rows[sel] = rows[sel], rows[piv]
            inv = 1 / rows[piv][col]
            rows[piv] = [v * inv for v in rows[piv]]
            for r in range(dim):
                if r != piv and rows[r][col]:
                    f = rows[r][col]
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[piv])]
            pivots.append(col)
            piv += 1
            if piv == dim:
                break
        if piv < dim:
            raise ZeroDivisionError(
                f"element of {self.name} is a zero divisor (tower is not a field?)")
        sol = [Fraction(0)] * dim
        for r, col in enumerate(pivots):
            sol[col] = rows[r][dim]
        den = reduce(_lcm, (f.denominator for f in sol), 1)
        return self._elem([int(f * den) for f in sol], den)

    def row_integralize(self, row):
        l = 1
        for x in row:
            l = _lcm(l, x.den)
        if l == 1:
            return list(row)
        return [x.mul_int(l // 1) if x.den == 1 else
                VecElem(self, tuple(a * (l // x.den) for a in x.vec), 1) for x in row]

    def random_element(self, rng, height: int = 3) -> VecElem:
        return self._elem([rng.randint(-height, height) for _ in range(self.dim)], 1)


class CyclotomicField(_VecFieldCore):
    """Q(zeta_e): rational vectors modulo the e-th cyclotomic polynomial."""

    is_finite = False
    characteristic = 0

    def __init__(self, e: int):
        self.e = e
        self.key = ("cyc", e)
        self.name = f"Q(zeta_{e})"
        self.cyclo = cyclotomic_polynomial(e)
        self.dim = len(self.cyclo) - 1
        self._zpow = _zeta_power_table(e)
        phi = self.dim
        self._pair = [
            [tuple((k, c) for k, c in enumerate(self._zpow[(t1 + t2) % e]) if c)
             for t2 in range(phi)]
            for t1 in range(phi)
        ]
        self.zero = self.from_int(0)
        self.one = self.from_int(1)
        self.zeta = self._elem(list(self._zpow[1 % e]), 1)

    def format_element(self, x: VecElem) -> str:
        return "[" + ", ".join(f"{n}/{x.den}" for n in x.vec) + "]"

    def element_to_obj(self, x: VecElem):
        return [f"{n}/{x.den}" for n in x.vec]

    def element_from_obj(self, obj) -> VecElem:
        if not isinstance(obj, list) or len(obj) != self.dim:
            raise ValueError(f"bad cyclotomic payload for {self.name}: {obj!r}")
        fracs = [QQ.parse_element(s) if isinstance(s, str) else Fraction(s) for s in obj]
        den = reduce(_lcm, (f.denominator for f in fracs), 1)
        return self._elem([int(f * den) for f in fracs], den)

    def parse_element(self, s: str):
        import json

        return self.element_from_obj(json.loads(s))


@lru_cache(maxsize=None)
def cyclotomic_field(e: int) -> CyclotomicField:
    return CyclotomicField(e)


# ---------------------------------------------------------------------------
# automorphisms and Galois groups


class Automorphism:
    """A field automorphism fixing the base field, given by backend parameters.

    Tower backend: params = (s, k_1, ..., k_m) acting by zeta -> zeta^s and
    alpha_i -> zeta^(k_i * e / n_i) * alpha_i.  Finite backend: params = (j,)
    for the j-th power of the Frobenius.
    """

    __slots__ = ("field", "params", "_table")

    def __init__(self, field, params):
        self.field = field
        self.params = params
        self._table = None

    def __call__(self, x):
        if self._table is None:
            self._table = self.field._aut_table(self.params)
        return self.field._aut_apply(self._table, x)

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self after other: (self.compose(other))(x) = self(other(x))."""
        if other.field is not self.field:
            raise FieldMismatchError("automorphisms of different fields")
        return self.field.group().by_params(
            self.field._compose_params(self.params, other.params))

    def __mul__(self, other):
        return self.compose(other)

    def inverse(self) -> "Automorphism":
        return self.field.group().by_params(self.field._inverse_params(self.params))

    @property
    def is_identity(self) -> bool:
        return self.params == self.field._identity_params()

    def __eq__(self, other):
        return (isinstance(other, Automorphism) and other.field.key == self.field.key
                and other.params == self.params)

    def __hash__(self):
        return hash((self.field.key, self.params))

    def __repr__(self):
        return f"Aut{self.params}"


class GaloisGroup:
    """The ordered automorphism group: identity first, then parameter order.

    Carries composition and inverse tables; construction checks closure,
    inverses, identity position and (exhaustively, for order <= 24)
    associativity of the table.
    """

    def __init__(self, field, autos: list[Automorphism]):
        self.field = field
        self.autos = tuple(autos)
        self.order = len(autos)
        self.index = {a.params: i for i, a in enumerate(autos)}
        if autos[0].params != field._identity_params():
            raise InvariantViolation("identity automorphism must come first")
        comp = []
        for gi in autos:
            row = []
            for gj in autos:
                p = field._compose_params(gi.params, gj.params)
                if p not in self.index:
                    raise InvariantViolation("group not closed under composition")
                row.append(self.index[p])
            comp.append(tuple(row))
        self.comp = tuple(comp)
        inv = []
        for gi in autos:
            p = field._inverse_params(gi.params)
            if p not in self.index:
                raise InvariantViolation("group not closed under inverse")
            inv.append(self.index[p])
        self.inv = tuple(inv)
        if self.order <= 24:
            rng_idx = range(self.order)
            for i in rng_idx:
                for j in rng_idx:
                    ij = self.comp[i][j]
                    for k in rng_idx:
                        if self.comp[ij][k] != self.comp[i][self.comp[j][k]]:
                            raise InvariantViolation("composition table not associative")
        self._abelian = all(
            self.comp[i][j] == self.comp[j][i]
            for i in range(self.order) for j in range(i + 1, self.order))

    @property
    def identity(self) -> Automorphism:
        return self.autos[0]

    @property
    def is_abelian(self) -> bool:
        return self._abelian

    def by_params(self, params) -> Automorphism:
        return self.autos[self.index[params]]

    def compose_idx(self, i: int, j: int) -> int:
        return self.comp[i][j]

    def inverse_idx(self, i: int) -> int:
        return self.inv[i]

    def __iter__(self):
        return iter(self.autos)

    def __len__(self):
        return self.order

    def __getitem__(self, i):
        return self.autos[i]


# ---------------------------------------------------------------------------
# shared behaviour of the two extension backends


class ExtensionField:
    """Common interface of F_{p^N}/F_p and tower L/K backends.

    Subclasses must provide: base, N, canonical basis handling, automorphism
    parameter arithmetic and apply tables, serialization and a descriptor.
    """

    def group(self) -> GaloisGroup:
        if self._group is None:
            self._group = GaloisGroup(self, [Automorphism(self, p) for p in self._all_params()])
        return self._group

    # -- trace and trace pairing ------------------------------------------

    def trace(self, x):
        """Sum of all Galois conjugates; lands in the base field."""
        acc = self.zero
        for g in self.group():
            acc = acc + g(x)
        return acc

    def trace_to_base(self, x):
        """Trace as an element of K; raises if the result is impure (a bug)."""
        t = self.trace(x)
        coords = self.coords_over_base(t)
        for c in coords[1:]:
            if c:
                raise InvariantViolation("trace left the base field")
        return coords[0]

    def trace_gram(self):
        """Gram matrix over K of the trace pairing on the canonical basis."""
        if self._gram is None:
            from .linalg import Matrix

            bas = self.canonical_basis_elements
            rows = [[self.trace_to_base(bi * bj) for bj in bas] for bi in bas]
            self._gram = Matrix(self.base, rows)
        return self._gram

    # -- subspaces of L over K --------------------------------------------

    def subspace_from_elements(self, elems):
        from .linalg import KSubspace

        return KSubspace.from_vectors(
            self.base, self.N, [self.coords_over_base(x) for x in elems])

    def elements_of_subspace(self, space):
        return [self.from_base_coords(row) for row in space.rows]

    def orth_complement_trace(self, space):
        """{y : Tr(x*y) = 0 for all x in the subspace}, via the Gram matrix."""
        from .linalg import KSubspace, Matrix

        gram = self.trace_gram()
        if space.dim == 0:
            return KSubspace.from_vectors(
                self.base, self.N,
                Matrix.identity(self.base, self.N).rows)
        m = Matrix(self.base, space.rows) * gram
        return m.kernel()

    # -- distinguished elements -------------------------------------------

    def normal_element(self, budget: int = 4096):
        """An element whose Galois orbit is a K-basis of L.

        Deterministic search over 0/1 coefficient vectors on the canonical
        basis: singles, then prefix sums, then all 0/1 vectors by weight.
        """
        if self._normal is not None:
            return self._normal
        from .linalg import Matrix

        bas = self.canonical_basis_elements
        n = self.N

        def candidates():
            for b in bas:
                yield b
            acc = self.zero
            for b in bas:
                acc = acc + b
                yield acc
            for w in range(2, n + 1):
                for picks in itertools.combinations(range(n), w):
                    x = self.zero
                    for i in picks:
                        x = x + bas[i]
                    yield x

        tried = 0
        for x in candidates():
            tried += 1
            if tried > budget:
                break
            orbit = [g(x) for g in self.group()]
            if Matrix(self, moore_rows(self, orbit)).det():
                self._normal = x
                return x
        raise RuntimeError("normal element search budget exhausted")

    def primitive_element(self, height: int = 3):
        """An element whose powers 1, a, ..., a^(N-1) form a K-basis.

        Deterministic: integer combinations of the field generators ordered
        by maximum coefficient, then lexicographically.
        """
        if self._primitive is not None:
            return self._primitive
        from .linalg import Matrix

        gens = self.generators()
        n = self.N
        seen = set()
        for h in range(1, height + 1):
            for coeffs in itertools.product(range(h + 1), repeat=len(gens)):
                if max(coeffs, default=0) != h:
                    continue
                if coeffs in seen:
                    continue
                seen.add(coeffs)
                x = self.zero
                for c, g in zip(coeffs, gens):
                    if c:
                        xc = g
                        for _ in range(c - 1):
                            xc = xc + g
                        x = x + xc
                pows = []
                p = self.one
                for _ in range(n):
                    pows.append(p)
                    p = p * x
                rows = [self.coords_over_base(v) for v in pows]
                if Matrix(self.base, rows).rank() == n:
                    self._primitive = x
                    return x
        raise RuntimeError("primitive element search budget exhausted")

    # -- hashes / misc ------------------------------------------------------

    def descriptor_hash(self) -> str:
        text = self.to_descriptor()
        return hashlib.sha256(text.encode()).hexdigest()[:16]

    def __repr__(self):
        return self.name


def moore_rows(field: ExtensionField, vec) -> list[list]:
    """Rows [g_i(v_j)]_j for g_i running over the group in canonical order."""
    return [[g(v) for v in vec] for g in field.group()]


# ---------------------------------------------------------------------------
# finite extension backend


class FFElem:
    """Element of F_{p^N}: coefficient tuple over F_p in the power basis."""

    __slots__ = ("field", "vec")

    def __init__(self, field, vec: tuple[int, ...]):
        self.field = field
        self.vec = vec

    def _check(self, other):
        if not isinstance(other, FFElem) or other.field.key != self.field.key:
            raise FieldMismatchError("finite field mismatch")

    def __add__(self, other):
        self._check(other)
        p = self.field.p
        return FFElem(self.field, tuple((a + b) % p for a, b in zip(self.vec, other.vec)))

    def __sub__(self, other):
        self._check(other)
        p = self.field.p
        return FFElem(self.field, tuple((a - b) % p for a, b in zip(self.vec, other.vec)))

    def __neg__(self):
        p = self.field.p
        return FFElem(self.field, tuple((-a) % p for a in self.vec))

    def __mul__(self, other):
        self._check(other)
        f = self.field
        out = [0] * f.N
        table = f._pair
        for i, a in enumerate(self.vec):
            if not a:
                continue
            ti = table[i]
            for j, b in enumerate(other.vec):
                if not b:
                    continue
                ab = a * b
                for k, c in ti[j]:
                    out[k] += c * ab
        p = f.p
        return FFElem(f, tuple(v % p for v in out))

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def inverse(self):
        return self.field._invert(self)

    def __pow__(self, k: int):
        r = self.field.one
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def __eq__(self, other):
        return isinstance(other, FFElem) and other.field.key == self.field.key and other.vec == self.vec

    def __bool__(self):
        return any(self.vec)

    def __hash__(self):
        return hash((self.field.key, self.vec))

    def __repr__(self):
        return self.field.format_element(self)


class FiniteExtField(ExtensionField):
    """F_{p^N} over F_p given by a monic irreducible defining polynomial."""

    is_finite = True

    def __init__(self, p: int, poly):
        poly = tuple(int(c) % p for c in poly)
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if len(poly) < 2 or poly[-1] == 0:
            raise ValueError("defining polynomial must have nonzero leading coefficient")
        if poly[-1] != 1:
            inv = pow(poly[-1], p - 2, p)
            poly = tuple(c * inv % p for c in poly)
        self.p = p
        self.poly = poly
        self.N = len(poly) - 1
        self.key = ("ff", p, poly)
        self.name = f"GF({p}^{self.N})"
        self.characteristic = p
        self.base = prime_field(p)
        if not self._is_irreducible():
            raise ValueError("defining polynomial is reducible")
        # reduction table x^k for k = 0..2N-2
        red = [[0] * self.N for _ in range(2 * self.N - 1)]
        for k in range(self.N):
            red[k][k] = 1
        for k in range(self.N, 2 * self.N - 1):
            prev = red[k - 1]
            cur = [0] * self.N
            for i in range(self.N - 1):
                cur[i + 1] = prev[i]
            top = prev[self.N - 1]
            if top:
                for i in range(self.N):
                    cur[i] = (cur[i] - top * poly[i]) % p
            red[k] = [c % p for c in cur]
        self._pair = [
            [tuple((k, c) for k, c in enumerate(red[i + j]) if c) for j in range(self.N)]
            for i in range(self.N)
        ]
        self.zero = FFElem(self, (0,) * self.N)
        self.one = FFElem(self, (1,) + (0,) * (self.N - 1))
        self.gen = FFElem(self, tuple(1 if i == 1 else 0 for i in range(self.N))) \
            if self.N > 1 else self.one
        self._group = None
        self._gram = None
        self._normal = None
        self._primitive = None
        self.canonical_basis_elements = [
            FFElem(self, tuple(1 if i == k else 0 for i in range(self.N)))
            for k in range(self.N)
        ]

    def _is_irreducible(self) -> bool:
        # x^(p^N) = x mod f, and x^(p^(N/q)) != x for prime divisors q of N
        p, n = self.p, self.N

        def polymulmod(a, b):
            out = [0] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        out[i + j] = (out[i + j] + ai * bj) % p
            _, r = _poly_divmod_int(out, list(self.poly))
            return [c % p for c in r] or [0]

        def xpow(exp):
            result = [1]
            base = [0, 1]
            while exp:
                if exp & 1:
                    result = polymulmod(result, base)
                base = polymulmod(base, base)
                exp >>= 1
            return result

        def polygcd(a, b):
            a = [c % p for c in a]
            b = [c % p for c in b]
            while any(b):
                while b and b[-1] % p == 0:
                    b.pop()
                if not b:
                    break
                lead_inv = pow(b[-1], p - 2, p)
                bm = [c * lead_inv % p for c in b]
                _, r = _poly_divmod_int([c % p for c in a], bm)
                a, b = b, [c % p for c in r]
            while a and a[-1] == 0:
                a.pop()
            return a

        frob_n = xpow(p**n)
        minus_x = list(frob_n)
        while len(minus_x) < 2:
            minus_x.append(0)
        minus_x[1] = (minus_x[1] - 1) % p
        while minus_x and minus_x[-1] == 0:
            minus_x.pop()
        if minus_x:
            return False
        for q in {d for d in range(2, n + 1) if n % d == 0 and _is_prime(d)}:
            w = xpow(p**(n // q))
            w = list(w)
            while len(w) < 2:
                w.append(0)
            w[1] = (w[1] - 1) % p
            g = polygcd(w, list(self.poly))
            if len(g) != 1:
                return False
        return True

    # automorphism parameter arithmetic (Frobenius powers)

    def _identity_params(self):
        return (0,)

    def _all_params(self):
        return [(j,) for j in range(self.N)]

    def _compose_params(self, p1, p2):
        return ((p1[0] + p2[0]) % self.N,)

    def _inverse_params(self, p1):
        return ((-p1[0]) % self.N,)

    def _aut_table(self, params):
        j = params[0]
        cols = []
        for k in range(self.N):
            img = self.canonical_basis_elements[k] ** (self.p**j)
            cols.append(img.vec)
        return cols

    def _aut_apply(self, table, x: FFElem) -> FFElem:
        out = [0] * self.N
        for k, a in enumerate(x.vec):
            if not a:
                continue
            col = table[k]
            for i in range(self.N):
                if col[i]:
                    out[i] += col[i] * a
        p = self.p
        return FFElem(self, tuple(v % p for v in out))

    def _invert(self, x: FFElem) -> FFElem:
        if not x:
            raise ZeroDivisionError(f"division by zero in {self.name}")
        # solve the multiplication-matrix system over GF(p)
        n, p = self.N, self.p
        cols = [ (x * b).vec for b in self.canonical_basis_elements ]
        rows = [[cols[j][i] for j in range(n)] + [1 if i == 0 else 0] for i in range(n)]
        piv = 0
        pivots = []
        for col in range(n):
            sel = next((r for r in range(piv, n) if rows[r][col] % p), None)
            if sel is None:
                continue
            rows[piv], rows[sel] = rows[sel], rows[piv]
            inv = pow(rows[piv][col], p - 2, p)
            rows[piv] = [v * inv % p for v in rows[piv]]
            for r in range(n):
                if r != piv and rows[r][col] % p:
                    f = rows[r][col]
                    rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[piv])]
            pivots.append(col)
            piv += 1
        if piv < n:
            raise ZeroDivisionError("singular multiplication matrix")
        sol = [0] * n
        for r, col in enumerate(pivots):
            sol[col] = rows[r][n]
        return FFElem(self, tuple(sol))

    # base-field coordinates

    def coords_over_base(self, x: FFElem):
        return [PFElem(self.base, c) for c in x.vec]

    def from_base_coords(self, coords) -> FFElem:
        return FFElem(self, tuple(c.v % self.p for c in coords))

    def embed_base(self, c: PFElem) -> FFElem:
        return FFElem(self, (c.v,) + (0,) * (self.N - 1))

    def generators(self):
        return [self.gen]

    def frobenius(self) -> Automorphism:
        return self.group().by_params((1,))

    def row_integralize(self, row):
        return list(row)

    def coerce(self, x):
        if isinstance(x, FFElem) and x.field.key == self.key:
            return x
        if isinstance(x, int):
            return FFElem(self, (x % self.p,) + (0,) * (self.N - 1))
        if isinstance(x, PFElem) and x.field.p == self.p:
            return self.embed_base(x)
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def from_int(self, k: int):
        return self.coerce(k)

    def random_element(self, rng, height: int = 0) -> FFElem:
        return FFElem(self, tuple(rng.randrange(self.p) for _ in range(self.N)))

    def all_elements(self):
        for vec in itertools.product(range(self.p), repeat=self.N):
            yield FFElem(self, vec)

    def format_element(self, x: FFElem) -> str:
        return "[" + ",".join(str(c) for c in x.vec) + "]"

    def element_to_obj(self, x: FFElem):
        return list(x.vec)

    def element_from_obj(self, obj) -> FFElem:
        if not isinstance(obj, list) or len(obj) != self.N:
            raise ValueError(f"bad element payload for {self.name}: {obj!r}")
        return FFElem(self, tuple(int(c) % self.p for c in obj))

    def to_descriptor(self) -> str:
        lines = [
            "format: skewcodes-field v1",
            "backend: finite",
            f"p: {self.p}",
            f"degree: {self.N}",
            "poly: " + " ".join(str(c) for c in self.poly),
        ]
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def finite_field(p: int, poly: tuple) -> FiniteExtField:
    return FiniteExtField(p, poly)


# ---------------------------------------------------------------------------
# radical tower backend


class TowerField(_VecFieldCore, ExtensionField):
    """L = Q(zeta_e)(a_1^(1/n_1), ..., a_m^(1/n_m)) with n_i | e.

    Internally L is a Q-algebra with basis zeta^t * alpha^j (t < phi(e),
    j componentwise below n), indexed with the radical multi-index slow and
    the zeta exponent fast, so the canonical K-basis for K = Q(zeta_e) is the
    sequence of alpha-monomials in colex order, and for K = Q it is
    (1, zeta, ..., alpha_1, zeta*alpha_1, ...) matching the monomial blocks.
    """

    is_finite = False
    characteristic = 0

    def __init__(self, e: int, radicals, base: str = "cyclotomic"):
        if e < 1:
            raise ValueError("root-of-unity order must be >= 1")
        if base not in ("cyclotomic", "rationals"):
            raise ValueError("base must be 'cyclotomic' or 'rationals'")
        radicals = tuple((int(n), int(a)) for n, a in radicals)
        for n, a in radicals:
            if n < 1 or e % n != 0:
                raise ValueError(f"radical index {n} must divide e={e}")
            if a == 0:
                raise ValueError("radicand must be nonzero")
        self.e = e
        self.radicals = radicals
        self.base_kind = base
        self.key = ("tower", e, radicals, base)
        self.ns = tuple(n for n, _ in radicals)
        self.rads = tuple(a for _, a in radicals)
        self.m = len(radicals)
        self.phi = _euler_phi(e)
        self._zpow = _zeta_power_table(e)
        rad_part = " , ".join(f"{a}^(1/{n})" for n, a in radicals)
        self.name = f"Q(zeta_{e})({rad_part})" + ("/Q" if base == "rationals" else "")

        self.js = sorted(itertools.product(*[range(n) for n in self.ns]),
                         key=lambda t: t[::-1])
        self.j_rank = {j: r for r, j in enumerate(self.js)}
        self.nj = len(self.js)
        self.dim = self.phi * self.nj

        # pairwise multiplication table on the Q-basis
        pair = []
        for idx1 in range(self.dim):
            r1, t1 = divmod(idx1, self.phi)
            j1 = self.js[r1]
            row = []
            for idx2 in range(self.dim):
                r2, t2 = divmod(idx2, self.phi)
                j2 = self.js[r2]
                scal = 1
                jj = []
                for axis in range(self.m):
                    s = j1[axis] + j2[axis]
                    if s >= self.ns[axis]:
                        s -= self.ns[axis]
                        scal *= self.rads[axis]
                    jj.append(s)
                rr = self.j_rank[tuple(jj)]
                z = self._zpow[(t1 + t2) % e]
                row.append(tuple((rr * self.phi + t, c * scal) for t, c in enumerate(z) if c))
            pair.append(row)
        self._pair = pair

        self.zero = self.from_int(0)
        self.one = self.from_int(1)
        self.base = cyclotomic_field(e) if base == "cyclotomic" else QQ
        self.N = self.nj if base == "cyclotomic" else self.dim

        self._group = None
        self._gram = None
        self._normal = None
        self._primitive = None
        self._fixed_bases = {}

        if base == "cyclotomic":
            self.canonical_basis_elements = [self._monomial(r, 0) for r in range(self.nj)]
        else:
            self.canonical_basis_elements = [
                self._monomial(r, t) for r in range(self.nj) for t in range(self.phi)
            ]

        # Degree certificate: the Moore matrix of the canonical basis must be
        # invertible over L (checked as det being a unit; a zero-divisor pivot
        # during elimination also rejects).  This pins |G| = N = [L:K] but a
        # non-field quotient can still slip through it, so a deterministic
        # zero-divisor screen over small monomial combinations runs as well.
        # Pairwise distinct primes as radicands remain the safe input.
        if len(set(radicals)) != len(radicals):
            raise ValueError(f"tower {self.name} repeats a radical; not a field")
        from .linalg import Matrix

        try:
            d = Matrix(self, moore_rows(self, self.canonical_basis_elements)).det()
            if d:
                d.inverse()
            else:
                raise ZeroDivisionError
        except ZeroDivisionError:
            raise ValueError(
                f"tower {self.name} failed the Moore-matrix invertibility "
                "certificate; the radicals do not generate a degree-N field "
                "(pairwise distinct primes as radicands are the safe input)") from None
        bad = self._zero_divisor_screen()
        if bad is not None:
            raise ValueError(
                f"tower {self.name} contains the zero divisor {bad!r}; "
                "the radicals do not generate a field "
                "(pairwise distinct primes as radicands are the safe input)")

    def _zero_divisor_screen(self):
        """Search small +/- combinations of basis monomials for zero divisors.

        Sound but deliberately incomplete: it never rejects a true field, and
        it catches the documented failure modes (colliding or multiplicatively
        dependent radicands) without attempting a full Kummer-independence
        test.
        """
        mons = [self._monomial(r, t) for r in range(self.nj) for t in range(self.phi)]
        coeffs = [(a, b) for a in (1, 2, 3) for b in (1, 2, 3) if math.gcd(a, b) == 1]
        for i in range(len(mons)):
            for j in range(i + 1, len(mons)):
                for a, b in coeffs:
                    mi = mons[i].mul_int(a)
                    mj = mons[j].mul_int(b)
                    for cand in (mi - mj, mi + mj):
                        if cand and self._mult_rank_deficient(cand):
                            return cand
        return None

    def _mult_rank_deficient(self, x: VecElem) -> bool:
        """True iff multiplication by x is singular (x is 0 or a zero divisor)."""
        m = self._mult_matrix(x)
        n = self.dim
        rows = [list(r) for r in m]
        rank = 0
        prev = None
        for col in range(n):
            sel = next((r for r in range(rank, n) if rows[r][col]), None)
            if sel is None:
                return True
            rows[rank], rows[sel] = rows[sel], rows[rank]
            piv = rows[rank][col]
            for r in range(rank + 1, n):
                rc = rows[r][col]
                row_r = rows[r]
                row_p = rows[rank]
                if rc:
                    for c in range(col + 1, n):
                        v = piv * row_r[c] - rc * row_p[c]
                        if prev is not None:
                            v //= prev
                        row_r[c] = v
                elif prev is not None:
                    for c in range(col + 1, n):
                        if row_r[c]:
                            row_r[c] = piv * row_r[c] // prev
                else:
                    for c in range(col + 1, n):
                        if row_r[c]:
                            row_r[c] = piv * row_r[c]
                row_r[col] = 0
            prev = piv
            rank += 1
        return False

    def _monomial(self, j_rank: int, t: int) -> VecElem:
        vec = [0] * self.dim
        vec[j_rank * self.phi + t] = 1
        return VecElem(self, tuple(vec), 1)

    @property
    def zeta(self) -> VecElem:
        return self._monomial(0, 1 % self.phi) if self.phi > 1 else self.one

    def radical_generator(self, i: int) -> VecElem:
        """The element a_i^(1/n_i) (the i-th adjoined radical), 0-based."""
        j = tuple(1 if k == i else 0 for k in range(self.m))
        if self.ns[i] == 1:
            return self.from_int(self.rads[i])
        return self._monomial(self.j_rank[j], 0)

    def generators(self):
        gens = []
        if self.base_kind == "rationals" and self.phi > 1:
            gens.append(self.zeta)
        gens.extend(self.radical_generator(i) for i in range(self.m) if self.ns[i] > 1)
        return gens or [self.one]

    # automorphism parameters: (s, k_1, ..., k_m)

    def _units(self):
        if self.base_kind == "cyclotomic" or self.e == 1:
            return [1]
        return [s for s in range(1, self.e) if math.gcd(s, self.e) == 1]

    def _identity_params(self):
        return (1,) + (0,) * self.m

    def _all_params(self):
        params = [(s,) + k for s in self._units()
                  for k in itertools.product(*[range(n) for n in self.ns])]
        return sorted(params)

    def _compose_params(self, p1, p2):
        s1, k1 = p1[0], p1[1:]
        s2, k2 = p2[0], p2[1:]
        s = (s1 * s2) % self.e if self.e > 1 else 1
        k = tuple((a + s1 * b) % n for a, b, n in zip(k1, k2, self.ns))
        return (s,) + k

    def _inverse_params(self, p1):
        s1, k1 = p1[0], p1[1:]
        if self.e > 1:
            sinv = pow(s1, -1, self.e)
        else:
            sinv = 1
        k = tuple((-sinv * a) % n for a, n in zip(k1, self.ns))
        return (sinv,) + k

    def _aut_table(self, params):
        s, k = params[0], params[1:]
        table = []
        for idx in range(self.dim):
            r, t = divmod(idx, self.phi)
            j = self.js[r]
            u = (t * s + sum(k[i] * j[i] * (self.e // self.ns[i]) for i in range(self.m))) % self.e
            z = self._zpow[u]
            table.append(tuple((r * self.phi + tt, c) for tt, c in enumerate(z) if c))
        return table

    def _aut_apply(self, table, x: VecElem) -> VecElem:
        out = [0] * self.dim
        for idx, a in enumerate(x.vec):
            if not a:
                continue
            for kk, c in table[idx]:
                out[kk] += c * a
        return self._elem(out, x.den)

    def theta_generators(self):
        """The radical automorphisms theta_i (k_i = 1, others 0, s = 1)."""
        g = self.group()
        out = []
        for i in range(self.m):
            params = (1,) + tuple(1 if t == i else 0 for t in range(self.m))
            out.append(g.by_params(params))
        return out

    # base-field coordinates

    def coords_over_base(self, x: VecElem):
        if self.base_kind == "cyclotomic":
            K = self.base
            out = []
            for r in range(self.nj):
                sub = x.vec[r * self.phi:(r + 1) * self.phi]
                out.append(K._elem(list(sub), x.den))
            return out
        return [Fraction(c, x.den) for c in x.vec]

    def from_base_coords(self, coords) -> VecElem:
        if self.base_kind == "cyclotomic":
            den = reduce(_lcm, (c.den for c in coords), 1)
            vec = []
            for c in coords:
                mult = den // c.den
                vec.extend(v * mult for v in c.vec)
            return self._elem(vec, den)
        den = reduce(_lcm, (c.denominator for c in coords), 1)
        return self._elem([int(c * den) for c in coords], den)

    def embed_base(self, c) -> VecElem:
        if self.base_kind == "cyclotomic":
            vec = [0] * self.dim
            for t, v in enumerate(c.vec):
                vec[t] = v
            return self._elem(vec, c.den)
        vec = [0] * self.dim
        vec[0] = c.numerator
        return self._elem(vec, c.denominator)

    def fixed_field_basis(self, i: int):
        """K-basis of the subfield fixed by every theta_j with j != i (0-based i)."""
        if not self.group().is_abelian:
            raise ValueError("fixed-field bases require an abelian group")
        if not 0 <= i < self.m:
            raise ValueError(f"generator index {i} out of range")
        if i in self._fixed_bases:
            return self._fixed_bases[i]
        from .linalg import Matrix

        thetas = self.theta_generators()
        K = self.base
        stacked = []
        for jdx, th in enumerate(thetas):
            if jdx == i:
                continue
            cols = [self.coords_over_base(th(b)) for b in self.canonical_basis_elements]
            for r in range(self.N):
                row = []
                for c in range(self.N):
                    v = cols[c][r]
                    if c == r:
                        v = v - (K.one if not isinstance(v, Fraction) else Fraction(1))
                    row.append(v)
                stacked.append(row)
        if not stacked:
            basis = self.canonical_basis_elements
        else:
            ker = Matrix(K, stacked).kernel()
            basis = self.elements_of_subspace(ker)
        self._fixed_bases[i] = basis
        return basis

    def _invert(self, x: VecElem) -> VecElem:
        """Inverse by solving the multiplication-matrix system over K.

        Solving over K (not Q) keeps the system N x N, which matters for
        cyclotomic-base towers where dim_Q = phi(e) * N.
        """
        if not x:
            raise ZeroDivisionError(f"division by zero in {self.name}")
        from .linalg import Matrix

        cols = [self.coords_over_base(x * b) for b in self.canonical_basis_elements]
        n = self.N
        mat = Matrix(self.base, [[cols[j][i] for j in range(n)] for i in range(n)])
        K = self.base
        one = K.one if self.base_kind == "cyclotomic" else Fraction(1)
        zero = K.zero if self.base_kind == "cyclotomic" else Fraction(0)
        rhs = [one] + [zero] * (n - 1)
        sol = mat.solve_unique(rhs)
        if sol is None:
            raise ZeroDivisionError(
                f"element of {self.name} is a zero divisor (tower is not a field?)")
        return self.from_base_coords(sol)

    def format_element(self, x: VecElem) -> str:
        import json

        return json.dumps(self.element_to_obj(x))

    def element_to_obj(self, x: VecElem):
        if self.base_kind == "cyclotomic":
            return [self.base.element_to_obj(c) for c in self.coords_over_base(x)]
        return [QQ.element_to_obj(c) for c in self.coords_over_base(x)]

    def element_from_obj(self, obj) -> VecElem:
        if not isinstance(obj, list) or len(obj) != self.N:
            raise ValueError(f"bad element payload for {self.name}: {obj!r}")
        if self.base_kind == "cyclotomic":
            return self.from_base_coords([self.base.element_from_obj(o) for o in obj])
        return self.from_base_coords([QQ.element_from_obj(o) for o in obj])

    def parse_element(self, s: str) -> VecElem:
        import json

        return self.element_from_obj(json.loads(s))

    def to_descriptor(self) -> str:
        lines = [
            "format: skewcodes-field v1",
            "backend: tower",
            f"e: {self.e}",
            "radicals: " + " ".join(f"{n}:{a}" for n, a in self.radicals),
            f"base: {self.base_kind}",
        ]
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def tower_field(e: int, radicals: tuple, base: str = "cyclotomic") -> TowerField:
    return TowerField(e, radicals, base)


# ---------------------------------------------------------------------------
# ordered bases of L over K


class Basis:
    """An ordered K-basis of L, validated by its Moore determinant."""

    def __init__(self, field: ExtensionField, elements, is_canonical: bool = False,
                 _skip_check: bool = False):
        from .linalg import Matrix

        self.field = field
        self.elements = tuple(elements)
        self.is_canonical = is_canonical
        if len(self.elements) != field.N:
            raise ValueError("basis must have N elements")
        if not _skip_check and not is_canonical:
            if not Matrix(field, moore_rows(field, self.elements)).det():
                raise ValueError("not a basis: Moore determinant vanishes")
        self._dual = None
        self._coords_inv = None

    @classmethod
    def canonical(cls, field: ExtensionField) -> "Basis":
        return cls(field, field.canonical_basis_elements, is_canonical=True)

    def coords(self, x):
        """Coordinates of x over this basis, as base-field elements."""
        if self.is_canonical:
            return list(self.field.coords_over_base(x))
        if self._coords_inv is None:
            from .linalg import Matrix

            cols = [self.field.coords_over_base(b) for b in self.elements]
            mat = Matrix(self.field.base,
                         [[cols[j][i] for j in range(self.field.N)]
                          for i in range(self.field.N)])
            self._coords_inv = mat.inverse()
        canon = self.field.coords_over_base(x)
        return list(self._coords_inv.apply(canon))

    def dual(self) -> "Basis":
        """The trace-dual basis: Tr(b_i * b*_j) = delta_ij, exactly."""
        if self._dual is not None:
            return self._dual
        from .linalg import Matrix

        f = self.field
        gram = Matrix(f.base, [[f.trace_to_base(bi * bj) for bj in self.elements]
                               for bi in self.elements])
        try:
            ginv = gram.inverse()
        except ZeroDivisionError as exc:
            raise ValueError("trace Gram matrix singular: corrupted basis") from exc
        dual_elems = []
        for j in range(f.N):
            acc = f.zero
            for i in range(f.N):
                c = ginv.rows[i][j]
                if c:
                    acc = acc + f.embed_base(c) * self.elements[i]
            dual_elems.append(acc)
        self._dual = Basis(f, dual_elems, _skip_check=True)
        return self._dual

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __eq__(self, other):
        return (isinstance(other, Basis) and other.field.key == self.field.key
                and other.elements == self.elements)

    def __repr__(self):
        return f"Basis({list(self.elements)!r})"


def dual_basis(basis: Basis) -> Basis:
    return basis.dual()


# convenient ready-made fields used across tests and demos

def gf(p: int, n: int) -> FiniteExtField:
    """A default F_{p^n} with a fixed small irreducible polynomial."""
    known = {
        (2, 1): (0, 1),
        (2, 2): (1, 1, 1),
        (2, 3): (1, 1, 0, 1),
        (2, 4): (1, 1, 0, 0, 1),
        (3, 2): (1, 0, 1),
        (3, 3): (1, 2, 0, 1),
        (5, 2): (2, 0, 1),
        (7, 2): (3, 0, 1),
    }
    if (p, n) not in known:
        raise ValueError(f"no default polynomial stored for GF({p}^{n})")
    return finite_field(p, known[(p, n)])
