"""Polynomials in commuting automorphism generators, and the rank-metric
Reed-Muller codes they span.

For an abelian automorphism group generated by theta_1, ..., theta_m of
orders n_1, ..., n_m, every group-algebra element is a polynomial in the
theta_i with exponents below n_i.  This module provides the degree filtration
and its codes: dimension and minimum-distance formulas (each cross-checked
against brute-force counterparts), the covering-style lower bound on ranks
and its kernel-dimension corollary, annihilator polynomials of subspaces of
the cyclic sub-extensions, constructive minimum-weight codewords, duality in
closed form, and the factorization of the generator matrix through the
classical Reed-Muller matrix on a root-of-unity grid.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import InvariantViolation
from .fields import Basis, FiniteExtField, TowerField, _seeded_rng_int, cyclotomic_field
from .group_algebra import (GroupAlgebraElement, dickson_matrix, endo_matrix,
                            identity_element, kernel_subspace, monomial, rank_of,
                            zero_element)
from .codes import Code
from .linalg import KSubspace, Matrix
from .orders import order_key


class ThetaStructure:
    """Commuting generators theta_1..theta_m with G = prod <theta_i>.

    Derivable for: finite fields (m = 1, Frobenius), towers over a cyclotomic
    base (the radical automorphisms), and towers over Q with phi(e) = 1.
    Exponent tuples live in prod {0..n_i-1} and map bijectively onto G.
    """

    def __init__(self, field, generators, orders):
        self.field = field
        self.gens = tuple(generators)
        self.n = tuple(orders)
        self.m = len(self.gens)
        grp = field.group()
        if not grp.is_abelian:
            raise ValueError("theta-polynomials require an abelian group")
        self._exp_to_idx = {}
        for exp in itertools.product(*[range(nn) for nn in self.n]):
            g = grp.identity
            for e, th in zip(exp, self.gens):
                for _ in range(e):
                    g = th.compose(g)
            idx = grp.index[g.params]
            if idx in self._exp_to_idx.values():
                raise ValueError("generators do not give a direct product decomposition")
            self._exp_to_idx[exp] = idx
        if len(self._exp_to_idx) != grp.order:
            raise ValueError("generators do not span the group")
        self._idx_to_exp = {v: k for k, v in self._exp_to_idx.items()}

    @classmethod
    def from_field(cls, field) -> "ThetaStructure":
        if isinstance(field, FiniteExtField):
            return cls(field, [field.frobenius()], [field.N])
        if isinstance(field, TowerField):
            if field.base_kind == "cyclotomic" or field.phi == 1:
                return cls(field, field.theta_generators(), field.ns)
            raise ValueError(
                "cannot derive commuting generators for a tower over Q with "
                "nontrivial cyclotomic part")
        raise ValueError(f"no theta structure for {field!r}")

    @property
    def N(self) -> int:
        return len(self.field.group())

    @property
    def max_degree(self) -> int:
        return sum(nn - 1 for nn in self.n)

    def group_index(self, exp) -> int:
        return self._exp_to_idx[tuple(e % nn for e, nn in zip(exp, self.n))]

    def exponent_of(self, idx: int):
        return self._idx_to_exp[idx]

    def monomial(self, exp, coeff=None) -> GroupAlgebraElement:
        f = self.field
        idx = self.group_index(exp)
        c = f.one if coeff is None else coeff
        coeffs = [f.zero] * self.N
        coeffs[idx] = c
        return GroupAlgebraElement(f, coeffs)

    def coefficient(self, p: GroupAlgebraElement, exp):
        return p.coeffs[self.group_index(exp)]

    def terms(self, p: GroupAlgebraElement):
        """Nonzero (exponent, coefficient) pairs."""
        return [(self._idx_to_exp[i], c) for i, c in enumerate(p.coeffs) if c]

    def theta_degree(self, p: GroupAlgebraElement):
        """Max total weight of a nonzero exponent; None for the zero element."""
        degs = [sum(e) for e, _ in self.terms(p)]
        return max(degs) if degs else None

    def leading_exponent(self, p: GroupAlgebraElement, order: str = "grevlex"):
        terms = self.terms(p)
        if not terms:
            raise ValueError("zero polynomial has no leading term")
        key = order_key(order)
        return max((e for e, _ in terms), key=key)

    def inv_monomial(self, exp, coeff=None) -> GroupAlgebraElement:
        """Monomial in the inverse generators: theta_inv^exp = theta^(-exp)."""
        neg = tuple((-e) % nn for e, nn in zip(exp, self.n))
        return self.monomial(neg, coeff)

    def theta_minus_one(self) -> GroupAlgebraElement:
        """The group element theta_1^-1 o ... o theta_m^-1 as a monomial."""
        return self.monomial(tuple(nn - 1 for nn in self.n))

    def theta_minus_one_aut(self):
        """The automorphism theta_1^-1 o ... o theta_m^-1 itself."""
        g = self.field.group().identity
        for th in self.gens:
            g = g.compose(th.inverse())
        return g

    def random_poly(self, rng, height: int = 3,
                    nonzero: bool = True) -> GroupAlgebraElement:
        f = self.field
        while True:
            coeffs = []
            for _ in range(self.N):
                if rng.random() < 0.5:
                    coeffs.append(f.zero)
                else:
                    coeffs.append(f.random_element(rng, height))
            p = GroupAlgebraElement(f, coeffs)
            if p or not nonzero:
                return p


# ---------------------------------------------------------------------------
# combinatorial formulas (no field needed)


def f_min_product(a, total: int) -> int:
    """min prod b_i over b with 1 <= b_i <= a_i and sum b = total.

    Computes both the brute-force minimum and the sorted closed form
    (l+1) * prod of the s largest entries, and insists they agree.
    """
    a = tuple(int(x) for x in a)
    m = len(a)
    if any(x < 1 for x in a):
        raise ValueError("entries must be positive")
    if not (m <= total <= sum(a)):
        raise ValueError(f"total {total} infeasible for {a}")
    brute = None
    for b in itertools.product(*[range(1, x + 1) for x in a]):
        if sum(b) == total:
            prod = 1
            for x in b:
                prod *= x
            brute = prod if brute is None else min(brute, prod)
    srt = sorted(a, reverse=True)
    rem = total - m
    closed = None
    for s in range(m + 1):
        head = sum(x - 1 for x in srt[:s])
        nxt = srt[s] if s < m else None
        l = rem - head
        if 0 <= l and (nxt is None and l == 0 or nxt is not None and l < nxt):
            prod = 1
            for x in srt[:s]:
                prod *= x
            closed = (l + 1) * prod
            break
    if closed is None or closed != brute:
        raise InvariantViolation(
            f"closed form {closed} != brute force {brute} for f({a},{total})")
    return closed


def _split_degree(n_sorted, d: int):
    """The unique (s, l) with d = sum_{i>s}(n_i - 1) + l and 0 <= l < n_s
    (1-based s; s = len(n) and l = 0 when d = 0)."""
    m = len(n_sorted)
    tail = 0
    for s in range(m, 0, -1):
        l = d - tail
        if 0 <= l < n_sorted[s - 1]:
            return s, l
        tail += n_sorted[s - 1] - 1
    if d == sum(x - 1 for x in n_sorted):
        return 1, n_sorted[0] - 1
    raise ValueError(f"degree {d} out of range for type {n_sorted}")


def af_lower_bound(n, d: int) -> int:
    """Rank lower bound (n_s - l) * prod_{i<s} n_i for a nonzero polynomial
    of theta-degree d; cross-checked against the product minimum."""
    n = tuple(int(x) for x in n)
    if any(x < 2 for x in n):
        raise ValueError("type entries must be >= 2")
    total = sum(n)
    if not 0 <= d <= total - len(n):
        raise ValueError(f"degree {d} out of range")
    srt = sorted(n, reverse=True)
    s, l = _split_degree(srt, d)
    bound = srt[s - 1] - l
    for x in srt[:s - 1]:
        bound *= x
    alt = f_min_product(n, total - d)
    if bound != alt:
        raise InvariantViolation(f"bound {bound} != product minimum {alt}")
    return bound


def sz_kernel_bound(n, d: int) -> Fraction:
    """Kernel-dimension upper bound deg/min(n) * prod(n) (may exceed N)."""
    n = tuple(int(x) for x in n)
    if d < 0:
        raise ValueError("degree must be nonnegative")
    prod = 1
    for x in n:
        prod *= x
    return Fraction(d, min(n)) * prod


def rm_dimension(r: int, n) -> int:
    """Number of exponents of weight <= r, computed three ways."""
    n = tuple(int(x) for x in n)
    if not 0 <= r <= sum(x - 1 for x in n):
        raise ValueError(f"order {r} out of range for type {n}")
    direct = sum(1 for exp in itertools.product(*[range(x) for x in n])
                 if sum(exp) <= r)
    # weak compositions with bounded parts, by inclusion-exclusion
    m = len(n)

    def binom(a, b):
        if b < 0 or a < 0:
            return 0
        from math import comb

        return comb(a, b)

    comp = 0
    for l in range(r + 1):
        total = 0
        for mask in range(1 << m):
            shift = 0
            bits = 0
            for i in range(m):
                if mask >> i & 1:
                    shift += n[i]
                    bits += 1
            total += (-1) ** bits * binom(l - shift + m - 1, m - 1)
        comp += total
    # generating function prod (1 + z + ... + z^(n_j - 1))
    poly = [1]
    for x in n:
        nxt = [0] * (len(poly) + x - 1)
        for i, c in enumerate(poly):
            for j in range(x):
                nxt[i + j] += c
        poly = nxt
    genf = sum(poly[l] for l in range(min(r + 1, len(poly))))
    if not (direct == comp == genf):
        raise InvariantViolation(
            f"dimension formulas disagree: {direct}, {comp}, {genf}")
    return direct


def rm_min_distance(r: int, n) -> int:
    """Closed-form minimum distance, cross-checked against the brute minimum
    of prod (n_i - u_i) over |u| <= r and against the rank lower bound."""
    n = tuple(int(x) for x in n)
    p = sum(x - 1 for x in n)
    if not 0 <= r <= p:
        raise ValueError(f"order {r} out of range for type {n}")
    if r == p:
        closed = 1
    else:
        srt = sorted(n, reverse=True)
        s, l = _split_degree(srt, r)
        closed = srt[s - 1] - l
        for x in srt[:s - 1]:
            closed *= x
    brute = None
    for u in itertools.product(*[range(x) for x in n]):
        if sum(u) <= r:
            prod = 1
            for x, uu in zip(n, u):
                prod *= x - uu
            brute = prod if brute is None else min(brute, prod)
    if closed != brute or closed != af_lower_bound(n, r):
        raise InvariantViolation(
            f"distance formulas disagree at r={r}, n={n}: {closed} vs {brute}")
    return closed


# ---------------------------------------------------------------------------
# codes


def rm_code(ts: ThetaStructure, r: int) -> Code:
    """The code of all polynomials of theta-degree at most r."""
    if not 0 <= r <= ts.max_degree:
        raise ValueError(f"order {r} out of range")
    gens = [ts.monomial(exp) for exp in itertools.product(*[range(x) for x in ts.n])
            if sum(exp) <= r]
    code = Code.from_generators(ts.field, gens)
    if code.dim != rm_dimension(r, ts.n):
        raise InvariantViolation("monomial span has unexpected dimension")
    return code


def rm_inv_code(ts: ThetaStructure, r: int) -> Code:
    """Same construction in the inverse generators."""
    if r < 0:
        return Code.zero(ts.field)
    gens = [ts.inv_monomial(exp) for exp in itertools.product(*[range(x) for x in ts.n])
            if sum(exp) <= r]
    return Code.from_generators(ts.field, gens)


def rm_dual(ts: ThetaStructure, r: int, check_basis_seed: int | None = 0) -> Code:
    """The dual of the degree-r code, computed generically and in closed form
    (inverse-generator code of complementary order, composed with the
    inverse-diagonal group element); both must agree.

    When ``check_basis_seed`` is not None, also verifies the vector-code form
    of the duality on a seeded random basis: the dual of the evaluation code
    at B equals the evaluation of the closed-form dual at theta^-1(B*).
    """
    p = ts.max_degree
    generic = rm_code(ts, r).dual()
    tm1 = ts.theta_minus_one()
    closed_gens = []
    if p - r - 1 >= 0:
        for exp in itertools.product(*[range(x) for x in ts.n]):
            if sum(exp) <= p - r - 1:
                closed_gens.append(ts.inv_monomial(exp).compose(tm1))
    closed = Code.from_generators(ts.field, closed_gens)
    if generic != closed:
        raise InvariantViolation("closed-form dual disagrees with generic dual")
    if check_basis_seed is not None and generic.dim and r <= p:
        _check_evaluation_duality(ts, r, check_basis_seed)
    return closed


def _random_basis(f, seed: int) -> Basis:
    rng = random.Random(_seeded_rng_int(seed, "basis", f.name))
    n = f.N
    while True:
        cand = [f.random_element(rng, 2) for _ in range(n)]
        try:
            return Basis(f, cand)
        except ValueError:
            continue


def _check_evaluation_duality(ts: ThetaStructure, r: int, seed: int) -> None:
    """Vector-code duality on a seeded random basis B: the dual of the
    evaluation code at B equals the complementary inverse-generator code
    evaluated at theta^-1(B*)."""
    f = ts.field
    basis = _random_basis(f, seed)
    ev = rm_code(ts, r).evaluation_rows(basis)
    lhs = ev.kernel()
    tm1 = ts.theta_minus_one_aut()
    shifted_points = [tm1(b) for b in basis.dual().elements]
    p = ts.max_degree
    rhs_rows = []
    for exp in itertools.product(*[range(x) for x in ts.n]):
        if sum(exp) <= p - r - 1:
            rhs_rows.append(ts.inv_monomial(exp).ev_vector(shifted_points))
    rhs = KSubspace.from_vectors(f, f.N, rhs_rows)
    if lhs != rhs:
        raise InvariantViolation("evaluation-code duality failed on random basis")


def annihilator_poly(ts: ThetaStructure, axis: int, space_elems) -> GroupAlgebraElement:
    """The monic polynomial in theta_axis of degree dim(V) annihilating V.

    V must lie in the fixed field of the other generators.  Built by the
    standard recursion P <- (theta - theta(w)/w) o P with w = P(v_r).
    """
    f = ts.field
    for th_j, v in itertools.product(
            (g for i, g in enumerate(ts.gens) if i != axis), space_elems):
        if th_j(v) != v:
            raise ValueError("subspace is not inside the cyclic sub-extension")
    if len(space_elems) > ts.n[axis]:
        raise ValueError("subspace too large for the cyclic sub-extension")
    theta = ts.gens[axis]
    p = identity_element(f)
    for v in space_elems:
        w = p.evaluate(v)
        if not w:
            raise ValueError(
                "annihilator recursion hit a dependent vector; echelonize the basis first")
        ratio = theta(w) / w
        step = monomial(f, theta) - identity_element(f).scale(ratio)
        p = step.compose(p)
    return p


def min_weight_codeword(ts: ThetaStructure, r: int) -> GroupAlgebraElement:
    """A degree <= r polynomial whose rank equals the minimum distance.

    Composes normalized annihilators of monomial subspaces (positive powers
    of each radical generator, which meet the base field trivially) following
    the split r = sum_{i>s}(n_i - 1) + l over the type sorted descending.
    """
    f = ts.field
    if not isinstance(f, TowerField):
        raise ValueError("constructive minimum-weight words need the tower backend")
    if not 1 <= r <= ts.max_degree:
        raise ValueError(f"order {r} out of range")
    order = sorted(range(ts.m), key=lambda i: -ts.n[i])
    srt = [ts.n[i] for i in order]
    s, l = _split_degree(srt, r)
    word = identity_element(f)
    for pos in range(s - 1, ts.m):
        axis = order[pos]
        alpha = f.radical_generator(axis)
        dim = l if pos == s - 1 else ts.n[axis] - 1
        if dim == 0:
            continue
        powers = []
        acc = f.one
        for _ in range(dim):
            acc = acc * alpha
            powers.append(acc)
        p_axis = annihilator_poly(ts, axis, powers)
        val1 = p_axis.evaluate(f.one)
        norm = p_axis.scale(val1.inverse())
        word = word.compose(norm)
    deg = ts.theta_degree(word)
    if deg is None or deg > r:
        raise InvariantViolation("constructed word exceeds the degree budget")
    return word


def rm_product_check(ts: ThetaStructure, r1: int, r2: int) -> bool:
    """Composition of degree filtrations adds the orders (within range)."""
    lhs = rm_code(ts, r1).product(rm_code(ts, r2))
    rhs = rm_code(ts, min(r1 + r2, ts.max_degree))
    return lhs == rhs


# ---------------------------------------------------------------------------
# classical Reed-Muller factorization over root-of-unity grids


def _colex(tuples):
    return sorted(tuples, key=lambda t: t[::-1])


def classical_rm_generator(r: int, n: int, m: int) -> Matrix:
    """Generator matrix of the classical grid code on the n-th roots of
    unity in m variables, rows the monomials of degree <= r.

    Built by the block recursion (Vandermonde base case for m = 1, all-ones
    row for r = 0) and cross-checked entrywise against the direct grid
    evaluation zeta^(u . v).
    """
    K = cyclotomic_field(n)
    zpow = [K._elem(list(K._zpow[s % n]), 1) for s in range(n)]

    def build(rr: int, mm: int):
        if rr == 0:
            return [[K.one] * (n ** mm)]
        if mm == 1:
            return [[zpow[(i * j) % n] for j in range(n)] for i in range(min(rr, n - 1) + 1)]
        out = []
        for i in range(min(rr, n - 1) + 1):
            sub = build(rr - i, mm - 1)
            for subrow in sub:
                row = []
                for j in range(n):
                    z = zpow[(i * j) % n]
                    row.extend(z * x for x in subrow)
                out.append(row)
        return out

    rows = build(r, m)
    exps = [u for u in _colex(list(itertools.product(range(n), repeat=m)))
            if sum(u) <= r]
    cols = _colex(list(itertools.product(range(n), repeat=m)))
    direct = [[zpow[sum(a * b for a, b in zip(u, v)) % n] for v in cols] for u in exps]
    if rows != direct:
        raise InvariantViolation("recursive generator matrix disagrees with grid evaluation")
    return Matrix(K, rows)


def hamming_min_distance(mat: Matrix) -> int:
    """Exact minimum Hamming weight of the row space, over any field.

    Searches the largest zero pattern: weight d means some nonzero codeword
    vanishes on N - d columns, i.e. the submatrix of the other columns has a
    kernel; all column subsets are enumerated (fine for N <= 12 or so).
    """
    k = mat.nrows
    ncols = mat.ncols
    best_zero = -1
    for size in range(ncols - 1, -1, -1):
        if size <= best_zero:
            break
        found = False
        for cols in itertools.combinations(range(ncols), size):
            sub = [[row[c] for c in cols] for row in mat.rows]
            if size == 0 or Matrix(mat.field, sub).rank() < k:
                found = True
                break
        if found:
            best_zero = size
            break
    return ncols - best_zero


def rm_generator_factorization(ts: ThetaStructure, r: int):
    """Split the evaluation generator matrix on the monomial basis as
    Y * Diag(basis): Y collects the root-of-unity characters and equals the
    classical grid-evaluation matrix; returns (Y, diag, G, ok).
    """
    f = ts.field
    if not isinstance(f, TowerField) or f.base_kind != "cyclotomic":
        raise ValueError("factorization needs a Kummer tower with the roots of "
                         "unity in the base field")
    K = f.base
    e = f.e
    basis = Basis.canonical(f)
    exps = [u for u in _colex(list(itertools.product(*[range(x) for x in ts.n])))
            if sum(u) <= r]
    cols = _colex(list(itertools.product(*[range(x) for x in ts.n])))
    if list(cols) != list(f.js):
        raise InvariantViolation("canonical basis order is not colex")
    zpowK = [K._elem(list(K._zpow[s % e]), 1) for s in range(e)]
    y_rows = []
    for u in exps:
        row = []
        for v in cols:
            expo = sum(ui * vi * (e // ni) for ui, vi, ni in zip(u, v, ts.n)) % e
            row.append(zpowK[expo])
        y_rows.append(row)
    y = Matrix(K, y_rows)
    diag = list(basis.elements)
    gmat = Matrix(f, [ts.monomial(u).ev_vector(basis.elements) for u in exps])
    ok = True
    for i in range(len(exps)):
        for j in range(f.N):
            if gmat.rows[i][j] != f.embed_base(y.rows[i][j]) * diag[j]:
                ok = False
    return y, diag, gmat, ok


# ---------------------------------------------------------------------------
# random property suite


@dataclass
class PropertyReport:
    """Outcome of the random rank/kernel bound suite."""

    trials: int = 0
    violations: list = dc_field(default_factory=list)
    checks: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations


def af_random_property_suite(ts: ThetaStructure, trials: int, seed: int,
                             orders=("grevlex", "grlex"),
                             height: int = 2) -> PropertyReport:
    """For seeded random polynomials: rank >= degree lower bound, kernel
    dimension <= the kernel bound, and the order-refined bound
    rank >= f(n, sum n - |leading exponent|) for each monomial order."""
    report = PropertyReport()
    total = sum(ts.n)
    for t in range(trials):
        rng = random.Random(_seeded_rng_int(seed, "af", t))
        p = ts.random_poly(rng, height)
        deg = ts.theta_degree(p)
        rk = rank_of(p)
        report.trials += 1
        bound = af_lower_bound(ts.n, deg)
        report.checks += 1
        if rk < bound:
            report.violations.append(("rank-bound", t, rk, bound))
        kdim = kernel_subspace(p).dim
        report.checks += 1
        if kdim > sz_kernel_bound(ts.n, deg):
            report.violations.append(("kernel-bound", t, kdim))
        for order in orders:
            lt = ts.leading_exponent(p, order)
            refined = f_min_product(ts.n, total - sum(lt))
            report.checks += 1
            if rk < refined:
                report.violations.append(("refined-bound", order, t, rk, refined))
    return report
