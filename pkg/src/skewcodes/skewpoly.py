"""Multivariate twisted polynomials in commuting indeterminates.

The indeterminates x_1, ..., x_m commute with each other but twist
coefficients: x_i * a = theta_i(a) * x_i.  Since each theta_i has order n_i,
the elements x_i^{n_i} - 1 are central and generate a two-sided ideal whose
reduction is plain componentwise exponent folding; the quotient is the group
algebra, via the exponent -> group-monomial map.  That reduction is exactly
what the witness check exploits: products with leading terms inside the
folded box can never reduce to zero.
"""

from __future__ import annotations

import itertools
import random

from .errors import InvariantViolation
from .fields import _seeded_rng_int
from .group_algebra import GroupAlgebraElement
from .orders import order_key
from .theta_rm import ThetaStructure


class SkewPolynomial:
    """Finitely supported coefficient map from exponent tuples to L."""

    __slots__ = ("ts", "coeffs")

    def __init__(self, ts: ThetaStructure, coeffs: dict):
        self.ts = ts
        self.coeffs = {tuple(e): c for e, c in coeffs.items() if c}

    @classmethod
    def zero(cls, ts: ThetaStructure) -> "SkewPolynomial":
        return cls(ts, {})

    @classmethod
    def one(cls, ts: ThetaStructure) -> "SkewPolynomial":
        return cls(ts, {(0,) * ts.m: ts.field.one})

    @classmethod
    def variable(cls, ts: ThetaStructure, i: int, power: int = 1) -> "SkewPolynomial":
        exp = tuple(power if k == i else 0 for k in range(ts.m))
        return cls(ts, {exp: ts.field.one})

    @classmethod
    def constant(cls, ts: ThetaStructure, c) -> "SkewPolynomial":
        return cls(ts, {(0,) * ts.m: c})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, SkewPolynomial) and other.ts is self.ts
                and other.coeffs == self.coeffs)

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e)
            out[e] = c if s is None else s + c
        return SkewPolynomial(self.ts, out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e)
            out[e] = -c if s is None else s - c
        return SkewPolynomial(self.ts, out)

    def __neg__(self):
        return SkewPolynomial(self.ts, {e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other):
        """(a x^i)(b x^j) = a theta^i(b) x^(i+j), extended bilinearly."""
        ts = self.ts
        out = {}
        for ei, a in self.coeffs.items():
            for ej, b in other.coeffs.items():
                tb = b
                for e, th in zip(ei, ts.gens):
                    for _ in range(e):
                        tb = th(tb)
                exp = tuple(x + y for x, y in zip(ei, ej))
                c = a * tb
                s = out.get(exp)
                out[exp] = c if s is None else s + c
        return SkewPolynomial(ts, out)

    def reduce_exponents(self) -> "SkewPolynomial":
        """Fold exponents modulo the orders (the x_i^{n_i} - 1 reduction);
        coefficients are untouched because x_i^{n_i} is central."""
        out = {}
        for e, c in self.coeffs.items():
            f = tuple(x % nn for x, nn in zip(e, self.ts.n))
            s = out.get(f)
            out[f] = c if s is None else s + c
        return SkewPolynomial(self.ts, out)

    def leading_term(self, order: str = "grevlex"):
        """(exponent, coefficient) maximal for the order; error when zero."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading term")
        key = order_key(order)
        exp = max(self.coeffs, key=key)
        return exp, self.coeffs[exp]

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, key=order_key("grevlex")):
            mono = " ".join(f"x{i + 1}^{p}" for i, p in enumerate(e) if p)
            c = self.ts.field.format_element(self.coeffs[e])
            parts.append(f"{c} * {mono}" if mono else c)
        return " + ".join(parts)

    def to_obj(self):
        f = self.ts.field
        return [[list(e), f.element_to_obj(c)] for e, c in
                sorted(self.coeffs.items(), key=lambda it: order_key("grevlex")(it[0]))]

    @classmethod
    def from_obj(cls, ts: ThetaStructure, obj) -> "SkewPolynomial":
        f = ts.field
        return cls(ts, {tuple(e): f.element_from_obj(c) for e, c in obj})

    def __repr__(self):
        return self.to_text()


def skew_mul(f: SkewPolynomial, g: SkewPolynomial) -> SkewPolynomial:
    return f * g


def reduce_mod_orders(f: SkewPolynomial) -> SkewPolynomial:
    return f.reduce_exponents()


def phi(f: SkewPolynomial) -> GroupAlgebraElement:
    """Project onto the group algebra: x^i goes to theta^(i mod n)."""
    ts = f.ts
    fld = ts.field
    coeffs = [fld.zero] * ts.N
    for e, c in f.coeffs.items():
        idx = ts.group_index(tuple(x % nn for x, nn in zip(e, ts.n)))
        coeffs[idx] = coeffs[idx] + c
    return GroupAlgebraElement(fld, coeffs)


def phi_inv(p: GroupAlgebraElement, ts: ThetaStructure) -> SkewPolynomial:
    """The reduced representative (exponents inside the box)."""
    return SkewPolynomial(ts, {e: c for e, c in ts.terms(p)})


def af_witness_check(p: GroupAlgebraElement, ts: ThetaStructure,
                     order: str = "grevlex", samples: int = 256,
                     seed: int = 0) -> bool:
    """Constructive core of the rank lower bound: for the reduced
    representative with leading exponent u, every nonzero polynomial with
    exponents strictly below n - u componentwise multiplies it to something
    nonzero modulo the folding ideal.

    Checks all monomials of the box when there are at most ``samples``,
    otherwise that many seeded random elements of the box.
    """
    if not p:
        raise ValueError("zero polynomial has no witness box")
    pbar = phi_inv(p, ts)
    u, _ = pbar.leading_term(order)
    box = [nn - uu for nn, uu in zip(ts.n, u)]
    size = 1
    for b in box:
        size *= b
    fld = ts.field
    candidates = []
    if size <= samples:
        for exp in itertools.product(*[range(b) for b in box]):
            candidates.append(SkewPolynomial(ts, {exp: fld.one}))
    else:
        for t in range(samples):
            rng = random.Random(_seeded_rng_int(seed, "witness", t))
            coeffs = {}
            while not coeffs:
                coeffs = {}
                for exp in itertools.product(*[range(b) for b in box]):
                    if rng.random() < 0.5:
                        c = fld.random_element(rng, 2)
                        if c:
                            coeffs[exp] = c
            candidates.append(SkewPolynomial(ts, coeffs))
    for f in candidates:
        if not (f * pbar).reduce_exponents():
            return False
    return True
