"""Monomial orders on exponent tuples, shared by the polynomial modules.

Both orders refine total degree: among a finite set of exponents, a maximal
element always has maximal total weight.  Keys sort ascending, so
``max(exps, key=...)`` picks the leading exponent.
"""

from __future__ import annotations


def grlex_key(exp):
    """Graded lexicographic: total degree first, then lex (first index most
    significant)."""
    return (sum(exp), tuple(exp))


def grevlex_key(exp):
    """Graded reverse lexicographic: total degree first, then the usual
    reversed-negated tiebreak."""
    return (sum(exp), tuple(-x for x in reversed(exp)))


ORDERS = {
    "grevlex": grevlex_key,
    "grlex": grlex_key,
}


def order_key(name: str):
    try:
        return ORDERS[name]
    except KeyError:
        raise ValueError(f"unknown monomial order {name!r}; choose from {sorted(ORDERS)}")
