"""Monomial orders: lex, degrevlex, and block elimination orders.

Monomials are bare exponent tuples throughout the package.  An order is
represented by a key function mapping an exponent tuple to a flat tuple
of ints such that the natural tuple comparison realizes the order
(larger key = larger monomial).  All three key maps are injective and
additive (key(a*b) = key(a) + key(b) componentwise), which the Groebner
engine exploits.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UsageError

LESS = -1
EQUAL = 0
GREATER = 1


def _degrevlex_key(exps) -> tuple:
    # Graded, ties broken by the reversed exponent vector negated: among
    # equal-degree monomials the one with the smaller power of the last
    # differing variable wins.
    return (sum(exps), *(-e for e in reversed(exps)))


@dataclass(frozen=True)
class MonomialOrder:
    """A total, multiplicative well-order on monomials.

    kind is one of "lex", "degrevlex", or "block"; a block order compares
    the first ``block`` variables by degrevlex (so they dominate: an
    elimination order for that front block), then the remaining variables
    by degrevlex.
    """

    kind: str
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "degrevlex", "block"):
            raise UsageError(f"unknown monomial order kind {self.kind!r}")
        if self.kind == "block" and self.block < 1:
            raise UsageError("block order needs a positive block size")

    def key(self, exps) -> tuple:
        if self.kind == "degrevlex":
            return _degrevlex_key(exps)
        if self.kind == "lex":
            return tuple(exps)
        k = self.block
        return _degrevlex_key(exps[:k]) + _degrevlex_key(exps[k:])

    def __str__(self) -> str:
        if self.kind == "block":
            return f"block({self.block})"
        return self.kind


LEX = MonomialOrder("lex")
DEGREVLEX = MonomialOrder("degrevlex")


def block_order(k: int) -> MonomialOrder:
    """Elimination order for the first k variables."""
    return MonomialOrder("block", k)


def order_from_name(name: str) -> MonomialOrder:
    name = name.strip().lower()
    if name == "lex":
        return LEX
    if name == "degrevlex":
        return DEGREVLEX
    raise UsageError(f"unknown order {name!r} (expected lex or degrevlex)")


def compare_monomials(a, b, order: MonomialOrder) -> int:
    """Return LESS, EQUAL, or GREATER for exponent tuples a, b."""
    if len(a) != len(b):
        raise UsageError("monomials from rings with different variable counts")
    ka, kb = order.key(a), order.key(b)
    if ka < kb:
        return LESS
    if ka > kb:
        return GREATER
    return EQUAL
