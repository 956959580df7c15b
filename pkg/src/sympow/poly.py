"""Rings and polynomials: RingSpec, canonical term-list polynomials.

A monomial is an exponent tuple (one non-negative int per ring variable);
its total degree is the exponent sum.  A polynomial stores a tuple of
(exponents, coefficient) pairs, sorted strictly decreasing under the
degrevlex key, with no zero coefficients -- so equal polynomials have
identical term tuples regardless of how they were produced.  The zero
polynomial is the empty tuple.

Everything here is immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

from .errors import UsageError
from .fields import field_of_characteristic
from .orders import DEGREVLEX, MonomialOrder

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

# Hard ceiling on term counts produced by arithmetic; large enough for any
# desk-scale run, small enough to fail before thrashing swap.
MAX_TERMS = 10**6


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))

def mono_divides(a: tuple, b: tuple) -> bool:
    """True when monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))

def mono_div(a: tuple, b: tuple) -> tuple:
    """Exponent vector of a/b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))

def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))

def mono_gcd(a: tuple, b: tuple) -> tuple:
    return tuple(x if x < y else y for x, y in zip(a, b))

def mono_degree(a: tuple) -> int:
    return sum(a)


class RingSpec:
    """Ambient polynomial ring, or a hypersurface quotient of one.

    Fixes the variable list and the coefficient characteristic.  An
    optional relation polynomial f (nonzero, every term of degree >= 1)
    turns the ring into the quotient A = k[vars]/(f); the relation lives
    in the relation-free base ring and is adjoined automatically by every
    Groebner-basis computation downstream.
    """

    __slots__ = ("variables", "characteristic", "relation", "field", "_hash")

    def __init__(self, variables, characteristic: int = 0, relation=None):
        variables = tuple(variables)
        if not variables:
            raise UsageError("a ring needs at least one variable")
        for v in variables:
            if not _NAME_RE.match(v):
                raise UsageError(f"bad variable name {v!r}")
        if len(set(variables)) != len(variables):
            raise UsageError("duplicate variable names")
        self.variables = variables
        self.field = field_of_characteristic(characteristic)
        self.characteristic = characteristic
        if relation is not None:
            if relation.ring.variables != variables or relation.ring.characteristic != characteristic:
                raise UsageError("relation must live in the relation-free base ring")
            if relation.ring.relation is not None:
                raise UsageError("relation polynomial must itself be relation-free")
            if relation.is_zero():
                raise UsageError("relation must be nonzero")
            if any(mono_degree(e) == 0 for e, _ in relation.terms):
                raise UsageError("relation must have every term of degree >= 1")
        self.relation = relation
        self._hash = hash((variables, characteristic,
                           None if relation is None else relation.terms))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def var_index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UsageError(f"unknown variable {name!r}") from None

    def base_ring(self) -> "RingSpec":
        """The relation-free ring with the same variables and field."""
        if self.relation is None:
            return self
        return RingSpec(self.variables, self.characteristic)

    def with_relation(self, relation: "Polynomial") -> "RingSpec":
        return RingSpec(self.variables, self.characteristic, relation)

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, n) -> "Polynomial":
        c = self.field.of(n)
        if not c:
            return self.zero()
        return Polynomial(self, (((0,) * self.nvars, c),))

    def var(self, name: str) -> "Polynomial":
        i = self.var_index(name)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, ((tuple(e), self.field.one),))

    def gens(self) -> list["Polynomial"]:
        return [self.var(v) for v in self.variables]

    def monomial(self, exps, coeff=1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise UsageError("bad exponent vector")
        c = self.field.of(coeff)
        if not c:
            return self.zero()
        return Polynomial(self, ((exps, c),))

    def from_dict(self, mapping) -> "Polynomial":
        terms = tuple(sorted(((e, c) for e, c in mapping.items() if c),
                             key=lambda t: DEGREVLEX.key(t[0]), reverse=True))
        return Polynomial(self, terms)

    def __eq__(self, other) -> bool:
        return (isinstance(other, RingSpec)
                and self.variables == other.variables
                and self.characteristic == other.characteristic
                and ((self.relation is None and other.relation is None)
                     or (self.relation is not None and other.relation is not None
                         and self.relation.terms == other.relation.terms)))

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        rel = f", rel={self.relation}" if self.relation is not None else ""
        return f"RingSpec(char={self.characteristic}; vars={','.join(self.variables)}{rel})"


def _check_same_ring(f: "Polynomial", g: "Polynomial"):
    if f.ring != g.ring:
        raise UsageError("polynomials from different rings")


class Polynomial:
    """Immutable multivariate polynomial in canonical term-list form."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingSpec, terms: tuple):
        self.ring = ring
        self.terms = terms

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or mono_degree(self.terms[0][0]) == 0

    def is_monomial(self) -> bool:
        """Single term (any coefficient)."""
        return len(self.terms) == 1

    def total_degree(self) -> int:
        """Max term degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(e) for e, _ in self.terms)

    def min_total_degree(self) -> int:
        if not self.terms:
            raise UsageError("zero polynomial has no minimal term degree")
        return min(mono_degree(e) for e, _ in self.terms)

    def leading_term(self, order: MonomialOrder = DEGREVLEX):
        """(exponents, coeff) of the largest term under order; None if zero."""
        if not self.terms:
            return None
        if order is DEGREVLEX:
            return self.terms[0]
        return max(self.terms, key=lambda t: order.key(t[0]))

    def leading_monomial(self, order: MonomialOrder = DEGREVLEX):
        lt = self.leading_term(order)
        return None if lt is None else lt[0]

    def sorted_terms(self, order: MonomialOrder):
        """Terms strictly decreasing under ``order``."""
        if order is DEGREVLEX:
            return self.terms
        return tuple(sorted(self.terms, key=lambda t: order.key(t[0]), reverse=True))

    def coefficient(self, exps) -> object:
        exps = tuple(exps)
        for e, c in self.terms:
            if e == exps:
                return c
        return self.ring.field.zero

    def as_dict(self) -> dict:
        return dict(self.terms)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        _check_same_ring(self, other)
        acc = dict(self.terms)
        fld = self.ring.field
        for e, c in other.terms:
            old = acc.get(e)
            v = c if old is None else fld.add(old, c)
            if v:
                acc[e] = v
            elif old is not None:
                del acc[e]
        return self.ring.from_dict(acc)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        fld = self.ring.field
        return Polynomial(self.ring, tuple((e, fld.neg(c)) for e, c in self.terms))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        _check_same_ring(self, other)
        fld = self.ring.field
        acc: dict = {}
        get = acc.get
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                ne = tuple(x + y for x, y in zip(e1, e2))
                v = fld.add(get(ne, fld.zero), fld.mul(c1, c2))
                if v:
                    acc[ne] = v
                elif ne in acc:
                    del acc[ne]
        if len(acc) > MAX_TERMS:
            from .errors import CapExceededError
            raise CapExceededError("term count", f"{len(acc)} terms in a product")
        return self.ring.from_dict(acc)

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise UsageError("polynomial power needs a non-negative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        """Multiply by a field scalar (accepts ints)."""
        fld = self.ring.field
        c = fld.of(c) if isinstance(c, int) else c
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, tuple((e, fld.mul(cf, c)) for e, cf in self.terms))

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.leading_term(order)[1]
        return self.scale(self.ring.field.inv(lc))

    def primitive(self) -> "Polynomial":
        """Over Q: scale to coprime integer coefficients with positive
        leading coefficient (degrevlex).  Over F_p: returned unchanged.

        Scaling by a nonzero constant never changes ideal membership or
        witness validity, so this is the canonical form used wherever a
        polynomial must be serialized in the integer-literal grammar.
        """
        if not self.terms or self.ring.characteristic != 0:
            return self
        den = 1
        for _, c in self.terms:
            den = den * c.denominator // gcd(den, c.denominator)
        num = 0
        for _, c in self.terms:
            num = gcd(num, c.numerator * den // c.denominator)
        factor = Fraction(den, num)
        if self.terms[0][1] < 0:
            factor = -factor
        return self.scale(factor)

    # -- calculus and substitution ---------------------------------------

    def partial_derivative(self, var) -> "Polynomial":
        """Formal partial derivative with respect to a variable (by name
        or index); exact in any characteristic."""
        i = self.ring.var_index(var) if isinstance(var, str) else var
        fld = self.ring.field
        acc: dict = {}
        for e, c in self.terms:
            k = e[i]
            if k == 0:
                continue
            nc = fld.mul(c, fld.of(k))
            if not nc:
                continue
            ne = e[:i] + (k - 1,) + e[i + 1:]
            v = fld.add(acc.get(ne, fld.zero), nc)
            if v:
                acc[ne] = v
            elif ne in acc:
                del acc[ne]
        return self.ring.from_dict(acc)

    def substitute(self, mapping: dict) -> "Polynomial":
        """Evaluate with variables replaced by polynomials of a common
        target ring; unmapped variables must exist in the target ring."""
        if not mapping:
            return self
        target = next(iter(mapping.values())).ring
        if target.characteristic != self.ring.characteristic:
            raise UsageError("substitution across characteristics")
        images = []
        for name in self.ring.variables:
            img = mapping.get(name)
            if img is None:
                img = target.var(name)
            elif img.ring != target:
                raise UsageError("substitution images from different rings")
            images.append(img)
        result = target.zero()
        for e, c in self.terms:
            term = target.one().scale(c)
            for i, k in enumerate(e):
                if k:
                    term = term * images[i] ** k
            result = result + term
        return result

    def in_ring(self, other: RingSpec) -> "Polynomial":
        """Reinterpret in another ring with identical variables and
        characteristic (e.g. between a quotient ring and its base)."""
        if other.variables != self.ring.variables or other.characteristic != self.ring.characteristic:
            raise UsageError("rings are not term-compatible")
        return Polynomial(other, self.terms)

    # -- identity --------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, Polynomial) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.ring, self.terms))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- display ---------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"<poly {format_poly(self)}>"


def format_poly(f: Polynomial, order: MonomialOrder = DEGREVLEX) -> str:
    """Human-readable form; non-integer rational coefficients are shown
    with a slash and are then not re-parseable (see ``to_input_string``)."""
    if f.is_zero():
        return "0"
    names = f.ring.variables
    out = []
    for e, c in f.sorted_terms(order):
        neg = isinstance(c, Fraction) and c < 0
        mag = -c if neg else c
        if isinstance(mag, Fraction) and mag.denominator == 1:
            mag = mag.numerator
        parts = []
        for name, k in zip(names, e):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}^{k}")
        if not parts or mag != 1:
            parts.insert(0, str(mag))
        text = "*".join(parts)
        if not out:
            out.append(f"-{text}" if neg else text)
        else:
            out.append(f" - {text}" if neg else f" + {text}")
    return "".join(out)


def to_input_string(f: Polynomial) -> str:
    """Serialize in the exact input grammar (integer literals only).

    Over Q the polynomial must have integer coefficients; callers that
    need a grammar form of an arbitrary rational polynomial should take
    ``f.primitive()`` first.  The result re-parses to ``f`` exactly.
    """
    if f.ring.characteristic == 0:
        for _, c in f.terms:
            if c.denominator != 1:
                raise UsageError(
                    "polynomial has non-integer coefficients; serialize its primitive() form")
    return format_poly(f)
