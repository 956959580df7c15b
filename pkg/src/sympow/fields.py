"""Exact coefficient fields: prime fields F_p and the rationals Q.

Field elements are plain Python values -- ints in [0, p) for prime-field
residues, ``fractions.Fraction`` for rationals (always reduced, positive
denominator).  The field object owns the arithmetic; keeping elements
unwrapped keeps the division/reduction inner loops cheap.  Mixing of
characteristics is prevented one level up, by the ring.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import UsageError

# Products of two reduced residues must fit comfortably in native machine
# arithmetic on any host; moduli are capped below 2^31.
MAX_MODULUS = 2**31


def is_prime(n: int) -> bool:
    """Trial-division primality check, adequate for moduli below 2^31."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """The field F_p; elements are ints reduced into [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not (2 <= p < MAX_MODULUS):
            raise UsageError(f"characteristic must satisfy 2 <= p < 2^31, got {p}")
        if not is_prime(p):
            raise UsageError(f"characteristic {p} is not prime")
        self.p = p

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def of(self, n: int) -> int:
        return n % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero residue")
        return pow(a, -1, self.p)

    def div(self, a: int, b: int) -> int:
        return (a * self.inv(b)) % self.p

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


class RationalField:
    """The field Q; elements are ``Fraction`` (reduced, denominator > 0)."""

    __slots__ = ()

    @property
    def characteristic(self) -> int:
        return 0

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def of(self, n) -> Fraction:
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("RationalField")

    def __repr__(self) -> str:
        return "RationalField()"


_QQ = RationalField()
_PRIME_CACHE: dict[int, PrimeField] = {}


def field_of_characteristic(char: int):
    """Return the shared field object for characteristic 0 or prime p."""
    if char == 0:
        return _QQ
    ff = _PRIME_CACHE.get(char)
    if ff is None:
        ff = PrimeField(char)
        _PRIME_CACHE[char] = ff
    return ff
