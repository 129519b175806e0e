"""Coefficient domains: the integers, the rationals and prime fields."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Coefficient = Union[int, Fraction]


class DomainError(ValueError):
    """Raised for malformed domains or operations a domain does not support."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class CoefficientDomain:
    """One of ZZ, QQ or Fp.

    Elements are plain Python values: ``int`` for ZZ, ``Fraction`` for QQ and
    ``int`` in ``[0, p)`` for Fp.
    """

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("ZZ", "QQ", "Fp"):
            raise DomainError(f"unknown coefficient domain {self.kind!r}")
        if self.kind == "Fp":
            if not isinstance(self.p, int) or not _is_prime(self.p):
                raise DomainError(f"Fp requires a prime modulus, got {self.p!r}")
        elif self.p is not None:
            raise DomainError(f"{self.kind} takes no modulus")

    @classmethod
    def integers(cls) -> CoefficientDomain:
        return cls("ZZ")

    @classmethod
    def rationals(cls) -> CoefficientDomain:
        return cls("QQ")

    @classmethod
    def prime_field(cls, p: int) -> CoefficientDomain:
        return cls("Fp", p)

    @classmethod
    def parse(cls, name: str) -> CoefficientDomain:
        """Parse ``ZZ``, ``QQ`` or ``Fp:<p>``."""
        name = name.strip()
        if name in ("ZZ", "QQ"):
            return cls(name)
        if name.startswith("Fp:"):
            try:
                p = int(name[3:])
            except ValueError:
                raise DomainError(f"bad modulus in {name!r}") from None
            return cls("Fp", p)
        raise DomainError(f"unknown ring {name!r}; expected ZZ, QQ or Fp:<p>")

    def __str__(self):
        return f"Fp:{self.p}" if self.kind == "Fp" else self.kind

    @property
    def krull_dim(self) -> int:
        return 1 if self.kind == "ZZ" else 0

    @property
    def is_field(self) -> bool:
        return self.kind != "ZZ"

    @property
    def is_euclidean(self) -> bool:
        return True

    # -- element construction ------------------------------------------------

    def __call__(self, value) -> Coefficient:
        """Convert an int or Fraction into a canonical element of the domain."""
        if self.kind == "ZZ":
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise DomainError(f"{value} is not an integer")
                return value.numerator
            return int(value)
        if self.kind == "QQ":
            return Fraction(value)
        value = Fraction(value)
        den = value.denominator % self.p
        if den == 0:
            raise DomainError(f"{value} has no image in Fp:{self.p}")
        return value.numerator * pow(den, -1, self.p) % self.p

    @property
    def zero(self) -> Coefficient:
        return self(0)

    @property
    def one(self) -> Coefficient:
        return self(1)

    # -- ring arithmetic -------------------------------------------------------

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def is_unit(self, a) -> bool:
        if self.is_field:
            return a != 0
        return a in (1, -1)

    def inverse(self, a):
        if a == 0 or not self.is_unit(a):
            raise DomainError(f"{a} is not invertible in {self}")
        if self.kind == "Fp":
            return pow(a, -1, self.p)
        if self.kind == "QQ":
            return 1 / a
        return a

    def unit_normal(self, a):
        """The unit ``u`` with ``u*a`` in normal form (positive over ZZ, 1 over a field)."""
        if a == 0:
            return self.one
        if self.is_field:
            return self.inverse(a)
        return -1 if a < 0 else 1

    def divides(self, a, b) -> bool:
        """True when ``a | b``."""
        if a == 0:
            return b == 0
        if self.is_field:
            return True
        return b % a == 0

    def exact_div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero coefficient")
        if self.kind == "ZZ":
            q, r = divmod(a, b)
            if r:
                raise DomainError(f"{b} does not divide {a}")
            return q
        return self.mul(a, self.inverse(b))

    def divrem(self, a, b):
        """Euclidean division ``a = q*b + r`` with the least nonnegative remainder."""
        if b == 0:
            raise ZeroDivisionError("division by zero coefficient")
        if self.is_field:
            return self.exact_div(a, b), self.zero
        r = a % abs(b)
        return (a - r) // b, r

    def gcd(self, a, b):
        if self.is_field:
            return self.zero if a == 0 and b == 0 else self.one
        return math.gcd(a, b)

    def lcm(self, a, b):
        if self.is_field:
            return self.zero if a == 0 or b == 0 else self.one
        return math.lcm(a, b)

    def ext_gcd(self, a, b):
        """Return ``(g, u, v)`` with ``u*a + v*b = g`` and ``g = gcd(a, b)``."""
        if a == 0 and b == 0:
            raise DomainError("ext_gcd(0, 0) is undefined")
        if self.is_field:
            if a != 0:
                return self.one, self.inverse(a), self.zero
            return self.one, self.zero, self.inverse(b)
        # iterative extended Euclid on |a|, |b|
        r0, r1 = abs(a), abs(b)
        s0, s1 = 1, 0
        t0, t1 = 0, 1
        while r1:
            q = r0 // r1
            r0, r1 = r1, r0 - q * r1
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        u = s0 if a >= 0 else -s0
        v = t0 if b >= 0 else -t0
        return r0, u, v


def domain_info(domain: CoefficientDomain) -> tuple[int, bool]:
    return domain.krull_dim, domain.is_field


def ext_gcd(a: int, b: int, domain: CoefficientDomain | None = None):
    return (domain or CoefficientDomain.integers()).ext_gcd(a, b)


def euclid_divrem(a: int, b: int, domain: CoefficientDomain | None = None):
    return (domain or CoefficientDomain.integers()).divrem(a, b)


ZZ = CoefficientDomain.integers()
QQ = CoefficientDomain.rationals()
