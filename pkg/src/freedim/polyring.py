"""Monomials, monomial orders and sparse multivariate polynomials.

Monomials are exponent tuples.  Variables are listed in precedence order, the
first one being the greatest (``vars x,y,z`` means ``z < y < x``).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .coeff import CoefficientDomain

Monomial = tuple  # tuple[int, ...]

LESS, EQUAL, GREATER = -1, 0, 1


# -- monomials ---------------------------------------------------------------

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """``a / b``; caller guarantees ``b | a``."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when ``a | b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


def mono_support(a: Monomial) -> frozenset:
    return frozenset(i for i, e in enumerate(a) if e)


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


# -- orders ------------------------------------------------------------------

def _lex_key(a):
    return a


def _deglex_key(a):
    return (sum(a),) + a


def _degrevlex_key(a):
    return (sum(a),) + tuple(-e for e in reversed(a))


@dataclass(frozen=True)
class MonomialOrder:
    """``lex``, ``deglex`` or ``degrevlex``.

    ``key`` maps a monomial to a flat tuple of ints; larger key means larger
    monomial.
    """

    kind: str

    _KEYS = {"lex": _lex_key, "deglex": _deglex_key, "degrevlex": _degrevlex_key}

    def __post_init__(self):
        if self.kind not in self._KEYS:
            raise ValueError(f"unknown monomial order {self.kind!r}; "
                             "expected lex, deglex or degrevlex")

    @property
    def degree_compatible(self) -> bool:
        return self.kind != "lex"

    @property
    def key(self):
        return self._KEYS[self.kind]

    def compare(self, a: Monomial, b: Monomial) -> int:
        if len(a) != len(b):
            raise ValueError("monomials live in different numbers of variables")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def max(self, monos: Iterable[Monomial]) -> Monomial:
        return max(monos, key=self.key)

    def __str__(self):
        return self.kind


LEX = MonomialOrder("lex")
DEGLEX = MonomialOrder("deglex")
DEGREVLEX = MonomialOrder("degrevlex")


def compare(order: MonomialOrder, a: Monomial, b: Monomial) -> int:
    return order.compare(a, b)


# -- rings and polynomials ---------------------------------------------------

class Term(NamedTuple):
    coeff: object
    mono: Monomial


class PolynomialRing:
    """``A[x1, ..., xn]`` with a fixed monomial order."""

    def __init__(self, domain: CoefficientDomain, variables: Sequence[str],
                 order: MonomialOrder | str = LEX):
        variables = tuple(variables)
        if not variables:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        self.domain = domain
        self.variables = variables
        self.order = order if isinstance(order, MonomialOrder) else MonomialOrder(order)

    @property
    def n(self) -> int:
        return len(self.variables)

    def _ident(self):
        return (self.domain, self.variables, self.order)

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        return f"PolynomialRing({self.domain}, {list(self.variables)}, {self.order})"

    def with_domain(self, domain: CoefficientDomain) -> PolynomialRing:
        return PolynomialRing(domain, self.variables, self.order)

    def with_order(self, order: MonomialOrder | str) -> PolynomialRing:
        return PolynomialRing(self.domain, self.variables, order)

    # constructors
    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one_mono(self) -> Monomial:
        return (0,) * self.n

    def constant(self, c) -> Polynomial:
        return self.term(c, self.one_mono())

    def term(self, c, mono: Monomial) -> Polynomial:
        c = self.domain(c)
        return Polynomial(self, {tuple(mono): c} if c != 0 else {})

    def gen(self, name_or_index) -> Polynomial:
        i = (self.variables.index(name_or_index) if isinstance(name_or_index, str)
             else name_or_index)
        mono = [0] * self.n
        mono[i] = 1
        return self.term(1, tuple(mono))

    def gens(self) -> tuple:
        return tuple(self.gen(i) for i in range(self.n))

    def from_dict(self, terms: dict) -> Polynomial:
        dom = self.domain
        clean = {}
        for m, c in terms.items():
            if len(m) != self.n:
                raise ValueError(f"exponent vector {m} has wrong length")
            c = dom(c)
            if c != 0:
                clean[tuple(m)] = c
        return Polynomial(self, clean)

    def parse(self, text: str) -> Polynomial:
        from .parser import parse_polynomial
        return parse_polynomial(text, self)

    def mono_str(self, mono: Monomial) -> str:
        parts = []
        for name, e in zip(self.variables, mono):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def _coeff_str(c) -> str:
    if isinstance(c, Fraction) and c.denominator == 1:
        return str(c.numerator)
    return str(c)


class Polynomial:
    """Immutable sparse polynomial: a dict from exponent tuple to nonzero coefficient."""

    __slots__ = ("ring", "terms", "_hash", "_lt")

    def __init__(self, ring: PolynomialRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None
        self._lt = None

    # -- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self, order: MonomialOrder | None = None) -> list:
        """Terms in descending order."""
        key = (order or self.ring.order).key
        return [Term(self.terms[m], m)
                for m in sorted(self.terms, key=key, reverse=True)]

    def leading_term(self, order: MonomialOrder | None = None) -> Term:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        if order is None or order == self.ring.order:
            if self._lt is None:
                m = self.ring.order.max(self.terms)
                self._lt = Term(self.terms[m], m)
            return self._lt
        m = order.max(self.terms)
        return Term(self.terms[m], m)

    def LM(self, order=None) -> Monomial:
        return self.leading_term(order).mono

    def LC(self, order=None):
        return self.leading_term(order).coeff

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def coefficients(self):
        return self.terms.values()

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other)
        if other.ring.domain != self.ring.domain or other.ring.variables != self.ring.variables:
            raise ValueError("polynomials belong to different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        dom = self.ring.domain
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = dom.add(out.get(m, 0), c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        dom = self.ring.domain
        return Polynomial(self.ring, {m: dom.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        dom = self.ring.domain
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = dom.add(out.get(m, 0), dom.mul(c1, c2))
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = self.ring.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_term(self, c, mono: Monomial) -> Polynomial:
        """``c * x^mono * self``."""
        dom = self.ring.domain
        out = {}
        for m, a in self.terms.items():
            v = dom.mul(a, c)
            if v:
                out[mono_mul(m, mono)] = v
        return Polynomial(self.ring, out)

    def scale(self, c) -> Polynomial:
        return self.mul_term(c, self.ring.one_mono())

    def map_coeffs(self, ring: PolynomialRing, fn) -> Polynomial:
        """Apply ``fn`` to every coefficient, landing in ``ring``."""
        return ring.from_dict({m: fn(c) for m, c in self.terms.items()})

    # -- comparison / display --------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (self.ring.domain == other.ring.domain
                    and self.ring.variables == other.ring.variables
                    and self.terms == other.terms)
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def render(self, order: MonomialOrder | None = None) -> str:
        """Canonical text: descending terms, ``*`` products and ``^`` powers."""
        if not self.terms:
            return "0"
        ring = self.ring
        signed = ring.domain.kind != "Fp"
        out = []
        for c, m in self.sorted_terms(order):
            neg = signed and c < 0
            a = -c if neg else c
            if any(m):
                body = ring.mono_str(m)
                if a != 1:
                    body = f"{_coeff_str(a)}*{body}"
            else:
                body = _coeff_str(a)
            if not out:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(out)

    __str__ = render

    def __repr__(self):
        return f"Polynomial({self.render()!r})"


def leading_term(f: Polynomial, order: MonomialOrder | None = None) -> Term:
    return f.leading_term(order)


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def multiply(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


# -- reduction -----------------------------------------------------------------

def divide(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder | None = None):
    """Multivariate division of ``f`` by ``G``.

    Returns ``(quotients, remainder)`` with ``f = sum(q*g) + remainder``.  A term
    ``c*x^b`` is reducible by ``g`` when ``lm(g) | x^b`` and the Euclidean
    quotient of ``c`` by ``lc(g)`` is nonzero; the coefficient is then replaced
    by its remainder.  Over a field this is ordinary lm-divisibility.
    """
    ring = f.ring
    order = order or ring.order
    dom = ring.domain
    if any(g.is_zero() for g in G):
        raise ValueError("cannot reduce by the zero polynomial")
    leads = [g.leading_term(order) for g in G]
    key = order.key
    quotients = [dict() for _ in G]
    p = dict(f.terms)
    # max-heap of pending monomials via negated flat keys
    heap = [(tuple(-k for k in key(m)), m) for m in p]
    heapq.heapify(heap)
    queued = set(p)
    rem = {}
    while heap:
        m = heapq.heappop(heap)[1]
        queued.discard(m)
        c = p.get(m)
        while c:
            for i, (lc, lm) in enumerate(leads):
                if not mono_divides(lm, m):
                    continue
                q, _ = dom.divrem(c, lc)
                if q == 0:
                    continue
                shift = mono_div(m, lm)
                quotients[i][shift] = dom.add(quotients[i].get(shift, 0), q)
                for gm, gc in G[i].terms.items():
                    t = mono_mul(gm, shift)
                    v = dom.sub(p.get(t, 0), dom.mul(q, gc))
                    if v:
                        p[t] = v
                        if t not in queued and t != m:
                            queued.add(t)
                            heapq.heappush(heap, (tuple(-k for k in key(t)), t))
                    else:
                        p.pop(t, None)
                break
            else:
                rem[m] = c
                break
            c = p.get(m)
        p.pop(m, None)
    qs = [ring.from_dict(q) for q in quotients]
    return qs, Polynomial(ring, rem)


def reduce(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder | None = None) -> Polynomial:
    """Normal form of ``f`` modulo ``G``."""
    return divide(f, G, order)[1]
