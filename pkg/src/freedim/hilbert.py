"""Affine Hilbert series and Hilbert polynomials of monomial ideals.

The Hilbert function counts standard monomials of total degree at most ``d``;
its generating series is kept over the fixed denominator ``(1 - t)^(n+1)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .dimension import OrderError, UnitIdealError
from .groebner import GroebnerBasis, require_free
from .polyring import mono_divides, mono_lcm


@dataclass(frozen=True)
class MonomialIdeal:
    generators: tuple
    n: int

    @classmethod
    def from_monomials(cls, monos: Iterable, n: int) -> MonomialIdeal:
        monos = [tuple(m) for m in monos]
        if any(len(m) != n for m in monos):
            raise ValueError(f"monomials must have {n} exponents")
        return cls(tuple(minimalize(monos)), n)

    @classmethod
    def leading_ideal(cls, G: GroebnerBasis) -> MonomialIdeal:
        return cls.from_monomials(G.leading_monomials(), G.ring.n)

    def contains(self, mono) -> bool:
        return any(mono_divides(g, mono) for g in self.generators)


def minimalize(monos: Sequence) -> list:
    """Drop generators divisible by another; output sorted and duplicate-free."""
    out = []
    for m in sorted(set(monos), key=lambda m: (sum(m), m)):
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return sorted(out)


def _poly_add(a: list, b: list, sign: int = 1) -> list:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += sign * c
    return out


def _trim(a: list) -> tuple:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


@dataclass(frozen=True)
class HilbertSeries:
    """``H(t) = (a0 + a1 t + ... + ak t^k) / (1 - t)^(n+1)``."""

    numerator: tuple
    n: int

    def coefficients(self, upto: int) -> list:
        return series_coefficients(self, upto)

    def display(self) -> str:
        """Rendering with common factors of ``(1 - t)`` cancelled."""
        num = list(self.numerator)
        power = self.n + 1
        while power and num and sum(num) == 0:
            # synthetic division by (1 - t)
            q, acc = [], 0
            for c in num[:-1]:
                acc += c
                q.append(acc)
            num, power = q, power - 1
        return f"({_render_upoly(num, 't')})/(1 - t)^{power}"


def _render_upoly(coeffs: Sequence, var: str) -> str:
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        neg = c < 0
        a = -c if neg else c
        if i == 0:
            body = str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else f"{a}*{mono}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts) if parts else "0"


def _pick_first(gens, order_key):
    return 0


def _pick_max_degree(gens, order_key):
    return max(range(len(gens)), key=lambda i: (sum(gens[i]), order_key(gens[i])))


PIVOTS = {"max-degree": _pick_max_degree, "first": _pick_first}


def _series_numerator(gens: list, pick, order_key) -> list:
    if not gens:
        return [1]
    i = pick(gens, order_key)
    m1 = gens[i]
    rest = gens[:i] + gens[i + 1:]
    J = rest
    Jp = minimalize([mono_lcm(m1, m) for m in rest])
    head = [1] + [0] * sum(m1)
    head[sum(m1)] -= 1
    out = _poly_add(head, _series_numerator(J, pick, order_key))
    return _poly_add(out, _series_numerator(Jp, pick, order_key), -1)


def hilbert_series(I: MonomialIdeal, n: int | None = None, pivot: str = "max-degree",
                   order_key=None) -> HilbertSeries:
    """Hilbert series by splitting off one generator at a time.

    ``H_I = (1 - t^deg m1)/(1-t)^(n+1) + H_J - H_J'`` where ``J`` drops ``m1``
    and ``J'`` is generated by the lcms of ``m1`` with the rest.
    """
    n = I.n if n is None else n
    if n != I.n:
        raise ValueError("variable count does not match the ideal")
    gens = minimalize(I.generators)
    num = _series_numerator(gens, PIVOTS[pivot], order_key or (lambda m: m))
    return HilbertSeries(_trim(num), n)


def series_coefficients(H: HilbertSeries, upto: int) -> list:
    """``h(0), ..., h(upto)``: numerator times ``sum C(d+n, n) t^d``."""
    if upto < 0:
        raise ValueError("upto must be nonnegative")
    n = H.n
    return [sum(a * comb(d - i + n, n) for i, a in enumerate(H.numerator) if i <= d)
            for d in range(upto + 1)]


def _monomials_up_to(n: int, d: int):
    for e in range(d + 1):
        for combo in itertools.combinations_with_replacement(range(n), e):
            mono = [0] * n
            for i in combo:
                mono[i] += 1
            yield tuple(mono)


def hilbert_function_oracle(I: MonomialIdeal, d: int) -> int:
    """Count monomials of degree <= d outside ``I`` by plain enumeration."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return sum(1 for m in _monomials_up_to(I.n, d) if not I.contains(m))


@dataclass(frozen=True)
class HilbertPolynomial:
    """Rational coefficients, constant term first."""

    coefficients: tuple

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        return sum(c * x ** i for i, c in enumerate(self.coefficients))

    def render(self, var: str = "x") -> str:
        parts = []
        for i in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            neg = c < 0
            a = -c if neg else c
            a_str = str(a.numerator) if a.denominator == 1 else str(a)
            if i == 0:
                body = a_str
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if a == 1 else f"{a_str}*{mono}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts) if parts else "0"

    __str__ = render


def _binomial_in_x(shift: int, n: int) -> list:
    """Coefficients of ``C(x + shift, n)`` as a polynomial in ``x``."""
    poly = [Fraction(1)]
    for j in range(n):
        # multiply by (x + shift - j)
        c = shift - j
        nxt = [Fraction(0)] * (len(poly) + 1)
        for i, a in enumerate(poly):
            nxt[i] += a * c
            nxt[i + 1] += a
        poly = nxt
    fact = Fraction(1)
    for j in range(2, n + 1):
        fact *= j
    return [a / fact for a in poly]


def hilbert_polynomial(H: HilbertSeries) -> HilbertPolynomial:
    """``p(x) = sum_i a_i C(x + n - i, n)``."""
    total = [Fraction(0)] * (H.n + 1)
    for i, a in enumerate(H.numerator):
        if a:
            for k, c in enumerate(_binomial_in_x(H.n - i, H.n)):
                total[k] += a * c
    return HilbertPolynomial(_trim(total))


def krull_dimension_degcompat(G: GroebnerBasis, domain=None) -> int:
    """kdim(A) + deg(p) for a monic basis with respect to a degree-compatible order."""
    if not G.order.degree_compatible:
        raise OrderError(f"the Hilbert polynomial route needs a degree-compatible order, "
                         f"got {G.order}; use the combinatorial route for lex")
    require_free(G)
    if G.is_unit_ideal:
        raise UnitIdealError("the ideal is the unit ideal; the residue ring is zero")
    domain = domain or G.domain
    H = hilbert_series(MonomialIdeal.leading_ideal(G), order_key=G.order.key)
    p = hilbert_polynomial(H)
    return domain.krull_dim + p.degree
