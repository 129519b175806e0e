"""Strong Groebner bases over ZZ, Buchberger over fields, and the freeness test.

Over ZZ a basis is completed with both S-polynomials (cancel leading terms)
and G-polynomials (Bezout combination producing the gcd of the leading
coefficients), so the reduced result is a strong basis: every leading term of
the ideal is a term multiple of some ``lt(g)``.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass
from typing import Sequence

from .coeff import CoefficientDomain
from .polyring import (
    MonomialOrder, Polynomial, PolynomialRing, mono_coprime, mono_div,
    mono_divides, mono_lcm, reduce,
)

log = logging.getLogger(__name__)


class NotFreeError(Exception):
    """The residue ring has no free A-module representation (basis not monic)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple
    ring: PolynomialRing
    reduced: bool = True

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    @property
    def domain(self) -> CoefficientDomain:
        return self.ring.domain

    @property
    def monic(self) -> bool:
        return all(g.LC() == 1 for g in self.elements)

    @property
    def is_unit_ideal(self) -> bool:
        """True when the basis contains a unit constant."""
        dom = self.domain
        return any(g.is_constant() and dom.is_unit(g.LC()) for g in self.elements)

    def leading_monomials(self) -> list:
        return [g.LM() for g in self.elements]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def render(self) -> list:
        return [g.render() for g in self.elements]


@dataclass(frozen=True)
class LeadingCoeffIdeal:
    monomial: tuple
    generators: tuple
    gcd: object


@dataclass(frozen=True)
class FreenessReport:
    is_free: bool
    witness: LeadingCoeffIdeal | None = None


# -- pair polynomials ------------------------------------------------------------

def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of the zero polynomial")
    dom = f.ring.domain
    cf, mf = f.leading_term(order)
    cg, mg = g.leading_term(order)
    m = mono_lcm(mf, mg)
    c = dom.lcm(cf, cg)
    return (f.mul_term(dom.exact_div(c, cf), mono_div(m, mf))
            - g.mul_term(dom.exact_div(c, cg), mono_div(m, mg)))


def g_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    if f.is_zero() or g.is_zero():
        raise ValueError("G-polynomial of the zero polynomial")
    dom = f.ring.domain
    if dom.is_field:
        raise ValueError("G-polynomials are only defined over ZZ")
    cf, mf = f.leading_term(order)
    cg, mg = g.leading_term(order)
    m = mono_lcm(mf, mg)
    _, u, v = dom.ext_gcd(cf, cg)
    return f.mul_term(u, mono_div(m, mf)) + g.mul_term(v, mono_div(m, mg))


def _needs_gpoly(dom, cf, cg) -> bool:
    return not dom.is_field and not (dom.divides(cf, cg) or dom.divides(cg, cf))


def _normalize(f: Polynomial) -> Polynomial:
    u = f.ring.domain.unit_normal(f.LC())
    return f if u == 1 else f.scale(u)


# -- Buchberger ----------------------------------------------------------------------

def strong_groebner(gens: Sequence[Polynomial], order: MonomialOrder | None = None) -> GroebnerBasis:
    """Reduced (strong, over ZZ) Groebner basis of the ideal generated by ``gens``."""
    gens = list(gens)
    if not gens:
        raise ValueError("no generators given")
    ring = gens[0].ring
    if order is not None and order != ring.order:
        ring = ring.with_order(order)
        gens = [ring.from_dict(g.terms) for g in gens]
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("all generators are zero")

    basis, _ = _complete(gens, ring)
    while True:
        B = _interreduce(basis, ring)
        # certificate: B still generates the input and completing B adds nothing
        if all(reduce(g, B).is_zero() for g in gens):
            basis, grew = _complete(B, ring)
            if not grew:
                return GroebnerBasis(tuple(B), ring, reduced=True)
        else:
            basis, _ = _complete(B + gens, ring)


def _complete(F: list, ring: PolynomialRing):
    """Buchberger completion with S-pairs (and G-pairs over ZZ).

    Returns the active basis and whether anything beyond ``F`` was added.
    """
    dom = ring.domain
    key = ring.order.key
    G: list = []          # retired slots hold None
    pairs: list = []      # heap of (lcm key, i, j)
    grew = False

    def active():
        return [g for g in G if g is not None]

    def add(h: Polynomial):
        h = _normalize(h)
        ch, mh = h.leading_term()
        G.append(h)
        j = len(G) - 1
        retired = []
        for i in range(j):
            g = G[i]
            if g is None:
                continue
            cg, mg = g.leading_term()
            if mono_divides(mh, mg) and dom.divides(ch, cg):
                G[i] = None
                retired.append(g)
            else:
                heapq.heappush(pairs, (key(mono_lcm(mg, mh)), i, j))
        for g in retired:
            r = reduce(g, active())
            if not r.is_zero():
                add(r)

    for f in F:
        f = reduce(f, active()) if G else f
        if not f.is_zero():
            add(f)

    while pairs:
        # normal strategy: smallest lcm of leading monomials first
        _, i, j = heapq.heappop(pairs)
        f, g = G[i], G[j]
        if f is None or g is None:
            continue
        cf, mf = f.leading_term()
        cg, mg = g.leading_term()
        if not (mono_coprime(mf, mg) and dom.gcd(cf, cg) == 1):
            h = reduce(s_polynomial(f, g), active())
            if not h.is_zero():
                grew = True
                add(h)
        if _needs_gpoly(dom, cf, cg) and G[i] is not None and G[j] is not None:
            h = reduce(g_polynomial(f, g), active())
            if not h.is_zero():
                grew = True
                add(h)
    basis = active()
    log.debug("completed basis with %d elements before reduction", len(basis))
    return basis, grew


def _interreduce(G: list, ring: PolynomialRing) -> list:
    """Minimalize, tail-reduce and sort a completed basis."""
    dom = ring.domain
    key = ring.order.key
    G = sorted((_normalize(g) for g in G), key=lambda g: (key(g.LM()), abs(g.LC())))
    kept: list[Polynomial] = []
    for g in G:
        cg, mg = g.leading_term()
        if any(mono_divides(h.LM(), mg) and dom.divides(h.LC(), cg) for h in kept):
            continue
        kept.append(g)
    out = []
    for i, g in enumerate(kept):
        lt = ring.term(*g.leading_term())
        others = kept[:i] + kept[i + 1:]
        tail = g - lt
        out.append(lt + reduce(tail, others) if others else g)
    return sorted(out, key=lambda g: key(g.LM()))


def is_groebner(G: Sequence[Polynomial], order: MonomialOrder | None = None) -> bool:
    """Buchberger criterion: every S-polynomial (and G-polynomial over ZZ) reduces to 0."""
    G = list(G)
    if not G:
        return True
    dom = G[0].ring.domain
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if not reduce(s_polynomial(G[i], G[j], order), G, order).is_zero():
                return False
            if not dom.is_field:
                if not reduce(g_polynomial(G[i], G[j], order), G, order).is_zero():
                    return False
    return True


# -- leading coefficient ideals and freeness -------------------------------------------

def leading_coeff_ideal(G: GroebnerBasis, m) -> LeadingCoeffIdeal:
    """Ideal of A generated by ``lc(g)`` over the ``g`` whose leading monomial divides ``m``."""
    dom = G.domain
    m = tuple(m)
    lcs = tuple(g.LC() for g in G.elements if mono_divides(g.LM(), m))
    d = dom.zero
    for c in lcs:
        d = dom.gcd(d, c)
    return LeadingCoeffIdeal(m, lcs, d)


def is_free_representation(G: GroebnerBasis) -> FreenessReport:
    for g in G.elements:
        if g.LC() != 1:
            return FreenessReport(False, leading_coeff_ideal(G, g.LM()))
    return FreenessReport(True)


def require_free(G: GroebnerBasis) -> None:
    report = is_free_representation(G)
    if not report.is_free:
        w = report.witness
        raise NotFreeError(
            f"not a free representation: leading coefficient {w.gcd} at "
            f"{G.ring.mono_str(w.monomial)} is not a unit", w)


def extend_mod_p(G: GroebnerBasis, p: int) -> GroebnerBasis:
    """Image of a monic basis over ZZ under coefficient reduction mod ``p``."""
    if G.domain.kind != "ZZ":
        raise ValueError("extend_mod_p expects a basis over ZZ")
    require_free(G)
    target = G.ring.with_domain(CoefficientDomain.prime_field(p))
    image = tuple(g.map_coeffs(target, lambda c: c % p) for g in G.elements)
    if [g.LM() for g in image] != G.leading_monomials():
        raise AssertionError("leading monomials changed under reduction mod p")
    if not is_groebner(image):
        raise AssertionError(f"image mod {p} fails the Buchberger criterion")
    return GroebnerBasis(image, target, reduced=True)
