import itertools
import random

import pytest

from freedim import QQ, ZZ, CoefficientDomain, PolynomialRing
from freedim.groebner import (
    GroebnerBasis, NotFreeError, extend_mod_p, g_polynomial, is_free_representation,
    is_groebner, leading_coeff_ideal, s_polynomial, strong_groebner,
)
from freedim.polyring import DEGLEX, DEGREVLEX, LEX, reduce

from conftest import F5, random_polynomial


def basis_strs(G):
    return [g.render() for g in G]


def test_s_polynomial_examples(zxyz):
    x, y, z = zxyz.gens()
    assert s_polynomial(3 * x, 5 * x).is_zero()
    assert reduce(s_polynomial(x * y, x * z), [x * y, x * z]).is_zero()
    pair = [x**2 + 2 * x + 1, y**3 + 2 * z + 1]
    assert reduce(s_polynomial(*pair), pair).is_zero()


def test_s_polynomial_zero_input(zxyz):
    with pytest.raises(ValueError):
        s_polynomial(zxyz.zero(), zxyz.gen(0))


def test_g_polynomial_examples(zxyz):
    x, y, _ = zxyz.gens()
    assert g_polynomial(3 * x, 5 * x) == x
    assert g_polynomial(2 * x, 4 * y).leading_term() == (2, (1, 1, 0))
    assert g_polynomial(x, y).leading_term() == (1, (1, 1, 0))


def test_g_polynomial_rejected_over_field(qxy):
    with pytest.raises(ValueError):
        g_polynomial(qxy.gen(0), qxy.gen(1))


def test_strong_groebner_examples(zxyz):
    x, y, z = zxyz.gens()
    assert basis_strs(strong_groebner([3 * x, 5 * x])) == ["x"]
    G = strong_groebner([x**2 * y + x + 1, y**3 + z + 1])
    assert basis_strs(G) == ["y^3 + z + 1", "x^2*z + x^2 - x*y^2 - y^2", "x^2*y + x + 1"]
    assert set(basis_strs(strong_groebner([x * y, x * z]))) == {"x*y", "x*z"}


def test_strong_groebner_rejects_zero(zxyz):
    with pytest.raises(ValueError):
        strong_groebner([zxyz.zero()])
    with pytest.raises(ValueError):
        strong_groebner([])


def test_unit_and_constant_ideals(zxyz):
    x, y, _ = zxyz.gens()
    G = strong_groebner([x, x + 1])
    assert basis_strs(G) == ["1"] and G.is_unit_ideal and G.monic
    G2 = strong_groebner([2 * x, 2 * x + 2])
    assert basis_strs(G2) == ["2"]
    assert not is_free_representation(G2).is_free
    Q = PolynomialRing(QQ, ["x", "y"])
    assert basis_strs(strong_groebner([Q.constant(3)])) == ["1"]


def test_integer_specific_basis(zxyz):
    x, y, _ = zxyz.gens()
    # <2x, 3y> over ZZ: strong basis needs the G-polynomial-free pair plus xy
    G = strong_groebner([2 * x, 3 * y])
    assert basis_strs(G) == ["3*y", "2*x", "x*y"]
    assert is_groebner(G.elements)


def test_canonicity(zxyz):
    x, y, _ = zxyz.gens()
    assert basis_strs(strong_groebner([3 * x, 5 * x])) == basis_strs(strong_groebner([x, 15 * x]))
    a = strong_groebner([4 * x * y + 2, 6 * y**2 - x])
    b = strong_groebner([-(4 * x * y + 2), 6 * y**2 - x, (4 * x * y + 2) * y])
    assert basis_strs(a) == basis_strs(b)


def test_unit_scaling_invariance():
    rng = random.Random(11)
    for order in (LEX, DEGREVLEX):
        R = PolynomialRing(ZZ, ["x", "y", "z"], order)
        for _ in range(25):
            gens = [g for g in (random_polynomial(rng, R, max_degree=2) for _ in range(3)) if g]
            if not gens:
                continue
            flipped = [-g if rng.random() < 0.5 else g for g in gens]
            assert basis_strs(strong_groebner(gens)) == basis_strs(strong_groebner(flipped))


@pytest.mark.parametrize("domain", [ZZ, QQ, F5], ids=str)
@pytest.mark.parametrize("order", [LEX, DEGLEX, DEGREVLEX], ids=str)
def test_random_bases_are_groebner(domain, order):
    rng = random.Random(hash((str(domain), order.kind)) & 0xFFFF)
    R = PolynomialRing(domain, ["x", "y", "z"], order)
    for _ in range(15):
        gens = [g for g in (random_polynomial(rng, R, max_degree=2) for _ in range(3)) if g]
        if not gens:
            continue
        G = strong_groebner(gens)
        assert is_groebner(G.elements)
        assert all(reduce(g, G.elements).is_zero() for g in gens)
        lms = [g.LM() for g in G]
        assert lms == sorted(lms, key=order.key)
        assert all(g.LC() > 0 for g in G)
        if domain.is_field:
            assert G.monic


def test_order_argument_overrides_ring_order(zxyz):
    x, y, z = zxyz.gens()
    G = strong_groebner([x**2 + z * x, y + 6 * z], order=DEGLEX)
    assert G.order == DEGLEX
    assert [g.LM() for g in G] == [(0, 1, 0), (2, 0, 0)]


def test_leading_coeff_ideal_examples(zxyz):
    x, y, z = zxyz.gens()
    raw = GroebnerBasis((3 * x, 5 * x), zxyz, reduced=False)
    lci = leading_coeff_ideal(raw, (1, 0, 0))
    assert lci.generators == (3, 5) and lci.gcd == 1
    G = strong_groebner([x * y, x * z])
    lci = leading_coeff_ideal(G, (0, 1, 0))
    assert lci.generators == () and lci.gcd == 0
    G2 = strong_groebner([2 * x])
    lci = leading_coeff_ideal(G2, (2, 0, 0))
    assert lci.generators == (2,) and lci.gcd == 2


def test_freeness_examples(zxyz):
    x, y, z = zxyz.gens()
    assert is_free_representation(strong_groebner([3 * x, 5 * x])).is_free
    report = is_free_representation(strong_groebner([2 * x]))
    assert not report.is_free and report.witness.gcd == 2
    Q = PolynomialRing(QQ, ["x", "y"])
    assert is_free_representation(strong_groebner([Q.parse("3*x*y + 2"), Q.parse("5*y^2")])).is_free


def _standard_monomials(G, n, max_degree):
    for m in itertools.product(range(max_degree + 1), repeat=n):
        if not any(all(a <= b for a, b in zip(lm, m)) for lm in G.leading_monomials()):
            yield m


def test_freeness_agrees_with_leading_coefficient_ideals():
    rng = random.Random(17)
    R = PolynomialRing(ZZ, ["x", "y", "z"], LEX)
    seen = {True: 0, False: 0}
    for _ in range(60):
        gens = [g for g in (random_polynomial(rng, R, max_degree=2, max_terms=2) for _ in range(2)) if g]
        if not gens:
            continue
        G = strong_groebner(gens)
        free = is_free_representation(G).is_free
        seen[free] += 1
        units = all(ZZ.is_unit(leading_coeff_ideal(G, lm).gcd) for lm in G.leading_monomials())
        assert free == units
        if free:
            for m in _standard_monomials(G, 3, 2):
                assert leading_coeff_ideal(G, m).gcd == 0
    assert seen[True] and seen[False]


GOLDEN = [
    ["x*y", "x*z"],
    ["x^2*y + x + 1", "y^3 + z + 1"],
    ["x^2 + 2*x + 1", "y^3 + 2*z + 1"],
    ["x^2 + z*x", "y + 6*z"],
]


def test_extend_mod_p_examples(zxyz):
    G = strong_groebner([zxyz.parse(s) for s in ["x*y", "x*z"]])
    assert basis_strs(extend_mod_p(G, 7)) == basis_strs(G)
    R = zxyz.with_order(DEGLEX)
    G = strong_groebner([R.parse("y + 6*z"), R.parse("x^2 + z*x")])
    image = extend_mod_p(G, 5)
    assert basis_strs(image) == ["y + z", "x^2 + x*z"]
    # independent oracle: recompute the basis directly over F5
    F5R = R.with_domain(F5)
    direct = strong_groebner([F5R.parse("y + 6*z"), F5R.parse("x^2 + z*x")])
    assert basis_strs(direct) == basis_strs(image)


def test_extend_mod_3_matches_direct_computation(zxyz):
    gens = ["x^2*y + x + 1", "y^3 + z + 1"]
    G = strong_groebner([zxyz.parse(s) for s in gens])
    image = extend_mod_p(G, 3)
    F3R = zxyz.with_domain(CoefficientDomain.prime_field(3))
    direct = strong_groebner([F3R.parse(s) for s in gens])
    assert basis_strs(direct) == basis_strs(image)


def test_extend_mod_p_rejects_non_monic(zxyz):
    with pytest.raises(NotFreeError):
        extend_mod_p(strong_groebner([2 * zxyz.gen(0)]), 3)
