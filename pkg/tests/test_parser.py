import random

import pytest
from hypothesis import given, settings, strategies as st

from freedim import QQ, ZZ, CoefficientDomain, PolynomialRing
from freedim.parser import ParseError, ProblemError, parse_inline_ideal, parse_polynomial, parse_problem

from conftest import random_polynomial


@pytest.fixture
def R():
    return PolynomialRing(ZZ, ["x", "y", "z"])


def test_examples(R):
    assert parse_polynomial("x^2*y + x + 1", R).terms == {(2, 1, 0): 1, (1, 0, 0): 1, (0, 0, 0): 1}
    assert parse_polynomial("y + 6*z", R).terms == {(0, 1, 0): 1, (0, 0, 1): 6}
    assert parse_polynomial("0", R).is_zero()


def test_precedence(R):
    x, y, z = R.gens()
    assert parse_polynomial("-x^2", R) == -(x**2)
    assert parse_polynomial("-x*y + z", R) == -(x * y) + z
    assert parse_polynomial("2*(x + y)^2", R) == 2 * (x + y) ** 2
    assert parse_polynomial("x - -y", R) == x + y
    assert parse_polynomial("  x*  y  -1 ", R) == x * y - 1
    assert parse_polynomial("(x - y)*(x + y) - x^2", R) == -(y**2)


def test_like_terms_combined(R):
    assert parse_polynomial("x + x + 2*x - 4*x", R).is_zero()


@pytest.mark.parametrize("text, fragment", [
    ("x*w", "unknown identifier 'w'"),
    ("x^-1", "negative exponent"),
    ("x^1.5", "malformed"),
    ("x^y", "malformed exponent"),
    ("2x", "malformed number"),
    ("x y", "explicit '*'"),
    ("x +", "unexpected end"),
    ("(x + y", "expected ')'"),
    ("1/2*x", "rational literal"),
    ("x $ y", "unexpected character"),
    ("", "empty expression"),
])
def test_errors(R, text, fragment):
    with pytest.raises(ParseError) as exc:
        parse_polynomial(text, R)
    assert fragment in str(exc.value)


def test_error_position(R):
    with pytest.raises(ParseError) as exc:
        parse_polynomial("x + y*w", R, line=4)
    assert (exc.value.line, exc.value.column) == (4, 7)


def test_rationals_over_fields():
    Q = PolynomialRing(QQ, ["x"])
    assert parse_polynomial("3/4*x", Q).LC() == QQ(3) / 4
    F7 = PolynomialRing(CoefficientDomain.prime_field(7), ["x"])
    assert parse_polynomial("1/2*x + 9", F7).terms == {(1,): 4, (0,): 2}
    with pytest.raises(ParseError):
        parse_polynomial("1/7", F7)


@settings(max_examples=150)
@given(seed=st.integers(0, 10**6), domain=st.sampled_from([ZZ, QQ, CoefficientDomain.prime_field(5)]),
       order=st.sampled_from(["lex", "deglex", "degrevlex"]))
def test_render_round_trip(seed, domain, order):
    ring = PolynomialRing(domain, ["x", "y", "z1"], order)
    f = random_polynomial(random.Random(seed), ring, max_degree=5, max_terms=6, coeff_range=50)
    if domain == QQ:
        f = f * ring.constant(QQ(1) / 3)
    assert parse_polynomial(f.render(), ring) == f


FIRST = """# first example
ring: ZZ
vars: x,y,z
order: lex
ideal: [x*y, x*z]
"""


def test_problem_examples():
    spec = parse_problem(FIRST)
    assert str(spec.domain) == "ZZ" and spec.variables == ("x", "y", "z")
    assert spec.order.kind == "lex"
    assert [g.render() for g in spec.generators] == ["x*y", "x*z"]
    spec = parse_problem("ring: QQ\nvars: x,y\norder: deglex\nideal: [x*y + 1]\n")
    assert spec.domain == QQ and [g.render() for g in spec.generators] == ["x*y + 1"]


def test_problem_one_generator_per_line():
    spec = parse_problem("ring: Fp:7\nvars: x, y\norder: degrevlex\nideal:\n  x^2 + 1  # comment\n\n  y - 8\n")
    assert [g.render() for g in spec.generators] == ["x^2 + 1", "y + 6"]


def test_problem_multiline_bracket():
    spec = parse_problem("ring: ZZ\nvars: x,y\norder: lex\nideal: [x*y,\n   x^2 + (y - 1),\n   y]\n")
    assert len(spec.generators) == 3


def test_problem_keys_in_any_order():
    spec = parse_problem("ideal: [x]\norder: lex\nvars: x\nring: QQ\n")
    assert spec.generators[0].render() == "x"


def test_missing_key():
    with pytest.raises(ProblemError, match="'order'"):
        parse_problem("ring: ZZ\nvars: x,y,z\nideal: [x*y, x*z]\n")


@pytest.mark.parametrize("text, match", [
    ("ring: ZZ\nring: QQ\nvars: x\norder: lex\nideal: [x]", "duplicate key"),
    ("ring: ZZ\nvars: x\norder: lex\nideal: []", "no generators"),
    ("ring: ZZ\nvars: x\norder: lex\nideal:\n", "no generators"),
    ("ring: ZZ\nvars: x,x\norder: lex\nideal: [x]", "duplicate variables"),
    ("ring: ZZ\nvars: x\norder: grlex\nideal: [x]", "unknown monomial order"),
    ("ring: RR\nvars: x\norder: lex\nideal: [x]", "unknown ring"),
    ("ring: ZZ\nvars: x\nfoo: 1\norder: lex\nideal: [x]", "unknown key"),
    ("ring: ZZ\nvars: x\norder: lex\nideal: [x", "unterminated"),
])
def test_problem_errors(text, match):
    with pytest.raises(ProblemError, match=match):
        parse_problem(text)


def test_generator_error_reports_file_position():
    with pytest.raises(ParseError) as exc:
        parse_problem("ring: ZZ\nvars: x,y\norder: lex\nideal: [x*y, x*q]\n")
    assert exc.value.line == 4 and exc.value.column == 16


def test_inline_ideal(R):
    gens = parse_inline_ideal("x*y; x*z;", R)
    assert [g.render() for g in gens] == ["x*y", "x*z"]
    with pytest.raises(ProblemError):
        parse_inline_ideal(" ; ", R)
