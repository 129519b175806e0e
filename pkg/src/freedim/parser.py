"""Parser for polynomial expressions and problem files.

Expression grammar (``^`` binds tightest, then ``*``, then unary minus,
then binary ``+``/``-``)::

    expr    := signed (("+" | "-") signed)*
    signed  := ("-" | "+") signed | product
    product := power ("*" power)*
    power   := atom ("^" INTEGER)?
    atom    := NUMBER | IDENT | "(" expr ")"

``NUMBER`` is an integer or a rational literal ``p/q``.

Problem files are line oriented::

    ring: ZZ
    vars: x, y, z
    order: lex
    ideal: [x*y, x*z]

``ideal:`` takes either a bracketed comma list (which may span lines) or one
generator per following line.  ``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .coeff import CoefficientDomain, DomainError
from .polyring import MonomialOrder, Polynomial, PolynomialRing


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<number>\d+(?:/\d+)?(?![\w.]))
  | (?P<badnum>\d[\w.]*)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*^()])
""", re.VERBOSE)


@dataclass
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str, line: int, column: int) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        col = column + pos
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind == "badnum":
            raise ParseError(f"malformed number {m.group()!r}", line, col)
        if kind != "ws":
            tokens.append(_Token(kind, m.group(), line, col))
        pos = m.end()
    tokens.append(_Token("end", "", line, column + len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolynomialRing, line: int, column: int):
        self.ring = ring
        self.tokens = _tokenize(text, line, column)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def error(self, message, tok=None):
        tok = tok or self.tok
        return ParseError(message, tok.line, tok.column)

    def accept(self, text) -> bool:
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def parse(self) -> Polynomial:
        if self.tok.kind == "end":
            raise self.error("empty expression")
        result = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}; products need an explicit '*'")
        return result

    def expr(self) -> Polynomial:
        result = self.signed()
        while True:
            if self.accept("+"):
                result = result + self.signed()
            elif self.accept("-"):
                result = result - self.signed()
            else:
                return result

    def signed(self) -> Polynomial:
        if self.accept("-"):
            return -self.signed()
        if self.accept("+"):
            return self.signed()
        return self.product()

    def product(self) -> Polynomial:
        result = self.power()
        while self.accept("*"):
            result = result * self.power()
        return result

    def power(self) -> Polynomial:
        base = self.atom()
        if self.accept("^"):
            tok = self.tok
            if tok.kind == "op" and tok.text == "-":
                raise self.error("negative exponent")
            if tok.kind != "number" or "/" in tok.text:
                raise self.error(f"malformed exponent {tok.text!r}")
            self.i += 1
            return base ** int(tok.text)
        return base

    def atom(self) -> Polynomial:
        tok = self.tok
        if tok.kind == "number":
            self.i += 1
            value = Fraction(tok.text)
            if "/" in tok.text and not self.ring.domain.is_field:
                raise self.error(f"rational literal {tok.text} not allowed over "
                                 f"{self.ring.domain}", tok)
            try:
                return self.ring.constant(value)
            except (DomainError, ZeroDivisionError) as exc:
                raise self.error(str(exc), tok) from None
        if tok.kind == "ident":
            self.i += 1
            if tok.text not in self.ring.variables:
                raise self.error(f"unknown identifier {tok.text!r}", tok)
            return self.ring.gen(tok.text)
        if self.accept("("):
            result = self.expr()
            if not self.accept(")"):
                raise self.error("expected ')'")
            return result
        if tok.kind == "end":
            raise self.error("unexpected end of expression")
        raise self.error(f"unexpected {tok.text!r}")


def parse_polynomial(text: str, ring: PolynomialRing, line: int = 1, column: int = 1) -> Polynomial:
    return _Parser(text, ring, line, column).parse()


# -- problem files -------------------------------------------------------------------

KEYS = ("ring", "vars", "order", "ideal")
_HEADER = re.compile(r"^\s*([A-Za-z_]+)\s*:(.*)$")


class ProblemError(ValueError):
    """Malformed problem description."""


@dataclass
class ProblemSpec:
    ring: PolynomialRing
    generators: list

    @property
    def domain(self) -> CoefficientDomain:
        return self.ring.domain

    @property
    def variables(self) -> tuple:
        return self.ring.variables

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order


def parse_variables(text: str) -> list:
    names = [v.strip() for v in text.split(",")]
    if not names or any(not v for v in names):
        raise ProblemError(f"malformed variable list {text!r}")
    for v in names:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v):
            raise ProblemError(f"invalid variable name {v!r}")
    if len(set(names)) != len(names):
        raise ProblemError(f"duplicate variables in {text!r}")
    return names


def make_ring(ring: str, variables: str, order: str) -> PolynomialRing:
    try:
        domain = CoefficientDomain.parse(ring)
    except DomainError as exc:
        raise ProblemError(str(exc)) from None
    try:
        mo = MonomialOrder(order.strip())
    except ValueError as exc:
        raise ProblemError(str(exc)) from None
    return PolynomialRing(domain, parse_variables(variables), mo)


def _split_top_level(text: str, start_col: int):
    """Split on commas outside parentheses, yielding (piece, column)."""
    depth, last = 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            yield text[last:i], start_col + last
            last = i + 1
    yield text[last:], start_col + last


def _strip_comment(line: str) -> str:
    k = line.find("#")
    return line if k < 0 else line[:k]


def parse_problem(contents: str) -> ProblemSpec:
    headers: dict = {}
    ideal_items: list = []  # (text, line, column)
    lines = contents.splitlines()
    in_ideal = False
    bracket = None  # accumulated (line, column, text) fragments of a [...] list
    for lineno, raw in enumerate(lines, start=1):
        line = _strip_comment(raw)
        if bracket is not None:
            end = line.find("]")
            if end < 0:
                bracket.append((lineno, 1, line))
                continue
            bracket.append((lineno, 1, line[:end]))
            if line[end + 1:].strip():
                raise ParseError("text after ']'", lineno, end + 2)
            _collect_bracket(bracket, ideal_items)
            bracket = None
            in_ideal = False
            continue
        if not line.strip():
            continue
        m = _HEADER.match(line)
        if m and m.group(1) in KEYS:
            key, value = m.group(1), m.group(2)
            if key in headers:
                raise ProblemError(f"line {lineno}: duplicate key {key!r}")
            headers[key] = value.strip()
            in_ideal = key == "ideal"
            if in_ideal:
                col = m.start(2) + 1
                stripped = value.lstrip()
                col += len(value) - len(stripped)
                if stripped.startswith("["):
                    body = stripped[1:]
                    end = body.find("]")
                    if end >= 0:
                        if body[end + 1:].strip():
                            raise ParseError("text after ']'", lineno, col + end + 2)
                        _collect_bracket([(lineno, col + 1, body[:end])], ideal_items)
                        in_ideal = False
                    else:
                        bracket = [(lineno, col + 1, body)]
                elif stripped.strip():
                    ideal_items.append((stripped.rstrip(), lineno, col))
            continue
        if m and not in_ideal:
            raise ProblemError(f"line {lineno}: unknown key {m.group(1)!r}")
        if in_ideal:
            text = line.strip()
            ideal_items.append((text, lineno, line.index(text) + 1))
            continue
        raise ProblemError(f"line {lineno}: expected 'key: value'")
    if bracket is not None:
        raise ProblemError("unterminated '[' in ideal")
    for key in KEYS:
        if key not in headers:
            raise ProblemError(f"missing required key {key!r}")
    ring = make_ring(headers["ring"], headers["vars"], headers["order"])
    if not ideal_items:
        raise ProblemError("the ideal has no generators")
    gens = [parse_polynomial(text, ring, line, col) for text, line, col in ideal_items]
    return ProblemSpec(ring, gens)


def _collect_bracket(fragments, out):
    for lineno, col, text in fragments:
        for piece, pcol in _split_top_level(text, col):
            if piece.strip():
                lead = len(piece) - len(piece.lstrip())
                out.append((piece.strip(), lineno, pcol + lead))


def parse_inline_ideal(text: str, ring: PolynomialRing) -> list:
    """Generators separated by ``;`` as given to ``--ideal``."""
    gens = []
    col = 1
    for piece in text.split(";"):
        if piece.strip():
            lead = len(piece) - len(piece.lstrip())
            gens.append(parse_polynomial(piece.strip(), ring, 1, col + lead))
        col += len(piece) + 1
    if not gens:
        raise ProblemError("the ideal has no generators")
    return gens
