"""Expression front end: AST, tokenizer, recursive-descent parser, printer,
and evaluation of an expression into a real.

Grammar, loosest binding first:

    expr   :=  term (('+' | '-') term)*
    term   :=  factor (('*' | '/') factor)*
    factor :=  '-' factor | atom
    atom   :=  NUMBER ('/' NUMBER)?            rational literal, see below
             | 'max' '(' expr ',' expr ')'
             | 'min' '(' expr ',' expr ')'
             | 'abs' '(' expr ')'
             | 'below' '(' signed literal ')'
             | '(' expr ')'

NUMBER is an integer or an exact decimal (3.14 is the rational 157/50).  Two
integer literals joined by '/' form a single rational literal, so 1/3 + 1/6
adds two literals rather than dividing; '/' anywhere else is real division,
which must certify its denominator apart from zero when evaluated.  A literal
with denominator 0 falls back to division, so 1/0 fails at evaluation, not at
parse time.
"""

from dataclasses import dataclass
from fractions import Fraction

from .completion import limit
from .rational import format_rat
from .reals import (absolute, add, find_apart_witness, from_rat, join, meet,
                    mul, neg, recip_witnessed, sub)


@dataclass(frozen=True)
class RatLit:
    value: Fraction


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Div:
    left: object
    right: object
    witness_fuel: int | None = None  # per-node override of the search budget


@dataclass(frozen=True)
class Max:
    left: object
    right: object


@dataclass(frozen=True)
class Min:
    left: object
    right: object


@dataclass(frozen=True)
class Abs:
    operand: object


@dataclass(frozen=True)
class FromBelow:
    """The canonical strictly-increasing approximation of a rational:
    the limit of eps -> value - eps.  Denotes value, but never reports it
    exactly, which makes it the stock generic-path test subject."""
    value: Fraction


class ParseError(ValueError):
    """Syntax error with the 0-based offset of the offending token."""

    def __init__(self, message, position):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


class WitnessSearchError(ArithmeticError):
    """A division could not certify its denominator apart from zero."""

    def __init__(self, fuel):
        super().__init__(
            "no apartness witness for a denominator within fuel %d; "
            "it may be zero or too close to zero" % fuel)
        self.fuel = fuel


_SYMBOLS = "+-*/(),"


def tokenize(text):
    """Split text into (kind, value, position) tokens.

    Kinds: 'int' and 'dec' carry a Fraction and keep the distinction so the
    parser can fold p/q literals; 'name' carries an identifier; 'sym' one of
    + - * / ( ) ,; 'end' marks exhaustion.
    """
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in _SYMBOLS:
            tokens.append(("sym", c, i))
            i += 1
            continue
        if c.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            kind = "int"
            if i < n and text[i] == "." and i + 1 < n and text[i + 1].isdigit():
                kind = "dec"
                i += 1
                while i < n and text[i].isdigit():
                    i += 1
            tokens.append((kind, Fraction(text[start:i]), start))
            continue
        if c.isalpha():
            start = i
            while i < n and text[i].isalpha():
                i += 1
            tokens.append(("name", text[start:i], start))
            continue
        raise ParseError("unexpected character %r" % c, i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, tok):
        kind, value, position = tok
        if kind == "end":
            raise ParseError("unexpected end of input", position)
        shown = value if kind in ("name", "sym") else format_rat(value)
        raise ParseError("unexpected token '%s'" % shown, position)

    def expect(self, symbol):
        tok = self.advance()
        if tok[0] != "sym" or tok[1] != symbol:
            self.fail(tok)

    def expr(self):
        node = self.term()
        while self.peek()[0] == "sym" and self.peek()[1] in "+-":
            op = self.advance()[1]
            right = self.term()
            node = Add(node, right) if op == "+" else Sub(node, right)
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] == "sym" and self.peek()[1] in "*/":
            op = self.advance()[1]
            right = self.factor()
            node = Mul(node, right) if op == "*" else Div(node, right)
        return node

    def factor(self):
        tok = self.peek()
        if tok[0] == "sym" and tok[1] == "-":
            self.advance()
            return Neg(self.factor())
        return self.atom()

    def literal(self):
        # A number, folding integer/integer into one rational (nonzero
        # denominators only; p/0 stays a division and fails at evaluation).
        tok = self.advance()
        if tok[0] not in ("int", "dec"):
            self.fail(tok)
        if (tok[0] == "int"
                and self.peek()[0] == "sym" and self.peek()[1] == "/"
                and self.tokens[self.pos + 1][0] == "int"
                and self.tokens[self.pos + 1][1] != 0):
            self.advance()
            den = self.advance()[1]
            return RatLit(tok[1] / den)
        return RatLit(tok[1])

    def signed_literal(self):
        if self.peek()[0] == "sym" and self.peek()[1] == "-":
            self.advance()
            return RatLit(-self.literal().value)
        return self.literal()

    def atom(self):
        tok = self.peek()
        if tok[0] in ("int", "dec"):
            return self.literal()
        if tok[0] == "name":
            self.advance()
            name = tok[1]
            if name == "max" or name == "min":
                self.expect("(")
                left = self.expr()
                self.expect(",")
                right = self.expr()
                self.expect(")")
                return Max(left, right) if name == "max" else Min(left, right)
            if name == "abs":
                self.expect("(")
                operand = self.expr()
                self.expect(")")
                return Abs(operand)
            if name == "below":
                self.expect("(")
                lit = self.signed_literal()
                self.expect(")")
                return FromBelow(lit.value)
            raise ParseError("unknown function '%s'" % name, tok[2])
        if tok[0] == "sym" and tok[1] == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        self.fail(tok)


def parse(text):
    """Parse an expression; raises ParseError with a position on bad input."""
    parser = _Parser(tokenize(text))
    node = parser.expr()
    tail = parser.peek()
    if tail[0] != "end":
        parser.fail(tail)
    return node


def format_expr(node):
    """Print an expression so that parsing the output reproduces the AST.

    Binary operations are fully parenthesized; a division's right operand
    gets its own parentheses so an integer/integer pair is not re-folded
    into a literal.
    """
    if isinstance(node, RatLit):
        return format_rat(node.value)
    if isinstance(node, FromBelow):
        return "below(%s)" % format_rat(node.value)
    if isinstance(node, Neg):
        return "-%s" % format_expr(node.operand)
    if isinstance(node, Abs):
        return "abs(%s)" % format_expr(node.operand)
    if isinstance(node, Max):
        return "max(%s, %s)" % (format_expr(node.left), format_expr(node.right))
    if isinstance(node, Min):
        return "min(%s, %s)" % (format_expr(node.left), format_expr(node.right))
    if isinstance(node, Div):
        return "(%s / (%s))" % (format_expr(node.left), format_expr(node.right))
    for cls, op in ((Add, "+"), (Sub, "-"), (Mul, "*")):
        if isinstance(node, cls):
            return "(%s %s %s)" % (format_expr(node.left), op, format_expr(node.right))
    raise TypeError("not an expression node: %r" % (node,))


def build_real(node, witness_fuel=64):
    """Evaluate an AST into a real.

    Division searches an apartness witness for its denominator, using the
    node's own budget when it has one and witness_fuel otherwise; a failed
    search raises WitnessSearchError rather than returning a bogus real.
    """
    if isinstance(node, RatLit):
        return from_rat(node.value)
    if isinstance(node, FromBelow):
        value = node.value
        return limit(lambda eps: from_rat(value - eps))
    if isinstance(node, Neg):
        return neg(build_real(node.operand, witness_fuel))
    if isinstance(node, Abs):
        return absolute(build_real(node.operand, witness_fuel))
    if isinstance(node, Add):
        return add(build_real(node.left, witness_fuel),
                   build_real(node.right, witness_fuel))
    if isinstance(node, Sub):
        return sub(build_real(node.left, witness_fuel),
                   build_real(node.right, witness_fuel))
    if isinstance(node, Mul):
        return mul(build_real(node.left, witness_fuel),
                   build_real(node.right, witness_fuel))
    if isinstance(node, Max):
        return join(build_real(node.left, witness_fuel),
                    build_real(node.right, witness_fuel))
    if isinstance(node, Min):
        return meet(build_real(node.left, witness_fuel),
                    build_real(node.right, witness_fuel))
    if isinstance(node, Div):
        numer = build_real(node.left, witness_fuel)
        denom = build_real(node.right, witness_fuel)
        fuel = node.witness_fuel if node.witness_fuel is not None else witness_fuel
        witness = find_apart_witness(denom, fuel)
        if witness is None:
            raise WitnessSearchError(fuel)
        return mul(numer, recip_witnessed(denom, witness))
    raise TypeError("not an expression node: %r" % (node,))
