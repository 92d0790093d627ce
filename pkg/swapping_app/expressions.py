"""
The expression language of the command line.

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := INT ('/' INT)? | 'p(' ID ',' ID ')'
            | 'cr(' ID ',' ID ',' ID ',' ID ')'
            | 'det(' '[' IDs ']' ',' '[' IDs ']' ')'
            | 'br(' expr ',' expr ')' | '-' factor | '(' expr ')'
    ID     := [A-Za-z][A-Za-z0-9_]*
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import IllegalCrossFraction, ParseError

TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<id>[A-Za-z][A-Za-z0-9_]*)|(?P<punct>[()\[\],+\-*/]))")
KEYWORDS = {'p', 'cr', 'det', 'br'}


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Pair:
    x: str
    y: str


@dataclass(frozen=True)
class Cross:
    x: str
    y: str
    z: str
    t: str


@dataclass(frozen=True)
class Det:
    xs: tuple
    ys: tuple


@dataclass(frozen=True)
class Bracket:
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text):
    tokens = []
    pos = 0
    line, line_start = 1, 0
    while True:
        while pos < len(text) and text[pos].isspace():
            if text[pos] == '\n':
                line, line_start = line + 1, pos + 1
            pos += 1
        if pos >= len(text):
            break
        match = TOKEN_RE.match(text, pos)
        if not match:
            raise ParseError(f"Unexpected character {text[pos]!r}.", line, pos - line_start + 1)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), line, match.start(kind) - line_start + 1))
        pos = match.end()
    tokens.append(Token('end', '', line, pos - line_start + 1))
    return tokens


class Parser:
    """Recursive descent over the token list; one method per grammar rule."""

    def __init__(self, text, points):
        self.tokens = tokenize(text)
        self.points = points
        self.pos = 0

    @property
    def current(self):
        return self.tokens[self.pos]

    def peek(self, offset=1):
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def error(self, message, token=None):
        token = token or self.current
        return ParseError(message, token.line, token.column)

    def accept(self, text):
        if self.current.kind == 'punct' and self.current.text == text:
            self.pos += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            found = self.current.text or 'end of input'
            raise self.error(f"Expected {text!r}, found {found!r}.")

    def parse(self):
        if self.current.kind == 'end':
            raise self.error("Empty expression.")
        expr = self.expr()
        if self.current.kind != 'end':
            raise self.error(f"Unexpected {self.current.text!r} after the expression.")
        return expr

    def expr(self):
        node = self.term()
        while self.current.kind == 'punct' and self.current.text in '+-':
            op = self.current.text
            self.pos += 1
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.current.kind == 'punct' and self.current.text in '*/':
            op = self.current.text
            self.pos += 1
            node = BinOp(op, node, self.factor())
        return node

    def factor(self):
        token = self.current
        if token.kind == 'int':
            self.pos += 1
            if (self.current.kind == 'punct' and self.current.text == '/'
                    and self.peek().kind == 'int'):
                denominator = int(self.peek().text)
                if denominator == 0:
                    raise self.error("Zero denominator in a rational literal.", self.peek())
                self.pos += 2
                return Num(Fraction(int(token.text), denominator))
            return Num(Fraction(int(token.text)))
        if self.accept('-'):
            return Neg(self.factor())
        if self.accept('('):
            node = self.expr()
            self.expect(')')
            return node
        if token.kind == 'id' and token.text in KEYWORDS:
            self.pos += 1
            self.expect('(')
            return getattr(self, f"parse_{token.text}")(token)
        raise self.error(f"Expected an expression, found {token.text or 'end of input'!r}.")

    def identifier(self):
        token = self.current
        if token.kind != 'id':
            raise self.error(f"Expected a point name, found {token.text or 'end of input'!r}.")
        self.points.index(token.text)
        self.pos += 1
        return token.text

    def identifiers(self, count):
        names = [self.identifier()]
        for _ in range(count - 1):
            self.expect(',')
            names.append(self.identifier())
        self.expect(')')
        return names

    def parse_p(self, token):
        return Pair(*self.identifiers(2))

    def parse_cr(self, token):
        x, y, z, t = self.identifiers(4)
        if x == t or y == z:
            raise IllegalCrossFraction(
                f"line {token.line}, column {token.column}: [{x},{y},{z},{t}] needs {x} != {t} and {y} != {z}.")
        return Cross(x, y, z, t)

    def id_list(self):
        self.expect('[')
        names = [self.identifier()]
        while self.accept(','):
            names.append(self.identifier())
        self.expect(']')
        return tuple(names)

    def parse_det(self, token):
        xs = self.id_list()
        self.expect(',')
        ys = self.id_list()
        if len(xs) != len(ys):
            raise self.error(f"det needs as many rows as columns, got {len(xs)} and {len(ys)}.", token)
        self.expect(')')
        return Det(xs, ys)

    def parse_br(self, token):
        left = self.expr()
        self.expect(',')
        right = self.expr()
        self.expect(')')
        return Bracket(left, right)


def parse_expr(text, points):
    return Parser(text, points).parse()


PRECEDENCE = {'+': 1, '-': 1, '*': 2, '/': 2}
ATOM = 3


def _precedence(node):
    if isinstance(node, BinOp):
        return PRECEDENCE[node.op]
    return ATOM


def _num_text(value):
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def print_expr(node):
    """Canonical text with the fewest parentheses that parse back to ``node``."""
    if isinstance(node, Num):
        return _num_text(node.value)
    if isinstance(node, Pair):
        return f"p({node.x},{node.y})"
    if isinstance(node, Cross):
        return f"cr({node.x},{node.y},{node.z},{node.t})"
    if isinstance(node, Det):
        return f"det([{','.join(node.xs)}],[{','.join(node.ys)}])"
    if isinstance(node, Bracket):
        return f"br({print_expr(node.left)},{print_expr(node.right)})"
    if isinstance(node, Neg):
        inner = print_expr(node.operand)
        if isinstance(node.operand, BinOp):
            inner = f"({inner})"
        return f"-{inner}"
    precedence = PRECEDENCE[node.op]
    left = print_expr(node.left)
    if _precedence(node.left) < precedence:
        left = f"({left})"
    right = print_expr(node.right)
    # an integer after '/' would be read back as part of a rational literal
    if _precedence(node.right) <= precedence or (node.op == '/' and isinstance(node.right, Num)):
        right = f"({right})"
    return f"{left} {node.op} {right}" if precedence == 1 else f"{left}{node.op}{right}"
