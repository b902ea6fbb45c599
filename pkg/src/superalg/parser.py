"""Expression grammar for elements: sums, products, powers, scalars in p, q.

The grammar is resolved against a presentation's generator table, so the
identifier set is table-driven; p and q are reserved scalar names.  Powers
expand to repeated products before entering the algebra, and the canonical
printer emits text this parser maps back to the same element.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Element, GeneratorTable
from .errors import ParseError
from .scalars import SC_ONE as SCALAR_ONE
from .scalars import SC_P, SC_Q, Scalar, sc_int

_SCALAR_NAMES = {"p": SC_P, "q": SC_Q}


# ---------------------------------------------------------------------------
# tokens
# ---------------------------------------------------------------------------

@dataclass
class Token:
    kind: str  # name | int | op
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(Token("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(Token("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*/^()":
            out.append(Token("op", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r} at position {i}", pos=i)
    return out


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------

@dataclass
class Num:
    value: int


@dataclass
class Gen:
    name: str


@dataclass
class Neg:
    arg: object


@dataclass
class Pow:
    base: object
    exponent: int


@dataclass
class Prod:
    factors: list


@dataclass
class Quot:
    num: object
    den: object


@dataclass
class Sum:
    terms: list


class _Parser:
    def __init__(self, tokens: list[Token], src: str):
        self.tokens = tokens
        self.src = src
        self.i = 0

    def peek(self) -> Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> Token:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression", pos=len(self.src))
        self.i += 1
        return tok

    def expect_op(self, text: str) -> None:
        tok = self.take()
        if tok.kind != "op" or tok.text != text:
            raise ParseError(f"expected {text!r} at position {tok.pos}", pos=tok.pos)

    def parse(self):
        node = self.sum()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"trailing input at position {tok.pos}", pos=tok.pos)
        return node

    def sum(self):
        terms = [self.product()]
        while True:
            tok = self.peek()
            if tok is not None and tok.kind == "op" and tok.text in "+-":
                self.take()
                term = self.product()
                terms.append(Neg(term) if tok.text == "-" else term)
            else:
                break
        return terms[0] if len(terms) == 1 else Sum(terms)

    def product(self):
        factors = [self.factor()]
        while True:
            tok = self.peek()
            if tok is not None and tok.kind == "op" and tok.text in "*/":
                self.take()
                rhs = self.factor()
                if tok.text == "/":
                    factors = [Quot(factors[0] if len(factors) == 1 else Prod(factors), rhs)]
                else:
                    factors.append(rhs)
            else:
                break
        return factors[0] if len(factors) == 1 else Prod(factors)

    def factor(self):
        tok = self.peek()
        if tok is not None and tok.kind == "op" and tok.text == "-":
            self.take()
            return Neg(self.factor())
        base = self.atom()
        tok = self.peek()
        if tok is not None and tok.kind == "op" and tok.text == "^":
            self.take()
            exp_tok = self.take()
            neg = False
            if exp_tok.kind == "op" and exp_tok.text == "-":
                neg = True
                exp_tok = self.take()
            if exp_tok.kind != "int":
                raise ParseError(f"expected integer exponent at position {exp_tok.pos}", pos=exp_tok.pos)
            exp = int(exp_tok.text)
            return Pow(base, -exp if neg else exp)
        return base

    def atom(self):
        tok = self.take()
        if tok.kind == "int":
            return Num(int(tok.text))
        if tok.kind == "name":
            return Gen(tok.text)
        if tok.kind == "op" and tok.text == "(":
            node = self.sum()
            self.expect_op(")")
            return node
        raise ParseError(f"unexpected token {tok.text!r} at position {tok.pos}", pos=tok.pos)


def parse(text: str):
    """Parse an expression into its AST; positions annotate syntax errors."""
    return _Parser(tokenize(text), text).parse()


# ---------------------------------------------------------------------------
# evaluation against a generator table
# ---------------------------------------------------------------------------

def evaluate(node, table: GeneratorTable) -> Element:
    """Evaluate an AST to an element over the table (free algebra, no
    reduction).  Unknown identifiers and non-scalar divisors are errors."""
    value = _eval(node, table)
    if isinstance(value, Scalar):
        return Element(table, {(): value}) if not value.is_zero() else table.zero()
    return value


def _eval(node, table: GeneratorTable):
    if isinstance(node, Num):
        return sc_int(node.value)
    if isinstance(node, Gen):
        if node.name in _SCALAR_NAMES:
            return _SCALAR_NAMES[node.name]
        if not table.has(node.name):
            raise ParseError(f"unknown identifier {node.name!r} for table {table.name!r}")
        return table.gen(node.name)
    if isinstance(node, Neg):
        return -_eval(node.arg, table)
    if isinstance(node, Sum):
        total = _eval(node.terms[0], table)
        for term in node.terms[1:]:
            total = total + _as_common(_eval(term, table), total, table)
        return total
    if isinstance(node, Prod):
        total = _eval(node.factors[0], table)
        for factor in node.factors[1:]:
            total = _mul(total, _eval(factor, table), table)
        return total
    if isinstance(node, Quot):
        num = _eval(node.num, table)
        den = _eval(node.den, table)
        den_scalar = _as_scalar(den)
        if den_scalar is None:
            raise ParseError("division is only defined by scalar expressions")
        if den_scalar.is_zero():
            raise ParseError("division by zero")
        if isinstance(num, Scalar):
            return num / den_scalar
        return num.scale(SCALAR_ONE / den_scalar)
    if isinstance(node, Pow):
        if node.exponent < 0:
            base = _eval(node.base, table)
            base_scalar = _as_scalar(base)
            if base_scalar is None:
                raise ParseError("negative powers are only defined for scalars")
            out = SCALAR_ONE
            for _ in range(-node.exponent):
                out = out / base_scalar
            return out
        base = _eval(node.base, table)
        if node.exponent == 0:
            return SCALAR_ONE
        out = base
        for _ in range(node.exponent - 1):
            out = _mul(out, base, table)
        return out
    raise TypeError(f"unknown AST node {node!r}")


def _as_scalar(value) -> Scalar | None:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, Element):
        if value.is_zero():
            return None
        if set(value.terms) == {()}:
            return value.terms[()]
    return None


def _as_common(value, like, table: GeneratorTable):
    if isinstance(like, Element) and isinstance(value, Scalar):
        return Element(table, {(): value})
    if isinstance(like, Scalar) and isinstance(value, Element):
        return value
    return value


def _mul(a, b, table: GeneratorTable):
    if isinstance(a, Scalar) and isinstance(b, Scalar):
        return a * b
    if isinstance(a, Scalar):
        return b.scale(a)
    if isinstance(b, Scalar):
        return a.scale(b)
    return a * b


def parse_element(text: str, table: GeneratorTable) -> Element:
    """Parse and evaluate in one step."""
    return evaluate(parse(text), table)
