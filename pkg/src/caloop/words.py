"""Loop-word expressions: parsing, evaluation to canonical coordinates, printing.

Grammar (ASCII, whitespace insignificant)::

    expr   := unit ( ('*' | '.')? unit )*        products, left-associative
    unit   := atom ( '^' int )?                  power binds tighter than *
    atom   := 'x' | 'y' | 'u1' | 'u2' | 'v1' | 'v2' | 'v3' | 'v4' | '1'
            | 'elem' '[' int, ... x8 ']'
            | 'assoc' '(' expr ',' expr ',' expr ')'
            | 'innL'  '(' expr ',' expr ',' expr ')'
            | 'inv'   '(' expr ')'
            | 'pow'   '(' expr ',' int ')'
            | '(' expr ')'

Adjacent units multiply, and '.' is a synonym for '*', so the canonical
display form (e.g. ``(x^2 y . u1^-1)``) re-parses to the element it was
printed from.  The product is *not* associative; an unparenthesized chain
of three or more factors is legal but grouped to the left, and the parser
reports a warning for it (surfaced by the CLI).

Associators use the named ``assoc(a, b, c)`` form rather than bare tuples
so parentheses stay unambiguous grouping.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .calculus import associator, inner_l
from .core import IDENTITY, Elem8, basis

__all__ = [
    "Expr",
    "Generator",
    "Literal",
    "Product",
    "Power",
    "Inverse",
    "Assoc",
    "InnerL",
    "ParseError",
    "parse",
    "parse_with_warnings",
    "evaluate",
    "format_canonical",
]

_GENERATORS = {
    "x": basis(1),
    "y": basis(2),
    "u1": basis(3),
    "u2": basis(4),
    "v1": basis(5),
    "v2": basis(6),
    "v3": basis(7),
    "v4": basis(8),
}


@dataclass(frozen=True)
class Generator:
    name: str


@dataclass(frozen=True)
class Literal:
    coords: tuple


@dataclass(frozen=True)
class Product:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Power:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Inverse:
    arg: "Expr"


@dataclass(frozen=True)
class Assoc:
    a: "Expr"
    b: "Expr"
    c: "Expr"


@dataclass(frozen=True)
class InnerL:
    a: "Expr"
    b: "Expr"
    arg: "Expr"


Expr = Union[Generator, Literal, Product, Power, Inverse, Assoc, InnerL]


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"position {position}: {message}")
        self.position = position


_PUNCT = set("*.^()[],")


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens = []  # (kind, value, position); positions are 1-based
        self._scan()
        self.index = 0

    def _scan(self) -> None:
        text, n = self.text, len(self.text)
        i = 0
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch in _PUNCT:
                self.tokens.append((ch, ch, i + 1))
                i += 1
            elif ch == "-" or ch.isdigit():
                start = i
                i += 1
                while i < n and text[i].isdigit():
                    i += 1
                body = text[start:i]
                if body == "-":
                    raise ParseError("dangling '-'", start + 1)
                self.tokens.append(("int", int(body), start + 1))
            elif ch.isalpha():
                start = i
                while i < n and (text[i].isalnum() or text[i] == "_"):
                    i += 1
                self.tokens.append(("name", text[start:i], start + 1))
            else:
                raise ParseError(f"unexpected character {ch!r}", i + 1)
        self.tokens.append(("end", None, n + 1))

    def peek(self):
        return self.tokens[self.index]

    def next(self):
        tok = self.tokens[self.index]
        self.index += 1
        return tok


class _Parser:
    """Recursive descent over the token stream; LL(1) throughout."""

    def __init__(self, text: str):
        self.toks = _Tokenizer(text)
        self.warnings = []

    def parse(self) -> Expr:
        expr = self._product()
        kind, value, pos = self.toks.peek()
        if kind != "end":
            raise ParseError(f"unexpected {value!r} after expression", pos)
        return expr

    def _expect(self, kind: str):
        got_kind, value, pos = self.toks.next()
        if got_kind != kind:
            raise ParseError(f"expected {kind!r}, found {value!r}", pos)
        return value

    def _starts_unit(self, kind: str) -> bool:
        return kind in ("name", "int", "(")

    def _product(self) -> Expr:
        expr = self._unit()
        factors = 1
        while True:
            kind, _, _ = self.toks.peek()
            if kind in ("*", "."):
                self.toks.next()
                expr = Product(expr, self._unit())
                factors += 1
            elif self._starts_unit(kind):
                expr = Product(expr, self._unit())
                factors += 1
            else:
                break
        if factors >= 3:
            self.warnings.append(
                f"nonassociative product: unparenthesized chain of {factors} "
                f"factors grouped from the left"
            )
        return expr

    def _unit(self) -> Expr:
        atom = self._atom()
        kind, _, _ = self.toks.peek()
        if kind == "^":
            self.toks.next()
            n = self._int("exponent")
            return Power(atom, n)
        return atom

    def _int(self, what: str) -> int:
        kind, value, pos = self.toks.next()
        if kind != "int":
            raise ParseError(f"expected integer {what}, found {value!r}", pos)
        return value

    def _atom(self) -> Expr:
        kind, value, pos = self.toks.next()
        if kind == "(":
            expr = self._product()
            self._expect(")")
            return expr
        if kind == "int":
            if value == 1:
                return Literal((0,) * 8)
            raise ParseError(f"unexpected integer literal {value}", pos)
        if kind == "name":
            if value in _GENERATORS:
                return Generator(value)
            if value == "elem":
                return self._literal()
            if value == "assoc":
                a, b, c = self._args(3)
                return Assoc(a, b, c)
            if value == "innL":
                a, b, c = self._args(3)
                return InnerL(a, b, c)
            if value == "inv":
                (arg,) = self._args(1)
                return Inverse(arg)
            if value == "pow":
                self._expect("(")
                base = self._product()
                self._expect(",")
                n = self._int("exponent")
                self._expect(")")
                return Power(base, n)
            raise ParseError(f"unknown identifier {value!r}", pos)
        raise ParseError(f"unexpected {value!r}", pos)

    def _args(self, count: int) -> list:
        self._expect("(")
        out = [self._product()]
        for _ in range(count - 1):
            self._expect(",")
            out.append(self._product())
        self._expect(")")
        return out

    def _literal(self) -> Literal:
        self._expect("[")
        coords = [self._int("coordinate")]
        for _ in range(7):
            self._expect(",")
            coords.append(self._int("coordinate"))
        self._expect("]")
        return Literal(tuple(coords))


def parse_with_warnings(text: str):
    """Parse a loop word; returns (expression, grouping warnings)."""
    p = _Parser(text)
    expr = p.parse()
    return expr, p.warnings


def parse(text: str) -> Expr:
    return parse_with_warnings(text)[0]


def evaluate(expr: Expr) -> Elem8:
    """Evaluate an expression tree to canonical coordinates."""
    if isinstance(expr, Generator):
        return _GENERATORS[expr.name]
    if isinstance(expr, Literal):
        return Elem8(expr.coords)
    if isinstance(expr, Product):
        return evaluate(expr.left) * evaluate(expr.right)
    if isinstance(expr, Power):
        return evaluate(expr.base) ** expr.exponent
    if isinstance(expr, Inverse):
        return evaluate(expr.arg).inverse()
    if isinstance(expr, Assoc):
        return associator(evaluate(expr.a), evaluate(expr.b), evaluate(expr.c))
    if isinstance(expr, InnerL):
        return inner_l(evaluate(expr.a), evaluate(expr.b), evaluate(expr.arg))
    raise TypeError(f"not an expression node: {expr!r}")


def _factor(name: str, exp: int) -> Optional[str]:
    if exp == 0:
        return None
    if exp == 1:
        return name
    return f"{name}^{exp}"


def format_canonical(a: Elem8) -> str:
    """Canonical display form; re-parses and re-evaluates to the same element.

    The generator and u-factors form a parenthesized head with '.' between
    the two groups; central v-factors follow unparenthesized.  Factors with
    exponent 0 are omitted and the empty word prints as "1".
    """
    xy = [f for f in (_factor("x", a[0]), _factor("y", a[1])) if f]
    us = [f for f in (_factor("u1", a[2]), _factor("u2", a[3])) if f]
    vs = [
        f
        for f in (
            _factor("v1", a[4]),
            _factor("v2", a[5]),
            _factor("v3", a[6]),
            _factor("v4", a[7]),
        )
        if f
    ]
    if xy and us:
        head = " ".join(xy) + " . " + " ".join(us)
        head_count = len(xy) + len(us)
    else:
        head = " ".join(xy or us)
        head_count = len(xy) + len(us)
    if head_count >= 2:
        head = f"({head})"
    parts = ([head] if head else []) + vs
    if not parts:
        return "1"
    return " ".join(parts)
