"""Recursive-descent parser for bundle expressions.

    expr    := term { "+" term }
    term    := factor { "*" factor }
    factor  := atom [ "(" int ")" ] [ "[" int "]" ]
    atom    := "O" | base | "S{" int { "," int } "}" base | "W" int base
             | "Sym" int base | "R" | "E10" | "E16" | "K" | "(" expr ")"
    base    := "U" | "U*" | "Q" | "Uperp"      (optionally parenthesized after S/W/Sym)

A ``*`` written directly after ``U`` is the dual marker unless it is
followed by the start of another factor, so ``U*(1)`` is a twist of U*
while ``U*O`` and ``U * O`` are products.
"""
from __future__ import annotations

from ..derived.complexes import FormalComplex
from ..derived.presets import obj, preset
from ..schur.bundles import BundleSum
from ..schur.expr import (
    BASES,
    PRESETS,
    ComplexExpressionError,
    ExpressionError,
    Node,
    Preset,
    SchurOf,
    Shift,
    Sum,
    Sym,
    Taut,
    Tensor,
    Twist,
    Wedge,
    expand,
)


class ParseError(ExpressionError):
    def __init__(self, message: str, text: str, pos: int):
        self.text, self.pos = text, pos
        super().__init__(f"{message} at column {pos + 1}\n  {text}\n  {' ' * pos}^")


_WORDS = ("Uperp", "Sym", "E10", "E16", "U", "Q", "O", "R", "K", "W", "S")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    # lexical helpers -----------------------------------------------------
    def error(self, message: str, pos: int | None = None):
        raise ParseError(message, self.text, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, s: str) -> bool:
        self.skip()
        if self.text.startswith(s, self.pos):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str):
        if not self.accept(s):
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            self.error(f"expected {s!r}, found {found!r}")

    def integer(self) -> int:
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.error("expected an integer", start)
        return int(self.text[start:self.pos])

    def word(self) -> str | None:
        self.skip()
        for w in _WORDS:
            if self.text.startswith(w, self.pos):
                if w == "S" and self.text.startswith("S{", self.pos):
                    self.pos += 2
                    return "S{"
                if w == "S":
                    continue
                self.pos += len(w)
                return w
        return None

    def starts_factor(self, at: int) -> bool:
        rest = self.text[at:].lstrip()
        return bool(rest) and (rest[0] == "(" or any(rest.startswith(w) for w in _WORDS))

    def dual_marker(self) -> bool:
        """After "U": consume a "*" that marks the dual."""
        if self.pos < len(self.text) and self.text[self.pos] == "*":
            after = self.pos + 1
            if not self.starts_factor(after) or self._twist_follows(after):
                self.pos = after
                return True
        return False

    def _twist_follows(self, at: int) -> bool:
        rest = self.text[at:]
        if not rest.startswith("("):
            return False
        close = rest.find(")")
        body = rest[1:close].strip() if close > 0 else ""
        return bool(body) and body.lstrip("+-").isdigit()

    # grammar -----------------------------------------------------------
    def parse(self) -> Node:
        node = self.expr()
        self.skip()
        if self.pos != len(self.text):
            self.error(f"unexpected {self.text[self.pos]!r}")
        return node

    def expr(self) -> Node:
        items = [self.term()]
        while self.accept("+"):
            items.append(self.term())
        return items[0] if len(items) == 1 else Sum(tuple(items))

    def term(self) -> Node:
        items = [self.factor()]
        while self.accept("*"):
            items.append(self.factor())
        return items[0] if len(items) == 1 else Tensor(tuple(items))

    def factor(self) -> Node:
        node = self.atom()
        self.skip()
        if self.text.startswith("(", self.pos):
            if not self._twist_follows(self.pos):
                self.error("expected a twist '(int)' or an operator")
            self.expect("(")
            node = Twist(node, self.integer())
            self.expect(")")
        if self.accept("["):
            node = Shift(node, self.integer())
            self.expect("]")
        return node

    def atom(self) -> Node:
        start = self.pos
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        w = self.word()
        if w is None:
            self.skip()
            self.error("expected a bundle, preset or '('")
        if w == "O":
            return Taut("O")
        if w in ("U", "Q", "Uperp"):
            return Taut("U*" if w == "U" and self.dual_marker() else w)
        if w in PRESETS:
            return Preset(w)
        if w == "S{":
            weight = [self.integer()]
            while self.accept(","):
                weight.append(self.integer())
            self.expect("}")
            base = self.base()
            try:
                return SchurOf(tuple(weight), base)
            except ExpressionError as exc:
                self.error(str(exc), start)
        power_at = self.pos
        power = self.integer()
        if power < 0:
            self.error("power must be non-negative", power_at)
        return (Wedge if w == "W" else Sym)(power, self.base())

    def base(self) -> str:
        self.skip()
        if self.accept("("):
            b = self.base()
            self.expect(")")
            return b
        for name in ("Uperp", "U", "Q"):
            if self.text.startswith(name, self.pos):
                self.pos += len(name)
                if name == "U" and self.dual_marker():
                    return "U*"
                return name
        self.error(f"expected a base ({', '.join(BASES)})")


def parse(text: str) -> Node:
    """Parse an expression into an AST (raises ParseError)."""
    return _Parser(text).parse()


def to_bundle(node: Node) -> BundleSum:
    """Bundle value; presets and shifts raise ComplexExpressionError."""
    return expand(node)


def to_complex(node: Node) -> FormalComplex:
    """Object of the derived category; presets expand to their complexes."""
    try:
        return obj(expand(node))
    except ComplexExpressionError:
        pass
    if isinstance(node, Preset):
        return preset(node.name)
    if isinstance(node, Shift):
        return to_complex(node.inner).shift(node.m)
    if isinstance(node, Twist):
        return to_complex(node.inner).twist(node.t)
    if isinstance(node, Sum):
        out = to_complex(node.items[0])
        for x in node.items[1:]:
            out = out + to_complex(x)
        return out
    if isinstance(node, Tensor):
        out = to_complex(node.items[0])
        for x in node.items[1:]:
            out = out.tensor(to_complex(x))
        return out
    raise ComplexExpressionError(f"cannot build a complex from {node!r}")


def parse_bundle(text: str) -> BundleSum:
    return to_bundle(parse(text))


def parse_complex(text: str) -> FormalComplex:
    return to_complex(parse(text))
