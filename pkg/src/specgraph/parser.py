"""Parser for ideal expressions such as ``(x*z, x*w, y*z, y*w)``.

Grammar (whitespace is ignored between tokens)::

    ideal := '(' term (',' term)* ')'
    term  := var ('*' var)*  |  '0'  |  '1'

A variable token is any run of characters other than whitespace, parentheses,
commas and ``*``.  Repeated variables in a term collapse.  The constant ``1``
is the empty product (the unit ideal); ``0`` contributes no generator, so
``(0)`` is the zero ideal.  Declared variable names take precedence over the
two constants.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import ParseError
from .ideal import VariableContext

_PUNCT = "(),*"


class Token(NamedTuple):
    kind: str  # one of "(", ")", ",", "*", "name", "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in _PUNCT:
            tokens.append(Token(ch, ch, i))
            i += 1
        else:
            start = i
            while i < len(text) and not text[i].isspace() and text[i] not in _PUNCT:
                i += 1
            tokens.append(Token("name", text[start:i], start))
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ctx: VariableContext):
        self.tokens = tokenize(text)
        self.ctx = ctx
        self.at = 0

    def peek(self) -> Token:
        return self.tokens[self.at]

    def expect(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            found = "end of input" if tok.kind == "end" else repr(tok.text)
            raise ParseError(f"unexpected {found}", tok.pos, what)
        self.at += 1
        return tok

    def ideal(self) -> list[tuple[str, ...]]:
        self.expect("(", "'('")
        terms = [self.term()]
        while self.peek().kind == ",":
            self.at += 1
            terms.append(self.term())
        self.expect(")", "',' or ')'")
        self.expect("end", "end of input")
        return [t for t in terms if t is not None]

    def term(self) -> tuple[str, ...] | None:
        names = [self.variable()]
        while self.peek().kind == "*":
            self.at += 1
            names.append(self.variable())
        if len(names) == 1 and names[0] in ("0", "1") and names[0] not in self.ctx.names:
            return None if names[0] == "0" else ()
        for name in names:
            if name in ("0", "1") and name not in self.ctx.names:
                # constants are only allowed as whole terms
                raise ParseError(f"constant {name!r} inside a product", self._pos_of(name), "a variable")
        indices = sorted({self.ctx.names.index(n) for n in names})
        return tuple(self.ctx.names[i] for i in indices)

    def variable(self) -> str:
        tok = self.expect("name", "a variable")
        if tok.text not in self.ctx.names and tok.text not in ("0", "1"):
            raise ParseError(f"undeclared variable {tok.text!r}", tok.pos, "a declared variable")
        return tok.text

    def _pos_of(self, name: str) -> int:
        for tok in reversed(self.tokens[: self.at]):
            if tok.text == name:
                return tok.pos
        return self.peek().pos


def parse_ideal_expression(text: str, ctx: VariableContext) -> list[tuple[str, ...]]:
    """Generator supports of an ideal expression, as tuples of variable names.

    Raises :class:`ParseError` carrying the offending position.
    """
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}", 0, "an ideal expression")
    return _Parser(text, ctx).ideal()
