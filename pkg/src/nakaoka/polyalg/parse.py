"""Recursive-descent parser for polynomial and Tambara element expressions.

Grammar (whitespace insensitive):

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := "-" unary | power
    power  := atom ("^" INT)?
    atom   := INT | NAME ("[" INT ("," INT)* "]")? | "(" expr ")"

Evaluation is delegated to a context object supplying ``const(int)`` and
``symbol(name, index, pos)``; values returned by the context must support
``+``, ``-``, ``*`` and ``**``.
"""

from __future__ import annotations

import re

from ..errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def tokenize(text):
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^()[],":
                raise ParseError(f"unexpected character {ch!r}", start, text)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ctx):
        self.text = text
        self.ctx = ctx
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, v, pos = self.take()
        if kind != "op" or v != value:
            raise ParseError(f"expected {value!r}", pos, self.text)

    def fail(self, msg):
        raise ParseError(msg, self.peek()[2], self.text)

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected token {self.peek()[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while True:
            kind, v, _ = self.peek()
            if kind == "op" and v in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if v == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.unary()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            value = value * self.unary()
        return value

    def unary(self):
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, v, pos = self.take()
            if kind != "int":
                raise ParseError("exponent must be a nonnegative integer", pos, self.text)
            return base**v
        return base

    def atom(self):
        kind, v, pos = self.take()
        if kind == "int":
            return self.ctx.const(v)
        if kind == "name":
            index = None
            if self.peek()[:2] == ("op", "["):
                self.take()
                index = [self._int()]
                while self.peek()[:2] == ("op", ","):
                    self.take()
                    index.append(self._int())
                self.expect("]")
            return self.ctx.symbol(v, index, pos)
        if kind == "op" and v == "(":
            value = self.expr()
            self.expect(")")
            return value
        if kind == "end":
            raise ParseError("unexpected end of input", pos, self.text)
        raise ParseError(f"unexpected token {v!r}", pos, self.text)

    def _int(self):
        kind, v, pos = self.take()
        if kind != "int":
            raise ParseError("expected an integer index", pos, self.text)
        return v


def parse_expression(text, ctx):
    return _Parser(text, ctx).parse()


class _PolyContext:
    def __init__(self, ring):
        self.ring = ring

    def const(self, c):
        return self.ring.const(c)

    def symbol(self, name, index, pos):
        if index is not None or name not in self.ring.vars:
            raise ParseError(f"unknown symbol {name!r} for ring {self.ring}", pos)
        return self.ring.var(name)


def parse_poly(text, ring):
    """Parse text as an element of the given polynomial ring."""
    return parse_expression(text, _PolyContext(ring))
