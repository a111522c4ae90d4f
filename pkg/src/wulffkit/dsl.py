"""Recursive-descent parser for the integrand mini-language.

::

    integrand := "const" NUM | "poly" "[" pair ("," pair)* "]"
               | "samples" PATH | "expr" expr
    expr      := term (("+" | "-") term)*
    term      := factor ("*" factor)*
    factor    := NUM | ("cos" | "sin") "(" INT "t" ")" | "abs" "(" expr ")"
               | ("max" | "min") "(" expr "," expr ")" | "(" expr ")"

Numbers inside ``const`` and ``poly`` may carry a sign.
"""
import re

from .integrand import Abs, BinOp, Constant, Expression, Num, Samples, SupportPolygon, Trig
from .exceptions import ParseError

_TOKEN = re.compile(
    r"\s*(?:(?P<num>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)|(?P<name>[A-Za-z_]+)|(?P<op>[()\[\],+*-]))"
)


def tokenize(text, start=0):
    tokens = []
    pos = start
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        value = m.group(kind)
        tokens.append((kind, value, m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, start=0, signed_numbers=False):
        self.tokens = tokenize(text, start)
        self.i = 0
        self.signed = signed_numbers

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, val, pos = self.next()
        if val != value:
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    def number(self, signed=False):
        kind, val, pos = self.next()
        if kind != "num" or (not signed and val[0] in "+-"):
            raise ParseError(f"expected a number, found {val or 'end of input'!r}", pos)
        return float(val)

    def finish(self):
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected trailing input {val!r}", pos)

    # expr := term (("+"|"-") term)*
    def expr(self):
        node = self.term()
        while True:
            kind, val, pos = self.peek()
            if val in ("+", "-") and kind == "op":
                self.next()
                node = BinOp(val, node, self.term())
            elif kind == "num" and val[0] in "+-":
                # the tokenizer glued a binary sign onto the following number
                self.next()
                node = BinOp(val[0], node, self._postfix_term(Num(float(val[1:]))))
            else:
                return node

    def term(self):
        return self._postfix_term(self.factor())

    def _postfix_term(self, node):
        while self.peek()[1] == "*":
            self.next()
            node = BinOp("*", node, self.factor())
        return node

    def factor(self):
        kind, val, pos = self.next()
        if kind == "num":
            if val[0] in "+-":
                raise ParseError("unexpected sign", pos)
            return Num(float(val))
        if val == "(":
            node = self.expr()
            self.expect(")")
            return node
        if val in ("cos", "sin"):
            self.expect("(")
            k = 1
            if self.peek()[0] == "num":
                k_kind, k_val, k_pos = self.next()
                if not re.fullmatch(r"\d+", k_val) or int(k_val) < 1:
                    raise ParseError("frequency must be a positive integer", k_pos)
                k = int(k_val)
            self.expect("t")
            self.expect(")")
            return Trig(val, k)
        if val == "abs":
            self.expect("(")
            node = self.expr()
            self.expect(")")
            return Abs(node)
        if val in ("max", "min"):
            self.expect("(")
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect(")")
            return BinOp(val, left, right)
        raise ParseError(f"unexpected token {val or 'end of input'!r}", pos)

    def pair(self):
        self.expect("(")
        x = self.number(signed=True)
        self.expect(",")
        y = self.number(signed=True)
        self.expect(")")
        return (x, y)


def parse_expression(text, start=0):
    p = _Parser(text, start)
    node = p.expr()
    p.finish()
    return node


def parse_integrand_spec(text):
    """Parse a DSL string into an :class:`~wulffkit.integrand.Integrand`.

    Raises
    ------
    ParseError
        On malformed input, with the character offset.
    NotPositive
        If the parsed function is not positive everywhere.
    """
    m = re.match(r"\s*([A-Za-z]+)", text)
    if not m:
        raise ParseError("expected one of const, poly, samples, expr", 0)
    keyword, rest = m.group(1), m.end()
    if keyword == "const":
        p = _Parser(text, rest)
        value = p.number(signed=True)
        p.finish()
        return Constant(value)
    if keyword == "poly":
        p = _Parser(text, rest)
        p.expect("[")
        pairs = [p.pair()]
        while p.peek()[1] == ",":
            p.next()
            pairs.append(p.pair())
        p.expect("]")
        p.finish()
        return SupportPolygon(pairs)
    if keyword == "samples":
        path = text[rest:].strip()
        if not path:
            raise ParseError("samples needs a file path", rest)
        return Samples.from_file(path)
    if keyword == "expr":
        return Expression(parse_expression(text, rest))
    raise ParseError(f"unknown integrand kind {keyword!r}", m.start(1))
