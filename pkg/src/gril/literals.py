"""Element literal syntax.

Degree-0 residues are integers, polynomial elements are written
``c0 + c1*X + c2*X^2`` (juxtaposition ``4i`` is accepted too) and product
elements are tuples ``(a, b, ...)``. Literals are evaluated directly against
a presentation, so ``-1`` and ``X^2`` are reduced like any other expression.
"""

import re

import numpy as np

from .errors import SpecParseError
from .rings import (
    Product,
    QuotientPoly,
    ZMod,
    _add_coords,
    _mul_coords,
    _neg_coords,
    embed_int,
    one_coords,
    width,
)

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text):
    tokens, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1):
            tokens.append(("num", int(m.group(1)), m.start(1)))
        elif m.group(2):
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, msg):
        pos = self.peek()[2]
        raise SpecParseError(f"{msg} in literal {self.text!r} at offset {pos}")

    def expect(self, op):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            self.i -= 1
            self.fail(f"expected {op!r}")

    def parse(self):
        node = self.expr()
        if self.peek()[0] != "end":
            self.fail("unexpected trailing input")
        return node

    def expr(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            node = self.term()
            if tok[1] == "-":
                node = ("neg", node)
        else:
            node = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            node = ("add", node, rhs if op == "+" else ("neg", rhs))
        return node

    def term(self):
        node = self.power()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                node = ("mul", node, self.power())
            elif tok[0] == "name" or (tok[0] == "op" and tok[1] == "("):
                node = ("mul", node, self.power())
            else:
                return node

    def power(self):
        node = self.atom()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.take()
            exp = self.take()
            if exp[0] != "num":
                self.i -= 1
                self.fail("expected an exponent")
            node = ("pow", node, exp[1])
        return node

    def atom(self):
        tok = self.take()
        if tok[0] == "num":
            return ("num", tok[1])
        if tok[0] == "name":
            return ("var", tok[1])
        if tok[0] == "op" and tok[1] == "(":
            items = [self.expr()]
            while self.peek()[0] == "op" and self.peek()[1] == ",":
                self.take()
                items.append(self.expr())
            self.expect(")")
            return items[0] if len(items) == 1 else ("tuple", items)
        self.i -= 1
        self.fail("unexpected token")


def _arr(coords):
    return np.array(coords, dtype=np.int64)


def _embed_base(p, base_coords):
    zero = (0,) * width(p.base)
    return tuple(base_coords) + zero * (p.degree - 1)


def _var_coords(p, name):
    if isinstance(p, QuotientPoly):
        if p.var == name:
            if p.degree == 1:
                c = _neg_coords(p.base, _arr(p.modulus[0]))
                return tuple(int(v) for v in c)
            zero = (0,) * width(p.base)
            return zero + one_coords(p.base) + zero * (p.degree - 2)
        inner = _var_coords(p.base, name)
        return None if inner is None else _embed_base(p, inner)
    return None


def _eval(p, node):
    kind = node[0]
    if kind == "num":
        return embed_int(p, node[1])
    if kind == "var":
        coords = _var_coords(p, node[1])
        if coords is None:
            raise SpecParseError(f"unknown variable {node[1]!r}")
        return coords
    if kind == "tuple":
        if isinstance(p, Product):
            if len(node[1]) != len(p.factors):
                raise SpecParseError(
                    f"tuple has {len(node[1])} entries, ring has {len(p.factors)} factors"
                )
            return tuple(c for f, sub in zip(p.factors, node[1]) for c in _eval(f, sub))
        if isinstance(p, QuotientPoly):
            return _embed_base(p, _eval(p.base, node))
        raise SpecParseError("tuple literal used in a ring that is not a product")
    if kind == "neg":
        return tuple(int(v) for v in _neg_coords(p, _arr(_eval(p, node[1]))))
    if kind == "add":
        return tuple(int(v) for v in _add_coords(p, _arr(_eval(p, node[1])), _arr(_eval(p, node[2]))))
    if kind == "mul":
        return tuple(int(v) for v in _mul_coords(p, _arr(_eval(p, node[1])), _arr(_eval(p, node[2]))))
    if kind == "pow":
        result, base = one_coords(p), _eval(p, node[1])
        for _ in range(node[2]):
            result = tuple(int(v) for v in _mul_coords(p, _arr(result), _arr(base)))
        return result
    raise AssertionError(kind)


def parse_coords(presentation, text):
    """Evaluate a literal to canonical coordinates of ``presentation``."""
    return _eval(presentation, _Parser(str(text)).parse())


def parse_element(ring, text):
    """Evaluate a literal to an element index of ``ring`` (presented or quotient)."""
    root = ring
    while not hasattr(root, "presentation"):
        root = root.parent
    coords = parse_coords(root.presentation, text)
    return ring.from_coords(coords)


def format_coords(p, coords):
    coords = tuple(coords)
    if isinstance(p, ZMod):
        return str(coords[0])
    if isinstance(p, Product):
        parts, start = [], 0
        for f in p.factors:
            w = width(f)
            parts.append(format_coords(f, coords[start:start + w]))
            start += w
        return "(" + ", ".join(parts) + ")"
    kb = width(p.base)
    one = one_coords(p.base)
    terms = []
    for j in range(p.degree):
        c = coords[j * kb:(j + 1) * kb]
        if not any(c):
            continue
        power = "" if j == 0 else (p.var if j == 1 else f"{p.var}^{j}")
        if j == 0:
            terms.append(format_coords(p.base, c))
        elif c == one:
            terms.append(power)
        else:
            s = format_coords(p.base, c)
            if not isinstance(p.base, Product) and ("+" in s or " " in s):
                s = f"({s})"
            terms.append(f"{s}*{power}")
    if not terms:
        return format_coords(p.base, coords[:kb])
    return " + ".join(terms)
