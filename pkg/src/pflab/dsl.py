"""A small expression language for ring constructions.

    expr  := "Z/" INT
           | "GF(" INT ")[X]/(" poly ")"
           | "trunc(" INT "," INT "," INT ")"
           | "prod(" expr {"," expr} ")"
           | ("quot" | "dup" | "loc") "(" expr "," ideal ")"
           | "table(" PATH ")"
    ideal := "ideal(" INT {"," INT} ")"
    poly  := monomial {"+" monomial}
    monomial := [INT "*"] "X" ["^" INT] | INT

Ideal generators are element indices of the ring they sit in.  Whitespace
between tokens is ignored.  ``print_expr`` emits the canonical spelling,
which is also the label of the evaluated ring.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import rings
from .errors import PflabError
from .ideals import ideal_generate


class ParseError(PflabError):
    def __init__(self, message, text, pos):
        super().__init__(f"{message} at position {pos}: {text[:pos]}⟨here⟩{text[pos:]}")
        self.pos = pos


class EvaluationError(PflabError):
    def __init__(self, subexpr, cause):
        super().__init__(f"in {subexpr}: {cause}")
        self.subexpr = subexpr
        self.cause = cause


@dataclass(frozen=True)
class Z:
    n: int


@dataclass(frozen=True)
class GFPoly:
    p: int
    terms: tuple  # ((coefficient, exponent), ...) as written


@dataclass(frozen=True)
class Trunc:
    p: int
    k: int
    d: int


@dataclass(frozen=True)
class Prod:
    factors: tuple


@dataclass(frozen=True)
class IdealOp:
    op: str  # quot | dup | loc
    base: object
    gens: tuple


@dataclass(frozen=True)
class Table:
    path: str


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def fail(self, message):
        raise ParseError(message, self.text, self.pos)

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, token):
        self.ws()
        return self.text.startswith(token, self.pos)

    def eat(self, token):
        if not self.peek(token):
            self.fail(f"expected {token!r}")
        self.pos += len(token)

    def integer(self):
        self.ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected an integer")
        return int(self.text[start:self.pos])

    def expr(self):
        if self.peek("Z/"):
            self.eat("Z/")
            return Z(self.integer())
        if self.peek("GF("):
            self.eat("GF(")
            p = self.integer()
            self.eat(")")
            self.eat("[X]/(")
            terms = self.poly()
            self.eat(")")
            return GFPoly(p, terms)
        if self.peek("trunc("):
            self.eat("trunc(")
            p = self.integer()
            self.eat(",")
            k = self.integer()
            self.eat(",")
            d = self.integer()
            self.eat(")")
            return Trunc(p, k, d)
        if self.peek("prod("):
            self.eat("prod(")
            items = [self.expr()]
            while self.peek(","):
                self.eat(",")
                items.append(self.expr())
            self.eat(")")
            return Prod(tuple(items))
        for op in ("quot", "dup", "loc"):
            if self.peek(op + "("):
                self.eat(op + "(")
                base = self.expr()
                self.eat(",")
                gens = self.ideal()
                self.eat(")")
                return IdealOp(op, base, gens)
        if self.peek("table("):
            self.eat("table(")
            end = self.text.find(")", self.pos)
            if end < 0:
                self.fail("unterminated table path")
            path = self.text[self.pos:end].strip()
            if not path:
                self.fail("empty table path")
            self.pos = end + 1
            return Table(path)
        self.fail("expected a ring expression")

    def ideal(self):
        self.eat("ideal(")
        gens = [self.integer()]
        while self.peek(","):
            self.eat(",")
            gens.append(self.integer())
        self.eat(")")
        return tuple(gens)

    def poly(self):
        terms = [self.monomial()]
        while self.peek("+"):
            self.eat("+")
            terms.append(self.monomial())
        return tuple(terms)

    def monomial(self):
        self.ws()
        if self.peek("X"):
            coeff = 1
        else:
            coeff = self.integer()
            if not self.peek("*"):
                return coeff, 0
            self.eat("*")
        self.eat("X")
        exp = 1
        if self.peek("^"):
            self.eat("^")
            exp = self.integer()
        return coeff, exp


def parse_expr(text: str):
    parser = _Parser(text)
    node = parser.expr()
    parser.ws()
    if parser.pos != len(text):
        parser.fail("trailing input")
    return node


def _print_terms(terms):
    out = []
    for coeff, exp in terms:
        if exp == 0:
            out.append(str(coeff))
            continue
        mono = "X" if exp == 1 else f"X^{exp}"
        out.append(mono if coeff == 1 else f"{coeff}*{mono}")
    return "+".join(out)


def print_expr(node) -> str:
    if isinstance(node, Z):
        return f"Z/{node.n}"
    if isinstance(node, GFPoly):
        return f"GF({node.p})[X]/({_print_terms(node.terms)})"
    if isinstance(node, Trunc):
        return f"trunc({node.p},{node.k},{node.d})"
    if isinstance(node, Prod):
        return "prod(" + ",".join(print_expr(f) for f in node.factors) + ")"
    if isinstance(node, IdealOp):
        return f"{node.op}({print_expr(node.base)}, ideal({','.join(map(str, node.gens))}))"
    if isinstance(node, Table):
        return f"table({node.path})"
    raise TypeError(f"not a ring expression: {node!r}")


def poly_coefficients(node: GFPoly):
    """Coefficients mod p, lowest degree first, like terms combined."""
    deg = max(e for _, e in node.terms)
    coeffs = [0] * (deg + 1)
    for c, e in node.terms:
        coeffs[e] += c
    return [c % node.p for c in coeffs]


def evaluate(node, cap=None):
    """Build the ring an expression (text or AST) describes."""
    if isinstance(node, str):
        node = parse_expr(node)
    try:
        if isinstance(node, Z):
            return rings.zmod(node.n, cap)
        if isinstance(node, GFPoly):
            return rings.poly_quot(node.p, poly_coefficients(node), cap)
        if isinstance(node, Trunc):
            return rings.truncated_poly(node.p, node.k, node.d, cap)
        if isinstance(node, Table):
            return rings.load_table_ring(node.path, cap)
    except EvaluationError:
        raise
    except PflabError as exc:
        raise EvaluationError(print_expr(node), exc) from exc
    except OSError as exc:
        raise EvaluationError(print_expr(node), exc) from exc
    if isinstance(node, Prod):
        factors = [evaluate(f, cap) for f in node.factors]
        try:
            return rings.product(factors, cap)
        except PflabError as exc:
            raise EvaluationError(print_expr(node), exc) from exc
    if isinstance(node, IdealOp):
        base = evaluate(node.base, cap)
        try:
            I = ideal_generate(base, node.gens)
            if node.op == "quot":
                return rings.quotient(base, I)
            if node.op == "dup":
                return rings.duplication(base, I, cap)
            return rings.localize_at_maximal(base, I)[0]
        except PflabError as exc:
            raise EvaluationError(print_expr(node), exc) from exc
    raise TypeError(f"not a ring expression: {node!r}")
