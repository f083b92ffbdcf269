"""Surface syntax for presentations and elements.

Presentation files are line oriented; '#' starts a comment.  Directives:

    params <name>=<rat> ...
    base poly(<gen>, ...) [deg <int> ...]
    sigma11: <gen> -> <polyexpr>        (same for sigma12, sigma21, sigma22)
    delta1:  <gen> -> <polyexpr>        (same for delta2)
    P = (<rat>, <rat>)
    tau = (<polyexpr>, <polyexpr>, <polyexpr>)
    xdeg <int> <int>                    (optional; must be 1 1)

Omitted sigma off-diagonals and deltas default to 0, omitted sigma diagonals
default to the identity images, an omitted tau is zero.  All numeric literals
are exact rationals built from integers, division and parameter references;
parameters are bound to concrete rationals before anything else parses.

Element expressions are sums of products of rationals, parameters, base
generators and x1/x2 with integer exponents; the result is normalized through
the presentation's engine, so factors may appear in any order.

Printing is canonical: `parse(print(parse(text)))` equals `parse(text)`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from .errors import ParseError
from .extension import DOEPresentation, Element
from .maps import StructureMaps
from .poly import Poly, Ring

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<int>\d+)"
    r"|(?P<arrow>->)"
    r"|(?P<op>[=(),+\-*/^:])")

_SIGMA_RE = re.compile(r"sigma([12])([12])\Z")
_DELTA_RE = re.compile(r"delta([12])\Z")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str, lineno: int) -> List[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}",
                             lineno, pos + 1)
        if m.lastgroup != "ws":
            kind = m.lastgroup
            tok_text = m.group()
            out.append(Token("op" if kind == "op" else kind, tok_text,
                             lineno, m.start() + 1))
        pos = m.end()
    return out


@dataclass
class PresentationSource:
    """A parsed presentation with its raw text and parameter bindings."""
    text: str
    presentation: DOEPresentation
    bindings: Dict[str, Fraction]
    spans: Dict[str, Tuple[int, int]] = field(default_factory=dict)


# -- expression evaluation -----------------------------------------------------


class _PolyOps:
    """Evaluate expressions to base-ring polynomials."""

    def __init__(self, ring: Ring, params: Dict[str, Fraction]):
        self.ring = ring
        self.params = params

    def const(self, c: Fraction) -> Poly:
        return self.ring.const(c)

    def resolve(self, tok: Token) -> Poly:
        if tok.text in self.params:
            return self.ring.const(self.params[tok.text])
        if tok.text in self.ring.names:
            return self.ring.gen(self.ring.gen_index(tok.text))
        if tok.text in ("x1", "x2"):
            raise ParseError("extension variables are not allowed in base-ring "
                             "expressions", tok.line, tok.col)
        raise ParseError(f"unknown name {tok.text!r}", tok.line, tok.col)

    def mul(self, a: Poly, b: Poly) -> Poly:
        return a * b

    def div(self, a: Poly, b: Poly, tok: Token) -> Poly:
        if not b.is_constant or b.is_zero:
            raise ParseError("division only by nonzero rationals",
                             tok.line, tok.col)
        return a / b.as_constant()

    def pow(self, a: Poly, n: int) -> Poly:
        return a ** n


class _ElementOps:
    """Evaluate expressions to extension elements, normalizing via the engine."""

    def __init__(self, pres: DOEPresentation, params: Dict[str, Fraction]):
        self.pres = pres
        self.params = params

    def const(self, c: Fraction) -> Element:
        return self.pres.from_poly(self.pres.ring.const(c))

    def resolve(self, tok: Token) -> Element:
        if tok.text == "x1":
            return self.pres.x(1)
        if tok.text == "x2":
            return self.pres.x(2)
        if tok.text in self.params:
            return self.const(self.params[tok.text])
        if tok.text in self.pres.ring.names:
            return self.pres.from_poly(
                self.pres.ring.gen(self.pres.ring.gen_index(tok.text)))
        raise ParseError(f"unknown generator {tok.text!r}", tok.line, tok.col)

    def mul(self, a: Element, b: Element) -> Element:
        return self.pres.multiply(a, b)

    def div(self, a: Element, b: Element, tok: Token) -> Element:
        c = self._as_const(b)
        if c is None or c == 0:
            raise ParseError("division only by nonzero rationals",
                             tok.line, tok.col)
        return a.scale(Fraction(1) / c)

    @staticmethod
    def _as_const(u: Element) -> Optional[Fraction]:
        if u.is_zero:
            return Fraction(0)
        if set(u.terms) == {(0, 0)} and u.terms[(0, 0)].is_constant:
            return u.terms[(0, 0)].as_constant()
        return None

    def pow(self, a: Element, n: int) -> Element:
        return self.pres.power(a, n)


class _ExprParser:
    def __init__(self, tokens: List[Token], ops, line: int):
        self.toks = tokens
        self.pos = 0
        self.ops = ops
        self.line = line

    def peek(self) -> Optional[Token]:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def advance(self) -> Token:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression", self.line)
        self.pos += 1
        return tok

    def at_op(self, *texts) -> bool:
        tok = self.peek()
        return tok is not None and tok.kind == "op" and tok.text in texts

    def parse(self):
        value = self.expr()
        if self.peek() is not None:
            tok = self.peek()
            raise ParseError(f"unexpected {tok.text!r}", tok.line, tok.col)
        return value

    def expr(self):
        value = self.term()
        while self.at_op("+", "-"):
            op = self.advance()
            rhs = self.term()
            value = value + rhs if op.text == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.at_op("*", "/"):
            op = self.advance()
            rhs = self.unary()
            if op.text == "*":
                value = self.ops.mul(value, rhs)
            else:
                value = self.ops.div(value, rhs, op)
        return value

    def unary(self):
        if self.at_op("-"):
            self.advance()
            return -self.unary()
        if self.at_op("+"):
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        value = self.atom()
        if self.at_op("^"):
            self.advance()
            tok = self.advance()
            if tok.kind != "int":
                raise ParseError("exponent must be a nonnegative integer",
                                 tok.line, tok.col)
            value = self.ops.pow(value, int(tok.text))
        return value

    def atom(self):
        tok = self.advance()
        if tok.kind == "int":
            return self.ops.const(Fraction(int(tok.text)))
        if tok.kind == "name":
            return self.ops.resolve(tok)
        if tok.kind == "op" and tok.text == "(":
            value = self.expr()
            closing = self.advance()
            if not (closing.kind == "op" and closing.text == ")"):
                raise ParseError("expected ')'", closing.line, closing.col)
            return value
        raise ParseError(f"unexpected {tok.text!r}", tok.line, tok.col)


def _eval_span(tokens: List[Token], ops, line: int):
    """Evaluate a prefix of `tokens` as one expression; returns (value, rest)."""
    parser = _ExprParser(tokens, ops, line)
    value = parser.expr()
    return value, tokens[parser.pos:]


# -- presentation files ---------------------------------------------------------


def _parse_params(tokens: List[Token], params: Dict[str, Fraction], line: int):
    class _ScalarOps:
        @staticmethod
        def const(c):
            return c

        @staticmethod
        def resolve(tok):
            if tok.text in params:
                return params[tok.text]
            raise ParseError(f"unbound parameter {tok.text!r}", tok.line, tok.col)

        @staticmethod
        def mul(a, b):
            return a * b

        @staticmethod
        def div(a, b, tok):
            if b == 0:
                raise ParseError("division by zero", tok.line, tok.col)
            return a / b

        @staticmethod
        def pow(a, n):
            return a ** n

    rest = tokens
    while rest:
        name = rest[0]
        if name.kind != "name":
            raise ParseError("expected a parameter name", name.line, name.col)
        if len(rest) < 2 or not (rest[1].kind == "op" and rest[1].text == "="):
            raise ParseError("expected '=' after parameter name",
                             name.line, name.col)
        if name.text in params:
            raise ParseError(f"parameter {name.text!r} defined twice",
                             name.line, name.col)
        value, rest = _eval_span(rest[2:], _ScalarOps, line)
        params[name.text] = value


def _parse_base(tokens: List[Token], line: int) -> Ring:
    def expect(rest, kind, text=None):
        if not rest or rest[0].kind != kind or (text is not None and rest[0].text != text):
            where = rest[0] if rest else Token("op", "", line, 0)
            want = text or kind
            raise ParseError(f"expected {want!r} in base directive",
                             where.line, where.col)
        return rest[0], rest[1:]

    tok, rest = expect(tokens, "name", "poly")
    tok, rest = expect(rest, "op", "(")
    names = []
    if rest and not (rest[0].kind == "op" and rest[0].text == ")"):
        while True:
            tok, rest = expect(rest, "name")
            names.append(tok.text)
            if rest and rest[0].kind == "op" and rest[0].text == ",":
                rest = rest[1:]
                continue
            break
    tok, rest = expect(rest, "op", ")")
    degrees = None
    if rest:
        tok, rest = expect(rest, "name", "deg")
        degrees = []
        while rest:
            tok, rest = expect(rest, "int")
            degrees.append(int(tok.text))
        if len(degrees) != len(names):
            raise ParseError("one degree per generator required", line)
    try:
        return Ring(tuple(names), degrees)
    except ValueError as exc:
        raise ParseError(str(exc), line) from None


def _parse_tuple(tokens: List[Token], ops, line: int, arity: int):
    if not tokens or tokens[0].text != "=":
        raise ParseError("expected '='", line)
    rest = tokens[1:]
    if not rest or rest[0].text != "(":
        raise ParseError("expected '('", line)
    rest = rest[1:]
    values = []
    for i in range(arity):
        value, rest = _eval_span(rest, ops, line)
        values.append(value)
        want = ")" if i == arity - 1 else ","
        if not rest or rest[0].text != want:
            raise ParseError(f"expected {want!r}", line)
        rest = rest[1:]
    if rest:
        raise ParseError(f"unexpected {rest[0].text!r}",
                         rest[0].line, rest[0].col)
    return values


def parse_presentation(text: str) -> PresentationSource:
    params: Dict[str, Fraction] = {}
    ring: Optional[Ring] = None
    sigma_entries: Dict[Tuple[int, int], Dict[int, Poly]] = {}
    delta_entries: Dict[int, Dict[int, Poly]] = {}
    p_pair = None
    taus = None
    spans: Dict[str, Tuple[int, int]] = {}

    def need_ring(tok: Token) -> Ring:
        if ring is None:
            raise ParseError("the base directive must come first",
                             tok.line, tok.col)
        return ring

    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0]
        if not stripped.strip():
            continue
        toks = _tokenize(stripped, lineno)
        head = toks[0]
        if head.kind != "name":
            raise ParseError(f"expected a directive, got {head.text!r}",
                             head.line, head.col)
        spans.setdefault(head.text, (head.line, head.col))
        rest = toks[1:]
        sigma_m = _SIGMA_RE.match(head.text)
        delta_m = _DELTA_RE.match(head.text)
        if head.text == "params":
            _parse_params(rest, params, lineno)
        elif head.text == "base":
            if ring is not None:
                raise ParseError("duplicate base directive", head.line, head.col)
            ring = _parse_base(rest, lineno)
            for name in ring.names:
                if name in params:
                    raise ParseError(
                        f"generator {name!r} collides with a parameter", lineno)
        elif sigma_m or delta_m:
            r = need_ring(head)
            if (len(rest) < 3 or rest[0].text != ":" or rest[1].kind != "name"
                    or rest[2].kind != "arrow"):
                raise ParseError(f"expected '{head.text}: <gen> -> <expr>'",
                                 head.line, head.col)
            gen_tok = rest[1]
            if gen_tok.text not in r.names:
                raise ParseError(f"unknown generator {gen_tok.text!r}",
                                 gen_tok.line, gen_tok.col)
            k = r.gen_index(gen_tok.text)
            value = _ExprParser(rest[3:], _PolyOps(r, params), lineno).parse()
            if sigma_m:
                key = (int(sigma_m.group(1)), int(sigma_m.group(2)))
                slot = sigma_entries.setdefault(key, {})
            else:
                key = int(delta_m.group(1))
                slot = delta_entries.setdefault(key, {})
            if k in slot:
                raise ParseError(f"duplicate {head.text} image for {gen_tok.text}",
                                 gen_tok.line, gen_tok.col)
            slot[k] = value
        elif head.text == "P":
            r = need_ring(head)
            values = _parse_tuple(rest, _PolyOps(r, params), lineno, 2)
            try:
                p_pair = tuple(v.as_constant() for v in values)
            except ValueError:
                raise ParseError("P entries must be rationals", lineno) from None
        elif head.text == "tau":
            r = need_ring(head)
            taus = _parse_tuple(rest, _PolyOps(r, params), lineno, 3)
        elif head.text == "xdeg":
            degs = [int(t.text) for t in rest if t.kind == "int"]
            if len(degs) != len(rest) or degs != [1, 1]:
                raise ParseError("only xdeg 1 1 is supported", lineno)
        else:
            raise ParseError(f"unknown directive {head.text!r}",
                             head.line, head.col)

    if ring is None:
        raise ParseError("missing base directive")
    if p_pair is None:
        raise ParseError("missing P directive")

    zero = ring.zero()
    sigma = []
    for k in range(ring.ngens):
        sigma.append((
            (sigma_entries.get((1, 1), {}).get(k, ring.gen(k)),
             sigma_entries.get((1, 2), {}).get(k, zero)),
            (sigma_entries.get((2, 1), {}).get(k, zero),
             sigma_entries.get((2, 2), {}).get(k, ring.gen(k))),
        ))
    delta = []
    for k in range(ring.ngens):
        delta.append((delta_entries.get(1, {}).get(k, zero),
                      delta_entries.get(2, {}).get(k, zero)))
    maps = StructureMaps(ring, sigma=tuple(sigma), delta=tuple(delta))
    if taus is None:
        taus = (zero, zero, zero)
    pres = DOEPresentation(ring, maps, p12=p_pair[0], p11=p_pair[1],
                           tau1=taus[0], tau2=taus[1], tau0=taus[2])
    return PresentationSource(text, pres, params, spans)


def parse_element(source: Union[PresentationSource, DOEPresentation],
                  text: str) -> Element:
    """Parse and engine-normalize an element expression."""
    if isinstance(source, PresentationSource):
        pres, params = source.presentation, source.bindings
    else:
        pres, params = source, {}
    tokens = []
    for lineno, raw in enumerate(text.splitlines() or [""], start=1):
        tokens.extend(_tokenize(raw.split("#", 1)[0], lineno))
    if not tokens:
        raise ParseError("empty element expression")
    return _ExprParser(tokens, _ElementOps(pres, params), tokens[0].line).parse()


# -- printing --------------------------------------------------------------------


def format_scalar(c: Fraction) -> str:
    return str(c)


def format_presentation(pres: DOEPresentation) -> str:
    """Canonical file text with parameters resolved to literal rationals."""
    ring = pres.ring
    lines = []
    base = f"base poly({', '.join(ring.names)})"
    if any(d != 1 for d in ring.degrees):
        base += " deg " + " ".join(str(d) for d in ring.degrees)
    lines.append(base)
    for i, j in ((1, 1), (1, 2), (2, 1), (2, 2)):
        for k in range(ring.ngens):
            img = pres.maps.sigma[k][i - 1][j - 1]
            default = ring.gen(k) if i == j else ring.zero()
            if img != default:
                lines.append(f"sigma{i}{j}: {ring.names[k]} -> {img}")
    for i in (1, 2):
        for k in range(ring.ngens):
            img = pres.maps.delta[k][i - 1]
            if not img.is_zero:
                lines.append(f"delta{i}: {ring.names[k]} -> {img}")
    lines.append(f"P = ({format_scalar(pres.p12)}, {format_scalar(pres.p11)})")
    if not (pres.tau1.is_zero and pres.tau2.is_zero and pres.tau0.is_zero):
        lines.append(f"tau = ({pres.tau1}, {pres.tau2}, {pres.tau0})")
    return "\n".join(lines) + "\n"


def format_element(u: Element) -> str:
    return str(u)


def format_poly(p: Poly) -> str:
    return str(p)
