"""Text front end: polynomials, monomial ideals, b(s) and Weyl operators.

Polynomial grammar (whitespace ignored)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'|'/'] factor)*     # '*' may be omitted
    factor := atom ['^' INT]
    atom   := INT | NAME | '(' expr ')'

Division is only allowed by nonzero constants.  Variables are ``x, y, z``
(when n <= 3) or ``x1 .. xN``.
"""
import re
from fractions import Fraction

from .algebra import SparsePolynomial, default_names
from .errors import ParseError

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.)")


def tokenize(text):
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num), pos))
        elif name is not None:
            tokens.append(("name", name, pos))
        else:
            if op not in "+-*/^()":
                raise ParseError(f"unexpected character {op!r}", text, pos)
            tokens.append(("op", op, pos))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


def variable_table(n, names=None):
    """Map accepted spellings to variable indices."""
    table = {}
    if names is not None:
        for i, name in enumerate(names):
            table[name] = i
        return table
    for i in range(n):
        table[f"x{i + 1}"] = i
    if n <= 3:
        for i, name in enumerate(default_names(n)):
            table[name] = i
    return table


def _split_juxtaposed(tokens, table):
    """Read an unknown name such as ``xy`` as ``x*y`` when every letter is a
    single-letter variable."""
    out = []
    for kind, val, pos in tokens:
        if (kind == "name" and val not in table and len(val) > 1
                and all(ch in table for ch in val)):
            out.extend(("name", ch, pos + k) for k, ch in enumerate(val))
        else:
            out.append((kind, val, pos))
    return out


class _Parser:
    def __init__(self, text, table, nvars):
        self.text = text
        self.tokens = _split_juxtaposed(tokenize(text), table)
        self.i = 0
        self.table = table
        self.nvars = nvars

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.text, tok[2])

    def expect(self, op):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            self.fail(f"expected {op!r}", tok)
        return tok

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            self.fail("unexpected token")
        return value

    def expr(self):
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if tok[1] == "+" else value - rhs
            else:
                return value

    def _starts_factor(self, tok):
        return tok[0] in ("num", "name") or (tok[0] == "op" and tok[1] == "(")

    def term(self):
        value = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                value = value * self.factor()
            elif tok[0] == "op" and tok[1] == "/":
                self.take()
                den_tok = self.peek()
                den = self.factor()
                if not den.is_constant() or den.is_zero():
                    self.fail("division only by nonzero constants", den_tok)
                value = value * (1 / den.constant_term())
            elif self._starts_factor(tok):
                value = value * self.factor()
            else:
                return value

    def factor(self):
        base = self.atom()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.take()
            exp_tok = self.take()
            if exp_tok[0] != "num":
                self.fail("exponent must be a nonnegative integer", exp_tok)
            base = base ** exp_tok[1]
        return base

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            return SparsePolynomial.constant(val, self.nvars)
        if kind == "name":
            if val not in self.table:
                m = re.fullmatch(r"x(\d+)", val)
                if m or val in ("x", "y", "z"):
                    self.fail(f"variable {val!r} out of range for n={self.nvars}", tok)
                self.fail(f"unknown variable {val!r}", tok)
            return SparsePolynomial.variable(self.table[val], self.nvars)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        self.fail("expected a number, variable or '('", tok)


def parse_polynomial(text, n, field=None, names=None):
    """Parse ``text`` as a polynomial in n variables over Q (field=None) or
    F_p (field=p)."""
    table = variable_table(n, names)
    poly = _Parser(text, table, n).parse()
    if field is not None:
        poly = poly.mod(field)
    return poly


def parse_univariate(text, var="s"):
    """Parse a rational polynomial in one variable into a dense UPoly."""
    from .bernstein import UPoly

    poly = _Parser(text, {var: 0}, 1).parse()
    return UPoly.from_sparse(poly)


def parse_monomial_list(text, n):
    """Exponent vectors of a comma/semicolon separated monomial list."""
    pieces = [p for p in re.split(r"[;,]", text)]
    if not text.strip():
        raise ParseError("empty ideal", text, 0)
    table = variable_table(n)
    vectors = []
    offset = 0
    for piece in pieces:
        if not piece.strip():
            raise ParseError("empty generator", text, offset)
        try:
            poly = _Parser(piece, table, n).parse()
        except ParseError as exc:
            pos = offset + (exc.pos or 0)
            raise ParseError(str(exc).split(" at position")[0], text, pos) from None
        if len(poly) != 1:
            raise ParseError(f"generator {piece.strip()!r} is not a monomial", text, offset)
        (exp, coef), = poly.items()
        if coef != 1:
            raise ParseError(f"generator {piece.strip()!r} must be a monic monomial", text, offset)
        vectors.append(exp)
        offset += len(piece) + 1
    return vectors


def derivative_names(n):
    table = {}
    for name, i in variable_table(n).items():
        table["d" + name] = i
    for i in range(n):
        table[f"d{i + 1}"] = i
    return table


def parse_operator(text, n):
    """Parse a normal-ordered Weyl operator sum c(s)*x^a*d^b.

    Within a term every multiplication variable must precede every
    derivative; the parser does not reorder.
    """
    from .bernstein import UPoly, WeylOperator

    xs = variable_table(n)
    ds = derivative_names(n)
    p = _Parser(text, xs, n)
    terms = []
    if p.peek()[0] == "end":
        p.fail("empty operator")
    sign = 1
    tok = p.peek()
    if tok[0] == "op" and tok[1] in "+-":
        p.take()
        sign = -1 if tok[1] == "-" else 1
    while True:
        coef = UPoly.constant(sign)
        alpha = [0] * n
        beta = [0] * n
        seen_d = False
        first = True
        while True:
            tok = p.peek()
            if tok[0] == "op" and tok[1] == "*" and not first:
                p.take()
                tok = p.peek()
            elif tok[0] == "op" and tok[1] == "/" and not first:
                p.take()
                den = p.take()
                if den[0] != "num" or den[1] == 0:
                    p.fail("operator coefficients may only be divided by nonzero integers", den)
                coef = coef * UPoly.constant(Fraction(1, den[1]))
                continue
            elif not first and not p._starts_factor(tok):
                break
            first = False
            kind, val, _ = tok
            if kind == "op" and val == "(":
                p.take()
                sp = _Parser.__new__(_Parser)
                sp.text, sp.tokens, sp.i = p.text, p.tokens, p.i
                sp.table, sp.nvars = {"s": 0}, 1
                inner = sp.expr()
                p.i = sp.i
                p.expect(")")
                inner = UPoly.from_sparse(inner)
                coef = coef * inner ** _power(p)
            elif kind == "num":
                p.take()
                coef = coef * UPoly.constant(val ** _power(p))
            elif kind == "name" and val == "s":
                p.take()
                coef = coef * UPoly((0, 1)) ** _power(p)
            elif kind == "name" and val in ds:
                p.take()
                beta[ds[val]] += _power(p)
                seen_d = True
            elif kind == "name" and val in xs:
                if seen_d:
                    p.fail("operator term is not normal-ordered (x after d)", tok)
                p.take()
                alpha[xs[val]] += _power(p)
            elif kind == "name":
                p.fail(f"unknown symbol {val!r}", tok)
            else:
                p.fail("expected an operator factor", tok)
        terms.append((coef, tuple(alpha), tuple(beta)))
        tok = p.peek()
        if tok[0] == "end":
            break
        if tok[0] == "op" and tok[1] in "+-":
            p.take()
            sign = -1 if tok[1] == "-" else 1
            continue
        p.fail("unexpected token")
    return WeylOperator(n, terms)


def _power(p):
    tok = p.peek()
    if tok[0] == "op" and tok[1] == "^":
        p.take()
        exp_tok = p.take()
        if exp_tok[0] != "num":
            p.fail("exponent must be a nonnegative integer", exp_tok)
        return exp_tok[1]
    return 1
