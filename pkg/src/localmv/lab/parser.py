"""Recursive-descent parser for terms, formulas and sequents.

Grammar (whitespace-insensitive)::

    term     := "0" | "1" | IDENT | "neg" term | term "+" term | term "." term
              | term "-" term | "inf(" term "," term ")" | "sup(" term "," term ")"
              | "d(" term "," term ")" | COEF ["*"] term | term "^" COEF | "(" term ")"
    COEF     := NAT | PARAM | "(" integer expression over NAT and PARAM ")"
    atom     := term ("=" | "<=") term
    formula  := "true" | "false" | atom | formula "&" formula | formula "|" formula
              | "exists" IDENT+ "." formula
              | "OR[" [COEF "<="] IDENT "<=" (COEF | "inf") "]" formula
    sequent  := "forall" IDENT* ":" formula "|-" formula

Precedence from tightest: ``^``, ``*``, ``neg``, ``.``, then ``+``/``-``
(left associative).  ``&`` binds tighter than ``|``; ``exists`` and ``OR[..]``
bodies extend as far right as possible.

``params`` maps names such as ``n`` to integers; a parameter can appear only
in coefficient and exponent positions.  Index variables of ``OR[..]`` are in
scope as symbolic coefficients inside the body.
"""

from __future__ import annotations

import re
from typing import Dict, List, Mapping, Optional, Tuple

from ..errors import ParseError
from . import terms as T

_TOKEN = re.compile(
    r"\s*(?:(?P<nat>\d+)|(?P<sym>\|-|<=|OR\[|[-+.*^(),=&|:\[\]])|(?P<ident>[A-Za-z_][A-Za-z0-9_']*))"
)

KEYWORDS = {"neg", "true", "false", "exists", "forall"}
FUNCS = {"inf": T.Meet, "sup": T.Join, "d": T.Dist}


def tokenize(text: str) -> List[Tuple[str, str, int]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), start))
        pos = m.end()
    out.append(("eof", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, params: Optional[Mapping[str, int]] = None, bound: Optional[int] = None):
        self.toks = tokenize(text)
        self.i = 0
        self.params = dict(params or {})
        self.bound = bound
        self.index_scope: List[str] = []

    # -- token helpers --------------------------------------------------------

    @property
    def tok(self):
        return self.toks[self.i]

    def peek(self, k=0):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def at(self, value, k=0):
        kind, val, _ = self.peek(k)
        return kind in ("sym", "ident") and val == value

    def expect(self, value):
        kind, val, pos = self.tok
        if kind not in ("sym", "ident") or val != value:
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", pos)
        self.i += 1

    def error(self, msg):
        return ParseError(msg, self.tok[2])

    def is_numeric_name(self, name):
        return name in self.params or name in self.index_scope

    def term_start(self, k=0):
        kind, val, _ = self.peek(k)
        if kind == "nat":
            return True
        if kind == "ident":
            return val not in KEYWORDS - {"neg"} and val not in ("OR",)
        return kind == "sym" and val == "("

    # -- coefficients ----------------------------------------------------------

    def coef_atom(self):
        kind, val, pos = self.tok
        if kind == "nat":
            self.i += 1
            return int(val)
        if kind == "ident" and self.is_numeric_name(val):
            self.i += 1
            return self.params[val] if val in self.params else T.sym(val)
        if self.at("("):
            self.i += 1
            c = self.coef_expr()
            self.expect(")")
            return c
        raise ParseError(f"expected a coefficient, found {val or 'end of input'!r}", pos)

    def coef_expr(self):
        left = self.coef_prod()
        while self.at("+") or self.at("-"):
            op = self.tok[1]
            self.i += 1
            left = _fold(op, left, self.coef_prod())
        return left

    def coef_prod(self):
        left = self.coef_atom()
        while self.at("*"):
            self.i += 1
            left = _fold("*", left, self.coef_atom())
        return left

    def try_coef_prefix(self):
        """A coefficient followed by ``*`` or by the start of a term, else None."""
        save = self.i
        kind, val, _ = self.tok
        if kind == "nat" or (kind == "ident" and self.is_numeric_name(val)) or self.at("("):
            try:
                c = self.coef_atom()
            except ParseError:
                self.i = save
                return None
            if self.at("*"):
                self.i += 1
                return c
            if self.term_start():
                return c
        self.i = save
        return None

    # -- terms ----------------------------------------------------------------

    def term(self):
        left = self.term_prod()
        while self.at("+") or self.at("-"):
            op = self.tok[1]
            self.i += 1
            right = self.term_prod()
            left = T.Oplus(left, right) if op == "+" else T.Ominus(left, right)
        return left

    def term_prod(self):
        left = self.term_unary()
        while self.at("."):
            self.i += 1
            left = T.Odot(left, self.term_unary())
        return left

    def term_unary(self):
        if self.at("neg"):
            self.i += 1
            return T.Neg(self.term_unary())
        c = self.try_coef_prefix()
        if c is not None:
            if isinstance(c, int) and c < 0:
                raise self.error("negative scalar multiple")
            return T.Scalar(c, self.term_unary())
        return self.term_pow()

    def term_pow(self):
        t = self.primary()
        while self.at("^"):
            self.i += 1
            c = self.coef_atom()
            if isinstance(c, int) and c < 0:
                raise self.error("negative exponent")
            t = T.Power(t, c)
        return t

    def primary(self):
        kind, val, pos = self.tok
        if kind == "nat":
            if val in ("0", "1"):
                self.i += 1
                return T.ZERO if val == "0" else T.ONE
            raise ParseError(f"numeral {val} is not a term (write {val}*t)", pos)
        if kind == "ident":
            if val in FUNCS and self.at("(", 1):
                self.i += 2
                a = self.term()
                self.expect(",")
                b = self.term()
                self.expect(")")
                return FUNCS[val](a, b)
            if val in KEYWORDS or val == "OR":
                raise ParseError(f"unexpected keyword {val!r}", pos)
            if self.is_numeric_name(val):
                raise ParseError(f"parameter {val!r} used as a term", pos)
            self.i += 1
            return T.Var(val)
        if self.at("("):
            self.i += 1
            t = self.term()
            self.expect(")")
            return t
        raise ParseError(f"expected a term, found {val or 'end of input'!r}", pos)

    # -- formulas ---------------------------------------------------------------

    def formula(self):
        parts = [self.conjunction()]
        while self.at("|"):
            self.i += 1
            parts.append(self.conjunction())
        return parts[0] if len(parts) == 1 else T.Or(tuple(parts))

    def conjunction(self):
        parts = [self.fprimary()]
        while self.at("&"):
            self.i += 1
            parts.append(self.fprimary())
        return parts[0] if len(parts) == 1 else T.And(tuple(parts))

    def fprimary(self):
        if self.at("true"):
            self.i += 1
            return T.TRUE
        if self.at("false"):
            self.i += 1
            return T.FALSE
        if self.at("exists"):
            self.i += 1
            names = []
            while self.tok[0] == "ident" and self.tok[1] not in KEYWORDS:
                names.append(self.tok[1])
                self.i += 1
            if not names:
                raise self.error("exists needs at least one variable")
            self.expect(".")
            return T.Exists(tuple(names), self.formula())
        if self.at("OR["):
            return self.indexed()
        if self.at("("):
            save = self.i
            try:
                self.i += 1
                f = self.formula()
                self.expect(")")
                if not (self.at("=") or self.at("<=")) and not self._continues_term():
                    return f
            except ParseError:
                pass
            self.i = save
        return self.atom()

    def _continues_term(self):
        return any(self.at(s) for s in ("+", "-", ".", "^", "*"))

    def indexed(self):
        self.expect("OR[")
        lo = 0
        if not (self.tok[0] == "ident" and self.at("<=", 1) and not self.is_numeric_name(self.tok[1])):
            lo = self.coef_expr()
            self.expect("<=")
        kind, var, pos = self.tok
        if kind != "ident" or var in KEYWORDS:
            raise ParseError("expected an index variable", pos)
        self.i += 1
        self.expect("<=")
        truncated = False
        if self.at("inf"):
            if self.bound is None:
                raise self.error("OR[..<=inf] needs an explicit bound")
            self.i += 1
            hi, truncated = self.bound, True
        else:
            hi = self.coef_expr()
        self.expect("]")
        self.index_scope.append(var)
        try:
            body = self.formula()
        finally:
            self.index_scope.pop()
        return T.OrIndexed(var, lo, hi, body, truncated)

    def atom(self):
        left = self.term()
        if self.at("="):
            self.i += 1
            return T.Eq(left, self.term())
        if self.at("<="):
            self.i += 1
            return T.Leq(left, self.term())
        raise self.error("expected '=' or '<='")

    def sequent(self, name=""):
        self.expect("forall")
        ctx = []
        while self.tok[0] == "ident" and self.tok[1] not in KEYWORDS:
            ctx.append(self.tok[1])
            self.i += 1
        self.expect(":")
        ant = self.formula()
        self.expect("|-")
        if self.tok[0] == "eof":
            raise self.error("missing succedent after '|-'")
        suc = self.formula()
        try:
            return T.Sequent(tuple(ctx), ant, suc, name)
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    def finish(self, value):
        if self.tok[0] != "eof":
            raise self.error(f"unexpected {self.tok[1]!r}")
        return value


def _fold(op, a, b):
    if isinstance(a, int) and isinstance(b, int):
        return {"+": a + b, "-": a - b, "*": a * b}[op]
    return T.Coef(op, a, b)


def parse_term(text: str, params: Optional[Mapping[str, int]] = None) -> T.Term:
    p = _Parser(text, params)
    return p.finish(p.term())


def parse_formula(text: str, params: Optional[Mapping[str, int]] = None, bound: Optional[int] = None) -> T.Formula:
    p = _Parser(text, params, bound)
    return p.finish(p.formula())


def parse_sequent(
    text: str, params: Optional[Mapping[str, int]] = None, bound: Optional[int] = None, name: str = ""
) -> T.Sequent:
    """Parse ``forall x y : antecedent |- succedent``.

    A bare ``x |-`` (no ``forall`` / no succedent) is a syntax error.
    """
    p = _Parser(text, params, bound)
    return p.finish(p.sequent(name))


def parse_sequent_file(text: str, params=None, bound=None) -> List[T.Sequent]:
    """One sequent per non-blank line; ``#`` starts a comment."""
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(parse_sequent(line, params, bound, name=f"line {lineno}"))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    return out
