"""Abstract syntax for MV terms, geometric formulas and sequents.

Coefficients of ``Scalar`` and exponents of ``Power`` are either ints or a
:class:`Coef` expression over index variables of an enclosing
:class:`OrIndexed` disjunction; they are resolved when the disjunction is
expanded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Tuple, Union


# -- coefficient expressions --------------------------------------------------


@dataclass(frozen=True)
class Coef:
    """Integer arithmetic over index variables: ``Coef("+", a, b)`` or ``Coef("sym", "k")``."""

    op: str
    left: object
    right: object = None

    def __str__(self):
        if self.op == "sym":
            return self.left
        return f"({coef_str(self.left)}{self.op}{coef_str(self.right)})"


CoefLike = Union[int, Coef]


def sym(name: str) -> Coef:
    return Coef("sym", name)


def coef_value(c: CoefLike, idx: Dict[str, int]) -> int:
    if isinstance(c, int):
        return c
    if c.op == "sym":
        try:
            return idx[c.left]
        except KeyError:
            raise KeyError(f"unbound index variable {c.left!r}") from None
    a, b = coef_value(c.left, idx), coef_value(c.right, idx)
    if c.op == "+":
        return a + b
    if c.op == "-":
        return a - b
    if c.op == "*":
        return a * b
    raise ValueError(f"unknown coefficient operator {c.op!r}")


def coef_str(c: CoefLike) -> str:
    return str(c)


def coef_symbols(c: CoefLike) -> FrozenSet[str]:
    if isinstance(c, int):
        return frozenset()
    if c.op == "sym":
        return frozenset([c.left])
    return coef_symbols(c.left) | coef_symbols(c.right)


# -- terms --------------------------------------------------------------------


class Term:
    __slots__ = ()


@dataclass(frozen=True)
class Zero(Term):
    pass


@dataclass(frozen=True)
class One(Term):
    pass


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class Neg(Term):
    arg: Term


@dataclass(frozen=True)
class Oplus(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Odot(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Ominus(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Join(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Meet(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Dist(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Scalar(Term):
    coef: CoefLike
    arg: Term


@dataclass(frozen=True)
class Power(Term):
    arg: Term
    coef: CoefLike


BINARY = (Oplus, Odot, Ominus, Join, Meet, Dist)

ZERO = Zero()
ONE = One()


# -- formulas -----------------------------------------------------------------


class Formula:
    __slots__ = ()


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class Eq(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class Leq(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class And(Formula):
    parts: Tuple[Formula, ...]


@dataclass(frozen=True)
class Or(Formula):
    parts: Tuple[Formula, ...]


@dataclass(frozen=True)
class Exists(Formula):
    vars: Tuple[str, ...]
    body: Formula


@dataclass(frozen=True)
class OrIndexed(Formula):
    """``OR[lo <= var <= hi] body``; ``truncated`` marks a bound that stands
    in for an infinite disjunction."""

    var: str
    lo: CoefLike
    hi: CoefLike
    body: Formula
    truncated: bool = False


TRUE = Top()
FALSE = Bottom()


@dataclass(frozen=True)
class Sequent:
    context: Tuple[str, ...]
    antecedent: Formula
    succedent: Formula
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "context", tuple(self.context))
        free = free_vars(self.antecedent) | free_vars(self.succedent)
        extra = free - set(self.context)
        if extra:
            raise ValueError(f"free variables {sorted(extra)} not in context {list(self.context)}")


# -- smart constructors (used when building large terms) -------------------------


def oplus(a: Term, b: Term) -> Term:
    if isinstance(a, Zero):
        return b
    if isinstance(b, Zero):
        return a
    if isinstance(a, One) or isinstance(b, One):
        return ONE
    return Oplus(a, b)


def odot(a: Term, b: Term) -> Term:
    if isinstance(a, One):
        return b
    if isinstance(b, One):
        return a
    if isinstance(a, Zero) or isinstance(b, Zero):
        return ZERO
    return Odot(a, b)


def neg(a: Term) -> Term:
    if isinstance(a, Zero):
        return ONE
    if isinstance(a, One):
        return ZERO
    if isinstance(a, Neg):
        return a.arg
    return Neg(a)


def conj(*parts: Formula) -> Formula:
    flat = []
    for p in parts:
        if isinstance(p, And):
            flat.extend(p.parts)
        elif not isinstance(p, Top):
            flat.append(p)
    if not flat:
        return TRUE
    return flat[0] if len(flat) == 1 else And(tuple(flat))


def disj(*parts: Formula) -> Formula:
    flat = []
    for p in parts:
        if isinstance(p, Or):
            flat.extend(p.parts)
        elif not isinstance(p, Bottom):
            flat.append(p)
    if not flat:
        return FALSE
    return flat[0] if len(flat) == 1 else Or(tuple(flat))


# -- free variables -------------------------------------------------------------


def term_vars(t: Term, _memo=None) -> FrozenSet[str]:
    memo = {} if _memo is None else _memo
    key = id(t)
    if key in memo:
        return memo[key]
    if isinstance(t, Var):
        out = frozenset([t.name])
    elif isinstance(t, (Zero, One)):
        out = frozenset()
    elif isinstance(t, (Neg, Scalar, Power)):
        out = term_vars(t.arg, memo)
    else:
        out = term_vars(t.left, memo) | term_vars(t.right, memo)
    memo[key] = out
    return out


def free_vars(f: Formula) -> FrozenSet[str]:
    if isinstance(f, (Top, Bottom)):
        return frozenset()
    if isinstance(f, (Eq, Leq)):
        return term_vars(f.left) | term_vars(f.right)
    if isinstance(f, (And, Or)):
        out = frozenset()
        for p in f.parts:
            out |= free_vars(p)
        return out
    if isinstance(f, Exists):
        return free_vars(f.body) - set(f.vars)
    if isinstance(f, OrIndexed):
        return free_vars(f.body)
    raise TypeError(f"not a formula: {f!r}")


def contains_truncated(f: Formula) -> bool:
    if isinstance(f, OrIndexed):
        return f.truncated or contains_truncated(f.body)
    if isinstance(f, (And, Or)):
        return any(contains_truncated(p) for p in f.parts)
    if isinstance(f, Exists):
        return contains_truncated(f.body)
    return False


# -- printing -------------------------------------------------------------------

_BIN_SYMBOL = {Oplus: "+", Odot: ".", Ominus: "-"}
_BIN_FUNC = {Join: "sup", Meet: "inf", Dist: "d"}


def _coef_text(c: CoefLike) -> str:
    if isinstance(c, int):
        return str(c)
    if c.op == "sym":
        return c.left
    return str(c)


def term_str(t: Term) -> str:
    """Canonical text; ``parse_term(term_str(t)) == t`` for every term."""
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, One):
        return "1"
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Neg):
        return f"neg {_atom_str(t.arg)}"
    if type(t) in _BIN_SYMBOL:
        return f"({term_str(t.left)} {_BIN_SYMBOL[type(t)]} {term_str(t.right)})"
    if type(t) in _BIN_FUNC:
        return f"{_BIN_FUNC[type(t)]}({term_str(t.left)}, {term_str(t.right)})"
    if isinstance(t, Scalar):
        return f"{_coef_text(t.coef)}*{_atom_str(t.arg)}"
    if isinstance(t, Power):
        return f"{_atom_str(t.arg)}^{_coef_text(t.coef)}"
    raise TypeError(f"not a term: {t!r}")


def _atom_str(t: Term) -> str:
    s = term_str(t)
    if isinstance(t, (Zero, One, Var)) or type(t) in _BIN_SYMBOL or type(t) in _BIN_FUNC:
        return s
    return f"({s})"


def formula_str(f: Formula) -> str:
    if isinstance(f, Top):
        return "true"
    if isinstance(f, Bottom):
        return "false"
    if isinstance(f, Eq):
        return f"{term_str(f.left)} = {term_str(f.right)}"
    if isinstance(f, Leq):
        return f"{term_str(f.left)} <= {term_str(f.right)}"
    if isinstance(f, And):
        return " & ".join(_fatom(p) for p in f.parts)
    if isinstance(f, Or):
        return " | ".join(_fatom(p) for p in f.parts)
    if isinstance(f, Exists):
        return f"exists {' '.join(f.vars)} . {_fatom(f.body)}"
    if isinstance(f, OrIndexed):
        hi = "inf" if f.truncated else _coef_text(f.hi)
        return f"OR[{_coef_text(f.lo)} <= {f.var} <= {hi}] {_fatom(f.body)}"
    raise TypeError(f"not a formula: {f!r}")


def _fatom(f: Formula) -> str:
    if isinstance(f, (Top, Bottom, Eq, Leq)):
        return formula_str(f)
    return f"({formula_str(f)})"


def sequent_str(s: Sequent) -> str:
    ctx = " ".join(s.context)
    head = f"forall {ctx} :" if ctx else "forall :"
    return f"{head} {formula_str(s.antecedent)} |- {formula_str(s.succedent)}"
