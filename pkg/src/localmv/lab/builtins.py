"""Named sequents and formulas, instantiated for given parameters.

``builtin(name, **params)`` returns a :class:`~localmv.lab.terms.Sequent`
(a list for ``dnl``), or a :class:`~localmv.lab.terms.Formula` for the
one-variable formulas ``phi`` and ``fin``.
"""

from __future__ import annotations

import math
from typing import Callable, Dict, List

from ..finclass import bezout, seq_difference, seq_scalar
from . import terms as T
from .parser import parse_formula, parse_sequent

# sequents that hold in every algebra of the variety (as opposed to axioms
# that carve out local or simple algebras)
VALID_IN_VARIETY = (
    "rad-lemma-i",
    "rad-lemma-ii",
    "rad-lemma-iii",
    "rad-lemma-iv",
    "rad-lemma-v",
    "rad-lemma-vi",
    "rad-lemma-vii",
    "rad-lemma-viii",
    "rad-lemma-ix",
    "twoseq-i",
    "twoseq-ii",
    "compat-1",
    "compat-2",
    "dnl",
    "divisibility",
)

_RAD = "((n+1)*x)^2 = 0"


def _seq(text, name, **params):
    return parse_sequent(text, params=params, bound=params.get("bound"), name=name)


def _scalar(k: int, t: T.Term) -> T.Term:
    if k == 0:
        return T.ZERO
    return t if k == 1 else T.Scalar(k, t)


def radical_formula(t: T.Term, n: int) -> T.Formula:
    """``((n+1) t)^2 = 0``."""
    return T.Eq(T.Power(T.Scalar(n + 1, t), 2), T.ZERO)


def equiv_rad_formula(z: T.Term, w: T.Term, n: int) -> T.Formula:
    return radical_formula(T.Dist(z, w), n)


def d_term_expr(t: T.Term, d: int, n: int):
    """The term D_{d,n} applied to ``t``, with its definedness conditions.

    Returns ``(D_t, conditions)`` where ``conditions`` says that the first r
    entries of ``xi*(t) + (neg chi*(1))^*`` equal 1.
    """
    _, xi, chi = bezout(d, n)
    X = seq_scalar(xi, t, T.oplus, T.odot, T.ZERO)
    U = seq_scalar(chi, T.ONE, T.oplus, T.odot, T.ZERO)
    head, tail = seq_difference(X, U, T.oplus, T.odot, T.neg, T.ZERO)
    conds = T.conj(*(T.Eq(h, T.ONE) for h in head if not isinstance(h, T.One)))
    return (tail[0] if tail else T.ZERO), conds


def fin_formula(t: T.Term, d: int, n: int, simplified: bool = True) -> T.Formula:
    """``t in Fin_d^n``: the Horn formula alpha_d^n applied to ``t``."""
    if not 0 <= d <= n:
        raise ValueError(f"d must lie in 0..{n}")
    if d == 0:
        return radical_formula(t, n)
    D = math.gcd(d, n)
    dx, defined = d_term_expr(t, d, n)
    parts = [defined, equiv_rad_formula(t, _scalar(d // D, dx), n)]
    ks = (1,) if simplified else range(n // D + 1)
    for k in ks:
        parts.append(equiv_rad_formula(T.neg(_scalar(k, dx)), _scalar(n // D - k, dx), n))
    return T.conj(*parts)


def phi_formula(n: int, var: str = "x") -> T.Formula:
    """``(n-1) x = neg x``: presents S_n with generator x."""
    if n < 1:
        raise ValueError("phi needs n >= 1")
    v = T.Var(var)
    return T.Eq(_scalar(n - 1, v), T.Neg(v))


def _rad_lemma(item: str, n: int, k: int = 2) -> T.Sequent:
    p = {"n": n, "k": k}
    texts = {
        "i": "forall x : k*x = 1 |- (n+1)*x = 1",
        "ii": f"forall x y : {_RAD} & y <= x |- ((n+1)*y)^2 = 0",
        "iii": f"forall x : {_RAD} |- ((n+1)*(k*x))^2 = 0",
        "iv": f"forall x : {_RAD} |- (k*x)^2 = 0",
        "v": f"forall x : {_RAD} |- k*x <= neg x",
        "vi": f"forall x y : {_RAD} & ((n+1)*y)^2 = 0 |- ((n+1)*sup(x, y))^2 = 0",
        "vii": f"forall x y : {_RAD} & ((n+1)*y)^2 = 0 |- ((n+1)*(x + y))^2 = 0",
        "viii": "forall x : (n+1)*x <= neg x |- ((n+1)*x)^2 = 0",
        "ix": "forall x : ((n+1)*(neg x))^2 = 0 |- 2*x = 1",
    }
    if item not in texts:
        raise ValueError(f"no radical-lemma item {item!r}")
    return _seq(texts[item], f"rad-lemma-{item}", **p)


def _x():
    return T.Var("x")


def _sequent(ctx, ant, suc, name):
    return T.Sequent(tuple(ctx), ant, suc, name)


def _sigma(n):
    return _seq("forall x : true |- ((n+1)*x)^2 = 0 | (n+1)*x = 1", "sigma", n=n)


def _rho(n, simplified=True):
    x = _x()
    return _sequent(("x",), T.TRUE, T.disj(*(fin_formula(x, d, n, simplified) for d in range(n + 1))), "rho")


def _compat_1(n, d, b, simplified=True):
    x, y = T.Var("x"), T.Var("y")
    ant = T.conj(fin_formula(x, d, n, simplified), fin_formula(y, b, n, simplified))
    return _sequent(("x", "y"), ant, fin_formula(T.Oplus(x, y), min(d + b, n), n, simplified), "compat-1")


def _compat_2(n, d, simplified=True):
    x = _x()
    return _sequent(("x",), fin_formula(x, d, n, simplified), fin_formula(T.Neg(x), n - d, n, simplified), "compat-2")


def _dnl(pair):
    from ..variety import dnl_equations

    return [_sequent(("x",), T.TRUE, eq.formula(), f"dnl {eq.name}") for eq in dnl_equations(pair)]


def _divisibility(m):
    x = _x()
    ant = T.Eq(_scalar(m - 1, x), T.Neg(x))
    suc = T.conj(*(T.Eq(T.Neg(_scalar(k, x)), _scalar(m - k, x)) for k in range(m + 1)))
    return _sequent(("x",), ant, suc, "divisibility")


_BUILDERS: Dict[str, Callable] = {
    "sigma": _sigma,
    "rho": _rho,
    "NT": lambda: _seq("forall : 0 = 1 |- false", "NT"),
    "loc": lambda bound: _seq(
        "forall x : true |- OR[1 <= k <= inf] (k*x = 1 | k*neg x = 1)", "loc", bound=bound
    ),
    "simple": lambda bound: _seq("forall x : true |- x = 0 | OR[1 <= k <= inf] k*x = 1", "simple", bound=bound),
    "twoseq-i": lambda n, k=2: _seq(f"forall x : {_RAD} |- ((n+1)*(k*x))^2 = 0", "twoseq-i", n=n, k=k),
    "twoseq-ii": lambda n: _seq(
        "forall x : true |- ((n+1)*x)^2 + ((n+1)*x)^2 = ((n+1)*x)^2", "twoseq-ii", n=n
    ),
    "compat-1": _compat_1,
    "compat-2": _compat_2,
    "dnl": _dnl,
    "divisibility": _divisibility,
    "finite-chain": lambda bound: _seq(
        "forall x : true |- OR[1 <= k <= inf] OR[0 <= t <= inf] exists z . ((k-1)*z = neg z & x = t*z)",
        "finite-chain",
        bound=bound,
    ),
    "phi": phi_formula,
    "fin": lambda d, n, simplified=True: fin_formula(_x(), d, n, simplified),
}
for _item in ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix"):
    _BUILDERS[f"rad-lemma-{_item}"] = lambda n, k=2, _item=_item: _rad_lemma(_item, n, k)

NAMES = tuple(sorted(_BUILDERS))


def builtin(name: str, **params):
    """Instantiate the named sequent (or formula) with ``params``."""
    try:
        build = _BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown builtin {name!r}; known: {', '.join(NAMES)}") from None
    return build(**params)
