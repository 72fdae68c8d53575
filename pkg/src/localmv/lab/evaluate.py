"""Brute-force evaluation of terms, formulas and sequents over finite algebras."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional

from ..algebra import MVAlgebra, _dist, _power, _scalar
from ..errors import InfiniteAlgebraError, SearchBoundExceeded
from . import terms as T

DEFAULT_MAX_ASSIGNMENTS = 10**6


def _count(c, idx):
    k = T.coef_value(c, idx)
    if k < 0:
        raise ValueError(f"coefficient evaluates to {k} < 0")
    return k


def _eval(A, t, env, idx, memo):
    key = id(t)
    hit = memo.get(key)
    if hit is not None:
        return hit[1]
    tp = type(t)
    if tp is T.Var:
        try:
            v = env[t.name]
        except KeyError:
            raise KeyError(f"unbound variable {t.name!r}") from None
    elif tp is T.Zero:
        v = A.zero
    elif tp is T.One:
        v = A.one
    elif tp is T.Neg:
        v = A.negate(_eval(A, t.arg, env, idx, memo))
    elif tp is T.Scalar:
        v = _scalar(A, _count(t.coef, idx), _eval(A, t.arg, env, idx, memo))
    elif tp is T.Power:
        v = _power(A, _eval(A, t.arg, env, idx, memo), _count(t.coef, idx))
    else:
        a = _eval(A, t.left, env, idx, memo)
        b = _eval(A, t.right, env, idx, memo)
        if tp is T.Oplus:
            v = A.add(a, b)
        elif tp is T.Odot:
            v = A.mul(a, b)
        elif tp is T.Ominus:
            v = A.mul(a, A.negate(b))
        elif tp is T.Join:
            v = A.join(a, b)
        elif tp is T.Meet:
            v = A.meet(a, b)
        elif tp is T.Dist:
            v = _dist(A, a, b)
        else:
            raise TypeError(f"not a term: {t!r}")
    # keep t alive so its id cannot be reused while the memo exists
    memo[key] = (t, v)
    return v


def eval_term(A: MVAlgebra, t: T.Term, env: Mapping[str, object] = None, idx: Mapping[str, int] = None):
    """Value of ``t`` in ``A`` under ``env``; shared subterms are evaluated once."""
    env = dict(env or {})
    for v in env.values():
        A.check(v)
    return _eval(A, t, env, dict(idx or {}), {})


def _holds(A, f, env, idx, memo):
    tp = type(f)
    if tp is T.Eq:
        return _eval(A, f.left, env, idx, memo) == _eval(A, f.right, env, idx, memo)
    if tp is T.Leq:
        return A.leq(_eval(A, f.left, env, idx, memo), _eval(A, f.right, env, idx, memo))
    if tp is T.Top:
        return True
    if tp is T.Bottom:
        return False
    if tp is T.And:
        return all(_holds(A, p, env, idx, memo) for p in f.parts)
    if tp is T.Or:
        return any(_holds(A, p, env, idx, memo) for p in f.parts)
    if tp is T.Exists:
        if not A.is_finite:
            raise InfiniteAlgebraError("cannot search witnesses in an infinite algebra")
        for values in itertools.product(A.elements(), repeat=len(f.vars)):
            inner = dict(env)
            inner.update(zip(f.vars, values))
            if _holds(A, f.body, inner, idx, {}):
                return True
        return False
    if tp is T.OrIndexed:
        lo, hi = T.coef_value(f.lo, idx), T.coef_value(f.hi, idx)
        for k in range(lo, hi + 1):
            inner = dict(idx)
            inner[f.var] = k
            if _holds(A, f.body, env, inner, {}):
                return True
        return False
    raise TypeError(f"not a formula: {f!r}")


def holds(A: MVAlgebra, f: T.Formula, env: Mapping[str, object] = None, idx: Mapping[str, int] = None) -> bool:
    env = dict(env or {})
    for v in env.values():
        A.check(v)
    return _holds(A, f, env, dict(idx or {}), {})


@dataclass(frozen=True)
class SequentResult:
    """Outcome of :func:`check_sequent`.

    ``status`` is ``"holds"``, ``"refuted"`` or ``"bounded-failure"``; the last
    means a counterexample was found but the succedent contains a truncated
    infinite disjunction, so a larger bound might still succeed.
    """

    status: str
    counterexample: Optional[Dict[str, object]] = None
    checked: int = 0
    sequent: Optional[T.Sequent] = field(default=None, compare=False, repr=False)

    @property
    def holds(self) -> bool:
        return self.status == "holds"

    def __bool__(self):
        return self.holds


def assignments_of(A: MVAlgebra, names) -> Iterable[Dict[str, object]]:
    """All assignments of ``names`` in deterministic (lexicographic) order."""
    for values in itertools.product(A.elements(), repeat=len(names)):
        yield dict(zip(names, values))


def check_sequent(
    A: MVAlgebra,
    s: T.Sequent,
    max_assignments: int = DEFAULT_MAX_ASSIGNMENTS,
    assignments: Optional[Iterable[Mapping[str, object]]] = None,
) -> SequentResult:
    """Check ``s`` at every assignment of its context.

    With ``assignments`` given, only those are checked (this is how sampled
    elements of infinite lex algebras are handled); otherwise every
    assignment of a finite ``A`` is visited and the least counterexample in
    enumeration order is reported.
    """
    if assignments is None:
        if not A.is_finite:
            raise InfiniteAlgebraError(f"{A} is infinite; pass explicit assignments")
        total = A.size ** len(s.context)
        if total > max_assignments:
            raise SearchBoundExceeded(f"{total} assignments exceed the bound {max_assignments}")
        assignments = assignments_of(A, s.context)
    checked = 0
    for env in assignments:
        env = dict(env)
        for v in env.values():
            A.check(v)
        checked += 1
        memo: Dict = {}
        if _holds(A, s.antecedent, env, {}, memo) and not _holds(A, s.succedent, env, {}, memo):
            status = "bounded-failure" if T.contains_truncated(s.succedent) else "refuted"
            return SequentResult(status, env, checked, s)
    return SequentResult("holds", None, checked, s)


def solutions(A: MVAlgebra, f: T.Formula, var: str = "x") -> List:
    """Every element satisfying ``f`` when assigned to ``var``."""
    extra = T.free_vars(f) - {var}
    if extra:
        raise ValueError(f"formula has free variables {sorted(extra)} besides {var!r}")
    if not A.is_finite:
        raise InfiniteAlgebraError(f"{A} is infinite")
    return [x for x in A.elements() if _holds(A, f, {var: x}, {}, {})]
