"""Radical, locality, rank, ideals, quotients and homomorphism counting."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence

from .algebra import (
    INFINITY,
    Chain,
    Lex,
    MVAlgebra,
    Product,
    Quotient,
    Subalgebra,
    _dist,
    _order,
    _power,
    _scalar,
    closure,
)
from .errors import (
    AnomalyError,
    InfiniteAlgebraError,
    NotLocalError,
    SearchBoundExceeded,
    UnsupportedAlgebraError,
)

DEFAULT_HOM_BOUND = 10**6


@dataclass(frozen=True)
class Ideal:
    algebra: MVAlgebra
    members: FrozenSet

    def __contains__(self, x):
        return x in self.members

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members, key=self.algebra.index))

    def violations(self) -> List[str]:
        A, I = self.algebra, self.members
        out = []
        if A.zero not in I:
            out.append("does not contain 0")
        for x in I:
            for y in A.elements():
                if A.leq(y, x) and y not in I:
                    out.append(f"not downward closed at {x!r} >= {y!r}")
                    return out
            for y in I:
                if A.add(x, y) not in I:
                    out.append(f"not closed under oplus at {x!r}, {y!r}")
                    return out
        return out

    def is_ideal(self) -> bool:
        return not self.violations()


@dataclass(frozen=True)
class LexRadical:
    """The (infinite) radical of a lex algebra, decided by closed form.

    Membership is cross-checked against the defining equation; a disagreement
    is an internal error.
    """

    algebra: Lex
    n: Optional[int] = None
    coradical: bool = False

    def __contains__(self, x):
        A = self.algebra
        if not A.contains(x):
            return False
        y = A.negate(x) if self.coradical else x
        closed = y[0] == 0
        if self.n is not None and A.rank >= 1 and self.n >= A.rank:
            by_equation = _is_radical(A, y, self.n)
            if by_equation != closed:
                raise AnomalyError(f"closed form and equation disagree on {x!r} in {A}")
        return closed

    def describe(self) -> str:
        if self.coradical:
            return "{(k, g - h) : h >= 0}"
        return "{(0, h) : h >= 0}"


# ---------------------------------------------------------------------------


def is_boolean(A: MVAlgebra, x) -> bool:
    """True iff x is idempotent (x + x = x)."""
    A.check(x)
    return A.add(x, x) == x


def _is_radical(A, x, n):
    return _power(A, _scalar(A, n + 1, x), 2) == A.zero


def is_radical_elem(A: MVAlgebra, x, n: int) -> bool:
    """True iff ((n+1) x)^2 = 0."""
    A.check(x)
    return _is_radical(A, x, n)


def is_infinitesimal_or_zero(A: MVAlgebra, x) -> bool:
    """x = 0 or k x <= neg x for every k (checked up to saturation)."""
    A.check(x)
    if x == A.zero:
        return True
    nx = A.negate(x)
    s = A.zero
    while True:
        t = A.add(s, x)
        if not A.leq(t, nx):
            return False
        if t == s:
            return True
        s = t


def radical_set(A: MVAlgebra, n: Optional[int] = None):
    """Rad(A).

    With ``n`` given, the radical is ``{x : ((n+1)x)^2 = 0}``, which is the
    radical whenever A lies in a variety with invariant n.  With ``n=None`` the
    infinitesimal definition is used (finite algebras only).  Lex algebras get
    a :class:`LexRadical`.
    """
    if isinstance(A, Lex) and not A.is_finite:
        return LexRadical(A, n)
    if not A.is_finite:
        raise InfiniteAlgebraError(f"radical of {A} cannot be enumerated")
    if A.is_trivial:
        return Ideal(A, frozenset([A.zero]))
    if n is None:
        members = frozenset(x for x in A.elements() if is_infinitesimal_or_zero(A, x))
    else:
        members = frozenset(x for x in A.elements() if _is_radical(A, x, n))
    return Ideal(A, members)


def coradical_set(A: MVAlgebra, n: Optional[int] = None):
    rad = radical_set(A, n)
    if isinstance(rad, LexRadical):
        return LexRadical(A, n, coradical=True)
    return frozenset(A.negate(x) for x in rad.members)


def is_local(A: MVAlgebra) -> bool:
    """Nontrivial and every x has ord(x) < inf or ord(neg x) < inf."""
    if isinstance(A, Lex) and not A.is_finite:
        if A.is_trivial:
            return False
        if A.rank >= 1:
            return True
        raise UnsupportedAlgebraError(f"locality of {A} is not decidable here")
    if isinstance(A, Product) and not A.is_finite:
        # a product of two nontrivial algebras has the non-local idempotent (1, 0)
        nontrivial = [f for f in A.factors if not f.is_trivial]
        return len(nontrivial) == 1 and is_local(nontrivial[0])
    if not A.is_finite:
        raise UnsupportedAlgebraError(f"locality of {A} is not decidable here")
    if A.is_trivial:
        return False
    for x in A.elements():
        if _order(A, x) == INFINITY and _order(A, A.negate(x)) == INFINITY:
            return False
    return True


def nonlocal_witness(A: MVAlgebra):
    """An element x with ord(x) = ord(neg x) = inf, or None."""
    for x in A.elements():
        if _order(A, x) == INFINITY and _order(A, A.negate(x)) == INFINITY:
            return x
    return None


def is_simple(A: MVAlgebra, n: Optional[int] = None) -> bool:
    """Local with trivial radical."""
    if not is_local(A):
        return False
    if isinstance(A, Lex) and not A.is_finite:
        return A.group.is_trivial
    if isinstance(A, Product) and not A.is_finite:
        (f,) = [f for f in A.factors if not f.is_trivial]
        return is_simple(f, n)
    return radical_set(A, n).members == frozenset([A.zero])


def rank(A: MVAlgebra) -> int:
    """k such that A / Rad(A) is S_k."""
    if isinstance(A, Lex) and not A.is_finite:
        if A.is_trivial or A.rank == 0:
            raise NotLocalError(f"{A} has no finite rank")
        return A.rank
    if A.is_finite and A.is_trivial:
        raise NotLocalError("rank of the trivial algebra is undefined")
    if not is_local(A):
        raise NotLocalError(f"{A} is not local")
    if isinstance(A, Product) and not A.is_finite:
        (f,) = [f for f in A.factors if not f.is_trivial]
        return rank(f)
    if isinstance(A, Chain):
        return A.n
    rad = radical_set(A)
    return sum(1 for _ in _classes(A, rad.members)) - 1


def _classes(A, members):
    reps = []
    for x in A.elements():
        if not any(_dist(A, x, r) in members for r in reps):
            reps.append(x)
    return reps


def ideal_generated(A: MVAlgebra, gens: Iterable) -> Ideal:
    """Least ideal containing ``gens``: the downset of their finite sums."""
    if not A.is_finite:
        raise InfiniteAlgebraError(f"cannot enumerate ideals of {A}")
    gens = [A.check(g) for g in gens]
    sums = {A.zero}
    frontier = [A.zero]
    while frontier:
        s = frontier.pop()
        for g in gens:
            t = A.add(s, g)
            if t not in sums:
                sums.add(t)
                frontier.append(t)
    members = frozenset(x for x in A.elements() if any(A.leq(x, s) for s in sums))
    return Ideal(A, members)


def quotient(A: MVAlgebra, ideal) -> Quotient:
    """A / I as an explicit-table algebra on congruence classes."""
    if not A.is_finite:
        raise InfiniteAlgebraError(f"cannot form quotients of {A}")
    members = ideal.members if isinstance(ideal, Ideal) else frozenset(ideal)
    return Quotient(A, members)


def congruence_classes(A: MVAlgebra, ideal) -> Dict:
    q = quotient(A, ideal)
    return {x: q.project(x) for x in A.elements()}


def boolean_skeleton(A: MVAlgebra) -> Subalgebra:
    if not A.is_finite:
        raise InfiniteAlgebraError(f"cannot enumerate idempotents of {A}")
    idem = [x for x in A.elements() if A.add(x, x) == x]
    sub = Subalgebra(A, idem)
    if len(sub.elements()) != len(idem):
        raise AnomalyError("idempotents are not closed under the MV operations")
    return sub


def boolean_atoms(A: MVAlgebra) -> List:
    """Minimal nonzero idempotents."""
    B = [x for x in boolean_skeleton(A).elements() if x != A.zero]
    return [x for x in B if not any(y != x and A.leq(y, x) for y in B)]


# ---------------------------------------------------------------------------
# homomorphisms
# ---------------------------------------------------------------------------


def generating_set(A: MVAlgebra) -> List:
    """A small generating set of a finite algebra (greedy, deterministic)."""
    if isinstance(A, Chain):
        return [1] if A.n >= 1 else []
    gens: List = []
    current = closure(A, gens)
    for x in A.elements():
        if len(current) == A.size:
            break
        if x not in current:
            gens.append(x)
            current = closure(A, gens)
    # drop redundant generators
    for g in list(gens):
        rest = [h for h in gens if h != g]
        if len(closure(A, rest)) == A.size:
            gens = rest
    return gens


def _extend(A: MVAlgebra, B: MVAlgebra, assignment: Dict) -> Optional[Dict]:
    """Extend a generator assignment to a homomorphism, or None on conflict."""
    f = {A.zero: B.zero}
    if A.one in f and f[A.one] != B.one:
        return None
    if A.one != A.zero:
        f[A.one] = B.one
    elif B.one != B.zero:
        return None
    for a, b in assignment.items():
        if a in f and f[a] != b:
            return None
        f[a] = b
    done: List = []
    frontier = list(f)
    while frontier:
        x = frontier.pop()
        done.append(x)
        fx = f[x]
        pairs = [(A.negate(x), B.negate(fx))]
        for y in done:
            pairs.append((A.add(x, y), B.add(fx, f[y])))
        for a, b in pairs:
            if a in f:
                if f[a] != b:
                    return None
            else:
                f[a] = b
                frontier.append(a)
    return f


def homs(A: MVAlgebra, B: MVAlgebra, bound: int = DEFAULT_HOM_BOUND) -> List[Dict]:
    """All MV-homomorphisms A -> B (A finite, B finite).

    Enumerates images of a generating set of A and keeps the assignments that
    extend consistently.
    """
    if not A.is_finite:
        raise InfiniteAlgebraError("source of homs must be finite")
    if not B.is_finite:
        raise InfiniteAlgebraError("target must be finite; use hom_count for lex targets")
    gens = generating_set(A)
    candidates = B.size ** len(gens)
    if candidates > bound:
        raise SearchBoundExceeded(f"{candidates} candidate assignments exceed the bound {bound}")
    out = []
    for images in itertools.product(B.elements(), repeat=len(gens)):
        f = _extend(A, B, dict(zip(gens, images)))
        if f is not None:
            out.append(f)
    return out


def hom_count(A: MVAlgebra, B: MVAlgebra, bound: int = DEFAULT_HOM_BOUND) -> int:
    if isinstance(A, Chain) and isinstance(B, Lex) and not B.is_finite:
        # S_n -> Gamma(Z x G, (k, g)) is determined by y = image of 1 with n y = u
        n = A.n
        if n == 0:
            return 1 if B.is_trivial else 0
        return int(B.rank % n == 0 and all(c % n == 0 for c in B.g))
    return len(homs(A, B, bound))
