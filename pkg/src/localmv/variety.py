"""Komori pairs (I, J), their invariant n, and variety membership.

The variety V(I, J) is generated by the chains S_i (i in I) and the Komori
chains S_j^omega (j in J).  Membership of a finite algebra is decided by
evaluating the Di Nola-Lettieri equations with the sequent-lab evaluator.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import reduce
from typing import FrozenSet, Iterable, List, Optional, Tuple

from .algebra import Lex, MVAlgebra
from .errors import InfiniteAlgebraError, NotLocalError
from .lab import terms as T
from .lab.evaluate import _eval
from .radical import is_local, is_simple, rank


@dataclass(frozen=True)
class KomoriPair:
    I: FrozenSet[int]
    J: FrozenSet[int]

    def __post_init__(self):
        I, J = frozenset(self.I), frozenset(self.J)
        if not I and not J:
            raise ValueError("a Komori pair needs at least one generator")
        for v in I | J:
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"generator ranks must be positive integers, got {v!r}")
        object.__setattr__(self, "I", I)
        object.__setattr__(self, "J", J)

    @property
    def n(self) -> int:
        return reduce(math.lcm, self.I | self.J)

    @property
    def max(self) -> int:
        return max(self.I | self.J)

    @property
    def ranks(self) -> FrozenSet[int]:
        """delta(I) union delta(J): the admissible ranks of local members."""
        return delta_of_set(self.I) | delta_of_set(self.J)

    @property
    def simple_only(self) -> FrozenSet[int]:
        """delta(I) minus delta(J): ranks whose local members must be simple."""
        return delta_of_set(self.I) - delta_of_set(self.J)

    def __str__(self):
        return f"I={sorted(self.I)};J={sorted(self.J)}"


def pair(I: Iterable[int] = (), J: Iterable[int] = ()) -> KomoriPair:
    return KomoriPair(frozenset(I), frozenset(J))


_PAIR_RE = re.compile(r"^\s*I\s*=\s*\[([^\]]*)\]\s*;\s*J\s*=\s*\[([^\]]*)\]\s*$")


def parse_pair(text: str) -> KomoriPair:
    """Parse ``"I=[4,6];J=[10]"``."""
    m = _PAIR_RE.match(text)
    if not m:
        raise ValueError(f"expected 'I=[..];J=[..]', got {text!r}")

    def nums(s):
        s = s.strip()
        return [int(v) for v in s.split(",")] if s else []

    return pair(nums(m.group(1)), nums(m.group(2)))


def invariant_n(p: KomoriPair) -> int:
    return p.n


def delta(i: int) -> FrozenSet[int]:
    """Positive divisors of i."""
    if i < 1:
        raise ValueError("delta needs i >= 1")
    small = [d for d in range(1, math.isqrt(i) + 1) if i % d == 0]
    return frozenset(small + [i // d for d in small])


def delta_of_set(S: Iterable[int]) -> FrozenSet[int]:
    out = frozenset()
    for i in S:
        out |= delta(i)
    return out


def delta_big(i: int, J: Iterable[int]) -> FrozenSet[int]:
    """delta(i) minus the divisors of every j in J."""
    return delta(i) - delta_of_set(J)


def reduce_pair(p: KomoriPair) -> KomoriPair:
    """Drop generators that divide another generator (and I-entries dividing J-entries)."""
    J = {t for t in p.J if not any(t != t0 and t0 % t == 0 for t0 in p.J)}
    I = {m for m in p.I if not any((m != m0 and m0 % m == 0) for m0 in p.I) and not any(j % m == 0 for j in p.J)}
    return KomoriPair(frozenset(I), frozenset(J))


# ---------------------------------------------------------------------------
# equations
# ---------------------------------------------------------------------------

_X = T.Var("x")


@dataclass(frozen=True)
class Equation:
    name: str
    left: T.Term
    right: T.Term

    def formula(self) -> T.Formula:
        return T.Eq(self.left, self.right)

    def __str__(self):
        return f"{T.term_str(self.left)} = {T.term_str(self.right)}"


def dnl_equations(p: KomoriPair) -> List[Equation]:
    """Di Nola-Lettieri equations of V(I, J) in one variable x, plus the lcm axiom.

    Order: the max-rank equation, the family indexed by p in (1, m), the
    family indexed by q in the union of Delta(i, J), then the lcm equation.
    """
    m, n = p.max, p.n
    gens = p.I | p.J
    out = [
        Equation(
            f"max[m={m}]",
            T.Power(T.Scalar(m + 1, T.Power(_X, m)), 2),
            T.Scalar(2, T.Power(_X, m + 1)),
        )
    ]
    for q in range(2, m):
        if not any(i % q == 0 for i in gens):
            out.append(
                Equation(
                    f"nondivisor[p={q}]",
                    T.Power(T.Scalar(q, T.Power(_X, q - 1)), m + 1),
                    T.Scalar(m + 1, T.Power(_X, q)),
                )
            )
    qs = set()
    for i in p.I:
        qs |= delta_big(i, p.J)
    for q in sorted(qs):
        out.append(
            Equation(
                f"simple[q={q}]",
                T.Scalar(m + 1, T.Power(_X, q)),
                T.Scalar(m + 2, T.Power(_X, q)),
            )
        )
    out.append(
        Equation(
            f"lcm[n={n}]",
            T.Power(T.Scalar(n + 1, T.Power(_X, n)), 2),
            T.Scalar(2, T.Power(_X, n + 1)),
        )
    )
    return out


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    equation: Optional[Equation] = None
    element: object = None

    def __bool__(self):
        return self.member

    def __str__(self):
        if self.member:
            return "member"
        return f"equation {self.equation.name} ({self.equation}) fails at x = {self.element!r}"


def is_member_finite(A: MVAlgebra, p: KomoriPair) -> MembershipResult:
    """Evaluate every equation at every element; report the first failure."""
    if not A.is_finite:
        raise InfiniteAlgebraError("membership is decided by enumeration; A must be finite")
    eqs = dnl_equations(p)
    for x in A.elements():
        memo: dict = {}
        env = {"x": x}
        for eq in eqs:
            if _eval(A, eq.left, env, {}, memo) != _eval(A, eq.right, env, {}, memo):
                return MembershipResult(False, eq, x)
    return MembershipResult(True)


def is_local_member(A: MVAlgebra, p: KomoriPair) -> bool:
    """Rank in delta(I) or delta(J), and simple when the rank is only in delta(I)."""
    if not is_local(A):
        raise NotLocalError(f"{A} is not local")
    k = rank(A)
    if k not in p.ranks:
        return False
    if k in p.simple_only:
        return is_simple(A)
    return True
