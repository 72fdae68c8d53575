"""Exact MV-algebras and their operations.

Every algebra is an immutable value.  Elements are plain Python values whose
shape depends on the algebra:

=================  ==========================================
algebra            element payload
=================  ==========================================
:class:`Chain`     numerator ``a`` in ``0..n`` (stands for a/n)
:class:`Lex`       pair ``(m, h)`` with ``h`` a tuple of ints
:class:`Product`   tuple of factor elements
:class:`Quotient`  congruence-class id (int)
:class:`Subalgebra` the ambient element itself
:class:`TableAlgebra` index into the operation tables
=================  ==========================================

Elements carry no reference to their algebra; the module-level functions
(:func:`oplus`, :func:`neg`, ...) take the algebra explicitly and validate
membership.  The ``add``/``negate`` methods on the classes skip validation
and are what the evaluators use in inner loops.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import ElementError, InfiniteAlgebraError, UnsupportedAlgebraError
from .lgroup import GroupElem, LGroup

Elem = Any
INFINITY = math.inf


class MVAlgebra:
    """Common interface.  Subclasses provide ``zero``, ``one``, ``add``,
    ``negate``, ``contains`` and, when finite, ``_enumerate``."""

    is_finite: bool = True

    # subclasses override
    zero: Elem
    one: Elem

    def add(self, x, y):
        raise NotImplementedError

    def negate(self, x):
        raise NotImplementedError

    def contains(self, x) -> bool:
        raise NotImplementedError

    def _enumerate(self) -> Iterable[Elem]:
        raise InfiniteAlgebraError(f"{self} is infinite")

    # -- derived, overridable for speed ------------------------------------

    def mul(self, x, y):
        return self.negate(self.add(self.negate(x), self.negate(y)))

    def leq(self, x, y) -> bool:
        return self.add(self.negate(x), y) == self.one

    def join(self, x, y):
        return self.add(self.negate(self.add(self.negate(x), y)), y)

    def meet(self, x, y):
        return self.negate(self.join(self.negate(x), self.negate(y)))

    # -- helpers -------------------------------------------------------------

    def check(self, x):
        if not self.contains(x):
            raise ElementError(f"{x!r} is not an element of {self}")
        return x

    @cached_property
    def _elements(self) -> Tuple[Elem, ...]:
        if not self.is_finite:
            raise InfiniteAlgebraError(f"{self} is infinite")
        return tuple(self._enumerate())

    @cached_property
    def _index(self) -> Dict[Elem, int]:
        return {x: i for i, x in enumerate(self._elements)}

    def elements(self) -> Tuple[Elem, ...]:
        return self._elements

    def index(self, x) -> int:
        return self._index[x]

    @property
    def size(self) -> int:
        return len(self._elements)

    @property
    def is_trivial(self) -> bool:
        return self.zero == self.one


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


# ---------------------------------------------------------------------------
# concrete algebras
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=True)
class Chain(MVAlgebra):
    """The finite chain S_n = Gamma(Z, n) on numerators ``0..n``."""

    n: int

    def __post_init__(self):
        if not _is_int(self.n) or self.n < 0:
            raise ValueError(f"chain size must be a natural number, got {self.n!r}")

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return self.n

    def contains(self, x):
        return _is_int(x) and 0 <= x <= self.n

    def add(self, x, y):
        s = x + y
        return s if s < self.n else self.n

    def negate(self, x):
        return self.n - x

    def mul(self, x, y):
        s = x + y - self.n
        return s if s > 0 else 0

    def leq(self, x, y):
        return x <= y

    def join(self, x, y):
        return x if x >= y else y

    def meet(self, x, y):
        return x if x <= y else y

    def _enumerate(self):
        return range(self.n + 1)

    def __str__(self):
        return f"S_{self.n}"


@dataclass(frozen=True, eq=True)
class Lex(MVAlgebra):
    """Gamma(Z x_lex G, (rank, g)).

    Elements are pairs ``(m, h)`` with ``(0, 0) <= (m, h) <= (rank, g)`` in the
    lexicographic order.  The algebra is finite only when ``G`` is trivial or
    the unit interval collapses to a finite box (``rank == 0``).
    """

    rank: int
    group: LGroup = field(default_factory=LGroup.trivial)
    g: GroupElem = ()

    def __post_init__(self):
        if not _is_int(self.rank) or self.rank < 0:
            raise ValueError("rank must be a natural number")
        object.__setattr__(self, "g", self.group.elem(self.g))
        if self.rank == 0 and not self.group.is_nonneg(self.g):
            raise ValueError("unit (0, g) must be >= 0")

    @property
    def unit(self):
        return (self.rank, self.g)

    @property
    def zero(self):
        return (0, self.group.zero())

    @property
    def one(self):
        return (self.rank, self.g)

    @property
    def is_finite(self):
        return self._box() is not None

    def _box(self):
        G = self.group
        if G.is_trivial:
            return [(m, ()) for m in range(self.rank + 1)]
        if self.rank != 0:
            return None
        if G.kind == "int_pointwise" or G.dims == 1:
            ranges = [range(c + 1) for c in self.g]
            return [(0, h) for h in itertools.product(*ranges)]
        if any(self.g[:-1]):
            return None
        return [(0, (0,) * (G.dims - 1) + (j,)) for j in range(self.g[-1] + 1)]

    def _enumerate(self):
        box = self._box()
        if box is None:
            raise InfiniteAlgebraError(f"{self} is infinite")
        return box

    def lex_leq(self, a, b):
        if a[0] != b[0]:
            return a[0] < b[0]
        return self.group.leq(a[1], b[1])

    def lex_inf(self, a, b):
        if a[0] < b[0]:
            return a
        if b[0] < a[0]:
            return b
        return (a[0], self.group.inf(a[1], b[1]))

    def lex_sup(self, a, b):
        if a[0] > b[0]:
            return a
        if b[0] > a[0]:
            return b
        return (a[0], self.group.sup(a[1], b[1]))

    def contains(self, x):
        if not (isinstance(x, tuple) and len(x) == 2 and _is_int(x[0])):
            return False
        h = x[1]
        if not (isinstance(h, tuple) and len(h) == self.group.dims and all(_is_int(c) for c in h)):
            return False
        return self.lex_leq(self.zero, x) and self.lex_leq(x, self.one)

    def add(self, x, y):
        s = (x[0] + y[0], self.group.add(x[1], y[1]))
        return self.lex_inf(s, self.one)

    def negate(self, x):
        return (self.rank - x[0], self.group.sub(self.g, x[1]))

    def leq(self, x, y):
        return self.lex_leq(x, y)

    def join(self, x, y):
        return self.lex_sup(x, y)

    def meet(self, x, y):
        return self.lex_inf(x, y)

    def __str__(self):
        if self.group.is_trivial:
            return f"Gamma(Z, {self.rank})"
        return f"Gamma(Z x_lex {self.group}, ({self.rank}, {list(self.g)}))"


@dataclass(frozen=True, eq=True)
class Product(MVAlgebra):
    factors: Tuple[MVAlgebra, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def is_finite(self):
        return all(f.is_finite for f in self.factors)

    @property
    def zero(self):
        return tuple(f.zero for f in self.factors)

    @property
    def one(self):
        return tuple(f.one for f in self.factors)

    def contains(self, x):
        return (
            isinstance(x, tuple)
            and len(x) == len(self.factors)
            and all(f.contains(c) for f, c in zip(self.factors, x))
        )

    def add(self, x, y):
        return tuple(f.add(a, b) for f, a, b in zip(self.factors, x, y))

    def negate(self, x):
        return tuple(f.negate(a) for f, a in zip(self.factors, x))

    def mul(self, x, y):
        return tuple(f.mul(a, b) for f, a, b in zip(self.factors, x, y))

    def leq(self, x, y):
        return all(f.leq(a, b) for f, a, b in zip(self.factors, x, y))

    def join(self, x, y):
        return tuple(f.join(a, b) for f, a, b in zip(self.factors, x, y))

    def meet(self, x, y):
        return tuple(f.meet(a, b) for f, a, b in zip(self.factors, x, y))

    def _enumerate(self):
        return itertools.product(*(f.elements() for f in self.factors))

    def __str__(self):
        return " x ".join(str(f) for f in self.factors) if self.factors else "1"


class TableAlgebra(MVAlgebra):
    """A finite MV-algebra given by its operation tables on ``0..size-1``.

    No axiom checking happens here; see :func:`check_mv_axioms`.
    """

    def __init__(self, oplus_table: Sequence[Sequence[int]], neg_table: Sequence[int], zero: int = 0):
        self._oplus = tuple(tuple(row) for row in oplus_table)
        self._neg = tuple(neg_table)
        self._size = len(self._neg)
        if len(self._oplus) != self._size or any(len(r) != self._size for r in self._oplus):
            raise ValueError("oplus table must be square and match the negation table")
        self._zero = zero
        self._one = self._neg[zero]

    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    def contains(self, x):
        return _is_int(x) and 0 <= x < self._size

    def add(self, x, y):
        return self._oplus[x][y]

    def negate(self, x):
        return self._neg[x]

    def _enumerate(self):
        return range(self._size)

    @property
    def tables(self):
        return self._oplus, self._neg

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and self._oplus == other._oplus
            and self._neg == other._neg
            and self._zero == other._zero
        )

    def __hash__(self):
        return hash((type(self).__name__, self._neg, self._zero))

    def __str__(self):
        return f"Table[{self._size}]"


class Quotient(TableAlgebra):
    """A / I for a finite algebra A and an ideal I of A.

    Class ids are numbered in the order of their least representative in the
    enumeration of ``base``.
    """

    def __init__(self, base: MVAlgebra, ideal_members: Iterable[Elem]):
        members = frozenset(ideal_members)
        elems = base.elements()
        reps: List[Elem] = []
        cls_of: Dict[Elem, int] = {}
        for x in elems:
            for cid, r in enumerate(reps):
                if _dist(base, x, r) in members:
                    cls_of[x] = cid
                    break
            else:
                cls_of[x] = len(reps)
                reps.append(x)
        size = len(reps)
        oplus_table = [[cls_of[base.add(reps[i], reps[j])] for j in range(size)] for i in range(size)]
        neg_table = [cls_of[base.negate(reps[i])] for i in range(size)]
        super().__init__(oplus_table, neg_table, cls_of[base.zero])
        self.base = base
        self.ideal = members
        self.representatives = tuple(reps)
        self._cls_of = cls_of

    def project(self, x) -> int:
        """The canonical surjection ``base -> base / ideal``."""
        return self._cls_of[x]

    def representative(self, cid: int):
        return self.representatives[cid]

    def __eq__(self, other):
        return type(other) is Quotient and other.base == self.base and other.ideal == self.ideal

    def __hash__(self):
        return hash(("Quotient", self.base, self.ideal))

    def __str__(self):
        return f"({self.base})/I[{len(self.ideal)}]"


class Subalgebra(MVAlgebra):
    """The subalgebra of a finite ``ambient`` generated by ``generators``."""

    def __init__(self, ambient: MVAlgebra, generators: Iterable[Elem] = ()):
        self.ambient = ambient
        self.generators = tuple(ambient.check(g) for g in generators)
        carrier = closure(ambient, self.generators)
        order = ambient.index if ambient.is_finite else None
        self._carrier = tuple(sorted(carrier, key=order)) if order else tuple(carrier)
        self._members = frozenset(carrier)

    @property
    def zero(self):
        return self.ambient.zero

    @property
    def one(self):
        return self.ambient.one

    def contains(self, x):
        try:
            return x in self._members
        except TypeError:
            return False

    def add(self, x, y):
        return self.ambient.add(x, y)

    def negate(self, x):
        return self.ambient.negate(x)

    def mul(self, x, y):
        return self.ambient.mul(x, y)

    def leq(self, x, y):
        return self.ambient.leq(x, y)

    def join(self, x, y):
        return self.ambient.join(x, y)

    def meet(self, x, y):
        return self.ambient.meet(x, y)

    def _enumerate(self):
        return self._carrier

    def __eq__(self, other):
        return type(other) is Subalgebra and other.ambient == self.ambient and other._members == self._members

    def __hash__(self):
        return hash(("Subalgebra", self.ambient, self._members))

    def __str__(self):
        return f"<{len(self._carrier)} elements of {self.ambient}>"


def closure(A: MVAlgebra, gens: Iterable[Elem], limit: int = 1_000_000) -> set:
    """Least subset of ``A`` containing ``gens`` and 0, closed under oplus and neg."""
    seen = {A.zero, A.one}
    frontier = list(seen)
    for g in gens:
        if g not in seen:
            seen.add(g)
            frontier.append(g)
    done: List[Elem] = []
    while frontier:
        x = frontier.pop()
        done.append(x)
        new = [A.negate(x)]
        for y in done:
            new.append(A.add(x, y))
        for z in new:
            if z not in seen:
                seen.add(z)
                frontier.append(z)
                if len(seen) > limit:
                    raise InfiniteAlgebraError("generated subalgebra exceeds the size limit")
    return seen


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def chain(n: int) -> Chain:
    return Chain(n)


def trivial() -> Chain:
    """The one-element algebra (0 = 1)."""
    return Chain(0)


def lex(rank: int, group: LGroup, g: Sequence[int]) -> Lex:
    return Lex(rank, group, tuple(g))


def komori_chain(m: int) -> Lex:
    """S_m^omega = Gamma(Z x_lex Z, (m, 0))."""
    return Lex(m, LGroup.int_lex(1), (0,))


def product(*factors: MVAlgebra) -> Product:
    return Product(tuple(factors))


def gamma(group: LGroup, unit: Sequence[int]) -> MVAlgebra:
    """Mundici's functor on the supported integer groups.

    ``Z^r`` with the lexicographic order becomes a :class:`Lex` algebra over
    ``Z^(r-1)``; with the pointwise order it splits as a product of chains.
    ``gamma(Z, n)`` is returned as ``Chain(n)``.
    """
    u = group.elem(unit)
    if not group.is_nonneg(u):
        raise ValueError(f"unit {list(u)} is not >= 0 in {group}")
    if group.is_trivial:
        return trivial()
    if group.dims == 1:
        return Chain(u[0])
    if group.kind == "int_pointwise":
        return Product(tuple(Chain(c) for c in u))
    rest = LGroup.int_lex(group.dims - 1)
    return Lex(u[0], rest, u[1:])


# ---------------------------------------------------------------------------
# validated operations
# ---------------------------------------------------------------------------


def oplus(A: MVAlgebra, x, y):
    return A.add(A.check(x), A.check(y))


def neg(A: MVAlgebra, x):
    return A.negate(A.check(x))


def odot(A: MVAlgebra, x, y):
    return A.mul(A.check(x), A.check(y))


def ominus(A: MVAlgebra, x, y):
    """x - y in the MV sense: ``x odot neg y``."""
    return A.mul(A.check(x), A.negate(A.check(y)))


def join(A: MVAlgebra, x, y):
    return A.join(A.check(x), A.check(y))


def meet(A: MVAlgebra, x, y):
    return A.meet(A.check(x), A.check(y))


def _dist(A, x, y):
    return A.add(A.mul(x, A.negate(y)), A.mul(y, A.negate(x)))


def dist(A: MVAlgebra, x, y):
    """Chang distance ``(x - y) + (y - x)``."""
    return _dist(A, A.check(x), A.check(y))


def leq(A: MVAlgebra, x, y) -> bool:
    return A.leq(A.check(x), A.check(y))


def _scalar(A, k, x):
    s = A.zero
    for _ in range(k):
        t = A.add(s, x)
        if t == s:
            break
        s = t
    return s


def _power(A, x, k):
    p = A.one
    for _ in range(k):
        t = A.mul(p, x)
        if t == p:
            break
        p = t
    return p


def scalar(A: MVAlgebra, k: int, x):
    """``k x = x + ... + x`` (k times); ``0 x = 0``."""
    if not _is_int(k) or k < 0:
        raise ValueError("scalar multiple must be a natural number")
    return _scalar(A, k, A.check(x))


def power(A: MVAlgebra, x, k: int):
    """``x^k = x . ... . x`` (k times); ``x^0 = 1``."""
    if not _is_int(k) or k < 0:
        raise ValueError("exponent must be a natural number")
    return _power(A, A.check(x), k)


def order(A: MVAlgebra, x):
    """ord(x): least ``k >= 1`` with ``k x = 1``, or ``math.inf``."""
    A.check(x)
    return _order(A, x)


def _order(A, x):
    if isinstance(A, Lex) and not A.is_finite:
        m, h = x
        if m > 0:
            bound = A.rank + 1
        elif A.rank > 0:
            return INFINITY
        else:
            j = A.group.min_multiple_reaching(h, A.g)
            return INFINITY if j is None else j
        return _iterate_order(A, x, bound)
    if isinstance(A, Product) and not A.is_finite:
        orders = [_order(f, c) for f, c in zip(A.factors, x)]
        return max(orders, default=1)
    if not A.is_finite:
        raise UnsupportedAlgebraError(f"ord is not supported on {A}")
    return _iterate_order(A, x, max(A.size, 1))


def _iterate_order(A, x, bound):
    s = A.zero
    for k in range(1, bound + 1):
        t = A.add(s, x)
        if t == A.one:
            return k
        if t == s:
            return INFINITY
        s = t
    return INFINITY


def elements(A: MVAlgebra) -> Tuple[Elem, ...]:
    """All elements of a finite algebra in deterministic (lexicographic) order."""
    return A.elements()


enumerate_elements = elements


def check_mv_axioms(A: MVAlgebra, limit: int = 100):
    """Exhaustively check MV1-MV6; return the first failing (axiom, x, y, z) or None."""
    if A.size > limit:
        raise ValueError(f"algebra has {A.size} elements, more than the limit {limit}")
    els = A.elements()
    zero, one = A.zero, A.one
    if one != A.negate(zero):
        return ("one", zero, None, None)
    for x in els:
        if A.add(x, zero) != x:
            return ("MV3", x, None, None)
        if A.negate(A.negate(x)) != x:
            return ("MV4", x, None, None)
        if A.add(x, one) != one:
            return ("MV5", x, None, None)
        for y in els:
            xy = A.add(x, y)
            if xy != A.add(y, x):
                return ("MV2", x, y, None)
            if A.add(A.negate(A.add(A.negate(x), y)), y) != A.add(A.negate(A.add(A.negate(y), x)), x):
                return ("MV6", x, y, None)
            for z in els:
                if A.add(x, A.add(y, z)) != A.add(xy, z):
                    return ("MV1", x, y, z)
    return None
