"""Triples (G, g, R) and their correspondence with local algebras in V(I, J).

A triple is an l-group G, an element g of G and a divisor ideal R of
delta(n).  It corresponds to the local algebra Gamma(Z x_lex G, (max R, g));
conversely a lex algebra of rank k gives back (G, g, divisors of k).
Homomorphisms of triples are integer matrices between the coordinate groups.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from .algebra import Chain, Lex
from .errors import PreconditionError
from .lgroup import GroupElem, LGroup
from .variety import KomoriPair, delta


@dataclass(frozen=True)
class DivisorIdeal:
    pair: KomoriPair
    members: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))

    @property
    def max(self) -> int:
        return max_of_ideal(self)

    def __contains__(self, k):
        return k in self.members

    def __le__(self, other: "DivisorIdeal"):
        return self.members <= other.members


@dataclass(frozen=True)
class GTriple:
    G: LGroup
    g: GroupElem
    R: DivisorIdeal

    def __post_init__(self):
        object.__setattr__(self, "g", self.G.elem(self.g))

    @property
    def pair(self) -> KomoriPair:
        return self.R.pair


def max_of_ideal(R: DivisorIdeal) -> int:
    if not R.members:
        raise ValueError("empty divisor set has no maximum")
    return max(R.members)


def ideal_from_max(k: int, p: KomoriPair) -> DivisorIdeal:
    """The ideal of divisors of k; k must be an admissible rank of the pair."""
    if k not in p.ranks:
        raise PreconditionError(f"{k} is not in delta(I) or delta(J) for {p}")
    return DivisorIdeal(p, delta(k))


def validate_triple(t: GTriple) -> List[Tuple[int, str]]:
    """Every violated condition as ``(axiom index, message)``; empty when valid.

    1. 1 is in R.  2. R is closed under divisors.  3. R is closed under lcm.
    4. R meets delta(I) minus delta(J) only if G is trivial.
    5. R lies inside delta(I) union delta(J).
    """
    p, R = t.pair, t.R.members
    out = []
    if 1 not in R:
        out.append((1, "1 is not in R"))
    for k in sorted(R):
        missing = sorted(delta(k) - R) if k >= 1 else []
        if missing:
            out.append((2, f"R contains {k} but not its divisors {missing}"))
            break
    for a in sorted(R):
        bad = [b for b in sorted(R) if a >= 1 and b >= 1 and math.lcm(a, b) not in R]
        if bad:
            out.append((3, f"lcm({a}, {bad[0]}) = {math.lcm(a, bad[0])} is not in R"))
            break
    forcing = sorted(R & p.simple_only)
    if forcing and not t.G.is_trivial:
        out.append((4, f"R contains {forcing[0]}, which forces G to be trivial"))
    outside = sorted(R - p.ranks)
    if outside:
        out.append((5, f"{outside} not in delta(I) or delta(J) (n = {p.n})"))
    return out


def is_valid_triple(t: GTriple) -> bool:
    return not validate_triple(t)


def _require_valid(t: GTriple):
    errs = validate_triple(t)
    if errs:
        raise PreconditionError("invalid triple: " + "; ".join(f"axiom {i}: {m}" for i, m in errs))


def to_mv(t: GTriple) -> Lex:
    """Gamma(Z x_lex G, (max R, g))."""
    _require_valid(t)
    return Lex(t.R.max, t.G, t.g)


def from_mv(A, p: KomoriPair) -> GTriple:
    """The triple of a lex algebra (a chain S_k counts as lex with trivial G)."""
    if isinstance(A, Chain):
        A = Lex(A.n)
    if not isinstance(A, Lex):
        raise TypeError("from_mv needs a lex algebra or a chain")
    t = GTriple(A.group, A.g, ideal_from_max(A.rank, p))
    _require_valid(t)
    return t


# ---------------------------------------------------------------------------
# homomorphisms
# ---------------------------------------------------------------------------


def _apply(matrix, x):
    return tuple(sum(a * b for a, b in zip(row, x)) for row in matrix)


def _columns(matrix, r):
    return [tuple(row[j] for row in matrix) for j in range(r)]


def is_order_preserving(matrix, source: LGroup, target: LGroup) -> bool:
    """Whether the integer matrix maps the positive cone of ``source`` into that of ``target``."""
    cols = _columns(matrix, source.dims)
    if source.kind != "int_lex" or source.dims <= 1:
        # pointwise (or one-dimensional) cone is generated by the unit vectors
        return all(target.is_nonneg(c) for c in cols)
    s = target.dims
    for p, v in enumerate(cols):
        later = cols[p + 1 :]
        if target.kind == "int_lex" or s <= 1:
            lead = next((i for i, c in enumerate(v) if c != 0), None)
            if lead is None:
                if any(any(w) for w in later):
                    return False
            elif v[lead] < 0 or any(any(w[: lead + 1]) for w in later):
                return False
        else:
            # each coordinate is a functional on a lex group: only the
            # leading coordinate of the source may contribute
            if any(c < 0 for c in v) or (p > 0 and any(v)):
                return False
    return True


def is_lattice_preserving(matrix, source: LGroup, target: LGroup) -> bool:
    """Order-preserving and commuting with inf (hence an l-group homomorphism)."""
    if not is_order_preserving(matrix, source, target):
        return False
    if source.is_total:
        return True
    cols = _columns(matrix, source.dims)
    if target.is_total:
        return sum(1 for c in cols if any(c)) <= 1
    return all(sum(1 for a in row if a) <= 1 for row in matrix)


@dataclass(frozen=True)
class TripleHom:
    """``(f, R <= P)``: an l-group map given by ``matrix`` (target dims x source dims)."""

    source: GTriple
    target: GTriple
    matrix: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(tuple(int(a) for a in row) for row in self.matrix))

    def f(self, x) -> GroupElem:
        return _apply(self.matrix, x)


def identity_hom(t: GTriple) -> TripleHom:
    r = t.G.dims
    return TripleHom(t, t, tuple(tuple(int(i == j) for j in range(r)) for i in range(r)))


def validate_hom(h: TripleHom) -> List[str]:
    s, t = h.source, h.target
    out = []
    if len(h.matrix) != t.G.dims or any(len(row) != s.G.dims for row in h.matrix):
        return [f"matrix must be {t.G.dims} x {s.G.dims}"]
    for tri, tag in ((s, "source"), (t, "target")):
        if validate_triple(tri):
            out.append(f"{tag} triple is invalid")
    if not s.R <= t.R:
        out.append("source ideal is not contained in the target ideal")
    if h.f(s.g) != t.g:
        out.append(f"f(g) = {list(h.f(s.g))} differs from {list(t.g)}")
    if not is_lattice_preserving(h.matrix, s.G, t.G):
        out.append("matrix is not an l-group homomorphism")
    return out


@dataclass(frozen=True)
class MVMap:
    """The algebra map induced by a triple homomorphism."""

    hom: TripleHom

    @property
    def source(self) -> Lex:
        return to_mv(self.hom.source)

    @property
    def target(self) -> Lex:
        return to_mv(self.hom.target)

    @property
    def factor(self) -> int:
        return self.hom.target.R.max // self.hom.source.R.max

    def __call__(self, x):
        self.source.check(x)
        i, y = x
        return (self.factor * i, self.hom.f(y))


def map_hom(h: TripleHom) -> MVMap:
    """``(i, x) -> (max(P)/max(R) * i, f(x))``."""
    errs = validate_hom(h)
    if errs:
        raise PreconditionError("; ".join(errs))
    if h.target.R.max % h.source.R.max:
        raise PreconditionError("max(R) does not divide max(P)")
    return MVMap(h)
