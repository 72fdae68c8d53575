"""Fin classes of elements, good sequences and product decompositions.

For an algebra in a Komori variety with invariant ``n``, an element x lies in
class ``Fin_d`` (0 <= d <= n) when the Horn formula alpha_d^n holds of it.  On
a local algebra of rank k these classes are the fibres of the projection
``(m, h) -> m*n/k`` onto S_n.  The formula uses a term ``D_x`` that computes
``xi*x - chi*u`` inside the enveloping group through good sequences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .algebra import Chain, Lex, MVAlgebra, _dist, _power, _scalar, closure
from .errors import AnomalyError, NotLocalError, PreconditionError
from .lgroup import LGroup
from .radical import (
    _is_radical,
    boolean_skeleton,
    ideal_generated,
    is_local,
    quotient,
)

# ---------------------------------------------------------------------------
# Bezout
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BezoutTriple:
    D: int
    xi: int
    chi: int

    def __iter__(self):
        return iter((self.D, self.xi, self.chi))


def bezout(a: int, b: int) -> BezoutTriple:
    """The unique ``(D, xi, chi)`` with ``D = gcd(a, b) = xi*a - chi*b``,
    ``0 <= xi <= b/D`` and ``0 <= chi <= a/D``."""
    if a < 1 or b < 1:
        raise ValueError("bezout needs a, b >= 1")
    D = math.gcd(a, b)
    modulus = b // D
    xi = 1 if modulus == 1 else pow(a // D, -1, modulus)
    chi = (xi * a - D) // b
    return BezoutTriple(D, xi, chi)


# ---------------------------------------------------------------------------
# good sequences
# ---------------------------------------------------------------------------


def seq_sum(a: Sequence, b: Sequence, add: Callable, mul: Callable, zero) -> List:
    """Componentwise good-sequence sum over arbitrary ``add``/``mul``.

    ``c_i = a_i + (a_{i-1} . b_1) + ... + (a_1 . b_{i-1}) + b_i``.  Used both on
    elements and on terms.
    """
    r, t = len(a), len(b)
    out = []
    for i in range(1, r + t + 1):
        acc = a[i - 1] if i <= r else zero
        for j in range(max(1, i - r), min(i - 1, t) + 1):
            acc = add(acc, mul(a[i - j - 1], b[j - 1]))
        if i <= t:
            acc = add(acc, b[i - 1])
        out.append(acc)
    return out


def seq_scalar(k: int, x, add, mul, zero) -> List:
    s: List = []
    for _ in range(k):
        s = seq_sum(s, [x], add, mul, zero)
    return s


def seq_difference(b: Sequence, a: Sequence, add, mul, negate, zero) -> Tuple[List, List]:
    """``b + (neg a)^*`` after padding both to a common length r.

    Returns ``(head, tail)``: when a <= b the first r entries (``head``) are all
    1 and ``tail`` is ``b - a``.
    """
    r = max(len(a), len(b), 1)
    a = list(a) + [zero] * (r - len(a))
    b = list(b) + [zero] * (r - len(b))
    s = seq_sum(b, [negate(v) for v in reversed(a)], add, mul, zero)
    return s[:r], s[r:]


@dataclass(frozen=True)
class GoodSequence:
    """A good sequence over ``algebra``; trailing zeros are trimmed."""

    algebra: MVAlgebra
    entries: Tuple

    def __post_init__(self):
        A = self.algebra
        ent = [A.check(v) for v in self.entries]
        while ent and ent[-1] == A.zero:
            ent.pop()
        for u, v in zip(ent, ent[1:]):
            if A.add(u, v) != u:
                raise ValueError(f"not a good sequence: {u!r} + {v!r} != {u!r}")
        object.__setattr__(self, "entries", tuple(ent))

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i] if i < len(self.entries) else self.algebra.zero

    def first(self):
        return self[0]


def _same_algebra(a: GoodSequence, b: GoodSequence):
    if a.algebra != b.algebra:
        raise ValueError("good sequences over different algebras")
    return a.algebra


def gs_sum(a: GoodSequence, b: GoodSequence) -> GoodSequence:
    A = _same_algebra(a, b)
    return GoodSequence(A, tuple(seq_sum(a.entries, b.entries, A.add, A.mul, A.zero)))


def gs_sub(b: GoodSequence, a: GoodSequence) -> GoodSequence:
    """The unique c with ``a + c = b``; PreconditionError unless a <= b."""
    A = _same_algebra(a, b)
    head, tail = seq_difference(b.entries, a.entries, A.add, A.mul, A.negate, A.zero)
    if any(v != A.one for v in head):
        raise PreconditionError("subtrahend exceeds minuend")
    c = GoodSequence(A, tuple(tail))
    if gs_sum(a, c) != b:
        raise PreconditionError("difference does not add back to the minuend")
    return c


def gs_scalar(k: int, x, A: MVAlgebra) -> GoodSequence:
    """``k*(x)``: the k-fold sum of the one-entry sequence (x)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    A.check(x)
    return GoodSequence(A, tuple(seq_scalar(k, x, A.add, A.mul, A.zero)))


def gs_value(s: GoodSequence) -> int:
    """Integer value of a good sequence over a chain (sum of numerators)."""
    if not isinstance(s.algebra, Chain):
        raise TypeError("integer values exist only over chains")
    return sum(s.entries)


def gs_from_int(v: int, A: Chain) -> GoodSequence:
    """Inverse of :func:`gs_value`: ``(n, ..., n, v mod n)``."""
    if v < 0:
        raise ValueError("negative value")
    if A.n == 0:
        return GoodSequence(A, ())
    q, r = divmod(v, A.n)
    return GoodSequence(A, (A.n,) * q + ((r,) if r else ()))


# ---------------------------------------------------------------------------
# the D term and the classifier
# ---------------------------------------------------------------------------


def d_sequence(A: MVAlgebra, x, d: int, n: int) -> Optional[GoodSequence]:
    """``xi*(x) - chi*(1)`` as a good sequence, or None when it is undefined."""
    _check_dn(d, n, allow_zero=False)
    A.check(x)
    _, xi, chi = bezout(d, n)
    try:
        return gs_sub(gs_scalar(xi, x, A), gs_scalar(chi, A.one, A))
    except PreconditionError:
        return None


def d_term(A: MVAlgebra, x, d: int, n: int):
    """First entry of :func:`d_sequence` (None when undefined)."""
    s = d_sequence(A, x, d, n)
    return None if s is None else s.first()


def _check_dn(d, n, allow_zero=True):
    if n < 1:
        raise ValueError("n must be >= 1")
    lo = 0 if allow_zero else 1
    if not lo <= d <= n:
        raise ValueError(f"d must lie in {lo}..{n}")


def equiv_rad(A: MVAlgebra, z, w, n: int) -> bool:
    """``((n+1) d(z, w))^2 = 0``."""
    return _is_radical(A, _dist(A, A.check(z), A.check(w)), n)


def alpha_check(A: MVAlgebra, x, d: int, n: int, simplified: bool = True) -> bool:
    """Whether x satisfies alpha_d^n.

    The simplified form keeps only the k = 1 conjunct of the second clause;
    ``simplified=False`` checks every k in ``0..n/D``.
    """
    _check_dn(d, n)
    A.check(x)
    if d == 0:
        return _is_radical(A, x, n)
    D = math.gcd(d, n)
    dx = d_term(A, x, d, n)
    if dx is None:
        return False
    if not _is_radical(A, _dist(A, x, _scalar(A, d // D, dx)), n):
        return False
    ks = (1,) if simplified else range(n // D + 1)
    for k in ks:
        lhs = A.negate(_scalar(A, k, dx))
        if not _is_radical(A, _dist(A, lhs, _scalar(A, n // D - k, dx)), n):
            return False
    return True


def fin_classes(A: MVAlgebra, x, n: int, simplified: bool = True) -> List[int]:
    return [d for d in range(n + 1) if alpha_check(A, x, d, n, simplified)]


def classify(A: MVAlgebra, x, n: int, simplified: bool = True) -> Optional[int]:
    """The d with x in Fin_d^n, or None.

    Several satisfied classes contradict the partition property and raise
    :class:`AnomalyError`.
    """
    if A.is_trivial:
        raise NotLocalError("Fin classes collapse in the trivial algebra")
    ds = fin_classes(A, x, n, simplified)
    if not ds:
        return None
    if len(ds) > 1:
        raise AnomalyError(f"{x!r} satisfies alpha_d for several d: {ds}")
    return ds[0]


@dataclass(frozen=True)
class LexEmbedding:
    """The unital embedding of lex(k, G, g) into lex(n, G, 0) for k | n."""

    source: Lex
    n: int

    def __post_init__(self):
        k = self.source.rank
        if k < 1 or self.n % k:
            raise PreconditionError(f"rank {k} does not divide {self.n}")

    @property
    def target(self) -> Lex:
        return Lex(self.n, self.source.group, self.source.group.zero())

    def __call__(self, x):
        A = self.source
        A.check(x)
        m, y = x
        k, G = A.rank, A.group
        return (m * self.n // k, G.sub(G.scale(k, y), G.scale(m, A.g)))

    def projection(self, x) -> int:
        """The class of x in S_n: first coordinate of the image."""
        return self(x)[0]


def embed_rank_n(A: Lex, n: int) -> LexEmbedding:
    """``(m, y) -> (m*n/k, k*y - m*g)`` into lex(n, G, 0)."""
    if not isinstance(A, Lex):
        raise TypeError("embed_rank_n needs a lex algebra")
    return LexEmbedding(A, n)


def a_loc(A: MVAlgebra, n: int, strict: bool = True):
    """The subalgebra of classified elements.

    With ``strict`` a member set that is not closed under the operations
    raises :class:`AnomalyError`; otherwise the generated subalgebra is
    returned.
    """
    from .algebra import Subalgebra

    if A.is_trivial:
        return Subalgebra(A, [A.zero])
    members = [x for x in A.elements() if classify(A, x, n) is not None]
    sub = Subalgebra(A, members)
    if strict and sub.size != len(members):
        raise AnomalyError("classified elements are not closed under the operations")
    return sub


# ---------------------------------------------------------------------------
# decompositions
# ---------------------------------------------------------------------------


@dataclass
class DecompNode:
    """A node of a decomposition tree.

    ``algebra`` is a quotient of the root by the ideal accumulated along
    ``path``; ``projection`` maps root elements to elements of ``algebra``.
    """

    path: str
    algebra: MVAlgebra
    projection: Dict
    split: Optional[object] = None
    children: List["DecompNode"] = field(default_factory=list)
    label: str = ""

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def leaves(self) -> List["DecompNode"]:
        if self.is_leaf:
            return [self]
        return [leaf for c in self.children for leaf in c.leaves()]

    def describe(self) -> str:
        """``trivial``, ``S_k`` for local leaves, else ``non-local``."""
        return self.label


@dataclass
class Decomposition:
    root: DecompNode
    success: bool
    witness: Optional[Dict] = None

    @property
    def leaves(self) -> List[DecompNode]:
        return self.root.leaves()

    @property
    def leaf_labels(self) -> List[str]:
        return [leaf.label for leaf in self.leaves]

    def to_dict(self) -> dict:
        def node(nd):
            out = {"path": nd.path, "size": nd.algebra.size, "label": nd.label}
            if nd.children:
                out["split"] = repr(nd.split)
                out["children"] = [node(c) for c in nd.children]
            return out

        return {"success": self.success, "leaves": self.leaf_labels, "tree": node(self.root)}


def _label(Q: MVAlgebra) -> str:
    if Q.is_trivial:
        return "trivial"
    if is_local(Q):
        # a finite local MV-algebra is a finite chain
        return f"S_{Q.size - 1}"
    return "non-local"


def _split(node: DecompNode, b) -> None:
    Q = node.algebra
    for tag, gen in (("b", b), ("nb", Q.negate(b))):
        child = quotient(Q, ideal_generated(Q, [gen]))
        proj = {x: child.project(q) for x, q in node.projection.items()}
        node.children.append(DecompNode(node.path + "/" + tag, child, proj))
    node.split = b


def _finish(root: DecompNode, A: MVAlgebra) -> Decomposition:
    leaves = root.leaves()
    for leaf in leaves:
        leaf.label = _label(leaf.algebra)
    success = all(leaf.label != "non-local" for leaf in leaves)
    witness = None
    if success:
        witness = pairing_witness(A, [leaf for leaf in leaves if leaf.label != "trivial"])
    return Decomposition(root, success, witness)


def pairing_witness(A: MVAlgebra, leaves: Sequence[DecompNode]) -> Dict:
    """The map ``A -> product of leaves``, checked bijective and operation-preserving.

    Raises :class:`AnomalyError` if either check fails.
    """
    f = {x: tuple(leaf.projection[x] for leaf in leaves) for x in A.elements()}
    sizes = math.prod(leaf.algebra.size for leaf in leaves)
    if len(set(f.values())) != A.size or sizes != A.size:
        raise AnomalyError("pairing map is not a bijection")
    for x in A.elements():
        fx = f[x]
        if f[A.negate(x)] != tuple(L.algebra.negate(c) for L, c in zip(leaves, fx)):
            raise AnomalyError("pairing map does not preserve negation")
        for y in A.elements():
            fy = f[y]
            want = tuple(L.algebra.add(a, b) for L, a, b in zip(leaves, fx, fy))
            if f[A.add(x, y)] != want:
                raise AnomalyError("pairing map does not preserve oplus")
    return f


def _root(A: MVAlgebra) -> DecompNode:
    return DecompNode("A", A, {x: x for x in A.elements()})


def decompose_by_generators(A: MVAlgebra, gens: Sequence, n: int, pair=None) -> Decomposition:
    """Split A along ``b = ((n+1)x)^2`` for each generator x in turn.

    A local input is returned as a single leaf.  Otherwise every nontrivial
    node is split by the image of the next generator, (b) before (neg b);
    trivial nodes become leaves.  Success means every nontrivial leaf is
    local, and then the witness is the pairing isomorphism onto the product
    of those leaves.  With ``pair`` given, A must pass the variety check.
    """
    gens = [A.check(g) for g in gens]
    if len(closure(A, gens)) != A.size:
        raise PreconditionError("generators do not generate the algebra")
    if pair is not None:
        from .variety import is_member_finite

        verdict = is_member_finite(A, pair)
        if not verdict:
            raise PreconditionError(f"algebra is not in the variety: {verdict}")
    root = _root(A)
    if A.is_trivial or is_local(A):
        return _finish(root, A)

    def grow(node: DecompNode, rest: Sequence):
        Q = node.algebra
        if Q.is_trivial or not rest:
            return
        x = node.projection[rest[0]]
        b = _power(Q, _scalar(Q, n + 1, x), 2)
        if Q.add(b, b) != b:
            raise AnomalyError(f"((n+1)x)^2 is not Boolean at {node.path}")
        _split(node, b)
        for child in node.children:
            grow(child, rest[1:])

    grow(root, gens)
    return _finish(root, A)


def decompose_by_booleans(A: MVAlgebra, ys: Sequence) -> Tuple[Decomposition, bool]:
    """Split A successively by the idempotents ``ys``.

    Returns the tree and the verdict "ys generate the Boolean skeleton",
    which holds exactly when every nontrivial leaf is local; the verdict is
    cross-checked against the subalgebra generated by ``ys``.
    """
    ys = [A.check(y) for y in ys]
    for y in ys:
        if A.add(y, y) != y:
            raise PreconditionError(f"{y!r} is not Boolean")
    root = _root(A)

    def grow(node, rest):
        if node.algebra.is_trivial or not rest:
            return
        _split(node, node.projection[rest[0]])
        for child in node.children:
            grow(child, rest[1:])

    grow(root, ys)
    result = _finish(root, A)
    generated = len(closure(A, ys)) == boolean_skeleton(A).size
    if generated != result.success:
        raise AnomalyError("leaf locality disagrees with Boolean generation")
    return result, result.success
