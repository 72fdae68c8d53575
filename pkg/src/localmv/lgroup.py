"""Lattice-ordered abelian groups over integer coordinates.

Three concrete groups are supported:

* ``trivial``          the zero group (no coordinates),
* ``int_lex(r)``       Z^r with the lexicographic (total) order,
* ``int_pointwise(r)`` Z^r with the componentwise (lattice) order.

Elements are plain tuples of Python ints, so arithmetic never overflows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from .errors import ElementError

GroupElem = Tuple[int, ...]

KINDS = ("trivial", "int_lex", "int_pointwise")


@dataclass(frozen=True)
class LGroup:
    kind: str = "trivial"
    dims: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown l-group kind {self.kind!r}")
        if self.dims < 0:
            raise ValueError("dims must be >= 0")
        if self.kind == "trivial" and self.dims != 0:
            raise ValueError("the trivial group has no coordinates")
        if self.kind != "trivial" and self.dims == 0:
            # Z^0 is the trivial group whatever order is named.
            object.__setattr__(self, "kind", "trivial")

    @classmethod
    def trivial(cls) -> "LGroup":
        return cls("trivial", 0)

    @classmethod
    def int_lex(cls, r: int) -> "LGroup":
        return cls("int_lex", r)

    @classmethod
    def int_pointwise(cls, r: int) -> "LGroup":
        return cls("int_pointwise", r)

    @property
    def is_trivial(self) -> bool:
        return self.dims == 0

    @property
    def is_total(self) -> bool:
        return self.kind != "int_pointwise" or self.dims <= 1

    # -- elements ---------------------------------------------------------

    def zero(self) -> GroupElem:
        return (0,) * self.dims

    def elem(self, coords: Iterable[int]) -> GroupElem:
        h = tuple(int(c) for c in coords)
        if len(h) != self.dims:
            raise ElementError(f"expected {self.dims} coordinates, got {len(h)}")
        return h

    def check(self, h: Sequence[int]) -> GroupElem:
        if not isinstance(h, tuple) or len(h) != self.dims or not all(
            isinstance(c, int) and not isinstance(c, bool) for c in h
        ):
            raise ElementError(f"{h!r} is not an element of {self}")
        return h

    def add(self, a: GroupElem, b: GroupElem) -> GroupElem:
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a: GroupElem, b: GroupElem) -> GroupElem:
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a: GroupElem) -> GroupElem:
        return tuple(-x for x in a)

    def scale(self, k: int, a: GroupElem) -> GroupElem:
        return tuple(k * x for x in a)

    # -- order ------------------------------------------------------------

    def leq(self, a: GroupElem, b: GroupElem) -> bool:
        if self.kind == "int_pointwise":
            return all(x <= y for x, y in zip(a, b))
        return a <= b  # tuple comparison is lexicographic

    def is_nonneg(self, a: GroupElem) -> bool:
        return self.leq(self.zero(), a)

    def inf(self, a: GroupElem, b: GroupElem) -> GroupElem:
        if self.kind == "int_pointwise":
            return tuple(min(x, y) for x, y in zip(a, b))
        return min(a, b)

    def sup(self, a: GroupElem, b: GroupElem) -> GroupElem:
        if self.kind == "int_pointwise":
            return tuple(max(x, y) for x, y in zip(a, b))
        return max(a, b)

    def min_multiple_reaching(self, h: GroupElem, target: GroupElem) -> Optional[int]:
        """Least ``j >= 1`` with ``j*h >= target``, or None if there is none.

        ``h`` must be non-negative.
        """
        if self.leq(target, h):
            return 1
        if self.kind == "int_pointwise":
            j = 1
            for hi, ti in zip(h, target):
                if ti > 0:
                    if hi == 0:
                        return None
                    j = max(j, -(-ti // hi))
            return j
        # lexicographic: only the leading coordinate of h can grow without bound
        lead = next((i for i, c in enumerate(h) if c != 0), None)
        if lead is None:
            return None
        if any(c != 0 for c in target[:lead]):
            # target > 0 there, since target > h >= 0 was excluded above only
            # when target dominates h; a positive earlier coordinate is unreachable
            return None if target[:lead] > (0,) * lead else 1
        j = max(1, -(-target[lead] // h[lead]))
        if self.leq(target, self.scale(j, h)):
            return j
        return j + 1

    def __str__(self):
        if self.is_trivial:
            return "0"
        if self.kind == "int_lex":
            return f"Z^{self.dims}(lex)" if self.dims > 1 else "Z"
        return f"Z^{self.dims}(pointwise)" if self.dims > 1 else "Z"
