"""JSON documents for algebras, elements and triples.

Algebra documents::

    {"kind": "chain", "n": 7}
    {"kind": "product", "factors": [doc, ...]}
    {"kind": "lex", "rank": 2, "group": {"kind": "int_lex", "dims": 1}, "g": [0]}
    {"kind": "quotient", "base": doc, "ideal_gens": [elem, ...]}
    {"kind": "subalgebra", "ambient": doc, "gens": [elem, ...]}
    {"kind": "explicit", "oplus": [[...], ...], "neg": [...], "zero": 0}

Elements: a chain element is its numerator, a product element an array, a
lex element ``[m, [h1, ...]]``, and quotient or explicit elements are class
indices.  Subalgebra elements use the ambient encoding.
"""

from __future__ import annotations

from typing import Any

from .algebra import Chain, Lex, MVAlgebra, Product, Quotient, Subalgebra, TableAlgebra
from .lgroup import LGroup
from .morita import DivisorIdeal, GTriple
from .radical import ideal_generated
from .variety import KomoriPair


class DocError(ValueError):
    """A document does not match the schema."""


def _int(v, what):
    if not isinstance(v, int) or isinstance(v, bool):
        raise DocError(f"{what} must be an integer, got {v!r}")
    return v


def _need(doc, key):
    if not isinstance(doc, dict):
        raise DocError(f"expected an object, got {doc!r}")
    if key not in doc:
        raise DocError(f"missing field {key!r} in {doc!r}")
    return doc[key]


def group_from_doc(doc) -> LGroup:
    if doc is None:
        return LGroup.trivial()
    kind = _need(doc, "kind")
    dims = _int(doc.get("dims", 0), "dims")
    try:
        return LGroup(kind, dims)
    except ValueError as exc:
        raise DocError(str(exc)) from None


def group_to_doc(G: LGroup) -> dict:
    return {"kind": G.kind, "dims": G.dims}


def algebra_from_doc(doc) -> MVAlgebra:
    kind = _need(doc, "kind")
    try:
        if kind == "chain":
            return Chain(_int(_need(doc, "n"), "n"))
        if kind == "product":
            factors = _need(doc, "factors")
            if not isinstance(factors, list):
                raise DocError("factors must be an array")
            return Product(tuple(algebra_from_doc(f) for f in factors))
        if kind == "lex":
            G = group_from_doc(doc.get("group"))
            g = [_int(c, "g coordinate") for c in doc.get("g", [])]
            return Lex(_int(_need(doc, "rank"), "rank"), G, tuple(g))
        if kind == "quotient":
            base = algebra_from_doc(_need(doc, "base"))
            gens = [elem_from_json(base, e) for e in _need(doc, "ideal_gens")]
            return Quotient(base, ideal_generated(base, gens).members)
        if kind == "subalgebra":
            amb = algebra_from_doc(_need(doc, "ambient"))
            return Subalgebra(amb, [elem_from_json(amb, e) for e in _need(doc, "gens")])
        if kind == "explicit":
            return TableAlgebra(_need(doc, "oplus"), _need(doc, "neg"), _int(doc.get("zero", 0), "zero"))
    except DocError:
        raise
    except (ValueError, TypeError) as exc:
        raise DocError(f"invalid {kind} document: {exc}") from None
    raise DocError(f"unknown algebra kind {kind!r}")


def algebra_to_doc(A: MVAlgebra) -> dict:
    if isinstance(A, Chain):
        return {"kind": "chain", "n": A.n}
    if isinstance(A, Product):
        return {"kind": "product", "factors": [algebra_to_doc(f) for f in A.factors]}
    if isinstance(A, Lex):
        return {"kind": "lex", "rank": A.rank, "group": group_to_doc(A.group), "g": list(A.g)}
    if isinstance(A, Quotient):
        gens = sorted(A.ideal, key=A.base.index)
        return {
            "kind": "quotient",
            "base": algebra_to_doc(A.base),
            "ideal_gens": [elem_to_json(A.base, x) for x in gens],
        }
    if isinstance(A, Subalgebra):
        return {
            "kind": "subalgebra",
            "ambient": algebra_to_doc(A.ambient),
            "gens": [elem_to_json(A.ambient, g) for g in A.generators],
        }
    if isinstance(A, TableAlgebra):
        oplus, neg = A.tables
        return {"kind": "explicit", "oplus": [list(r) for r in oplus], "neg": list(neg), "zero": A.zero}
    raise DocError(f"no document form for {A}")


def elem_from_json(A: MVAlgebra, v: Any):
    """Decode and validate an element of ``A``."""
    x = _decode(A, v)
    if not A.contains(x):
        raise DocError(f"{v!r} is not an element of {A}")
    return x


def _decode(A, v):
    if isinstance(A, Subalgebra):
        return _decode(A.ambient, v)
    if isinstance(A, Product):
        if not isinstance(v, list) or len(v) != len(A.factors):
            raise DocError(f"expected an array of {len(A.factors)} components, got {v!r}")
        return tuple(_decode(f, c) for f, c in zip(A.factors, v))
    if isinstance(A, Lex):
        if not (isinstance(v, list) and len(v) == 2 and isinstance(v[1], list)):
            raise DocError(f"lex elements are [m, [h...]], got {v!r}")
        return (_int(v[0], "m"), tuple(_int(c, "h coordinate") for c in v[1]))
    return _int(v, "element")


def elem_to_json(A: MVAlgebra, x) -> Any:
    if isinstance(A, Subalgebra):
        return elem_to_json(A.ambient, x)
    if isinstance(A, Product):
        return [elem_to_json(f, c) for f, c in zip(A.factors, x)]
    if isinstance(A, Lex):
        return [x[0], list(x[1])]
    return x


def triple_from_doc(doc, pair: KomoriPair) -> GTriple:
    """``{"group": {...}, "g": [...], "R": [...]}``."""
    G = group_from_doc(doc.get("group") if isinstance(doc, dict) else None)
    g = [_int(c, "g coordinate") for c in doc.get("g", [])]
    R = [_int(k, "R member") for k in _need(doc, "R")]
    try:
        return GTriple(G, tuple(g), DivisorIdeal(pair, frozenset(R)))
    except ValueError as exc:
        raise DocError(str(exc)) from None


def triple_to_doc(t: GTriple) -> dict:
    return {"group": group_to_doc(t.G), "g": list(t.g), "R": sorted(t.R.members)}
