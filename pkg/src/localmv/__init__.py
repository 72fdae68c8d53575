"""Exact computations with local MV-algebras in Komori varieties.

The package builds MV-algebras from lattice-ordered groups (finite chains,
lexicographic products and their finite products), computes radicals,
ranks and locality, decides membership in a variety V(I, J), classifies
elements into Fin classes, splits finite algebras into local factors and
translates between local algebras and l-group triples.  The :mod:`localmv.lab`
subpackage checks geometric sequents on finite models.
"""

from .algebra import (
    INFINITY,
    Chain,
    Lex,
    MVAlgebra,
    Product,
    Quotient,
    Subalgebra,
    TableAlgebra,
    chain,
    check_mv_axioms,
    dist,
    elements,
    gamma,
    join,
    komori_chain,
    leq,
    lex,
    meet,
    neg,
    odot,
    ominus,
    oplus,
    order,
    power,
    product,
    scalar,
    trivial,
)
from .errors import (
    AnomalyError,
    ElementError,
    InfiniteAlgebraError,
    MVError,
    NotLocalError,
    ParseError,
    PreconditionError,
    SearchBoundExceeded,
    UnsupportedAlgebraError,
)
from .finclass import (
    GoodSequence,
    a_loc,
    alpha_check,
    bezout,
    classify,
    d_term,
    decompose_by_booleans,
    decompose_by_generators,
    embed_rank_n,
    equiv_rad,
    gs_scalar,
    gs_sub,
    gs_sum,
)
from .lgroup import LGroup
from .morita import (
    DivisorIdeal,
    GTriple,
    TripleHom,
    from_mv,
    ideal_from_max,
    map_hom,
    max_of_ideal,
    to_mv,
    validate_triple,
)
from .radical import (
    Ideal,
    boolean_atoms,
    boolean_skeleton,
    coradical_set,
    hom_count,
    homs,
    ideal_generated,
    is_boolean,
    is_local,
    is_radical_elem,
    is_simple,
    quotient,
    radical_set,
    rank,
)
from .variety import (
    KomoriPair,
    delta,
    delta_big,
    dnl_equations,
    invariant_n,
    is_local_member,
    is_member_finite,
    pair,
    parse_pair,
    reduce_pair,
)

__version__ = "0.1.0"
