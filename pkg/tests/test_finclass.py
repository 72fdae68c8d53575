import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from localmv.algebra import Lex, chain, power, product, scalar, trivial
from localmv.errors import NotLocalError, PreconditionError
from localmv.finclass import (
    GoodSequence,
    a_loc,
    alpha_check,
    bezout,
    classify,
    d_sequence,
    d_term,
    decompose_by_booleans,
    decompose_by_generators,
    embed_rank_n,
    equiv_rad,
    fin_classes,
    gs_from_int,
    gs_scalar,
    gs_sub,
    gs_sum,
    gs_value,
)
from localmv.lgroup import LGroup
from localmv.radical import is_local
from localmv.variety import pair

from oracles import bezout_scan, good_sequences, int_of, sample_lex_elements

Z = LGroup.int_lex(1)
S5 = chain(5)


def gs(A, *entries):
    return GoodSequence(A, tuple(entries))


class TestBezout:
    def test_examples(self):
        assert tuple(bezout(3, 6)) == (3, 1, 0)
        assert tuple(bezout(2, 7)) == (1, 4, 1)
        assert tuple(bezout(4, 6)) == (2, 2, 1)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            bezout(0, 3)

    @pytest.mark.parametrize("a", range(1, 41))
    def test_unique_in_range(self, a):
        for b in range(1, 41):
            assert bezout_scan(a, b) == [tuple(bezout(a, b))]


class TestGoodSequences:
    def test_sum_examples(self):
        assert gs_sum(gs(S5, 5, 2), gs(S5, 4)) == gs(S5, 5, 5, 1)
        assert gs_sum(gs(S5, 3), gs(S5)) == gs(S5, 3)
        assert gs_sum(gs(S5, 5), gs(S5, 5)) == gs(S5, 5, 5)

    def test_sub_examples(self):
        assert gs_sub(gs(S5, 5, 5, 1), gs(S5, 4)) == gs(S5, 5, 2)
        assert gs_sub(gs(S5, 5, 2), gs(S5, 5, 2)) == gs(S5)
        with pytest.raises(PreconditionError):
            gs_sub(gs(S5, 4), gs(S5, 5, 5, 1))

    def test_scalar_examples(self):
        assert gs_scalar(0, 3, S5) == gs(S5)
        assert gs_scalar(3, 2, S5) == gs(S5, 5, 1)
        assert gs_scalar(2, 1, S5) == gs(S5, 2)

    def test_not_good_rejected(self):
        with pytest.raises(ValueError):
            gs(S5, 2, 3)

    def test_trailing_zeros_trimmed(self):
        assert gs(S5, 5, 0, 0).entries == (5,)

    def test_mixed_algebras_rejected(self):
        with pytest.raises(ValueError):
            gs_sum(gs(S5, 1), gs(chain(4), 1))

    @pytest.mark.parametrize("m", range(1, 7))
    def test_integer_bijection(self, m):
        A = chain(m)
        seqs = good_sequences(m, 4)
        for s in seqs:
            assert gs_value(gs(A, *s)) == int_of(s)
            assert gs_from_int(int_of(s), A) == gs(A, *s)
        for a, b in itertools.product(seqs, repeat=2):
            ga, gb = gs(A, *a), gs(A, *b)
            assert gs_value(gs_sum(ga, gb)) == int_of(a) + int_of(b)
            if int_of(a) <= int_of(b):
                assert gs_value(gs_sub(gb, ga)) == int_of(b) - int_of(a)
            else:
                with pytest.raises(PreconditionError):
                    gs_sub(gb, ga)

    def test_sum_laws_on_lex(self, rng):
        A = Lex(2, Z, (1,))
        els = sample_lex_elements(rng, 2, (1,), 40, span=4)
        for x, y, z in zip(els, els[1:], els[2:]):
            a, b, c = gs_scalar(2, x, A), gs_scalar(1, y, A), gs_scalar(3, z, A)
            assert gs_sum(a, b) == gs_sum(b, a)
            assert gs_sum(gs_sum(a, b), c) == gs_sum(a, gs_sum(b, c))
            assert gs_sub(gs_sum(a, b), a) == b


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 8), st.integers(0, 40), st.integers(0, 40))
def test_sub_inverts_sum(m, u, v):
    A = chain(m)
    a, b = gs_from_int(u, A), gs_from_int(v, A)
    assert gs_sub(gs_sum(a, b), a) == b


class TestDTerm:
    def test_divisor_case_is_identity(self):
        A = Lex(2, Z, (0,))
        assert d_term(A, (1, (3,)), 1, 2) == (1, (3,))
        for x in range(5):
            assert d_term(chain(4), x, 2, 4) == x

    def test_coprime_case(self):
        assert d_term(chain(7), 3, 3, 7) == 1

    def test_undefined_returns_none(self):
        # 5*1 - 2*7 < 0 in S7
        assert d_term(chain(7), 1, 3, 7) is None

    @pytest.mark.parametrize("n", [5, 6, 7, 12])
    def test_chain_value_matches_integer_oracle(self, n):
        A = chain(n)
        for d in range(1, n + 1):
            D, xi, chi = bezout(d, n)
            for x in A.elements():
                v = xi * x - chi * n
                s = d_sequence(A, x, d, n)
                if v < 0:
                    assert s is None
                else:
                    assert gs_value(s) == v

    def test_bad_d(self):
        with pytest.raises(ValueError):
            d_term(chain(4), 1, 0, 4)
        with pytest.raises(ValueError):
            d_term(chain(4), 1, 5, 4)


class TestClassifier:
    def test_equiv_rad_examples(self):
        A = Lex(2, Z, (0,))
        assert equiv_rad(A, (1, (3,)), (1, (3,)), 2)
        assert equiv_rad(A, (1, (3,)), (1, (-3,)), 2)
        assert not equiv_rad(chain(7), 1, 0, 7)

    def test_alpha_examples(self):
        assert alpha_check(chain(4), 0, 0, 4)
        assert alpha_check(Lex(2, Z, (0,)), (1, (3,)), 1, 2)
        S44 = product(chain(4), chain(4))
        assert not any(alpha_check(S44, (2, 1), d, 4) for d in range(5))
        assert not any(alpha_check(S44, (2, 1), d, 4, simplified=False) for d in range(5))

    def test_classify_examples(self):
        S44 = product(chain(4), chain(4))
        assert classify(S44, (2, 1), 4) is None
        assert classify(S44, (0, 0), 4) == 0
        assert classify(S44, (3, 3), 4) == 3
        with pytest.raises(NotLocalError):
            classify(trivial(), (), 3)

    @pytest.mark.parametrize("k,n", [(1, 1), (1, 2), (2, 2), (2, 4), (3, 6), (4, 12), (6, 6)])
    @pytest.mark.parametrize("g", [-3, 0, 2])
    def test_classify_lex_matches_projection(self, k, n, g, rng):
        A = Lex(k, Z, (g,))
        for x in sample_lex_elements(rng, k, (g,), 60, span=8):
            assert classify(A, x, n) == x[0] * n // k
            assert fin_classes(A, x, n, simplified=False) == [x[0] * n // k]

    @pytest.mark.parametrize("k,n", [(1, 4), (2, 4), (4, 4), (3, 6), (6, 6)])
    def test_classify_chains(self, k, n):
        A = chain(k)
        for x in A.elements():
            assert classify(A, x, n) == x * n // k

    def test_simplified_and_full_agree_on_corpus(self, corpus):
        for name, A in corpus:
            if A.is_trivial or A.size > 30:
                continue
            for n in (2, 4, 6):
                for x in A.elements():
                    assert fin_classes(A, x, n) == fin_classes(A, x, n, simplified=False), (name, n, x)


class TestEmbedding:
    def test_examples(self):
        e = embed_rank_n(Lex(2, Z, (6,)), 4)
        assert e((1, (5,))) == (2, (4,))
        assert e((2, (6,))) == (4, (0,))
        same = embed_rank_n(Lex(3, Z, (0,)), 3)
        # with g = 0 and k = n the first coordinate is fixed and y is scaled by k
        assert same((2, (-7,))) == (2, (-21,))
        assert embed_rank_n(Lex(1, Z, (0,)), 1)((1, (-7,))) == (1, (-7,))

    def test_rank_must_divide(self):
        with pytest.raises(PreconditionError):
            embed_rank_n(Lex(3, Z, (0,)), 4)

    @pytest.mark.parametrize("k,n,g", [(2, 4, (6,)), (3, 6, (-2,)), (1, 5, (4,)), (2, 2, (1,))])
    def test_operation_preserving(self, k, n, g, rng):
        A = Lex(k, Z, g)
        e = embed_rank_n(A, n)
        B = e.target
        els = sample_lex_elements(rng, k, g, 80, span=12)
        images = {x: e(x) for x in els}
        assert len(set(images.values())) == len(images)
        for x in els:
            assert e(A.negate(x)) == B.negate(images[x])
            assert e.projection(x) == classify(A, x, n)
        for x, y in zip(els, reversed(els)):
            assert e(A.add(x, y)) == B.add(images[x], images[y])


class TestALoc:
    def test_diagonal(self):
        S44 = product(chain(4), chain(4))
        assert set(a_loc(S44, 4).elements()) == {(d, d) for d in range(5)}

    def test_local_and_trivial(self):
        assert set(a_loc(chain(7), 7).elements()) == set(range(8))
        assert a_loc(trivial(), 3).size == 1


class TestDecomposition:
    def test_single_generator_fails(self):
        A = product(chain(7), chain(7))
        dec = decompose_by_generators(A, [(2, 3)], 7)
        assert not dec.success
        assert dec.leaf_labels == ["trivial", "non-local"]
        assert dec.leaves[1].algebra.size == A.size

    def test_coordinate_generators_succeed(self):
        A = product(chain(7), chain(7))
        dec = decompose_by_generators(A, [(1, 0), (0, 1)], 7)
        assert dec.success
        assert dec.leaf_labels == ["trivial", "S_7", "S_7", "trivial"]
        assert len(dec.witness) == 64

    def test_local_input_is_one_leaf(self):
        dec = decompose_by_generators(chain(7), [1], 7)
        assert dec.success and dec.leaf_labels == ["S_7"]

    def test_preconditions(self):
        A = product(chain(4), chain(4))
        with pytest.raises(PreconditionError):
            decompose_by_generators(A, [(1, 1)], 4)
        with pytest.raises(PreconditionError):
            decompose_by_generators(product(chain(4), chain(3)), [(1, 0), (0, 1)], 4, pair=pair([4], []))

    def test_success_gives_isomorphism(self, corpus):
        """Whenever the tree succeeds the witness is a checked isomorphism."""
        from localmv.radical import generating_set

        for name, A in corpus:
            if A.is_trivial or A.size > 50:
                continue
            gens = generating_set(A)
            dec = decompose_by_generators(A, gens, 12)
            if dec.success:
                w = dec.witness
                assert len(set(w.values())) == A.size, name

    def test_booleans_examples(self):
        S22 = product(chain(2), chain(2))
        dec, ok = decompose_by_booleans(S22, [(2, 0)])
        assert ok and sorted(l for l in dec.leaf_labels if l != "trivial") == ["S_2", "S_2"]
        S222 = product(chain(2), chain(2), chain(2))
        dec, ok = decompose_by_booleans(S222, [(2, 0, 0)])
        assert not ok and "non-local" in dec.leaf_labels
        dec, ok = decompose_by_booleans(chain(5), [])
        assert ok and dec.leaf_labels == ["S_5"]
        with pytest.raises(PreconditionError):
            decompose_by_booleans(S22, [(1, 0)])

    def test_to_dict(self):
        dec = decompose_by_generators(product(chain(2), chain(2)), [(1, 0), (0, 1)], 2)
        d = dec.to_dict()
        assert d["success"] and d["tree"]["path"] == "A" and len(d["leaves"]) == 4


def _rad_square(A, n, x):
    return power(A, scalar(A, n + 1, x), 2)


def test_rad_square_not_a_homomorphism_on_s2():
    A = chain(2)
    f = {x: _rad_square(A, 2, x) for x in A.elements()}
    assert f == {0: 0, 1: 2, 2: 2}
    pairs = list(itertools.product(A.elements(), repeat=2))
    # oplus survives on S2; negation and the product do not
    assert all(f[A.add(x, y)] == A.add(f[x], f[y]) for x, y in pairs)
    assert f[A.negate(1)] != A.negate(f[1])
    assert [(x, y) for x, y in pairs if f[A.mul(x, y)] != A.mul(f[x], f[y])] == [(1, 1)]


def test_rad_square_keeps_oplus_but_breaks_negation_on_s3():
    A = chain(3)
    f = {x: _rad_square(A, 3, x) for x in A.elements()}
    bad = [(x, y) for x, y in itertools.product(A.elements(), repeat=2) if f[A.add(x, y)] != A.add(f[x], f[y])]
    assert bad == []
    assert any(f[A.negate(x)] != A.negate(f[x]) for x in A.elements())


def test_rad_square_preserves_oplus_on_chang():
    A = Lex(1, Z, (0,))
    rnd = random.Random(3)
    els = sample_lex_elements(rnd, 1, (0,), 200, span=20)
    for x, y in itertools.product(els[:40], els[40:80]):
        assert _rad_square(A, 1, A.add(x, y)) == A.add(_rad_square(A, 1, x), _rad_square(A, 1, y))


def test_compatibility_on_local_corpus(corpus):
    for name, A in corpus:
        if A.is_trivial or not is_local(A):
            continue
        n = 12
        cls = {x: classify(A, x, n) for x in A.elements()}
        for x in A.elements():
            if cls[x] is None:
                continue
            assert cls[A.negate(x)] == n - cls[x], name
            for y in A.elements():
                if cls[y] is not None:
                    assert cls[A.add(x, y)] == min(cls[x] + cls[y], n), name
