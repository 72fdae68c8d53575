"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line (with wall time and the time
budget) that is printed in the terminal summary.
"""

import contextlib
import itertools
import random
import time

import pytest

from localmv.algebra import Lex, chain, product
from localmv.finclass import (
    GoodSequence,
    bezout,
    classify,
    decompose_by_generators,
    fin_classes,
    gs_from_int,
    gs_sub,
    gs_sum,
    gs_value,
)
from localmv.lab import check_sequent, holds, solutions
from localmv.lab.builtins import builtin
from localmv.lgroup import LGroup
from localmv.morita import GTriple, TripleHom, from_mv, ideal_from_max, map_hom, to_mv
from localmv.radical import hom_count, is_local, is_radical_elem, radical_set
from localmv.variety import delta, is_member_finite, pair

from conftest import ACCEPTANCE_LINES
from oracles import bezout_scan, chain_hom_count, good_sequences, int_of, sample_lex_elements

pytestmark = pytest.mark.acceptance

Z = LGroup.int_lex(1)


@contextlib.contextmanager
def criterion(number, title, budget=None):
    """Time the block and record one PASS/FAIL line."""
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        status = "PASS"
    finally:
        secs = time.perf_counter() - start
        if status == "PASS" and budget is not None and secs >= budget:
            status = "FAIL"
        limit = f" (budget {budget:g} s)" if budget is not None else ""
        line = f"criterion {number:02d} {status} {secs:8.3f} s{limit}  {title}"
        ACCEPTANCE_LINES.append(line)
        print(line)
    assert budget is None or secs < budget, f"criterion {number} took {secs:.2f} s"


def test_01_s7_squared_decomposition():
    with criterion(1, "S7 x S7 decomposition trees", budget=1):
        A = product(chain(7), chain(7))
        one = decompose_by_generators(A, [(2, 3)], 7)
        assert not one.success
        assert sorted(one.leaf_labels) == ["non-local", "trivial"]
        assert one.leaves[1].algebra.size == A.size
        two = decompose_by_generators(A, [(1, 0), (0, 1)], 7)
        assert two.success
        assert sorted(two.leaf_labels) == ["S_7", "S_7", "trivial", "trivial"]
        w = two.witness
        assert len(set(w.values())) == A.size == 64


LEMMA_PAIRS = [pair([], [1]), pair([], [2]), pair([4], [2]), pair([6], [3])]


def _lemma_sequents(n):
    out = []
    for item in ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix"):
        for k in (1, 2, 3):
            out.append(builtin(f"rad-lemma-{item}", n=n, k=k))
    out += [builtin("twoseq-i", n=n, k=k) for k in (1, 2, 3)]
    out.append(builtin("twoseq-ii", n=n))
    return out


def test_02_lemma_items_and_two_sequents():
    with criterion(2, "radical lemma items and the two sequents, finite and lex", budget=300):
        rnd = random.Random(2)
        for p in LEMMA_PAIRS:
            n = p.n
            seqs = _lemma_sequents(n)
            finite = [chain(k) for k in sorted(delta(n))]
            finite += [product(chain(k), chain(j)) for k in sorted(delta(n)) for j in sorted(delta(n)) if k <= j]
            for A in finite:
                assert is_member_finite(A, p), (str(A), str(p))
                for s in seqs:
                    res = check_sequent(A, s)
                    assert res.holds, (str(A), s.name, res.counterexample)
            # lex members: ranks dividing some j in J, with a nontrivial group
            for k in sorted(k for k in p.ranks if k not in p.simple_only):
                for g in ((0,), (3,), (-2,)):
                    A = Lex(k, Z, g)
                    xs = sample_lex_elements(rnd, k, g, 500, span=12)
                    ys = xs[1:] + xs[:1]
                    for s in seqs:
                        if len(s.context) == 1:
                            envs = [{"x": x} for x in xs]
                        else:
                            envs = [{"x": x, "y": y} for x, y in zip(xs, ys)]
                        res = check_sequent(A, s, assignments=envs)
                        assert res.holds, (str(A), s.name, res.counterexample)


def test_03_classifier_on_lex():
    with criterion(3, "classify((m, h)) = m*n/k on lex(k, Z, g)"):
        for n in (2, 4, 6):
            for k in sorted(delta(n)):
                for g in range(-5, 6):
                    A = Lex(k, Z, (g,))
                    for m in range(k + 1):
                        for h in range(-10, 11):
                            x = (m, (h,))
                            if A.contains(x):
                                assert classify(A, x, n) == m * n // k, (k, g, x, n)


def test_04_compatibility():
    with criterion(4, "classifier is a homomorphism onto S_n"):
        rnd = random.Random(4)
        for n in (1, 2, 4, 6, 12):
            for k in sorted(delta(n)):
                A = chain(k)
                cls = {x: classify(A, x, n) for x in A.elements()}
                for x in A.elements():
                    assert cls[A.negate(x)] == n - cls[x]
                    for y in A.elements():
                        assert cls[A.add(x, y)] == min(cls[x] + cls[y], n)
                for g in ((0,), (2,), (-3,)):
                    L = Lex(k, Z, g)
                    xs = sample_lex_elements(rnd, k, g, 60, span=10)
                    for x in xs:
                        assert classify(L, L.negate(x), n) == n - classify(L, x, n)
                    for x, y in zip(xs, reversed(xs)):
                        assert classify(L, L.add(x, y), n) == min(classify(L, x, n) + classify(L, y, n), n)


def test_05_sigma_rho_local(corpus):
    with criterion(5, "sigma_n <=> rho_n <=> local on corpus algebras in V, and the (2,1) gap"):
        pairs = LEMMA_PAIRS + [pair([12], []), pair([], [6])]
        checked = 0
        for p in pairs:
            sigma, rho = builtin("sigma", n=p.n), builtin("rho", n=p.n)
            for name, A in corpus:
                if A.is_trivial or not is_member_finite(A, p):
                    continue
                s_ok = bool(check_sequent(A, sigma))
                r_ok = bool(check_sequent(A, rho))
                assert s_ok == r_ok == is_local(A), (name, str(p))
                checked += 1
        assert checked >= 40
        S44 = product(chain(4), chain(4))
        x = (2, 1)
        assert S44.add(S44.add(S44.add(S44.add(x, x), x), x), x) == S44.one
        assert holds(S44, builtin("sigma", n=4).succedent, {"x": x})
        assert fin_classes(S44, x, 4) == [] and classify(S44, x, 4) is None


def test_06_bezout():
    with criterion(6, "Bezout uniqueness scan for a, b <= 40", budget=1):
        for a in range(1, 41):
            for b in range(1, 41):
                assert bezout_scan(a, b) == [tuple(bezout(a, b))]


def test_07_good_sequences():
    with criterion(7, "good sequences against integers, and subtraction after addition"):
        for m in range(1, 7):
            A = chain(m)
            seqs = good_sequences(m, 4)
            for a, b in itertools.product(seqs, repeat=2):
                ga, gb = GoodSequence(A, a), GoodSequence(A, b)
                assert gs_value(gs_sum(ga, gb)) == int_of(a) + int_of(b)
                if int_of(a) <= int_of(b):
                    assert gs_value(gs_sub(gb, ga)) == int_of(b) - int_of(a)
        rnd = random.Random(7)
        L = Lex(2, Z, (1,))
        for i in range(10**4):
            if i % 2:
                A = chain(rnd.randint(1, 8))
                a, b = gs_from_int(rnd.randint(0, 60), A), gs_from_int(rnd.randint(0, 60), A)
            else:
                x, y = sample_lex_elements(rnd, 2, (1,), 2, span=20)
                a = GoodSequence(L, (x,))
                b = gs_sum(GoodSequence(L, (y,)), GoodSequence(L, (y,)))
            assert gs_sub(gs_sum(a, b), a) == b


def test_08_membership():
    with criterion(8, "membership of S_k in V({m}, {}) and V({}, {m}) iff k | m", budget=120):
        for k in range(1, 13):
            for m in range(1, 13):
                expected = m % k == 0
                assert bool(is_member_finite(chain(k), pair([m], []))) == expected
                assert bool(is_member_finite(chain(k), pair([], [m]))) == expected


MORITA_PAIRS = [pair([], [1]), pair([2], []), pair([], [2]), pair([4], [2]), pair([6], [3]), pair([12], [4])]
GROUPS = [LGroup.trivial(), Z, LGroup.int_lex(2), LGroup.int_pointwise(2)]


def _random_triple(p, rnd):
    k = rnd.choice(sorted(p.ranks))
    G = LGroup.trivial() if k in p.simple_only else rnd.choice(GROUPS)
    return GTriple(G, tuple(rnd.randint(-9, 9) for _ in range(G.dims)), ideal_from_max(k, p))


HOMS = [
    (Z, (0,), 1, Z, (0,), 2, ((1,),)),
    (Z, (3,), 2, Z, (6,), 6, ((2,),)),
    (LGroup.int_lex(2), (1, -2), 1, Z, (1,), 3, ((1, 0),)),
    (Z, (2,), 3, LGroup.int_pointwise(2), (2, 4), 6, ((1,), (2,))),
    (Z, (1,), 2, LGroup.trivial(), (), 4, ()),
]


def test_09_morita():
    with criterion(9, "triple roundtrip and induced maps preserve oplus and neg"):
        rnd = random.Random(9)
        for p in MORITA_PAIRS:
            assert p.n in (1, 2, 4, 6, 12)
            for _ in range(20):
                t = _random_triple(p, rnd)
                assert from_mv(to_mv(t), p) == t
        q = pair([], [12])
        for G, g, k, H, h, m, M in HOMS:
            F = map_hom(TripleHom(GTriple(G, g, ideal_from_max(k, q)), GTriple(H, h, ideal_from_max(m, q)), M))
            A, B = F.source, F.target
            xs = sample_lex_elements(rnd, k, g, 2000, span=15)
            xs = [x for x in xs if A.contains(x)][:1000]
            ys = xs[1:] + xs[:1]
            assert len(xs) == 1000
            for x, y in zip(xs, ys):
                assert F(A.add(x, y)) == B.add(F(x), F(y))
                assert F(A.negate(x)) == B.negate(F(x))


def test_10_hom_counts():
    with criterion(10, "hom_count(S_n, S_m) = [n | m] = number of phi_n solutions"):
        for n in range(1, 13):
            phi = builtin("phi", n=n)
            for m in range(1, 13):
                expected = int(m % n == 0)
                assert hom_count(chain(n), chain(m)) == expected == chain_hom_count(n, m)
                assert len(solutions(chain(m), phi)) == expected


def test_11_radical_closed_form():
    with criterion(11, "radical of lex(k, Z^r, g) is first component 0"):
        rnd = random.Random(11)
        algebras = [
            (1, LGroup.int_lex(1), (0,)),
            (2, LGroup.int_lex(1), (-4,)),
            (3, LGroup.int_lex(2), (1, -1)),
            (6, LGroup.int_lex(3), (0, 2, -5)),
        ]
        for k, G, g in algebras:
            A = Lex(k, G, g)
            rad = radical_set(A, k)
            for x in sample_lex_elements(rnd, k, g, 1000, span=25):
                for n in (k, 2 * k):
                    assert is_radical_elem(A, x, n) == (x[0] == 0)
                assert (x in rad) == (x[0] == 0)
