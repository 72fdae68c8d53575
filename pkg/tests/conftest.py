import random

import pytest

from localmv.algebra import Lex, Quotient, Subalgebra, chain, product
from localmv.lgroup import LGroup
from localmv.radical import ideal_generated


def finite_corpus(max_size=81):
    """Deterministic list of (name, algebra) for finite algebras up to max_size elements."""
    out = [(f"S{k}", chain(k)) for k in range(0, 13)]
    for a in range(1, 9):
        for b in range(a, 9):
            if (a + 1) * (b + 1) <= max_size:
                out.append((f"S{a}xS{b}", product(chain(a), chain(b))))
    for dims in [(1, 1, 1), (2, 2, 2), (1, 2, 3), (1, 1, 2), (1, 1, 1, 1), (2, 2, 1, 1)]:
        A = product(*(chain(d) for d in dims))
        if A.size <= max_size:
            out.append(("x".join(f"S{d}" for d in dims), A))
    out.append(("Lex0(Z,(5))", Lex(0, LGroup.int_lex(1), (5,))))
    S66 = product(chain(6), chain(6))
    out.append(("S6xS6/((6,0))", Quotient(S66, ideal_generated(S66, [(6, 0)]).members)))
    out.append(("<(2,3)> in S6xS6", Subalgebra(S66, [(2, 3)])))
    out.append(("<(1,2)> in S4xS4", Subalgebra(product(chain(4), chain(4)), [(1, 2)])))
    return [(name, A) for name, A in out if A.size <= max_size]


@pytest.fixture(scope="session")
def corpus():
    return finite_corpus()


@pytest.fixture
def rng():
    return random.Random(20261016)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
