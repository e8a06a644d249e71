import random

import pytest
from hypothesis import strategies as st

from iel.calculus import Calculus, check_proof
from iel.corpus import random_formula
from iel.formula import BOTTOM, And, Implies, Know, Or, Var
from iel.prover import prove
from iel.sequent import Sequent
from iel.syntax import parse, parse_sequent
from iel.transform import expand_to_minus

# one PASS/FAIL line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


ATOMS = st.sampled_from([Var("p"), Var("q"), Var("r"), BOTTOM])

formulas = st.recursive(
    ATOMS,
    lambda sub: st.one_of(
        st.builds(Know, sub),
        st.builds(And, sub, sub),
        st.builds(Or, sub, sub),
        st.builds(Implies, sub, sub),
    ),
    max_leaves=6,
)


def F(text):
    return parse(text)


def S(text):
    return parse_sequent(text)


def random_sequent(rng, max_ant=3, ant_size=2, goal_size=4):
    ant = tuple(random_formula(rng, rng.randrange(ant_size + 1))
                for _ in range(rng.randrange(max_ant + 1)))
    return Sequent(ant, random_formula(rng, rng.randrange(goal_size + 1)))


def minus_proofs(seed, count, **kw):
    """Valid IELG- proofs: prover output on random provable sequents, expanded."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        s = random_sequent(rng, **kw)
        r = prove(s)
        if r.proved:
            out.append(expand_to_minus(r.proof))
    return out


@pytest.fixture(scope="session")
def minus_corpus():
    proofs = minus_proofs(2024, 200, max_ant=3)
    assert all(check_proof(Calculus.IELG_MINUS, t) for t in proofs)
    return proofs
