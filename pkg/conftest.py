"""
Fixtures compartidas por las pruebas
"""

from typing import List

import pytest

from automata_core import Dfa
from config import ParametrosExperimento
from random_automata import RandomPair, seeded_pairs


def _corpus(count: int, max_states: int, max_alphabet: int) -> List[RandomPair]:
    return list(seeded_pairs(count, ParametrosExperimento.DEFAULT_SEED, max_states, max_alphabet,
                             ParametrosExperimento.RANDOM_ACCEPT_PROB))


# ============================================================================
# AUTÓMATAS PEQUEÑOS
# ============================================================================

@pytest.fixture
def sigma_star_x() -> Dfa:
    """Un estado de aceptación con bucle: {x}*"""
    return Dfa(("x",), 1, 0, {0}, ((0,),))


@pytest.fixture
def eps_or_x() -> Dfa:
    """{ε, x}"""
    return Dfa(("x",), 3, 0, {0, 1}, ((1,), (2,), (2,)))


@pytest.fixture
def eps_ab() -> Dfa:
    """{ε} sobre {a, b}: inicial de aceptación y sumidero"""
    return Dfa(("a", "b"), 2, 0, {0}, ((1, 1), (1, 1)))


@pytest.fixture
def single_a() -> Dfa:
    """{a} sobre {a, b}"""
    return Dfa(("a", "b"), 3, 0, {1}, ((1, 2), (2, 2), (2, 2)))


@pytest.fixture
def single_b() -> Dfa:
    """{b} sobre {a, b}"""
    return Dfa(("a", "b"), 3, 0, {1}, ((2, 1), (2, 2), (2, 2)))


@pytest.fixture
def word_ab() -> Dfa:
    """{ab} sobre {a, b}"""
    return Dfa(("a", "b"), 4, 0, {2}, ((1, 3), (3, 2), (3, 3), (3, 3)))


# ============================================================================
# CORPUS ALEATORIOS
# ============================================================================

@pytest.fixture(scope="session")
def corpus_orthogonality() -> List[RandomPair]:
    """1000 pares con m, n <= 4 y hasta 3 símbolos"""
    return _corpus(1000, 4, 3)


@pytest.fixture(scope="session")
def corpus_bounds() -> List[RandomPair]:
    """500 pares con m, n <= 5 y hasta 3 símbolos"""
    return _corpus(ParametrosExperimento.RANDOM_PAIRS, ParametrosExperimento.RANDOM_MAX_STATES,
                   ParametrosExperimento.RANDOM_MAX_ALPHABET)


@pytest.fixture(scope="session")
def corpus_construction() -> List[RandomPair]:
    """200 pares con m, n <= 5"""
    return _corpus(200, 5, 3)
