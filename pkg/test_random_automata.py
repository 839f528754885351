"""
Pruebas del generador reproducible de autómatas
"""

from fractions import Fraction

import pytest

from automata_core import enumerate_accepted
from errors import AutomatonInputError
from random_automata import SplitMix64, random_dfa, random_pair, seeded_pairs, symbol_names


def test_splitmix64_reference_values():
    rng = SplitMix64(0)
    assert rng.next_u64() == 0xE220A8397B1DCDAF
    assert rng.next_u64() == 0x6E789E6AA1B965F4


def test_below_stays_in_range():
    rng = SplitMix64(7)
    valores = [rng.below(5) for _ in range(500)]
    assert set(valores) == {0, 1, 2, 3, 4}


def test_chance_extremes():
    rng = SplitMix64(11)
    assert not any(rng.chance(Fraction(0)) for _ in range(50))
    assert all(rng.chance(Fraction(1)) for _ in range(50))


def test_symbol_names():
    assert symbol_names(3) == ("a", "b", "c")
    assert symbol_names(27)[:2] == ("s0", "s1")


def test_random_dfa_is_deterministic_in_seed():
    assert random_dfa(5, 3, Fraction(1, 3), 42) == random_dfa(5, 3, Fraction(1, 3), 42)
    assert random_dfa(5, 3, Fraction(1, 3), 42).start == 0


def test_random_dfa_accept_prob_extremes():
    assert enumerate_accepted(random_dfa(4, 2, 0, 3), 5) == []
    todo = random_dfa(1, 2, 1, 3)
    assert len(enumerate_accepted(todo, 3)) == 1 + 2 + 4 + 8


def test_random_dfa_accepts_string_probability():
    assert random_dfa(3, 2, "1/3", 9) == random_dfa(3, 2, Fraction(1, 3), 9)


def test_random_dfa_rejects_bad_arguments():
    with pytest.raises(AutomatonInputError):
        random_dfa(0, 2, Fraction(1, 2), 1)
    with pytest.raises(AutomatonInputError):
        random_dfa(2, 0, Fraction(1, 2), 1)
    with pytest.raises(AutomatonInputError):
        random_dfa(2, 2, Fraction(3, 2), 1)


def test_random_pair_ranges():
    for seed in range(200):
        par = random_pair(0, seed, 4, 3, Fraction(1, 3))
        assert 1 <= par.a.state_count <= 4
        assert 2 <= par.b.state_count <= 4
        assert 1 <= par.a.symbol_count <= 3
        assert par.a.alphabet == par.b.alphabet


def test_seeded_pairs_are_reproducible():
    primera = list(seeded_pairs(30, 123, 5, 3, Fraction(1, 3)))
    segunda = list(seeded_pairs(30, 123, 5, 3, Fraction(1, 3)))
    assert primera == segunda
    assert [par.index for par in primera] == list(range(30))
    assert primera != list(seeded_pairs(30, 124, 5, 3, Fraction(1, 3)))
