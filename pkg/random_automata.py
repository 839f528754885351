"""
Generación de autómatas aleatorios reproducibles

El generador es SplitMix64 con las constantes habituales, de modo que la
misma semilla produce los mismos autómatas en cualquier implementación:

    estado <- estado + 0x9E3779B97F4A7C15  (mod 2^64)
    z <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z <- (z ^ (z >> 27)) * 0x94D049BB133111EB
    salida = z ^ (z >> 31)

Un valor en [0, k) se obtiene como (salida * k) >> 64, y un suceso de
probabilidad p = num/den ocurre si salida * den < num * 2^64.

random_dfa consume el generador en este orden: primero los destinos de
las transiciones, estado a estado y símbolo a símbolo, y después un
valor por estado para decidir si es de aceptación.
"""

import string
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Tuple, Union

from automata_core import Dfa
from errors import AutomatonInputError

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB

Probabilidad = Union[Fraction, int, float, str]


class SplitMix64:
    """Generador SplitMix64 de 64 bits"""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * MIX1) & MASK64
        z = ((z ^ (z >> 27)) * MIX2) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        return (self.next_u64() * bound) >> 64

    def chance(self, prob: Fraction) -> bool:
        return self.next_u64() * prob.denominator < prob.numerator << 64


def symbol_names(alphabet_size: int) -> Tuple[str, ...]:
    """a, b, c, ... y s26, s27, ... si no alcanzan las letras"""
    if alphabet_size <= len(string.ascii_lowercase):
        return tuple(string.ascii_lowercase[:alphabet_size])
    return tuple(f"s{i}" for i in range(alphabet_size))


def random_dfa(states: int, alphabet_size: int, accept_prob: Probabilidad, seed: int) -> Dfa:
    """
    DFA aleatorio con estado inicial 0

    Args:
        states: Número de estados (>= 1)
        alphabet_size: Número de símbolos (>= 1)
        accept_prob: Probabilidad de que cada estado sea de aceptación, en [0, 1]
        seed: Semilla de 64 bits

    Returns:
        DFA completo, idéntico para la misma semilla
    """
    if states < 1 or alphabet_size < 1:
        raise AutomatonInputError("se necesitan al menos un estado y un símbolo")
    prob = Fraction(accept_prob)
    if not 0 <= prob <= 1:
        raise AutomatonInputError(f"probabilidad fuera de [0, 1]: {accept_prob}")

    rng = SplitMix64(seed)
    filas = tuple(tuple(rng.below(states) for _ in range(alphabet_size)) for _ in range(states))
    aceptacion = frozenset(q for q in range(states) if rng.chance(prob))
    return Dfa(symbol_names(alphabet_size), states, 0, aceptacion, filas)


@dataclass(frozen=True)
class RandomPair:
    """Par de DFA aleatorios sobre el mismo alfabeto"""

    index: int
    seed: int
    a: Dfa
    b: Dfa


def random_pair(
    index: int,
    seed: int,
    max_states: int,
    max_alphabet: int,
    accept_prob: Probabilidad,
    max_states_b: Optional[int] = None,
) -> RandomPair:
    """
    Par aleatorio: a con 1..max_states estados, b con 2..max_states_b estados

    b tiene al menos dos estados para que la cota ortogonal esté definida.
    """
    max_b = max_states if max_states_b is None else max_states_b
    rng = SplitMix64(seed)
    m = 1 + rng.below(max_states)
    n = 2 + rng.below(max(max_b - 1, 1))
    k = 1 + rng.below(max_alphabet)
    a = random_dfa(m, k, accept_prob, rng.next_u64())
    b = random_dfa(n, k, accept_prob, rng.next_u64())
    return RandomPair(index, seed, a, b)


def seeded_pairs(
    count: int,
    seed: int,
    max_states: int,
    max_alphabet: int,
    accept_prob: Probabilidad,
    max_states_b: Optional[int] = None,
) -> Iterator[RandomPair]:
    """Corpus reproducible: la semilla de cada par sale de un SplitMix64 con la semilla base"""
    rng = SplitMix64(seed)
    for i in range(count):
        yield random_pair(i, rng.next_u64(), max_states, max_alphabet, accept_prob, max_states_b)
