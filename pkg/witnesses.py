"""
Familias de autómatas testigo para las cotas inferiores

- witness_a / witness_b: par ortogonal cuya catenación necesita m·2^(n−1) − 2^(n−2) estados
- unary_star_dfa: (a^k)*, testigos de la cota m + n para NFA
- fooling_set_unary_catenation: conjunto engañoso de m + n pares para (a^m)*(b^n)*
"""

from typing import List, Tuple

from automata_core import Dfa, Word, extend_alphabet, minimize
from catenation import build_catenation_dfa
from config import ParametrosExperimento
from errors import AutomatonInputError

ALFABETO_TESTIGOS = ("a", "b", "c", "d")
ALFABETO_UNARIO = ("a", "b")


def _check_min_size(nombre: str, valor: int) -> None:
    minimo = ParametrosExperimento.MIN_WITNESS_SIZE
    if not isinstance(valor, int) or valor < minimo:
        raise AutomatonInputError(f"{nombre} debe ser >= {minimo} (recibido {valor!r})")


def witness_a(m: int) -> Dfa:
    """
    Primer testigo: m estados, acepta en m−2, estado muerto m−1

    Transiciones:
        δ(0, a) = 0, δ(m−2, c) = 0
        δ(i, b) = i+1 para 0 <= i <= m−3
        δ(i, d) = i+1 para 0 <= i <= m−4, δ(m−2, d) = 0
        el resto va al estado muerto m−1
    """
    _check_min_size("m", m)
    muerto = m - 1
    t = {(0, "a"): 0, (m - 2, "c"): 0, (m - 2, "d"): 0}
    for i in range(m - 2):
        t[(i, "b")] = i + 1
    for i in range(m - 3):
        t[(i, "d")] = i + 1
    return Dfa.from_transitions(ALFABETO_TESTIGOS, m, 0, {m - 2}, t, default=muerto)


def witness_b(n: int) -> Dfa:
    """
    Segundo testigo: n estados, acepta en 1, estado muerto n−1

    Transiciones:
        δ(i, a) = i+1 para 1 <= i <= n−3, δ(n−2, a) = 1
        δ(i, b) = i para 1 <= i <= n−2
        δ(i, c) = i para 2 <= i <= n−2, δ(0, c) = 1
        δ(i, d) = i para 0 <= i <= n−2
        el resto va al estado muerto n−1
    """
    _check_min_size("n", n)
    muerto = n - 1
    t = {(n - 2, "a"): 1, (0, "c"): 1}
    for i in range(1, n - 2):
        t[(i, "a")] = i + 1
    for i in range(1, n - 1):
        t[(i, "b")] = i
    for i in range(2, n - 1):
        t[(i, "c")] = i
    for i in range(n - 1):
        t[(i, "d")] = i
    return Dfa.from_transitions(ALFABETO_TESTIGOS, n, 0, {1}, t, default=muerto)


def unary_star_dfa(k: int, letter: str = "a") -> Dfa:
    """Ciclo de k estados sobre una sola letra: palabras de longitud múltiplo de k"""
    if not isinstance(k, int) or k < 1:
        raise AutomatonInputError(f"k debe ser >= 1 (recibido {k!r})")
    return Dfa((letter,), k, 0, {0}, tuple(((i + 1) % k,) for i in range(k)))


def unary_witness_pair(m: int, n: int) -> Tuple[Dfa, Dfa]:
    """(a^m)* y (b^n)* completados sobre {a, b} con un sumidero cada uno"""
    return (
        extend_alphabet(unary_star_dfa(m, "a"), ALFABETO_UNARIO),
        extend_alphabet(unary_star_dfa(n, "b"), ALFABETO_UNARIO),
    )


def unary_catenation_dfa(m: int, n: int) -> Dfa:
    """DFA mínimo de (a^m)*(b^n)*"""
    a, b = unary_witness_pair(m, n)
    return minimize(build_catenation_dfa(a, b).dfa)


def fooling_set_unary_catenation(m: int, n: int) -> List[Tuple[Word, Word]]:
    """
    Conjunto engañoso de m + n pares para (a^m)*(b^n)* sobre {a, b}

    Pares (a^i, a^(m−i) b^n) con 0 <= i <= m−1 y (a^m b^j, b^(n−j)) con 1 <= j <= n.
    """
    if not isinstance(m, int) or not isinstance(n, int) or m < 1 or n < 1:
        raise AutomatonInputError("m y n deben ser >= 1")
    a, b = 0, 1
    pares = [((a,) * i, (a,) * (m - i) + (b,) * n) for i in range(m)]
    pares += [((a,) * m + (b,) * j, (b,) * (n - j)) for j in range(1, n + 1)]
    return pares
