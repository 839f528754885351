"""
Construcciones de catenación y cotas de complejidad de estados

- DFA C que sigue pares (estado de A, conjunto de estados de B)
- NFA de m + n estados para la catenación de dos DFA
- Cotas superiores para la catenación general y para la ortogonal
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from automata_core import Dfa, Nfa, align_alphabet, dead_states
from config import ParametrosExperimento
from errors import AutomatonInputError

logger = logging.getLogger(__name__)


def bits_to_set(mask: int) -> FrozenSet[int]:
    """Conjunto de índices de los bits activos"""
    resultado = []
    i = 0
    while mask:
        if mask & 1:
            resultado.append(i)
        mask >>= 1
        i += 1
    return frozenset(resultado)


def set_to_bits(states) -> int:
    mask = 0
    for p in states:
        mask |= 1 << p
    return mask


@dataclass(frozen=True)
class CatState:
    """
    Etiqueta (q, X) de un estado de la construcción

    X se guarda como entero de bits indexado por estado de B.
    """

    a_state: int
    b_mask: int

    @property
    def b_subset(self) -> FrozenSet[int]:
        return bits_to_set(self.b_mask)

    def __str__(self):
        return f"({self.a_state}, {{{', '.join(map(str, sorted(self.b_subset)))}}})"


@dataclass(frozen=True)
class CatDfa:
    """DFA de la catenación junto con la etiqueta (q, X) de cada estado"""

    dfa: Dfa
    labels: Tuple[CatState, ...]
    _index: Dict[CatState, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.labels) != self.dfa.state_count:
            raise AutomatonInputError("una etiqueta por estado")
        object.__setattr__(self, "_index", {label: i for i, label in enumerate(self.labels)})

    def index_of(self, label: CatState) -> Optional[int]:
        return self._index.get(label)

    @property
    def state_count(self) -> int:
        return self.dfa.state_count


def _same_alphabet(a: Dfa, b: Dfa) -> Dfa:
    return align_alphabet(b, a.alphabet)


def _image_tables(b: Dfa) -> List[List[int]]:
    """bit destino de cada estado de B para cada símbolo"""
    return [[1 << b.delta[p][s] for p in range(b.state_count)] for s in range(b.symbol_count)]


def _image(tabla: List[int], mask: int) -> int:
    resultado = 0
    p = 0
    while mask:
        if mask & 1:
            resultado |= tabla[p]
        mask >>= 1
        p += 1
    return resultado


def build_catenation_dfa(a: Dfa, b: Dfa) -> CatDfa:
    """
    DFA para L(a)·L(b) explorando solo los estados alcanzables

    Desde (q, X) con el símbolo s se pasa a (δ_A(q, s), Y) donde
    Y = δ_B(X, s) ∪ {p0} si δ_A(q, s) ∈ F_A, y Y = δ_B(X, s) si no.
    El estado inicial es (q0, ∅), o (q0, {p0}) cuando q0 ∈ F_A para no
    perder las palabras de ε·L(b).

    Args:
        a: DFA del primer factor
        b: DFA del segundo factor (mismo conjunto de símbolos)

    Returns:
        CatDfa con los estados numerados en orden de descubrimiento
    """
    b = _same_alphabet(a, b)
    if b.state_count > ParametrosExperimento.MAX_B_STATES:
        raise AutomatonInputError(
            f"el segundo autómata tiene {b.state_count} estados (máximo {ParametrosExperimento.MAX_B_STATES})"
        )

    p0 = 1 << b.start
    finales_b = set_to_bits(b.accepting)
    tablas = _image_tables(b)

    inicio = CatState(a.start, p0 if a.start in a.accepting else 0)
    indice = {inicio: 0}
    etiquetas = [inicio]
    filas = []
    cola = deque([inicio])
    while cola:
        actual = cola.popleft()
        fila = []
        for s in range(a.symbol_count):
            q = a.delta[actual.a_state][s]
            y = _image(tablas[s], actual.b_mask)
            if q in a.accepting:
                y |= p0
            siguiente = CatState(q, y)
            if siguiente not in indice:
                indice[siguiente] = len(etiquetas)
                etiquetas.append(siguiente)
                cola.append(siguiente)
            fila.append(indice[siguiente])
        filas.append(tuple(fila))

    aceptacion = frozenset(i for i, e in enumerate(etiquetas) if e.b_mask & finales_b)
    logger.debug("build_catenation_dfa: %d x %d -> %d estados alcanzables",
                 a.state_count, b.state_count, len(etiquetas))
    return CatDfa(Dfa(a.alphabet, len(etiquetas), 0, aceptacion, tuple(filas)), tuple(etiquetas))


def build_catenation_nfa(a: Dfa, b: Dfa) -> Nfa:
    """
    NFA de exactamente m + n estados para L(a)·L(b)

    Los estados 0..m-1 son los de A y m..m+n-1 los de B. Cada estado de F_A
    lleva una copia de las aristas salientes de p0 y es final si p0 ∈ F_B.
    """
    b = _same_alphabet(a, b)
    m = a.state_count
    aristas = []
    for q in range(m):
        for s in range(a.symbol_count):
            aristas.append((q, s, a.delta[q][s]))
            if q in a.accepting:
                aristas.append((q, s, m + b.delta[b.start][s]))
    for p in range(b.state_count):
        for s in range(b.symbol_count):
            aristas.append((m + p, s, m + b.delta[p][s]))

    finales = {m + p for p in b.accepting}
    if b.start in b.accepting:
        finales |= a.accepting
    return Nfa.from_edges(a.alphabet, m + b.state_count, {a.start}, finales, aristas)


# ============================================================================
# COTAS
# ============================================================================

def _check_positive(**valores) -> None:
    for nombre, valor in valores.items():
        if not isinstance(valor, int) or valor < 1:
            raise AutomatonInputError(f"{nombre} debe ser un entero positivo (recibido {valor!r})")


def general_upper_bound(m: int, n: int) -> int:
    """m·2^n − 2^(n−1): cota de la catenación sin restricciones"""
    _check_positive(m=m, n=n)
    return m * 2 ** n - 2 ** (n - 1)


def orthogonal_upper_bound(m: int, n: int) -> int:
    """m·2^(n−1) − 2^(n−2): cota de la catenación ortogonal (n >= 2)"""
    _check_positive(m=m, n=n)
    if n < 2:
        raise AutomatonInputError("la cota ortogonal requiere n >= 2")
    return m * 2 ** (n - 1) - 2 ** (n - 2)


def construction_size(m: int, n: int, accepting_count: int) -> int:
    """Tamaño del conjunto completo de pares: m·2^n − |F_A|·2^(n−1)"""
    _check_positive(m=m, n=n)
    if not 0 <= accepting_count <= m:
        raise AutomatonInputError("accepting_count debe estar entre 0 y m")
    return m * 2 ** n - accepting_count * 2 ** (n - 1)


def dead_merged_state_count(cat: CatDfa, b: Dfa) -> int:
    """
    Estados de C que quedan tras identificar (q, X) con (q, X − {p_dead})

    Con b sin estado muerto coincide con el número de estados alcanzables.
    """
    muertos = set_to_bits(dead_states(b))
    return len({CatState(e.a_state, e.b_mask & ~muertos) for e in cat.labels})


def valid_second_components(a: Dfa, b: Dfa, q: int, cat: Optional[CatDfa] = None) -> FrozenSet[FrozenSet[int]]:
    """
    Conjuntos X tales que (q, X) es alcanzable en la construcción

    Args:
        a, b: Factores de la catenación
        q: Estado de a
        cat: Construcción ya calculada para (a, b), si se tiene
    """
    if not isinstance(q, int) or not 0 <= q < a.state_count:
        raise AutomatonInputError(f"estado {q!r} fuera de rango en el primer autómata")
    if cat is None:
        cat = build_catenation_dfa(a, b)
    return frozenset(e.b_subset for e in cat.labels if e.a_state == q)
