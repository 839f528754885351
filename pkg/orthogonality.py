"""
Ortogonalidad de la catenación

Decide si toda palabra de L(A)·L(B) tiene una única factorización, extrae
contraejemplos con dos factorizaciones y comprueba las propiedades
estructurales que la ortogonalidad impone a A y a B.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Set, Tuple

import networkx as nx

from automata_core import Dfa, Nfa, Word, accepts, align_alphabet, render_word, transition_graph
from catenation import CatDfa, build_catenation_dfa, build_catenation_nfa, valid_second_components
from errors import AccOrderStructureError, AutomatonInputError, UndefinedCatenationError

logger = logging.getLogger(__name__)

_FIN = "fin"


@dataclass(frozen=True)
class AmbiguityWitness:
    """Palabra con dos factorizaciones distintas u1·v1 = u2·v2, con |u1| < |u2|"""

    word: Word
    split1: Tuple[Word, Word]
    split2: Tuple[Word, Word]

    def holds_for(self, a: Dfa, b: Dfa) -> bool:
        """Comprueba el contraejemplo con las funciones de pertenencia"""
        b = align_alphabet(b, a.alphabet)
        (u1, v1), (u2, v2) = self.split1, self.split2
        return (
            u1 + v1 == self.word
            and u2 + v2 == self.word
            and (u1, v1) != (u2, v2)
            and accepts(a, u1) and accepts(a, u2)
            and accepts(b, v1) and accepts(b, v2)
        )

    def render(self, alphabet) -> str:
        (u1, v1), (u2, v2) = self.split1, self.split2
        u1, v1, u2, v2, palabra = (render_word(alphabet, w) for w in (u1, v1, u2, v2, self.word))
        return f"{palabra} = {u1} · {v1} = {u2} · {v2}"


@dataclass(frozen=True)
class OrthogonalityVerdict:
    """
    Veredicto de ortogonalidad

    checked_up_to es None para la decisión exacta y la longitud máxima
    revisada para el oráculo acotado.
    """

    orthogonal: bool
    witness: Optional[AmbiguityWitness] = None
    checked_up_to: Optional[int] = None


@dataclass(frozen=True)
class AccOrder:
    """Orden <_acc entre estados de aceptación: (f1, f2) si f2 es alcanzable desde f1"""

    pairs: FrozenSet[Tuple[int, int]]
    accepting: FrozenSet[int]

    def less(self, f1: int, f2: int) -> bool:
        return (f1, f2) in self.pairs

    def minimal(self) -> FrozenSet[int]:
        return frozenset(f for f in self.accepting if not any(g2 == f for _, g2 in self.pairs))

    def maximal(self) -> FrozenSet[int]:
        return frozenset(f for f in self.accepting if not any(g1 == f for g1, _ in self.pairs))


# ============================================================================
# DECISIÓN
# ============================================================================

def ambiguous_pairs(n: Nfa) -> FrozenSet[Tuple[int, int]]:
    """
    Pares (s, t) con s != t alcanzables en N × N y co-alcanzables hacia finales × finales

    El conjunto es vacío si y solo si el NFA no es ambiguo.
    """
    grafo = nx.DiGraph()
    iniciales = [(s, t) for s in n.initial for t in n.initial]
    grafo.add_nodes_from(iniciales)
    cola = deque(iniciales)
    vistos = set(iniciales)
    while cola:
        s, t = cola.popleft()
        if s in n.accepting and t in n.accepting:
            grafo.add_edge((s, t), _FIN)
        for simbolo in range(len(n.alphabet)):
            for s2 in n.delta[s][simbolo]:
                for t2 in n.delta[t][simbolo]:
                    grafo.add_edge((s, t), (s2, t2))
                    if (s2, t2) not in vistos:
                        vistos.add((s2, t2))
                        cola.append((s2, t2))
    if _FIN not in grafo:
        return frozenset()
    utiles = nx.ancestors(grafo, _FIN)
    return frozenset(par for par in utiles if par[0] != par[1])


def _product_successors(n: Nfa, nodo: Tuple[int, int, bool], simbolo: int) -> Set[Tuple[int, int, bool]]:
    s, t, separadas = nodo
    return {
        (s2, t2, separadas or s2 != t2)
        for s2 in n.delta[s][simbolo]
        for t2 in n.delta[t][simbolo]
    }


def _shortest_ambiguous_word(n: Nfa) -> Optional[Word]:
    """
    Palabra más corta, y menor lexicográficamente, con dos ejecuciones de aceptación

    Los nodos son (s, t, separadas) sobre N × N. Una búsqueda hacia atrás da
    la distancia de cada nodo a un nodo final separado; después se avanza
    desde los iniciales tomando en cada paso el menor símbolo que conserva
    algún nodo a la distancia restante exacta.
    """
    inicio = {(s, t, s != t) for s in n.initial for t in n.initial}
    grafo = nx.DiGraph()
    grafo.add_nodes_from(inicio)
    cola = deque(inicio)
    while cola:
        nodo = cola.popleft()
        for simbolo in range(len(n.alphabet)):
            for siguiente in _product_successors(n, nodo, simbolo):
                if siguiente not in grafo:
                    cola.append(siguiente)
                grafo.add_edge(nodo, siguiente)

    finales = [
        nodo for nodo in grafo
        if nodo[2] and nodo[0] in n.accepting and nodo[1] in n.accepting
    ]
    if not finales:
        return None
    distancia = nx.multi_source_dijkstra_path_length(grafo.reverse(copy=False), finales)
    restante = min((distancia[nodo] for nodo in inicio if nodo in distancia), default=None)
    if restante is None:
        return None

    actuales = {nodo for nodo in inicio if distancia.get(nodo) == restante}
    palabra = []
    while restante > 0:
        for simbolo in range(len(n.alphabet)):
            siguientes = {
                destino
                for nodo in actuales
                for destino in _product_successors(n, nodo, simbolo)
                if distancia.get(destino) == restante - 1
            }
            if siguientes:
                break
        palabra.append(simbolo)
        actuales = siguientes
        restante -= 1
    return tuple(palabra)


def _witness_from_word(a: Dfa, b: Dfa, w: Word) -> AmbiguityWitness:
    cortes = [k for k in range(len(w) + 1) if accepts(a, w[:k]) and accepts(b, w[k:])]
    k1, k2 = cortes[0], cortes[1]
    return AmbiguityWitness(w, (w[:k1], w[k1:]), (w[:k2], w[k2:]))


def is_orthogonal(a: Dfa, b: Dfa) -> OrthogonalityVerdict:
    """
    Decide si L(a) y L(b) son ortogonales para la catenación

    Como a y b son deterministas, las ejecuciones de aceptación del NFA de
    catenación corresponden una a una con los puntos de corte; la
    ortogonalidad equivale a que ese NFA no sea ambiguo.

    Returns:
        Veredicto con el contraejemplo más corto si no son ortogonales
    """
    b = align_alphabet(b, a.alphabet)
    nfa = build_catenation_nfa(a, b)
    if not ambiguous_pairs(nfa):
        return OrthogonalityVerdict(True)
    palabra = _shortest_ambiguous_word(nfa)
    testigo = _witness_from_word(a, b, palabra)
    logger.debug("is_orthogonal: contraejemplo %s", testigo.render(a.alphabet))
    return OrthogonalityVerdict(False, testigo)


def orthogonal_catenation(a: Dfa, b: Dfa) -> CatDfa:
    """Catenación ortogonal; UndefinedCatenationError si no está definida"""
    veredicto = is_orthogonal(a, b)
    if not veredicto.orthogonal:
        raise UndefinedCatenationError(
            veredicto.witness,
            f"catenación ortogonal no definida: {veredicto.witness.render(a.alphabet)}",
        )
    return build_catenation_dfa(a, b)


# ============================================================================
# PROPIEDADES ESTRUCTURALES
# ============================================================================

def accepting_cycle(a: Dfa) -> Optional[List[int]]:
    """Un ciclo que pasa por un estado de aceptación, como lista de estados [f, ..., f]"""
    grafo = transition_graph(a)
    componente = {}
    for i, comp in enumerate(nx.strongly_connected_components(grafo)):
        for q in comp:
            componente[q] = (i, len(comp))
    for f in sorted(a.accepting):
        if grafo.has_edge(f, f):
            return [f, f]
        indice, tam = componente[f]
        if tam > 1:
            siguiente = min(t for t in grafo.successors(f) if componente[t][0] == indice)
            return [f] + nx.shortest_path(grafo, siguiente, f)
    return None


def check_acyclic_accepting(a: Dfa) -> bool:
    """True si ningún estado de aceptación está en un ciclo"""
    return accepting_cycle(a) is None


def acc_order(a: Dfa) -> AccOrder:
    """
    Orden de alcanzabilidad entre estados de aceptación

    Raises:
        AccOrderStructureError: si algún estado de aceptación está en un ciclo
    """
    ciclo = accepting_cycle(a)
    if ciclo is not None:
        raise AccOrderStructureError(ciclo)
    grafo = transition_graph(a)
    pares = frozenset(
        (f, g)
        for f in a.accepting
        for g in nx.descendants(grafo, f) & a.accepting
        if g != f
    )
    return AccOrder(pares, a.accepting)


def accepting_reachable_nonempty(a: Dfa, q: int) -> bool:
    """True si desde q se llega a un estado de aceptación con una palabra no vacía"""
    grafo = transition_graph(a)
    alcanzables: Set[int] = set()
    for t in grafo.successors(q):
        alcanzables |= {t} | nx.descendants(grafo, t)
    return bool(alcanzables & a.accepting)


def merging_pairs(b: Dfa) -> List[Tuple[int, int, int]]:
    """Pares p1 < p2 y símbolo que los lleva al mismo estado; vacío si b es de permutación"""
    return [
        (p1, p2, s)
        for p1 in range(b.state_count)
        for p2 in range(p1 + 1, b.state_count)
        for s in range(b.symbol_count)
        if b.delta[p1][s] == b.delta[p2][s]
    ]


def forbidden_second_component_states(a: Dfa, b: Dfa, q: int, cat: Optional[CatDfa] = None) -> FrozenSet[int]:
    """Estados de B que no aparecen en ninguna segunda componente válida de q"""
    if not isinstance(q, int) or not 0 <= q < a.state_count:
        raise AutomatonInputError(f"estado {q!r} fuera de rango en el primer autómata")
    usados = set()
    for x in valid_second_components(a, b, q, cat):
        usados |= x
    return frozenset(range(b.state_count)) - usados
