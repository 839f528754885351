"""
Oráculos de fuerza bruta

Implementaciones de referencia, independientes de las construcciones, para
certificar los algoritmos principales: factorizaciones directas,
ortogonalidad acotada, conteo de residuos y conjuntos engañosos.
"""

from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx

from automata_core import Dfa, Word, accepts, align_alphabet, check_word, reachable_states, transition_graph
from orthogonality import AmbiguityWitness, OrthogonalityVerdict


def factorizations(a: Dfa, b: Dfa, w: Sequence[int]) -> List[Tuple[Word, Word]]:
    """Todos los cortes w = u·v con u ∈ L(a) y v ∈ L(b), ordenados por |u|"""
    b = align_alphabet(b, a.alphabet)
    w = check_word(a.alphabet, w)
    return [(w[:k], w[k:]) for k in range(len(w) + 1) if accepts(a, w[:k]) and accepts(b, w[k:])]


def _live_states(d: Dfa) -> FrozenSet[int]:
    """Estados desde los que se alcanza algún estado de aceptación"""
    grafo = transition_graph(d)
    vivos = set(d.accepting)
    for f in d.accepting:
        vivos |= nx.ancestors(grafo, f)
    return frozenset(vivos)


def brute_force_orthogonal(a: Dfa, b: Dfa, max_len: int) -> OrthogonalityVerdict:
    """
    Busca la primera palabra (por longitud y orden lexicográfico) con dos factorizaciones

    Cada nodo del recorrido guarda un hilo por punto de corte k con w[:k] ∈ L(a):
    el estado de b tras leer w[k:]. Se descartan los hilos que ya no pueden
    aceptar y los subárboles donde no caben dos factorizaciones.

    Args:
        a, b: Factores de la catenación
        max_len: Longitud máxima de las palabras revisadas

    Returns:
        Veredicto acotado (checked_up_to = max_len) o el primer contraejemplo
    """
    b = align_alphabet(b, a.alphabet)
    vivos_a = _live_states(a)
    vivos_b = _live_states(b)
    p0_vivo = b.start in vivos_b

    hilos = [(0, b.start)] if a.start in a.accepting and p0_vivo else []
    nivel = [((), a.start, hilos)]
    for longitud in range(max_len + 1):
        siguiente = []
        for w, q, hilos in nivel:
            cortes = [k for k, p in hilos if p in b.accepting]
            if len(cortes) >= 2:
                k1, k2 = cortes[0], cortes[1]
                testigo = AmbiguityWitness(w, (w[:k1], w[k1:]), (w[:k2], w[k2:]))
                return OrthogonalityVerdict(False, testigo, checked_up_to=max_len)
            if longitud == max_len:
                continue
            nuevos_cortes = q in vivos_a and p0_vivo
            if len(hilos) + (2 if nuevos_cortes else 0) < 2:
                continue
            for s in range(a.symbol_count):
                q2 = a.delta[q][s]
                avance = [(k, b.delta[p][s]) for k, p in hilos if b.delta[p][s] in vivos_b]
                if q2 in a.accepting and p0_vivo:
                    avance.append((longitud + 1, b.start))
                siguiente.append((w + (s,), q2, avance))
        nivel = siguiente
    return OrthogonalityVerdict(True, None, checked_up_to=max_len)


def residual_count(d: Dfa) -> int:
    """
    Número de lenguajes residuales distintos entre los estados alcanzables

    Compara los vectores de aceptación sobre todas las palabras de longitud
    <= state_count. El vector de longitud L de q se obtiene concatenando los
    de longitud L−1 de sus sucesores, como enteros de bits.

    El vector de longitud L ocupa |Σ|^L bits: solo para autómatas pequeños.
    """
    vivos = sorted(reachable_states(d))
    actual = {q: int(q in d.accepting) for q in vivos}
    firmas = {q: [actual[q]] for q in vivos}
    ancho = 1
    for _ in range(d.state_count):
        actual = {
            q: sum(actual[d.delta[q][s]] << (s * ancho) for s in range(d.symbol_count))
            for q in vivos
        }
        ancho *= d.symbol_count
        for q in vivos:
            firmas[q].append(actual[q])
    return len({tuple(f) for f in firmas.values()})


@dataclass(frozen=True)
class FoolingSetReport:
    """Resultado de verify_fooling_set: cota certificada o el par que falla"""

    certified: Optional[int]
    offending: Optional[Tuple[int, int]] = None
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.certified is not None


def verify_fooling_set(lang: Dfa, pairs: Sequence[Tuple[Sequence[int], Sequence[int]]]) -> FoolingSetReport:
    """
    Certifica un conjunto engañoso

    Comprueba que x_i·y_i ∈ L para todo i y que, para i != j,
    x_i·y_j ∉ L o x_j·y_i ∉ L. Si se cumple, |pairs| es cota inferior
    del número de estados de cualquier NFA para L.
    """
    pares = [(tuple(x), tuple(y)) for x, y in pairs]
    for i, (x, y) in enumerate(pares):
        if not accepts(lang, x + y):
            return FoolingSetReport(None, (i, i), "x·y no pertenece al lenguaje")
    for i in range(len(pares)):
        for j in range(i + 1, len(pares)):
            (xi, yi), (xj, yj) = pares[i], pares[j]
            if accepts(lang, xi + yj) and accepts(lang, xj + yi):
                return FoolingSetReport(None, (i, j), "los dos cruces pertenecen al lenguaje")
    return FoolingSetReport(len(pares))
