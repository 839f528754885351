#!/usr/bin/env python3
"""
Experimentos de complejidad de estados de la catenación ortogonal

- verify: construye los testigos (m, n), comprueba la ortogonalidad y mide el DFA mínimo
- sweep: repite verify sobre una rejilla y guarda un CSV
- bounds: corpus aleatorio reproducible contra las cotas superiores
"""

import csv
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from automata_core import dead_states, determinize, is_permutation_automaton, minimize
from catenation import (build_catenation_dfa, build_catenation_nfa, general_upper_bound,
                        orthogonal_upper_bound)
from config import ParametrosExperimento
from errors import AutomatonInputError
from oracle import brute_force_orthogonal
from orthogonality import is_orthogonal
from random_automata import RandomPair, seeded_pairs
from witnesses import witness_a, witness_b

logger = logging.getLogger(__name__)


def _csv_bool(valor: bool) -> str:
    return "true" if valor else "false"


@dataclass(frozen=True)
class SweepRow:
    """Resultado de una celda (m, n) del barrido"""

    m: int
    n: int
    predicted: int
    constructed: int
    minimized: int
    orthogonal: bool
    elapsed_ms: int
    nfa_route: Optional[int] = None

    @property
    def matches(self) -> bool:
        ok = self.orthogonal and self.minimized == self.predicted
        return ok and (self.nfa_route is None or self.nfa_route == self.minimized)

    def as_csv(self) -> List[str]:
        return [str(self.m), str(self.n), str(self.predicted), str(self.constructed),
                str(self.minimized), _csv_bool(self.orthogonal), str(self.elapsed_ms)]


def _check_witness_sizes(m: int, n: int) -> None:
    minimo = ParametrosExperimento.MIN_WITNESS_SIZE
    if m < minimo or n < minimo:
        raise AutomatonInputError(f"verify requiere m, n >= {minimo} (recibido m={m}, n={n})")


def cmd_verify(
    m: int,
    n: int,
    oracle_len: int = ParametrosExperimento.ORACLE_VERIFY_LEN,
    cross_check: bool = False,
) -> SweepRow:
    """
    Comprueba la cota m·2^(n−1) − 2^(n−2) con los testigos de tamaño (m, n)

    La ortogonalidad se confirma con la decisión exacta y, si oracle_len > 0,
    con el oráculo de fuerza bruta hasta esa longitud. Con cross_check el
    tamaño mínimo se recalcula también por la ruta del NFA (nfa_route).
    """
    _check_witness_sizes(m, n)
    inicio = time.perf_counter()
    a, b = witness_a(m), witness_b(n)

    ortogonal = is_orthogonal(a, b).orthogonal
    if oracle_len > 0:
        ortogonal = ortogonal and brute_force_orthogonal(a, b, oracle_len).orthogonal

    cat = build_catenation_dfa(a, b)
    minimo = minimize(cat.dfa)
    ruta_nfa = nfa_route_minimized(m, n) if cross_check else None
    transcurrido = int((time.perf_counter() - inicio) * 1000)
    fila = SweepRow(m, n, orthogonal_upper_bound(m, n), cat.state_count,
                    minimo.state_count, ortogonal, transcurrido, ruta_nfa)
    logger.debug("verify(%d, %d): %s", m, n, fila)
    return fila


def nfa_route_minimized(m: int, n: int) -> int:
    """Tamaño mínimo recalculado por el NFA de catenación y la construcción de subconjuntos"""
    _check_witness_sizes(m, n)
    nfa = build_catenation_nfa(witness_a(m), witness_b(n))
    return minimize(determinize(nfa)).state_count


def _sweep_cell(celda: Tuple[int, int, int]) -> SweepRow:
    m, n, oracle_len = celda
    return cmd_verify(m, n, oracle_len)


def write_csv(path: str, header: Sequence[str], filas: Sequence[Sequence[str]]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as f:
        escritor = csv.writer(f, lineterminator="\n")
        escritor.writerow(header)
        escritor.writerows(filas)


def cmd_sweep(
    m_max: int,
    n_max: int,
    out: Optional[str],
    jobs: int = 1,
    oracle_len: int = ParametrosExperimento.ORACLE_VERIFY_LEN,
) -> List[SweepRow]:
    """
    Barrido de verify sobre [3..m_max] × [3..n_max]

    Las filas se escriben en orden (m, n) aunque las celdas se calculen en paralelo.

    Args:
        m_max, n_max: Límites superiores de la rejilla (entre 3 y 10)
        out: Ruta del CSV, o None para no escribir
        jobs: Procesos en paralelo
        oracle_len: Longitud del oráculo acotado en cada celda
    """
    minimo, maximo = ParametrosExperimento.MIN_WITNESS_SIZE, ParametrosExperimento.SWEEP_MAX
    for nombre, valor in (("m_max", m_max), ("n_max", n_max)):
        if not minimo <= valor <= maximo:
            raise AutomatonInputError(f"{nombre} debe estar entre {minimo} y {maximo} (recibido {valor})")

    celdas = [(m, n, oracle_len) for m in range(minimo, m_max + 1) for n in range(minimo, n_max + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            filas = list(pool.map(_sweep_cell, celdas))
    else:
        filas = [_sweep_cell(celda) for celda in celdas]

    if out is not None:
        write_csv(out, ParametrosExperimento.CSV_HEADER, [fila.as_csv() for fila in filas])
    return filas


# ============================================================================
# CORPUS ALEATORIO
# ============================================================================

@dataclass(frozen=True)
class BoundsRow:
    """Un par aleatorio medido contra las cotas superiores"""

    index: int
    m: int
    n: int
    alphabet: int
    minimized: int
    general_bound: int
    orthogonal_bound: int
    b_dead: bool
    orthogonal: bool
    b_permutation: bool
    minimal_b_dead_free: bool
    minimal_bound: Optional[int]

    def violations(self) -> List[str]:
        """Cotas incumplidas por este par (vacía si todo cuadra)"""
        fallos = []
        if self.minimized > self.general_bound:
            fallos.append(f"par {self.index}: {self.minimized} estados superan la cota general {self.general_bound}")
        if self.b_dead and self.minimized > self.orthogonal_bound:
            fallos.append(f"par {self.index}: B con estado muerto y {self.minimized} estados "
                          f"superan {self.orthogonal_bound}")
        if (self.orthogonal and self.minimal_b_dead_free and self.minimal_bound is not None
                and self.minimized > self.minimal_bound and not self.b_permutation):
            fallos.append(f"par {self.index}: ortogonal, B sin estado muerto y no de permutación, "
                          f"{self.minimized} estados superan {self.minimal_bound}")
        return fallos

    def as_csv(self) -> List[str]:
        return [str(self.index), str(self.m), str(self.n), str(self.alphabet), str(self.minimized),
                str(self.general_bound), str(self.orthogonal_bound), _csv_bool(self.b_dead),
                _csv_bool(self.orthogonal), _csv_bool(self.b_permutation)]


def bounds_row(par: RandomPair) -> BoundsRow:
    """
    Mide un par aleatorio

    Las cotas generales usan los tamaños de los DFA dados; la comprobación
    de permutación usa los DFA mínimos, que es donde se plantea.
    """
    a, b = par.a, par.b
    m, n = a.state_count, b.state_count
    minimo = minimize(build_catenation_dfa(a, b).dfa).state_count
    a_min, b_min = minimize(a), minimize(b)
    cota_minima = None
    if b_min.state_count >= 2:
        cota_minima = orthogonal_upper_bound(a_min.state_count, b_min.state_count)
    return BoundsRow(
        index=par.index,
        m=m,
        n=n,
        alphabet=a.symbol_count,
        minimized=minimo,
        general_bound=general_upper_bound(m, n),
        orthogonal_bound=orthogonal_upper_bound(m, n),
        b_dead=bool(dead_states(b)),
        orthogonal=is_orthogonal(a, b).orthogonal,
        b_permutation=is_permutation_automaton(b_min),
        minimal_b_dead_free=not dead_states(b_min),
        minimal_bound=cota_minima,
    )


def cmd_bounds(
    pairs: int = ParametrosExperimento.RANDOM_PAIRS,
    seed: int = ParametrosExperimento.DEFAULT_SEED,
    out: Optional[str] = None,
    max_states: int = ParametrosExperimento.RANDOM_MAX_STATES,
    max_alphabet: int = ParametrosExperimento.RANDOM_MAX_ALPHABET,
) -> Tuple[List[BoundsRow], List[str]]:
    """
    Corpus aleatorio contra las cotas

    Returns:
        (filas, incumplimientos)
    """
    filas = [
        bounds_row(par)
        for par in seeded_pairs(pairs, seed, max_states, max_alphabet, ParametrosExperimento.RANDOM_ACCEPT_PROB)
    ]
    fallos = [fallo for fila in filas for fallo in fila.violations()]
    if out is not None:
        write_csv(out, ParametrosExperimento.BOUNDS_CSV_HEADER, [fila.as_csv() for fila in filas])
    return filas, fallos
