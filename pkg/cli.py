#!/usr/bin/env python3
"""
Línea de comandos de la catenación ortogonal

Subcomandos:
    verify M N          Comprueba la cota con los testigos de tamaño (M, N)
    sweep M N -o F      Barrido [3..M] × [3..N] a CSV
    ortho A B           Decide la ortogonalidad de dos ficheros de autómata
    cat A B             Catenación minimizada
    min A               Minimiza
    eq A B              Equivalencia de lenguajes
    witness K N         Emite un autómata testigo (a, b o unary)
    nfa-bound M N       Cota no determinista m + n con conjunto engañoso
    bounds              Corpus aleatorio contra las cotas superiores

Estados de salida: 0 correcto, 1 comprobación fallida, 2 error de uso o de entrada.
"""

import argparse
import logging
import sys
from typing import List, Optional

from automata_core import Dfa, align_alphabet, distinguishing_word, minimize, trim
from automaton_format import load_automaton, save_automaton, serialize_automaton
from catenation import build_catenation_dfa, build_catenation_nfa, general_upper_bound
from config import ParametrosExperimento
from errors import AutomatonInputError, UndefinedCatenationError
from oracle import verify_fooling_set
from orthogonality import is_orthogonal, orthogonal_catenation
from experiments import cmd_bounds, cmd_sweep, cmd_verify
from witnesses import (fooling_set_unary_catenation, unary_catenation_dfa, unary_star_dfa,
                       unary_witness_pair, witness_a, witness_b)

logger = logging.getLogger(__name__)

EXIT_OK = ParametrosExperimento.EXIT_OK
EXIT_FAIL = ParametrosExperimento.EXIT_FAIL
EXIT_ERROR = ParametrosExperimento.EXIT_ERROR


def _banner(titulo: str) -> None:
    print("=" * 60)
    print(titulo)
    print("=" * 60)


def _emit(d: Dfa, out: Optional[str]) -> None:
    """Escribe el autómata en un fichero, o en la salida estándar si no hay ruta"""
    if out is None:
        sys.stdout.write(serialize_automaton(d))
    else:
        save_automaton(d, out)
        print(f"✓ Autómata guardado en {out} ({d.state_count} estados)")


# ============================================================================
# SUBCOMANDOS
# ============================================================================

def run_verify(args) -> int:
    fila = cmd_verify(args.m, args.n, args.oracle_len, args.cross_check)
    _banner(f"VERIFICACIÓN m={fila.m}, n={fila.n}")
    print(f"  Cota prevista:      {fila.predicted}")
    print(f"  Estados de C:       {fila.constructed}")
    print(f"  DFA mínimo:         {fila.minimized}")
    if fila.nfa_route is not None:
        print(f"  Ruta por el NFA:    {fila.nfa_route}")
    print(f"  Ortogonal:          {'sí' if fila.orthogonal else 'no'}")
    print(f"  Tiempo:             {fila.elapsed_ms} ms")
    if fila.matches:
        print("\n✓ El DFA mínimo alcanza la cota")
        return EXIT_OK
    print("\n❌ El resultado no coincide con la cota")
    return EXIT_FAIL


def run_sweep(args) -> int:
    filas = cmd_sweep(args.m_max, args.n_max, args.out, args.jobs, args.oracle_len)
    fallidas = [fila for fila in filas if not fila.matches]
    print(f"✓ {len(filas)} filas escritas en {args.out}")
    for fila in fallidas:
        print(f"❌ ({fila.m}, {fila.n}): mínimo {fila.minimized}, previsto {fila.predicted}")
    return EXIT_FAIL if fallidas else EXIT_OK


def run_ortho(args) -> int:
    a = load_automaton(args.file_a)
    b = load_automaton(args.file_b)
    veredicto = is_orthogonal(a, b)
    if veredicto.orthogonal:
        print("orthogonal")
        return EXIT_OK
    testigo = veredicto.witness
    print("not orthogonal")
    print(f"  palabra:          {a.render(testigo.word)}")
    print(f"  factorizaciones:  {testigo.render(a.alphabet)}")
    return EXIT_FAIL


def run_cat(args) -> int:
    a = load_automaton(args.file_a)
    b = load_automaton(args.file_b)
    if args.orthogonal:
        try:
            cat = orthogonal_catenation(a, b)
        except UndefinedCatenationError as e:
            print(f"❌ {e}")
            return EXIT_FAIL
    else:
        cat = build_catenation_dfa(a, b)
    minimo = minimize(cat.dfa)
    logger.info("cat: %d estados construidos, %d tras minimizar", cat.state_count, minimo.state_count)
    _emit(minimo, args.out)
    return EXIT_OK


def run_min(args) -> int:
    _emit(minimize(load_automaton(args.file_a)), args.out)
    return EXIT_OK


def run_eq(args) -> int:
    a = load_automaton(args.file_a)
    b = align_alphabet(load_automaton(args.file_b), a.alphabet)
    palabra = distinguishing_word(a, b)
    if palabra is None:
        print("equivalent")
        return EXIT_OK
    print("not equivalent")
    print(f"  palabra distinguidora: {a.render(palabra)}")
    return EXIT_FAIL


def run_witness(args) -> int:
    fabricas = {"a": witness_a, "b": witness_b, "unary": unary_star_dfa}
    _emit(fabricas[args.kind](args.size), args.out)
    return EXIT_OK


def run_nfa_bound(args) -> int:
    m, n = args.m, args.n
    nfa = trim(build_catenation_nfa(*unary_witness_pair(m, n)))
    informe = verify_fooling_set(unary_catenation_dfa(m, n), fooling_set_unary_catenation(m, n))
    _banner(f"COTA NO DETERMINISTA (a^{m})*·(b^{n})*")
    print(f"  Estados del NFA:            {nfa.state_count}")
    if informe.ok:
        print(f"  Conjunto engañoso:          {informe.certified}")
    else:
        print(f"  ⚠️  Conjunto engañoso rechazado: {informe.reason}")
    print(f"  m + n:                      {m + n}")
    if informe.ok and nfa.state_count == informe.certified == m + n:
        print("\n✓ Complejidad no determinista exactamente m + n")
        return EXIT_OK
    return EXIT_FAIL


def run_bounds(args) -> int:
    filas, fallos = cmd_bounds(args.pairs, args.seed, args.out, args.max_states, args.max_alphabet)
    _banner("CORPUS ALEATORIO CONTRA LAS COTAS")
    ortogonales = sum(1 for fila in filas if fila.orthogonal)
    con_muerto = sum(1 for fila in filas if fila.b_dead)
    print(f"  Pares:              {len(filas)} (semilla {args.seed})")
    print(f"  Ortogonales:        {ortogonales}")
    print(f"  B con estado muerto: {con_muerto}")
    techo = max((fila.minimized / general_upper_bound(fila.m, fila.n) for fila in filas), default=0.0)
    print(f"  Máximo mínimo/cota: {techo:.3f}")
    if args.out is not None:
        print(f"  CSV:                {args.out}")
    for fallo in fallos:
        print(f"❌ {fallo}")
    if fallos:
        return EXIT_FAIL
    print("\n✓ Ninguna cota incumplida")
    return EXIT_OK


# ============================================================================
# ARGUMENTOS
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cli.py",
        description="Complejidad de estados de la catenación ortogonal de autómatas finitos",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="trazas de depuración")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="comprueba la cota con los testigos (m, n)")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--oracle-len", type=int, default=ParametrosExperimento.ORACLE_VERIFY_LEN,
                   help="longitud del oráculo de fuerza bruta (0 lo desactiva)")
    p.add_argument("--cross-check", action="store_true", help="recalcula el mínimo por la ruta del NFA")
    p.set_defaults(func=run_verify)

    p = sub.add_parser("sweep", help="barrido de verify a CSV")
    p.add_argument("m_max", type=int)
    p.add_argument("n_max", type=int)
    p.add_argument("-o", "--out", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--oracle-len", type=int, default=ParametrosExperimento.ORACLE_VERIFY_LEN)
    p.set_defaults(func=run_sweep)

    p = sub.add_parser("ortho", help="decide la ortogonalidad de dos autómatas")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=run_ortho)

    p = sub.add_parser("cat", help="catenación minimizada")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--orthogonal", action="store_true", help="falla si la catenación no es ortogonal")
    p.add_argument("-o", "--out")
    p.set_defaults(func=run_cat)

    p = sub.add_parser("min", help="minimiza un autómata")
    p.add_argument("file_a")
    p.add_argument("-o", "--out")
    p.set_defaults(func=run_min)

    p = sub.add_parser("eq", help="equivalencia de lenguajes")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=run_eq)

    p = sub.add_parser("witness", help="emite un autómata testigo")
    p.add_argument("kind", choices=("a", "b", "unary"))
    p.add_argument("size", type=int)
    p.add_argument("-o", "--out")
    p.set_defaults(func=run_witness)

    p = sub.add_parser("nfa-bound", help="cota m + n para (a^m)*(b^n)*")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=run_nfa_bound)

    p = sub.add_parser("bounds", help="corpus aleatorio contra las cotas superiores")
    p.add_argument("--pairs", type=int, default=ParametrosExperimento.RANDOM_PAIRS)
    p.add_argument("--seed", type=int, default=ParametrosExperimento.DEFAULT_SEED)
    p.add_argument("--max-states", type=int, default=ParametrosExperimento.RANDOM_MAX_STATES)
    p.add_argument("--max-alphabet", type=int, default=ParametrosExperimento.RANDOM_MAX_ALPHABET)
    p.add_argument("-o", "--out")
    p.set_defaults(func=run_bounds)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except AutomatonInputError as e:
        print(f"❌ ERROR: {e}")
        return EXIT_ERROR
    except OSError as e:
        print(f"❌ ERROR: {e}")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
