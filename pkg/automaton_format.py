"""
Formato de fichero de autómatas

Formato por líneas, comentarios con '#', campos separados por espacios:

    alphabet a b c d
    states 3
    start 0
    accepting 1
    0 a 2
    0 b 1
    ...

Después de las cuatro cabeceras van exactamente states × |alphabet|
líneas `<estado> <símbolo> <estado>`.
"""

from typing import Dict, List, Tuple

from automata_core import Dfa
from errors import AutomatonInputError, AutomatonRangeError, AutomatonSyntaxError, IncompleteAutomatonError

CABECERAS = ("alphabet", "states", "start", "accepting")


def _entero(token: str, linea: int) -> int:
    if not (token.isascii() and token.isdigit()):
        raise AutomatonSyntaxError(f"se esperaba un entero no negativo y se encontró {token!r}", linea)
    return int(token)


def _estado(token: str, linea: int, total: int) -> int:
    q = _entero(token, linea)
    if q >= total:
        raise AutomatonRangeError(f"línea {linea}: estado {q} fuera de rango (states {total})")
    return q


def parse_automaton(text: str) -> Dfa:
    """
    Lee un DFA completo en el formato de fichero

    Args:
        text: Contenido del fichero

    Returns:
        DFA validado

    Raises:
        AutomatonSyntaxError: línea mal formada o transición repetida
        AutomatonRangeError: estado o símbolo fuera de rango
        IncompleteAutomatonError: faltan transiciones
    """
    lineas: List[Tuple[int, List[str]]] = []
    for numero, linea in enumerate(text.splitlines(), 1):
        contenido = linea.split("#", 1)[0].strip()
        if contenido:
            lineas.append((numero, contenido.split()))

    for i, clave in enumerate(CABECERAS):
        if i >= len(lineas):
            ultima = lineas[-1][0] if lineas else None
            raise AutomatonSyntaxError(f"falta la cabecera '{clave}'", ultima)
        numero, tokens = lineas[i]
        if tokens[0] != clave:
            raise AutomatonSyntaxError(f"se esperaba '{clave}' y se encontró '{tokens[0]}'", numero)

    numero, tokens = lineas[0]
    alfabeto = tuple(tokens[1:])
    if not alfabeto:
        raise AutomatonSyntaxError("el alfabeto está vacío", numero)
    if len(set(alfabeto)) != len(alfabeto):
        raise AutomatonSyntaxError("símbolos repetidos en el alfabeto", numero)

    numero, tokens = lineas[1]
    if len(tokens) != 2:
        raise AutomatonSyntaxError("se esperaba 'states <k>'", numero)
    total = _entero(tokens[1], numero)
    if total < 1:
        raise AutomatonRangeError(f"línea {numero}: se necesita al menos un estado")

    numero, tokens = lineas[2]
    if len(tokens) != 2:
        raise AutomatonSyntaxError("se esperaba 'start <i>'", numero)
    inicio = _estado(tokens[1], numero, total)

    numero, tokens = lineas[3]
    aceptacion = {_estado(t, numero, total) for t in tokens[1:]}

    indices = {nombre: i for i, nombre in enumerate(alfabeto)}
    transiciones: Dict[Tuple[int, str], int] = {}
    for numero, tokens in lineas[4:]:
        if len(tokens) != 3:
            raise AutomatonSyntaxError("se esperaba '<estado> <símbolo> <estado>'", numero)
        origen = _estado(tokens[0], numero, total)
        simbolo = tokens[1]
        if simbolo not in indices:
            raise AutomatonRangeError(f"línea {numero}: símbolo '{simbolo}' fuera del alfabeto")
        destino = _estado(tokens[2], numero, total)
        if (origen, simbolo) in transiciones:
            raise AutomatonSyntaxError(f"transición repetida para ({origen}, {simbolo})", numero)
        transiciones[(origen, simbolo)] = destino

    try:
        return Dfa.from_transitions(alfabeto, total, inicio, aceptacion, transiciones)
    except IncompleteAutomatonError:
        raise
    except AutomatonInputError as e:
        raise AutomatonSyntaxError(str(e), lineas[0][0]) from None


def serialize_automaton(d: Dfa) -> str:
    """Texto canónico del DFA, transiciones ordenadas por (estado, índice de símbolo)"""
    lineas = [
        "alphabet " + " ".join(d.alphabet),
        f"states {d.state_count}",
        f"start {d.start}",
        " ".join(["accepting"] + [str(q) for q in sorted(d.accepting)]),
    ]
    for q, fila in enumerate(d.delta):
        for s, t in enumerate(fila):
            lineas.append(f"{q} {d.alphabet[s]} {t}")
    return "\n".join(lineas) + "\n"


def load_automaton(path: str) -> Dfa:
    try:
        with open(path, "r", encoding="utf-8") as f:
            texto = f.read()
    except UnicodeDecodeError as e:
        raise AutomatonSyntaxError(f"{path}: el fichero no es UTF-8 válido (byte {e.start})") from None
    return parse_automaton(texto)


def save_automaton(d: Dfa, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(serialize_automaton(d))
