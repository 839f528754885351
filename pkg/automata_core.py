"""
Núcleo de autómatas finitos
DFA completos y NFA sobre un alfabeto indexado: pertenencia, alcanzabilidad,
estados muertos, equivalencia, minimización y determinización

Los símbolos son índices en el alfabeto ordenado del autómata y las palabras
son tuplas de índices. Todos los tipos son inmutables.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from errors import AutomatonInputError, IncompleteAutomatonError

logger = logging.getLogger(__name__)

Symbol = int
Word = Tuple[Symbol, ...]

EPSILON_TEXT = "ε"


# ============================================================================
# PALABRAS
# ============================================================================

def _validate_alphabet(alphabet: Tuple[str, ...]) -> None:
    if len(set(alphabet)) != len(alphabet):
        raise AutomatonInputError(f"alfabeto con símbolos repetidos: {' '.join(alphabet)}")
    for nombre in alphabet:
        if not isinstance(nombre, str) or not nombre or not nombre.isprintable() or nombre.split() != [nombre]:
            raise AutomatonInputError(f"nombre de símbolo inválido: {nombre!r}")
        if nombre == EPSILON_TEXT or "#" in nombre:
            raise AutomatonInputError(f"nombre de símbolo reservado: {nombre!r}")


def check_word(alphabet: Sequence[str], word: Sequence[int]) -> Word:
    """Comprueba que todos los símbolos de la palabra están en el alfabeto"""
    for s in word:
        if not isinstance(s, int) or not 0 <= s < len(alphabet):
            raise AutomatonInputError(f"símbolo {s!r} fuera del alfabeto de tamaño {len(alphabet)}")
    return tuple(word)


def parse_word(alphabet: Sequence[str], text: str) -> Word:
    """
    Convierte un texto en palabra

    Si todos los símbolos tienen un carácter se lee carácter a carácter,
    si no, separado por espacios. "ε" y "" son la palabra vacía.

    Args:
        alphabet: Alfabeto ordenado
        text: Texto de la palabra (ej: "dca")

    Returns:
        Tupla de índices de símbolo
    """
    texto = text.strip()
    if texto in ("", EPSILON_TEXT):
        return ()
    indices = {nombre: i for i, nombre in enumerate(alphabet)}
    if all(len(nombre) == 1 for nombre in alphabet):
        trozos = [c for c in texto if not c.isspace()]
    else:
        trozos = texto.split()
    try:
        return tuple(indices[t] for t in trozos)
    except KeyError as e:
        raise AutomatonInputError(f"símbolo desconocido {e.args[0]!r} en {text!r}") from None


def render_word(alphabet: Sequence[str], word: Sequence[int]) -> str:
    """Texto legible de una palabra (ε para la vacía)"""
    if not word:
        return EPSILON_TEXT
    separador = "" if all(len(nombre) == 1 for nombre in alphabet) else " "
    return separador.join(alphabet[s] for s in word)


def iter_words(alphabet_size: int, max_len: int) -> Iterator[Word]:
    """Todas las palabras de longitud <= max_len, por longitud y luego lexicográficamente"""
    nivel: List[Word] = [()]
    for longitud in range(max_len + 1):
        yield from nivel
        if longitud < max_len:
            nivel = [w + (s,) for w in nivel for s in range(alphabet_size)]


# ============================================================================
# TIPOS
# ============================================================================

@dataclass(frozen=True)
class Dfa:
    """
    Autómata finito determinista completo

    delta[q][s] es el estado destino desde q con el símbolo de índice s.
    """

    alphabet: Tuple[str, ...]
    state_count: int
    start: int
    accepting: FrozenSet[int]
    delta: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(self, "delta", tuple(tuple(fila) for fila in self.delta))
        _validate_alphabet(self.alphabet)

        if self.state_count < 1:
            raise AutomatonInputError("un DFA necesita al menos un estado")
        if not 0 <= self.start < self.state_count:
            raise AutomatonInputError(f"estado inicial {self.start} fuera de rango")
        fuera = sorted(q for q in self.accepting if not 0 <= q < self.state_count)
        if fuera:
            raise AutomatonInputError(f"estados de aceptación fuera de rango: {fuera}")
        if len(self.delta) != self.state_count:
            raise AutomatonInputError("la tabla de transiciones no cubre todos los estados")
        for q, fila in enumerate(self.delta):
            if len(fila) != len(self.alphabet):
                raise AutomatonInputError(f"el estado {q} no tiene una transición por símbolo")
            for t in fila:
                if not 0 <= t < self.state_count:
                    raise AutomatonInputError(f"transición desde {q} a un estado inexistente {t}")

    @classmethod
    def from_transitions(
        cls,
        alphabet: Sequence[str],
        state_count: int,
        start: int,
        accepting: Iterable[int],
        transitions: Mapping[Tuple[int, str], int],
        default: Optional[int] = None,
    ) -> "Dfa":
        """
        Construye un DFA a partir de un diccionario (estado, nombre de símbolo) -> estado

        Los pares no listados van a `default`; si no hay default el DFA debe
        estar completo o se lanza IncompleteAutomatonError.
        """
        faltan = []
        filas = []
        for q in range(state_count):
            fila = []
            for nombre in alphabet:
                destino = transitions.get((q, nombre), default)
                if destino is None:
                    faltan.append((q, nombre))
                    destino = 0
                fila.append(destino)
            filas.append(fila)
        if faltan:
            raise IncompleteAutomatonError(faltan)
        return cls(tuple(alphabet), state_count, start, frozenset(accepting), tuple(map(tuple, filas)))

    @property
    def symbol_count(self) -> int:
        return len(self.alphabet)

    def run(self, word: Sequence[int], state: Optional[int] = None) -> int:
        """Estado alcanzado al leer la palabra desde `state` (por defecto el inicial)"""
        q = self.start if state is None else state
        for s in check_word(self.alphabet, word):
            q = self.delta[q][s]
        return q

    def word(self, text: str) -> Word:
        return parse_word(self.alphabet, text)

    def render(self, word: Sequence[int]) -> str:
        return render_word(self.alphabet, word)


@dataclass(frozen=True)
class Nfa:
    """
    Autómata finito no determinista con conjunto de estados iniciales

    delta[q][s] es el conjunto (posiblemente vacío) de destinos.
    """

    alphabet: Tuple[str, ...]
    state_count: int
    initial: FrozenSet[int]
    accepting: FrozenSet[int]
    delta: Tuple[Tuple[FrozenSet[int], ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(self, "delta", tuple(tuple(frozenset(d) for d in fila) for fila in self.delta))
        _validate_alphabet(self.alphabet)

        if self.state_count < 0:
            raise AutomatonInputError("número de estados negativo")
        for q in self.initial | self.accepting:
            if not 0 <= q < self.state_count:
                raise AutomatonInputError(f"estado {q} fuera de rango")
        if len(self.delta) != self.state_count:
            raise AutomatonInputError("la tabla de transiciones no cubre todos los estados")
        for q, fila in enumerate(self.delta):
            if len(fila) != len(self.alphabet):
                raise AutomatonInputError(f"el estado {q} no tiene una entrada por símbolo")
            for destinos in fila:
                if any(not 0 <= t < self.state_count for t in destinos):
                    raise AutomatonInputError(f"transición desde {q} a un estado inexistente")

    @classmethod
    def from_edges(
        cls,
        alphabet: Sequence[str],
        state_count: int,
        initial: Iterable[int],
        accepting: Iterable[int],
        edges: Iterable[Tuple[int, int, int]],
    ) -> "Nfa":
        """Construye un NFA desde aristas (origen, índice de símbolo, destino)"""
        filas = [[set() for _ in alphabet] for _ in range(state_count)]
        for origen, s, destino in edges:
            filas[origen][s].add(destino)
        return cls(tuple(alphabet), state_count, frozenset(initial), frozenset(accepting),
                   tuple(tuple(frozenset(d) for d in fila) for fila in filas))

    @classmethod
    def from_dfa(cls, d: Dfa) -> "Nfa":
        return cls.from_edges(
            d.alphabet, d.state_count, {d.start}, d.accepting,
            ((q, s, d.delta[q][s]) for q in range(d.state_count) for s in range(d.symbol_count)),
        )

    def successors(self, state: int, symbol: int) -> FrozenSet[int]:
        return self.delta[state][symbol]

    def edge_count(self) -> int:
        return sum(len(destinos) for fila in self.delta for destinos in fila)


# ============================================================================
# GRAFOS DE TRANSICIÓN
# ============================================================================

def transition_graph(d: Dfa) -> nx.DiGraph:
    """Grafo de estados; cada arista guarda la lista de símbolos que la etiquetan"""
    grafo = nx.DiGraph()
    grafo.add_nodes_from(range(d.state_count))
    for q, fila in enumerate(d.delta):
        for s, t in enumerate(fila):
            if grafo.has_edge(q, t):
                grafo[q][t]["symbols"].append(s)
            else:
                grafo.add_edge(q, t, symbols=[s])
    return grafo


def nfa_graph(n: Nfa) -> nx.DiGraph:
    grafo = nx.DiGraph()
    grafo.add_nodes_from(range(n.state_count))
    for q, fila in enumerate(n.delta):
        for destinos in fila:
            grafo.add_edges_from((q, t) for t in destinos)
    return grafo


# ============================================================================
# OPERACIONES
# ============================================================================

def _check_state(d, q: int) -> None:
    if not isinstance(q, int) or not 0 <= q < d.state_count:
        raise AutomatonInputError(f"estado {q!r} fuera de rango (0..{d.state_count - 1})")


def accepts(d: Dfa, w: Sequence[int]) -> bool:
    """True si el DFA acepta la palabra"""
    return d.run(w) in d.accepting


def nfa_accepts(n: Nfa, w: Sequence[int]) -> bool:
    """Pertenencia en un NFA por simulación de subconjuntos"""
    actuales = set(n.initial)
    for s in check_word(n.alphabet, w):
        actuales = {t for q in actuales for t in n.delta[q][s]}
        if not actuales:
            return False
    return bool(actuales & n.accepting)


def reachable_states(d: Dfa) -> FrozenSet[int]:
    """Estados alcanzables desde el inicial"""
    return frozenset(nx.descendants(transition_graph(d), d.start)) | {d.start}


def dead_states(d: Dfa) -> FrozenSet[int]:
    """
    Estados muertos: no aceptan y desde ellos solo se alcanzan a sí mismos

    Que solo q sea alcanzable desde q obliga a que todas sus transiciones
    sean bucles, así que basta una comprobación local.
    """
    return frozenset(
        q for q in range(d.state_count)
        if q not in d.accepting and all(t == q for t in d.delta[q])
    )


def _refine_partition(d: Dfa, states: Sequence[int]) -> Dict[int, int]:
    """
    Refinamiento de particiones (Moore) sobre un conjunto cerrado de estados

    Returns:
        Diccionario estado -> identificador de bloque
    """
    bloque = {q: int(q in d.accepting) for q in states}
    cuenta = len(set(bloque.values()))
    while True:
        firmas: Dict[Tuple[int, ...], int] = {}
        nuevo = {}
        for q in states:
            firma = (bloque[q],) + tuple(bloque[t] for t in d.delta[q])
            nuevo[q] = firmas.setdefault(firma, len(firmas))
        # cada ronda refina la anterior: mismo número de bloques es punto fijo
        if len(firmas) == cuenta:
            return nuevo
        bloque, cuenta = nuevo, len(firmas)


def state_equivalent(d: Dfa, q1: int, q2: int) -> bool:
    """True si ninguna palabra distingue q1 de q2"""
    _check_state(d, q1)
    _check_state(d, q2)
    if q1 == q2:
        return True
    bloque = _refine_partition(d, range(d.state_count))
    return bloque[q1] == bloque[q2]


def minimize(d: Dfa) -> Dfa:
    """
    DFA mínimo canónico

    Elimina los estados inalcanzables, fusiona los equivalentes y renumera
    en anchura desde el inicial recorriendo los símbolos en orden.
    """
    vivos = sorted(reachable_states(d))
    bloque = _refine_partition(d, vivos)

    numero = {bloque[d.start]: 0}
    representantes = [d.start]
    cola = deque([d.start])
    while cola:
        q = cola.popleft()
        for t in d.delta[q]:
            if bloque[t] not in numero:
                numero[bloque[t]] = len(representantes)
                representantes.append(t)
                cola.append(t)

    filas = tuple(tuple(numero[bloque[t]] for t in d.delta[r]) for r in representantes)
    aceptacion = frozenset(i for i, r in enumerate(representantes) if r in d.accepting)
    logger.debug("minimize: %d -> %d estados", d.state_count, len(representantes))
    return Dfa(d.alphabet, len(representantes), 0, aceptacion, filas)


def align_alphabet(d: Dfa, alphabet: Sequence[str]) -> Dfa:
    """Reindexa d sobre otra ordenación del mismo conjunto de símbolos"""
    alphabet = tuple(alphabet)
    if d.alphabet == alphabet:
        return d
    if set(d.alphabet) != set(alphabet) or len(d.alphabet) != len(alphabet):
        raise AutomatonInputError(
            f"alfabetos distintos: {{{', '.join(d.alphabet)}}} frente a {{{', '.join(alphabet)}}}"
        )
    viejo = [d.alphabet.index(nombre) for nombre in alphabet]
    filas = tuple(tuple(fila[i] for i in viejo) for fila in d.delta)
    return Dfa(alphabet, d.state_count, d.start, d.accepting, filas)


def extend_alphabet(d: Dfa, alphabet: Sequence[str]) -> Dfa:
    """
    Expresa d sobre un alfabeto mayor

    Los símbolos nuevos van a un sumidero no aceptador añadido al final.
    """
    alphabet = tuple(alphabet)
    if not set(d.alphabet) <= set(alphabet):
        raise AutomatonInputError("el alfabeto nuevo debe contener al de partida")
    if set(d.alphabet) == set(alphabet):
        return align_alphabet(d, alphabet)
    sumidero = d.state_count
    filas = []
    for fila in d.delta:
        filas.append(tuple(
            fila[d.alphabet.index(nombre)] if nombre in d.alphabet else sumidero
            for nombre in alphabet
        ))
    filas.append(tuple(sumidero for _ in alphabet))
    return Dfa(alphabet, d.state_count + 1, d.start, d.accepting, tuple(filas))


def distinguishing_word(d1: Dfa, d2: Dfa) -> Optional[Word]:
    """
    Palabra más corta (y menor en orden lexicográfico) aceptada por uno solo de los DFA

    Búsqueda en anchura sobre el producto; None si los lenguajes coinciden.
    """
    d2 = align_alphabet(d2, d1.alphabet)
    inicio = (d1.start, d2.start)
    padre: Dict[Tuple[int, int], Optional[Tuple[Tuple[int, int], int]]] = {inicio: None}
    cola = deque([inicio])
    while cola:
        par = cola.popleft()
        p, q = par
        if (p in d1.accepting) != (q in d2.accepting):
            palabra = []
            while padre[par] is not None:
                par, s = padre[par]
                palabra.append(s)
            return tuple(reversed(palabra))
        for s in range(d1.symbol_count):
            siguiente = (d1.delta[p][s], d2.delta[q][s])
            if siguiente not in padre:
                padre[siguiente] = (par, s)
                cola.append(siguiente)
    return None


def language_equivalent(d1: Dfa, d2: Dfa) -> bool:
    """True si L(d1) = L(d2), decidido exactamente sobre el producto"""
    return distinguishing_word(d1, d2) is None


def determinize(n: Nfa) -> Dfa:
    """
    Construcción de subconjuntos

    Solo se generan los subconjuntos alcanzables; el subconjunto vacío,
    si aparece, es un sumidero muerto.
    """
    inicio = frozenset(n.initial)
    indice = {inicio: 0}
    subconjuntos = [inicio]
    filas = []
    i = 0
    while i < len(subconjuntos):
        actual = subconjuntos[i]
        fila = []
        for s in range(len(n.alphabet)):
            siguiente = frozenset(t for q in actual for t in n.delta[q][s])
            if siguiente not in indice:
                indice[siguiente] = len(subconjuntos)
                subconjuntos.append(siguiente)
            fila.append(indice[siguiente])
        filas.append(tuple(fila))
        i += 1
    aceptacion = frozenset(i for i, x in enumerate(subconjuntos) if x & n.accepting)
    logger.debug("determinize: %d estados NFA -> %d subconjuntos", n.state_count, len(subconjuntos))
    return Dfa(n.alphabet, len(subconjuntos), 0, aceptacion, tuple(filas))


def trim(n: Nfa) -> Nfa:
    """Conserva los estados alcanzables desde un inicial y co-alcanzables hacia uno final"""
    grafo = nfa_graph(n)
    alcanzables = set(n.initial)
    for q in n.initial:
        alcanzables |= nx.descendants(grafo, q)
    coalcanzables = set(n.accepting)
    for q in n.accepting:
        coalcanzables |= nx.ancestors(grafo, q)
    conservar = sorted(alcanzables & coalcanzables)
    nuevo = {q: i for i, q in enumerate(conservar)}
    aristas = (
        (nuevo[q], s, nuevo[t])
        for q in conservar
        for s in range(len(n.alphabet))
        for t in n.delta[q][s]
        if t in nuevo
    )
    return Nfa.from_edges(
        n.alphabet, len(conservar),
        (nuevo[q] for q in n.initial if q in nuevo),
        (nuevo[q] for q in n.accepting if q in nuevo),
        aristas,
    )


def is_permutation_automaton(d: Dfa) -> bool:
    """True si cada símbolo actúa como una biyección sobre los estados"""
    return all(
        len({d.delta[q][s] for q in range(d.state_count)}) == d.state_count
        for s in range(d.symbol_count)
    )


def enumerate_accepted(d: Dfa, max_len: int) -> List[Word]:
    """Palabras aceptadas de longitud <= max_len, por longitud y luego lexicográficamente"""
    resultado: List[Word] = []
    frontera: List[Tuple[Word, int]] = [((), d.start)]
    for longitud in range(max_len + 1):
        resultado.extend(w for w, q in frontera if q in d.accepting)
        if longitud < max_len:
            frontera = [(w + (s,), d.delta[q][s]) for w, q in frontera for s in range(d.symbol_count)]
    return resultado
