"""
Excepciones del sistema de autómatas

Todas heredan de ValueError para que el llamador pueda capturar la familia
completa con un único except.
"""

from typing import List, Optional, Sequence, Tuple


class AutomatonInputError(ValueError):
    """Entrada inválida: símbolo fuera de rango, estado inexistente, alfabetos distintos..."""


class AutomatonSyntaxError(AutomatonInputError):
    """Error de sintaxis en un fichero de autómata"""

    def __init__(self, mensaje: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            mensaje = f"línea {line_number}: {mensaje}"
        super().__init__(mensaje)


class AutomatonRangeError(AutomatonInputError):
    """Índice de estado o de símbolo fuera del rango declarado"""


class IncompleteAutomatonError(AutomatonInputError):
    """Faltan transiciones: el DFA no es completo"""

    def __init__(self, missing: Sequence[Tuple[int, str]]):
        self.missing: List[Tuple[int, str]] = list(missing)
        pares = ", ".join(f"({q}, {s})" for q, s in self.missing)
        super().__init__(f"faltan transiciones para: {pares}")


class AccOrderStructureError(AutomatonInputError):
    """Un estado de aceptación está en un ciclo, <_acc no es antirreflexivo"""

    def __init__(self, cycle: Sequence[int]):
        self.cycle: List[int] = list(cycle)
        camino = " -> ".join(str(q) for q in self.cycle)
        super().__init__(f"ciclo por un estado de aceptación: {camino}")


class UndefinedCatenationError(ValueError):
    """La catenación ortogonal no está definida: hay una palabra con dos factorizaciones"""

    def __init__(self, witness, mensaje: str = ""):
        self.witness = witness
        super().__init__(mensaje or "catenación ortogonal no definida")
