"""
Parámetros de los experimentos
Valores por defecto de la línea de comandos y de las baterías de pruebas
"""

from fractions import Fraction


class ParametrosExperimento:
    """
    Parámetros actualizables de los experimentos de complejidad de estados
    """

    # ============================================================================
    # TESTIGOS DE COTA INFERIOR
    # ============================================================================
    MIN_WITNESS_SIZE = 3      # witness_a / witness_b requieren m, n >= 3
    SWEEP_MAX = 10            # celda más cara: ~10·2^9 estados construidos

    # Conjuntos de estados de B como enteros de bits
    MAX_B_STATES = 62

    # ============================================================================
    # ORÁCULO
    # ============================================================================
    ORACLE_VERIFY_LEN = 7     # longitud máxima para el oráculo en verify
    ORACLE_PAIR_LEN = 10      # longitud máxima en las comparaciones con pares aleatorios

    # ============================================================================
    # CORPUS ALEATORIO
    # ============================================================================
    DEFAULT_SEED = 20080629
    RANDOM_PAIRS = 500
    RANDOM_MAX_STATES = 5
    RANDOM_MAX_ALPHABET = 3
    RANDOM_ACCEPT_PROB = Fraction(1, 3)

    # ============================================================================
    # SALIDA
    # ============================================================================
    CSV_HEADER = ("m", "n", "predicted", "constructed", "minimized", "orthogonal", "elapsed_ms")
    BOUNDS_CSV_HEADER = (
        "index", "m", "n", "alphabet", "minimized", "general_bound",
        "orthogonal_bound", "b_dead", "orthogonal", "b_permutation",
    )

    EXIT_OK = 0
    EXIT_FAIL = 1
    EXIT_ERROR = 2
