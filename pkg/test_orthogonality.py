"""
Pruebas de la decisión de ortogonalidad y de las propiedades estructurales
"""

import pytest

from automata_core import (Dfa, dead_states, is_permutation_automaton, language_equivalent, minimize,
                           reachable_states)
from catenation import build_catenation_dfa, build_catenation_nfa, valid_second_components
from errors import AccOrderStructureError, AutomatonInputError, UndefinedCatenationError
from orthogonality import (AmbiguityWitness, accepting_cycle, accepting_reachable_nonempty, acc_order,
                           ambiguous_pairs, check_acyclic_accepting, forbidden_second_component_states,
                           is_orthogonal, merging_pairs, orthogonal_catenation)
from witnesses import unary_star_dfa, unary_witness_pair, witness_a, witness_b


@pytest.fixture
def single_letter_a() -> Dfa:
    """{a} sobre {a}"""
    return Dfa(("a",), 3, 0, {1}, ((1,), (2,), (2,)))


@pytest.fixture
def a_or_aa() -> Dfa:
    """{a, aa}: cadena 0 -> 1 -> 2 -> sumidero"""
    return Dfa(("a",), 4, 0, {1, 2}, ((1,), (2,), (3,), (3,)))


def _minimal_pairs_without_dead_state(corpus):
    """Pares ortogonales reducidos a sus DFA mínimos, con B mínimo sin estado muerto"""
    for par in corpus:
        a, b = minimize(par.a), minimize(par.b)
        if not dead_states(b) and is_orthogonal(a, b).orthogonal:
            yield a, b


# ---------------------------------------------------------------------
# is_orthogonal
# ---------------------------------------------------------------------
def test_sigma_star_twice_is_ambiguous(sigma_star_x):
    veredicto = is_orthogonal(sigma_star_x, sigma_star_x)
    assert not veredicto.orthogonal
    assert veredicto.checked_up_to is None
    assert veredicto.witness == AmbiguityWitness((0,), ((), (0,)), ((0,), ()))


def test_eps_or_x_twice(eps_or_x):
    testigo = is_orthogonal(eps_or_x, eps_or_x).witness
    assert testigo.word == (0,)
    assert testigo.render(eps_or_x.alphabet) == "x = ε · x = x · ε"
    assert testigo.holds_for(eps_or_x, eps_or_x)


def test_unary_pair_is_orthogonal():
    assert is_orthogonal(*unary_witness_pair(2, 3)).orthogonal


@pytest.mark.parametrize("m", [3, 4, 5])
@pytest.mark.parametrize("n", [3, 4, 5])
def test_witness_pairs_are_orthogonal(m, n):
    assert is_orthogonal(witness_a(m), witness_b(n)).orthogonal


def test_empty_language_is_orthogonal(sigma_star_x):
    vacio = Dfa(("x",), 1, 0, set(), ((0,),))
    assert is_orthogonal(vacio, sigma_star_x).orthogonal
    assert is_orthogonal(sigma_star_x, vacio).orthogonal


def test_orthogonality_is_not_symmetric():
    l1 = Dfa.from_transitions(("a", "b", "c"), 4, 0, {1, 2}, {(0, "a"): 1, (1, "b"): 2}, default=3)
    l2 = Dfa.from_transitions(("a", "b", "c"), 4, 0, {1}, {(0, "c"): 1, (0, "b"): 2, (2, "c"): 1}, default=3)
    # {a, ab}·{c, bc}: abc = a·bc = ab·c
    veredicto = is_orthogonal(l1, l2)
    assert not veredicto.orthogonal
    assert veredicto.witness == AmbiguityWitness((0, 1, 2), ((0,), (1, 2)), ((0, 1), (2,)))
    assert is_orthogonal(l2, l1).orthogonal


def test_witness_is_length_lex_least():
    # b* · L(B): bbaa = ε·bbaa = b·baa precede a bbba = ε·bbba = bbb·a
    a = Dfa(("a", "b"), 2, 0, {0}, ((1, 0), (1, 1)))
    b = Dfa(("a", "b"), 3, 0, {2}, ((2, 2), (0, 0), (0, 1)))
    veredicto = is_orthogonal(a, b)
    assert not veredicto.orthogonal
    assert veredicto.witness == AmbiguityWitness((1, 1, 0, 0), ((), (1, 1, 0, 0)), ((1,), (1, 0, 0)))
    assert veredicto.witness.render(a.alphabet) == "bbaa = ε · bbaa = b · baa"


def test_alphabet_mismatch():
    with pytest.raises(AutomatonInputError):
        is_orthogonal(witness_a(3), unary_star_dfa(2))


def test_ambiguous_pairs():
    assert ambiguous_pairs(build_catenation_nfa(witness_a(3), witness_b(3))) == frozenset()
    sigma = Dfa(("x",), 1, 0, {0}, ((0,),))
    assert ambiguous_pairs(build_catenation_nfa(sigma, sigma))


def test_witness_holds_on_corpus(corpus_orthogonality):
    for par in corpus_orthogonality:
        veredicto = is_orthogonal(par.a, par.b)
        assert veredicto.orthogonal == (not ambiguous_pairs(build_catenation_nfa(par.a, par.b)))
        if not veredicto.orthogonal:
            testigo = veredicto.witness
            assert testigo.holds_for(par.a, par.b)
            assert len(testigo.split1[0]) < len(testigo.split2[0])


# ---------------------------------------------------------------------
# orthogonal_catenation
# ---------------------------------------------------------------------
def test_orthogonal_catenation_witness_pair():
    cat = orthogonal_catenation(witness_a(3), witness_b(4))
    assert minimize(cat.dfa).state_count == 20


def test_orthogonal_catenation_undefined(eps_or_x):
    with pytest.raises(UndefinedCatenationError) as e:
        orthogonal_catenation(eps_or_x, eps_or_x)
    assert e.value.witness.word == (0,)
    assert "x = ε · x = x · ε" in str(e.value)


def test_orthogonal_catenation_single_words(single_a, single_b, word_ab):
    cat = orthogonal_catenation(single_a, single_b)
    assert language_equivalent(cat.dfa, word_ab)


# ---------------------------------------------------------------------
# Estados de aceptación en ciclos y orden <_acc
# ---------------------------------------------------------------------
@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_witness_a_has_accepting_cycle(m):
    assert not check_acyclic_accepting(witness_a(m))


def test_check_acyclic_accepting_examples(word_ab, sigma_star_x):
    assert check_acyclic_accepting(word_ab)
    assert not check_acyclic_accepting(sigma_star_x)


def test_accepting_cycle_path():
    assert accepting_cycle(witness_a(3)) == [1, 0, 1]
    assert accepting_cycle(Dfa(("x",), 1, 0, {0}, ((0,),))) == [0, 0]


def test_acc_order_chain(a_or_aa):
    orden = acc_order(a_or_aa)
    assert orden.pairs == {(1, 2)}
    assert orden.less(1, 2) and not orden.less(2, 1)
    assert orden.minimal() == {1}
    assert orden.maximal() == {2}


def test_acc_order_single_accepting_state(word_ab):
    assert acc_order(word_ab).pairs == frozenset()


def test_acc_order_rejects_accepting_cycle():
    with pytest.raises(AccOrderStructureError) as e:
        acc_order(witness_a(3))
    assert e.value.cycle == [1, 0, 1]


def test_accepting_reachable_nonempty(word_ab):
    assert accepting_reachable_nonempty(word_ab, 0)
    assert accepting_reachable_nonempty(word_ab, 1)
    assert not accepting_reachable_nonempty(word_ab, 2)
    assert not accepting_reachable_nonempty(word_ab, 3)


# ---------------------------------------------------------------------
# Pares que se funden y segundas componentes prohibidas
# ---------------------------------------------------------------------
def test_merging_pairs_examples():
    assert merging_pairs(unary_star_dfa(3)) == []
    assert (0, 2, 1) in merging_pairs(witness_b(3))
    todo_a_cero = Dfa(("a", "b"), 2, 0, set(), ((0, 0), (0, 0)))
    assert merging_pairs(todo_a_cero) == [(0, 1, 0), (0, 1, 1)]


def test_merging_pairs_empty_iff_permutation(corpus_orthogonality):
    for par in corpus_orthogonality:
        assert (merging_pairs(par.b) == []) == is_permutation_automaton(par.b)


def test_forbidden_components_with_permutation_b(single_letter_a):
    assert forbidden_second_component_states(single_letter_a, unary_star_dfa(2), 0)


def test_forbidden_components_invalid_state(single_letter_a):
    with pytest.raises(AutomatonInputError):
        forbidden_second_component_states(single_letter_a, unary_star_dfa(2), 7)


def test_forbidden_components_unreachable_state():
    a = Dfa(("a",), 2, 0, {0}, ((0,), (1,)))
    assert forbidden_second_component_states(a, unary_star_dfa(2), 1) == {0, 1}


# ---------------------------------------------------------------------
# Propiedades sobre el corpus aleatorio
# ---------------------------------------------------------------------
def test_orthogonal_without_dead_state_has_acyclic_accepting(corpus_orthogonality):
    for a, b in _minimal_pairs_without_dead_state(corpus_orthogonality):
        assert check_acyclic_accepting(a)


def test_merging_pairs_never_share_a_component(corpus_orthogonality):
    for a, b in _minimal_pairs_without_dead_state(corpus_orthogonality):
        pares = merging_pairs(b)
        if not pares:
            continue
        cat = build_catenation_dfa(a, b)
        for label in cat.labels:
            assert not any({p1, p2} <= label.b_subset for p1, p2, _ in pares)


def test_permutation_b_leaves_a_forbidden_state(corpus_orthogonality):
    for a, b in _minimal_pairs_without_dead_state(corpus_orthogonality):
        if not is_permutation_automaton(b):
            continue
        cat = build_catenation_dfa(a, b)
        for q in range(a.state_count):
            if accepting_reachable_nonempty(a, q):
                assert forbidden_second_component_states(a, b, q, cat)


def test_minimal_accepting_state_only_has_start_component(corpus_orthogonality):
    for a, b in _minimal_pairs_without_dead_state(corpus_orthogonality):
        if not a.accepting:
            continue
        cat = build_catenation_dfa(a, b)
        for q in acc_order(a).minimal() & reachable_states(a):
            assert valid_second_components(a, b, q, cat) == {frozenset({b.start})}
