import pytest

from linkhom.diagram import DiagramError, linking_number, validate
from linkhom.fixtures import PSI_WORD
from linkhom.morse import braid_closure, braid_string_link, closed_word, pure_braid, string_word


@pytest.mark.parametrize("k", range(-4, 5))
def test_pure_braid_linking_number(k):
    P = pure_braid(k)
    assert validate(P).ok
    assert linking_number(P) == k
    assert P.n_crossings == 2 * abs(k)


def test_braid_closure_components_and_signs():
    assert braid_closure(2, [1]).n_components() == 1
    assert braid_closure(2, [1, 1]).n_components() == 2
    assert braid_closure(3, [1, 2]).n_components() == 1
    D = braid_closure(3, [1, -2, 1, -2])
    assert D.signs == (1, -1, 1, -1)


def test_string_word_with_cup_and_cap():
    S = string_word(PSI_WORD)
    assert validate(S).ok
    assert S.n_components() == 2
    assert S.n_crossings == 5
    assert braid_string_link([1, 1]).n_crossings == 2


def test_closed_word_kink():
    D = closed_word(2, [("cup", 1, False), ("x", 0, -1), ("cap", 0), ("x", 0, 1), ("x", 0, 1)])
    assert validate(D).ok
    assert linking_number(D) == 1


def test_bad_letters():
    with pytest.raises(DiagramError):
        braid_closure(2, [2])
    with pytest.raises(DiagramError):
        string_word([("x", 0, 2)])
    # cup and cap on the same pair leave a closed loop
    with pytest.raises(DiagramError):
        string_word([("cup", 2, True), ("x", 1, 1), ("x", 1, 1), ("cap", 2)])
