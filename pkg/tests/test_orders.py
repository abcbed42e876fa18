import pytest

from wordforge import (
    ALT,
    COLEX,
    LEX,
    MODALT,
    RELEX,
    VORDER,
    Alphabet,
    AlphabetError,
    Comparison,
    EmptyWordError,
    OrderSpec,
    WordforgeError,
    cmp,
    cmp_alt,
    cmp_lexext,
    cmp_modalt,
    cmp_v,
    lexext,
)
from wordforge.oracle import enumerate_words
from wordforge.suites import (
    check_modalt_brute_force,
    check_star_tree_agreement,
    check_subsequence_property,
    check_suffix_chain,
    check_total_order,
)

AB = Alphabet.characters("ab")
DIGITS = Alphabet.characters("123456789")
LATIN = Alphabet.characters("abcdefghijklmnopqrstuvwxyz")

LESS = Comparison.LESS
EQUAL = Comparison.EQUAL
GREATER = Comparison.GREATER


def d(text):
    return DIGITS.word(text)


def w(text):
    return AB.word(text)


class TestOrderSpec:
    def test_parse_round_trip(self):
        assert str(OrderSpec.parse("vorder")) == "vorder"
        assert str(OrderSpec.parse("lexext:colex")) == "lexext:colex"
        assert OrderSpec.parse("lexext:modalt").inner == MODALT

    def test_validation(self):
        with pytest.raises(WordforgeError):
            OrderSpec.parse("sideways")
        with pytest.raises(WordforgeError):
            OrderSpec("lexext")
        with pytest.raises(WordforgeError):
            OrderSpec("lexext", OrderSpec("lexext", LEX))
        with pytest.raises(WordforgeError):
            OrderSpec("lex", LEX)


def test_cmp_dispatch_examples():
    assert cmp(LEX, d("1231774"), d("7741231")) is LESS
    assert cmp(VORDER, d("44"), d("44")) is EQUAL
    assert cmp(COLEX, d("321"), d("54")) is LESS


def test_cmp_rejects_mixed_alphabets():
    with pytest.raises(AlphabetError):
        cmp(LEX, w("ab"), d("12"))


def test_alt_examples():
    assert cmp_alt(d("1774123"), d("1231774")) is LESS
    assert cmp_alt(w("ab"), w("abb")) is LESS
    assert cmp_alt(w("ab"), w("aba")) is LESS
    assert cmp_alt(w("aba"), w("ab")) is GREATER


def test_modalt_examples():
    assert cmp_modalt(w("abbb"), w("abbabbbbb")) is LESS
    assert cmp_modalt(w("ab"), w("ab")) is EQUAL
    # Over {a, b} no extension of `a` separates it from `ab`, so `ab` wins.
    assert cmp_modalt(w("a"), w("ab")) is GREATER
    # A larger alphabet provides the separating symbol.
    abc = Alphabet.characters("abc")
    assert cmp_modalt(abc.word("a"), abc.word("ab")) is LESS


def test_modalt_against_brute_force():
    assert check_modalt_brute_force(8).passed


def test_vorder_examples():
    assert cmp_v(d("929"), d("922911")) is LESS
    assert cmp_v(LATIN.word("equitant"), LATIN.word("unique")) is LESS
    assert cmp_v(d("6263"), d("6362")) is LESS
    assert cmp_v(d("6362"), d("2636")) is LESS
    assert cmp_v(d("2636"), d("3626")) is LESS


def test_lexext_examples():
    assert cmp_lexext(COLEX, d("431412"), d("412431")) is LESS
    assert cmp(lexext(COLEX), d("431412"), d("431412")) is EQUAL
    with pytest.raises(EmptyWordError):
        cmp_lexext(COLEX, DIGITS.empty(), d("1"))


def test_colex_and_relex_examples():
    assert cmp(COLEX, d("7741231"), d("1231774")) is LESS
    assert cmp(COLEX, LATIN.word("ba"), LATIN.word("ca")) is LESS
    # 7741231 is least in reversed-alphabet lexorder among these conjugates.
    rots = ["3177412", "1774123", "7412317", "4123177", "1231774", "2317741"]
    assert all(cmp(RELEX, d("7741231"), d(r)) is LESS for r in rots)


def test_prefix_conventions():
    assert cmp(LEX, w("ab"), w("abb")) is LESS
    assert cmp(RELEX, w("ba"), w("bab")) is LESS
    # colex: shorter precedes when its reversal is a prefix of the other's.
    assert cmp(COLEX, w("ab"), w("bab")) is LESS


@pytest.mark.parametrize(
    "order", [LEX, COLEX, RELEX, ALT, MODALT, VORDER, lexext(COLEX), lexext(MODALT)]
)
def test_total_order_axioms(order):
    assert check_total_order(order, AB, 5).passed


def test_empty_word_is_unique_minimum():
    empty = AB.empty()
    for order in (LEX, COLEX, RELEX, ALT, MODALT, VORDER):
        for word in enumerate_words(AB, 4):
            assert cmp(order, empty, word) is LESS
            assert cmp(order, word, empty) is GREATER


def test_vorder_matches_star_tree():
    assert check_star_tree_agreement(AB, 5).passed
    assert check_star_tree_agreement(Alphabet.characters("abc"), 4).passed


def test_subsequences_precede_in_vorder():
    assert check_subsequence_property(AB, 6).passed
    assert cmp_v(d("772"), d("7547223")) is LESS


def test_suffixes_sorted_by_length():
    assert check_suffix_chain(d("7547223")).passed
    for word in enumerate_words(AB, 7):
        assert check_suffix_chain(word).passed
