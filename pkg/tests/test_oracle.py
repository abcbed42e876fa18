import pytest

from wordforge import (
    ALT,
    LEX,
    VORDER,
    Alphabet,
    CapExceededError,
    Comparison,
    FactorFamily,
    NotPrimitiveError,
    galois_family,
    lyndon_family,
    vword_family,
)
from wordforge.oracle import (
    all_factorizations,
    enumerate_words,
    min_rotation_oracle,
    min_substring_rotation_oracle,
    star_tree_cmp,
    unique_maximal_check,
)
from wordforge.orders import COLEX, lexext

AB = Alphabet.characters("ab")
ABCD = Alphabet.characters("abcd")
DIGITS = Alphabet.characters("123456789")


def d(text):
    return DIGITS.word(text)


def test_enumerate_words_order_and_counts():
    got = [w.text() for w in enumerate_words(AB, 2)]
    assert got == ["a", "b", "aa", "ab", "ba", "bb"]
    assert [w.text() for w in enumerate_words(Alphabet.characters("abc"), 1)] == [
        "a", "b", "c",
    ]
    assert sum(1 for _ in enumerate_words(AB, 8)) == 510
    with pytest.raises(CapExceededError):
        list(enumerate_words(AB, 25))


def test_star_tree_cmp():
    assert star_tree_cmp(d("929"), d("922911")) is Comparison.LESS
    latin = Alphabet.characters("abcdefghijklmnopqrstuvwxyz")
    assert star_tree_cmp(latin.word("unique"), latin.word("equitant")) is Comparison.GREATER
    assert star_tree_cmp(d("44"), d("44")) is Comparison.EQUAL


def test_all_factorizations():
    fam = FactorFamily(
        "mixed", ABCD,
        members=[ABCD.word(t) for t in ("a", "b", "c", "d", "ab", "cd", "bcd")],
    )
    got = {
        tuple(f.text() for f in factors)
        for factors in all_factorizations(fam, ABCD.word("abcd"))
    }
    # The three decompositions reachable by one-sided greedy scans, plus the
    # two mixed ones the complete enumeration also finds.
    assert got >= {("a", "b", "c", "d"), ("ab", "cd"), ("a", "bcd")}
    assert got == {
        ("a", "b", "c", "d"), ("ab", "cd"), ("a", "bcd"),
        ("a", "b", "cd"), ("ab", "c", "d"),
    }

    galois = galois_family(AB)
    results = {
        tuple(f.text() for f in factors)
        for factors in all_factorizations(galois, AB.word("ababab"))
    }
    assert ("ab", "ab", "ab") in results
    assert ("ababa", "b") in results

    two = FactorFamily("letters", AB, members=[AB.word("a"), AB.word("b")])
    assert all_factorizations(two, AB.word("ab")) == [(AB.word("a"), AB.word("b"))]


def test_unique_maximal_check():
    lyndon = lyndon_family(DIGITS)
    unique, survivors = unique_maximal_check(lyndon, d("33132421"))
    assert unique
    assert tuple(f.text() for f in survivors[0]) == ("3", "3", "13242", "1")

    vwords = vword_family(DIGITS)
    unique, survivors = unique_maximal_check(vwords, d("33132421"))
    assert unique
    assert tuple(f.text() for f in survivors[0]) == ("33132", "421")

    galois = galois_family(AB)
    unique, survivors = unique_maximal_check(galois, AB.word("ababab"))
    assert not unique
    assert survivors == []


def test_min_rotation_oracle():
    assert min_rotation_oracle(VORDER, d("26262636")).text() == "62626263"
    assert min_rotation_oracle(LEX, AB.word("ba")).text() == "ab"
    assert min_rotation_oracle(ALT, AB.word("aabbab")).text() == "abaabb"
    with pytest.raises(NotPrimitiveError):
        min_rotation_oracle(LEX, AB.word("abab"))


def test_min_substring_rotation_oracle():
    assert min_substring_rotation_oracle(COLEX, d("431412")).text() == "431412"
    with pytest.raises(NotPrimitiveError):
        min_substring_rotation_oracle(COLEX, d("3131"))


def test_oracle_backs_t_word_examples():
    from wordforge import t_word_of_class

    for order, text in ((VORDER, "26262636"), (ALT, "aabbab")):
        alphabet = DIGITS if text.isdigit() else AB
        word = alphabet.word(text)
        assert t_word_of_class(order, word) == min_rotation_oracle(order, word)
    assert t_word_of_class(lexext(COLEX), d("431412")) == min_substring_rotation_oracle(
        COLEX, d("431412")
    )
