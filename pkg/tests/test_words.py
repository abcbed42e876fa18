import pytest

from wordforge import (
    Alphabet,
    AlphabetError,
    EmptyWordError,
    PreconditionError,
    borders,
    conjugate_key,
    is_border_free,
    is_primitive,
    period,
    rotation,
    rotations,
    star_delete,
    star_path,
    substring_conjugates,
    v_form,
)
from wordforge.oracle import enumerate_words

AB = Alphabet.characters("ab")
ABC = Alphabet.characters("abc")
DIGITS = Alphabet.characters("123456789")


def w(text):
    return AB.word(text)


def d(text):
    return DIGITS.word(text)


def test_alphabet_rejects_duplicates_and_unknown_symbols():
    with pytest.raises(AlphabetError):
        Alphabet.characters("aba")
    with pytest.raises(AlphabetError):
        Alphabet.characters("")
    with pytest.raises(AlphabetError):
        AB.word("abc")


def test_word_basics():
    word = w("abba")
    assert len(word) == 4
    assert word.ranks == (0, 1, 1, 0)
    assert word.text() == "abba"
    assert word[1:3].text() == "bb"
    assert (w("ab") + w("ba")).text() == "abba"
    with pytest.raises(AlphabetError):
        w("ab") + DIGITS.word("12")


def test_rotations_of_known_words():
    rots = [r.text() for r in rotations(d("3177412"))]
    assert rots == [
        "3177412", "1774123", "7741231", "7412317",
        "4123177", "1231774", "2317741",
    ]
    assert [r.text() for r in rotations(AB.word("a"))] == ["a"]
    assert [r.text() for r in rotations(w("abab"))] == ["abab", "baba", "abab", "baba"]


def test_rotations_of_empty_word():
    empty = AB.empty()
    assert rotations(empty) == [empty]


def test_rotation_round_trip():
    word = w("aabab")
    assert rotation(word, len(word)) == word
    assert all(len(r) == len(word) for r in rotations(word))


def test_is_primitive():
    assert not is_primitive(w("ababab"))
    assert is_primitive(AB.word("a"))
    assert is_primitive(w("abababbbbb"))
    with pytest.raises(EmptyWordError):
        is_primitive(AB.empty())


def test_primitive_iff_all_rotations_distinct():
    for word in enumerate_words(AB, 10):
        distinct = len({r.ranks for r in rotations(word)}) == len(word)
        assert is_primitive(word) == distinct


def test_borders():
    assert [b.text() for b in borders(ABC.word("abcab"))] == ["ab"]
    assert [b.text() for b in borders(w("ababba"))] == ["a"]
    assert borders(w("aababb")) == []
    assert [b.text() for b in borders(w("aabaa"))] == ["a", "aa"]
    with pytest.raises(EmptyWordError):
        borders(AB.empty())


def test_is_border_free():
    assert is_border_free(w("abababbb"))
    assert not is_border_free(w("aa"))
    assert is_border_free(w("abbb"))


def test_border_free_implies_primitive():
    for word in enumerate_words(AB, 12):
        if is_border_free(word):
            assert is_primitive(word)


def test_period():
    assert period(w("ababab")) == 2
    assert period(w("aabaa")) == 3


def test_v_form_examples():
    vf = v_form(d("321312"))
    assert vf.letter == "3" and vf.count == 2
    assert [p.text() for p in vf.parts] == ["", "21", "12"]

    vf = v_form(d("7"))
    assert vf.letter == "7" and vf.count == 1
    assert [p.text() for p in vf.parts] == ["", ""]

    vf = v_form(d("929493"))
    assert vf.letter == "9" and vf.count == 3
    assert [p.text() for p in vf.parts] == ["", "2", "4", "3"]

    with pytest.raises(EmptyWordError):
        v_form(AB.empty())


def test_v_form_reassembles_and_excludes_max_letter():
    for word in enumerate_words(Alphabet.characters("123"), 6):
        vf = v_form(word)
        assert vf.join() == word
        assert all(vf.letter_rank not in p.ranks for p in vf.parts)
        assert vf.count == word.ranks.count(max(word.ranks))


def test_star_delete_examples():
    assert star_delete(d("922911")).text() == "92291"
    assert star_delete(d("9229")).text() == "929"
    assert star_delete(d("99")).text() == "9"
    with pytest.raises(EmptyWordError):
        star_delete(AB.empty())


def test_star_path_reaches_empty_and_ends_on_max_letters():
    for word in enumerate_words(Alphabet.characters("123"), 6):
        path = star_path(word)
        assert len(path) == len(word) + 1
        assert len(path[-1]) == 0
        g = max(word.ranks)
        count = word.ranks.count(g)
        # The last deletions peel off the maximal letter one copy at a time.
        for k in range(count + 1):
            assert path[len(path) - 1 - k].ranks == (g,) * k


def test_substring_conjugates():
    got = {v.text() for v in substring_conjugates(d("929493"))}
    assert got == {"929493", "949392", "939294"}
    assert [v.text() for v in substring_conjugates(d("9"))] == ["9"]
    got = {v.text() for v in substring_conjugates(d("431412"))}
    assert got == {"431412", "412431"}
    # The word itself is the last listed rotation.
    assert substring_conjugates(d("929493"))[-1] == d("929493")
    with pytest.raises(PreconditionError):
        substring_conjugates(d("2636"))


def test_conjugate_key_is_rotation_invariant():
    word = w("aabab")
    keys = {conjugate_key(r) for r in rotations(word)}
    assert len(keys) == 1
