import pytest

from wordforge import (
    ALT,
    COLEX,
    LEX,
    VORDER,
    Alphabet,
    AlphabetError,
    Comparison,
    NonPrimitiveConcatError,
    NotGaloisError,
    NotPrimitiveError,
    PreconditionError,
    ab_block_factorization,
    classify,
    cmp_alt,
    concat_is_galois,
    core_word,
    duval_factorization,
    extend_to_lyndon,
    extend_to_v_word,
    galois_rotation,
    is_border_free,
    is_border_free_galois,
    is_border_free_galois_structural,
    is_galois,
    is_lyndon,
    is_primitive,
    is_t_word,
    is_v_word,
    is_v_word_by_core,
    lexext,
    rotations,
    t_word_of_class,
    v_factorization,
    v_word_from_lyndon,
)
from wordforge.oracle import enumerate_words, min_rotation_oracle
from wordforge.suites import (
    check_bbf_routes,
    check_bbf_shape,
    check_class_implications,
    check_core_equivalence,
    check_galois_suffixes,
    check_v_constructions,
)

AB = Alphabet.characters("ab")
ABC = Alphabet.characters("abc")
DIGITS = Alphabet.characters("123456789")


def d(text):
    return DIGITS.word(text)


def w(text):
    return AB.word(text)


def test_is_lyndon():
    assert is_lyndon(d("2636"))
    assert not is_lyndon(w("aa"))
    assert is_lyndon(d("1231774"))


def test_duval_factorization():
    assert str(duval_factorization(d("33132421"))) == "(3)(3)(13242)(1)"
    assert str(duval_factorization(w("aaa"))) == "(a)(a)(a)"
    assert str(duval_factorization(w("ababab"))) == "(ab)(ab)(ab)"


def test_duval_factors_are_lyndon_and_non_increasing():
    for word in enumerate_words(AB, 9):
        factors = duval_factorization(word).factors
        assert all(is_lyndon(f) for f in factors)
        for left, right in zip(factors, factors[1:]):
            assert left.ranks >= right.ranks
        joined = factors[0]
        for f in factors[1:]:
            joined = joined + f
        assert joined == word


def test_t_word_of_class():
    assert t_word_of_class(VORDER, d("2636")).text() == "6263"
    assert t_word_of_class(ALT, d("3177412")).text() == "1774123"
    assert t_word_of_class(LEX, AB.word("a")).text() == "a"
    with pytest.raises(NotPrimitiveError):
        t_word_of_class(LEX, w("abab"))


def test_is_t_word():
    assert is_v_word(d("929493"))
    assert is_v_word(d("62626263"))
    assert is_galois(w("abba"))
    assert not is_galois(w("aabbab"))
    assert not is_t_word(LEX, w("abab"))  # repetitions are simply not members


def test_t_words_match_oracle():
    for word in enumerate_words(AB, 7):
        if not is_primitive(word):
            continue
        for order in (LEX, VORDER, ALT, COLEX):
            expected = min_rotation_oracle(order, word)
            assert t_word_of_class(order, word) == expected
            assert is_t_word(order, word) == (word == expected)


def test_v_factorization_examples():
    assert str(v_factorization(d("33132421"))) == "(33132)(421)"
    parts = ("6263", "62626263", "929493")
    joined = d("".join(parts))
    assert tuple(f.text() for f in v_factorization(joined).factors) == parts
    assert str(v_factorization(d("9"))) == "(9)"


def test_v_factorization_factors_not_left_extendible():
    # Adjacent factors never concatenate to a vorder-minimal word.
    for text in ("33132421", "62636262626392", "312312"):
        factors = v_factorization(d(text)).factors
        for left, right in zip(factors, factors[1:]):
            assert not is_v_word(left + right)


def test_core_word_shortcut():
    assert is_v_word_by_core(d("929493"))
    assert is_v_word_by_core(d("9192"))
    assert not is_v_word_by_core(d("9291"))
    assert core_word(d("929493")).text() == "243"
    with pytest.raises(PreconditionError):
        is_v_word_by_core(d("321312"))  # gaps of length two


def test_core_equivalence_sweep():
    assert check_core_equivalence(5).passed


def test_v_word_from_lyndon():
    assert v_word_from_lyndon(d("12"), "9").text() == "9192"
    assert is_v_word(d("9192"))
    built = v_word_from_lyndon(ABC.word("ab"), "c", repeat=2)
    assert built.text() == "caacbb"
    assert is_v_word(built)
    assert v_word_from_lyndon(d("243"), "9").text() == "929493"
    with pytest.raises(PreconditionError):
        v_word_from_lyndon(d("21"), "9")
    with pytest.raises(PreconditionError):
        v_word_from_lyndon(d("12"), "2")


def test_extend_constructions():
    assert extend_to_lyndon(w("ab"), 1).text() == "aab"
    assert is_lyndon(w("aab"))
    grown = extend_to_v_word(ABC.word("ab"), 2, "c")
    assert grown.text() == "ccab"
    assert is_v_word(grown)
    assert extend_to_v_word(d("12"), 2).text() == "3312"
    assert is_v_word(d("3312"))
    assert extend_to_lyndon(d("13242"), 1).text() == "113242"
    assert is_lyndon(d("113242"))
    with pytest.raises(AlphabetError):
        extend_to_v_word(w("ab"), 1)  # no letter above b in this alphabet


def test_construction_sweep():
    assert check_v_constructions(5, 2).passed


def test_galois_rotation():
    assert galois_rotation(w("ababba")) == (0, w("ababba"))
    index, word = galois_rotation(d("3177412"))
    assert word.text() == "1774123"
    assert rotations(d("3177412"))[index] == word
    assert galois_rotation(AB.word("b")) == (0, AB.word("b"))
    with pytest.raises(NotPrimitiveError):
        galois_rotation(w("abab"))


def test_concat_is_galois():
    assert concat_is_galois(w("ab"), w("abb"))
    assert cmp_alt(w("ab"), w("abb")) is Comparison.LESS
    assert concat_is_galois(AB.word("a"), AB.word("b"))
    with pytest.raises(NonPrimitiveConcatError):
        concat_is_galois(w("ababa"), AB.word("b"))
    with pytest.raises(NotGaloisError):
        concat_is_galois(w("ba"), AB.word("b"))


def test_galois_concatenation_laws():
    """The verified forms of the concatenation law.

    Membership of the concatenation always forces the alternating-order
    relation; the converse holds when the left word is border-free, and
    fails for bordered left words such as (abaa, b).
    """
    galois = [v for v in enumerate_words(AB, 7) if is_galois(v)]
    for u in galois:
        for v in galois:
            if u == v or len(u) + len(v) > 8:
                continue
            uv = u + v
            if not is_primitive(uv):
                continue
            less = cmp_alt(u, v) is Comparison.LESS
            member = is_galois(uv)
            if member:
                assert less, (u.text(), v.text())
            if less and is_border_free(u):
                assert member, (u.text(), v.text())
    # The documented counterexample to the unrestricted converse.
    assert cmp_alt(w("abaa"), AB.word("b")) is Comparison.LESS
    assert not is_galois(w("abaab"))


def test_galois_suffix_sweep():
    assert check_galois_suffixes(8).passed


def test_ab_block_factorization():
    assert str(ab_block_factorization(w("abbbabbabbbbb"))) == "(abbb)(abb)(abbbbb)"
    assert str(ab_block_factorization(w("ab"))) == "(ab)"
    assert str(ab_block_factorization(w("abababbb"))) == "(ab)(ab)(abbb)"
    with pytest.raises(PreconditionError):
        ab_block_factorization(w("aabb"))
    # Every factor contains ab only as its prefix.
    for f in ab_block_factorization(w("abbbabbabbbbb")).factors:
        inner = f.ranks[1:]
        assert all(inner[i : i + 2] != (0, 1) for i in range(len(inner)))


def test_border_free_galois_routes():
    assert is_border_free_galois(w("abbbabbabbbbb"))
    assert is_border_free_galois(w("abb"))
    assert not is_border_free_galois(w("abba"))  # Galois but bordered
    # Bordered Galois word whose block rotation minimality still holds:
    assert not is_border_free_galois(w("abbbabb"))
    assert not is_border_free_galois_structural(w("abbbabb"))
    with pytest.raises(PreconditionError):
        is_border_free_galois_structural(w("abb"))


def test_border_free_galois_sweeps():
    assert check_bbf_shape(12).passed
    assert check_bbf_routes(12).passed
    assert check_class_implications(12).passed


def test_classify():
    from wordforge import RELEX

    report = classify(d("3177412"), [LEX, VORDER, COLEX, RELEX, ALT])
    assert report.primitive and report.border_free
    assert not (report.lyndon or report.v_word or report.galois)
    expected = {
        "lex": "1231774",
        "vorder": "7741231",
        "colex": "7741231",
        "relex": "7741231",
        "alt": "1774123",
    }
    for name, text in expected.items():
        assert report.minimum(name).text() == text

    small = classify(w("ab"), [LEX, ALT])
    assert small.minimum("lex") == w("ab")
    assert small.minimum("alt") == w("ab")

    sub = classify(d("431412"), [lexext(COLEX)])
    assert sub.minimum("lexext:colex").text() == "431412"

    with pytest.raises(NotPrimitiveError):
        classify(w("abab"), [LEX])
