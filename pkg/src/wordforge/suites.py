"""Exhaustive desk-scale verification suites.

Every check returns a :class:`Check`; the CLI ``verify`` subcommand and the
acceptance tests both run these, the latter at the bounds they pin down.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable

from . import canonical, families, oracle, transforms
from .builder import build_circ_umff
from .orders import (
    ALT,
    COLEX,
    LEX,
    MODALT,
    RELEX,
    VORDER,
    Comparison,
    OrderSpec,
    cmp,
    cmp_v,
    lexext,
    sort_key,
)
from .words import Alphabet, Word, conjugate_key, is_border_free, is_primitive, rotations

AB = Alphabet.characters("ab")
ABC = Alphabet.characters("abc")
DIGITS = Alphabet.characters("123456789")


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def message(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        suffix = f" ({self.detail})" if self.detail and not self.passed else ""
        return f"{status}  {self.name}{suffix}"


def _check(name: str, passed: bool, detail: str = "") -> Check:
    return Check(name, bool(passed), detail)


def _all_words(alphabet: Alphabet, max_len: int, include_empty: bool = False):
    words = list(oracle.enumerate_words(alphabet, max_len))
    if include_empty:
        return [alphabet.empty()] + words
    return words


# ---------------------------------------------------------------- orders


def check_total_order(order: OrderSpec, alphabet: Alphabet, max_len: int) -> Check:
    """Antisymmetry, totality, and transitivity over all words up to the
    length bound, with the empty word as the unique minimum.

    Transitivity is verified by sorting under the comparator and checking
    that every ordered pair agrees with its sorted positions.
    """
    include_empty = order.kind != "lexext"
    words = _all_words(alphabet, max_len, include_empty=include_empty)
    ranked = sorted(words, key=sort_key(order))
    if include_empty and len(ranked[0]):
        return _check(f"total-order {order}", False, "empty word is not minimal")
    for i, a in enumerate(ranked):
        if cmp(order, a, a) is not Comparison.EQUAL:
            return _check(f"total-order {order}", False, f"{a} != {a}")
        for b in ranked[i + 1 :]:
            if cmp(order, a, b) is not Comparison.LESS:
                return _check(f"total-order {order}", False, f"expected {a} < {b}")
            if cmp(order, b, a) is not Comparison.GREATER:
                return _check(f"total-order {order}", False, f"expected {b} > {a}")
    return _check(f"total-order {order} up to {max_len}", True)


def check_star_tree_agreement(alphabet: Alphabet, max_len: int) -> Check:
    """The recursive vorder comparator agrees with the literal star-deletion
    comparison on every pair."""
    words = _all_words(alphabet, max_len)
    for x in words:
        for y in words:
            if oracle.star_tree_cmp(x, y) is not cmp_v(x, y):
                return _check("vorder vs star tree", False, f"disagree on ({x}, {y})")
    return _check(
        f"vorder vs star tree, alphabet {alphabet.size}, up to {max_len}", True
    )


def check_subsequence_property(alphabet: Alphabet, max_len: int) -> Check:
    """Every proper subsequence of a word precedes it in vorder."""
    for w in oracle.enumerate_words(alphabet, max_len):
        seen = set()
        for s in oracle.proper_subsequences(w):
            if s.ranks in seen:
                continue
            seen.add(s.ranks)
            if cmp_v(s, w) is not Comparison.LESS:
                return _check("vorder subsequence", False, f"{s} not below {w}")
    return _check(f"vorder subsequence property up to {max_len}", True)


def check_suffix_chain(w: Word) -> Check:
    """Proper suffixes are vorder-sorted by increasing length."""
    suffixes = [w[i:] for i in range(len(w))]
    for i in range(len(suffixes) - 1):
        if cmp_v(suffixes[i + 1], suffixes[i]) is not Comparison.LESS:
            return _check("vorder suffix chain", False, f"fails inside {w}")
    return _check(f"vorder suffix chain of {w}", True)


def check_modalt_brute_force(max_len: int) -> Check:
    """The closed-form modalt prefix rule matches a brute-force search for a
    separating extension.

    A separating extension never needs to be longer than the length gap of
    the pair, so searching up to that bound is exact.
    """

    def brute(x: Word, y: Word) -> Comparison:
        # x a proper prefix of y: does some extension xz fall below y in
        # alternating order without being prefix-comparable to it?
        for z in oracle.enumerate_words(x.alphabet, len(y) - len(x)):
            xz = x + z
            shorter = min(len(xz), len(y))
            if xz.ranks[:shorter] == y.ranks[:shorter]:
                continue
            if cmp(ALT, xz, y) is Comparison.LESS:
                return Comparison.LESS
        return Comparison.GREATER

    for y in oracle.enumerate_words(AB, max_len):
        for cut in range(1, len(y)):
            x = y[:cut]
            got = cmp(MODALT, x, y)
            expected = brute(x, y)
            if got is not expected:
                return _check(
                    "modalt brute force", False, f"({x}, {y}): {got} vs {expected}"
                )
    return _check(f"modalt prefix rule vs brute force up to {max_len}", True)


def orders_suite(max_len: int = 6) -> list[Check]:
    checks = [
        check_total_order(order, AB, max_len)
        for order in (LEX, COLEX, RELEX, ALT, MODALT, VORDER, lexext(COLEX))
    ]
    checks.append(check_star_tree_agreement(AB, max_len))
    checks.append(check_star_tree_agreement(ABC, min(max_len, 6)))
    checks.append(check_subsequence_property(AB, min(max_len + 2, 8)))
    checks.append(check_suffix_chain(DIGITS.word("7547223")))
    checks.append(check_modalt_brute_force(min(max_len + 2, 8)))
    return checks


# ---------------------------------------------------------------- word classes


def check_class_implications(max_len: int) -> Check:
    """Lyndon implies border-free implies primitive."""
    for w in oracle.enumerate_words(AB, max_len):
        lyndon = canonical.is_lyndon(w)
        bf = is_border_free(w)
        prim = is_primitive(w)
        if lyndon and not bf:
            return _check("lyndon=>border-free", False, str(w))
        if bf and not prim:
            return _check("border-free=>primitive", False, str(w))
    return _check(f"lyndon => border-free => primitive up to {max_len}", True)


def check_core_equivalence(max_units: int) -> Check:
    """For words that start with their maximal letter and have single-letter
    gaps, vorder-minimality of the word matches Lyndon-ness of the gap word."""
    three = DIGITS.rank("3")
    for count in range(1, max_units + 1):
        for gaps in product((DIGITS.rank("1"), DIGITS.rank("2")), repeat=count):
            ranks: list[int] = []
            for g in gaps:
                ranks.extend((three, g))
            w = Word(DIGITS, tuple(ranks))
            if canonical.is_v_word(w) != canonical.is_v_word_by_core(w):
                return _check("unit-gap core equivalence", False, str(w))
    return _check(f"unit-gap core equivalence up to {max_units} units", True)


def check_v_constructions(max_core: int, max_repeat: int) -> Check:
    """Interleaving and prepending constructions land in the classes they
    promise."""
    c = "c"
    for core_len in range(1, max_core + 1):
        for ranks in product((0, 1), repeat=core_len):
            core = Word(ABC, ranks)
            if not canonical.is_lyndon(core):
                continue
            for h in range(1, max_repeat + 1):
                built = canonical.v_word_from_lyndon(core, c, h)
                if not canonical.is_v_word(built):
                    return _check("interleave construction", False, str(built))
            if core_len >= 2:
                for k in range(1, max_repeat + 1):
                    grown = canonical.extend_to_v_word(core, k, c)
                    if not canonical.is_v_word(grown):
                        return _check("prepend-larger construction", False, str(grown))
                    longer = canonical.extend_to_lyndon(core, k)
                    if not canonical.is_lyndon(longer):
                        return _check("prepend-least construction", False, str(longer))
    return _check(
        f"v-word/lyndon constructions, cores up to {max_core}, repeats {max_repeat}",
        True,
    )


# ---------------------------------------------------------------- galois


def check_galois_suffixes(max_len: int) -> Check:
    """A Galois word precedes each of its proper suffixes in alternating
    order."""
    for w in oracle.enumerate_words(AB, max_len):
        if not canonical.is_galois(w):
            continue
        for i in range(1, len(w)):
            if cmp(ALT, w, w[i:]) is not Comparison.LESS:
                return _check("galois suffixes", False, f"{w} vs {w[i:]}")
    return _check(f"galois suffix property up to {max_len}", True)


def check_galois_concat(max_total: int) -> Check:
    """For Galois words with a primitive concatenation, order and
    concatenation membership coincide."""
    galois = [w for w in oracle.enumerate_words(AB, max_total - 1) if canonical.is_galois(w)]
    for u in galois:
        for v in galois:
            if u == v or len(u) + len(v) > max_total:
                continue
            uv = u + v
            if not is_primitive(uv):
                continue
            less = cmp(ALT, u, v) is Comparison.LESS
            member = canonical.concat_is_galois(u, v)
            if less != member:
                return _check("galois concatenation", False, f"({u}, {v})")
    return _check(f"galois concatenation biconditional up to {max_total}", True)


def check_bbf_shape(max_len: int) -> Check:
    """Binary border-free Galois words of length >= 3 start ab and end bb."""
    for w in oracle.enumerate_words(AB, max_len):
        if len(w) < 3:
            continue
        if canonical.is_galois(w) and is_border_free(w):
            if w.ranks[:2] != (0, 1) or w.ranks[-2:] != (1, 1):
                return _check("border-free galois shape", False, str(w))
    return _check(f"border-free galois prefix/suffix shape up to {max_len}", True)


def check_bbf_routes(max_len: int) -> Check:
    """Direct and structural membership routes agree for lengths > 3."""
    for w in oracle.enumerate_words(AB, max_len):
        if len(w) <= 3:
            continue
        direct = canonical.is_galois(w) and is_border_free(w)
        structural = canonical.is_border_free_galois_structural(w)
        if direct != structural:
            return _check("border-free galois routes", False, str(w))
    return _check(f"border-free galois route equivalence up to {max_len}", True)


def check_gbf_xyz(max_len: int) -> Check:
    """Border-free Galois words satisfy the xyz closure, including the
    ababbb-overlap instance."""
    fam = families.galois_bf_family(AB)
    verdict = families.xyz_check(fam, max_len)
    if not verdict.is_umff:
        return _check("border-free galois xyz", False, str(verdict.xyz_witnesses[0]))
    xy = AB.word("abababbb")
    yz = AB.word("ababbbbb")
    whole = AB.word("abababbbbb")
    instance = fam.contains(xy) and fam.contains(yz) and fam.contains(whole)
    return _check(
        f"border-free galois forms an UMFF up to {max_len}", instance,
        "named overlap instance failed" if not instance else "",
    )


def galois_suite(max_len: int = 10) -> list[Check]:
    return [
        check_galois_suffixes(max_len),
        check_galois_concat(max_len),
        check_bbf_shape(max_len + 4),
        check_bbf_routes(max_len + 4),
        check_gbf_xyz(max_len),
        check_class_implications(max_len + 2),
        check_core_equivalence(6),
        check_v_constructions(6, 3),
    ]


# ---------------------------------------------------------------- families


FIBONACCI_WORDS = ("b", "a", "ab", "aba", "abaab", "abaababa")


def check_fibonacci_xyz() -> Check:
    """The Fibonacci word family is an FF but fails the xyz closure, with the
    overlap of abaababa and abaab as a witness."""
    fam = families.FactorFamily(
        "fibonacci", AB, members=[AB.word(t) for t in FIBONACCI_WORDS]
    )
    verdict = families.xyz_check(fam, 10)
    witness = (AB.word("abaab"), AB.word("aba"), AB.word("ab"))
    if verdict.is_umff:
        return _check("fibonacci xyz failure", False, "unexpectedly closed")
    if witness not in verdict.xyz_witnesses:
        return _check("fibonacci xyz failure", False, "expected witness missing")
    return _check("fibonacci family fails xyz with the known witness", True)


def check_abc_closure() -> Check:
    """Closing {a,b,c,ab,abc,cab} under xyz forces abcab and abcabc."""
    words = [ABC.word(t) for t in ("a", "b", "c", "ab", "abc", "cab")]
    closed = families.xyz_closure(words, 6)
    ok = ABC.word("abcab") in closed and ABC.word("abcabc") in closed
    return _check("xyz closure forces abcab and (abc)^2", ok)


def check_tword_families(max_len: int) -> Check:
    """Border-free minimal-rotation families are circ-UMFFs for lex, colex,
    relex, and vorder; for alternating order some classes have only bordered
    minima and must be reported as unrepresented."""
    for order in (LEX, COLEX, RELEX, VORDER):
        fam = families.minimal_rotation_family(order, AB)
        verdict = families.circ_umff_verify(fam, max_len)
        if not verdict.is_circ_umff:
            return _check("minimal-rotation circ-umff", False, f"{order} failed")
    alt_fam = families.minimal_rotation_family(ALT, AB)
    verdict = families.circ_umff_verify(alt_fam, max_len)
    if verdict.is_circ_umff or not verdict.class_witnesses:
        return _check(
            "minimal-rotation circ-umff", False, "alt failed to report witnesses"
        )
    bad_keys = {w.ranks for w, _ in verdict.class_witnesses}
    if conjugate_key(AB.word("ababba")) not in bad_keys:
        return _check(
            "minimal-rotation circ-umff", False, "ababba class not among witnesses"
        )
    return _check(
        f"minimal-rotation families up to {max_len}: lex/colex/relex/vorder pass, "
        "alt reports unrepresented classes",
        True,
    )


def _substring_universe(max_units: int) -> list[Word]:
    parts = ["", "1", "2", "12", "21"]
    out = []
    for count in range(1, max_units + 1):
        for combo in product(parts, repeat=count):
            text = "".join("3" + p for p in combo)
            out.append(DIGITS.word(text))
    return out


def check_substring_circ(max_units: int) -> Check:
    """Unit-rotation minima under lexext:colex give exactly one member per
    substring conjugacy class and satisfy the unit-aligned xyz closure.

    Restricting to border-free members must instead leave classes whose
    minimum is bordered (such as 313) unrepresented; that tension is
    reported, not hidden.
    """
    order = lexext(COLEX)
    universe = _substring_universe(max_units)
    plain = families.FactorFamily(
        "lexext-colex", DIGITS, predicate=lambda w: canonical.is_t_word(order, w)
    )
    verdict = families.substring_circ_umff_verify(plain, universe)
    if not verdict.is_circ_umff:
        detail = (
            f"class witness {verdict.class_witnesses[0][0]}"
            if verdict.class_witnesses
            else f"xyz witness {verdict.xyz_witnesses[0]}"
        )
        return _check("lexext:colex substring circ-umff", False, detail)
    bf = families.FactorFamily(
        "lexext-colex-bf",
        DIGITS,
        predicate=lambda w: canonical.is_t_word(order, w) and is_border_free(w),
    )
    bf_verdict = families.substring_circ_umff_verify(bf, universe)
    bad_keys = {k.text() for k, _ in bf_verdict.class_witnesses}
    if "313" not in bad_keys:
        return _check(
            "lexext:colex substring circ-umff",
            False,
            "border-free variant failed to report the bordered-minimum class 313",
        )
    return _check(
        f"lexext:colex substring circ-umff up to {max_units} units "
        "(border-free variant reports bordered-minimum classes)",
        True,
    )


def check_maximal_vs_oracle(max_len: int) -> Check:
    """Greedy maximal factorization agrees with the exhaustive
    non-extendibility oracle for the Lyndon and vorder families."""
    for name, pred in (("lyndon", canonical.is_lyndon), ("vword", canonical.is_v_word)):
        members = [w for w in oracle.enumerate_words(AB, max_len) if pred(w)]
        snapshot = families.FactorFamily(
            name, AB, members=members, certified_umff=True
        )
        for w in oracle.enumerate_words(AB, max_len):
            unique, survivors = oracle.unique_maximal_check(snapshot, w)
            if not unique:
                return _check("maximal vs oracle", False, f"{name}: {w} not unique")
            got = families.maximal_factorization(snapshot, w).factors
            if got != survivors[0]:
                return _check("maximal vs oracle", False, f"{name}: {w} differs")
    return _check(f"greedy maximal factorization vs oracle up to {max_len}", True)


EXAMPLE_INPUT = ("a", "b", "abb", "ababb")
EXAMPLE_OUTPUT = (
    "a", "b", "ab", "aab", "abb", "aaab", "aabb", "abbb",
    "aaaab", "aaabb", "aabab", "aabbb", "ababb", "abbbb",
)


def check_builder_example() -> Check:
    """Enlarging {a, b, abb, ababb} to length 5 yields the known 14-word
    circ-UMFF, including the Lyndon-conjugate member aabab."""
    fam = families.FactorFamily(
        "seed", AB, members=[AB.word(t) for t in EXAMPLE_INPUT]
    )
    result = build_circ_umff(fam, 5)
    got = {w.text() for w in result.words()}
    if got != set(EXAMPLE_OUTPUT):
        return _check("builder example", False, f"got {sorted(got)}")
    return _check("builder reproduces the 14-word enlargement of {a,b,abb,ababb}", True)


def check_bwt_roundtrip(max_len: int) -> Check:
    """Inverse transform recovers every binary body."""
    bodies = [AB.empty()] + _all_words(AB, max_len)
    for body in bodies:
        if transforms.bwt_inverse(transforms.bwt(body)) != transforms.with_sentinel(body):
            return _check("bwt round trip", False, str(body))
    return _check(f"bwt/unbwt round trip up to {max_len}", True)


def check_abwt_first_row(max_len: int) -> Check:
    """The alternating transform's first matrix row is the Galois rotation."""
    for w in oracle.enumerate_words(AB, max_len):
        if not is_primitive(w):
            continue
        rows = sorted(rotations(w), key=sort_key(ALT))
        _, galois = canonical.galois_rotation(w)
        if rows[0] != galois:
            return _check("abwt first row", False, str(w))
        last, index = transforms.abwt(w)
        if last.ranks != tuple(r.ranks[-1] for r in rows) or rows[index] != w:
            return _check("abwt last column", False, str(w))
    return _check(f"abwt first row is the galois rotation up to {max_len}", True)


def umff_suite(max_len: int = 8) -> list[Check]:
    return [
        check_fibonacci_xyz(),
        check_abc_closure(),
        check_tword_families(max_len),
        check_substring_circ(4),
        check_maximal_vs_oracle(min(max_len + 1, 9)),
        check_builder_example(),
        check_bwt_roundtrip(max_len),
        check_abwt_first_row(max_len),
    ]


# ---------------------------------------------------------------- paper goldens


def _golden_checks() -> Iterable[tuple[str, Callable[[], bool]]]:
    dw = DIGITS.word
    ab = AB.word
    ascii_lower = Alphabet.characters("abcdefghijklmnopqrstuvwxyz")

    yield "vorder: 929 below 922911", lambda: cmp_v(dw("929"), dw("922911")) is Comparison.LESS
    yield "vorder: unique above equitant", lambda: cmp_v(
        ascii_lower.word("unique"), ascii_lower.word("equitant")
    ) is Comparison.GREATER
    yield "vorder chain 6263, 6362, 2636, 3626", lambda: all(
        cmp_v(dw(a), dw(b)) is Comparison.LESS
        for a, b in (("6263", "6362"), ("6362", "2636"), ("2636", "3626"))
    )
    yield "lyndon factorization of 33132421", lambda: str(
        canonical.duval_factorization(dw("33132421"))
    ) == "(3)(3)(13242)(1)"
    yield "vorder factorization of 33132421", lambda: str(
        canonical.v_factorization(dw("33132421"))
    ) == "(33132)(421)"
    yield "suffix chain of 7547223", lambda: check_suffix_chain(dw("7547223")).passed
    yield "subsequence instance 772 below 7547223", lambda: cmp_v(
        dw("772"), dw("7547223")
    ) is Comparison.LESS
    yield "classification of 3177412", lambda: _classification_golden()
    yield "bwt of abab", lambda: transforms.bwt(AB.word("abab")).text() == "bb$aa"
    yield "bwt inverse of bb$aa", lambda: transforms.bwt_inverse(
        transforms.bwt(AB.word("abab"))
    ).text() == "abab$"
    yield "galois membership list", lambda: all(
        canonical.is_galois(ab(t))
        for t in ("ab", "aba", "abb", "abba", "ababa", "ababaa", "ababba")
    ) and not canonical.is_galois(ab("aabbab")) and canonical.is_galois(ab("abaabb"))
    yield "galois factorizations of ababab", lambda: _galois_factorizations_golden()
    yield "lyndon factorization of ababab", lambda: str(
        canonical.duval_factorization(ab("ababab"))
    ) == "(ab)(ab)(ab)"
    yield "border-free galois overlap instance", lambda: check_gbf_xyz(10).passed
    yield "ab-block factorization of abbbabbabbbbb", lambda: str(
        canonical.ab_block_factorization(ab("abbbabbabbbbb"))
    ) == "(abbb)(abb)(abbbbb)"
    yield "builder enlargement example", lambda: check_builder_example().passed


def _classification_golden() -> bool:
    w = DIGITS.word("3177412")
    report = canonical.classify(w, [LEX, VORDER, COLEX, RELEX, ALT])
    expected = {
        "lex": "1231774",
        "vorder": "7741231",
        "colex": "7741231",
        "relex": "7741231",
        "alt": "1774123",
    }
    return all(report.minimum(k).text() == v for k, v in expected.items())


def _galois_factorizations_golden() -> bool:
    fam = families.galois_family(AB)
    results = oracle.all_factorizations(fam, AB.word("ababab"))
    triple = tuple(AB.word("ab") for _ in range(3))
    pair = (AB.word("ababa"), AB.word("b"))
    return triple in results and pair in results


def paper_suite() -> list[Check]:
    checks = []
    for name, fn in _golden_checks():
        try:
            checks.append(_check(name, fn()))
        except Exception as exc:  # pragma: no cover - diagnostics only
            checks.append(_check(name, False, f"{type(exc).__name__}: {exc}"))
    return checks


SUITES: dict[str, Callable[..., list[Check]]] = {
    "paper": lambda max_len=None: paper_suite(),
    "orders": lambda max_len=None: orders_suite(max_len or 6),
    "galois": lambda max_len=None: galois_suite(max_len or 8),
    "umff": lambda max_len=None: umff_suite(max_len or 7),
}
