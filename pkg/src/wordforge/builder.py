"""Enlarge a finite binary border-free UMFF into a finite circ-UMFF.

The builder scans all binary words in length order.  Each primitive
conjugacy class receives exactly one member: an input member if the class
has one, else a word forced by the xyz closure of what was already accepted,
else the first concatenation of two previously accepted members that lands
in the class, is border-free, and keeps the growing family consistent
(xyz-closed, border-free, one word per class).  The candidate pair order is
fixed, so the construction is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BuildError,
    CapExceededError,
    FamilyError,
    NotFFError,
    NotUMFFError,
)
from .families import FactorFamily, circ_umff_verify, xyz_check, xyz_closure
from .words import Alphabet, Word, conjugate_key, is_border_free, is_primitive

DEFAULT_BUILD_CAP = 20


def sigma_star_words(
    alphabet: Alphabet, max_word_len: int, *, cap: int = DEFAULT_BUILD_CAP
) -> list[Word]:
    """All binary words of length 1..max_word_len, in generation order: each
    block prepends the first letter to the previous block, then the second.
    The result has 2**(max_word_len+1) - 2 words."""
    if alphabet.size != 2:
        raise FamilyError("the word universe generator is defined for binary alphabets")
    if max_word_len < 1:
        raise BuildError("max_word_len must be at least 1")
    if max_word_len > cap:
        raise CapExceededError(
            f"universe of words up to length {max_word_len} exceeds cap {cap}"
        )
    a = Word(alphabet, (0,))
    b = Word(alphabet, (1,))
    block = [a, b]
    out = [a, b]
    for _ in range(max_word_len - 1):
        block = [a + w for w in block] + [b + w for w in block]
        out.extend(block)
    return out


@dataclass(frozen=True)
class BuildRecord:
    """Provenance of one accepted member."""

    word: Word
    source: str  # "input" | "pair" | "closure"
    pair: tuple[Word, Word] | None = None

    def note(self) -> str:
        if self.source == "input":
            return "from input"
        if self.source == "pair":
            assert self.pair is not None
            return f"synthesized from ({self.pair[0]}, {self.pair[1]})"
        return "forced by xyz closure"


@dataclass
class BuildResult:
    family: FactorFamily
    records: list[BuildRecord]
    length_cap: int

    def words(self) -> list[Word]:
        return [r.word for r in self.records]


def _closure_problem(words: set[Word]) -> str | None:
    by_class: dict[tuple[int, ...], Word] = {}
    for w in sorted(words, key=lambda v: (len(v), v.ranks)):
        if not is_primitive(w):
            return f"closure forces the repetition {w}"
        if not is_border_free(w):
            return f"closure forces the bordered word {w}"
        key = conjugate_key(w)
        other = by_class.get(key)
        if other is not None and other != w:
            return f"closure forces two conjugates of one class: {other} and {w}"
        by_class[key] = w
    return None


def _validate_input(family: FactorFamily, length_cap: int) -> list[Word]:
    if family.alphabet.size != 2:
        raise FamilyError("the builder is defined for binary families")
    if family.missing_letters():
        raise NotFFError("input family must contain both letters")
    members = family.members_up_to(length_cap)
    if len(members) <= 2:
        raise FamilyError("input family must contain more than the two letters")
    bordered = [m for m in members if not is_border_free(m)]
    if bordered:
        raise FamilyError(
            "input family must be border-free; offending members: "
            + ", ".join(str(m) for m in bordered)
        )
    verdict = xyz_check(
        FactorFamily("input", family.alphabet, members=members), length_cap
    )
    if not verdict.is_umff:
        raise NotUMFFError(
            "input family fails the xyz closure", witnesses=verdict.xyz_witnesses
        )
    return members


def build_circ_umff(
    input_family: FactorFamily,
    length_cap: int,
    *,
    cap: int = DEFAULT_BUILD_CAP,
) -> BuildResult:
    """Extend a binary border-free UMFF to the members of a circ-UMFF of all
    lengths up to ``length_cap``.

    Input members longer than the cap lie outside the bounded universe and
    are ignored.  The result is re-verified before being returned.
    """
    if length_cap > cap:
        raise CapExceededError(f"length cap {length_cap} exceeds builder cap {cap}")
    alphabet = input_family.alphabet
    input_members = _validate_input(input_family, length_cap)
    input_set = set(input_members)
    input_keys = {conjugate_key(m) for m in input_members}

    accepted: list[Word] = []
    accepted_set: set[Word] = set()
    represented: set[tuple[int, ...]] = set()
    records: list[BuildRecord] = []
    pending = set(input_set)

    def accept(word: Word, source: str, pair=None) -> None:
        accepted.append(word)
        accepted_set.add(word)
        represented.add(conjugate_key(word))
        pending.discard(word)
        records.append(BuildRecord(word, source, pair))
        problem = _closure_problem(xyz_closure(accepted_set | pending, length_cap))
        if problem:
            raise BuildError(f"after accepting {word}: {problem}")

    def candidate_pairs(count: int):
        tried = []
        for s in range(1, count + 1):
            t = count + 1 - s
            if 1 <= t <= count and s != t:
                tried.append((s, t))
                yield s, t
        seen = set(tried)
        for s in range(1, count + 1):
            for t in range(1, count + 1):
                if s != t and (s, t) not in seen:
                    yield s, t

    for word in sigma_star_words(alphabet, length_cap, cap=cap):
        if not is_primitive(word):
            continue
        key = conjugate_key(word)
        if key in represented:
            continue
        if word in input_set:
            accept(word, "input")
            continue
        if key in input_keys:
            # The input member of this class is accepted when the scan
            # reaches it.
            continue
        base = xyz_closure(accepted_set | pending, length_cap)
        forced = sorted(
            (q for q in base - accepted_set - pending if conjugate_key(q) == key),
            key=lambda q: q.ranks,
        )
        if forced:
            accept(forced[0], "closure")
            continue
        for s, t in candidate_pairs(len(accepted)):
            cand = accepted[s - 1] + accepted[t - 1]
            if len(cand) != len(word) or conjugate_key(cand) != key:
                continue
            if not is_border_free(cand):
                continue
            closure = xyz_closure(accepted_set | pending | {cand}, length_cap)
            if _closure_problem(closure) is None:
                accept(cand, "pair", (accepted[s - 1], accepted[t - 1]))
                break
        else:
            raise BuildError(
                f"no admissible border-free conjugate for the class of {word}"
            )

    if pending:
        raise BuildError(
            "input members never became acceptable: "
            + ", ".join(str(m) for m in sorted(pending, key=lambda m: m.ranks))
        )

    family = FactorFamily(
        "circ-umff",
        alphabet,
        members=accepted,
        certified_circ_umff=True,
    )
    verdict = circ_umff_verify(family, length_cap)
    if not verdict.is_circ_umff:
        raise BuildError("the constructed family failed re-verification")
    return BuildResult(family=family, records=records, length_cap=length_cap)
