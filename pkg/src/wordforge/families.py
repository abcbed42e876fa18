"""Factor families: bounded FF / UMFF / circ-UMFF verdicts, maximal
factorization, concatenation order, and alignment checks.

A family is a set of words over one alphabet, given either extensionally
(an explicit finite set, e.g. loaded from a file) or intensionally (a
membership predicate, e.g. "is a Lyndon word").  Family-level claims are
always checked up to an explicit length bound; the verdict carries the bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Sequence

from .canonical import Factorization, is_galois, is_lyndon, is_t_word, is_v_word
from .errors import FamilyError, NotFFError, NotUMFFError, PreconditionError
from .oracle import enumerate_words
from .orders import Comparison, OrderSpec, cmp
from .words import (
    Alphabet,
    Word,
    conjugate_key,
    is_border_free,
    is_primitive,
    require_nonempty,
    rotations,
    substring_conjugates,
    vform_units,
)


class FactorFamily:
    """A word family with membership, bounded enumeration, and flags."""

    def __init__(
        self,
        name: str,
        alphabet: Alphabet,
        *,
        members: Iterable[Word] | None = None,
        predicate: Callable[[Word], bool] | None = None,
        length_bound: int | None = None,
        certified_umff: bool = False,
        certified_circ_umff: bool = False,
    ) -> None:
        if (members is None) == (predicate is None):
            raise FamilyError("give exactly one of members= or predicate=")
        self.name = name
        self.alphabet = alphabet
        self.predicate = predicate
        self.certified_umff = certified_umff or certified_circ_umff
        self.certified_circ_umff = certified_circ_umff
        self._checked_umff_bound = 0
        if members is not None:
            mset = frozenset(members)
            for m in mset:
                if m.alphabet != alphabet:
                    raise FamilyError("family members must share the family alphabet")
                if len(m) == 0:
                    raise FamilyError("the empty word cannot be a family member")
            self.members: frozenset[Word] | None = mset
            self.length_bound = (
                length_bound
                if length_bound is not None
                else max((len(m) for m in mset), default=0)
            )
        else:
            self.members = None
            self.length_bound = length_bound

    def contains(self, w: Word) -> bool:
        if len(w) == 0:
            return False
        if self.members is not None:
            return w in self.members
        assert self.predicate is not None
        return self.predicate(w)

    __contains__ = contains

    def members_up_to(self, bound: int) -> list[Word]:
        """Members of length <= bound, in length-lexicographic order."""
        if self.members is not None:
            return sorted(
                (m for m in self.members if len(m) <= bound),
                key=lambda m: (len(m), m.ranks),
            )
        return [w for w in enumerate_words(self.alphabet, bound) if self.contains(w)]

    def missing_letters(self) -> list[Word]:
        letters = (Word(self.alphabet, (r,)) for r in range(self.alphabet.size))
        return [l for l in letters if not self.contains(l)]

    def __repr__(self) -> str:
        flavor = "extensional" if self.members is not None else "intensional"
        return f"FactorFamily({self.name!r}, {flavor})"


def lyndon_family(alphabet: Alphabet) -> FactorFamily:
    return FactorFamily(
        "lyndon", alphabet, predicate=is_lyndon, certified_circ_umff=True
    )


def vword_family(alphabet: Alphabet) -> FactorFamily:
    return FactorFamily(
        "vword", alphabet, predicate=is_v_word, certified_circ_umff=True
    )


def colyndon_family(alphabet: Alphabet) -> FactorFamily:
    from .orders import COLEX

    return FactorFamily(
        "colyndon",
        alphabet,
        predicate=lambda w: is_t_word(COLEX, w),
        certified_circ_umff=True,
    )


def galois_family(alphabet: Alphabet) -> FactorFamily:
    """All Galois words.  Not an UMFF: kept for oracles and counterexamples."""
    return FactorFamily("galois", alphabet, predicate=is_galois)


def galois_bf_family(alphabet: Alphabet) -> FactorFamily:
    """Border-free Galois words; an UMFF but not a circ-UMFF."""
    return FactorFamily(
        "galois-bf",
        alphabet,
        predicate=lambda w: is_galois(w) and is_border_free(w),
        certified_umff=True,
    )


def minimal_rotation_family(
    order: OrderSpec, alphabet: Alphabet, *, border_free: bool = True
) -> FactorFamily:
    """Rotation minima under an arbitrary order, optionally restricted to the
    border-free ones."""
    if border_free:
        pred = lambda w: is_t_word(order, w) and is_border_free(w)
    else:
        pred = lambda w: is_t_word(order, w)
    return FactorFamily(f"min-{order}", alphabet, predicate=pred)


BUILTIN_FAMILIES: dict[str, Callable[[Alphabet], FactorFamily]] = {
    "lyndon": lyndon_family,
    "vword": vword_family,
    "galois-bf": galois_bf_family,
    "colyndon": colyndon_family,
}


@dataclass(frozen=True)
class FamilyVerdict:
    """Outcome of a bounded family-level check; false flags carry witnesses."""

    bound: int
    is_ff: bool
    is_umff: bool
    is_circ_umff: bool | None
    missing_letters: tuple[Word, ...] = ()
    xyz_witnesses: tuple[tuple[Word, Word, Word], ...] = ()
    class_witnesses: tuple[tuple[Word, tuple[Word, ...]], ...] = ()


def _xyz_violations(
    family: FactorFamily, members: Sequence[Word], bound: int
) -> list[tuple[Word, Word, Word]]:
    out = []
    for u in members:
        for v in members:
            top = min(len(u), len(v)) - 1
            for mid in range(1, top + 1):
                if u.ranks[-mid:] != v.ranks[:mid]:
                    continue
                whole = u + v[mid:]
                if len(whole) <= bound and not family.contains(whole):
                    out.append((u[: len(u) - mid], u[len(u) - mid :], v[mid:]))
    return out


def xyz_check(family: FactorFamily, bound: int) -> FamilyVerdict:
    """Bounded test of the xyz closure: whenever ``xy`` and ``yz`` are
    members with a non-empty middle ``y``, the word ``xyz`` must be a member.
    This closure characterizes families with unique maximal factorizations.
    """
    missing = family.missing_letters()
    if missing:
        raise NotFFError(
            f"family {family.name!r} is missing letters: "
            + ", ".join(str(l) for l in missing)
        )
    members = family.members_up_to(bound)
    witnesses = _xyz_violations(family, members, bound)
    return FamilyVerdict(
        bound=bound,
        is_ff=True,
        is_umff=not witnesses,
        is_circ_umff=None,
        xyz_witnesses=tuple(witnesses),
    )


def xyz_closure(words: Iterable[Word], bound: int) -> set[Word]:
    """Fixpoint of the xyz rule over a word set, keeping words up to the
    length bound."""
    current = set(words)
    grew = True
    while grew:
        grew = False
        snapshot = list(current)
        for u in snapshot:
            for v in snapshot:
                top = min(len(u), len(v)) - 1
                for mid in range(1, top + 1):
                    if u.ranks[-mid:] != v.ranks[:mid]:
                        continue
                    whole = u + v[mid:]
                    if len(whole) <= bound and whole not in current:
                        current.add(whole)
                        grew = True
    return current


def circ_umff_verify(family: FactorFamily, bound: int) -> FamilyVerdict:
    """Bounded circ-UMFF test: xyz closure plus exactly one member rotation
    in every primitive conjugacy class up to the bound."""
    missing = family.missing_letters()
    if missing:
        return FamilyVerdict(
            bound=bound,
            is_ff=False,
            is_umff=False,
            is_circ_umff=False,
            missing_letters=tuple(missing),
        )
    members = family.members_up_to(bound)
    xyz_witnesses = _xyz_violations(family, members, bound)
    class_witnesses = []
    seen: set[tuple[int, ...]] = set()
    for w in enumerate_words(family.alphabet, bound):
        if not is_primitive(w):
            continue
        key = conjugate_key(w)
        if key in seen:
            continue
        seen.add(key)
        found = tuple(r for r in rotations(w) if family.contains(r))
        if len(found) != 1:
            class_witnesses.append((Word(family.alphabet, key), found))
    return FamilyVerdict(
        bound=bound,
        is_ff=True,
        is_umff=not xyz_witnesses,
        is_circ_umff=not xyz_witnesses and not class_witnesses,
        xyz_witnesses=tuple(xyz_witnesses),
        class_witnesses=tuple(class_witnesses),
    )


def substring_circ_umff_verify(
    family: FactorFamily, universe: Iterable[Word]
) -> FamilyVerdict:
    """Analogue of :func:`circ_umff_verify` over unit rotations.

    ``universe`` supplies the words to check (each starting with its maximal
    letter); every primitive one must have exactly one member among its unit
    rotations, and the members found must satisfy the xyz closure along unit
    boundaries.
    """
    class_witnesses = []
    members: set[Word] = set()
    seen: set[tuple[int, ...]] = set()
    max_len = 0
    for w in universe:
        max_len = max(max_len, len(w))
        if not is_primitive(w):
            continue
        subs = substring_conjugates(w)
        key = min(s.ranks for s in subs)
        if key in seen:
            continue
        seen.add(key)
        found = tuple(s for s in subs if family.contains(s))
        members.update(found)
        if len(found) != 1:
            class_witnesses.append((Word(w.alphabet, key), found))
    def join(units: list[Word]) -> Word:
        out = units[0]
        for part in units[1:]:
            out = out + part
        return out

    xyz_witnesses = []
    member_list = sorted(members, key=lambda m: (len(m), m.ranks))
    units_of = {m: vform_units(m) for m in member_list}
    for u in member_list:
        for v in member_list:
            uu, vu = units_of[u], units_of[v]
            for k in range(1, min(len(uu), len(vu))):
                if uu[len(uu) - k :] != vu[:k]:
                    continue
                whole = join(uu + vu[k:])
                if len(whole) <= max_len and not family.contains(whole):
                    xyz_witnesses.append((join(uu[: len(uu) - k]), join(vu[:k]), join(vu[k:])))
    return FamilyVerdict(
        bound=max_len,
        is_ff=True,
        is_umff=not xyz_witnesses,
        is_circ_umff=not xyz_witnesses and not class_witnesses,
        xyz_witnesses=tuple(xyz_witnesses),
        class_witnesses=tuple(class_witnesses),
    )


def _require_umff(family: FactorFamily, bound: int) -> None:
    if family.certified_umff or family._checked_umff_bound >= bound:
        return
    verdict = xyz_check(family, bound)
    if not verdict.is_umff:
        shown = ", ".join(
            f"({x}, {y}, {z})" for x, y, z in verdict.xyz_witnesses[:3]
        )
        raise NotUMFFError(
            f"family {family.name!r} fails the xyz closure up to length {bound};"
            f" witnesses: {shown}",
            witnesses=verdict.xyz_witnesses,
        )
    family._checked_umff_bound = bound


def maximal_factorization(family: FactorFamily, w: Word) -> Factorization:
    """The unique factorization of ``w`` over an UMFF in which no factor can
    be extended inside ``w``; computed by the longest-member-prefix greedy
    walk, which the xyz closure makes exact."""
    require_nonempty(w, "maximal_factorization")
    if w.alphabet != family.alphabet:
        raise PreconditionError("word and family alphabets differ")
    for r in set(w.ranks):
        if not family.contains(Word(w.alphabet, (r,))):
            raise NotFFError(
                f"letter {w.alphabet.symbol(r)!r} of the word is not a family member"
            )
    _require_umff(family, len(w))
    factors = []
    i = 0
    n = len(w)
    while i < n:
        for j in range(n, i, -1):
            piece = w[i:j]
            if family.contains(piece):
                factors.append(piece)
                i = j
                break
    return Factorization(tuple(factors), family.name)


class ConcatOrder(Enum):
    LESS = "less"
    GREATER_OR_UNORDERED = "greater-or-unordered"


def concat_order(family: FactorFamily, u: Word, v: Word) -> ConcatOrder:
    """Concatenation order on distinct members: ``u`` is below ``v`` exactly
    when their concatenation is itself a member."""
    if u == v:
        raise PreconditionError("concatenation order compares distinct members")
    for operand in (u, v):
        if not family.contains(operand):
            raise FamilyError(f"{operand!r} is not a member of {family.name!r}")
    if family.contains(u + v):
        return ConcatOrder.LESS
    return ConcatOrder.GREATER_OR_UNORDERED


@dataclass(frozen=True)
class Misalignment:
    u: Word
    v: Word
    concat_member: bool
    order_less: bool


def alignment_check(
    family: FactorFamily, order: OrderSpec, bound: int
) -> list[Misalignment]:
    """All ordered member pairs where concatenation order and the ambient
    order disagree, over concatenations up to the bound."""
    if not family.certified_circ_umff:
        verdict = circ_umff_verify(family, bound)
        if not verdict.is_circ_umff:
            raise FamilyError(
                f"family {family.name!r} is not a circ-UMFF up to {bound}"
            )
    members = family.members_up_to(bound - 1)
    out = []
    for u in members:
        for v in members:
            if u == v or len(u) + len(v) > bound:
                continue
            concat_member = family.contains(u + v)
            order_less = cmp(order, u, v) is Comparison.LESS
            if concat_member != order_less:
                out.append(Misalignment(u, v, concat_member, order_less))
    return out


def dump_family(
    words: Sequence[Word],
    alphabet: Alphabet,
    *,
    header: str | None = None,
    notes: dict[Word, str] | None = None,
) -> str:
    """Serialize a family in the one-word-per-line file format."""
    lines = []
    if header:
        for line in header.splitlines():
            lines.append(f"# {line}")
    if all(isinstance(s, str) and len(s) == 1 for s in alphabet.symbols):
        symbols = "".join(alphabet.symbols)  # type: ignore[arg-type]
    else:
        symbols = " ".join(str(s) for s in alphabet.symbols)
    lines.append(f"alphabet: {symbols}")
    for w in words:
        note = (notes or {}).get(w)
        lines.append(f"{w.text()}  # {note}" if note else w.text())
    return "\n".join(lines) + "\n"


def _parse_symbols(tokens: list[str]) -> tuple:
    out = []
    for tok in tokens:
        try:
            out.append(int(tok))
        except ValueError:
            out.append(tok)
    return tuple(out)


def parse_family(text: str, *, name: str = "file") -> FactorFamily:
    """Parse the family file format: ``#`` comments, an ``alphabet:`` header
    line, then one word per line."""
    alphabet: Alphabet | None = None
    words: list[Word] = []
    char_mode = False
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if alphabet is None:
            if not line.startswith("alphabet:"):
                raise FamilyError("family file must start with an 'alphabet:' line")
            tokens = line[len("alphabet:") :].replace(",", " ").split()
            if not tokens:
                raise FamilyError("empty alphabet in family file")
            if len(tokens) == 1 and not tokens[0].lstrip("-").isdigit():
                alphabet = Alphabet.characters(tokens[0])
                char_mode = True
            else:
                symbols = _parse_symbols(tokens)
                alphabet = Alphabet(symbols)
                char_mode = all(
                    isinstance(s, str) and len(s) == 1 for s in symbols
                )
            continue
        if char_mode:
            words.append(alphabet.word(line.replace(" ", "")))
        else:
            tokens = _parse_symbols(line.replace(",", " ").split())
            words.append(alphabet.word(tokens))
    if alphabet is None:
        raise FamilyError("family file has no alphabet line")
    return FactorFamily(name, alphabet, members=words)


def load_family(path: str, *, name: str | None = None) -> FactorFamily:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    return parse_family(text, name=name or path)
