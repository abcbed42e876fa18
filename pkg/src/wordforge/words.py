"""Alphabets, words, and structural primitives on words.

Words store their symbols as ranks (positions) into an ordered alphabet, so
everything downstream reduces to integer comparisons.  The alphabet order is
the order of the symbol list handed to :class:`Alphabet`, not the natural
order of the symbols themselves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import AlphabetError, EmptyWordError, PreconditionError

Symbol = str | int


class Alphabet:
    """A finite, totally ordered set of symbols."""

    __slots__ = ("symbols", "_ranks")

    def __init__(self, symbols: Iterable[Symbol]) -> None:
        syms = tuple(symbols)
        if not syms:
            raise AlphabetError("alphabet must not be empty")
        ranks = {s: i for i, s in enumerate(syms)}
        if len(ranks) != len(syms):
            raise AlphabetError("alphabet symbols must be distinct")
        self.symbols = syms
        self._ranks = ranks

    @classmethod
    def characters(cls, text: str) -> Alphabet:
        """Alphabet of the characters of ``text``, ordered as written."""
        return cls(tuple(text))

    def __len__(self) -> int:
        return len(self.symbols)

    @property
    def size(self) -> int:
        return len(self.symbols)

    def rank(self, symbol: Symbol) -> int:
        try:
            return self._ranks[symbol]
        except KeyError:
            raise AlphabetError(f"symbol {symbol!r} is not in {self!r}") from None

    def symbol(self, rank: int) -> Symbol:
        return self.symbols[rank]

    def word(self, symbols: Iterable[Symbol]) -> Word:
        """Build a word from symbols (a string is read character by character)."""
        return Word(self, tuple(self.rank(s) for s in symbols))

    def from_ranks(self, ranks: Iterable[int]) -> Word:
        return Word(self, tuple(ranks))

    def empty(self) -> Word:
        return Word(self, ())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        return f"Alphabet({''.join(map(str, self.symbols))!r})"


class Word:
    """An immutable word over a fixed alphabet."""

    __slots__ = ("alphabet", "ranks")

    def __init__(self, alphabet: Alphabet, ranks: tuple[int, ...]) -> None:
        size = len(alphabet)
        for r in ranks:
            if not 0 <= r < size:
                raise AlphabetError(f"rank {r} out of range for {alphabet!r}")
        self.alphabet = alphabet
        self.ranks = tuple(ranks)

    def __len__(self) -> int:
        return len(self.ranks)

    def __iter__(self) -> Iterator[int]:
        return iter(self.ranks)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.alphabet, self.ranks[index])
        return self.ranks[index]

    def __add__(self, other: Word) -> Word:
        if self.alphabet != other.alphabet:
            raise AlphabetError("cannot concatenate words over different alphabets")
        return Word(self.alphabet, self.ranks + other.ranks)

    def __mul__(self, count: int) -> Word:
        return Word(self.alphabet, self.ranks * count)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Word)
            and self.alphabet == other.alphabet
            and self.ranks == other.ranks
        )

    def __hash__(self) -> int:
        return hash((self.alphabet, self.ranks))

    def symbols(self) -> tuple[Symbol, ...]:
        return tuple(self.alphabet.symbol(r) for r in self.ranks)

    def text(self) -> str:
        """Render the word; single-character symbols are joined directly."""
        syms = self.symbols()
        if all(isinstance(s, str) and len(s) == 1 for s in syms):
            return "".join(syms)  # type: ignore[arg-type]
        return " ".join(str(s) for s in syms)

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"Word({self.text()!r})"


def require_nonempty(w: Word, operation: str) -> None:
    if len(w) == 0:
        raise EmptyWordError(f"{operation} is not defined for the empty word")


def rotation(w: Word, i: int) -> Word:
    """The i-th rotation ``w[i+1..n] w[1..i]`` (0-indexed offset ``i``)."""
    if len(w) == 0:
        return w
    i %= len(w)
    return Word(w.alphabet, w.ranks[i:] + w.ranks[:i])


def rotations(w: Word) -> list[Word]:
    """All rotations in offset order; the empty word yields ``[w]``."""
    if len(w) == 0:
        return [w]
    return [rotation(w, i) for i in range(len(w))]


def conjugate_key(w: Word) -> tuple[int, ...]:
    """Canonical key of the conjugacy class: the least rotation's rank tuple."""
    r = w.ranks
    n = len(r)
    if n == 0:
        return ()
    doubled = r + r
    return min(doubled[i : i + n] for i in range(n))


def failure_function(ranks: tuple[int, ...]) -> list[int]:
    """Classic border table: pi[q] = length of the longest proper border of
    the prefix of length q+1."""
    n = len(ranks)
    pi = [0] * n
    k = 0
    for q in range(1, n):
        while k > 0 and ranks[q] != ranks[k]:
            k = pi[k - 1]
        if ranks[q] == ranks[k]:
            k += 1
        pi[q] = k
    return pi


def period(w: Word) -> int:
    """Smallest period of a non-empty word."""
    require_nonempty(w, "period")
    pi = failure_function(w.ranks)
    return len(w) - pi[-1]


def is_primitive(w: Word) -> bool:
    """True iff the word is not a proper power of a shorter word."""
    require_nonempty(w, "is_primitive")
    p = period(w)
    return p == len(w) or len(w) % p != 0


def borders(w: Word) -> list[Word]:
    """All non-empty proper borders, shortest first."""
    require_nonempty(w, "borders")
    pi = failure_function(w.ranks)
    lengths = []
    k = pi[-1]
    while k > 0:
        lengths.append(k)
        k = pi[k - 1]
    return [w[:k] for k in reversed(lengths)]


def is_border_free(w: Word) -> bool:
    require_nonempty(w, "is_border_free")
    return failure_function(w.ranks)[-1] == 0


@dataclass(frozen=True)
class VForm:
    """Decomposition of a word around its maximal letter.

    ``parts[0] L parts[1] L ... L parts[count]`` reassembles the word, where
    ``L`` is the maximal letter (given as a rank) occurring ``count`` times.
    No part contains ``L``; ``parts[0]`` may be empty.
    """

    letter_rank: int
    count: int
    parts: tuple[Word, ...]

    @property
    def alphabet(self) -> Alphabet:
        return self.parts[0].alphabet

    @property
    def letter(self) -> Symbol:
        return self.alphabet.symbol(self.letter_rank)

    def join(self) -> Word:
        """Reassemble the original word."""
        sep = Word(self.alphabet, (self.letter_rank,))
        out = self.parts[0]
        for part in self.parts[1:]:
            out = out + sep + part
        return out

    def units(self) -> list[Word]:
        """The factors used for lexicographic-extension comparison: the
        leading part when non-empty, then one ``L``-prefixed unit per part."""
        sep = Word(self.alphabet, (self.letter_rank,))
        out = []
        if len(self.parts[0]):
            out.append(self.parts[0])
        out.extend(sep + part for part in self.parts[1:])
        return out


def v_form(w: Word) -> VForm:
    """Split a non-empty word around every occurrence of its maximal letter."""
    require_nonempty(w, "v_form")
    g = max(w.ranks)
    parts: list[Word] = []
    current: list[int] = []
    for r in w.ranks:
        if r == g:
            parts.append(Word(w.alphabet, tuple(current)))
            current = []
        else:
            current.append(r)
    parts.append(Word(w.alphabet, tuple(current)))
    return VForm(letter_rank=g, count=len(parts) - 1, parts=tuple(parts))


def vform_units(w: Word) -> list[Word]:
    return v_form(w).units()


def star_delete_position(w: Word) -> int:
    """0-based index deleted by one star step: the start of the longest
    non-decreasing suffix (index 0 when the whole word is non-decreasing)."""
    require_nonempty(w, "star_delete")
    r = w.ranks
    s = len(r) - 1
    while s > 0 and r[s - 1] <= r[s]:
        s -= 1
    return s


def star_delete(w: Word) -> Word:
    """One step of star deletion: remove the symbol at the star position."""
    h = star_delete_position(w)
    return Word(w.alphabet, w.ranks[:h] + w.ranks[h + 1 :])


def star_path(w: Word) -> list[Word]:
    """The full deletion sequence ``w, w*, w**, ..., ε``."""
    path = [w]
    while len(path[-1]):
        path.append(star_delete(path[-1]))
    return path


def substring_conjugates(w: Word) -> list[Word]:
    """Rotations by whole maximal-letter units.

    Defined for words that begin with their maximal letter; the rotations are
    returned starting from the unit after the first, so the word itself comes
    last.
    """
    vf = v_form(w)
    if len(vf.parts[0]):
        raise PreconditionError(
            "substring conjugates require the word to start with its maximal letter"
        )
    units = vf.units()
    out = []
    for t in range(1, len(units) + 1):
        rotated = units[t:] + units[:t]
        word = rotated[0]
        for u in rotated[1:]:
            word = word + u
        out.append(word)
    return out
