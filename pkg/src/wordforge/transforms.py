"""Burrows-Wheeler transform, its inverse, and the alternating-order variant.

The plain transform appends a unique sentinel, strictly least in the
alphabet, so that all rotations are distinct even for repetitions.  The
alternating variant sorts the rotation matrix by alternating lexorder and is
defined on primitive words only, sentinel-free.
"""

from __future__ import annotations

from .errors import NotPrimitiveError, SentinelError
from .orders import ALT, sort_key
from .words import Alphabet, Word, is_primitive, rotations

SENTINEL = "$"


def sentinel_alphabet(alphabet: Alphabet) -> Alphabet:
    if SENTINEL in alphabet.symbols:
        raise SentinelError(f"alphabet already contains the sentinel {SENTINEL!r}")
    return Alphabet((SENTINEL,) + alphabet.symbols)


def with_sentinel(body: Word) -> Word:
    """The body with the sentinel appended, over the extended alphabet."""
    ext = sentinel_alphabet(body.alphabet)
    return Word(ext, tuple(r + 1 for r in body.ranks) + (0,))


def strip_sentinel(w: Word) -> Word:
    """Drop the trailing sentinel and return to the original alphabet."""
    if w.alphabet.symbols[0] != SENTINEL or w.ranks.count(0) != 1 or w.ranks[-1] != 0:
        raise SentinelError("expected a word with a single trailing sentinel")
    base = Alphabet(w.alphabet.symbols[1:])
    return Word(base, tuple(r - 1 for r in w.ranks[:-1]))


def bwt(body: Word) -> Word:
    """Last column of the lexicographically sorted rotations of body+sentinel."""
    s = with_sentinel(body)
    rows = sorted(rotations(s), key=lambda r: r.ranks)
    return Word(s.alphabet, tuple(row.ranks[-1] for row in rows))


def bwt_inverse(transform: Word) -> Word:
    """Recover the sentinel-terminated word from its transform via the
    last-to-first column walk."""
    if transform.alphabet.symbols[0] != SENTINEL:
        raise SentinelError("transform must be over a sentinel-extended alphabet")
    if transform.ranks.count(0) != 1:
        raise SentinelError("transform must contain the sentinel exactly once")
    last = transform.ranks
    n = len(last)
    # Stable sort of positions by symbol gives, for each row of the sorted
    # matrix, the row of the matrix it was rotated from.
    order = sorted(range(n), key=lambda i: (last[i], i))
    out = []
    row = last.index(0)
    for _ in range(n):
        row = order[row]
        out.append(last[row])
    return Word(transform.alphabet, tuple(out))


def abwt(w: Word) -> tuple[Word, int]:
    """Alternating-order transform of a primitive word: the last column of
    the rotation matrix sorted by alternating lexorder, plus the row index of
    the input word."""
    if not is_primitive(w):
        raise NotPrimitiveError("the alternating transform requires a primitive word")
    rows = sorted(rotations(w), key=sort_key(ALT))
    last = Word(w.alphabet, tuple(row.ranks[-1] for row in rows))
    return last, rows.index(w)
