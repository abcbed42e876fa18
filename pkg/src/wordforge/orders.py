"""Total orders on words behind one pluggable comparator contract.

Supported order kinds:

``lex``
    Dictionary order; a proper prefix precedes its extensions.
``colex``
    Lexorder of the reversed words.
``relex``
    Lexorder with the alphabet order reversed (prefixes still precede).
``alt``
    Alternating lexorder: at the first mismatch, positions with odd 1-based
    index compare with ``<`` and even positions with ``>``.  When one word is
    a proper prefix of the other, the shorter precedes iff its length is even.
``modalt``
    Modified alternating lexorder: identical to ``alt`` on mismatching pairs;
    on proper-prefix pairs the shorter word precedes iff some extension of it
    falls strictly below the longer word under ``alt`` without being
    prefix-comparable to it.  Equivalently, the shorter word wins unless the
    longer one continues with the unique alternating descent pattern
    (least symbol at odd positions, greatest at even positions).
``vorder``
    The star-deletion order, computed by the recursive maximal-letter
    decomposition: compare maximal letters, then their counts, then the first
    differing gap recursively.
``lexext:<inner>``
    Lexicographic extension: both words are cut into maximal-letter units
    (the leading gap, when non-empty, is its own unit) and the unit sequences
    are compared left to right under the inner order; a proper prefix of the
    unit sequence precedes.

The empty word is the unique minimum under every order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cmp_to_key
from typing import Callable, Sequence

from .errors import AlphabetError, EmptyWordError, WordforgeError
from .words import Word, vform_units


class Comparison(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def from_int(cls, value: int) -> Comparison:
        if value < 0:
            return cls.LESS
        if value > 0:
            return cls.GREATER
        return cls.EQUAL

    def flipped(self) -> Comparison:
        return Comparison.from_int(-self.value)


ORDER_KINDS = ("lex", "colex", "relex", "alt", "modalt", "vorder", "lexext")


@dataclass(frozen=True)
class OrderSpec:
    """A named total order; ``lexext`` carries the inner order for its units."""

    kind: str
    inner: OrderSpec | None = None

    def __post_init__(self) -> None:
        if self.kind not in ORDER_KINDS:
            raise WordforgeError(f"unknown order kind {self.kind!r}")
        if self.kind == "lexext":
            if self.inner is None:
                raise WordforgeError("lexext requires an inner order")
            if self.inner.kind == "lexext":
                raise WordforgeError("lexext cannot nest another lexext")
        elif self.inner is not None:
            raise WordforgeError(f"{self.kind} does not take an inner order")

    @classmethod
    def parse(cls, text: str) -> OrderSpec:
        """Parse an order name such as ``vorder`` or ``lexext:colex``."""
        name = text.strip()
        if name.startswith("lexext:"):
            return cls("lexext", cls.parse(name.split(":", 1)[1]))
        return cls(name)

    def __str__(self) -> str:
        if self.kind == "lexext":
            return f"lexext:{self.inner}"
        return self.kind


LEX = OrderSpec("lex")
COLEX = OrderSpec("colex")
RELEX = OrderSpec("relex")
ALT = OrderSpec("alt")
MODALT = OrderSpec("modalt")
VORDER = OrderSpec("vorder")


def lexext(inner: OrderSpec) -> OrderSpec:
    return OrderSpec("lexext", inner)


# Rank-tuple comparators.  All return -1 / 0 / 1.


def _cmp_lex(x: tuple[int, ...], y: tuple[int, ...]) -> int:
    if x == y:
        return 0
    return -1 if x < y else 1


def _cmp_colex(x: tuple[int, ...], y: tuple[int, ...]) -> int:
    return _cmp_lex(x[::-1], y[::-1])


def _cmp_relex(x: tuple[int, ...], y: tuple[int, ...]) -> int:
    for a, b in zip(x, y):
        if a != b:
            return -1 if a > b else 1
    if len(x) == len(y):
        return 0
    return -1 if len(x) < len(y) else 1


def _cmp_alt(x: tuple[int, ...], y: tuple[int, ...]) -> int:
    for i, (a, b) in enumerate(zip(x, y)):
        if a != b:
            if i % 2 == 0:  # 1-based position is odd
                return -1 if a < b else 1
            return -1 if a > b else 1
    if len(x) == len(y):
        return 0
    # Proper prefix: the shorter word precedes iff its length is even.
    shorter_first = min(len(x), len(y)) % 2 == 0
    if len(x) < len(y):
        return -1 if shorter_first else 1
    return 1 if shorter_first else -1


def _cmp_modalt(x: tuple[int, ...], y: tuple[int, ...], sigma: int) -> int:
    for i, (a, b) in enumerate(zip(x, y)):
        if a != b:
            if i % 2 == 0:
                return -1 if a < b else 1
            return -1 if a > b else 1
    if len(x) == len(y):
        return 0
    if not x or not y:
        return -1 if len(x) < len(y) else 1
    short, tail, sign = (x, y[len(x) :], -1) if len(x) < len(y) else (y, x[len(y) :], 1)
    # The shorter word precedes unless the extension follows the pure
    # alternating descent (rank 0 at odd 1-based positions, rank sigma-1 at
    # even positions), in which case no separating extension exists.
    base = len(short)
    for j, r in enumerate(tail):
        odd = (base + j) % 2 == 0  # 1-based global position base+j+1 is odd
        if odd and r > 0:
            return sign
        if not odd and r < sigma - 1:
            return sign
    return -sign


def _split_on(ranks: tuple[int, ...], g: int) -> list[tuple[int, ...]]:
    parts: list[tuple[int, ...]] = []
    current: list[int] = []
    for r in ranks:
        if r == g:
            parts.append(tuple(current))
            current = []
        else:
            current.append(r)
    parts.append(tuple(current))
    return parts


def _cmp_v(x: tuple[int, ...], y: tuple[int, ...]) -> int:
    if x == y:
        return 0
    if not x:
        return -1
    if not y:
        return 1
    gx = max(x)
    gy = max(y)
    if gx != gy:
        return -1 if gx < gy else 1
    cx = x.count(gx)
    cy = y.count(gy)
    if cx != cy:
        return -1 if cx < cy else 1
    for a, b in zip(_split_on(x, gx), _split_on(y, gy)):
        if a != b:
            return _cmp_v(a, b)
    return 0


def cmp_lex(x: Word, y: Word) -> Comparison:
    return Comparison.from_int(_cmp_lex(x.ranks, y.ranks))


def cmp_colex(x: Word, y: Word) -> Comparison:
    return Comparison.from_int(_cmp_colex(x.ranks, y.ranks))


def cmp_relex(x: Word, y: Word) -> Comparison:
    return Comparison.from_int(_cmp_relex(x.ranks, y.ranks))


def cmp_alt(x: Word, y: Word) -> Comparison:
    return Comparison.from_int(_cmp_alt(x.ranks, y.ranks))


def cmp_modalt(x: Word, y: Word) -> Comparison:
    if x.alphabet != y.alphabet:
        raise AlphabetError("modalt operands must share an alphabet")
    return Comparison.from_int(_cmp_modalt(x.ranks, y.ranks, x.alphabet.size))


def cmp_v(x: Word, y: Word) -> Comparison:
    return Comparison.from_int(_cmp_v(x.ranks, y.ranks))


def cmp_unit_sequences(
    inner: OrderSpec, xs: Sequence[Word], ys: Sequence[Word]
) -> Comparison:
    """Compare two factor sequences left to right under the inner order; a
    proper prefix of the factor sequence precedes."""
    for a, b in zip(xs, ys):
        verdict = cmp(inner, a, b)
        if verdict is not Comparison.EQUAL:
            return verdict
    return Comparison.from_int(len(xs) - len(ys))


def cmp_lexext(inner: OrderSpec, x: Word, y: Word) -> Comparison:
    """Lexicographic extension of the inner order over maximal-letter units."""
    if len(x) == 0 or len(y) == 0:
        raise EmptyWordError("lexext comparison requires non-empty words")
    if x == y:
        return Comparison.EQUAL
    return cmp_unit_sequences(inner, vform_units(x), vform_units(y))


def cmp(order: OrderSpec, x: Word, y: Word) -> Comparison:
    """Compare two words over the same alphabet under the given order."""
    if x.alphabet != y.alphabet:
        raise AlphabetError("cannot compare words over different alphabets")
    if x.ranks == y.ranks:
        return Comparison.EQUAL
    if len(x) == 0:
        return Comparison.LESS
    if len(y) == 0:
        return Comparison.GREATER
    kind = order.kind
    if kind == "lex":
        return cmp_lex(x, y)
    if kind == "colex":
        return cmp_colex(x, y)
    if kind == "relex":
        return cmp_relex(x, y)
    if kind == "alt":
        return cmp_alt(x, y)
    if kind == "modalt":
        return cmp_modalt(x, y)
    if kind == "vorder":
        return cmp_v(x, y)
    assert order.inner is not None
    return cmp_lexext(order.inner, x, y)


def sort_key(order: OrderSpec) -> Callable[[Word], object]:
    """A ``key=`` callable sorting words under the given order."""
    return cmp_to_key(lambda a, b: cmp(order, a, b).value)
