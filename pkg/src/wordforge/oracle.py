"""Deliberately naive reference implementations.

Everything here favours being obviously correct over being fast; the fast
paths elsewhere are certified against these in the test suite.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator

from .errors import CapExceededError, NotPrimitiveError, PreconditionError
from .orders import Comparison, OrderSpec, cmp
from .words import (
    Alphabet,
    Word,
    is_primitive,
    rotations,
    star_path,
    substring_conjugates,
)

DEFAULT_ENUM_CAP = 18


def enumerate_words(
    alphabet: Alphabet, max_len: int, *, cap: int = DEFAULT_ENUM_CAP
) -> Iterator[Word]:
    """All words of length 1..max_len in length order, lexicographic within
    each length."""
    if max_len > cap:
        raise CapExceededError(f"max_len {max_len} exceeds enumeration cap {cap}")
    size = len(alphabet)
    for n in range(1, max_len + 1):
        for ranks in product(range(size), repeat=n):
            yield Word(alphabet, ranks)


def proper_subsequences(w: Word) -> Iterator[Word]:
    """Every proper subsequence of ``w`` (including the empty word), each
    distinct index subset once."""
    n = len(w)
    for mask in range(2**n - 1):
        yield Word(w.alphabet, tuple(w.ranks[i] for i in range(n) if mask >> i & 1))


_STAR_LEVELS: dict[Word, dict[int, tuple[int, ...]]] = {}


def _star_levels(w: Word) -> dict[int, tuple[int, ...]]:
    levels = _STAR_LEVELS.get(w)
    if levels is None:
        levels = {len(v): v.ranks for v in star_path(w)}
        _STAR_LEVELS[w] = levels
    return levels


def star_tree_cmp(x: Word, y: Word) -> Comparison:
    """Literal star-tree comparison.

    A word precedes everything on its own deletion path; otherwise the two
    deletion paths are followed down to the last level where they still
    differ, and the rightmost differing symbol there decides.
    """
    if x == y:
        return Comparison.EQUAL
    px = _star_levels(x)
    py = _star_levels(y)
    shorter = min(len(x), len(y))
    if px.get(shorter) == py.get(shorter):
        # One word lies on the other's deletion path.
        return Comparison.LESS if len(x) < len(y) else Comparison.GREATER
    meet = shorter
    while px[meet] != py[meet]:
        meet -= 1
    s = px[meet + 1]
    t = py[meet + 1]
    j = max(i for i in range(len(s)) if s[i] != t[i])
    return Comparison.LESS if s[j] < t[j] else Comparison.GREATER


def min_rotation_oracle(order: OrderSpec, w: Word) -> Word:
    """Minimal rotation by scanning the whole conjugacy class."""
    if not is_primitive(w):
        raise NotPrimitiveError("rotation minima are only unique for primitive words")
    best = w
    for r in rotations(w)[1:]:
        if cmp(order, r, best) is Comparison.LESS:
            best = r
    return best


def min_substring_rotation_oracle(inner: OrderSpec, w: Word) -> Word:
    """Minimal unit rotation under lexicographic extension, by full scan.

    The word must begin with its maximal letter.
    """
    if not is_primitive(w):
        raise NotPrimitiveError("rotation minima are only unique for primitive words")
    order = OrderSpec("lexext", inner)
    best = None
    for r in substring_conjugates(w):
        if best is None or cmp(order, r, best) is Comparison.LESS:
            best = r
    assert best is not None
    return best


def all_factorizations(family, w: Word) -> list[tuple[Word, ...]]:
    """Every way of writing ``w`` as a concatenation of family members, by
    depth-first splitting."""
    if w.alphabet != family.alphabet:
        raise PreconditionError("word and family alphabets differ")
    n = len(w)
    out: list[tuple[Word, ...]] = []
    stack: list[Word] = []

    def walk(pos: int) -> None:
        if pos == n:
            out.append(tuple(stack))
            return
        for end in range(pos + 1, n + 1):
            piece = w[pos:end]
            if family.contains(piece):
                stack.append(piece)
                walk(end)
                stack.pop()

    walk(0)
    return out


def _extendible_spans(family, w: Word) -> set[tuple[int, int]]:
    """Spans [p, q) of ``w`` that are members and strictly contained in some
    other member span."""
    n = len(w)
    member = [[False] * (n + 1) for _ in range(n + 1)]
    for p in range(n):
        for q in range(p + 1, n + 1):
            member[p][q] = family.contains(w[p:q])
    extendible = set()
    for p in range(n):
        for q in range(p + 1, n + 1):
            if not member[p][q]:
                continue
            for pp in range(p + 1):
                for qq in range(q, n + 1):
                    if (pp, qq) != (p, q) and member[pp][qq]:
                        extendible.add((p, q))
                        break
                else:
                    continue
                break
    return extendible


def unique_maximal_check(family, w: Word):
    """Decide whether exactly one factorization of ``w`` has every factor
    non-extendible inside ``w``.

    Returns ``(unique, survivors)`` where survivors is the list of
    factorizations that pass the non-extendibility filter.
    """
    extendible = _extendible_spans(family, w)
    survivors = []
    for factors in all_factorizations(family, w):
        pos = 0
        ok = True
        for f in factors:
            span = (pos, pos + len(f))
            pos += len(f)
            if span in extendible:
                ok = False
                break
        if ok:
            survivors.append(factors)
    return len(survivors) == 1, survivors
