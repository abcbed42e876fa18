"""Word classes, canonical rotations, and the factorizations built on them.

Covers Lyndon words, the star-deletion analogue (words minimal in vorder over
their conjugacy class), Galois words (minimal in alternating lexorder), the
generic minimal-rotation notion for any total order, and the constructions
that move between these classes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    AlphabetError,
    NonPrimitiveConcatError,
    NotGaloisError,
    NotPrimitiveError,
    PreconditionError,
    WordforgeError,
)
from .orders import ALT, MODALT, VORDER, Comparison, OrderSpec, cmp, cmp_unit_sequences
from .words import (
    Word,
    is_border_free,
    is_primitive,
    require_nonempty,
    rotation,
    rotations,
    substring_conjugates,
    v_form,
)


class WordClassInconsistency(WordforgeError):
    """Two independent membership routes disagreed; one of them is wrong."""


@dataclass(frozen=True)
class Factorization:
    """An ordered list of factors whose concatenation is the source word."""

    factors: tuple[Word, ...]
    kind: str

    def word(self) -> Word:
        out = self.factors[0]
        for f in self.factors[1:]:
            out = out + f
        return out

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __str__(self) -> str:
        return "".join(f"({f})" for f in self.factors)


def is_lyndon(w: Word) -> bool:
    """True iff ``w`` is primitive and strictly least among its rotations."""
    require_nonempty(w, "is_lyndon")
    r = w.ranks
    doubled = r + r
    n = len(r)
    return all(r < doubled[i : i + n] for i in range(1, n))


def duval_factorization(w: Word) -> Factorization:
    """Unique factorization into a non-increasing product of Lyndon words."""
    require_nonempty(w, "duval_factorization")
    r = w.ranks
    n = len(r)
    factors = []
    i = 0
    while i < n:
        j = i + 1
        k = i
        while j < n and r[k] <= r[j]:
            k = i if r[k] < r[j] else k + 1
            j += 1
        while i <= k:
            factors.append(w[i : i + j - k])
            i += j - k
    return Factorization(tuple(factors), "lyndon")


def t_word_of_class(order: OrderSpec, w: Word) -> Word:
    """The rotation of ``w`` minimal under ``order``.

    For ``lexext`` orders the minimum is taken over unit rotations of the
    conjugate starting at the maximal letter, since those are the rotations
    the unit comparison is defined on.
    """
    if not is_primitive(w):
        raise NotPrimitiveError("the minimum is only unique for primitive words")
    if order.kind == "lexext":
        start = w.ranks.index(max(w.ranks))
        candidates = substring_conjugates(rotation(w, start))
    else:
        candidates = rotations(w)
    best = candidates[0]
    for c in candidates[1:]:
        if cmp(order, c, best) is Comparison.LESS:
            best = c
    return best


def is_t_word(order: OrderSpec, w: Word) -> bool:
    """True iff ``w`` is primitive and is the minimal rotation of its own
    class under ``order``; non-primitive words simply return False."""
    require_nonempty(w, "is_t_word")
    if not is_primitive(w):
        return False
    if order.kind == "lexext" and len(v_form(w).parts[0]):
        return False
    return w == t_word_of_class(order, w)


def is_v_word(w: Word) -> bool:
    return is_t_word(VORDER, w)


def is_galois(w: Word) -> bool:
    return is_t_word(ALT, w)


def v_factorization(w: Word) -> Factorization:
    """Greedy factorization into non-extendible vorder-minimal words.

    The class of vorder-minimal rotations satisfies the xyz closure, so the
    longest-member-prefix greedy walk yields the unique maximal factorization.
    """
    require_nonempty(w, "v_factorization")
    factors = []
    i = 0
    n = len(w)
    while i < n:
        for j in range(n, i, -1):
            piece = w[i:j]
            if is_v_word(piece):
                factors.append(piece)
                i = j
                break
    return Factorization(tuple(factors), "vword")


def core_word(w: Word) -> Word:
    """For a word starting with its maximal letter whose gaps are single
    letters, the word formed by the gap letters."""
    vf = v_form(w)
    if len(vf.parts[0]):
        raise PreconditionError("word must start with its maximal letter")
    if any(len(p) != 1 for p in vf.parts[1:]):
        raise PreconditionError("every gap between maximal letters must be one letter")
    return Word(w.alphabet, tuple(p.ranks[0] for p in vf.parts[1:]))


def is_v_word_by_core(w: Word) -> bool:
    """Membership shortcut for single-letter-gap words: such a word is
    vorder-minimal in its class iff its core is a Lyndon word."""
    return is_lyndon(core_word(w))


def v_word_from_lyndon(core: Word, letter, repeat: int = 1) -> Word:
    """Interleave ``letter`` (strictly greater than every core symbol) with
    ``repeat`` copies of each core symbol; the result is vorder-minimal in
    its conjugacy class."""
    if not is_lyndon(core):
        raise PreconditionError("core must be a Lyndon word")
    if repeat < 1:
        raise PreconditionError("repeat must be positive")
    rank = core.alphabet.rank(letter)
    if rank <= max(core.ranks):
        raise PreconditionError("letter must exceed every symbol of the core")
    ranks: list[int] = []
    for r in core.ranks:
        ranks.append(rank)
        ranks.extend([r] * repeat)
    return Word(core.alphabet, tuple(ranks))


def extend_to_v_word(x: Word, k: int, letter=None) -> Word:
    """Prepend ``k`` copies of a letter strictly above max(x) to a Lyndon
    word; the result is vorder-minimal in its class.  When ``letter`` is not
    given, the smallest alphabet symbol above max(x) is used."""
    if not is_lyndon(x) or len(x) < 2:
        raise PreconditionError("input must be a Lyndon word of length at least 2")
    if k < 1:
        raise PreconditionError("k must be positive")
    top = max(x.ranks)
    if letter is None:
        if top + 1 >= x.alphabet.size:
            raise AlphabetError("no alphabet symbol above the maximal letter")
        rank = top + 1
    else:
        rank = x.alphabet.rank(letter)
        if rank <= top:
            raise PreconditionError("letter must exceed every symbol of the word")
    return Word(x.alphabet, (rank,) * k + x.ranks)


def extend_to_lyndon(x: Word, k: int) -> Word:
    """Prepend ``k`` copies of the least letter of a Lyndon word; the result
    is again a Lyndon word."""
    if not is_lyndon(x) or len(x) < 2:
        raise PreconditionError("input must be a Lyndon word of length at least 2")
    if k < 1:
        raise PreconditionError("k must be positive")
    return Word(x.alphabet, (min(x.ranks),) * k + x.ranks)


def galois_rotation(w: Word) -> tuple[int, Word]:
    """The unique rotation offset whose rotation is a Galois word, found by a
    quadratic minimal-rotation scan."""
    g = t_word_of_class(ALT, w)
    return rotations(w).index(g), g


def concat_is_galois(u: Word, v: Word) -> bool:
    """Whether the concatenation of two Galois words is again Galois.

    The concatenation of distinct Galois words can be a repetition, in which
    case no rotation is Galois and the question is rejected.
    """
    if not is_galois(u):
        raise NotGaloisError(f"{u!r} is not a Galois word")
    if not is_galois(v):
        raise NotGaloisError(f"{v!r} is not a Galois word")
    uv = u + v
    if not is_primitive(uv):
        raise NonPrimitiveConcatError("the concatenation is a repetition")
    return is_galois(uv)


def _require_binary_ab(w: Word) -> None:
    if w.alphabet.size != 2:
        raise PreconditionError("operation is defined over a two-letter alphabet")


def ab_block_factorization(w: Word) -> Factorization:
    """Cut a binary word starting with ``ab`` before every later occurrence
    of ``ab``; each factor has shape a b^e a^f and contains ``ab`` only as
    its prefix."""
    _require_binary_ab(w)
    if len(w) < 2 or w.ranks[:2] != (0, 1):
        raise PreconditionError("word must start with the low letter then the high letter")
    cuts = [0]
    for i in range(1, len(w) - 1):
        if w.ranks[i] == 0 and w.ranks[i + 1] == 1:
            cuts.append(i)
    cuts.append(len(w))
    factors = tuple(w[a:b] for a, b in zip(cuts, cuts[1:]))
    return Factorization(factors, "abgalois")


def is_border_free_galois_structural(w: Word) -> bool:
    """Structural test for binary border-free Galois words of length > 3,
    phrased on the ab-block sequence:

    * the word starts ``ab`` and ends ``bb`` (the shape every such word has);
    * the word is strictly below each rotation that starts at a block
      boundary, in alternating order.  Rotations starting inside a block
      begin ``aa`` or ``b`` and already lose to any ab-prefixed word at
      position one or two, so these t-1 comparisons cover the whole class;
    * no concatenation of trailing blocks is a prefix of the word.  Given
      the shape, any border would begin with ``ab``, hence start at a block
      boundary, hence be exactly such a trailing run (possibly ending inside
      the first block, as in ``abbbabb`` where the final block ``abb`` is a
      prefix of the initial block ``abbb``).

    Block-rotation minimality cannot be decided block-by-block with a local
    unit order: when one block is a proper prefix of another, the deciding
    symbol can sit arbitrarily deep in the following blocks (``abaababb``
    versus its rotation ``ababbaba``), so the restricted comparisons are made
    on the full strings.
    """
    _require_binary_ab(w)
    if len(w) <= 3:
        raise PreconditionError("structural route applies to words of length > 3")
    r = w.ranks
    if r[:2] != (0, 1) or r[-2:] != (1, 1):
        return False
    units = list(ab_block_factorization(w).factors)
    t = len(units)
    for i in range(1, t):
        rotated = units[i:] + units[:i]
        conjugate = rotated[0]
        for u in rotated[1:]:
            conjugate = conjugate + u
        if cmp(ALT, w, conjugate) is not Comparison.LESS:
            return False
    suffix_len = 0
    for block in reversed(units[1:]):
        suffix_len += len(block)
        if r[-suffix_len:] == r[:suffix_len]:
            return False
    return True


def is_border_free_galois(w: Word, *, cross_check: bool = True) -> bool:
    """True iff a binary word is Galois and border-free.

    For words longer than 3 the structural route is evaluated as well when
    ``cross_check`` is set, and a disagreement raises.
    """
    _require_binary_ab(w)
    require_nonempty(w, "is_border_free_galois")
    direct = is_galois(w) and is_border_free(w)
    if cross_check and len(w) > 3:
        structural = is_border_free_galois_structural(w)
        if structural != direct:
            raise WordClassInconsistency(
                f"direct ({direct}) and structural ({structural}) routes disagree on {w}"
            )
    return direct


@dataclass(frozen=True)
class ClassReport:
    """Per-order minimal rotations plus class flags for one primitive word."""

    word: Word
    primitive: bool
    lyndon: bool
    v_word: bool
    galois: bool
    border_free: bool
    minima: dict[str, int] = field(default_factory=dict)

    def minimum(self, order_name: str) -> Word:
        return rotations(self.word)[self.minima[order_name]]


def classify(w: Word, orders: list[OrderSpec]) -> ClassReport:
    """Minimal conjugate per order plus membership flags.

    Rotation indices refer to :func:`wordforge.words.rotations` offsets; for
    ``lexext`` orders the reported rotation is the minimal unit rotation.
    """
    if not is_primitive(w):
        raise NotPrimitiveError("class reports require a primitive word")
    rots = rotations(w)
    minima = {}
    for order in orders:
        best = t_word_of_class(order, w)
        minima[str(order)] = rots.index(best)
    return ClassReport(
        word=w,
        primitive=True,
        lyndon=is_lyndon(w),
        v_word=is_v_word(w),
        galois=is_galois(w),
        border_free=is_border_free(w),
        minima=minima,
    )
