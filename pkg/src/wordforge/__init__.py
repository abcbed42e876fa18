"""wordforge: total orders on words, canonical rotations, factorization
families, and the transforms built on them."""

from .builder import BuildRecord, BuildResult, build_circ_umff, sigma_star_words
from .canonical import (
    ClassReport,
    Factorization,
    ab_block_factorization,
    classify,
    concat_is_galois,
    core_word,
    duval_factorization,
    extend_to_lyndon,
    extend_to_v_word,
    galois_rotation,
    is_border_free_galois,
    is_border_free_galois_structural,
    is_galois,
    is_lyndon,
    is_t_word,
    is_v_word,
    is_v_word_by_core,
    t_word_of_class,
    v_factorization,
    v_word_from_lyndon,
)
from .errors import (
    AlphabetError,
    BuildError,
    CapExceededError,
    EmptyWordError,
    FamilyError,
    NonPrimitiveConcatError,
    NotFFError,
    NotGaloisError,
    NotPrimitiveError,
    NotUMFFError,
    PreconditionError,
    SentinelError,
    WordforgeError,
)
from .families import (
    BUILTIN_FAMILIES,
    ConcatOrder,
    FactorFamily,
    FamilyVerdict,
    Misalignment,
    alignment_check,
    circ_umff_verify,
    colyndon_family,
    concat_order,
    dump_family,
    galois_bf_family,
    galois_family,
    load_family,
    lyndon_family,
    maximal_factorization,
    minimal_rotation_family,
    parse_family,
    substring_circ_umff_verify,
    vword_family,
    xyz_check,
    xyz_closure,
)
from .oracle import (
    all_factorizations,
    enumerate_words,
    min_rotation_oracle,
    min_substring_rotation_oracle,
    proper_subsequences,
    star_tree_cmp,
    unique_maximal_check,
)
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
    cmp_alt,
    cmp_colex,
    cmp_lex,
    cmp_lexext,
    cmp_modalt,
    cmp_relex,
    cmp_unit_sequences,
    cmp_v,
    lexext,
    sort_key,
)
from .transforms import abwt, bwt, bwt_inverse, strip_sentinel, with_sentinel
from .words import (
    Alphabet,
    VForm,
    Word,
    borders,
    conjugate_key,
    is_border_free,
    is_primitive,
    period,
    rotation,
    rotations,
    star_delete,
    star_delete_position,
    star_path,
    substring_conjugates,
    v_form,
    vform_units,
)

__version__ = "0.1.0"
