"""Strong non-overlapping string codes and the variable-dimension matrix
families built from them."""

from .construction import (
    FamilyError,
    FamilyParams,
    MatrixFamily,
    RowSelection,
    build_family,
    cardinality,
    check_vertical_hazards,
    default_selection,
    iter_family,
    verify_strong_non_overlap,
)
from .gray import build_gm, build_gn, gn_recursive, gray_from_code, verify_gray
from .matrices import (
    BlockPartition,
    Matrix,
    are_strong_non_overlapping_matrices,
    frame_of_block,
    is_self_overlapping,
    overlap_by_partition,
    overlap_by_translation,
    validate_matrix_set,
)
from .report import Report, Violation
from .words import (
    VariableLengthCode,
    WordCode,
    are_cross_bifix_free,
    are_strong_non_overlapping,
    is_bifix_free,
    is_inner_or_factor,
    search_word_codes,
    validate_variable_length_code,
    validate_word_code,
)

__version__ = "0.1.0"
