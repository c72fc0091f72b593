# coding=utf-8

"""Application constants."""


INFINITE = "infinite"

SETTING_TRACTRANK_GUARDS = "TRACTRANK_GUARDS"
DEFAULT_TRACTRANK_GUARDS = {}

SETTING_TRACTRANK_SEED = "TRACTRANK_SEED"
DEFAULT_TRACTRANK_SEED = 0

SETTING_TRACTRANK_MATROIDAL_MODE = "TRACTRANK_MATROIDAL_MODE"
DEFAULT_TRACTRANK_MATROIDAL_MODE = "bounds"

ENV_TRACTRANK_GUARDS = "TRACTRANK_GUARDS"

MODE_EXACT = "exact"
MODE_BOUNDS = "bounds"
MODES = (MODE_EXACT, MODE_BOUNDS)

GUARD_DETERMINANT_SIZE = "determinant_size"
GUARD_DET_RANK_SIZE = "det_rank_size"
GUARD_ENUMERATION_SIZE = "enumeration_size"
GUARD_SIGN_MATROID_COLUMNS = "sign_matroid_columns"
GUARD_SIGN_MATROID_ROWS = "sign_matroid_rows"
GUARD_PHI_FIELD_ORDER = "phi_field_order"
GUARD_PHI_COLUMNS = "phi_columns"
GUARD_PHI_RANK = "phi_rank"
GUARD_HOMOGENEOUS_COLUMNS = "homogeneous_columns"
GUARD_PERMUTATION_SIZE = "permutation_size"
GUARD_MINIMAL_SUPPORT_COLUMNS = "minimal_support_columns"
GUARD_COVECTOR_ENUMERATION = "covector_enumeration"
GUARD_LIFT_COUNT = "lift_count"
GUARD_EPIC_RETRIES = "epic_retries"
GUARD_PHASE_SEARCH_SIZE = "phase_search_size"

DEFAULT_GUARDS = {
    GUARD_DETERMINANT_SIZE: 8,
    GUARD_DET_RANK_SIZE: 7,
    GUARD_ENUMERATION_SIZE: 7,
    GUARD_SIGN_MATROID_COLUMNS: 5,
    GUARD_SIGN_MATROID_ROWS: 6,
    GUARD_PHI_FIELD_ORDER: 5,
    GUARD_PHI_COLUMNS: 8,
    GUARD_PHI_RANK: 5,
    GUARD_HOMOGENEOUS_COLUMNS: 8,
    GUARD_PERMUTATION_SIZE: 7,
    GUARD_MINIMAL_SUPPORT_COLUMNS: 12,
    GUARD_COVECTOR_ENUMERATION: 10,
    GUARD_LIFT_COUNT: 200000,
    GUARD_EPIC_RETRIES: 12,
    GUARD_PHASE_SEARCH_SIZE: 4,
}

RANK_COL = "col"
RANK_ROW = "row"
RANK_DET = "det"
RANK_TRI = "tri"
RANK_MAT = "mat"
RANK_TMAT = "tmat"
RANK_PHI_MAT = "phimat"
RANK_PREIMAGE = "preimage"
RANK_NAMES = (
    RANK_COL,
    RANK_ROW,
    RANK_DET,
    RANK_TRI,
    RANK_MAT,
    RANK_TMAT,
    RANK_PHI_MAT,
    RANK_PREIMAGE,
)

KIND_ZERO = "zero"
KIND_SIGN = "sign"
KIND_SIGN_ALTERNATING = "sign-alt"
KIND_EPIC = "epic"
REALIZATION_KINDS = (KIND_ZERO, KIND_SIGN, KIND_SIGN_ALTERNATING, KIND_EPIC)
