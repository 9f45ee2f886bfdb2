"""Exact combinatorics of the signed boustrophedon triangle: refined
counting families of signed permutations, their tree bijections, and an
exhaustive verification harness."""

from .families import (
    FAMILIES,
    FlipClass,
    IllegalFlipError,
    IndexOutOfRangeError,
    RankOutOfRangeError,
    SizeCapExceededError,
    enumerate_family,
    enumerate_indexed,
    flip,
    flip_classes,
    rank,
    recurrence_step_cud,
    recurrence_step_vs,
    unrank,
)
from .harness import CheckResult, UnknownCheckError, check_ids, verify, verify_all
from .laurent import LaurentPoly
from .signed_perm import (
    Cycle,
    CycleForm,
    SignedPerm,
    cycle_form,
    from_window,
    is_special,
    left_to_right_minima,
    peaks,
    stat_neg,
    stat_npk,
    stat_report,
    stat_smax,
    stat_spk,
    valleys,
    window_of,
)
from .triangles import (
    ArnoldRow,
    arnold_hoffman,
    arnold_numbers,
    check_hoffman_identities,
    entringer,
    euler_numbers,
    hoffman_pq,
)
from .trees import EMPTY, Node, Tree12, classify, count_empty, gen_trees, tree12_of

__all__ = [
    "FAMILIES",
    "ArnoldRow",
    "CheckResult",
    "Cycle",
    "CycleForm",
    "EMPTY",
    "FlipClass",
    "IllegalFlipError",
    "IndexOutOfRangeError",
    "LaurentPoly",
    "Node",
    "RankOutOfRangeError",
    "SignedPerm",
    "SizeCapExceededError",
    "Tree12",
    "UnknownCheckError",
    "arnold_hoffman",
    "arnold_numbers",
    "check_hoffman_identities",
    "check_ids",
    "classify",
    "count_empty",
    "cycle_form",
    "entringer",
    "enumerate_family",
    "enumerate_indexed",
    "euler_numbers",
    "flip",
    "flip_classes",
    "from_window",
    "gen_trees",
    "hoffman_pq",
    "is_special",
    "left_to_right_minima",
    "peaks",
    "rank",
    "recurrence_step_cud",
    "recurrence_step_vs",
    "stat_neg",
    "stat_npk",
    "stat_report",
    "stat_smax",
    "stat_spk",
    "tree12_of",
    "unrank",
    "valleys",
    "verify",
    "verify_all",
    "window_of",
]
