"""Cyclic words in a free product of two finite groups: unique position, two-length and C(6) certification."""

__version__ = "0.1.0"

from .groups import GroupError, GroupTable, Letter, build_group, cyclic, dihedral, elementary_abelian_2
from .words import FreeProduct, ProperPowerError, WordError, is_proper_power
from .position import count_occurrences, find_up_decomposition, is_uniquely_positioned
from .classify import (
    TheoremViolation,
    classify,
    is_exceptional,
    lemma_up_criterion,
    marker_decomposition,
    two_length,
)
from .cancellation import PieceQuery, c6_status, min_zone_tiling
from .enumerate import EnumSpec, counterexample_family, run_verification

__all__ = [
    "EnumSpec",
    "FreeProduct",
    "GroupError",
    "GroupTable",
    "Letter",
    "PieceQuery",
    "ProperPowerError",
    "TheoremViolation",
    "WordError",
    "build_group",
    "c6_status",
    "classify",
    "count_occurrences",
    "counterexample_family",
    "cyclic",
    "dihedral",
    "elementary_abelian_2",
    "find_up_decomposition",
    "is_exceptional",
    "is_proper_power",
    "is_uniquely_positioned",
    "lemma_up_criterion",
    "marker_decomposition",
    "min_zone_tiling",
    "run_verification",
    "two_length",
]
