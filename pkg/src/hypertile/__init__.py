"""Exact-arithmetic verification of 4D step-pyramid block tilings and the
taxicab-distance q-series identities they carry."""

from .blocks import (
    BLOCK_KINDS,
    block,
    canonical_translation,
    indicator_axis,
    named_set,
    partition_sets,
    subcomponents,
)
from .isometry import CATALOG_IDS, Isometry, named_map, parse_map
from .lattice import CubeSet, Region, region_r3, set_relate
from .powersums import sigma, verify_base, verify_beardon
from .qseries import (
    IDENTITY_IDS,
    LaurentPoly,
    WeightSpec,
    eval_at_one,
    gf,
    lemma_3_4,
    q_binomial,
    q_factorial,
    q_int,
    verify_identity,
)
from .report import Report
from .tiling import (
    Condition,
    FittingReport,
    benjamin_orrison,
    classify_condition,
    first_fitting,
    one_block_assembly,
    second_fitting,
    verify_block_equivalence,
)

__version__ = "0.1.0"

__all__ = [
    "BLOCK_KINDS",
    "CATALOG_IDS",
    "Condition",
    "CubeSet",
    "FittingReport",
    "IDENTITY_IDS",
    "Isometry",
    "LaurentPoly",
    "Region",
    "Report",
    "WeightSpec",
    "benjamin_orrison",
    "block",
    "canonical_translation",
    "classify_condition",
    "eval_at_one",
    "first_fitting",
    "gf",
    "indicator_axis",
    "lemma_3_4",
    "named_map",
    "named_set",
    "one_block_assembly",
    "parse_map",
    "partition_sets",
    "q_binomial",
    "q_factorial",
    "q_int",
    "region_r3",
    "second_fitting",
    "set_relate",
    "sigma",
    "subcomponents",
    "verify_base",
    "verify_beardon",
    "verify_block_equivalence",
    "verify_identity",
]
