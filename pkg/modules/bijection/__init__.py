"""Constructive fold/unfold maps between board and bracelet tilings."""

from .models import CorrespondenceReport, FoldResult, LengthTally, UnfoldReport, Witness
from .service import (
    cut_and_pad,
    doubled_classes,
    fold_board,
    unfold_bracelet,
    unfold_bracelet_tagged,
    unfold_square_terminated,
    variant_targets,
    verify_correspondence,
    verify_unfold,
)

__all__ = [
    "CorrespondenceReport",
    "FoldResult",
    "LengthTally",
    "UnfoldReport",
    "Witness",
    "cut_and_pad",
    "doubled_classes",
    "fold_board",
    "unfold_bracelet",
    "unfold_bracelet_tagged",
    "unfold_square_terminated",
    "variant_targets",
    "verify_correspondence",
    "verify_unfold",
]
