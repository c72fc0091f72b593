# coding=utf-8

"""Checks of known relations between the ranks, used as test oracles."""

from dataclasses import dataclass, field
from typing import Dict, Optional

from tractrank.exceptions import UnsupportedTract
from tractrank.linalg.matrix import TractMatrix
from tractrank.ranks.column import r_col, r_row
from tractrank.ranks.determinantal import r_det
from tractrank.ranks.matroidal import r_mat, r_mat_finite
from tractrank.ranks.report import RankResult, Value
from tractrank.tracts import FieldTract, Tropical


@dataclass(frozen=True)
class PropertyCheck:
    """Whether a relation holds, with the values it was checked on."""

    holds: bool
    values: Dict[str, Value] = field(default_factory=dict, hash=False)

    def __bool__(self) -> bool:
        return self.holds


def dress_wenzel_holds(matrix: TractMatrix, mode: Optional[str] = None) -> PropertyCheck:
    """The matroidal rank is at least the determinantal rank.

    With an interval for the matroidal rank only an upper end below the
    determinantal rank is a counterexample.
    """
    mat = r_mat(matrix, mode)
    det = r_det(matrix)
    return PropertyCheck(mat.upper >= det.value, {"mat": mat.value, "det": det.value})


def izhakian_rowen_holds(matrix: TractMatrix) -> PropertyCheck:
    """Over the tropical hyperfield the determinantal, column and row ranks agree."""
    if not isinstance(matrix.tract, Tropical):
        raise UnsupportedTract(f"Tropical relation checked over {matrix.tract.tag}.")
    values = {
        "det": r_det(matrix).value,
        "col": r_col(matrix).value,
        "row": r_row(matrix).value,
    }
    return PropertyCheck(len(set(values.values())) == 1, values)


def _field_mat(matrix: TractMatrix) -> RankResult:
    # Finite fields go through the signature search, independent of elimination.
    return r_mat_finite(matrix) if matrix.tract.finite else r_mat(matrix)


def field_equality_holds(matrix: TractMatrix) -> PropertyCheck:
    """Over a field the row, column, matroidal and transpose matroidal ranks agree."""
    if not isinstance(matrix.tract, FieldTract):
        raise UnsupportedTract(f"Field relation checked over {matrix.tract.tag}.")
    values = {
        "row": r_row(matrix).value,
        "col": r_col(matrix).value,
        "mat": _field_mat(matrix).value,
        "tmat": _field_mat(matrix.transpose()).value,
    }
    return PropertyCheck(len(set(values.values())) == 1, values)
