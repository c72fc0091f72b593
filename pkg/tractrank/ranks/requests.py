# coding=utf-8

"""Rank requests by name, as written on the command line.

Names are `col`, `row`, `det`, `tri`, `mat`, `tmat`, and `phimat:<source>`
or `preimage:<source>` where `<source>` is a tract tag accepted by
`tracts.hom_to`, such as `fp2` or `rational`.
"""

import logging
from typing import List, Optional

from tractrank import constants
from tractrank.exceptions import ParseError
from tractrank.linalg.matrix import TractMatrix
from tractrank.ranks.column import r_col, r_row
from tractrank.ranks.determinantal import r_det, r_tri
from tractrank.ranks.matroidal import r_mat, r_tmat
from tractrank.ranks.phi import r_phi_mat
from tractrank.ranks.relative import r_preimage
from tractrank.ranks.report import RankReport, RankResult, base_name
from tractrank.tracts import hom_to

logger = logging.getLogger(__name__)

RELATIVE = (constants.RANK_PHI_MAT, constants.RANK_PREIMAGE)


def parse_rank_names(text: str) -> List[str]:
    """Split and check a comma separated list of rank names."""
    names = [name.strip() for name in text.split(",") if name.strip()]
    if not names:
        raise ParseError("No rank requested.")
    for name in names:
        base = base_name(name)
        if base not in constants.RANK_NAMES:
            raise ParseError(f"Unknown rank '{name}', expected one of {constants.RANK_NAMES}.")
        if (base in RELATIVE) != (":" in name):
            raise ParseError(f"Rank '{name}' needs a source only for {RELATIVE}.")
    return names


def compute_rank(
    name: str, matrix: TractMatrix, mode: Optional[str] = None, seed: Optional[int] = None
) -> RankResult:
    """Compute one named rank."""
    base = base_name(name)
    if base in RELATIVE:
        hom = hom_to(name.split(":", 1)[1], matrix.tract)
        if base == constants.RANK_PHI_MAT:
            return r_phi_mat(hom, matrix)
        return r_preimage(hom, matrix, seed=seed, mode=mode)
    if base in (constants.RANK_MAT, constants.RANK_TMAT):
        function = r_mat if base == constants.RANK_MAT else r_tmat
        return function(matrix, mode)
    functions = {
        constants.RANK_COL: r_col,
        constants.RANK_ROW: r_row,
        constants.RANK_DET: r_det,
        constants.RANK_TRI: r_tri,
    }
    return functions[base](matrix)


def rank_report(
    matrix: TractMatrix,
    names: List[str],
    mode: Optional[str] = None,
    seed: Optional[int] = None,
) -> RankReport:
    """Compute the requested ranks and check the rank chain."""
    results = []
    for name in names:
        result = compute_rank(name, matrix, mode, seed)
        logger.info("%s = %s", name, result.value)
        results.append(result)
    report = RankReport.from_results(names, results)
    if not report.chain_ok:
        logger.warning("The computed ranks violate the rank chain: %s", report.values)
    return report
