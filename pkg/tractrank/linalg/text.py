# coding=utf-8

"""Text format of matrices.

Line 1 holds the tract tag, line 2 the dimensions `m n`, then come `m` rows
of `n` whitespace separated element literals. Blank lines and lines starting
with `#` are ignored.
"""

from pathlib import Path
from typing import Union

from tractrank.exceptions import ParseError, TractRankError
from tractrank.linalg.matrix import TractMatrix
from tractrank.tracts import tract_from_tag


def _content_lines(text: str):
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield number, stripped


def read_matrix(text: str) -> TractMatrix:
    """Parse a matrix from its text format.

    :param text: The file contents.
    :return: The matrix.
    :raises ParseError: With the 1-based line number of the offending line.
    """
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("Missing tract tag.", 1)
    number, tag = lines[0]
    try:
        tract = tract_from_tag(tag)
    except TractRankError as error:
        raise ParseError(str(error), number) from error
    if len(lines) < 2:
        raise ParseError("Missing dimensions.", number + 1)
    number, dimensions = lines[1]
    parts = dimensions.split()
    if len(parts) != 2 or not all(part.isdigit() for part in parts):
        raise ParseError(f"Expected 'm n', got '{dimensions}'.", number)
    m, n = int(parts[0]), int(parts[1])
    if m <= 0 or n <= 0:
        raise ParseError("Dimensions must be positive.", number)
    body = lines[2:]
    if len(body) != m:
        last = body[-1][0] if body else number
        raise ParseError(f"Expected {m} rows, found {len(body)}.", last)
    rows = []
    for number, line in body:
        literals = line.split()
        if len(literals) != n:
            raise ParseError(f"Expected {n} entries, found {len(literals)}.", number)
        try:
            rows.append([tract.parse(literal) for literal in literals])
        except ParseError as error:
            raise ParseError(str(error), number) from error
    return TractMatrix.of(tract, rows)


def write_matrix(matrix: TractMatrix) -> str:
    """Render a matrix in the text format read by `read_matrix`."""
    lines = [matrix.tract.tag, f"{matrix.m} {matrix.n}"]
    lines.extend(
        " ".join(matrix.tract.format(entry) for entry in row) for row in matrix.rows
    )
    return "\n".join(lines) + "\n"


def load_matrix(path: Union[str, Path]) -> TractMatrix:
    """Read a matrix file."""
    return read_matrix(Path(path).read_text(encoding="utf-8"))
