# coding=utf-8

"""Linear algebra over tracts."""

from tractrank.linalg.dependence import (
    find_dependence,
    is_independent,
    orthogonal,
    verify_dependence,
)
from tractrank.linalg.determinant import formal_determinant, is_singular
from tractrank.linalg.matrix import TractMatrix, TractVector
from tractrank.linalg.text import load_matrix, read_matrix, write_matrix

__all__ = [
    "TractMatrix",
    "TractVector",
    "find_dependence",
    "formal_determinant",
    "is_independent",
    "is_singular",
    "load_matrix",
    "orthogonal",
    "read_matrix",
    "verify_dependence",
    "write_matrix",
]
