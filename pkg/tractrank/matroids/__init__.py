# coding=utf-8

"""Classical matroids."""

from tractrank.matroids.catalog import (
    SignedSubsetFamily,
    alternating_circuits,
    catalog,
    fano,
    fano_matrix,
    format_matroid,
    linear_matroid,
    parse_matroid,
    sparse_paving,
    uniform,
    vamos,
)
from tractrank.matroids.enumeration import enumerate_matroids, extensions
from tractrank.matroids.matroid import Matroid, check_axioms

__all__ = [
    "Matroid",
    "SignedSubsetFamily",
    "alternating_circuits",
    "catalog",
    "check_axioms",
    "enumerate_matroids",
    "extensions",
    "fano",
    "fano_matrix",
    "format_matroid",
    "linear_matroid",
    "parse_matroid",
    "sparse_paving",
    "uniform",
    "vamos",
]
