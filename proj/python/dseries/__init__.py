"""Discrete series combinatorics for equal-rank real forms (exact arithmetic).

Weights go in as sequences of ints, strings ("-1/2") or fractions.Fraction and
come back as tuples of Fraction.
"""

from ._dseries import DseriesError, RealForm, cartan_matrix, run, validate_grading

__all__ = ["DseriesError", "RealForm", "cartan_matrix", "run", "validate_grading"]
