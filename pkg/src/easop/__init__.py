"""Extended associative semigroups, their linear versions, and the associated operads."""

from .eas import FiniteEAS, check_eas, classify
from .exactlin import FormalSum, IntPolynomial, RationalMatrix, TruncatedSeries
from .freealg import FreePhiAlgebra, TypedWord, check_phi_associativity, star
from .leas import LinearEAS, check_leas, dualize, invert_leas, linearize

__all__ = ["FiniteEAS", "check_eas", "classify", "FormalSum", "IntPolynomial", "RationalMatrix",
           "TruncatedSeries", "FreePhiAlgebra", "TypedWord", "check_phi_associativity", "star",
           "LinearEAS", "check_leas", "dualize", "invert_leas", "linearize"]
