"""Bases of free Lie superalgebras over the integers."""
from .core import (
    Alphabet,
    AssocPoly,
    CapacityError,
    DomainError,
    LieError,
    LiePoly,
    LieTerm,
    Parity,
    StructuralError,
)
from .hall import HallSet, SuperBasis, enum_basic, scheme_basis, super_basis
from .parse import ParseError, parse_alphabet, parse_expression, parse_word
from .reduce import normal_form

__version__ = "0.1.0"
