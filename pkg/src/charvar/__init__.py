"""Trace-coordinate toolkit for the rank-2 SL(3,C) character variety.

Exact rational arithmetic in the nine trace coordinates modulo the
defining sextic relation, the boundary Poisson structures of the
three-holed sphere and one-holed torus, the dihedral outer-automorphism
action, and a Monte-Carlo matrix oracle that certifies every table the
package ships.
"""

from .polyring import (
    ALL_COORDINATES,
    BASE_COORDINATES,
    BasePolynomial,
    FreePolynomial,
    NormalForm,
    free_t,
    t,
)
from .relations import big_P, big_Q, defining_relation, little_p, little_q
from .words import Irreducible, Word, cyclic_reduce, free_reduce, invert, parse_word, trace_of
from .numeric import RepresentationSample, ToleranceConfig, VerificationReport, sample_sl3
from .symmetry import DihedralElement, GroupRingOperator, apply_dihedral, apply_nielsen, compose, element, nielsen
from .poisson import BracketTable, SurfaceStructure, bracket, bracket_table, casimirs, jacobiator
from .surfaces import SurfaceTopology, boundary_words, dim_character_variety, euler_char, generic_leaf_dimension, rank

__version__ = "0.1.0"

__all__ = [
    "ALL_COORDINATES",
    "BASE_COORDINATES",
    "BasePolynomial",
    "BracketTable",
    "DihedralElement",
    "FreePolynomial",
    "GroupRingOperator",
    "Irreducible",
    "NormalForm",
    "RepresentationSample",
    "SurfaceStructure",
    "SurfaceTopology",
    "ToleranceConfig",
    "VerificationReport",
    "Word",
    "apply_dihedral",
    "apply_nielsen",
    "big_P",
    "big_Q",
    "boundary_words",
    "bracket",
    "bracket_table",
    "casimirs",
    "compose",
    "cyclic_reduce",
    "defining_relation",
    "dim_character_variety",
    "element",
    "euler_char",
    "free_reduce",
    "free_t",
    "generic_leaf_dimension",
    "invert",
    "jacobiator",
    "little_p",
    "little_q",
    "nielsen",
    "parse_word",
    "rank",
    "sample_sl3",
    "t",
    "trace_of",
    "__version__",
]
