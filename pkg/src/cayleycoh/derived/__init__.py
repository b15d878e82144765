"""Formal complexes, Ext between them, mutations and collection checks."""
from .collection import (
    EXCEPTIONAL,
    NOT_EXCEPTIONAL,
    UNRESOLVED,
    Cell,
    ExtTable,
    check_exceptional_collection,
    determinant,
    euler_matrix,
    is_upper_unitriangular,
    lefschetz_validate,
)
from .chi import chi_report, same_kclass, sequence_consistent
from .complexes import FormalComplex, Origin, Term, cone, euler
from .ext import ExtEngine, complex_ext
from .mutations import (
    IndeterminateMutation,
    mutate_left,
    mutate_left_block,
    mutate_right,
    mutate_right_block,
)
from .presets import cg15, cg15_blocks, exact_sequences, preset
from .residual import ResidualReport, kclass_vector, residual_check, residual_objects

__all__ = [
    "EXCEPTIONAL",
    "NOT_EXCEPTIONAL",
    "UNRESOLVED",
    "Cell",
    "ExtTable",
    "check_exceptional_collection",
    "determinant",
    "euler_matrix",
    "is_upper_unitriangular",
    "lefschetz_validate",
    "ExtEngine",
    "ResidualReport",
    "chi_report",
    "exact_sequences",
    "kclass_vector",
    "residual_check",
    "residual_objects",
    "same_kclass",
    "sequence_consistent",
    "FormalComplex",
    "IndeterminateMutation",
    "Origin",
    "Term",
    "cg15",
    "cg15_blocks",
    "complex_ext",
    "cone",
    "euler",
    "mutate_left",
    "mutate_left_block",
    "mutate_right",
    "mutate_right_block",
    "preset",
]
