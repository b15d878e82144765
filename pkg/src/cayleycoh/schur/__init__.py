"""Littlewood-Richardson calculus on Schur bundles and their characters."""
from .bundles import BundleSum, SchurBundle, as_sum, dualize, tensor_atoms, twist
from .character import Character, character, schur_polynomial
from .expr import ComplexExpressionError, ExpressionError, expand, to_text
from .lr import KERNEL, lr_tensor

__all__ = [
    "BundleSum",
    "Character",
    "ComplexExpressionError",
    "ExpressionError",
    "KERNEL",
    "SchurBundle",
    "as_sum",
    "character",
    "dualize",
    "expand",
    "lr_tensor",
    "schur_polynomial",
    "tensor_atoms",
    "to_text",
    "twist",
]
