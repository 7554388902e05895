"""Groebner-Shirshov basis engine with exact arithmetic.

Supports four settings over one exact coefficient field: free words,
commutative monomials, normal words of a tensor product of two free
algebras, and mixed commutative-by-free monomials.  Completion,
minimalization, irreducible-monomial enumeration, the word problem, the
two lifting constructions between the settings, and an independent
linear-algebra membership oracle all share the same immutable polynomial
core.
"""

from .errors import GsbError
from .fields import GF, QQ
from .kernels import BACKEND as KERNEL_BACKEND
from .monoids import (
    Alphabet,
    CommUniverse,
    FreeUniverse,
    MixedUniverse,
    TensorUniverse,
)
from .orders import default_order, make_order
from .poly import Context, Polynomial
from .rewrite import CompletionConfig, check, complete, irr, reduce, word_problem

__all__ = [
    "Alphabet",
    "CommUniverse",
    "CompletionConfig",
    "Context",
    "FreeUniverse",
    "GF",
    "GsbError",
    "KERNEL_BACKEND",
    "MixedUniverse",
    "Polynomial",
    "QQ",
    "TensorUniverse",
    "check",
    "complete",
    "default_order",
    "irr",
    "make_order",
    "reduce",
    "word_problem",
]

__version__ = "0.1.0"
