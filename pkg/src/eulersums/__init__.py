"""Exact word algebra, identity generation, ball-arithmetic evaluation and
motivic D_1 checks for alternating double zeta values."""

from .identities import (
    Identity,
    Monomial,
    assemble_theorem1,
    depth1_reduction,
    descent_even,
    dihedral,
    goal_regularization,
    pushdown_39,
    theorem1,
)
from .lincomb import LinComb
from .words import (
    GeneralWord,
    IndexVector,
    index_to_word,
    is_convergent,
    shuffle,
    shuffle_regularize,
    word_to_index,
)

__all__ = [
    "GeneralWord",
    "Identity",
    "IndexVector",
    "LinComb",
    "Monomial",
    "assemble_theorem1",
    "depth1_reduction",
    "descent_even",
    "dihedral",
    "goal_regularization",
    "index_to_word",
    "is_convergent",
    "pushdown_39",
    "shuffle",
    "shuffle_regularize",
    "theorem1",
    "word_to_index",
]

__version__ = "0.1.0"
