"""Computations with finitely generated commutative binoids."""

from .presentation import (
    Presentation,
    Relation,
    bipointed_union,
    classify_relation,
    free,
    make_presentation,
    product,
    rees_quotient,
    smash,
)
from .words import Word

__all__ = [
    "Presentation",
    "Relation",
    "Word",
    "bipointed_union",
    "classify_relation",
    "free",
    "make_presentation",
    "product",
    "rees_quotient",
    "smash",
]
