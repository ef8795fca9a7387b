"""Homological invariants of Nakayama algebras from their Kupisch series."""

from .algebra import CYCLIC, LINEAR, Algebra, enumerate_algebras, opposite, parse, serialize, validate
from .errors import ContradictionReport
from .serial import INF, Module

__all__ = [
    "CYCLIC",
    "LINEAR",
    "INF",
    "Algebra",
    "ContradictionReport",
    "Module",
    "enumerate_algebras",
    "opposite",
    "parse",
    "serialize",
    "validate",
]
