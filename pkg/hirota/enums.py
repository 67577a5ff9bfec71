"""Enums for the hirota package."""

from enum import Enum, auto


class ArithOp(Enum):
    """Ring operations accepted by :func:`hirota.exactpoly.arith`."""
    ADD = auto()
    SUB = auto()
    MUL = auto()


class OutputFormat(Enum):
    """Rendering formats for the command line."""
    TEXT = 'text'
    JSON = 'json'
    LATEX = 'latex'


class Verdict(Enum):
    """Outcome of classifying a spatial degree."""
    EXISTS = 'exists'
    NOT_EXISTS = 'not_exists'


class ResidueClass(Enum):
    """Residue of the spatial degree m modulo 3."""
    ZERO = 0
    ONE = 1
    TWO = 2

    @classmethod
    def of(cls, m: int) -> 'ResidueClass':
        return cls(m % 3)
