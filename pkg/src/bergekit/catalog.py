"""Named matrices used throughout the classification, with their anchors."""
from __future__ import annotations

from dataclasses import dataclass

from .matrix import BitMatrix, identity, product, triangular

# Row-major transcriptions of the displayed matrices.
_DISPLAYS = {
    "G1": ["11", "10", "01"],
    "G2": ["110", "101", "011"],
    "C4": ["1100", "0011", "1010", "0101"],
    "T2xT2": ["1111", "0011", "1111", "0101"],
    "H1": ["100", "110", "011", "001"],
    "H2": ["111", "100", "010", "001"],
    "H3": ["11", "11", "10", "01"],
    "H4": ["11100", "10011", "01010", "00101"],
    "H5": ["110", "111", "101", "011"],
    "H6": ["110", "110", "101", "011"],
    "H7": ["1100", "1010", "1001", "0111"],
    "H8": ["10", "10", "01", "01"],
    "H9": ["100", "100", "010", "010", "001", "001"],
    "H10": ["110", "100", "010", "001", "001"],
    "F7": ["110110", "101111", "010101", "001001", "000010"],
}

_ANCHORS = {
    "G1": "classifyk=3",
    "G2": "classifyk=3",
    "C4": "twoconfigs",
    "T2xT2": "twoconfigs",
    "H1": "classifyk=4",
    "H2": "classifyk=4",
    "H3": "classifyk=4",
    "H4": "classifyk=4",
    "H5": "classifyk=4",
    "H6": "classifyk=4",
    "H7": "classifyk=4",
    "H8": "H8 exact bound",
    "H9": "F7matrix",
    "H10": "F7matrix",
    "F7": "F7matrix",
}


@dataclass(frozen=True)
class NamedMatrix:
    name: str
    matrix: BitMatrix
    anchor: str


def named(name: str) -> BitMatrix:
    """Look up a displayed matrix by name (``G1``, ``H7``, ``F7`` ...)."""
    try:
        return BitMatrix.from_rows(_DISPLAYS[name])
    except KeyError:
        raise KeyError(f"unknown named matrix {name!r}") from None


def catalog() -> list[NamedMatrix]:
    return [NamedMatrix(n, named(n), _ANCHORS[n]) for n in _DISPLAYS]


def c4() -> BitMatrix:
    return product(identity(2), identity(2))


def t2xt2() -> BitMatrix:
    return product(triangular(2), triangular(2))
