from .ast import (
    ChainTwist,
    Commutator,
    Inverse,
    Power,
    SepTwist,
    SignedLetter,
    VectorTwist,
    Word,
    elaborate,
    letter_curve,
    positive_letters,
)
from .parser import parse_word
from .printer import print_word
from .fibration_file import FibrationFile, format_fibration_file, load_fibration_file, read_fibration_file

__all__ = [
    "ChainTwist",
    "Commutator",
    "FibrationFile",
    "Inverse",
    "Power",
    "SepTwist",
    "SignedLetter",
    "VectorTwist",
    "Word",
    "elaborate",
    "format_fibration_file",
    "letter_curve",
    "load_fibration_file",
    "parse_word",
    "positive_letters",
    "print_word",
    "read_fibration_file",
]
