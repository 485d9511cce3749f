from typing import Tuple

from pydantic import BaseModel, ConfigDict

from errors import ParameterRangeError
from symplectic import CurveClass
from wordlang import FibrationFile, Power, SepTwist, Word, letter_curve, positive_letters


class FibrationData(BaseModel):
    """Lefschetz fibration over a genus-g base: vanishing word over a disk plus g flat pairs.

    Flat-part words only enter computations through their images in Sp(2h, Z).
    """

    model_config = ConfigDict(frozen=True)

    fiber_genus: int
    base_genus: int
    word: Word = Word()
    vanishing_cycles: Tuple[CurveClass, ...] = ()
    flat_pairs: Tuple[Tuple[Word, Word], ...] = ()

    def check_ranges(self) -> "FibrationData":
        if self.fiber_genus < 1:
            raise ParameterRangeError(f"fiber genus must be at least 1, got {self.fiber_genus}")
        if self.base_genus < 0:
            raise ParameterRangeError(f"base genus must be non-negative, got {self.base_genus}")
        for curve in self.vanishing_cycles:
            curve.validate_for_genus(self.fiber_genus)
        return self

    @classmethod
    def from_word(cls, fiber_genus: int, base_genus: int, word: Word,
                  flat_pairs: Tuple[Tuple[Word, Word], ...] = ()) -> "FibrationData":
        letters = positive_letters(word)
        cycles = tuple(letter_curve(l, fiber_genus) for l in letters)
        data = cls(
            fiber_genus=fiber_genus,
            base_genus=base_genus,
            word=word,
            vanishing_cycles=cycles,
            flat_pairs=tuple(flat_pairs),
        )
        return data.check_ranges()

    @classmethod
    def from_file(cls, description: FibrationFile) -> "FibrationData":
        return cls.from_word(
            description.fiber_genus, description.base_genus, description.word, description.flat_pairs
        )

    def to_file(self) -> FibrationFile:
        return FibrationFile(
            fiber_genus=self.fiber_genus,
            base_genus=self.base_genus,
            word=self.word,
            flat_pairs=self.flat_pairs,
        )

    @property
    def s(self) -> int:
        return sum(1 for c in self.vanishing_cycles if c.separating)

    @property
    def n(self) -> int:
        return len(self.vanishing_cycles) - self.s


def build_separating_power(fiber_genus: int, power: int, side_genus: int, base_genus: int) -> FibrationData:
    """t_a^k over a disk, a separating, glued to a flat bundle over a genus-N surface.

    The flat pairs are empty placeholder words: separating twists act trivially on
    homology, so the data is Sp-consistent.
    """
    if fiber_genus < 2:
        raise ParameterRangeError(f"fiber genus must be at least 2, got {fiber_genus}")
    if power < 1:
        raise ParameterRangeError(f"power must be at least 1, got {power}")
    if not 1 <= side_genus <= fiber_genus - 1:
        raise ParameterRangeError(f"side genus {side_genus} outside 1..{fiber_genus - 1}")
    if base_genus < 0:
        raise ParameterRangeError(f"base genus must be non-negative, got {base_genus}")
    word = Word(items=(Power(base=SepTwist(side_genus=side_genus), exponent=power),))
    return FibrationData.from_word(
        fiber_genus, base_genus, word, tuple((Word(), Word()) for _ in range(base_genus))
    )
