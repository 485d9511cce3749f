"""Line-oriented fibration descriptions.

    # genus-1 fibration over the sphere
    fiber_genus = 1
    base_genus = 0
    word = (c1 c2)^6
    flat = [c1, c2]        # zero or more; base_genus of them for closed checks
"""

import logging
from pathlib import Path
from typing import Dict, List, Tuple, Union

from pydantic import BaseModel, ConfigDict

from errors import FibrationFileError, LefschetzError
from .ast import Commutator, Word
from .parser import parse_word
from .printer import print_word

logger = logging.getLogger(__name__)

_SCALAR_KEYS = ("fiber_genus", "base_genus", "word")


class FibrationFile(BaseModel):
    model_config = ConfigDict(frozen=True)

    fiber_genus: int
    base_genus: int
    word: Word
    flat_pairs: Tuple[Tuple[Word, Word], ...] = ()


def _parse_int(value: str, key: str, line: int) -> int:
    try:
        return int(value)
    except ValueError:
        raise FibrationFileError(f"{key} must be an integer, got {value!r}", line=line) from None


def read_fibration_file(text: str) -> FibrationFile:
    scalars: Dict[str, Tuple[str, int]] = {}
    flats: List[Tuple[str, int]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise FibrationFileError(f"expected 'key = value', got {line!r}", line=number)
        key, value = (part.strip() for part in line.split("=", 1))
        if key == "flat":
            flats.append((value, number))
        elif key in _SCALAR_KEYS:
            if key in scalars:
                raise FibrationFileError(f"duplicate key {key!r}", line=number)
            scalars[key] = (value, number)
        else:
            raise FibrationFileError(f"unknown key {key!r}", line=number)

    for key in ("fiber_genus", "base_genus"):
        if key not in scalars:
            raise FibrationFileError(f"missing required key {key!r}")
    fiber_genus = _parse_int(scalars["fiber_genus"][0], "fiber_genus", scalars["fiber_genus"][1])
    base_genus = _parse_int(scalars["base_genus"][0], "base_genus", scalars["base_genus"][1])
    if fiber_genus < 1:
        raise FibrationFileError(f"fiber_genus must be at least 1, got {fiber_genus}", line=scalars["fiber_genus"][1])
    if base_genus < 0:
        raise FibrationFileError(f"base_genus must be non-negative, got {base_genus}", line=scalars["base_genus"][1])

    word_text, word_line = scalars.get("word", ("", None))
    try:
        word = parse_word(word_text, fiber_genus)
    except LefschetzError as e:
        raise FibrationFileError(str(e), line=word_line, offset=e.offset) from e

    pairs: List[Tuple[Word, Word]] = []
    for value, number in flats:
        try:
            parsed = parse_word(value, fiber_genus, flat=True)
        except LefschetzError as e:
            raise FibrationFileError(str(e), line=number, offset=e.offset) from e
        if len(parsed.items) != 1 or not isinstance(parsed.items[0], Commutator):
            raise FibrationFileError("flat entries must be a single commutator [W1, W2]", line=number)
        pairs.append((parsed.items[0].left, parsed.items[0].right))

    logger.debug(f"read fibration: h={fiber_genus}, g={base_genus}, {len(pairs)} flat pair(s)")
    return FibrationFile(fiber_genus=fiber_genus, base_genus=base_genus, word=word, flat_pairs=tuple(pairs))


def load_fibration_file(path: Union[str, Path]) -> FibrationFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise FibrationFileError(f"cannot read {path}: {e.strerror}") from e
    return read_fibration_file(text)


def format_fibration_file(description: FibrationFile) -> str:
    lines = [
        f"fiber_genus = {description.fiber_genus}",
        f"base_genus = {description.base_genus}",
        f"word = {print_word(description.word)}",
    ]
    for left, right in description.flat_pairs:
        lines.append(f"flat = [{print_word(left)}, {print_word(right)}]")
    return "\n".join(lines) + "\n"
