"""Syntax tree of monodromy words.

Letters are chain twists `c<i>`, vector twists `T[...]` and separating twists `S{k}`.
Powers, groups, inverses and commutators stay unexpanded in the tree; `elaborate`
flattens a tree into signed letters.
"""

from __future__ import annotations

from typing import List, Literal, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field
from typing_extensions import Annotated

from errors import IndexOutOfRangeError, InverseInPositivePartError
from symplectic import NonseparatingCurve, SeparatingCurve, chain_curves


class _Node(BaseModel):
    model_config = ConfigDict(frozen=True)


class ChainTwist(_Node):
    kind: Literal["chain"] = "chain"
    index: int = Field(ge=1)


class VectorTwist(_Node):
    kind: Literal["vector"] = "vector"
    vector: Tuple[int, ...]


class SepTwist(_Node):
    kind: Literal["separating"] = "separating"
    side_genus: int = Field(ge=1)


class Power(_Node):
    kind: Literal["power"] = "power"
    base: Node
    exponent: int = Field(ge=1)


class Inverse(_Node):
    kind: Literal["inverse"] = "inverse"
    base: Node


class Commutator(_Node):
    kind: Literal["commutator"] = "commutator"
    left: Word
    right: Word


class Word(_Node):
    kind: Literal["word"] = "word"
    items: Tuple[Node, ...] = ()


Node = Annotated[
    Union[ChainTwist, VectorTwist, SepTwist, Power, Inverse, Commutator, Word],
    Field(discriminator="kind"),
]
Letter = Annotated[Union[ChainTwist, VectorTwist, SepTwist], Field(discriminator="kind")]

for _model in (Power, Inverse, Commutator, Word):
    _model.model_rebuild()


class SignedLetter(_Node):
    letter: Letter
    inverse: bool = False

    def inverted(self) -> SignedLetter:
        return SignedLetter(letter=self.letter, inverse=not self.inverse)


def _invert(letters: Tuple[SignedLetter, ...]) -> Tuple[SignedLetter, ...]:
    return tuple(l.inverted() for l in reversed(letters))


def elaborate(node) -> Tuple[SignedLetter, ...]:
    """Expand powers, inverses and commutators; [W1, W2] becomes W1 W2 W1' W2'"""
    if isinstance(node, (ChainTwist, VectorTwist, SepTwist)):
        return (SignedLetter(letter=node),)
    if isinstance(node, Word):
        out: List[SignedLetter] = []
        for item in node.items:
            out.extend(elaborate(item))
        return tuple(out)
    if isinstance(node, Power):
        return elaborate(node.base) * node.exponent
    if isinstance(node, Inverse):
        return _invert(elaborate(node.base))
    if isinstance(node, Commutator):
        left, right = elaborate(node.left), elaborate(node.right)
        return left + right + _invert(left) + _invert(right)
    raise TypeError(f"not a word node: {node!r}")


def positive_letters(node) -> Tuple[Union[ChainTwist, VectorTwist, SepTwist], ...]:
    """Letters of a word that may only contain positive twists"""
    letters = elaborate(node)
    if any(l.inverse for l in letters):
        raise InverseInPositivePartError("vanishing-cycle words may not contain inverse letters")
    return tuple(l.letter for l in letters)


def letter_curve(letter, genus: int) -> Union[NonseparatingCurve, SeparatingCurve]:
    if isinstance(letter, ChainTwist):
        top = 2 * genus + 1
        if letter.index > top:
            raise IndexOutOfRangeError(f"c{letter.index} outside c1..c{top} for genus {genus}")
        return chain_curves(genus)[letter.index - 1]
    if isinstance(letter, VectorTwist):
        return NonseparatingCurve(vector=letter.vector)
    return SeparatingCurve(side_genus=letter.side_genus)
