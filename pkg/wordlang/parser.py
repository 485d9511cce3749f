"""Recursive-descent parser for monodromy words.

    word     := term*
    term     := atom ( '^' INT | "'" )*
    atom     := 'c' INT | 'T' '[' INT (',' INT)* ']' | 'S' '{' INT '}'
              | '(' word ')' | '[' word ',' word ']'

Juxtaposition composes left to right. Inverses and commutators are only
accepted in flat-part words. Whitespace is ignored between tokens. Groups and
commutators nest at most MAX_NESTING deep.
"""

from math import gcd
from functools import reduce
from typing import FrozenSet, List

from errors import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    InverseInPositivePartError,
    NonPrimitiveVectorError,
    SideGenusOutOfRangeError,
    WordSyntaxError,
)
from .ast import ChainTwist, Commutator, Inverse, Power, SepTwist, VectorTwist, Word

MAX_NESTING = 100


class _WordParser:
    def __init__(self, text: str, genus: int, flat: bool):
        if genus < 1:
            raise ValueError(f"genus must be at least 1, got {genus}")
        self.text = text
        self.genus = genus
        self.flat = flat
        self.pos = 0
        self.depth = 0

    # ---------- helpers ----------
    def _offset(self, index: int) -> int:
        return len(self.text[:index].encode("utf-8"))

    def _fail(self, error_class, message: str, index: int):
        raise error_class(message, offset=self._offset(index))

    def _skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expect(self, char: str) -> None:
        if self._peek() != char:
            found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
            self._fail(WordSyntaxError, f"expected {char!r}, found {found}", self.pos)
        self.pos += 1

    def _open(self, start: int) -> None:
        self.depth += 1
        if self.depth > MAX_NESTING:
            self._fail(WordSyntaxError, f"groups nested deeper than {MAX_NESTING}", start)
        self.pos += 1

    def _integer(self, signed: bool = False) -> int:
        self._skip_ws()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits_start = self.pos
        while self.pos < len(self.text) and "0" <= self.text[self.pos] <= "9":
            self.pos += 1
        if self.pos == digits_start:
            self._fail(WordSyntaxError, "expected an integer", start)
        return int(self.text[start:self.pos])

    # ---------- grammar ----------
    def parse(self) -> Word:
        word = self._word(frozenset())
        if self._peek():
            self._fail(WordSyntaxError, f"unexpected {self.text[self.pos]!r}", self.pos)
        return word

    def _word(self, terminators: FrozenSet[str]) -> Word:
        items: List = []
        while True:
            ch = self._peek()
            if not ch or ch in terminators:
                return Word(items=tuple(items))
            items.append(self._term())

    def _term(self):
        node = self._atom()
        while True:
            ch = self._peek()
            if ch == "^":
                at = self.pos
                self.pos += 1
                exponent = self._integer()
                if exponent < 1:
                    self._fail(WordSyntaxError, "exponent must be at least 1", at)
                node = Power(base=node, exponent=exponent)
            elif ch == "'":
                if not self.flat:
                    self._fail(InverseInPositivePartError, "inverse letter in a vanishing-cycle word", self.pos)
                self.pos += 1
                node = Inverse(base=node)
            else:
                return node

    def _atom(self):
        ch = self._peek()
        start = self.pos
        if ch == "c":
            self.pos += 1
            index = self._integer()
            top = 2 * self.genus + 1
            if not 1 <= index <= top:
                self._fail(IndexOutOfRangeError, f"c{index} outside c1..c{top} for genus {self.genus}", start)
            return ChainTwist(index=index)
        if ch == "T":
            self.pos += 1
            self._expect("[")
            entries = [self._integer(signed=True)]
            while self._peek() == ",":
                self.pos += 1
                entries.append(self._integer(signed=True))
            self._expect("]")
            if len(entries) != 2 * self.genus:
                self._fail(
                    DimensionMismatchError,
                    f"vector has {len(entries)} entries, genus {self.genus} needs {2 * self.genus}",
                    start,
                )
            if reduce(gcd, entries, 0) != 1:
                self._fail(NonPrimitiveVectorError, f"vector {entries} is not primitive", start)
            return VectorTwist(vector=tuple(entries))
        if ch == "S":
            self.pos += 1
            self._expect("{")
            side = self._integer()
            self._expect("}")
            if not 1 <= side <= self.genus - 1:
                self._fail(
                    SideGenusOutOfRangeError,
                    f"S{{{side}}} needs side genus in 1..{self.genus - 1} for genus {self.genus}",
                    start,
                )
            return SepTwist(side_genus=side)
        if ch == "(":
            self._open(start)
            inner = self._word(frozenset(")"))
            self._expect(")")
            self.depth -= 1
            return inner
        if ch == "[":
            if not self.flat:
                self._fail(InverseInPositivePartError, "commutator in a vanishing-cycle word", start)
            self._open(start)
            left = self._word(frozenset(","))
            self._expect(",")
            right = self._word(frozenset("]"))
            self._expect("]")
            self.depth -= 1
            return Commutator(left=left, right=right)
        if not ch:
            self._fail(WordSyntaxError, "unexpected end of input", self.pos)
        self._fail(WordSyntaxError, f"unexpected {ch!r}", start)


def parse_word(text: str, genus: int, flat: bool = False) -> Word:
    """Parse a word at the given fiber genus; `flat` admits inverses and commutators"""
    return _WordParser(text, genus, flat).parse()
