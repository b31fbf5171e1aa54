"""Clasp words: finite sequences of signed letters x_i.

A clasp word records, in order, the signed clasps a link component meets
while traversing its boundary.  Words are kept raw: ``x1 x1^-1`` is never
cancelled, because the invariants downstream depend on the unreduced
sequence.

Text grammar (word files may also contain ``#`` comment lines):

    word := [ term { sep term } ]
    sep  := whitespace+ | "."
    term := "x" INT [ "^" SIGNEDINT ]
    INT  := [1-9][0-9]*

``x3^-2`` expands at parse time to two copies of ``x3^-1``; the in-memory
form is always the fully expanded letter sequence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator


class WordSyntaxError(ValueError):
    """Raised when word text does not conform to the grammar."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class SignedLetter:
    """A single letter x_i or x_i^-1."""

    index: int
    sign: int

    def __post_init__(self) -> None:
        if not isinstance(self.index, int) or self.index < 1:
            raise ValueError(f"letter index must be a positive integer, got {self.index!r}")
        if self.sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {self.sign!r}")

    def __str__(self) -> str:
        return f"x{self.index}" if self.sign == 1 else f"x{self.index}^-1"


@dataclass(frozen=True)
class ClaspWord:
    """An immutable sequence of signed letters."""

    letters: tuple[SignedLetter, ...] = ()

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "ClaspWord":
        """Build a word from (index, sign) pairs."""
        return cls(tuple(SignedLetter(i, s) for i, s in pairs))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[SignedLetter]:
        return iter(self.letters)

    def __str__(self) -> str:
        """Canonical text form: single spaces, one term per letter."""
        return " ".join(str(letter) for letter in self.letters)

    def signed_count(self, index: int) -> int:
        """Sum of the signs of all letters with the given index."""
        return sum(letter.sign for letter in self.letters if letter.index == index)

    def restrict(self, i: int, j: int) -> "ClaspWord":
        """Delete every letter whose index is neither i nor j."""
        if i == j:
            raise ValueError("restrict requires two distinct indices")
        return ClaspWord(tuple(l for l in self.letters if l.index in (i, j)))

    def rotate(self, k: int) -> "ClaspWord":
        """Cyclic left rotation by k positions (basepoint change)."""
        m = len(self.letters)
        if m == 0:
            return self
        k %= m
        return ClaspWord(self.letters[k:] + self.letters[:k])


_TERM_RE = re.compile(r"x([1-9][0-9]*)(?:\^(-?[1-9][0-9]*))?\Z")
_TOKEN_RE = re.compile(r"[^\s.]+")


def _term_error(token: str) -> str:
    m = re.match(r"x(-?[0-9]+)(?:\^(-?[0-9]+))?\Z", token)
    if m:
        index_text, exp_text = m.group(1), m.group(2)
        if int(index_text) < 1:
            return f"component index must be at least 1, got {index_text}"
        if index_text != str(int(index_text)):
            return f"component index may not have a leading zero: {index_text}"
        if exp_text is not None:
            if int(exp_text) == 0:
                return "exponent must be nonzero"
            return f"exponent may not have a leading zero: {exp_text}"
    return f"malformed term {token!r} (expected x<INT> or x<INT>^<SIGNEDINT>)"


def parse_word(text: str) -> ClaspWord:
    """Parse word text into a fully expanded :class:`ClaspWord`.

    Raises :class:`WordSyntaxError` (with line and column) on malformed
    input.  Lines starting with ``#`` are ignored.
    """
    letters: list[SignedLetter] = []
    for line_no, line in enumerate(text.splitlines() or [""], start=1):
        if line.lstrip().startswith("#"):
            continue
        for match in _TOKEN_RE.finditer(line):
            token = match.group()
            term = _TERM_RE.match(token)
            if term is None:
                raise WordSyntaxError(_term_error(token), line_no, match.start() + 1)
            index = int(term.group(1))
            exponent = int(term.group(2)) if term.group(2) else 1
            letter = SignedLetter(index, 1 if exponent > 0 else -1)
            letters.extend([letter] * abs(exponent))
    return ClaspWord(tuple(letters))
