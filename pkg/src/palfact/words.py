"""Binary words over {a, b}: parsing, symmetries, palindromes, and the
standard word families used by the extremal constructions.

Words are stored bit-packed: bit ``t`` of ``bits`` is the symbol at
position ``t`` (a=0, b=1), position 0 being the leftmost letter.  Python
integers are unbounded, so there is no hard length cap; enumeration code
elsewhere assumes lengths up to :data:`PACKED_MAX`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

__all__ = [
    "PACKED_MAX",
    "Word",
    "WordError",
    "PalTable",
    "parse_word",
    "word_from_bits",
    "is_palindrome",
    "symmetries",
    "orbit",
    "family",
    "longest_palindromic_factor",
]

PACKED_MAX = 63

_A, _B = "a", "b"

FAMILY_SEED = "aabab"
FAMILY_BLOCK = "bbaaba"
FAMILY_V_TAIL = "bbaaababb"


class WordError(ValueError):
    """Raised for malformed word text or out-of-domain word arguments."""


def _reverse_bits(bits: int, length: int) -> int:
    out = 0
    for _ in range(length):
        out = (out << 1) | (bits & 1)
        bits >>= 1
    return out


@dataclass(frozen=True)
class Word:
    """An immutable binary word; safe to share between threads."""

    bits: int
    length: int

    def __post_init__(self) -> None:
        if self.length < 0:
            raise WordError(f"negative length {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise WordError("stored bits exceed the declared length")

    @staticmethod
    def empty() -> "Word":
        return Word(0, 0)

    @property
    def text(self) -> str:
        return "".join(_B if (self.bits >> t) & 1 else _A for t in range(self.length))

    def __str__(self) -> str:
        return self.text

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, pos: int) -> str:
        if not 0 <= pos < self.length:
            raise IndexError(pos)
        return _B if (self.bits >> pos) & 1 else _A

    def __add__(self, other: "Word") -> "Word":
        return Word(self.bits | (other.bits << self.length), self.length + other.length)

    def factor(self, start: int, stop: int) -> "Word":
        """The factor at positions ``start..stop`` (half-open)."""
        if not 0 <= start <= stop <= self.length:
            raise WordError(f"factor bounds [{start}, {stop}) outside word of length {self.length}")
        width = stop - start
        return Word((self.bits >> start) & ((1 << width) - 1), width)

    def reversed(self) -> "Word":
        return Word(_reverse_bits(self.bits, self.length), self.length)

    def complement(self) -> "Word":
        return Word(self.bits ^ ((1 << self.length) - 1), self.length)

    def reversed_complement(self) -> "Word":
        return self.reversed().complement()


def parse_word(text: str, *, allow_empty: bool = False) -> Word:
    """Parse ``a``/``b`` text (or its ``0``/``1`` alias) into a :class:`Word`.

    The two alphabets may not be mixed; the first offending character is
    reported by its 1-based position.
    """
    if not text:
        if allow_empty:
            return Word.empty()
        raise WordError("empty word (pass allow_empty=True to permit it)")
    alphabet = None
    bits = 0
    for pos, ch in enumerate(text):
        if ch in "ab":
            kind, bit = "letters", (1 if ch == _B else 0)
        elif ch in "01":
            kind, bit = "digits", (1 if ch == "1" else 0)
        else:
            raise WordError(f"invalid character {ch!r} at position {pos + 1}")
        if alphabet is None:
            alphabet = kind
        elif alphabet != kind:
            raise WordError(f"mixed alphabets: {ch!r} at position {pos + 1}")
        bits |= bit << pos
    return Word(bits, len(text))


def word_from_bits(bits: int, length: int) -> Word:
    """Wrap a packed integer as a word of the given length."""
    return Word(bits, length)


def is_palindrome(w: Word) -> bool:
    """True iff the word equals its reversal (the empty word counts)."""
    return w.bits == _reverse_bits(w.bits, w.length)


class Symmetries(NamedTuple):
    reversal: Word
    complement: Word
    reversed_complement: Word


def symmetries(w: Word) -> Symmetries:
    """The three nontrivial images of ``w`` under letter swap and reversal."""
    return Symmetries(w.reversed(), w.complement(), w.reversed_complement())


def orbit(w: Word) -> tuple[Word, ...]:
    """The distinct images of ``w`` under the four-element symmetry group,
    sorted by text."""
    images = {w.text: w}
    for im in symmetries(w):
        images.setdefault(im.text, im)
    return tuple(images[t] for t in sorted(images))


def family(kind: str, n: int) -> Word:
    """The named word families.

    * ``W``: aabab(bbaaba)^n, length 6n+5 (n >= 0).
    * ``U``: the length-n prefix of the periodic word aabab(bbaaba)^oo (n >= 1).
    * ``V``: aabab(bbaaba)^n bbaaababb, length 6n+14 (n >= 0).
    """
    if n < 0:
        raise WordError(f"family index must be nonnegative, got {n}")
    if kind == "W":
        return parse_word(FAMILY_SEED + FAMILY_BLOCK * n)
    if kind == "U":
        if n < 1:
            raise WordError("U(n) requires n >= 1")
        reps = max(1, -(-(n - len(FAMILY_SEED)) // len(FAMILY_BLOCK)))
        return parse_word((FAMILY_SEED + FAMILY_BLOCK * reps)[:n])
    if kind == "V":
        return parse_word(FAMILY_SEED + FAMILY_BLOCK * n + FAMILY_V_TAIL)
    raise WordError(f"unknown family kind {kind!r} (expected W, U or V)")


def longest_palindromic_factor(w: Word) -> int:
    """Length of the longest contiguous palindromic factor (>= 1)."""
    if w.length == 0:
        raise WordError("the empty word has no factors")
    text = w.text
    n = len(text)
    best = 1
    for center in range(n):
        # odd-length factors centred at `center`
        lo, hi = center - 1, center + 1
        while lo >= 0 and hi < n and text[lo] == text[hi]:
            lo -= 1
            hi += 1
        best = max(best, hi - lo - 1)
        # even-length factors centred between `center` and `center + 1`
        lo, hi = center, center + 1
        while lo >= 0 and hi < n and text[lo] == text[hi]:
            lo -= 1
            hi += 1
        best = max(best, hi - lo - 1)
    return best


class PalTable:
    """Triangular palindrome table for a growing word, with exact rollback.

    ``is_pal(i, j)`` tells whether the factor at positions ``i..j``
    (inclusive) is a palindrome.  Appending a symbol computes one new
    column from the previous diagonal in O(length); popping removes it,
    restoring the prior state bit for bit.  Single-owner: not safe for
    concurrent mutation.
    """

    def __init__(self) -> None:
        self._symbols: list[int] = []
        self._columns: list[list[bool]] = []

    def __len__(self) -> int:
        return len(self._symbols)

    @property
    def word(self) -> Word:
        bits = 0
        for t, s in enumerate(self._symbols):
            bits |= s << t
        return Word(bits, len(self._symbols))

    def push(self, symbol: int | str) -> None:
        if isinstance(symbol, str):
            if symbol not in "ab":
                raise WordError(f"invalid symbol {symbol!r}")
            symbol = 1 if symbol == _B else 0
        elif symbol not in (0, 1):
            raise WordError(f"invalid symbol {symbol!r}")
        j = len(self._symbols)
        self._symbols.append(symbol)
        column = [False] * (j + 1)
        column[j] = True
        for i in range(j - 1, -1, -1):
            if self._symbols[i] == symbol and (i + 1 > j - 1 or self._columns[j - 1][i + 1]):
                column[i] = True
        self._columns.append(column)

    def pop(self) -> None:
        if not self._symbols:
            raise WordError("pop from empty table")
        self._symbols.pop()
        self._columns.pop()

    def is_pal(self, i: int, j: int) -> bool:
        """Palindrome test for the inclusive factor ``word[i..j]``."""
        if not 0 <= i <= j < len(self._symbols):
            raise IndexError((i, j))
        return self._columns[j][i]

    def snapshot(self) -> tuple:
        """Hashable copy of the full state, for rollback testing."""
        return (tuple(self._symbols), tuple(tuple(c) for c in self._columns))
