"""The asymmetry measure m(w): minimal palindromic factorizations.

m(w) is the least number of nonempty palindromes whose concatenation is
w.  It is computed by the prefix recurrence

    dp[j] = 1 + min{ dp[i] : i < j, w[i..j) a palindrome },  dp[0] = 0,

which also yields an explicit witness.  :class:`IncrementalState` exposes
the same recurrence with push/pop semantics so that enumerations over a
prefix tree can share work between sibling words.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import PACKED_MAX, PalTable, Word, WordError, parse_word

__all__ = [
    "Factorization",
    "IncrementalState",
    "min_factorization",
    "measure",
    "reachable_k",
]


@dataclass(frozen=True)
class Factorization:
    """A minimal factorization: the measure plus its witness cuts.

    ``cuts`` lists the block boundaries 0 = c0 < c1 < ... < cm = len(word),
    so the word splits into exactly ``m`` palindromic blocks.
    """

    word: Word
    m: int
    cuts: tuple[int, ...]

    def blocks(self) -> tuple[str, ...]:
        text = self.word.text
        return tuple(text[self.cuts[i] : self.cuts[i + 1]] for i in range(self.m))

    def __str__(self) -> str:
        return "".join(f"({block})" for block in self.blocks())


class IncrementalState:
    """Prefix-shared evaluation state for m over a growing word.

    Each :meth:`push_symbol` appends one symbol and updates the measure of
    the current prefix in O(length); :meth:`pop_symbol` undoes exactly one
    push.  Single-owner: give each enumeration worker its own state.
    """

    def __init__(self, capacity: int = PACKED_MAX) -> None:
        if capacity < 1:
            raise ValueError(f"capacity must be positive, got {capacity}")
        self.capacity = capacity
        self._pal = PalTable()
        # dp[j] = m(prefix of length j); choice[j] = start of the final block
        # in the witness for that prefix (shortest minimizing suffix).
        self._dp: list[int] = [0]
        self._choice: list[int] = [0]

    @property
    def current_length(self) -> int:
        return len(self._pal)

    @property
    def current_m(self) -> int:
        if not len(self._pal):
            raise WordError("m is undefined on the empty word")
        return self._dp[-1]

    @property
    def current_word(self) -> Word:
        return self._pal.word

    def push_symbol(self, symbol: int | str) -> int:
        """Append one symbol; returns the measure of the extended prefix."""
        if len(self._pal) >= self.capacity:
            raise WordError(f"capacity {self.capacity} exceeded")
        self._pal.push(symbol)
        j = len(self._pal)
        best = j + 1
        arg = j - 1
        # Scan suffix starts from short suffixes to long ones; strict
        # improvement keeps the shortest minimizing suffix, making the
        # witness deterministic.
        for i in range(j - 1, -1, -1):
            if self._pal.is_pal(i, j - 1):
                cand = self._dp[i] + 1
                if cand < best:
                    best = cand
                    arg = i
        self._dp.append(best)
        self._choice.append(arg)
        return best

    def pop_symbol(self) -> None:
        if not len(self._pal):
            raise WordError("pop from empty state")
        self._pal.pop()
        self._dp.pop()
        self._choice.pop()

    def witness_cuts(self) -> tuple[int, ...]:
        """Block boundaries of the deterministic witness for the current prefix."""
        cuts = [len(self._pal)]
        while cuts[-1] > 0:
            cuts.append(self._choice[cuts[-1]])
        return tuple(reversed(cuts))


def min_factorization(w: Word | str) -> Factorization:
    """Minimal palindromic factorization of a nonempty word.

    The witness is deterministic: among minimizing final blocks the
    shortest one is taken, recursively.
    """
    if isinstance(w, str):
        w = parse_word(w)
    if w.length == 0:
        raise WordError("m is undefined on the empty word")
    state = IncrementalState(capacity=max(w.length, 1))
    for t in range(w.length):
        state.push_symbol((w.bits >> t) & 1)
    return Factorization(w, state.current_m, state.witness_cuts())


def measure(w: Word | str) -> int:
    """m(w) without the witness (same recurrence, less bookkeeping)."""
    if isinstance(w, str):
        w = parse_word(w)
    if w.length == 0:
        raise WordError("m is undefined on the empty word")
    n = w.length
    text = w.text
    # pal[i] tracks palindromicity of w[i..j] for the current j.
    pal = [False] * n
    dp = [0] * (n + 1)
    for j in range(n):
        for i in range(j + 1):
            if text[i] == text[j] and (j - i < 2 or pal[i + 1]):
                pal[i] = True
            else:
                pal[i] = False
        dp[j + 1] = 1 + min(dp[i] for i in range(j + 1) if pal[i])
    return dp[n]


def reachable_k(w: Word | str, k_max: int) -> set[int]:
    """Exact set of block counts k <= k_max realizable as a product of
    exactly k nonempty palindromes."""
    if isinstance(w, str):
        w = parse_word(w)
    if w.length == 0:
        raise WordError("reachable_k is undefined on the empty word")
    if k_max > w.length:
        raise ValueError(f"k_max {k_max} exceeds word length {w.length}")
    n = w.length
    text = w.text
    mask = (1 << (k_max + 1)) - 1
    pal = [False] * n
    # reach[j] bit k set <=> the length-j prefix splits into exactly k palindromes
    reach = [0] * (n + 1)
    reach[0] = 1
    for j in range(n):
        for i in range(j + 1):
            pal[i] = text[i] == text[j] and (j - i < 2 or pal[i + 1])
        acc = 0
        for i in range(j + 1):
            if pal[i]:
                acc |= reach[i] << 1
        reach[j + 1] = acc & mask
    return {k for k in range(1, k_max + 1) if (reach[n] >> k) & 1}
