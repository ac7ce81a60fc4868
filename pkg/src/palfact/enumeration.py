"""Exhaustive evaluation of m over all binary words of bounded length.

Words of length n are identified with integers in [0, 2^n): bit t is the
symbol at position t (a=0, b=1), the leftmost letter in the lowest bit.

The workhorse is a layer-by-layer dynamic program: one uint8 array per
length holds m for every word of that length sharing a fixed prefix, and
the layer for length j is obtained from the shorter layers by minimising
over palindromic suffixes.  A suffix of length L occupies the top L bits,
so after reshaping the layer to (2^L, columns) each palindromic suffix
value selects one row and the update is a vectorised elementwise minimum.
Everything is exact integer arithmetic; results are independent of any
worker or chunk partitioning by construction.

A classic depth-first enumeration over the prefix tree (push/pop of an
:class:`~palfact.factorization.IncrementalState`, search space partitioned
by fixed-depth prefixes, associative merge) is provided as an independent
slow backend; the two are cross-checked in the test suite.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .factorization import IncrementalState
from .words import Word, parse_word

__all__ = [
    "PACKED_LIMIT",
    "LengthRow",
    "palindrome_values",
    "extension_m",
    "scan_lengths",
    "dfs_scan",
]

# Vectorised layers index words by int64 values; 32 keeps every layer and
# temporary comfortably addressable.
PACKED_LIMIT = 32

# Largest temporary (rows x columns elements) allowed for a fancy-indexed
# row-block minimum; beyond it, rows are updated one slice at a time.
_FANCY_LIMIT = 1 << 22
_BINCOUNT_CHUNK = 1 << 24


def palindrome_values(length: int) -> np.ndarray:
    """Sorted array of all palindromic words of the given length."""
    half = (length + 1) // 2
    h = np.arange(1 << half, dtype=np.int64)
    x = np.zeros(1 << half, dtype=np.int64)
    for t in range(half):
        bit = (h >> t) & 1
        x |= bit << t
        x |= bit << (length - 1 - t)
    x.sort()
    return x


def _prefix_measures(prefix: Word) -> list[int]:
    """[m(prefix[:i]) for i = 0..len], with the 0 convention at i = 0."""
    vals = [0]
    if prefix.length:
        state = IncrementalState(capacity=prefix.length)
        for t in range(prefix.length):
            vals.append(state.push_symbol((prefix.bits >> t) & 1))
    return vals


def _crossing_matches(prefix_sym: list[int], start: int, ext_len: int) -> np.ndarray | None:
    """Extensions v (of ext_len symbols) for which the factor running from
    ``start`` through the end of prefix+v is a palindrome.

    The factor covers the known prefix tail plus every extension symbol, so
    the palindrome conditions either constrain the prefix alone (possibly
    unsatisfiable), force individual extension bits, or tie extension bits
    in mirror pairs.  Returns None when the prefix part already fails.
    """
    p = len(prefix_sym)
    length = p - start + ext_len
    forced: dict[int, int] = {}
    pairs: list[tuple[int, int]] = []
    free: list[int] = []
    for t in range((length + 1) // 2):
        tm = length - 1 - t
        pos, pos_m = start + t, start + tm
        if t == tm:
            if pos >= p:
                free.append(pos - p)
            continue
        if pos_m < p:
            if prefix_sym[pos] != prefix_sym[pos_m]:
                return None
        elif pos < p:
            forced[pos_m - p] = prefix_sym[pos]
        else:
            pairs.append((pos - p, pos_m - p))
    base = 0
    for idx, bit in forced.items():
        base |= bit << idx
    vals = np.array([base], dtype=np.int64)
    for idx in free:
        vals = np.concatenate([vals, vals | (1 << idx)])
    for lo, hi in pairs:
        vals = np.concatenate([vals, vals | ((1 << lo) | (1 << hi))])
    vals.sort()
    return vals


def extension_m(prefix: Word, ext_len: int) -> list[np.ndarray]:
    """m over every extension of ``prefix`` by 1..ext_len symbols.

    Returns ``ext`` with ``ext[e][v] = m(prefix + word(v, e))`` for
    e = 1..ext_len (index 0 unused).  Memory is dominated by the layers
    themselves: 2^(ext_len+1) bytes in total.
    """
    p = prefix.length
    prefix_sym = [(prefix.bits >> t) & 1 for t in range(p)]
    base = _prefix_measures(prefix)
    pal = [None] + [palindrome_values(L) for L in range(1, ext_len + 1)]
    ext: list[np.ndarray] = [None] * (ext_len + 1)  # type: ignore[list-item]
    scratch = np.empty(1 << max(ext_len - 1, 0), dtype=np.uint8)
    for e in range(1, ext_len + 1):
        cur = np.full(1 << e, 255, dtype=np.uint8)
        # Palindromic factor starting inside the prefix: it absorbs every
        # extension symbol, so only the matching extensions are touched.
        for start in range(p):
            matches = _crossing_matches(prefix_sym, start, e)
            if matches is not None:
                cur[matches] = np.minimum(cur[matches], base[start] + 1)
        # Palindromic factor starting at extension offset s: top e-s bits.
        for s in range(e):
            rows = pal[e - s]
            if s == 0:
                # factor is the entire extension, preceded by the whole prefix
                cur[rows] = np.minimum(cur[rows], base[p] + 1)
                continue
            cols = 1 << s
            prev = scratch[:cols]
            np.add(ext[s], 1, out=prev)
            view = cur.reshape(1 << (e - s), cols)
            if rows.size * cols <= _FANCY_LIMIT:
                view[rows] = np.minimum(view[rows], prev[None, :])
            else:
                for r in rows:
                    np.minimum(view[r], prev, out=view[r])
        ext[e] = cur
    return ext


def _bincount_uint8(arr: np.ndarray) -> np.ndarray:
    """np.bincount without materialising an int64 copy of the whole layer."""
    out = np.zeros(256, dtype=np.int64)
    for s in range(0, arr.size, _BINCOUNT_CHUNK):
        c = np.bincount(arr[s : s + _BINCOUNT_CHUNK])
        out[: c.size] += c
    return out


def _lex_keys(words: np.ndarray, length: int) -> np.ndarray:
    """Keys whose integer order equals lexicographic order of the words."""
    keys = np.zeros_like(words)
    for t in range(length):
        keys = (keys << 1) | ((words >> t) & 1)
    return keys


def _word_text(bits: int, length: int) -> str:
    return "".join("ab"[(bits >> t) & 1] for t in range(length))


@dataclass(frozen=True)
class LengthRow:
    """Exact enumeration results for one word length.

    Counts cover all 2^n words; sample_words lists the lexicographically
    least maximizers that start with 'a' (their complements are the
    b-initial maximizers).
    """

    n: int
    counts: dict[int, int]
    max_m: int
    max_count: int
    sample_words: tuple[str, ...]
    max_words_bits: tuple[int, ...] | None = None

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def s(self) -> int:
        return sum(k * c for k, c in self.counts.items())


def _row_from_layer(layer: np.ndarray, n: int, sample_limit: int, keep_max: bool) -> LengthRow:
    counts_arr = _bincount_uint8(layer)
    counts = {k: 2 * int(c) for k, c in enumerate(counts_arr) if c}
    max_m = max(counts)
    idx = np.nonzero(layer == max_m)[0]
    bits = (idx.astype(np.int64) << 1)  # prepend the fixed leading 'a'
    if idx.size > sample_limit:
        keys = _lex_keys(bits, n)
        part = np.argpartition(keys, sample_limit)[:sample_limit]
        chosen = bits[part[np.argsort(keys[part], kind="stable")]]
    else:
        chosen = bits[np.argsort(_lex_keys(bits, n), kind="stable")]
    samples = tuple(_word_text(int(b), n) for b in chosen)
    return LengthRow(
        n=n,
        counts=counts,
        max_m=max_m,
        max_count=2 * int(idx.size),
        sample_words=samples,
        max_words_bits=tuple(int(b) for b in bits) if keep_max else None,
    )


def scan_lengths(
    n_max: int,
    *,
    sample_limit: int = 64,
    keep_max_words: frozenset[int] | set[int] = frozenset(),
) -> dict[int, LengthRow]:
    """Exact per-length statistics of m for every length 1..n_max.

    Enumerates only words starting with 'a'; the letter-swap involution is
    fixed-point free, so all counts double exactly.
    """
    if not 1 <= n_max <= PACKED_LIMIT:
        raise ValueError(f"length must be in 1..{PACKED_LIMIT}, got {n_max}")
    rows = {1: LengthRow(1, {1: 2}, 1, 2, ("a",), (0,) if 1 in keep_max_words else None)}
    if n_max == 1:
        return rows
    ext = extension_m(parse_word("a"), n_max - 1)
    for e in range(1, n_max):
        rows[e + 1] = _row_from_layer(ext[e], e + 1, sample_limit, (e + 1) in keep_max_words)
        ext[e] = None  # type: ignore[call-overload]
    return rows


# ---------------------------------------------------------------------------
# Independent depth-first backend (slow; used for cross-checks and as the
# reference realisation of the prefix-tree search).


class _DfsAccumulator:
    def __init__(self, n: int, sample_limit: int) -> None:
        self.n = n
        self.sample_limit = sample_limit
        self.counts = [0] * (n + 2)
        self.max_m = 0
        self.max_count = 0
        self.samples: list[str] = []

    def record(self, m: int, word_bits: int) -> None:
        self.counts[m] += 1
        if m > self.max_m:
            self.max_m = m
            self.max_count = 1
            self.samples = [_word_text(word_bits, self.n)]
        elif m == self.max_m:
            self.max_count += 1
            if len(self.samples) < self.sample_limit:
                self.samples.append(_word_text(word_bits, self.n))

    def merge(self, other: "_DfsAccumulator") -> None:
        for k, c in enumerate(other.counts):
            self.counts[k] += c
        if other.max_m > self.max_m:
            self.max_m = other.max_m
            self.max_count = other.max_count
            self.samples = list(other.samples[: self.sample_limit])
        elif other.max_m == self.max_m:
            self.max_count += other.max_count
            self.samples = (self.samples + other.samples)[: self.sample_limit]


def _dfs_partition(n: int, prefix_bits: int, depth: int, sample_limit: int) -> _DfsAccumulator:
    acc = _DfsAccumulator(n, sample_limit)
    state = IncrementalState(capacity=n)
    for t in range(depth):
        state.push_symbol((prefix_bits >> t) & 1)

    def explore(length: int, bits: int) -> None:
        if length == n:
            acc.record(state.current_m, bits)
            return
        for sym in (0, 1):  # 'a' branch first: depth-first order is lexicographic
            state.push_symbol(sym)
            explore(length + 1, bits | (sym << length))
            state.pop_symbol()

    explore(depth, prefix_bits)
    return acc


def dfs_scan(
    n: int,
    *,
    threads: int = 1,
    prefix_depth: int = 8,
    sample_limit: int = 64,
) -> LengthRow:
    """Reference enumeration for a single length via prefix-tree DFS.

    The space is split at ``prefix_depth`` into disjoint subtrees owned by
    independent workers; partial results merge associatively in partition
    order, so the outcome does not depend on ``threads``.
    """
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    if threads < 1:
        raise ValueError(f"threads must be positive, got {threads}")
    depth = max(1, min(prefix_depth, n))
    # Partition prefixes in lexicographic order, first letter pinned to 'a'.
    ext_bits = depth - 1
    prefixes = []
    for key in range(1 << ext_bits):
        bits = 0
        for t in range(ext_bits):
            bits |= ((key >> (ext_bits - 1 - t)) & 1) << (t + 1)
        prefixes.append(bits)

    def run(prefix_bits: int) -> _DfsAccumulator:
        return _dfs_partition(n, prefix_bits, depth, sample_limit)

    if threads == 1:
        parts = [run(p) for p in prefixes]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(run, prefixes))
    total = parts[0]
    for part in parts[1:]:
        total.merge(part)
    counts = {k: 2 * c for k, c in enumerate(total.counts) if c}
    return LengthRow(
        n=n,
        counts=counts,
        max_m=total.max_m,
        max_count=2 * total.max_count,
        sample_words=tuple(total.samples[:sample_limit]),
    )
