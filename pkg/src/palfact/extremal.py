"""Worst-case asymmetry: K(n) = max m(w) over words of length n.

The closed form floor(n/6) + floor((n+4)/6) + 1 holds for every length
except 11, where the single exceptional orbit of aababbaabab pushes the
maximum to 5.  This module enumerates K(n) exactly, lists the maximizers
grouped into symmetry orbits, and checks the closed form against the
enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .enumeration import PACKED_LIMIT, LengthRow, dfs_scan, scan_lengths
from .words import orbit, parse_word, word_from_bits

__all__ = [
    "ExtremalRow",
    "Orbit",
    "Theorem1Report",
    "k_formula",
    "k_max",
    "k_max_rows",
    "worst_words",
    "verify_theorem1",
]

SAMPLE_CAP = 16
EXCEPTIONAL_LENGTH = 11
EXCEPTIONAL_K = 5


def k_formula(n: int) -> int:
    """Closed form for K(n); the length-11 exception is built in."""
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    if n == EXCEPTIONAL_LENGTH:
        return EXCEPTIONAL_K
    return n // 6 + (n + 4) // 6 + 1


@dataclass(frozen=True)
class ExtremalRow:
    """One row of the K table: the maximum, how many words attain it, and
    the lexicographically first orbit representatives among them."""

    n: int
    k: int
    maximizer_count: int
    sample_maximizers: tuple[str, ...]


@dataclass(frozen=True)
class Orbit:
    """A symmetry orbit (letter swap and reversal), sorted by text."""

    words: tuple[str, ...]

    @property
    def representative(self) -> str:
        return self.words[0]

    @property
    def size(self) -> int:
        return len(self.words)


def _canonical_samples(sample_words: tuple[str, ...], cap: int) -> tuple[str, ...]:
    reps = {orbit(parse_word(w))[0].text for w in sample_words}
    return tuple(sorted(reps)[:cap])


def _row_from_scan(row: LengthRow, sample_cap: int) -> ExtremalRow:
    return ExtremalRow(
        n=row.n,
        k=row.max_m,
        maximizer_count=row.max_count,
        sample_maximizers=_canonical_samples(row.sample_words, sample_cap),
    )


def _check_args(n: int, threads: int) -> None:
    if not 1 <= n <= PACKED_LIMIT:
        raise ValueError(f"length must be in 1..{PACKED_LIMIT}, got {n}")
    if threads < 1:
        raise ValueError(f"threads must be positive, got {threads}")


def k_max(n: int, threads: int = 1, *, backend: str = "vectorized", sample_cap: int = SAMPLE_CAP) -> ExtremalRow:
    """Exact K(n) by enumerating all 2^n words (letter-swap reduced).

    ``backend="dfs"`` runs the reference prefix-tree search instead; both
    return identical rows and neither depends on ``threads``.
    """
    _check_args(n, threads)
    # Covering 4x the sample cap below guarantees the cap lexicographically
    # first orbit representatives are all present among the raw samples.
    limit = 4 * sample_cap
    if backend == "dfs":
        row = dfs_scan(n, threads=threads, sample_limit=limit)
    elif backend == "vectorized":
        row = scan_lengths(n, sample_limit=limit)[n]
    else:
        raise ValueError(f"unknown backend {backend!r}")
    return _row_from_scan(row, sample_cap)


def k_max_rows(n_max: int, threads: int = 1, *, sample_cap: int = SAMPLE_CAP) -> list[ExtremalRow]:
    """All rows K(1)..K(n_max) from a single enumeration pass."""
    _check_args(n_max, threads)
    rows = scan_lengths(n_max, sample_limit=4 * sample_cap)
    return [_row_from_scan(rows[n], sample_cap) for n in range(1, n_max + 1)]


def worst_words(n: int, threads: int = 1) -> list[Orbit]:
    """Every word attaining K(n), grouped into symmetry orbits.

    Orbits are sorted by their representative (the lexicographically least
    member); orbit sizes are computed, never assumed.
    """
    _check_args(n, threads)
    row = scan_lengths(n, keep_max_words={n})[n]
    assert row.max_words_bits is not None
    orbits: dict[str, Orbit] = {}
    for bits in row.max_words_bits:
        images = orbit(word_from_bits(bits, n))
        rep = images[0].text
        if rep not in orbits:
            orbits[rep] = Orbit(tuple(im.text for im in images))
    return [orbits[rep] for rep in sorted(orbits)]


@dataclass(frozen=True)
class Theorem1Report:
    """Closed form versus enumeration, for every length up to n_max."""

    n_max: int
    rows: tuple[ExtremalRow, ...]
    mismatches: tuple[tuple[int, int, int], ...]  # (n, enumerated, formula)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    @property
    def checked(self) -> int:
        return len(self.rows)


def verify_theorem1(n_max: int, threads: int = 1) -> Theorem1Report:
    """Check k_formula against the enumerated maximum for all n <= n_max."""
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    rows = tuple(k_max_rows(n_max, threads)) if n_max else ()
    mismatches = tuple(
        (row.n, row.k, k_formula(row.n)) for row in rows if row.k != k_formula(row.n)
    )
    return Theorem1Report(n_max=n_max, rows=rows, mismatches=mismatches)
