"""The distribution of m over all words of a given length.

Everything here is exact: histograms are integer counts summing to 2^n,
averages are rationals S(n)/2^n, and the counting inequality against the
palindrome-product bound a_k is decided on squared integers so that the
irrational factor sqrt(2) never enters a float comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .asymptotics import a_bound_squared
from .enumeration import PACKED_LIMIT, dfs_scan, scan_lengths

__all__ = [
    "MHistogram",
    "AverageRow",
    "SubadditivityReport",
    "CountingBoundReport",
    "histogram",
    "histogram_rows",
    "k_bar",
    "k_bar_rows",
    "subadditivity_check",
    "counting_bound_check",
]


@dataclass(frozen=True)
class MHistogram:
    """Exact counts x_k = #{w : len(w) = n, m(w) = k}."""

    n: int
    counts: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def s(self) -> int:
        """S(n) = sum of m over all words of length n."""
        return sum(k * c for k, c in self.counts.items())

    @property
    def max_m(self) -> int:
        return max(self.counts)


@dataclass(frozen=True)
class AverageRow:
    """Exact average asymmetry of a random word of length n."""

    n: int
    s: int

    @property
    def kbar(self) -> Fraction:
        return Fraction(self.s, 1 << self.n)

    @property
    def kbar_num(self) -> int:
        return self.kbar.numerator

    @property
    def kbar_den_pow2(self) -> int:
        return self.kbar.denominator.bit_length() - 1

    @property
    def kbar_text(self) -> str:
        """Two decimals, round half to even."""
        cents = round(self.kbar * 100)
        return f"{cents // 100}.{cents % 100:02d}"

    @property
    def ratio(self) -> Fraction:
        return self.kbar / self.n

    @property
    def ratio_text(self) -> str:
        """Four decimals, round half to even."""
        units = round(self.ratio * 10_000)
        return f"{units // 10_000}.{units % 10_000:04d}"


def _check_args(n: int, threads: int) -> None:
    if not 1 <= n <= PACKED_LIMIT:
        raise ValueError(f"length must be in 1..{PACKED_LIMIT}, got {n}")
    if threads < 1:
        raise ValueError(f"threads must be positive, got {threads}")


def histogram(n: int, threads: int = 1, *, backend: str = "vectorized") -> MHistogram:
    """Exact histogram of m over all 2^n words of length n."""
    _check_args(n, threads)
    if backend == "dfs":
        row = dfs_scan(n, threads=threads)
    elif backend == "vectorized":
        row = scan_lengths(n)[n]
    else:
        raise ValueError(f"unknown backend {backend!r}")
    return MHistogram(n=n, counts=dict(sorted(row.counts.items())))


def histogram_rows(n_max: int, threads: int = 1) -> list[MHistogram]:
    """Histograms for every length 1..n_max from one enumeration pass."""
    _check_args(n_max, threads)
    rows = scan_lengths(n_max)
    return [MHistogram(n=n, counts=dict(sorted(rows[n].counts.items()))) for n in range(1, n_max + 1)]


def k_bar(n: int, threads: int = 1, *, backend: str = "vectorized") -> AverageRow:
    """Exact average S(n)/2^n."""
    hist = histogram(n, threads, backend=backend)
    return AverageRow(n=n, s=hist.s)


def k_bar_rows(n_max: int, threads: int = 1) -> list[AverageRow]:
    rows = scan_lengths(n_max)
    return [AverageRow(n=n, s=rows[n].s) for n in range(1, n_max + 1)]


@dataclass(frozen=True)
class SubadditivityReport:
    """Pairwise subadditivity of the exact averages, plus the infimum ratio
    over the computed range (an upper bound for the limit of kbar(n)/n)."""

    n_max: int
    violations: tuple[tuple[int, int], ...]
    min_ratio: Fraction
    min_ratio_n: int

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def pairs_checked(self) -> int:
        return sum(total // 2 for total in range(2, self.n_max + 1))


def subadditivity_check(n_max: int, threads: int = 1) -> SubadditivityReport:
    """Verify kbar(i+j) <= kbar(i) + kbar(j) for all i+j <= n_max, exactly."""
    if not 2 <= n_max <= PACKED_LIMIT:
        raise ValueError(f"n_max must be in 2..{PACKED_LIMIT}, got {n_max}")
    rows = k_bar_rows(n_max, threads)
    kbar = {row.n: row.kbar for row in rows}
    violations = []
    for total in range(2, n_max + 1):
        for i in range(1, total // 2 + 1):
            if kbar[total] > kbar[i] + kbar[total - i]:
                violations.append((i, total - i))
    best = min(rows, key=lambda row: (row.ratio, row.n))
    return SubadditivityReport(
        n_max=n_max,
        violations=tuple(violations),
        min_ratio=best.ratio,
        min_ratio_n=best.n,
    )


@dataclass(frozen=True)
class CountingBoundEntry:
    k: int
    cumulative: int  # x_k + x_{k-2} + x_{k-4} + ...
    holds: bool


@dataclass(frozen=True)
class CountingBoundReport:
    n: int
    entries: tuple[CountingBoundEntry, ...]

    @property
    def ok(self) -> bool:
        return all(e.holds for e in self.entries)


def counting_bound_check(n: int, threads: int = 1) -> CountingBoundReport:
    """Check x_k + x_{k-2} + ... <= a_k = C(n-1, k-1) 2^((n+k)/2) for every
    k up to the enumerated maximum.

    The parity-cumulated sum counts words splittable into exactly k
    palindromes (a short block can always be re-split into three), so it
    is the quantity the product bound a_k actually dominates; this needs
    the maximum below n/2, hence n >= 9.  Compared via squared integers.
    """
    if n < 9:
        raise ValueError(f"the counting bound is asserted only for n >= 9, got {n}")
    hist = histogram(n, threads)
    entries = []
    for k in range(1, hist.max_m + 1):
        cumulative = sum(hist.counts.get(j, 0) for j in range(k, 0, -2))
        holds = cumulative * cumulative <= a_bound_squared(n, k)
        entries.append(CountingBoundEntry(k=k, cumulative=cumulative, holds=holds))
    return CountingBoundReport(n=n, entries=tuple(entries))
