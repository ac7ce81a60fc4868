"""The average measure kbar(n) = 2^-n sum m(w) over words of length n.

All counts are exact integers and all averages exact rationals; the
two-decimal column reproduces the published table.  Subadditivity of
kbar makes kbar(n)/n converge to its infimum, so the smallest computed
ratio is already a valid upper bound for the limit.
"""

from palfact import histogram, k_bar_rows, subadditivity_check

# The histogram underneath the average: x_k = number of words with m = k.
hist = histogram(10)
print("x_k at n=10:", hist.counts, " total", hist.total, "= 2^10")

rows = k_bar_rows(21)
print()
print(" n         S(n)   kbar   kbar/n")
for row in rows:
    print(f"{row.n:>2} {row.s:>12}   {row.kbar_text}   {row.ratio_text}")

# Exact rational identity at n=21 (reduced to a power-of-two denominator):
row21 = rows[20]
print()
print(f"kbar(21) = {row21.kbar_num}/2^{row21.kbar_den_pow2} exactly")

# Pairwise subadditivity over the computed range, in exact arithmetic:
report = subadditivity_check(21)
print(f"subadditive over {report.pairs_checked} pairs: {report.ok}")
print(f"min ratio at n={report.min_ratio_n}: {report.min_ratio} = {float(report.min_ratio):.6f}")
