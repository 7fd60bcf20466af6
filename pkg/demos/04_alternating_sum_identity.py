"""
The alternating q-binomial sum collapses
========================================

The row-total constant-term formula owes its simplicity to one identity:
an alternating sum of Gaussian binomials that telescopes to a single
monomial -- or to nothing at all, in one residue class mod 3.
"""

from sqzero import alternating_qbinomial_sum, alternating_qbinomial_sum_closed

print("sum_i (-1)^i q^(i(i-1)/2) qbinomial(m-i, i)")
print("=" * 52)

###############################################################################
# The identity, term by term
# --------------------------
# For m = 2 (mod 3) everything cancels; otherwise a lone signed monomial
# q^(m(m-1)/6) survives.

print(f"{'m':>3}  {'expanded sum':>14}  {'closed form':>14}")
for m in range(16):
    lhs = alternating_qbinomial_sum(m)
    rhs = alternating_qbinomial_sum_closed(m)
    assert lhs == rhs
    print(f"{m:3d}  {str(lhs):>14}  {str(rhs):>14}")

###############################################################################
# Stress range
# ------------
# The expanded sums involve hundreds of Gaussian-binomial terms by m = 60;
# exact arithmetic keeps the comparison literal.

for m in range(61):
    assert alternating_qbinomial_sum(m) == alternating_qbinomial_sum_closed(m)
print("\nidentity verified exactly for every m up to 60")

survivors = [m for m in range(61) if alternating_qbinomial_sum_closed(m)]
print(f"m with a surviving monomial: {survivors[:10]} ... (all m != 2 mod 3)")
