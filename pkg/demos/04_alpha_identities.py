"""
Alpha-ratio sums
================

With alpha = e(m/k), sums over reduced m of alpha^t/(alpha - 1)^d reduce to
Jordan totients.  Some entries also carry a near-miss variant with one
wrong coefficient; the variant fails by many orders of magnitude.
"""

from lmeansq.alpha import VARIANTS, alpha_identity_suite, check_identity

k = 35
recs = alpha_identity_suite(k)
print(f"k = {k}: {sum(r.passed for r in recs)}/{len(recs)} identities hold")

for ident in VARIANTS:
    good = check_identity(ident, k)
    bad = check_identity(ident, k, variant=True)
    print(f"{ident.id:<14} corrected err {good.abs_err:.1e}   variant err {bad.abs_err:.1e}   ({ident.note})")
