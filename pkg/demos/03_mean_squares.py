"""
Mean squares over a parity class
================================

The sum of |L(3, chi)|^2 over odd characters is an exact rational multiple
of pi^6; likewise |L(4, chi)|^2 over even characters and pi^8.  Here the
character-by-character sums are compared with those closed forms.
"""

from lmeansq.exact_arith import format_rational
from lmeansq.lfunc import check_mean_square, table_rational

print(" k   r  exact part              closed              brute (series)      rel err")
for k in (3, 4, 12, 30, 59, 60):
    for r in (3, 4):
        res = check_mean_square(r, k, oracle="series")
        print(f"{k:>2}   {r}  {format_rational(table_rational(r, k)):<22}  {res.closed:<18.15g}  "
              f"{res.brute:<18.15g}  {res.rel_err:.1e}")
