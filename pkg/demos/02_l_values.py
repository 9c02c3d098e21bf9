"""
Three ways to L(3, chi)
=======================

The truncated Dirichlet series, the Gauss-sum closed form, and the general
Bernoulli form should agree to far below the series tail bound.
"""

from lmeansq.characters import characters
from lmeansq.lfunc import default_config, general_finite_form, l3_closed, l_series

k = 7
cfg = default_config(3, k)
print(f"series truncated at N = {cfg.N}, tail <= {cfg.tail_bound(3):.1e}")

for chi in characters(k):
    if not chi.is_odd:
        continue
    a = l_series(3, chi, cfg)
    b = l3_closed(chi)
    c = general_finite_form(3, chi)
    print(f"chi {chi.label()}: |L| = {abs(b):.15f}   |series - closed| = {abs(a - b):.1e}   "
          f"|general - closed| = {abs(c - b):.1e}")
