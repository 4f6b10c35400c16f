"""
Where the gap lands, and how fast the census grows
==================================================

Two asymptotic stories.  First: over complete bipartite graphs the gap is
2 sqrt(m1 m2), and fractional parts of square roots are dense enough that
the gap can be steered into any window [m - gamma, m - delta] below the
order.  Second: the number of connected graphs explodes so fast that a
quadratic-exponential fit anchored at order 9 is the practical way to
budget a census run.
"""

from specgap import density_search, approx_connected_count
from specgap.census import KNOWN_CONNECTED_COUNTS

print("steering the gap into [m - gamma, m - delta]:")
for delta, gamma in ((0.25, 0.36), (0.01, 0.04), (0.70, 0.90)):
    w = density_search(delta, gamma)
    print(f"  delta {delta:.2f} gamma {gamma:.2f}: parts ({w.m1}, {w.m2}) "
          f"order {w.order}  gap {w.gap:.6f}  "
          f"order - gap = {w.order - w.gap:.6f}")
print()

print("connected graph counts, exact vs approximation:")
print(" order |        exact |        approx | rel err")
for m in range(2, 11):
    approx = approx_connected_count(m)
    exact = KNOWN_CONNECTED_COUNTS[m]
    rel = abs(approx - exact) / exact
    print(f"{m:6d} | {exact:12d} | {approx:13.1f} | {rel:7.1%}")
print()
print("an order-11 run would need to stream roughly "
      f"{approx_connected_count(11):.2e} graphs")
