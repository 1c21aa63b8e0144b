"""Which products of two adjacent t-transforms keep sorted vectors sorted."""
import numpy as np

from passivity_lab.ttransforms import ordered_product_passive, product_passive_region

grid = np.round(np.linspace(0, 1, 21), 12)
print("T1 T2 passive (rows t, columns s):")
for t in grid[::2]:
    print(f"{t:4.1f} " + "".join("#" if ordered_product_passive(t, s)[0] else "." for s in grid))

# one ordering can be passive with only one factor passive
print("t=0.5, s=0.4:", ordered_product_passive(0.5, 0.4))
print("closed form :", product_passive_region(0.5, 0.4))

# both orderings together need both factors passive
both = all(all(ordered_product_passive(t, s)) == (t >= 0.5 and s >= 0.5) for t in grid for s in grid)
print("both passive iff t, s >= 1/2:", both)
