"""Enumerate trees, then tally game chromatic numbers by order.

Counts follow the known sequence 1, 1, 1, 2, 3, 6, 11, 23, ... and the first
tree needing four colors shows up at 14 vertices.
"""

import sys
from collections import Counter

from gamechrom import classify, trees_of_order

top = int(sys.argv[1]) if len(sys.argv) > 1 else 12
print(" n  trees  chi=1  chi=2  chi=3  chi=4")
for n in range(1, top + 1):
    tally = Counter(classify(t).value for t in trees_of_order(n))
    print(f"{n:2d}  {sum(tally.values()):5d}" + "".join(f"  {tally[k]:5d}" for k in (1, 2, 3, 4)))
