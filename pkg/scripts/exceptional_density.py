"""Count exceptional numbers per block of n, for each criterion.

    python scripts/exceptional_density.py 2000000 100000
"""

import sys

from wegner.search import enumerate_exceptional

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 2_000_000
block = int(sys.argv[2]) if len(sys.argv) > 2 else 100_000

found = {c: enumerate_exceptional(n_max, c) for c in ("boeroeczky_ruzsa", "wegner_conjecture")}
print(f"{'block':>20} {'br':>8} {'wegner':>8}")
for lo in range(1, n_max + 1, block):
    hi = min(lo + block - 1, n_max)
    counts = [sum(lo <= n <= hi for n in found[c]) for c in found]
    print(f"{lo:>9}-{hi:<10} {counts[0]:>8} {counts[1]:>8}")
