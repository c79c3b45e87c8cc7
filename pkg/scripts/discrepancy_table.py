"""Write every n <= N where the conjecture and the Boeroeczky-Ruzsa criterion disagree to CSV.

    python scripts/discrepancy_table.py 1541551 discrepancies.csv
"""

import csv
import sys
import time

from wegner.params import decompose
from wegner.search import cross_validate


def main(n_max: int, path: str) -> None:
    t = time.perf_counter()
    cv = cross_validate(n_max)
    with open(path, "w", newline="") as fh:
        out = csv.writer(fh)
        out.writerow(["n", "a", "b", "c", "conjecture", "boeroeczky_ruzsa", "oracle"])
        for d in cv.discrepancies:
            p = decompose(d.n)
            out.writerow([d.n, p.a, p.b, p.c, int(d.conjecture), int(d.boeroeczky_ruzsa), int(d.oracle_exceptional)])
    print(
        f"{len(cv.discrepancies)} discrepancies up to {n_max} "
        f"({len(cv.conjecture_only)} conjecture-only, {len(cv.conjecture_missed)} missed) "
        f"in {time.perf_counter() - t:.1f}s -> {path}"
    )


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 1541551, sys.argv[2] if len(sys.argv) > 2 else "discrepancies.csv")
