"""Count closures, boundaries and topologies for n = 0..4 by three routes."""

import argparse
import time

from boundary_axioms.search import enumerate_boundaries, enumerate_closures, enumerate_topologies


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()
    print(f"{'n':>2} {'closures':>9} {'boundaries':>10} {'topologies':>10} {'space':>12} {'seconds':>8}")
    for n in range(args.max_n + 1):
        t0 = time.perf_counter()
        c = enumerate_closures(n)
        b = enumerate_boundaries(n)
        t = len(enumerate_topologies(n))
        dt = time.perf_counter() - t0
        print(f"{n:>2} {c.matches:>9} {b.matches:>10} {t:>10} {b.space_size:>12} {dt:>8.2f}")
        if not c.matches == b.matches == t:
            raise SystemExit(f"count mismatch at n={n}")


if __name__ == "__main__":
    main()
