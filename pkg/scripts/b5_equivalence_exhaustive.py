"""B5p holds iff B5 holds, over every one of the 8^8 operator tables on 3 points.

Slow (minutes); the test suite covers n <= 2 exhaustively and n = 3, 4 by sampling.
"""

import itertools
import sys
import time

from boundary_axioms.axioms import AxiomId, check_axiom
from boundary_axioms.setcore import OperatorTable, Universe


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    u = Universe(n)
    t0 = time.perf_counter()
    total = exceptions = 0
    for values in itertools.product(range(u.size), repeat=u.size):
        op = OperatorTable(u, values)
        total += 1
        if (not check_axiom(op, AxiomId.B5p)) != (not check_axiom(op, AxiomId.B5)):
            exceptions += 1
            print("exception:", values)
    print(f"n={n}: {total} tables, {exceptions} exceptions, {time.perf_counter() - t0:.0f}s")
    return 1 if exceptions else 0


if __name__ == "__main__":
    sys.exit(main())
