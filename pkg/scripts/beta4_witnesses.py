"""List every operator on n points satisfying B1, B2, B3, B5 but not B4.

The published d4 also fails B2; these are replacements that fail B4 alone.
"""

import argparse

from boundary_axioms.axioms import BETA, AxiomId, check_axiom
from boundary_axioms.search import SearchSpec, find_witnesses
from boundary_axioms.setcore import render_subset, serialize


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--limit", type=int, default=None)
    args = ap.parse_args()
    spec = SearchSpec(args.n, frozenset(BETA) - {AxiomId.B4}, frozenset({AxiomId.B4}), args.limit)
    found, stats = find_witnesses(spec)
    for op in found:
        v = check_axiom(op, AxiomId.B4)[0]
        print(serialize(op))
        print(f"    B4 fails at A={render_subset(v.witness_a)}, B={render_subset(v.witness_b)}")
    print(f"{len(found)} witnesses; examined {stats.candidates_examined} of {stats.space_size}"
          f"{' (exhausted)' if stats.exhausted else ''}")


if __name__ == "__main__":
    main()
