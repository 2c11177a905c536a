"""Command-line interface.

Exit codes: 0 success / axioms hold, 1 semantic failure (violations, or no
witness where one was requested), 2 input error, 3 discrepancy with a
published claim.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .axioms import BETA, AxiomId, AxiomSystem, check_system
from .gallery import DISCREPANCY, verify_gallery
from .search import (
    PRUNED_CAP,
    TOPOLOGY_CAP,
    CapExceededError,
    SearchSpec,
    enumerate_boundaries,
    enumerate_closures,
    enumerate_topologies,
    find_witnesses,
    independence_search,
)
from .setcore import ParseError, parse, serialize
from .transforms import NotAClosureError, closed_sets, phi, psi
from .verify import render, run_verification

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_DISCREPANCY = 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str):
    text = _read(path)
    try:
        return parse(text)
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(obj) -> None:
    print(json.dumps(obj, ensure_ascii=False, separators=(",", ":")))


def _axiom_list(text: str) -> frozenset[AxiomId]:
    if not text:
        return frozenset()
    try:
        return frozenset(AxiomId.parse(t) for t in text.split(","))
    except ValueError as exc:
        raise InputError(str(exc)) from None


# ---------------------------------------------------------------------------


def cmd_check(args) -> int:
    op = _load(args.file)
    systems = ["delta", "beta"] if args.system == "both" else [args.system]
    reports = [check_system(op, s, name=args.file) for s in systems]
    if args.json:
        _emit([r.to_dict(all_witnesses=args.all_witnesses) for r in reports])
    else:
        print("\n\n".join(r.render(args.one_based, args.all_witnesses) for r in reports))
    return EXIT_OK if all(r.holds for r in reports) else EXIT_FAIL


def cmd_convert(args) -> int:
    op = _load(args.file)
    if args.phi:
        print(serialize(phi(op)))
    elif args.psi:
        print(serialize(psi(op)))
    else:
        try:
            fam = closed_sets(op)
        except NotAClosureError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAIL
        print(fam.to_json())
    return EXIT_OK


def cmd_gallery(args) -> int:
    results = verify_gallery()
    if args.json:
        _emit([r.to_dict() for r in results])
    else:
        blocks = []
        for r in results:
            e = r.entry
            lines = [
                f"{e.label}: {r.status}",
                f"  table    {serialize(e.operator)}",
                "  claimed  " + ",".join(sorted(a.value for a in e.claimed_violations)),
                "  computed " + ",".join(sorted(a.value for a in e.computed_violations)),
            ]
            for a in sorted(e.computed_violations, key=lambda a: a.value):
                st = r.report.statuses[a]
                lines.append(f"    {a.value}: {st.first.describe(args.one_based)} ({st.count} total)")
            for note in e.notes:
                lines.append(f"  note: {note}")
            blocks.append("\n".join(lines))
        print("\n\n".join(blocks))
    return EXIT_DISCREPANCY if any(r.status == DISCREPANCY for r in results) else EXIT_OK


def cmd_enumerate(args) -> int:
    n = args.n
    cap = TOPOLOGY_CAP if args.what == "topologies" else PRUNED_CAP
    if not 0 <= n <= cap:
        raise InputError(f"--n must satisfy 0 <= n <= {cap} for {args.what}")
    if args.what == "topologies":
        items = [f.to_json() for f in enumerate_topologies(n)]
        oracle = enumerate_closures(n).matches
    else:
        found = []
        fn = enumerate_closures if args.what == "closures" else enumerate_boundaries
        fn(n, found.append)
        items = [serialize(op) for op in found]
        oracle = len(enumerate_topologies(n))
    count = len(items)
    if args.json:
        out = {"what": args.what, "n": n, "count": count, "oracle": oracle}
        if not args.count_only:
            out["items"] = [json.loads(i) for i in items]
        _emit(out)
    else:
        if not args.count_only:
            for i in items:
                print(i)
        print(f"{count} (oracle: {oracle})")
    if count != oracle:
        print(f"error: count {count} disagrees with oracle {oracle}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_independence(args) -> int:
    if args.require or args.forbid:
        if args.n is None:
            raise InputError("--require/--forbid need --n")
        try:
            spec = SearchSpec(args.n, _axiom_list(args.require), _axiom_list(args.forbid), args.limit)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        found, stats = find_witnesses(spec)
        if args.json:
            _emit({"witnesses": [json.loads(serialize(w)) for w in found], "stats": stats.to_dict()})
        else:
            for w in found:
                print(serialize(w))
            st = stats.to_dict()
            print(
                f"{st['matches']} witness(es); candidates examined "
                f"{st['candidates_examined']} of {st['space_size']}"
                f"{' (exhausted)' if st['exhausted'] else ''}"
            )
        return EXIT_OK if found else EXIT_FAIL

    if not 0 <= args.max_n <= PRUNED_CAP:
        raise InputError(f"--max-n must satisfy 0 <= n <= {PRUNED_CAP}")
    axioms = sorted(_axiom_list(args.axiom), key=lambda a: a.value) if args.axiom else list(BETA)
    results = [independence_search(a, args.max_n, limit=args.limit or 1) for a in axioms]
    if args.json:
        _emit([r.to_dict() for r in results])
    else:
        for r in results:
            if r.found:
                print(f"{r.axiom.value}: witness at n={r.found_n}")
                for w in r.witnesses:
                    print(f"  {serialize(w)}")
            else:
                last = r.stats[-1]
                print(
                    f"{r.axiom.value}: no witness for n <= {r.max_n}; n={last.n} exhausted, "
                    f"candidates examined {last.candidates_examined} of {last.space_size}"
                )
    return EXIT_OK if all(r.found for r in results) else EXIT_FAIL


def cmd_verify_paper(args) -> int:
    if not 0 <= args.max_n <= PRUNED_CAP:
        raise InputError(f"--max-n must satisfy 0 <= n <= {PRUNED_CAP}")
    v = run_verification(args.max_n)
    if args.json:
        _emit(v.to_dict())
    else:
        print(render(v, args.one_based))
    return EXIT_OK if v.all_confirmed else EXIT_DISCREPANCY


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boundary-axioms",
        description="Check closure and boundary axioms on finite operator tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, one_based=True):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if one_based:
            p.add_argument("--one-based", action="store_true",
                           help="render elements as 1..n instead of 0..n-1")

    p = sub.add_parser("check", help="check an operator file against an axiom system")
    p.add_argument("file", help="operator file, or - for standard input")
    p.add_argument("--system", choices=["delta", "beta", "both"], default="both")
    p.add_argument("--all-witnesses", action="store_true", help="list every violation")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("convert", help="apply phi or psi, or list closed sets")
    p.add_argument("file", help="operator file, or - for standard input")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--phi", action="store_true", help="A -> op(A) ∩ op(X∖A)")
    g.add_argument("--psi", action="store_true", help="A -> A ∪ op(A)")
    g.add_argument("--closed-sets", action="store_true", help="fixed points of a closure")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("gallery", help="claimed vs computed violations of d1..d5")
    common(p)
    p.set_defaults(func=cmd_gallery)

    p = sub.add_parser("enumerate", help="list or count closures, boundaries or topologies")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--what", choices=["closures", "boundaries", "topologies"], default="closures")
    p.add_argument("--count-only", action="store_true")
    common(p, one_based=False)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("independence", help="search for independence witnesses")
    p.add_argument("--axiom", default="", help="comma-separated axioms (default B1..B5)")
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--n", type=int, default=None, help="universe size for a custom search")
    p.add_argument("--require", default="", help="comma-separated axioms that must hold")
    p.add_argument("--forbid", default="", help="comma-separated axioms that must fail")
    common(p, one_based=False)
    p.set_defaults(func=cmd_independence)

    p = sub.add_parser("verify-paper", help="verify every published claim, report errata")
    p.add_argument("--max-n", type=int, default=3)
    common(p)
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, CapExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
