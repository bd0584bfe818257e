"""Command line entry point: ``primemub {generate,verify,classes,sl2,crosscheck}``.

Exit codes: 0 success, 1 verification failed, 2 precondition violated
(e.g. composite N where a prime is required), 3 malformed input file.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time

import numpy as np

from . import __version__
from .basisfile import BasisFile, BasisFileError, read, write
from .errors import MubError, NotPrimeError
from .mub import (
    ORTHONORMAL_TOL,
    basis_equivalent,
    basis_matching,
    build_formula_bases,
    build_operator_bases,
    exact_orthonormal,
    exact_unbiased_bases,
    vector_deviations,
)
from .phasespace import class_partition, sl2_enumerate
from .unitary import check_action, check_homomorphism
from .zmod import require_prime

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PRECONDITION = 2
EXIT_MALFORMED = 3

BUILDERS = {"formula": build_formula_bases, "operator": build_operator_bases}


def cmd_generate(args) -> int:
    coll = BUILDERS[args.method](args.n)
    bf = BasisFile.from_collection(coll)
    if args.out in (None, "-"):
        json.dump(bf.to_json(), sys.stdout, indent=1)
        sys.stdout.write("\n")
    else:
        write(bf, args.out)
        print(f"wrote {len(coll)} {bf.representation} bases of dimension {args.n} to {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        bf = read(args.input)
    except BasisFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    n = bf.dimension
    bases = bf.complex_bases()
    k = len(bases)
    print(f"dimension N={n}, {k} bases, representation={bf.representation}, tol={args.tol:g}")
    if k > n + 1:
        print(f"note: {k} bases exceed the maximum N+1={n + 1} of any unbiased collection")

    ok = True
    for idx, b in enumerate(bases):
        dev = b.gram_deviation()
        good = dev < args.tol
        ok &= good
        print(f"basis {idx:3d}  orthonormality dev {dev:.3e}  {'ok' if good else 'FAIL'}")

    print(f"{'pair':>9}  {'max | |<u|v>| - 1/sqrt(N) |':>28}  status")
    for r in range(k):
        for s in range(r + 1, k):
            devs = vector_deviations(bases[r], bases[s])
            worst = float(devs.max())
            good = worst < args.tol
            ok &= good
            print(f"({r:3d},{s:3d})  {worst:28.3e}  {'PASS' if good else 'FAIL'}")
            if args.full:
                for u in range(n):
                    for v in range(n):
                        print(f"    vec ({u},{v})  {devs[u, v]:.3e}")

    exact_ok = True
    if bf.representation == "exact":
        exact_ok = all(exact_orthonormal(b) for b in bf.bases)
        if not exact_ok:
            print("exact orthonormality fails")
        for r in range(k):
            for s in range(r + 1, k):
                pair_ok = bool(np.all(exact_unbiased_bases(bf.bases[r], bf.bases[s])))
                exact_ok &= pair_ok
                if not pair_ok:
                    print(f"exact test fails on pair ({r},{s})")
        print("EXACT-PASS" if exact_ok else "EXACT-FAIL")

    passed = ok and exact_ok
    print("PASS" if passed else "FAIL")
    return EXIT_OK if passed else EXIT_FAIL


def cmd_classes(args) -> int:
    parts = class_partition(args.n)
    print(f"N={args.n}: {len(parts)} classes of {args.n - 1} points each")
    for label, members in parts.items():
        print(f"{label!r:>10} = {{{', '.join(repr(p) for p in members)}}}")
    return EXIT_OK


def cmd_sl2(args) -> int:
    n = args.n
    require_prime(n, "sl2")
    if args.order:
        print(n * (n * n - 1))
    if args.list:
        if n > 7:
            print("error: --list is limited to N <= 7", file=sys.stderr)
            return EXIT_PRECONDITION
        group = sl2_enumerate(n)
        for m in group:
            (a, b), (c, d) = m.rows()
            print(f"[[{a},{b}],[{c},{d}]]")
        print(f"{len(group)} matrices")
    if args.check_phi:
        rng = random.Random(args.seed)
        hom = check_homomorphism(n, args.samples, rng)
        acts = check_action(n, args.samples, rng)
        print(f"homomorphism identities verified: {hom}")
        print(f"action-compatibility identities verified: {acts}")
    return EXIT_OK


def _labelled_match(x, y, label: tuple[int, int]) -> bool:
    bx = [b for b, lab in zip(x.bases, x.labels) if lab is not None and lab.as_tuple() == label]
    by = [b for b, lab in zip(y.bases, y.labels) if lab is not None and lab.as_tuple() == label]
    return len(bx) == len(by) == 1 and basis_equivalent(bx[0], by[0])


def cmd_crosscheck(args) -> int:
    n = args.n
    start = time.perf_counter()
    formula = build_formula_bases(n)
    operator = build_operator_bases(n)
    ok = True
    for coll in (formula, operator):
        dev = coll.verify(args.tol)
        worst = float(dev.max())
        print(f"{coll.method:>8}: {len(coll)} bases, max deviation {worst:.3e}  "
              f"{'PASS' if coll.is_maximal else 'FAIL'}")
        ok &= coll.is_maximal

    print("matches (formula basis -> operator basis, up to permutation and phases):")
    for r, fb in enumerate(formula.bases):
        hits = [s for s, ob in enumerate(operator.bases) if basis_equivalent(fb, ob)]
        label = formula.labels[r]
        target = ", ".join(f"{s} {operator.labels[s]!r}" for s in hits) or "none"
        print(f"  formula {r:3d} {label!r:>10} -> {target}")

    canon = _labelled_match(formula, operator, (1, 0))
    fourier = _labelled_match(formula, operator, (0, 1))
    print(f"canonical matched: {canon}; Fourier matched: {fourier}")
    if n == 2:
        perm = [basis_matching(fb, ob) is not None
                for fb, ob in zip(formula.bases, operator.bases)]
        print(f"operator chain reproduces the three N=2 bases: {all(perm)}")
    print(f"elapsed {time.perf_counter() - start:.2f} s")
    return EXIT_OK if ok and canon and fourier else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primemub",
        description="Construct and verify maximal sets of mutually unbiased bases in prime dimension.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write N+1 mutually unbiased bases to a JSON file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=sorted(BUILDERS), default="operator")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check orthonormality and pairwise unbiasedness of a basis file")
    p.add_argument("input")
    p.add_argument("--tol", type=float, default=ORTHONORMAL_TOL)
    p.add_argument("--full", action="store_true", help="print every vector pair")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classes", help="print the partition of the punctured phase space")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("sl2", help="inspect SL(2, Z_N)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", action="store_true")
    p.add_argument("--list", action="store_true")
    p.add_argument("--check-phi", action="store_true")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sl2)

    p = sub.add_parser("crosscheck", help="compare the formula and operator constructions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol", type=float, default=ORTHONORMAL_TOL)
    p.set_defaults(func=cmd_crosscheck)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotPrimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except BasisFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except MubError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
