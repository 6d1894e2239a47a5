"""Command-line front end.

Machine-readable results go to stdout, diagnostics to stderr.  Exit codes:
0 success, 2 usage or parse error, 3 verification answered "not
conclusive", 4 budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bounds, proofkit, solve
from .core import MatrixFormatError, parse_matrix, serialize_matrix
from .verify import BudgetExceededError, VerifyBudget, verify_fast, verify_oracle

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_AMBIGUOUS = 3
EXIT_BUDGET = 4


def _load_matrix(path: str):
    try:
        return parse_matrix(Path(path).read_bytes())
    except FileNotFoundError:
        raise SystemExit(_usage_error(f"cannot read {path}: no such file"))
    except MatrixFormatError as exc:
        raise SystemExit(_usage_error(f"{path}: {exc}"))


def _usage_error(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_USAGE


def _print_result(result) -> int:
    if result.unique:
        print("MUNCHHAUSEN")
        print(f"signs: {result.outcome.render()}")
        return EXIT_OK
    print("AMBIGUOUS")
    print(f"signs: {result.outcome.render()}")
    print("witness: " + " ".join(str(w) for w in result.witness.weights))
    return EXIT_AMBIGUOUS


def _cmd_verify(args) -> int:
    matrix = _load_matrix(args.file)
    try:
        if args.oracle:
            result = verify_oracle(matrix)
        else:
            result = verify_fast(matrix, VerifyBudget(max_nodes=args.budget))
    except BudgetExceededError as exc:
        print(f"budget exceeded after {exc.nodes} nodes", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        return _usage_error(str(exc))
    return _print_result(result)


def _cmd_solve(args) -> int:
    try:
        config = solve.SolveConfig(jobs=args.jobs, budget=args.budget)
        result = solve.baron(args.n, config)
    except ValueError as exc:
        return _usage_error(str(exc))
    print(f"B({result.n}) = {result.value}")
    print(f"minimality: {result.minimality.value}")
    if args.witness_out:
        Path(args.witness_out).write_text(serialize_matrix(result.witness))
    if result.minimality is solve.Minimality.UPPER_BOUND_ONLY:
        print("budget exhausted before minimality proof", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_sequence(args) -> int:
    try:
        config = solve.SolveConfig(jobs=args.jobs, budget=args.budget)
        results = solve.sequence(args.n_max, config)
    except ValueError as exc:
        return _usage_error(str(exc))
    text = solve.format_bfile(results)
    sys.stdout.write(text)
    if args.bfile:
        Path(args.bfile).write_text(text)
    if any(r.minimality is solve.Minimality.UPPER_BOUND_ONLY for r in results):
        print("budget exhausted for some entries", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_bounds(args) -> int:
    if args.k_max < 0 or args.k_max > bounds.MAX_REPORT_K:
        return _usage_error(f"k_max must be in 0..{bounds.MAX_REPORT_K}")
    print("k\tr_floor\tl_min\tn_lb")
    for k in range(args.k_max + 1):
        r = bounds.bound_report(k)
        print(f"{r.k}\t{r.r_floor}\t{r.l_min}\t{r.n_lb}")
    return EXIT_OK


def _cmd_exclude(args) -> int:
    try:
        verdict = bounds.excluded(args.n, args.k)
    except ValueError as exc:
        return _usage_error(str(exc))
    print("EXCLUDED" if verdict else "NOT-EXCLUDED")
    return EXIT_OK


def _cmd_proof_check(args) -> int:
    matrix = _load_matrix(args.file)
    stab = proofkit.stabilizer(matrix)
    print(f"stabilizer-size: {stab.size}")
    parts = []
    for sign, cls in zip("-0+", stab.sign_classes):
        if cls:
            parts.append(sign + ":" + ",".join(str(i + 1) for i in cls))
    print("sign-classes: " + (" ".join(parts) if parts else "(empty)"))
    try:
        audit = proofkit.audit_injectivity(matrix, limit=args.limit)
    except proofkit.StabilizerLimitError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BUDGET
    if audit.injective:
        print("audit: INJECTIVE")
    else:
        s1, s2 = audit.collision
        print("audit: COLLISION")
        print("sigma1: " + " ".join(str(i + 1) for i in s1.image))
        print("sigma2: " + " ".join(str(i + 1) for i in s2.image))
    return EXIT_OK


def _cmd_counterexample_full(args) -> int:
    try:
        witness = proofkit.counterexample_full(args.k)
    except (ValueError, proofkit.NoEqualSignRowsError) as exc:
        return _usage_error(str(exc))
    line = " ".join(str(w) for w in witness.weights)
    print(f"witness: {line}")
    if args.out:
        Path(args.out).write_text(line + "\n")
    return EXIT_OK


def _cmd_chain(args) -> int:
    try:
        matrix = bounds.chain_construction(args.n)
    except ValueError as exc:
        return _usage_error(str(exc))
    Path(args.out).write_text(serialize_matrix(matrix))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="munch",
        description="Balance-scale verification matrices and the minimum-weighings sequence B(n)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="is a design conclusive for its labeling?")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true", help="exhaustive n! check (n <= 9)")
    p.add_argument("--budget", type=int, default=10**8, help="search node cap")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("solve", help="compute B(n) with minimality certificate")
    p.add_argument("n", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=10**8)
    p.add_argument("--witness-out", metavar="FILE")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("sequence", help="B(1)..B(n_max) as an OEIS b-file")
    p.add_argument("n_max", type=int)
    p.add_argument("--bfile", metavar="FILE")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=10**8)
    p.set_defaults(func=_cmd_sequence)

    p = sub.add_parser("bounds", help="exclusion bound table for k = 0..k_max")
    p.add_argument("k_max", type=int)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("exclude", help="does the exclusion inequality rule out (n, k)?")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=_cmd_exclude)

    p = sub.add_parser("proof-check", help="stabilizer and column-set injectivity audit")
    p.add_argument("file")
    p.add_argument("--limit", type=int, default=proofkit.AUDIT_DEFAULT_LIMIT)
    p.set_defaults(func=_cmd_proof_check)

    p = sub.add_parser("counterexample-full", help="ambiguity witness for the full k x 3^k design")
    p.add_argument("k", type=int)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=_cmd_counterexample_full)

    p = sub.add_parser("chain", help="write the (n-1) x n chain design")
    p.add_argument("n", type=int)
    p.add_argument("--out", metavar="FILE", required=True)
    p.set_defaults(func=_cmd_chain)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
