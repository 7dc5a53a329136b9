"""Command-line front end: run verification suites or export a basis.

Exit codes: 0 when every check passes (skips allowed), 1 when any check
fails, 2 on a configuration error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .bases import basis_export_text
from .exact_gamma import ExactnessError
from .operators import fourth_order_eigenvalue
from .verify import SUITE_NAMES, STATUS_FAIL, SuiteConfig, report_lines, run_suites


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected a rational like '1/2', got {text!r}: {exc}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthoball",
        description=(
            "Verify, in exact rational arithmetic, the orthogonality and "
            "differential identities of the ball bases, or export a basis."
        ),
    )
    parser.add_argument("--dim", type=int, default=2, help="ambient dimension d >= 2")
    parser.add_argument("--mu", type=_fraction, default=Fraction(1, 2),
                        help="ball weight exponent parameter, rational > -1/2 (default 1/2)")
    parser.add_argument("--lambda", dest="lam", type=_fraction, default=None,
                        help="sphere coupling; mutually exclusive with --M")
    parser.add_argument("--M", dest="mass", type=_fraction, default=None,
                        help="point-mass coupling M = d/(2*lambda); mutually exclusive with --lambda")
    parser.add_argument("--max-degree", type=int, default=4, help="largest total degree to verify")
    parser.add_argument("--suites", default="all",
                        help="comma-separated subset of: " + ", ".join(SUITE_NAMES) + "; or 'all'")
    parser.add_argument("--seed", type=int, default=0, help="seed for the randomized sweeps")
    parser.add_argument("--out", default=None, help="write the report (or export) here instead of stdout")
    parser.add_argument("--export-basis", default=None, metavar="N,KIND",
                        help="export the degree-N basis of the given kind (classical or lambda) and exit")
    parser.add_argument("--corrupt-eigenvalue", action="store_true",
                        help="self-test hook: offset the fourth-order eigenvalue so the suite must fail")
    return parser


def _write(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _run_export(args, cfg: SuiteConfig) -> int:
    try:
        raw_n, _, raw_kind = args.export_basis.partition(",")
        n = int(raw_n)
        kind = raw_kind.strip() or "classical"
    except ValueError:
        print(f"--export-basis expects 'N,kind', got {args.export_basis!r}", file=sys.stderr)
        return 2
    eigenvalue = None
    if kind == "lambda":
        eigenvalue = lambda nn, kk: fourth_order_eigenvalue(nn, kk, cfg.dim, cfg.mass)
    try:
        text = basis_export_text(n, cfg.dim, cfg.mu, cfg.lam, kind, eigenvalue=eigenvalue)
    except (ValueError, ExactnessError) as exc:
        print(f"export failed: {exc}", file=sys.stderr)
        return 2
    _write(text, args.out)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = SuiteConfig(
            dim=args.dim,
            mu=args.mu,
            lam=args.lam,
            mass=args.mass,
            max_degree=args.max_degree,
            suites=tuple(s.strip() for s in args.suites.split(",") if s.strip()),
            seed=args.seed,
            corrupt_eigenvalue=args.corrupt_eigenvalue,
        )
    except ValueError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2

    if args.export_basis is not None:
        return _run_export(args, cfg)

    records = run_suites(cfg)
    _write("\n".join(report_lines(cfg, records)) + "\n", args.out)
    return 1 if any(r.status == STATUS_FAIL for r in records) else 0


if __name__ == "__main__":
    sys.exit(main())
