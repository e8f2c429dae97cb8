"""Command-line front end: verification reports as JSON or CSV.

Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage or
I/O error.  Reports are deterministic bytes for a fixed (command, seed);
anything time- or thread-dependent goes to stderr only.
"""

import argparse
import sys
from dataclasses import dataclass

from . import _backend, verify
from .report import ExponentRow, emit_report
from .twins import error_scan, exponent_table


@dataclass(frozen=True)
class RunConfig:
    """One CLI invocation.  The seed fully determines every randomized
    tuple, and (command, options, seed) fully determine the report bytes."""

    command: str
    s: int
    seed: int
    out: str | None
    format: str
    options: tuple[tuple[str, object], ...]

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        base = {"command", "s", "seed", "out", "format"}
        extras = tuple(
            sorted((k, v) for k, v in vars(args).items() if k not in base)
        )
        return cls(args.command, args.s, args.seed, args.out, args.format, extras)

    def opt(self, name: str, default=None):
        return dict(self.options).get(name, default)


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="powersieve",
        description="Consecutive s-free counting and its sieve machinery, "
        "with brute-force cross-checks.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--s", type=int, default=2)
        p.add_argument("--seed", type=int, default=42)
        p.add_argument("--out", default=None, help="report path (default stdout)")
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("twins", help="twin s-free counts against C_s * x")
    common(p)
    p.add_argument("--x", type=int, default=None)
    p.add_argument("--xs", type=_parse_int_list, default=None, help="comma list of x")
    p.add_argument("--plimit", type=int, default=10**6)

    p = sub.add_parser("constant", help="Euler product vs Dirichlet series")
    common(p)
    p.add_argument("--plimit", type=int, default=10**6)

    p = sub.add_parser("sieve-check", help="sieve bound identities and runs")
    common(p)
    p.add_argument("--x", type=int, default=10**4)
    p.add_argument("--qlo", type=int, default=None)
    p.add_argument("--qhi", type=int, default=None)

    p = sub.add_parser("expsum-check", help="exponential sum factorization residuals")
    common(p)
    p.add_argument("--count", type=int, default=200, help="random tuples")

    p = sub.add_parser("hensel-check", help="power congruence counts vs full scans")
    common(p)
    p.add_argument("--limit", type=int, default=40, help="u and k range")

    p = sub.add_parser("exponents", help="error exponents as exact rationals")
    common(p)
    p.add_argument("--smax", type=int, default=None, help="emit a table for 2..smax")

    p = sub.add_parser("verify-all", help="run every verification suite")
    common(p)
    return ap


def _exponent_row(s: int) -> ExponentRow:
    t = exponent_table(s)
    return ExponentRow(
        s=s,
        carlitz=f"{t.carlitz.numerator}/{t.carlitz.denominator}",
        new=f"{t.new.numerator}/{t.new.denominator}",
        aux=f"{t.aux.numerator}/{t.aux.denominator}",
        carlitz_value=float(t.carlitz),
        new_value=float(t.new),
        aux_value=float(t.aux),
    )


def _run(config: RunConfig) -> int:
    if config.command == "twins":
        xs = config.opt("xs") or ([config.opt("x")] if config.opt("x") else [10**4, 10**5, 10**6])
        rows, slope = error_scan(config.s, sorted(xs), config.opt("plimit"))
        print(f"# twins s={config.s} fitted_slope={slope}", file=sys.stderr)
        emit_report(rows, config.format, config.out)
        return 0 if all(abs(r.error) <= r.x for r in rows) else 1

    if config.command == "constant":
        row = verify.constant_row(config.s, config.opt("plimit"))
        emit_report([row], config.format, config.out)
        return 0 if row.passed else 1

    if config.command == "sieve-check":
        qlo, qhi = config.opt("qlo"), config.opt("qhi")
        if (qlo is None) != (qhi is None):
            raise SystemExit("--qlo and --qhi come together")
        windows = ((qlo, qhi),) if qlo else ((20, 40), (50, 100))
        rows = verify.sieve_check_rows(x=config.opt("x"), windows=windows)
        emit_report(rows, config.format, config.out)
        return 0 if all(r.passed for r in rows) else 1

    if config.command == "expsum-check":
        rows = verify.factorization_rows(seed=config.seed, count=config.opt("count"))
        emit_report(rows, config.format, config.out)
        return 0 if all(r.passed for r in rows) else 1

    if config.command == "hensel-check":
        rows = verify.hensel_rows(limit=config.opt("limit"))
        emit_report(rows, config.format, config.out)
        return 0 if all(r.passed for r in rows) else 1

    if config.command == "exponents":
        smax = config.opt("smax")
        ss = range(2, smax + 1) if smax else [config.s]
        emit_report([_exponent_row(s) for s in ss], config.format, config.out)
        return 0

    if config.command == "verify-all":
        rows = verify.run_all(seed=config.seed)
        emit_report(rows, config.format, config.out)
        for row in rows:
            status = "pass" if row.passed else "FAIL"
            print(f"# {row.suite}: {status} ({row.failures}/{row.cases} failures)",
                  file=sys.stderr)
        return 0 if all(r.passed for r in rows) else 1

    raise SystemExit(f"unknown command {config.command}")


def main(argv=None) -> int:
    ap = build_parser()
    config = RunConfig.from_args(ap.parse_args(argv))
    try:
        print(
            f"# powersieve {config.command} seed={config.seed} backend={_backend.selected()}",
            file=sys.stderr,
        )
        return _run(config)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, TypeError, SystemExit) as exc:
        if isinstance(exc, SystemExit) and isinstance(exc.code, int):
            return exc.code
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
