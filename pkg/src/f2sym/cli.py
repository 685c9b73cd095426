"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage or parse
error, 3 a degree exceeded the truncation.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .coordinates import PowerSumTable, StandardFormSolver, evaluate_text
from .gf2 import GradedSubspace
from .involution import OmegaTable
from .partitions import count_self_conjugate, enumerate_partitions
from .presentation import Presentation
from .ring import ParseError, TruncationError
from .schur import SchurBasis, mn_multiply, parse_schur, schur_from_expr
from . import verifier as V

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class Config:
    max_degree: int = 12
    presentation_degree: int = 10
    output: str = "text"
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.max_degree < 1:
            raise UsageError("--max-degree must be at least 1")
        if not 0 <= self.presentation_degree <= self.max_degree:
            raise UsageError("--presentation-degree must lie in 0..max-degree")
        if self.output not in ("text", "json"):
            raise UsageError("--format must be text or json")
        if self.jobs < 1:
            raise UsageError("--jobs must be positive")


@dataclass
class Context:
    """Lazily built tables shared by the checks of one invocation."""

    config: Config
    bound: int
    _cache: dict[str, Any] = field(default_factory=dict)

    def _get(self, key: str, build: Callable[[], Any]) -> Any:
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    @property
    def table(self) -> OmegaTable:
        return self._get("table", lambda: OmegaTable(self.config.max_degree))

    @property
    def power_sums(self) -> PowerSumTable:
        return self._get("ps", lambda: PowerSumTable(self.config.max_degree))

    @property
    def family(self) -> V.GradedIdealFamily:
        return self._get("fam", lambda: V.GradedIdealFamily(self.table))

    @property
    def degrees(self) -> range:
        return range(self.bound + 1)


def _limited(ctx: Context, cap: int) -> range:
    return range(min(ctx.bound, cap) + 1)


def _top_form(ctx: Context) -> V.CheckReport:
    report = V.CheckReport("top-form")
    for n in range(1, 5):
        report.results.extend(V.check_top_form_divisibility(n).results)
    return report


CHECKS: dict[str, Callable[[Context], V.CheckReport]] = {
    "involution": lambda c: V.check_involution(c.family, c.degrees),
    "power-sums": lambda c: V.check_power_sums(c.family, c.power_sums, c.degrees),
    "standard-form": lambda c: V.check_standard_form(c.family, None, c.degrees),
    "schur": lambda c: V.check_schur(max(1, min(c.bound, 10))),
    "square-claim": lambda c: V.check_square_claim(4),
    "normality": lambda c: V.check_normality(c.family, c.degrees),
    "norm-additive": lambda c: V.check_norm_additive(c.family),
    "squares-in-ri": lambda c: V.check_squares_in_RI(c.family),
    "q-equals-ri": lambda c: V.check_Q_equals_RI(c.family, c.degrees),
    "ses": lambda c: V.check_ses_dims(c.family, c.degrees),
    "preimage-1": lambda c: V.check_preimage_lemma(c.family, 1, c.degrees),
    "preimage-2": lambda c: V.check_preimage_lemma(c.family, 2, c.degrees),
    "omega-basis-1": lambda c: V.check_omega_basis(c.family, 1, c.degrees),
    "omega-basis-2": lambda c: V.check_omega_basis(c.family, 2, c.degrees),
    "transversality-1": lambda c: V.check_transversality(1, c.family, c.degrees),
    "transversality-2": lambda c: V.check_transversality(2, c.family, c.degrees),
    "conjecture-n3": lambda c: V.check_transversality(3, c.family, _limited(c, 10)),
    "exterior-si": lambda c: V.check_exterior_SI(c.family, c.degrees, c.power_sums),
    "dim-oracle": lambda c: V.check_dimension_oracle(c.family, c.degrees),
    "top-form": _top_form,
    "presentation": lambda c: Presentation(
        min(c.config.presentation_degree, c.bound), OmegaTable(c.config.presentation_degree)
    ).verify(),
}


def run_check(name: str, config: Config, bound: int) -> V.CheckReport:
    return CHECKS[name](Context(config, bound))


def _run_checks(names: list[str], config: Config, bound: int) -> list[V.CheckReport]:
    if config.jobs == 1 or len(names) == 1:
        ctx = Context(config, bound)
        return [CHECKS[n](ctx) for n in names]
    with ProcessPoolExecutor(max_workers=config.jobs) as pool:
        return list(pool.map(run_check, names, [config] * len(names), [bound] * len(names)))


# -- output -------------------------------------------------------------------

def _emit(config: Config, command: str, payload: dict[str, Any], text: str) -> None:
    if config.output == "json":
        doc = {"schema": SCHEMA, "command": command, "max_degree": config.max_degree}
        doc.update(payload)
        print(json.dumps(doc, sort_keys=True, ensure_ascii=False))
    else:
        print(text)


def _unary(name: str, op: Callable[[Context, Any], str]):
    def handler(args: argparse.Namespace, config: Config) -> int:
        ctx = Context(config, config.max_degree)
        x = evaluate_text(args.expr, ctx.power_sums)
        result = op(ctx, x)
        _emit(config, name, {"input": args.expr, "result": result}, result)
        return EXIT_OK
    return handler


def cmd_standard_form(ctx: Context, x) -> str:
    return StandardFormSolver(ctx.table, ctx.power_sums).decompose(x).render()


def cmd_to_schur(ctx: Context, x) -> str:
    return SchurBasis(ctx.config.max_degree).to_schur(x).render()


def cmd_from_schur(args: argparse.Namespace, config: Config) -> int:
    e = parse_schur(args.expr, config.max_degree)
    result = schur_from_expr(e).render()
    _emit(config, "from-schur", {"input": args.expr, "result": result}, result)
    return EXIT_OK


def cmd_mn(args: argparse.Namespace, config: Config) -> int:
    if args.k < 1:
        raise UsageError("k must be positive")
    e = parse_schur(args.expr, config.max_degree)
    result = mn_multiply(args.k, e).render()
    _emit(config, "mn", {"k": args.k, "input": args.expr, "result": result}, result)
    return EXIT_OK


def dims_rows(config: Config, bound: int) -> list[dict[str, int]]:
    fam = V.GradedIdealFamily(OmegaTable(config.max_degree))
    rows = []
    for d in range(bound + 1):
        s: GradedSubspace = fam.S(d)
        i = fam.I(d)
        rows.append({"d": d, "p": len(enumerate_partitions(d)), "R": fam.R(d).dim, "S": s.dim,
                     "I": i.dim, "S/I": s.dim - i.dim, "sc": count_self_conjugate(d)})
    return rows


def cmd_dims(args: argparse.Namespace, config: Config) -> int:
    bound = config.max_degree if args.bound is None else args.bound
    if not 0 <= bound <= config.max_degree:
        raise TruncationError(f"bound {bound} exceeds max degree {config.max_degree}")
    rows = dims_rows(config, bound)
    cols = ["d", "p", "R", "S", "I", "S/I", "sc"]
    lines = ["".join(f"{c:>6}" for c in cols)]
    lines += ["".join(f"{row[c]:>6}" for c in cols) for row in rows]
    _emit(config, "dims", {"rows": rows}, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: Config) -> int:
    bound = config.max_degree if args.bound is None else args.bound
    if not 0 <= bound <= config.max_degree:
        raise TruncationError(f"bound {bound} exceeds max degree {config.max_degree}")
    if args.check == "all":
        names = list(CHECKS)
    elif args.check in CHECKS:
        names = [args.check]
    else:
        raise UsageError(f"unknown check {args.check!r}; choose from: all, {', '.join(CHECKS)}")
    reports = _run_checks(names, config, bound)
    failed = [r for r in reports if not r.passed and r.status != "evidence"]
    lines = []
    for r in reports:
        lines.append(r.summary())
        for bad in r.failures():
            lines.append(f"  degree {bad.degree}: {bad.dims}" +
                         (f" witness {bad.witness}" if bad.witness else ""))
    payload = {"checks": [r.to_dict() for r in reports], "pass": not failed}
    _emit(config, "verify", payload, "\n".join(lines))
    return EXIT_FAIL if failed else EXIT_OK


# -- argument parsing -----------------------------------------------------------

def _add_globals(p: argparse.ArgumentParser, suppress: bool) -> None:
    def default(v):
        return argparse.SUPPRESS if suppress else v
    p.add_argument("--max-degree", type=int, default=default(12), help="truncation degree N")
    p.add_argument("--presentation-degree", type=int, default=default(None),
                   help="truncation used by the presentation check (default min(10, N))")
    p.add_argument("--format", choices=("text", "json"), default=default("text"))
    p.add_argument("--jobs", type=int, default=default(1), help="worker processes for verify")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="f2sym",
                                     description="Symmetric polynomials over GF(2) with the omega involution.")
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        _add_globals(p, suppress=True)
        p.set_defaults(handler=handler)
        return p

    add("omega", _unary("omega", lambda c, x: c.table.omega(x).render()),
        "apply the involution").add_argument("expr")
    add("dd", _unary("dd", lambda c, x: c.table.dd(x).render()),
        "x + omega(x)").add_argument("expr")
    add("norm", _unary("norm", lambda c, x: c.table.norm(x).render()),
        "x * omega(x)").add_argument("expr")
    add("standard-form", _unary("standard-form", cmd_standard_form),
        "expand in the p * a * dd(w_2i)... basis").add_argument("expr")
    add("to-schur", _unary("to-schur", cmd_to_schur),
        "expand in Schur polynomials").add_argument("expr")
    add("from-schur", cmd_from_schur, "Schur expression to w-coordinates").add_argument("expr")
    p = add("mn", cmd_mn, "multiply by p_k via Murnaghan-Nakayama")
    p.add_argument("k", type=int)
    p.add_argument("expr")
    p = add("dims", cmd_dims, "per-degree dimension table")
    p.add_argument("--bound", type=int, default=None)
    p = add("verify", cmd_verify, "run verification checks")
    p.add_argument("check", help="check name or 'all'")
    p.add_argument("--bound", type=int, default=None, help="largest degree to check")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        pres = args.presentation_degree
        if pres is None:
            pres = min(10, args.max_degree)
        config = Config(args.max_degree, pres, args.format, args.jobs)
        return args.handler(args, config)
    except TruncationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
