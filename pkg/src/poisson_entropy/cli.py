"""Command-line front end.

Usage:
    poisson-entropy eval --kind renyi --alpha 2 --lambda 10
    poisson-entropy table --kind tsallis --alpha-range 0.2:3:0.2 --lambda-range 0.1:20:0.1
    poisson-entropy bounds --kind shannon --lambda-range 1.1:20:0.1
    poisson-entropy scan --kind gen_renyi1 --alpha 0.1 --lambda-range 0.1:20:0.01 --format json

Exit codes: 0 success, 2 domain or usage error, 3 series truncation failure,
4 I/O error, 5 bound violation (a bug in the library).
"""

from __future__ import annotations

import argparse
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .analysis import make_grid, scan_monotonicity
from .asymptotics import asymptote
from .bounds import GAMMA_STAR, bounds_for, optimal_gamma
from .entropies import EntropyKind, EntropyQuery, entropy, evaluate
from .errors import BoundViolation, DomainError, TruncationFailure
from .series import SeriesConfig, PoissonParams

__all__ = ["main", "OutputSpec", "build_parser"]

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_TRUNCATION = 3
EXIT_IO = 4
EXIT_BOUND = 5

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class OutputSpec:
    format: str = "csv"
    path: str | None = None
    precision: int = 12

    def __post_init__(self) -> None:
        if self.format not in ("csv", "json"):
            raise DomainError(f"unknown format {self.format!r}")
        if not 4 <= self.precision <= 17:
            raise DomainError(f"precision must lie in [4, 17], got {self.precision}")

    def num(self, x: float | None) -> str:
        return "" if x is None else "%.*g" % (self.precision, x)

    def jnum(self, x: float | None) -> float | None:
        # round-trip through the text form so JSON honours the precision too
        return None if x is None else float(self.num(x))


# --------------------------------------------------------------------------
# argument parsing helpers
# --------------------------------------------------------------------------

def _parse_triple(text: str, name: str) -> tuple[float, float, float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise DomainError(f"{name} must look like LO:HI:STEP, got {text!r}")
    try:
        lo, hi, step = (float(p) for p in parts)
    except ValueError:
        raise DomainError(f"{name} must contain numbers, got {text!r}") from None
    return lo, hi, step


def _parse_range(text: str, name: str) -> list[float]:
    lo, hi, step = _parse_triple(text, name)
    if math.isfinite(lo) and lo == hi:
        return [lo]
    return make_grid(lo, hi, step).tolist()


def _parse_list(text: str | None, name: str) -> list[float] | None:
    if text is None:
        return None
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise DomainError(f"{name} must be a number or a comma separated list, got {text!r}") from None


def _threads() -> int:
    raw = os.environ.get("PE_THREADS", "1").strip() or "1"
    try:
        n = int(raw)
    except ValueError:
        raise DomainError(f"PE_THREADS must be an integer, got {raw!r}") from None
    if n < 0:
        raise DomainError(f"PE_THREADS must be >= 0, got {n}")
    return n if n > 0 else (os.cpu_count() or 1)


def _pmap(fn, items: list) -> list:
    n = _threads()
    if n <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def _config(args) -> SeriesConfig:
    kw = {}
    if args.rel_tol is not None:
        kw["rel_tol"] = args.rel_tol
    if args.max_terms is not None:
        kw["max_terms"] = args.max_terms
    try:
        return SeriesConfig(**kw)
    except ValueError as exc:
        raise DomainError(str(exc)) from None


def _output(args) -> OutputSpec:
    return OutputSpec(args.format, args.out, args.precision)


def _orders(args) -> tuple[list, list]:
    kind = EntropyKind.parse(args.kind)
    alphas = _parse_list(args.alpha, "--alpha")
    if args.alpha_range is not None:
        if alphas is not None:
            raise DomainError("give either --alpha or --alpha-range, not both")
        alphas = _parse_range(args.alpha_range, "--alpha-range")
    betas = _parse_list(args.beta, "--beta")
    if kind.arity == 0:
        if alphas or betas:
            raise DomainError("shannon takes no order parameters")
        return [None], [None]
    if not alphas:
        raise DomainError(f"{kind.value} needs --alpha or --alpha-range")
    if kind.arity == 1:
        if betas:
            raise DomainError(f"{kind.value} takes no --beta")
        return alphas, [None]
    if not betas:
        raise DomainError(f"{kind.value} needs --beta")
    return alphas, betas


def _lambdas(args) -> list[float]:
    if args.lambda_range is not None:
        if args.lam is not None:
            raise DomainError("give either --lambda or --lambda-range, not both")
        return _parse_range(args.lambda_range, "--lambda-range")
    if args.lam is None:
        raise DomainError("--lambda or --lambda-range is required")
    return [args.lam]


def _emit(text: str, out: OutputSpec) -> None:
    if out.path is None or out.path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(out.path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _csv(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(row) + "\n")
    return buf.getvalue()


def _json(payload: dict) -> str:
    return json.dumps({"schema": SCHEMA_VERSION, **payload}, indent=2, allow_nan=False) + "\n"


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------

def cmd_eval(args) -> int:
    cfg, out = _config(args), _output(args)
    alphas, betas = _orders(args)
    if len(alphas) != 1 or len(betas) != 1 or args.lambda_range is not None:
        raise DomainError("eval takes single values; use 'table' for grids")
    if args.lam is None:
        raise DomainError("--lambda is required")
    kind = EntropyKind.parse(args.kind)
    res = evaluate(EntropyQuery(kind, PoissonParams(args.lam, alphas[0], betas[0]), cfg))
    rec = {
        "kind": kind.value,
        "alpha": alphas[0],
        "beta": betas[0],
        "lambda": args.lam,
        "value": res.value,
        "terms_used": res.terms_used,
        "tail_bound": res.tail_bound,
        "used_log_domain": res.used_log_domain,
    }
    if out.format == "json":
        rec.update({k: out.jnum(rec[k]) for k in ("alpha", "beta", "lambda", "value", "tail_bound")})
        _emit(_json({"command": "eval", "result": rec}), out)
    else:
        row = [rec["kind"], out.num(rec["alpha"]), out.num(rec["beta"]), out.num(rec["lambda"]),
               out.num(rec["value"]), str(rec["terms_used"]), out.num(rec["tail_bound"]),
               str(rec["used_log_domain"]).lower()]
        _emit(_csv(list(rec), [row]), out)
    return EXIT_OK


def cmd_table(args) -> int:
    cfg, out = _config(args), _output(args)
    kind = EntropyKind.parse(args.kind)
    alphas, betas = _orders(args)
    lams = _lambdas(args)
    cells = [(a, b, lam) for a in alphas for b in betas for lam in lams]
    if not cells:
        raise DomainError("empty grid")
    for a in alphas:
        for b in betas:
            EntropyQuery(kind, PoissonParams(lams[0], a, b), cfg)
    values = _pmap(lambda c: entropy(kind, c[2], c[0], c[1], cfg), cells)
    if out.format == "json":
        rows = [{"alpha": out.jnum(a), "beta": out.jnum(b), "lambda": out.jnum(lam), "value": out.jnum(v)}
                for (a, b, lam), v in zip(cells, values)]
        _emit(_json({"command": "table", "kind": kind.value, "rows": rows}), out)
    else:
        rows = [[out.num(a), out.num(b), out.num(lam), out.num(v)] for (a, b, lam), v in zip(cells, values)]
        _emit(_csv(["alpha", "beta", "lambda", "value"], rows), out)
    return EXIT_OK


def _safe_asymptote(kind: EntropyKind, lam: float, alpha, beta) -> float | None:
    if kind is EntropyKind.GEN_RENYI1:
        return None
    return asymptote(kind, lam, alpha, beta)


def cmd_bounds(args) -> int:
    cfg, out = _config(args), _output(args)
    kind = EntropyKind.parse(args.kind)
    alphas, betas = _orders(args)
    if len(alphas) != 1 or len(betas) != 1:
        raise DomainError("bounds takes single order values")
    alpha, beta = alphas[0], betas[0]
    lams = _lambdas(args)
    if min(lams) <= 1.0:
        raise DomainError("bounds need every lambda > 1")
    EntropyQuery(kind, PoissonParams(lams[0], alpha, beta), cfg)
    gamma = None
    if kind is EntropyKind.RENYI:
        if args.gamma is None or args.gamma == "auto":
            gamma = optimal_gamma(alpha, max(lams), cfg)
        else:
            try:
                gamma = float(args.gamma)
            except ValueError:
                raise DomainError(f"--gamma must be a number or 'auto', got {args.gamma!r}") from None

    def row(lam: float):
        bs = bounds_for(kind, lam, alpha, beta, gamma, cfg)
        v = entropy(kind, lam, alpha, beta, cfg)
        if not bs.contains(v):
            raise BoundViolation(f"bounds fail to enclose {kind.value} at lambda={lam!r}: "
                                 f"{bs.lower!r} < {v!r} < {bs.upper!r}")
        return lam, bs.lower, v, bs.upper, _safe_asymptote(kind, lam, alpha, beta)

    rows = _pmap(row, lams)
    cols = ["lambda", "lower", "value", "upper", "asymptote"]
    if out.format == "json":
        payload = {"command": "bounds", "kind": kind.value, "alpha": out.jnum(alpha), "beta": out.jnum(beta),
                   "gamma": out.jnum(gamma), "gamma_star": out.jnum(GAMMA_STAR),
                   "rows": [dict(zip(cols, map(out.jnum, r))) for r in rows]}
        _emit(_json(payload), out)
    else:
        _emit(_csv(cols, [[out.num(x) for x in r] for r in rows]), out)
    return EXIT_OK


def cmd_scan(args) -> int:
    cfg, out = _config(args), _output(args)
    kind = EntropyKind.parse(args.kind)
    alphas, betas = _orders(args)
    if len(alphas) != 1 or len(betas) != 1:
        raise DomainError("scan takes single order values")
    if args.lambda_range is None:
        raise DomainError("scan needs --lambda-range LO:HI:STEP")
    lo, hi, step = _parse_triple(args.lambda_range, "--lambda-range")
    rep = scan_monotonicity(kind, lo, hi, step, alphas[0], betas[0], cfg, threads=_threads())
    if out.format == "json":
        d = rep.to_dict()
        for key in ("alpha", "beta"):
            d[key] = out.jnum(d[key])
        for key in ("grid", "values", "derivatives"):
            d[key] = [out.jnum(x) for x in d[key]]
        d["decreasing_intervals"] = [[out.jnum(a), out.jnum(b)] for a, b in d["decreasing_intervals"]]
        d["extrema"] = [{"lambda": out.jnum(e["lambda"]), "kind": e["kind"]} for e in d["extrema"]]
        _emit(_json({"command": "scan", **d}), out)
    else:
        rows = [[out.num(lam), out.num(v), out.num(dv)]
                for lam, v, dv in zip(rep.grid, rep.values, rep.derivatives)]
        _emit(_csv(["lambda", "value", "derivative"], rows), out)
    return EXIT_OK


# --------------------------------------------------------------------------
# entry point
# --------------------------------------------------------------------------

def _precision(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 4 <= p <= 17:
        raise argparse.ArgumentTypeError("precision must lie in [4, 17]")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--kind", required=True,
                        help="shannon, renyi, gen_renyi1, gen_renyi2, tsallis or sharma_mittal")
    common.add_argument("--alpha", help="order alpha (table also takes a comma separated list)")
    common.add_argument("--beta", help="order beta (table also takes a comma separated list)")
    common.add_argument("--lambda", dest="lam", type=float, help="Poisson intensity")
    common.add_argument("--lambda-range", help="LO:HI:STEP grid of intensities")
    common.add_argument("--alpha-range", help="LO:HI:STEP grid of alpha values")
    common.add_argument("--gamma", help="Mittag-Leffler bound parameter, or 'auto' (renyi bounds)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", help="output file (default: standard output)")
    common.add_argument("--precision", type=_precision, default=12, help="significant digits, 4 to 17")
    common.add_argument("--rel-tol", type=float, help="series truncation tolerance")
    common.add_argument("--max-terms", type=int, help="series term budget")

    parser = argparse.ArgumentParser(prog="poisson-entropy",
                                     description="Entropies of the Poisson distribution.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn, text in (
        ("eval", cmd_eval, "evaluate one entropy with series diagnostics"),
        ("table", cmd_table, "tabulate an entropy over order and intensity grids"),
        ("bounds", cmd_bounds, "lower/upper bounds and asymptote next to the entropy"),
        ("scan", cmd_scan, "scan dH/dlambda for decreasing runs and local extrema"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.set_defaults(func=fn)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BoundViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except TruncationFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TRUNCATION
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
