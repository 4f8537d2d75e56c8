"""Command-line surface: JSON/CSV emission, result cache, run orchestration.

Exit codes: 0 success/verified, 1 mathematical violation found, 2 usage or
validation error, 3 work-budget refusal.  Every JSON envelope carries
{command, version, seed, ..., elapsed_s}; reports never embed the thread
count or cache location, so output is byte-identical across worker counts
(elapsed_s aside).  Big integers are serialized as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__ as VERSION
from .bounds import compute_bound, first_admissible_prime, reproduce_table, table_csv
from .cyclo_factor import build_field, factor_cyclotomic, is_prime, mult_order, trace_table
from .identities import sweep_identities
from .minors import uncertainty_min, verify_all_minors
from .real_cheb import (
    chebyshev_identity_check,
    cosine_minpoly,
    phi_sequence,
    verify_dct_minors,
    verify_real_minors,
)
from .rings import poly_eval
from .schur import WorkBudgetError, check_pair, partition_of, schur_eval_ones, spec_vector

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

CACHE_ENV = "FOURIER_MINORS_CACHE_DIR"


def default_cache_dir() -> str:
    env = os.environ.get(CACHE_ENV)
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "fourier-minors")


def _require_prime(n: int, name: str) -> None:
    if not is_prime(n):
        raise ValueError(f"{name} must be prime, got {n}")


def _indices(text: str) -> tuple:
    try:
        return tuple(int(t) for t in text.split(",") if t != "")
    except ValueError:
        raise ValueError(f"expected a comma-separated index list, got {text!r}")


def _poly_str(coeffs) -> str:
    """Human form of an ascending coefficient list, highest power first."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            x = "X" if i == 1 else f"X^{i}"
            terms.append(x if c == 1 else f"{c}{x}")
    return " + ".join(terms) if terms else "0"


def _emit(args, payload: dict, t0: float) -> None:
    env = {
        "command": args.command,
        "version": VERSION,
        "seed": getattr(args, "seed", 0),
    }
    env.update(payload)
    env["elapsed_s"] = round(time.perf_counter() - t0, 6)
    print(json.dumps(env, indent=2))


def _emit_error(command: str, message: str) -> None:
    print(json.dumps({"command": command, "version": VERSION, "error": message}, indent=2))


# ----------------------------------------------------------------- handlers


def cmd_factor(args) -> int:
    t0 = time.perf_counter()
    _require_prime(args.p, "--p")
    _require_prime(args.q, "--q")
    factors = sorted(tuple(f) for f in factor_cyclotomic(args.p, args.q, args.seed))
    _emit(
        args,
        {
            "p": args.p,
            "q": args.q,
            "order": mult_order(args.q, args.p),
            "num_factors": len(factors),
            "factors": [list(f) for f in factors],
            "factors_str": [_poly_str(f) for f in factors],
        },
        t0,
    )
    return EXIT_OK


def cmd_field(args) -> int:
    t0 = time.perf_counter()
    _require_prime(args.p, "--p")
    _require_prime(args.q, "--q")
    setup = build_field(args.p, args.q, args.seed)
    traces = trace_table(setup)
    _emit(
        args,
        {
            "p": setup.p,
            "q": setup.q,
            "order": setup.r,
            "modulus": list(setup.pbar),
            "modulus_str": _poly_str(setup.pbar),
            "omega": list(setup.omega),
            "omega_powers": [list(setup.omega_pow(t)) for t in range(setup.p)],
            "traces": list(traces.L),
        },
        t0,
    )
    return EXIT_OK


def cmd_schur(args) -> int:
    t0 = time.perf_counter()
    _require_prime(args.p, "--p")
    A, B = check_pair(_indices(args.A), _indices(args.B), args.p)
    if args.q is not None:
        _require_prime(args.q, "--q")
    ratio = schur_eval_ones(A)
    vec = spec_vector(A, B, args.p, args.q)
    payload = {
        "p": args.p,
        "A": list(A),
        "B": list(B),
        "lambda": list(partition_of(A)),
        "ratio": str(ratio),
        "spec": [str(c) for c in vec],
    }
    if args.q is None:
        payload["m"] = str(vec[0])
        payload["residual"] = str(abs(vec[0] * args.p - ratio))
    else:
        payload["modulus"] = args.q
    _emit(args, payload, t0)
    return EXIT_OK


def _bound_payload(args):
    _require_prime(args.p, "--p")
    report = compute_bound(
        args.p,
        args.method,
        threads=args.threads,
        extended=args.extended,
        force=args.force,
        cache_dir=args.cache_dir,
    )
    return report


def cmd_bound(args) -> int:
    t0 = time.perf_counter()
    report = _bound_payload(args)
    _emit(args, report.to_dict(), t0)
    return EXIT_OK


def cmd_first_prime(args) -> int:
    t0 = time.perf_counter()
    report = _bound_payload(args)
    q = first_admissible_prime(args.p, report.value)
    _emit(
        args,
        {
            "p": args.p,
            "method": args.method,
            "bound": str(report.value),
            "q": q,
        },
        t0,
    )
    return EXIT_OK


def _table_text(rows) -> str:
    headers = ["p"] + [str(r.p) for r in rows]
    line_new = ["q_new"] + [str(r.q_new) for r in rows]
    line_zhang = ["q_zhang"] + [str(r.q_zhang) for r in rows]
    widths = [max(len(a), len(b), len(c)) for a, b, c in zip(headers, line_new, line_zhang)]
    fmt = lambda cells: "  ".join(c.rjust(w) for c, w in zip(cells, widths))
    return "\n".join([fmt(headers), fmt(line_new), fmt(line_zhang)]) + "\n"


def cmd_table(args) -> int:
    t0 = time.perf_counter()
    if args.pmax < 2:
        raise ValueError("--pmax must be at least 2")
    rows = reproduce_table(
        args.pmax,
        threads=args.threads,
        extended=args.extended,
        cache_dir=args.cache_dir,
    )
    payload = {
        "pmax": args.pmax,
        "rows": [{"p": r.p, "q_new": r.q_new, "q_zhang": r.q_zhang} for r in rows],
    }
    if args.out:
        from .plotting import table_figure

        os.makedirs(args.out, exist_ok=True)
        csv_path = os.path.join(args.out, "table.csv")
        json_path = os.path.join(args.out, "table.json")
        png_path = os.path.join(args.out, "table.png")
        with open(csv_path, "w", encoding="utf-8") as fh:
            fh.write(table_csv(rows))
        env = {"command": args.command, "version": VERSION, "seed": 0}
        env.update(payload)
        with open(json_path, "w", encoding="utf-8") as fh:
            json.dump(env, fh, indent=2)
            fh.write("\n")
        table_figure(rows, png_path)
        payload["files"] = {"csv": csv_path, "json": json_path, "figure": png_path}
    if args.format == "csv":
        sys.stdout.write(table_csv(rows))
    elif args.format == "text":
        sys.stdout.write(_table_text(rows))
    else:
        _emit(args, payload, t0)
    return EXIT_OK


def _verify_payload(args, q: int | None) -> int:
    t0 = time.perf_counter()
    _require_prime(args.p, "--p")
    if q is not None:
        _require_prime(q, "--q")
    report = verify_all_minors(
        args.p,
        q,
        threads=args.threads,
        extended=args.extended,
        force=args.force,
        seed=args.seed,
    )
    _emit(args, report.to_dict(), t0)
    return EXIT_OK if report.verified else EXIT_VIOLATION


def cmd_verify_minors(args) -> int:
    if args.char0 and args.q is not None:
        raise ValueError("--char0 and --q are mutually exclusive")
    if not args.char0 and args.q is None:
        raise ValueError("one of --q or --char0 is required")
    return _verify_payload(args, None if args.char0 else args.q)


def cmd_verify_classic(args) -> int:
    return _verify_payload(args, None)


def cmd_real_minors(args) -> int:
    t0 = time.perf_counter()
    _require_prime(args.p, "--p")
    report = verify_real_minors(args.p)
    _emit(args, report.to_dict(), t0)
    return EXIT_OK if report.verified else EXIT_VIOLATION


def cmd_real_dct(args) -> int:
    t0 = time.perf_counter()
    _require_prime(args.p, "--p")
    report = verify_dct_minors(args.p)
    _emit(args, report.to_dict(), t0)
    return EXIT_OK if report.verified else EXIT_VIOLATION


def cmd_real_identities(args) -> int:
    t0 = time.perf_counter()
    _require_prime(args.p, "--p")
    if args.p == 2:
        raise ValueError("the cosine subfield needs an odd prime")
    P = cosine_minpoly(args.p)
    value_at_2 = poly_eval(P, 2)
    fixed_points = all(poly_eval(f, 2) == 2 for f in phi_sequence(args.p))
    checks = {
        "minpoly_value_at_2": str(value_at_2),
        "minpoly_value_is_p": value_at_2 == args.p,
        "chebyshev_identity": chebyshev_identity_check(args.p),
        "phi_fixed_points": fixed_points,
    }
    ok = checks["minpoly_value_is_p"] and checks["chebyshev_identity"] and fixed_points
    _emit(args, {"p": args.p, **checks, "verified": ok}, t0)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_identities(args) -> int:
    t0 = time.perf_counter()
    _require_prime(args.p, "--p")
    if args.q is not None:
        _require_prime(args.q, "--q")
    sweep = sweep_identities(
        args.p,
        args.q,
        exhaustive=args.exhaustive,
        count=args.random,
        seed=args.seed,
    )
    payload = {"p": args.p, "q": "char 0" if args.q is None else args.q}
    payload.update(sweep.to_dict())
    _emit(args, payload, t0)
    return EXIT_OK if sweep.failed == 0 else EXIT_VIOLATION


def cmd_uncertainty(args) -> int:
    t0 = time.perf_counter()
    _require_prime(args.p, "--p")
    _require_prime(args.q, "--q")
    value = uncertainty_min(args.p, args.q, args.budget)
    _emit(
        args,
        {"p": args.p, "q": args.q, "scanned": args.q**args.p - 1, "minimum": value},
        t0,
    )
    return EXIT_OK


# ------------------------------------------------------------------ parser


def _add_threads(sp) -> None:
    sp.add_argument("--threads", type=int, default=1, help="worker processes (default 1)")


def _add_seed(sp) -> None:
    sp.add_argument("--seed", type=int, default=0, help="deterministic RNG seed (default 0)")


def _add_budget(sp) -> None:
    sp.add_argument("--extended", action="store_true", help="allow overnight-scale work")
    sp.add_argument("--force", action="store_true", help="bypass the work-budget guardrail")


def _add_cache(sp) -> None:
    sp.add_argument(
        "--cache-dir",
        default=default_cache_dir(),
        help=f"bound result cache directory (default ${CACHE_ENV} or ~/.cache/fourier-minors)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fourier-minors",
        description="Exact nonvanishing-minor verification and admissible-characteristic "
        "bounds for prime-order Fourier matrices.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("factor", help="factor the prime cyclotomic polynomial over F_q")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    _add_seed(sp)
    sp.set_defaults(func=cmd_factor)

    sp = sub.add_parser("field", help="build F_{q^r} with a canonical order-p root omega = X")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    _add_seed(sp)
    sp.set_defaults(func=cmd_field)

    sp = sub.add_parser("schur", help="print lambda, s_A(1..1) and the residue-class vector")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--A", required=True, help="comma-separated row indices")
    sp.add_argument("--B", required=True, help="comma-separated column indices")
    sp.add_argument("--q", type=int, default=None, help="reduce coefficients mod q")
    _add_seed(sp)
    sp.set_defaults(func=cmd_schur)

    sp = sub.add_parser("bound", help="compute an admissible-characteristic bound")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--method", choices=("new", "zhang"), required=True)
    _add_threads(sp)
    _add_budget(sp)
    _add_cache(sp)
    _add_seed(sp)
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("first-prime", help="least admissible prime above a method's bound")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--method", choices=("new", "zhang"), required=True)
    _add_threads(sp)
    _add_budget(sp)
    _add_cache(sp)
    _add_seed(sp)
    sp.set_defaults(func=cmd_first_prime)

    sp = sub.add_parser("table", help="reproduce the first-prime-per-method table")
    sp.add_argument("--pmax", type=int, required=True)
    sp.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    sp.add_argument("--out", default=None, help="directory for table.csv/.json/.png")
    _add_threads(sp)
    _add_budget(sp)
    _add_cache(sp)
    _add_seed(sp)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("verify-minors", help="exhaustively verify minors over F_{q^r}")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, default=None)
    sp.add_argument("--char0", action="store_true", help="verify over the cyclotomic field")
    _add_threads(sp)
    _add_budget(sp)
    _add_seed(sp)
    sp.set_defaults(func=cmd_verify_minors)

    sp = sub.add_parser("verify-classic", help="exhaustively verify minors in characteristic 0")
    sp.add_argument("--p", type=int, required=True)
    _add_threads(sp)
    _add_budget(sp)
    _add_seed(sp)
    sp.set_defaults(func=cmd_verify_classic)

    sp = sub.add_parser("real-minors", help="verify minors of the real conjugate-power matrix")
    sp.add_argument("--p", type=int, required=True)
    _add_seed(sp)
    sp.set_defaults(func=cmd_real_minors)

    sp = sub.add_parser("real-dct", help="verify minors of the folded cosine-table matrix")
    sp.add_argument("--p", type=int, required=True)
    _add_seed(sp)
    sp.set_defaults(func=cmd_real_dct)

    sp = sub.add_parser("real-identities", help="cosine-subfield identity checks")
    sp.add_argument("--p", type=int, required=True)
    _add_seed(sp)
    sp.set_defaults(func=cmd_real_identities)

    sp = sub.add_parser("identities", help="substitution/orbit identity sweeps")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, default=None)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--random", type=int, default=200, help="number of random pairs")
    _add_seed(sp)
    sp.set_defaults(func=cmd_identities)

    sp = sub.add_parser("uncertainty", help="exhaustive support-size scan over F_q^p")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--budget", type=int, default=10**7)
    _add_seed(sp)
    sp.set_defaults(func=cmd_uncertainty)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WorkBudgetError as exc:
        _emit_error(args.command, str(exc))
        return EXIT_BUDGET
    except ValueError as exc:
        _emit_error(args.command, str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
