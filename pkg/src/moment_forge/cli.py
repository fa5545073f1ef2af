"""Command-line entry point binding every module.

Subcommands: verify (formal identities), predict (recipe side), compute
(empirical side), compare (both plus report), correlate (shifted divisor
correlations), farey (frame decomposition), selftest (reduced-scale
invariant sweep).

Reports are JSON with a fixed {"schema": 1} version tag and the full
effective configuration, so identical configurations reproduce bitwise
identical output except for wall_time fields.  compare with several T
values emits CSV instead.  A flat key=value config file supplies
defaults; explicit flags override it.

Exit codes: 0 success, 1 a verification reported inequality, 2 usage
error, 3 computation error.
"""

import argparse
import json
import math
import sys
import time
from dataclasses import asdict

from .arith.shifts import ShiftMultiset
from .arith.sieve import tau_table
from .errors import MomentForgeError
from .formal import run_verification
from .recipe import (DEFAULT_EULER_CONFIG, EulerProductConfig,
                     arithmetic_factor, local_factor, recipe_poly_moment,
                     swap_terms)
from .empirical import (DEFAULT_PAIR_BUDGET, MomentSpec, automorphism_count,
                        compare_moment, correlation_vs_prediction,
                        dirichlet_mean_square, farey_decompose,
                        naive_mean_square)

CSV_HEADER = ("T,X_exponent,empirical_re,empirical_im,predicted_re,"
              "predicted_im,rel_err,pairs_visited,wall_time")


def _parse_shifts(text):
    """Comma-separated shifts; complex literals use an i or j suffix."""
    out = []
    for tok in str(text).split(","):
        tok = tok.strip().replace("i", "j")
        if tok:
            out.append(complex(tok))
    return out


def _shifts_or_usage(args, parser):
    try:
        return (ShiftMultiset.of(_parse_shifts(args.shiftA)),
                ShiftMultiset.of(_parse_shifts(args.shiftB)))
    except ValueError:
        parser.error(f"bad shift literal in {args.shiftA!r} / "
                     f"{args.shiftB!r}")


def _cnum(z):
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _resolve_x(t, args):
    if args.X is not None:
        return int(args.X)
    return int(t ** args.Xexp)


def _euler_config(args):
    if getattr(args, "prime_cutoff", None) is None:
        return DEFAULT_EULER_CONFIG
    return EulerProductConfig(prime_cutoff=int(args.prime_cutoff))


def _effective_config(args):
    """All user-facing settings, for embedding in every report."""
    skip = {"func", "out", "config"}
    cfg = {}
    for key, val in sorted(vars(args).items()):
        if key in skip:
            continue
        cfg[key] = val
    return cfg


# ---- subcommands: each returns (text, exit_code) ----


def _emit_json(payload):
    return json.dumps(payload, indent=2, sort_keys=True, default=str)


def _cmd_verify(args, parser):
    sizes = tuple(int(s) for s in str(args.sizes).split(","))
    cert = run_verification(args.identity, sizes, args.degree)
    payload = {"schema": 1, "command": "verify",
               "config": _effective_config(args),
               "certificate": asdict(cert)}
    return _emit_json(payload), 0 if cert.equal else 1


def _cmd_predict(args, parser):
    A, B = _shifts_or_usage(args, parser)
    t = float(args.T)
    x = _resolve_x(t, args)
    t0 = time.perf_counter()
    result = recipe_poly_moment(A, B, t, x, _euler_config(args))
    payload = {
        "schema": 1, "command": "predict",
        "config": _effective_config(args),
        "result": {
            "T": t, "X": x,
            "total": _cnum(result.total),
            "per_class": {str(k): _cnum(v)
                          for k, v in result.per_class.items()},
            "notes": list(result.notes),
            "remainder_estimate": result.remainder_estimate,
            "wall_time": time.perf_counter() - t0,
        },
    }
    return _emit_json(payload), 0


def _cmd_compute(args, parser):
    A, B = _shifts_or_usage(args, parser)
    t = float(args.T)
    x = _resolve_x(t, args)
    if args.force_rebuild:
        tau_table(A, x, force_rebuild=True)
        tau_table(B, x, force_rebuild=True)
    spec = MomentSpec(A, B, t, x)
    value = dirichlet_mean_square(spec, strategy=args.strategy,
                                  budget=float(args.budget),
                                  diagonal_only=args.diagonal_only)
    payload = {
        "schema": 1, "command": "compute",
        "config": _effective_config(args),
        "result": {
            "T": t, "X": x, "value": _cnum(value),
            "pairs_visited": value.pairs_visited,
            "strategy": value.strategy,
            "wall_time": value.wall_time,
        },
    }
    return _emit_json(payload), 0


def _report_row(t, xexp, report):
    emp = report.empirical
    pred = report.predicted
    return (f"{t:g},{xexp:g},"
            f"{emp.real!r},{emp.imag!r},{pred.real!r},{pred.imag!r},"
            f"{report.relative_error!r},"
            f"{report.diagnostics.get('pairs_visited', 0)},"
            f"{report.diagnostics.get('wall_time', 0.0):.3f}")


def _cmd_compare(args, parser):
    A, B = _shifts_or_usage(args, parser)
    ts = [float(tok) for tok in str(args.T).split(",") if tok.strip()]
    cfg = _euler_config(args)
    reports = []
    for t in ts:
        x = _resolve_x(t, args)
        if args.force_rebuild:
            tau_table(A, x, force_rebuild=True)
            tau_table(B, x, force_rebuild=True)
        spec = MomentSpec(A, B, t, x)
        reports.append((t, compare_moment(spec, cfg,
                                          strategy=args.strategy,
                                          budget=float(args.budget))))
    if args.format == "csv" or (args.format == "auto" and len(ts) > 1):
        xexp = (args.Xexp if args.X is None
                else math.log(int(args.X)) / math.log(ts[0]))
        rows = [CSV_HEADER]
        rows += [_report_row(t, xexp, rep) for t, rep in reports]
        return "\n".join(rows), 0
    body = []
    for t, rep in reports:
        body.append({
            "T": t, "X": _resolve_x(t, args),
            "empirical": None if rep.empirical is None
            else _cnum(rep.empirical),
            "predicted": None if rep.predicted is None
            else _cnum(rep.predicted),
            "per_class": {str(k): _cnum(v) for k, v in rep.per_class.items()},
            "relative_error": rep.relative_error,
            "diagnostics": rep.diagnostics,
        })
    payload = {"schema": 1, "command": "compare",
               "config": _effective_config(args),
               "reports": body}
    return _emit_json(payload), 0


def _cmd_correlate(args, parser):
    A, B = _shifts_or_usage(args, parser)
    hs = [int(tok) for tok in str(args.h).split(",") if tok.strip()]
    body = []
    for h in hs:
        rep = correlation_vs_prediction(A, B, h, int(float(args.u)),
                                        q_max=int(args.Qmax))
        body.append({
            "h": h, "u": int(float(args.u)),
            "empirical": _cnum(rep.empirical),
            "predicted": _cnum(rep.predicted),
            "relative_error": rep.relative_error,
            "diagnostics": {k: (str(v) if isinstance(v, complex) else v)
                            for k, v in rep.diagnostics.items()},
        })
    payload = {"schema": 1, "command": "correlate",
               "config": _effective_config(args),
               "reports": body}
    return _emit_json(payload), 0


def _cmd_farey(args, parser):
    frame = farey_decompose(args.m1, args.m2, args.n1, args.n2, args.Q)
    m1, m2, n1, n2 = args.m1, args.m2, args.n1, args.n2
    lhs = m1 * m2 * frame.M * frame.N - n1 * n2 * frame.M * frame.N
    rhs = (frame.h1 * m2 * frame.M + frame.h2 * m1 * frame.N
           - frame.h1 * frame.h2)
    payload = {"schema": 1, "command": "farey",
               "config": _effective_config(args),
               "frame": asdict(frame),
               "identity_holds": lhs == rhs}
    return _emit_json(payload), 0 if lhs == rhs else 1


def _cmd_selftest(args, parser):
    t0 = time.perf_counter()
    lines = []
    failures = 0

    def check(name, fn):
        nonlocal failures
        try:
            fn()
            lines.append(f"ok   {name}")
        except Exception as exc:   # report, never crash the suite
            failures += 1
            lines.append(f"FAIL {name}: {exc}")

    def formal_suite():
        for ident, sizes, deg in [("lemma1", (1, 1, 1, 1), 6),
                                  ("semidiagonal", (1, 1, 0, 0), 5),
                                  ("theorem2", (1, 1, 1, 1), 4)]:
            cert = run_verification(ident, sizes, deg)
            assert cert.equal, f"{ident} mismatch {cert.first_mismatch}"
    check("formal identities (reduced degree)", formal_suite)

    def euler_suite():
        cfg = EulerProductConfig(prime_cutoff=2000)
        got = complex(arithmetic_factor(ShiftMultiset.of([0.0, 0.0]),
                                        ShiftMultiset.of([0.0, 0.0]), cfg))
        want = 6.0 / math.pi ** 2
        assert abs(got - want) / want < 1e-3, f"{got} vs {want}"
        one = local_factor(101, ShiftMultiset.of([0.3]),
                           ShiftMultiset.of([0.1]))
        assert one == 1.0, one
    check("euler products", euler_suite)

    def sweep_suite():
        A = ShiftMultiset.of([0.01])
        B = ShiftMultiset.of([0.02])
        spec = MomentSpec(A, B, 150.0, 200)
        a = naive_mean_square(spec)
        b = dirichlet_mean_square(spec, strategy="sweep")
        assert abs(complex(a) - complex(b)) <= 1e-10 * abs(complex(b))
        d1 = dirichlet_mean_square(spec, diagonal_only=True)
        d2 = recipe_poly_moment(A, B, 150.0, 200).per_class[0]
        assert abs(complex(d1) - d2) <= 1e-10 * abs(d2)
    check("naive vs sweep and diagonal classes", sweep_suite)

    def counts_suite():
        assert automorphism_count(2, 1) == 8
        frame = farey_decompose(3, 4, 7, 9, 5)
        assert (frame.M, frame.N) == (2, 5), frame
        A = ShiftMultiset.of([0.011, 0.052])
        B = ShiftMultiset.of([0.023, 0.034])
        n_terms = len(swap_terms(A, B, 50.0))
        assert n_terms == 6, n_terms
    check("structural counts", counts_suite)

    def correlation_suite():
        rep = correlation_vs_prediction(ShiftMultiset.of([0.05]),
                                        ShiftMultiset.of([0.07]),
                                        1, 20_000, q_max=200)
        assert rep.relative_error < 5e-2, rep.relative_error
    check("correlation vs prediction", correlation_suite)

    lines.append(f"{'FAILED' if failures else 'passed'} "
                 f"({time.perf_counter() - t0:.1f}s)")
    return "\n".join(lines), 1 if failures else 0


# ---- parser plumbing ----


def _add_shift_flags(sp, with_predict=True, with_compute=True):
    sp.add_argument("--shiftA", default="0.01",
                    help="comma-separated shifts of A (re+imi literals)")
    sp.add_argument("--shiftB", default="0.02",
                    help="comma-separated shifts of B")
    sp.add_argument("--T", default="1000",
                    help="sample scale T (compare: comma list emits CSV)")
    sp.add_argument("--X", default=None,
                    help="polynomial length X (overrides --Xexp)")
    sp.add_argument("--Xexp", type=float, default=1.4,
                    help="X = T^Xexp when --X is absent")
    if with_predict:
        sp.add_argument("--prime-cutoff", dest="prime_cutoff", default=None,
                        help="Euler product prime cutoff")
    if with_compute:
        sp.add_argument("--strategy", default="auto",
                        choices=["auto", "sweep", "spectral"])
        sp.add_argument("--budget", default=DEFAULT_PAIR_BUDGET,
                        help="pair budget for the sweep strategy")
        sp.add_argument("--force-rebuild", dest="force_rebuild",
                        action="store_true",
                        help="rebuild divisor tables, ignoring the cache")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="moment-forge",
        description="shifted-moment predictions, exact identity checks, "
        "and direct mean-square computations")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=None,
                        help="flat key=value defaults file (flags override)")
    common.add_argument("--out", default=None,
                        help="write the report here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("verify", help="check a formal identity",
                        parents=[common])
    sp.add_argument("--identity", required=True,
                    choices=["lemma1", "semidiagonal", "theorem2"])
    sp.add_argument("--sizes", default="1,1,1,1",
                    help="four set sizes, comma separated")
    sp.add_argument("--degree", type=int, default=6)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("predict", help="recipe-side moment prediction",
                        parents=[common])
    _add_shift_flags(sp, with_compute=False)
    sp.set_defaults(func=_cmd_predict)

    sp = sub.add_parser("compute", help="empirical mean square",
                        parents=[common])
    _add_shift_flags(sp, with_predict=False)
    sp.add_argument("--diagonal-only", dest="diagonal_only",
                    action="store_true")
    sp.set_defaults(func=_cmd_compute)

    sp = sub.add_parser("compare", help="empirical vs predicted",
                        parents=[common])
    _add_shift_flags(sp)
    sp.add_argument("--format", default="auto",
                    choices=["auto", "json", "csv"],
                    help="auto: JSON for one T, CSV for a T sweep")
    sp.set_defaults(func=_cmd_compare)

    sp = sub.add_parser("correlate", help="shifted divisor correlation",
                        parents=[common])
    sp.add_argument("--shiftA", default="0.05")
    sp.add_argument("--shiftB", default="0.07")
    sp.add_argument("--h", default="1", help="comma-separated shifts h")
    sp.add_argument("--u", default="100000")
    sp.add_argument("--Qmax", default="10000")
    sp.set_defaults(func=_cmd_correlate)

    sp = sub.add_parser("farey", help="Farey frame of a ratio pair",
                        parents=[common])
    for flag in ("m1", "n1", "m2", "n2", "Q"):
        sp.add_argument(f"--{flag}", type=int, required=True)
    sp.set_defaults(func=_cmd_farey)

    sp = sub.add_parser("selftest", parents=[common],
                        help="reduced-scale invariant sweep (< 60 s)")
    sp.set_defaults(func=_cmd_selftest)
    return parser


def _extract_flag(argv, name):
    """Pull a global flag out of argv so its position never matters."""
    if name not in argv:
        return None, argv
    idx = argv.index(name)
    if idx + 1 >= len(argv):
        return None, argv   # let argparse report the missing value
    value = argv[idx + 1]
    return value, argv[:idx] + argv[idx + 2:]


def _apply_config_file(parser, path):
    """Load key=value defaults for every subcommand."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            pairs = {}
            for raw in fh:
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    parser.error(f"bad config line {line!r}")
                key, val = line.split("=", 1)
                pairs[key.strip()] = val.strip()
    except OSError as exc:
        parser.error(f"cannot read config file: {exc}")
    # inject as defaults: flags that the user passed still win
    for action in parser._subparsers._group_actions[0].choices.values():
        known = {a.dest for a in action._actions}
        overlay = {k: v for k, v in pairs.items() if k in known}
        bools = {a.dest for a in action._actions
                 if isinstance(a, (argparse._StoreTrueAction,))}
        for k in list(overlay):
            if k in bools:
                overlay[k] = str(overlay[k]).lower() in ("1", "true", "yes")
        action.set_defaults(**overlay)


def run(argv=None):
    """Execute one CLI invocation; returns the exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    config_path, argv = _extract_flag(argv, "--config")
    out_path, argv = _extract_flag(argv, "--out")
    try:
        if config_path is not None:
            _apply_config_file(parser, config_path)
        args = parser.parse_args(argv)
        args.config = config_path
        args.out = out_path
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return 2 if code else 0
    try:
        text, code = args.func(args, parser)
    except SystemExit as exc:   # parser.error inside a subcommand
        code = exc.code if isinstance(exc.code, int) else 2
        return 2 if code else 0
    except MomentForgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


def main():
    raise SystemExit(run())


if __name__ == "__main__":
    main()
