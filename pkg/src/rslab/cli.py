"""Command-line front end: run verification suites and dump tables.

Subcommands: verify, dump, gauss, twist, reduce, funceq.  Exit codes:
0 on success, 2 when a verification check fails, 3 on bad input or
configuration.  The RS_LAB_SEED environment variable overrides the
config-file seed; command-line flags override both.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import funceq as fe
from . import langlands, matid, registry, twists
from .characters import char_group, gauss_beta
from .coeffs import CoeffData, coefficient_rows
from .matid import CosetContext, Mat
from .scalars import EXACT, FLOAT, MODES

DEFAULT_SEED = 1729
CONFIG_KEYS = ("mode", "n_max", "p_max", "seed")


class _Parser(argparse.ArgumentParser):
    """argparse that exits 3 on usage errors, as the exit-code contract asks."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(3)


def _die(message: str) -> "None":
    print(f"error: {message}", file=sys.stderr)
    sys.exit(3)


def read_config(path: str) -> dict:
    """Flat key=value file; '#' starts a comment."""
    out = {}
    try:
        text = open(path).read()
    except OSError as exc:
        _die(f"cannot read config {path}: {exc}")
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            _die(f"{path}:{ln}: expected key=value")
        key, val = (part.strip() for part in line.split("=", 1))
        if key not in CONFIG_KEYS:
            _die(f"{path}:{ln}: unknown key {key!r} (allowed: {', '.join(CONFIG_KEYS)})")
        out[key] = val
    return out


def _resolve_config(args) -> registry.RunConfig:
    conf = read_config(args.config) if args.config else {}
    mode = args.mode or conf.get("mode", EXACT)
    if mode not in MODES:
        _die(f"mode must be one of {MODES}")
    seed = conf.get("seed", DEFAULT_SEED)
    env_seed = os.environ.get("RS_LAB_SEED")
    if env_seed is not None:
        seed = env_seed
    if args.seed is not None:
        seed = args.seed
    n_max = args.n_max if args.n_max is not None else conf.get("n_max", 200)
    p_max = args.p_max if args.p_max is not None else conf.get("p_max", 40)
    try:
        seed, n_max, p_max = int(seed), int(n_max), int(p_max)
    except ValueError:
        _die("seed, n_max and p_max must be integers")
    if n_max > 10**6:
        _die("n_max must be <= 10^6")
    try:
        return registry.RunConfig(
            mode=mode, n_max=n_max, p_max=p_max, seed=seed,
            inject_fault=getattr(args, "inject_fault", None),
        )
    except ValueError as exc:
        _die(str(exc))


def _jvalue(x):
    """JSON-safe rendering: Fractions as strings, complex as [re, im]."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    if hasattr(x, "to_complex"):
        z = x.to_complex()
        return [z.real, z.imag]
    return str(x)


def _jmat(m: Mat) -> list:
    rows, cols = m.shape
    return [[str(m[i, j]) for j in range(cols)] for i in range(rows)]


def parse_fraction_list(text: str, want: int, label: str) -> tuple:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != want:
        _die(f"{label} needs {want} comma-separated rationals, got {len(parts)}")
    try:
        return tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError):
        _die(f"{label}: could not parse {text!r} as rationals")


def parse_matrix2(text: str) -> Mat:
    rows = text.split(";")
    if len(rows) != 2:
        _die("matrix must look like 'a,b;c,d'")
    entries = [parse_fraction_list(r, 2, "matrix row") for r in rows]
    return Mat(entries)


# -- verify -------------------------------------------------------------------


def _emit_json_lines(records: list, out_path: str | None, to_stdout: bool):
    lines = [json.dumps(r, separators=(",", ":")) for r in records]
    if out_path:
        try:
            with open(out_path, "w") as fh:
                fh.write("\n".join(lines) + "\n")
        except OSError as exc:
            _die(f"cannot write {out_path}: {exc}")
    if to_stdout:
        for line in lines:
            print(line)


def cmd_verify(args) -> int:
    cfg = _resolve_config(args)
    if cfg.inject_fault and cfg.inject_fault not in registry.FAULT_CAPABLE:
        _die(f"--inject-fault supports: {', '.join(sorted(registry.FAULT_CAPABLE))}")
    try:
        results = registry.run_suite(args.suite, cfg)
    except ValueError as exc:
        _die(str(exc))
    by_id = {c.check_id: c for c in registry.CHECKS}
    records = [
        {
            "check": r.check_id,
            "suite": r.suite,
            "ok": r.ok,
            "detail": r.detail,
            "anchor": by_id[r.check_id].description,
            "seed": cfg.seed,
            "mode": cfg.mode,
        }
        for r in results
    ]
    _emit_json_lines(records, args.out, args.json)
    if not args.json:
        wid = max(len(r.check_id) for r in results)
        wsuite = max(len(r.suite) for r in results)
        for r in results:
            status = "PASS" if r.ok else "FAIL"
            print(f"{r.check_id:<{wid}}  {r.suite:<{wsuite}}  {status}  {r.detail}")
        passed = sum(r.ok for r in results)
        print(f"\n{passed}/{len(results)} checks passed  (suite={args.suite}, seed={cfg.seed})")
    failed = [r for r in results if not r.ok]
    if failed:
        print(
            f"reproduce: rslab verify --suite {failed[0].suite} --seed {cfg.seed}",
            file=sys.stderr,
        )
        return 2
    return 0


# -- dump ---------------------------------------------------------------------


def _gauss_records(q: int) -> list:
    group = char_group(q)
    records = []
    for idx, chi in enumerate(group.characters()):
        for r in range(1, q + 1):
            if q > 1 and Fraction(r, q).denominator != q:
                continue
            beta = Fraction(r, q)
            val = gauss_beta(chi, beta, FLOAT)
            records.append(
                {
                    "q": q,
                    "chi_index": idx,
                    "beta": str(beta),
                    "value": [val.real, val.imag],
                    "abs2": abs(val) ** 2,
                }
            )
    return records


def _twist_records(args) -> list:
    if args.pi_file is None:
        _die("--pi-file is required for twist tables")
    try:
        beta = Fraction(args.beta)
    except (ValueError, ZeroDivisionError):
        _die(f"--beta: {args.beta!r} is not a rational")
    n_max = args.N
    if n_max < 1 or n_max > 10**6:
        _die("--N out of range")
    try:
        text = open(args.pi_file).read()
    except OSError as exc:
        _die(f"cannot read {args.pi_file}: {exc}")
    try:
        rep = langlands.parse_rep_file(text, degree=3, mode=FLOAT, p_max=n_max)
        series = rep.series(n_max)
    except ValueError as exc:
        _die(str(exc))
    q_mod = beta.denominator
    records = []
    for n in range(1, n_max + 1):
        coeff = series.a(n) * twists.unit_average(n * beta, q_mod, args.parity, 0.0, FLOAT)
        coeff = complex(coeff)
        records.append({"n": n, "coeff": [coeff.real, coeff.imag]})
    return records


def cmd_dump(args) -> int:
    if args.kind == "coeffs":
        alphas = parse_fraction_list(args.alphas, 3, "--alphas")
        gammas = parse_fraction_list(args.gammas, 2, "--gammas")
        if any(g == 0 for g in gammas):
            _die("--gammas must be nonzero")
        n_max = args.N
        if n_max < 1 or n_max > 10**6:
            _die("--N out of range")
        data = CoeffData.constant(alphas, gammas, n_max, EXACT)
        rows = coefficient_rows(n_max, data)
        lines = ["n,lambda,c,pair,residual"]
        lines += [f"{n},{ls},{c},{lp},{res}" for n, ls, c, lp, res in rows]
        text = "\n".join(lines) + "\n"
        if args.out:
            try:
                with open(args.out, "w") as fh:
                    fh.write(text)
            except OSError as exc:
                _die(f"cannot write {args.out}: {exc}")
        else:
            sys.stdout.write(text)
        return 0
    if args.kind == "gauss":
        records = _gauss_records(_check_q(args.q))
    else:  # twist
        records = _twist_records(args)
    _emit_json_lines(records, args.out, to_stdout=args.out is None)
    return 0


def _check_q(q: int) -> int:
    if q < 1 or q > 10**6:
        _die("--q out of range")
    return q


def cmd_gauss(args) -> int:
    _emit_json_lines(_gauss_records(_check_q(args.q)), None, True)
    return 0


def cmd_twist(args) -> int:
    _emit_json_lines(_twist_records(args), None, True)
    return 0


def cmd_reduce(args) -> int:
    M = parse_matrix2(args.matrix)
    p, qp, pp = (int(x) for x in parse_fraction_list(args.ctx, 3, "--ctx"))
    try:
        ctx = CosetContext(p, qp, pp)
    except ValueError as exc:
        _die(str(exc))
    if M.det() == 0:
        _die("matrix must be invertible")
    out = matid.coset_reduce(M, ctx)
    record = {
        "gamma1": str(out.gamma1),
        "gamma2": str(out.gamma2),
        "u": _jmat(out.u),
        "g": _jmat(out.g),
        "canonical": _jmat(out.canonical_matrix()),
        "in_support": matid.coset_in_support(out.gamma1, out.gamma2, ctx),
    }
    print(json.dumps(record, separators=(",", ":")))
    return 0


def cmd_funceq(args) -> int:
    q = _check_q(args.q)
    chars = list(char_group(q).characters())
    if not 0 <= args.chi_index < len(chars):
        _die(f"--chi-index must be in [0, {len(chars) - 1}] for q={q}")
    chi = chars[args.chi_index]
    if not chi.is_primitive() or chi.is_trivial():
        _die("the reflection formula needs a primitive nontrivial character")
    try:
        points = [complex(tok) for tok in args.points.split(",") if tok.strip()]
    except ValueError:
        _die(f"--points: could not parse {args.points!r}")
    if not points:
        _die("--points is empty")
    worst = 0.0
    for s in points:
        res = fe.fe_residual_dirichlet(chi, s)
        worst = max(worst, res)
        print(
            json.dumps(
                {"q": q, "chi_index": args.chi_index, "s": [s.real, s.imag], "residual": res},
                separators=(",", ":"),
            )
        )
    return 0 if worst < 1e-8 else 2


# -- wiring -------------------------------------------------------------------


def _add_common(p: _Parser):
    p.add_argument("--config", help="key=value config file")
    p.add_argument("--mode", choices=MODES, help="scalar mode for suites that honor it")
    p.add_argument("--seed", type=int, help="seed for randomized checks")
    p.add_argument("--n-max", type=int, dest="n_max", help="truncation for coefficient checks")
    p.add_argument("--p-max", type=int, dest="p_max", help="modulus bound for character checks")


def build_parser() -> _Parser:
    parser = _Parser(prog="rslab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", parents=[], help="run a verification suite")
    _add_common(pv)
    pv.add_argument("--suite", default="all", help="one of: all, " + ", ".join(registry.SUITES))
    pv.add_argument("--json", action="store_true", help="JSON lines to stdout instead of a table")
    pv.add_argument("--out", help="also write JSON lines to this file")
    pv.add_argument("--inject-fault", dest="inject_fault",
                    help="corrupt the named check's input (self-test of the harness)")
    pv.set_defaults(func=cmd_verify)

    pd = sub.add_parser("dump", help="write coefficient/Gauss/twist tables")
    pd.add_argument("kind", choices=("coeffs", "twist", "gauss"))
    pd.add_argument("--alphas", default="1,2,3", help="coeffs: three rationals")
    pd.add_argument("--gammas", default="1,2", help="coeffs: two nonzero rationals")
    pd.add_argument("--q", type=int, default=12, help="gauss: modulus")
    pd.add_argument("--pi-file", dest="pi_file", help="twist: local-parameter file")
    pd.add_argument("--beta", default="1/3", help="twist: rational shift r/q")
    pd.add_argument("--parity", type=int, choices=(0, 1), default=0)
    pd.add_argument("--N", type=int, default=100, help="number of coefficients")
    pd.add_argument("--out", help="output path (default stdout)")
    pd.set_defaults(func=cmd_dump)

    pg = sub.add_parser("gauss", help="character-sum table for one modulus (JSON lines)")
    pg.add_argument("--q", type=int, required=True)
    pg.set_defaults(func=cmd_gauss)

    pt = sub.add_parser("twist", help="additive twist of a degree-3 coefficient stream")
    pt.add_argument("--pi-file", dest="pi_file", required=True)
    pt.add_argument("--beta", required=True, help="rational shift r/q")
    pt.add_argument("--parity", type=int, choices=(0, 1), default=0)
    pt.add_argument("--N", type=int, default=50)
    pt.set_defaults(func=cmd_twist)

    pr = sub.add_parser("reduce", help="canonical coset form of a 2x2 rational matrix")
    pr.add_argument("--matrix", required=True, help="'a,b;c,d' with rational entries")
    pr.add_argument("--ctx", required=True, help="'p,qprime,pprime'")
    pr.set_defaults(func=cmd_reduce)

    pf = sub.add_parser("funceq", help="completed L-function reflection residuals")
    pf.add_argument("--q", type=int, required=True)
    pf.add_argument("--chi-index", dest="chi_index", type=int, required=True)
    pf.add_argument("--points", default="0.5", help="comma-separated complex points")
    pf.set_defaults(func=cmd_funceq)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
