"""Command-line front end.

    wcoprime <command> [CONFIG] [--m M] [--w W] [--n n] [--N N] [--t T]
                                [--format csv|json] [--output PATH]
    wcoprime run CONFIG

Exit codes: 0 success, 2 config error, 3 budget exceeded, 4 invalid curve
data.  On failure a one-line JSON error record goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .budget import BUDGET_ENV, default_budget
from .config import COMMANDS, RunConfig, parse_config
from .divisors import PlaceTable, brute_Q, divisor_counts
from .errors import BudgetExceeded, ConfigError, IncompatibleSError, InvalidCurveError
from .genus0 import SDivisorSpec, brute_V, fast_V_genus0
from .report import emit_report, emit_table
from .theorems import (
    describe_S,
    lemma4_report,
    thm1_report,
    thm2_Q_exact,
    thm2_report,
)
from .zeta import (
    j_S_table,
    place_counts,
    require_valid,
    series_inverse_defect,
    validate_weil,
    zeta_S_value,
    zeta_series_K,
    zeta_series_S,
)

EXIT_OK, EXIT_CONFIG, EXIT_BUDGET, EXIT_CURVE = 0, 2, 3, 4


def _range(p):
    return range(p["range_lo"], p["range_hi"] + 1)


def _budget(cfg: RunConfig):
    return cfg.budget if cfg.budget is not None else default_budget()


def _element_spec(cfg: RunConfig) -> SDivisorSpec:
    f = cfg.field()
    p = cfg.params
    if cfg.has_places:
        places = cfg.places()
        N_vec = p.get("N_vec")
        if N_vec is None:
            N = p["N"]
            if len(places) != 1 or N % places[0].degree:
                raise ConfigError([(None, "give N_vec, or N with a single place whose degree divides N")])
            N_vec = [N // places[0].degree]
        return SDivisorSpec.make(f, places, N_vec)
    # degrees only: genus-0 counts depend on N alone, so put N on one place
    from .finite_field import irreducibles_of_degree
    from .genus0 import RationalPlace
    degs = cfg.s_spec().place_degrees
    if "N" not in cfg.params:
        raise ConfigError([(None, "count-elements with S given by degrees needs N")])
    N = p["N"]
    used: dict = {}
    places = []
    for d in degs:
        if d == 1 and not used.get("inf"):
            used["inf"] = True
            places.append(RationalPlace.infinity())
            continue
        polys = irreducibles_of_degree(f, d)
        k = used.get(d, 0)
        used[d] = k + 1
        places.append(RationalPlace(polys[k]))
    if N % degs[0]:
        raise ConfigError([(None, f"N = {N} is not a multiple of deg p_1 = {degs[0]}")])
    return SDivisorSpec.make(f, places, [N // degs[0]] + [0] * (len(degs) - 1))


def _cmd_curve_validate(cfg):
    c = cfg.curve_spec()
    rep = validate_weil(c)
    counts = place_counts(c, 6) if rep.valid else []
    row = {"curve": c.label, "q": c.q, "genus": c.genus,
           "weil_coeffs": list(c.weil_coeffs), "valid": rep.valid,
           "class_number": rep.class_number, "place_counts": counts,
           "violations": "; ".join(rep.violations)}
    cols = ["curve", "q", "genus", "weil_coeffs", "valid", "class_number",
            "place_counts", "violations"]
    return emit_table(cols, [row], cfg.fmt)


def _cmd_zeta_series(cfg):
    c, s = cfg.curve_spec(), cfg.s_spec()
    T = cfg.params.get("truncation", 20)
    bK, bS = zeta_series_K(c, T), zeta_series_S(c, s, T)
    mu, J = bS.inverse(), bS.partial_sums()
    rows = [{"k": k, "b_K": bK[k], "b_S": bS[k], "mu_S": mu[k], "j_S": J[k]}
            for k in range(T + 1)]
    return emit_table(["k", "b_K", "b_S", "mu_S", "j_S"], rows, cfg.fmt)


def _cmd_zeta_value(cfg):
    c, s = cfg.curve_spec(), cfg.s_spec()
    t = cfg.params["t"]
    row = {"curve": c.label, "S": describe_S(s), "t": t, "zeta_S": zeta_S_value(c, s, t)}
    return emit_table(["curve", "S", "t", "zeta_S"], [row], cfg.fmt)


def _cmd_count_elements(cfg):
    c = cfg.curve_spec()
    spec = _element_spec(cfg)
    m, w = cfg.params["m"], cfg.params["w"]
    count = fast_V_genus0(spec, m, w)
    brute = brute_V(spec, m, w, _budget(cfg)) if cfg.params.get("brute") else None
    row = {"curve": c.label, "q": c.q,
           "S": "[" + ",".join(repr(p) for p in spec.places) + "]",
           "N_vec": list(spec.N_vec),
           "N": spec.N, "m": m, "w": w, "count": count, "brute_count": brute}
    cols = ["curve", "q", "S", "N_vec", "N", "m", "w", "count", "brute_count"]
    return emit_table(cols, [row], cfg.fmt)


def _cmd_count_ideals(cfg):
    c, s = cfg.curve_spec(), cfg.s_spec()
    n, m, w = cfg.params["n"], cfg.params["m"], cfg.params["w"]
    count = thm2_Q_exact(c, s, n, m, w)
    brute = None
    if cfg.params.get("brute"):
        brute = brute_Q(PlaceTable.from_curve(c, s, max(n, 1)), n, m, w, _budget(cfg))
    row = {"curve": c.label, "q": c.q, "S": describe_S(s), "n": n, "m": m, "w": w,
           "count": count, "brute_count": brute}
    return emit_table(["curve", "q", "S", "n", "m", "w", "count", "brute_count"],
                      [row], cfg.fmt)


def _cmd_verify_thm1(cfg):
    c, s = cfg.curve_spec(), cfg.s_spec()
    rows = thm1_report(c, s, cfg.params["m"], cfg.params["w"], _range(cfg.params))
    return emit_report(rows, cfg.fmt, size_name="N")


def _cmd_verify_thm2(cfg):
    c, s = cfg.curve_spec(), cfg.s_spec()
    rows = thm2_report(c, s, cfg.params["m"], cfg.params["w"], _range(cfg.params))
    return emit_report(rows, cfg.fmt, size_name="n")


def _cmd_verify_lemma4(cfg):
    c, s = cfg.curve_spec(), cfg.s_spec()
    rows = lemma4_report(c, s, _range(cfg.params))
    table = [{"curve": r.curve, "S": r.S, "n": r.n, "j_S": r.j, "main": r.main,
              "difference": r.difference, "predicted": r.predicted, "stable": r.stable}
             for r in rows]
    cols = ["curve", "S", "n", "j_S", "main", "difference", "predicted", "stable"]
    return emit_table(cols, table, cfg.fmt)


def _cmd_verify_mobius(cfg):
    c, s = cfg.curve_spec(), cfg.s_spec()
    T = cfg.params.get("truncation", 50)
    depth = min(cfg.params.get("n", 8), T)
    bS = zeta_series_S(c, s, T)
    mu = bS.inverse()
    defect = series_inverse_defect(bS, mu)
    counts, mus = divisor_counts(PlaceTable.from_curve(c, s, max(depth, 1)), depth)
    rows = []
    for k in range(T + 1):
        enum_b = counts[k] if k <= depth else None
        enum_mu = mus[k] if k <= depth else None
        ok = defect[k] == 0 and (enum_b is None or (enum_b == bS[k] and enum_mu == mu[k]))
        rows.append({"k": k, "b_S_series": bS[k], "b_S_enumerated": enum_b,
                     "mu_S_series": mu[k], "mu_S_enumerated": enum_mu,
                     "inverse_defect": defect[k], "ok": ok})
    cols = ["k", "b_S_series", "b_S_enumerated", "mu_S_series", "mu_S_enumerated",
            "inverse_defect", "ok"]
    return emit_table(cols, rows, cfg.fmt)


def _cmd_density(cfg):
    c, s = cfg.curve_spec(), cfg.s_spec()
    p = cfg.params
    m, w = p["m"], p["w"]
    rows = []
    if p.get("kind", "ideals") == "elements":
        for r in thm1_report(c, s, m, w, _range(p)):
            total = c.q ** (m * (r.size + 1))
            rows.append({"curve": r.curve, "q": r.q, "S": r.S, "m": m, "w": w,
                         "size": r.size, "count": r.exact_count, "total": total,
                         "density": r.density, "limit": r.density_limit,
                         "gap": r.density - r.density_limit})
    else:
        rs = thm2_report(c, s, m, w, _range(p))
        J = j_S_table(c, s, max((r.size for r in rs), default=0))
        for r in rs:
            rows.append({"curve": r.curve, "q": r.q, "S": r.S, "m": m, "w": w,
                         "size": r.size, "count": r.exact_count, "total": J[r.size] ** m,
                         "density": r.density, "limit": r.density_limit,
                         "gap": r.density - r.density_limit})
    cols = ["curve", "q", "S", "m", "w", "size", "count", "total", "density", "limit", "gap"]
    return emit_table(cols, rows, cfg.fmt)


HANDLERS = {
    "curve-validate": _cmd_curve_validate,
    "zeta-series": _cmd_zeta_series,
    "zeta-value": _cmd_zeta_value,
    "count-elements": _cmd_count_elements,
    "count-ideals": _cmd_count_ideals,
    "verify-thm1": _cmd_verify_thm1,
    "verify-thm2": _cmd_verify_thm2,
    "verify-lemma4": _cmd_verify_lemma4,
    "verify-mobius": _cmd_verify_mobius,
    "density": _cmd_density,
}


def run(cfg: RunConfig) -> bytes:
    """Execute a validated config and return the report bytes."""
    if cfg.command != "curve-validate":
        require_valid(cfg.curve_spec())
    return HANDLERS[cfg.command](cfg)


def _error_record(kind, message, details=None) -> str:
    rec = {"error": kind, "message": message}
    if details is not None:
        rec["details"] = details
    return json.dumps(rec)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wcoprime",
        description="Exact counts of w-coprime S-integers and S-integral ideals.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in ("run",) + COMMANDS:
        sp = sub.add_parser(name, help=f"{name} (config's command)" if name == "run" else None)
        sp.add_argument("config", nargs="?", help="YAML config file, '-' for stdin")
        for flag in ("m", "w", "n", "N", "t"):
            sp.add_argument(f"--{flag}", dest=flag, type=int, default=None)
        sp.add_argument("--format", choices=("csv", "json"), default=None)
        sp.add_argument("--output", default=None, help="write the report here")
    return parser


def _read_config(path):
    if path is None:
        return ""
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    command = None if args.subcommand == "run" else args.subcommand
    try:
        text = _read_config(args.config)
        overrides = {k: getattr(args, k) for k in ("m", "w", "n", "N", "t")}
        cfg = parse_config(text, command=command, overrides=overrides)
        if args.format:
            cfg.output["format"] = args.format
        if args.output:
            cfg.output["path"] = args.output
        data = run(cfg)
    except OSError as exc:
        print(_error_record("config", str(exc)), file=sys.stderr)
        return EXIT_CONFIG
    except ConfigError as exc:
        details = [{"line": ln, "message": msg} for ln, msg in exc.errors]
        print(_error_record("config", str(exc), details), file=sys.stderr)
        return EXIT_CONFIG
    except IncompatibleSError as exc:
        print(_error_record("config", str(exc)), file=sys.stderr)
        return EXIT_CONFIG
    except BudgetExceeded as exc:
        print(_error_record("budget", f"{exc} (raise with ${BUDGET_ENV} or 'budget:')"),
              file=sys.stderr)
        return EXIT_BUDGET
    except InvalidCurveError as exc:
        print(_error_record("invalid-curve", str(exc)), file=sys.stderr)
        return EXIT_CURVE
    except ValueError as exc:
        print(_error_record("config", str(exc)), file=sys.stderr)
        return EXIT_CONFIG
    path = cfg.output.get("path")
    if path:
        with open(path, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
