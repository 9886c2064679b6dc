"""Command-line front end.

Exit codes: 0 when every checked deviation is within tolerance, 1 on any
violation, 2 on usage or precondition errors.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import __version__
from .characters import build_group
from .exact import DomainError, totient
from .gauss import check_separability, gauss_table
from .identities import (
    SITE_ALIASES,
    SITES,
    ConventionSet,
    InconsistencyError,
    adjudicate,
    alkan_L,
    asymptotic_envelope,
    corollary_even_L2,
    corollary_odd_L2,
    theorem1_L,
    theorem2_L,
)
from .oracle import l_direct, l_value, mean_value_lhs
from .report import VerifyConfig, dumps, errata_text, rows_csv, run_verify

METHODS = ("oracle", "direct", "theorem1", "theorem2", "alkan", "corollary")


class UsageError(Exception):
    pass


def _convention_pair(text: str) -> tuple[str, str]:
    site, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected site=value, got {text!r}")
    site = SITE_ALIASES.get(site, site)
    if site not in SITES:
        raise argparse.ArgumentTypeError(f"unknown site {site!r}; choose from {sorted(SITES)}")
    if value != "printed" and value not in SITES[site]:
        raise argparse.ArgumentTypeError(
            f"{site} takes one of {SITES[site] + ('printed',)}, got {value!r}")
    return site, value


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _character(q: int, index: int):
    if q < 3:
        raise UsageError(f"--q must be >= 3, got {q}")
    group = build_group(q)
    if not 0 <= index < group.phi:
        raise UsageError(f"--chi must be in [0, {group.phi - 1}] for q={q}")
    return group.character(index)


def cmd_characters(args) -> int:
    if args.q < 3:
        raise UsageError(f"--q must be >= 3, got {args.q}")
    group = build_group(args.q)
    rows = [{"index": chi.index, "exponents": list(chi.exponents), "order": chi.order,
             "parity": chi.parity, "conductor": chi.conductor, "primitive": chi.is_primitive}
            for chi in group.characters()]
    if args.format == "csv":
        for row in rows:
            row["exponents"] = " ".join(map(str, row["exponents"]))
        _emit(rows_csv(rows), args.out)
    else:
        doc = {"q": group.q, "phi": group.phi, "orders": list(group.orders),
               "generators": list(group.lifted_generators), "characters": rows}
        _emit(dumps(doc), args.out)
    return 0


def cmd_gauss(args) -> int:
    chi = _character(args.q, args.chi)
    table = gauss_table(chi)
    js = [args.z % args.q or args.q] if args.z is not None else range(1, args.q + 1)
    rows = [{"j": j, "re": table.values[j - 1].real, "im": table.values[j - 1].imag,
             "err": table.err} for j in js]
    if args.format == "csv":
        _emit(rows_csv(rows), args.out)
    else:
        doc = {"q": chi.q, "chi_index": chi.index, "primitive": chi.is_primitive,
               "separability_deviation": check_separability(chi, table), "values": rows}
        _emit(dumps(doc), args.out)
    return 0


def _evaluate(chi, s: int, method: str, args):
    conv = ConventionSet().with_overrides(dict(args.convention))
    if method == "oracle":
        return l_value(chi, s).value
    if method == "direct":
        return l_direct(chi, s, args.n or 10 ** 6).value
    if method == "theorem1":
        return theorem1_L(chi, s, args.n, conv.theorem1_prefactor)
    if method == "theorem2":
        return theorem2_L(chi, s, conv.appell_sign)
    if method == "alkan":
        return alkan_L(chi, s)
    if s != 2:
        raise UsageError("method 'corollary' is the s = 2 formula; pass --s 2")
    if chi.parity == 1:
        return corollary_even_L2(chi)
    return corollary_odd_L2(chi, conv.corollary10_prefactor)


def cmd_lvalue(args) -> int:
    chi = _character(args.q, args.chi)
    if args.s < 1:
        raise UsageError("--s must be >= 1")
    value = _evaluate(chi, args.s, args.method, args)
    doc = {"q": chi.q, "chi_index": chi.index, "s": args.s, "method": args.method,
           "parity": chi.parity, "re": value.re, "im": value.im, "err": value.err}
    code = 0
    if args.method != "oracle":
        oracle = l_value(chi, args.s).value
        dev = value.distance(oracle)
        doc.update(oracle_re=oracle.re, oracle_im=oracle.im, abs_dev=dev)
        code = 0 if dev <= args.tol else 1
    if args.format == "csv":
        _emit(rows_csv([doc]), args.out)
    else:
        _emit(dumps(doc), args.out)
    return code


def cmd_verify(args) -> int:
    if args.from_report:
        data = json.loads(Path(args.from_report).read_text())
        config = VerifyConfig.from_dict(data["config"])
    else:
        if not 3 <= args.q_min <= args.q_max:
            raise UsageError(f"need 3 <= --q-min <= --q-max, got {args.q_min}..{args.q_max}")
        if args.s_max < 1:
            raise UsageError("--s-max must be >= 1")
        config = VerifyConfig(args.q_min, args.q_max, args.s_max, args.tol,
                              overrides=dict(args.convention))
    doc = run_verify(config)
    _emit(doc.to_csv() if args.format == "csv" else doc.to_json(), args.out)
    for r in doc.violations[:20]:
        print(f"violation: q={r.q} chi={r.chi_index} s={r.s} {r.identity}[{r.convention}] "
              f"dev={r.abs_dev:.3e}", file=sys.stderr)
    return 0 if doc.passed else 1


def cmd_adjudicate(args) -> int:
    if args.q_max < 5 or args.s_max < 2:
        raise UsageError("adjudicate needs --q-max >= 5 and --s-max >= 2")
    try:
        adj = adjudicate(args.q_max, args.s_max, args.tol)
    except InconsistencyError as exc:
        print(f"{exc}\n{dumps(exc.evidence)}", file=sys.stderr)
        return 1
    _emit(dumps(adj.as_dict()) if args.format == "json" else errata_text(adj), args.out)
    return 0


def cmd_scan_asymptotic(args) -> int:
    if not 3 <= args.q_min <= args.q_max:
        raise UsageError(f"need 3 <= --q-min <= --q-max, got {args.q_min}..{args.q_max}")
    rows = []
    for q in range(args.q_min, args.q_max + 1):
        lhs = mean_value_lhs(q, 1, "odd")
        residual = lhs - totient(q) / 2
        envelope = asymptotic_envelope(q, args.constant)
        rows.append({"q": q, "phi": totient(q), "lhs": lhs, "residual": residual,
                     "scaled": residual / (math.sqrt(q) * math.log(q)),
                     "envelope": envelope, "within": abs(residual) <= envelope})
    if args.format == "csv":
        _emit(rows_csv(rows), args.out)
    else:
        _emit(dumps({"constant": args.constant, "rows": rows}), args.out)
    return 0 if all(r["within"] for r in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dirichlet-lab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("json", "csv"), default="json"):
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--out", help="write to this path instead of standard output")

    p = sub.add_parser("characters", help="list the characters mod q")
    p.add_argument("--q", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_characters)

    p = sub.add_parser("gauss", help="Gauss sum table for one character")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--chi", type=int, required=True, help="canonical character index")
    p.add_argument("--z", type=int, help="single argument instead of the full table")
    common(p)
    p.set_defaults(func=cmd_gauss)

    p = sub.add_parser("lvalue", help="L(s, chi) by one method, compared with the oracle")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="oracle")
    p.add_argument("--n", type=int, help="series terms for direct/theorem1")
    p.add_argument("--tol", type=float, default=1e-7)
    p.add_argument("--convention", type=_convention_pair, action="append", default=[],
                   metavar="SITE=VALUE")
    common(p)
    p.set_defaults(func=cmd_lvalue)

    p = sub.add_parser("verify", help="sweep every identity over a grid")
    p.add_argument("--q-min", type=int, default=3)
    p.add_argument("--q-max", type=int, default=20)
    p.add_argument("--s-max", type=int, default=6)
    p.add_argument("--tol", type=float, default=1e-7)
    p.add_argument("--convention", type=_convention_pair, action="append", default=[],
                   metavar="SITE=VALUE")
    p.add_argument("--from-report", help="re-run the configuration block of a JSON report")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("adjudicate", help="decide the convention sites and list errata")
    p.add_argument("--q-max", type=int, default=20)
    p.add_argument("--s-max", type=int, default=6)
    p.add_argument("--tol", type=float, default=1e-7)
    common(p, formats=("text", "json"), default="text")
    p.set_defaults(func=cmd_adjudicate)

    p = sub.add_parser("scan-asymptotic", help="residual of the odd mean value against phi(q)/2")
    p.add_argument("--q-min", type=int, default=3)
    p.add_argument("--q-max", type=int, default=200)
    p.add_argument("--constant", type=float, default=10.0, help="envelope constant")
    common(p)
    p.set_defaults(func=cmd_scan_asymptotic)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
