"""Command-line surface: verifications, scans, bounds and reports.

Subcommands: ``coeffs``, ``bounds``, ``verify``, ``scan``, ``report``.
Reports are emitted as JSON (default) or CSV with deterministic field order
and float rendering, so identical invocations produce byte-identical output.
Exit codes: 0 all checks pass, 1 violation found (witness in the report),
2 inconclusive or resource limit, 64 usage error.

Rationals are serialized as "num/den" strings alongside a float rendering
with 17 significant digits.  Timing is excluded from reports unless
``--timing`` is passed, keeping the default output byte-stable.

The environment variable SEGBOUNDS_THREADS caps scan parallelism
(default: CPU count).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import segbounds
from segbounds import bounds as bounds_mod
from segbounds import coefficients as coeffs_mod
from segbounds import disk_zeros, extremal, positivity, product_analysis

EX_OK = 0
EX_VIOLATION = 1
EX_INCONCLUSIVE = 2
EX_USAGE = 64


def fmt_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def fmt_float(value: float) -> str:
    return f"{value:.17g}"


@dataclass
class RunReport:
    command: str
    parameters: Dict[str, object]
    results: List[Dict[str, object]]
    summary: Dict[str, object] = field(default_factory=dict)
    version: str = segbounds.__version__
    timing_ms: Optional[int] = None

    def to_json(self) -> str:
        doc: Dict[str, object] = {
            "command": self.command,
            "parameters": self.parameters,
            "results": self.results,
            "summary": self.summary,
            "version": self.version,
        }
        if self.timing_ms is not None:
            doc["timing_ms"] = self.timing_ms
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        keys = sorted({k for row in self.results for k in row})
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(keys)
        for row in self.results:
            writer.writerow(["" if row.get(k) is None else row.get(k) for k in keys])
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        return self.to_csv() if fmt == "csv" else self.to_json()


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 64, not argparse's default 2
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EX_USAGE)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _certificate_row(cert: disk_zeros.ZeroFreeCertificate) -> Dict[str, object]:
    return {
        "poly_id": cert.poly_id,
        "method": cert.method,
        "boundary_zero_count": cert.boundary_zero_count,
        "winding_number": cert.winding_number,
        "grid_points": cert.grid_points,
        "min_modulus_lower_bound": (
            None
            if cert.min_modulus_lower_bound is None
            else fmt_float(cert.min_modulus_lower_bound)
        ),
        "conclusive": cert.conclusive,
        "zero_free": cert.zero_free if cert.conclusive else None,
    }


def _positivity_row(cert: positivity.PositivityCertificate) -> Dict[str, object]:
    return {
        "d": cert.d,
        "n": cert.n,
        "verdict": cert.verdict,
        "witness_low": None if cert.witness_low is None else fmt_fraction(cert.witness_low),
        "witness_high": None if cert.witness_high is None else fmt_fraction(cert.witness_high),
        "witness_point": None if cert.witness_point is None else fmt_fraction(cert.witness_point),
        "witness_value": None if cert.witness_value is None else fmt_fraction(cert.witness_value),
        "grid_min_estimate": fmt_float(cert.min_estimate),
    }


# ---------------------------------------------------------------- commands


def cmd_coeffs(args) -> tuple[RunReport, int]:
    rec = coeffs_mod.sqrt_coeffs_recurrence(args.d, args.n)
    orc = coeffs_mod.sqrt_coeffs_oracle(args.d, args.n)
    agree = rec.values == orc.values
    rows = [
        {"k": k, "value": fmt_fraction(v), "value_float": fmt_float(float(v))}
        for k, v in enumerate(rec.values)
    ]
    report = RunReport(
        "coeffs",
        {"d": args.d, "n": args.n},
        rows,
        {"provenances": [rec.provenance, orc.provenance], "cross_check": "agree" if agree else "disagree"},
    )
    return report, EX_OK if agree else EX_VIOLATION


def cmd_bounds(args) -> tuple[RunReport, int]:
    family = args.family
    if family == "limit":
        quad_val = bounds_mod.segment_limit(args.d)
        closed = bounds_mod.segment_limit_closed_form(args.d)
        agree = abs(quad_val - closed) <= 1e-9
        report = RunReport(
            "bounds",
            {"family": family, "d": args.d},
            [
                {
                    "d": args.d,
                    "value": fmt_float(quad_val),
                    "closed_form": fmt_float(closed),
                    "method": "adaptive-quadrature",
                }
            ],
            {"routes_agree": agree},
        )
        return report, EX_OK if agree else EX_VIOLATION

    ns = range(args.n_max + 1) if args.n_max is not None else [args.n]
    rows = []
    for n in ns:
        rep = bounds_mod.bound_report(family, n, d=args.d)
        rows.append(
            {
                "family": rep.family,
                "n": rep.n,
                "exact": None if rep.exact_value is None else fmt_fraction(rep.exact_value),
                "value_float": fmt_float(rep.float_value),
                "limit": None if rep.limit is None else fmt_float(rep.limit),
                "gap_to_limit": None if rep.gap_to_limit is None else fmt_float(rep.gap_to_limit),
            }
        )
    report = RunReport(
        "bounds",
        {"family": family, "n": args.n, "n_max": args.n_max, "d": args.d},
        rows,
    )
    return report, EX_OK


def _verify_signs(args) -> tuple[List[Dict[str, object]], Dict[str, object], int]:
    table = coeffs_mod.sqrt_coeffs_recurrence(2, args.n_max)
    pattern = coeffs_mod.check_sign_pattern(table)
    step = coeffs_mod.check_induction_step(table)
    ok = pattern.conforms and step.conforms
    rows = [
        {"check": "sign-pattern", "ok": pattern.conforms, "first_violation": pattern.first_violation},
        {"check": "oscillation-step", "ok": step.conforms, "first_violation": step.first_violation},
    ]
    return rows, {"all_ok": ok}, EX_OK if ok else EX_VIOLATION


def _verify_gamma(args) -> tuple[List[Dict[str, object]], Dict[str, object], int]:
    margin = args.m if args.m is not None else 16
    verdicts = product_analysis.scan_product_signs(args.n_max, margin=margin)
    rows = [
        {
            "n": v.n,
            "M": v.M,
            "ok": v.ok,
            "first_violation": v.first_violation,
        }
        for v in verdicts
        if not v.ok
    ]
    ok = all(v.ok for v in verdicts)
    return rows, {"all_ok": ok, "checked": len(verdicts)}, EX_OK if ok else EX_VIOLATION


def _verify_prodpoly(args) -> tuple[List[Dict[str, object]], Dict[str, object], int]:
    rows = []
    all_ok = True
    for n in range(1, args.n_max + 1):
        qp = product_analysis.quotient_poly(n)
        lead_ok = (
            qp.poly.degree == n
            and qp.poly.leading == coeffs_mod.taylor_at_one(2, n)
        )
        ratio = product_analysis.check_coeff_ratio_identity(n, 3 * n)
        roots = product_analysis.check_root_localization(n)
        ok = lead_ok and ratio.ok and roots.ok
        all_ok = all_ok and ok
        rows.append(
            {
                "n": n,
                "leading_ok": lead_ok,
                "ratio_identity_ok": ratio.ok,
                "roots_in_window": roots.count_with_multiplicity,
                "roots_ok": roots.ok,
                "gcd_degree": roots.gcd_degree,
                "ok": ok,
            }
        )
    return rows, {"all_ok": all_ok}, EX_OK if all_ok else EX_VIOLATION


def _verify_zerofree(args) -> tuple[List[Dict[str, object]], Dict[str, object], int]:
    ns = range(args.n_max + 1)
    rows: List[Dict[str, object]] = []
    violation = False
    inconclusive = False
    exact_map = {}
    if args.method in ("exact", "both"):
        for cert in disk_zeros.scan_zero_free([args.d], ns, method=disk_zeros.EXACT_METHOD):
            exact_map[cert.poly_id] = cert
            rows.append(_certificate_row(cert))
            if cert.conclusive and not cert.zero_free:
                violation = True
    if args.method in ("float", "both"):
        for cert in disk_zeros.scan_zero_free(
            [args.d], ns, method=disk_zeros.FLOAT_METHOD, grid=args.grid
        ):
            rows.append(_certificate_row(cert))
            if not cert.conclusive:
                inconclusive = True
            elif not cert.zero_free:
                violation = True
            twin = exact_map.get(cert.poly_id)
            if twin and cert.conclusive and twin.zero_free != cert.zero_free:
                violation = True
    code = EX_VIOLATION if violation else (EX_INCONCLUSIVE if inconclusive else EX_OK)
    return rows, {"violation": violation, "inconclusive": inconclusive}, code


def _verify_extremal(args) -> tuple[List[Dict[str, object]], Dict[str, object], int]:
    rows = []
    all_ok = True
    for n in range(2, args.n_max + 1):
        inst = extremal.szasz_lambda(extremal.triple_pattern(n), n)
        chk = extremal.szasz_check(inst, extremal.extremal_function(n))
        ok = chk.equality and chk.rhs == coeffs_mod.squared_sum(2, n)
        all_ok = all_ok and ok
        rows.append(
            {
                "n": n,
                "segment_sum_squared": fmt_fraction(chk.lhs_squared),
                "bound": fmt_fraction(chk.rhs),
                "equality": chk.equality,
                "ok": ok,
            }
        )
    fx = extremal.coefficient_fixtures()
    fixtures_ok = (
        fx.mobius_abs_sum == Fraction(13, 8)
        and fx.blaschke_nonconsecutive_sum == Fraction(3, 2)
        and fx.both_exceed_bound
        and fx.both_exceed_limit
    )
    all_ok = all_ok and fixtures_ok
    summary = {
        "all_ok": all_ok,
        "mobius_abs_sum": fmt_fraction(fx.mobius_abs_sum),
        "nonconsecutive_sum": fmt_fraction(fx.blaschke_nonconsecutive_sum),
        "fixtures_ok": fixtures_ok,
    }
    return rows, summary, EX_OK if all_ok else EX_VIOLATION


def _verify_szasz(args) -> tuple[List[Dict[str, object]], Dict[str, object], int]:
    instances = {
        n: extremal.szasz_lambda(extremal.triple_pattern(n), n)
        for n in range(2, args.n_max + 1)
    }
    failures = []
    checked = 0
    for case in range(args.cases):
        seed = args.seed + case
        degree = 1 + (case % args.degree_max)
        spec = extremal.random_blaschke(seed, degree)
        for n, inst in instances.items():
            chk = extremal.szasz_check(inst, spec)
            checked += 1
            if not chk.holds:
                failures.append(
                    {
                        "seed": seed,
                        "degree": degree,
                        "n": n,
                        "lhs_squared": fmt_fraction(chk.lhs_squared),
                        "rhs": fmt_fraction(chk.rhs),
                    }
                )
    ok = not failures
    summary = {"all_hold": ok, "cases": args.cases, "checked": checked}
    return failures, summary, EX_OK if ok else EX_VIOLATION


def _verify_positivity(args) -> tuple[List[Dict[str, object]], Dict[str, object], int]:
    certs = positivity.scan_conjecture([args.d], range(args.n_max + 1), grid=args.grid)
    rows = [_positivity_row(c) for c in certs]
    witness = any(c.verdict == positivity.WITNESS for c in certs)
    if args.d == 1:
        tails = [positivity.d1_tail_argument(n) for n in range(args.n_max + 1)]
        agree = all(
            t.implies_positive == (c.verdict == positivity.POSITIVE)
            for t, c in zip(tails, certs)
        )
        summary = {"witness_found": witness, "tail_route_agrees": agree}
        code = EX_VIOLATION if (witness or not agree) else EX_OK
        return rows, summary, code
    return rows, {"witness_found": witness}, EX_VIOLATION if witness else EX_OK


def cmd_verify(args) -> tuple[RunReport, int]:
    dispatch = {
        "signs": _verify_signs,
        "gamma": _verify_gamma,
        "prodpoly": _verify_prodpoly,
        "zerofree": _verify_zerofree,
        "extremal": _verify_extremal,
        "szasz": _verify_szasz,
        "positivity": _verify_positivity,
    }
    rows, summary, code = dispatch[args.target](args)
    params = {
        k: v
        for k, v in vars(args).items()
        if k not in ("func", "format", "out", "timing") and v is not None
    }
    return RunReport("verify", params, rows, summary), code


def cmd_scan(args) -> tuple[RunReport, int]:
    ds = range(args.d_min, args.d_max + 1)
    ns = range(args.n_max + 1)
    rows: List[Dict[str, object]] = []
    violation = False
    inconclusive = False
    if args.target == "positivity":
        for cert in positivity.scan_conjecture(ds, ns, grid=args.grid):
            rows.append(_positivity_row(cert))
            if cert.verdict == positivity.WITNESS:
                violation = True
            elif cert.verdict == positivity.INCONCLUSIVE:
                inconclusive = True
    else:
        method = disk_zeros.EXACT_METHOD if args.method == "exact" else disk_zeros.FLOAT_METHOD
        for cert in disk_zeros.scan_zero_free(ds, ns, method=method, grid=args.grid):
            rows.append(_certificate_row(cert))
            if not cert.conclusive:
                inconclusive = True
            elif not cert.zero_free:
                violation = True
    params = {
        "target": args.target,
        "d_min": args.d_min,
        "d_max": args.d_max,
        "n_max": args.n_max,
        "method": getattr(args, "method", None),
        "grid": args.grid,
    }
    summary = {"violation": violation, "inconclusive": inconclusive}
    code = EX_VIOLATION if violation else (EX_INCONCLUSIVE if inconclusive else EX_OK)
    return RunReport("scan", params, rows, summary), code


def cmd_report(args) -> tuple[RunReport, int]:
    """Compact standard battery over all modules; used as a quick health check."""
    rows: List[Dict[str, object]] = []
    worst = EX_OK

    def add(section: str, ok: bool, detail: str) -> None:
        nonlocal worst
        rows.append({"section": section, "ok": ok, "detail": detail})
        if not ok:
            worst = EX_VIOLATION

    rec = coeffs_mod.sqrt_coeffs_recurrence(2, 5).values
    add(
        "coefficients",
        rec == (Fraction(1), Fraction(1, 2), Fraction(3, 8), Fraction(-3, 16), Fraction(3, 128), Fraction(15, 256))
        and rec == coeffs_mod.sqrt_coeffs_oracle(2, 5).values,
        "first six coefficients and oracle agreement",
    )
    add(
        "bounds",
        bounds_mod.landau_bound(2) == Fraction(89, 64)
        and bounds_mod.szasz_pair_bound(2) == Fraction(81, 64)
        and abs(bounds_mod.segment_limit(2) - bounds_mod.trinomial_limit()) < 1e-9,
        "classical values at n=2 and the generalized limit",
    )
    gammas = product_analysis.scan_product_signs(12)
    add("product-signs", all(v.ok for v in gammas), "sign claims for n <= 12")
    zf = disk_zeros.scan_zero_free([2], range(13))
    add("zero-free", all(c.zero_free for c in zf), "exact certificates for n <= 12")
    eq_ok = True
    for n in range(2, 9):
        chk = extremal.szasz_check(
            extremal.szasz_lambda(extremal.triple_pattern(n), n),
            extremal.extremal_function(n),
        )
        eq_ok = eq_ok and chk.equality
    add("extremal-equality", eq_ok, "exact equality for n <= 8")
    fx = extremal.coefficient_fixtures()
    add("fixtures", fx.both_exceed_bound and fx.both_exceed_limit, "13/8 and 3/2 fixtures")
    pos = positivity.scan_conjecture([2], range(13), grid=20000)
    add("positivity", all(c.verdict == positivity.POSITIVE for c in pos), "certificates for d=2, n <= 12")

    return RunReport("report", {}, rows, {"all_ok": worst == EX_OK}), worst


# ---------------------------------------------------------------- wiring


def build_parser() -> _Parser:
    parser = _Parser(
        prog="segbounds",
        description="Exact verification of power-series segment bounds and zero-free certificates.",
        epilog="Environment: SEGBOUNDS_THREADS caps scan parallelism (default: CPU count).",
    )
    parser.add_argument("--version", action="version", version=segbounds.__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--out", metavar="PATH", default=None)
        p.add_argument("--timing", action="store_true", help="include timing_ms (breaks byte-stability)")

    p = sub.add_parser("coeffs", help="coefficient tables with oracle cross-check")
    p.add_argument("--d", type=_positive_int, required=True)
    p.add_argument("--n", type=_nonneg_int, required=True)
    common(p)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("bounds", help="bound families and limiting constants")
    p.add_argument("family", choices=["landau", "szasz-pair", "trinomial", "general-d", "limit"])
    p.add_argument("--n", type=_nonneg_int, default=None)
    p.add_argument("--n-max", type=_nonneg_int, default=None)
    p.add_argument("--d", type=_positive_int, default=2)
    common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="run one verification target")
    p.add_argument(
        "target",
        choices=["signs", "gamma", "prodpoly", "zerofree", "extremal", "szasz", "positivity"],
    )
    p.add_argument("--d", type=_positive_int, default=2)
    p.add_argument("--n-max", type=_nonneg_int, default=None)
    p.add_argument("--m", type=_positive_int, default=None, help="truncation margin for gamma")
    p.add_argument("--method", choices=["exact", "float", "both"], default="exact")
    p.add_argument("--grid", type=_positive_int, default=1 << 17)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--cases", type=_positive_int, default=1000)
    p.add_argument("--degree-max", type=_positive_int, default=8)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="conjecture evidence scans over (d, n) grids")
    p.add_argument("--target", choices=["positivity", "zerofree"], required=True)
    p.add_argument("--d-min", type=_positive_int, default=2)
    p.add_argument("--d-max", type=_positive_int, default=4)
    p.add_argument("--n-max", type=_nonneg_int, default=40)
    p.add_argument("--method", choices=["exact", "float"], default="exact")
    p.add_argument("--grid", type=_positive_int, default=1 << 17)
    common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("report", help="compact all-module health report")
    common(p)
    p.set_defaults(func=cmd_report)

    return parser


_VERIFY_DEFAULT_NMAX = {
    "signs": 2000,
    "gamma": 200,
    "prodpoly": 60,
    "zerofree": 40,
    "extremal": 30,
    "szasz": 10,
    "positivity": 40,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.n_max is None:
        args.n_max = _VERIFY_DEFAULT_NMAX[args.target]
    if args.command == "bounds" and args.family not in ("limit",):
        if args.n is None and args.n_max is None:
            parser.error("bounds requires --n or --n-max")
    started = time.monotonic()
    report, code = args.func(args)
    if args.timing:
        report.timing_ms = int((time.monotonic() - started) * 1000)
    text = report.render(args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def entry() -> None:
    raise SystemExit(main())
