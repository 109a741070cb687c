"""Command-line interface.

Commands
    info    full exact report for one (m, q)
    tree    walk the Farey tree, verifying both concatenation laws per node
    scan    certified stretch factors as CSV (optionally with a figure)
    verify  run the identity suite over a denominator range
    burau   match a braid word against the digit polynomial

Exit codes: 0 clean, 1 identity violation, 2 usage error.  Fractions are
written a/b; decimal inputs are rejected.  Output is deterministic byte
for byte for a fixed invocation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import burau as burau_mod
from . import farey, invariants, kneading, zigzag
from .intpoly import digit_polynomial, reverse


CSV_HEADER = "q_num,q_den,q_decimal,lambda,width"


def _fraction_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _decimal_of_fraction(q: Fraction, digits: int = 12) -> str:
    scaled = q * 10 ** digits
    n = scaled.numerator // scaled.denominator
    if 2 * (scaled.numerator % scaled.denominator) >= scaled.denominator:
        n += 1
    whole, frac = divmod(n, 10 ** digits)
    return f"{whole}.{str(frac).zfill(digits)}"


def _width_str(width: Fraction) -> str:
    """Scientific rendering of an exact width, three significant digits."""
    if width == 0:
        return "0"
    k = 0
    w = width
    while w < 1:
        w *= 10
        k += 1
    mantissa = (width * 10 ** (k + 2)).numerator // (width * 10 ** (k + 2)).denominator
    return f"{mantissa / 100:.2f}e-{k}"


def info_report(m: int, q: Fraction, order: int = 4) -> dict:
    zz = zigzag.build(m, q)
    nu = kneading.principal_kneading(m, q)
    d = zz.digit_poly
    strong = zigzag.strong_markov(zz)
    weak = zigzag.weak_markov(zz)
    signed = zigzag.signed_markov(zz)
    surf = invariants.surface_polynomials(m, q, zz=zz)
    sing = invariants.singularity_report(m, q)
    cover = invariants.double_cover(m, q)
    zeta = invariants.zeta_prefix(m, q, order, zz=zz)
    perm = zz.permutation_type()
    zz.lam.refine(Fraction(1, 10 ** 14))
    report = {
        "m": m,
        "q": _fraction_str(q),
        "kneading": str(nu),
        "digit_poly": d.to_strings(),
        "digit_poly_pretty": str(d),
        "lambda": {
            "decimal": zz.lam.decimal(15),
            "width": f"1e-{zz.lam.width_exponent()}",
        },
        "rotation_at_infinity": _fraction_str(sing.rotation_at_infinity),
        "prongs_at_infinity": sing.infinity_prongs,
        "postcritical_count": sing.one_prong_count,
        "euler_poincare_sum": sing.euler_poincare_sum,
        "permutation": {
            "n": perm.n,
            "k": perm.k,
            "flavor": perm.flavor,
            "mapping": {str(i): perm.mapping[i] for i in sorted(perm.mapping)},
        },
        "markov": {
            "strong": strong.to_json_dict(),
            "weak": weak.to_json_dict(),
            "signed": signed.to_json_dict(),
        },
        "zeta_prefix": [str(c) for c in zeta.as_integers()],
        "surface_polynomials": {
            "homology": surf.homology.to_strings(),
            "symplectic": surf.symplectic.to_strings(),
            "puncture": surf.puncture.to_strings(),
            "chi_plus": surf.chi_plus.to_strings(),
            "chi_minus": surf.chi_minus.to_strings(),
        },
        "double_cover": {
            "genus": cover.genus,
            "punctures": cover.punctures,
            "homology_rank_split": list(cover.homology_rank_split),
        },
    }
    return report


def tree_report(m: int, depth: int) -> dict:
    """Every node of the depth-limited tree with per-edge law verification."""
    if depth < 1 or depth > farey.DEFAULT_DEPTH_CAP:
        raise ValueError(f"depth must be between 1 and {farey.DEFAULT_DEPTH_CAP}")
    nodes = []
    violations = 0
    for level in range(1, depth + 1):
        for q in farey.enumerate_level(level):
            entry = {
                "q": _fraction_str(q),
                "level": level,
                "kneading": str(kneading.principal_kneading(m, q)),
            }
            if q != farey.ROOT:
                left, right = farey.parents(q)
                entry["parents"] = [_fraction_str(left), _fraction_str(right)]
                checks = {}
                if farey.is_interior(left) and farey.is_interior(right):
                    for law in ("first", "second"):
                        try:
                            kneading.farey_concat(
                                kneading.principal_kneading(m, left),
                                kneading.principal_kneading(m, right), law)
                            checks[law] = "ok"
                        except ArithmeticError:
                            checks[law] = "violated"
                            violations += 1
                else:
                    try:
                        kneading.edge_body(m, q)
                        checks["edge"] = "ok"
                    except ArithmeticError:
                        checks["edge"] = "violated"
                        violations += 1
                entry["laws"] = checks
            nodes.append(entry)
    return {"m": m, "depth": depth, "violations": violations, "nodes": nodes}


def scan_rows(m: int, max_den: int):
    report = invariants.monotonicity_scan(m, max_den)
    return report


def scan_csv(report) -> str:
    lines = [CSV_HEADER]
    for row in report.rows:
        lo, hi = row.lam.interval
        mid = (lo + hi) / 2
        lines.append(",".join([
            str(row.q.numerator),
            str(row.q.denominator),
            _decimal_of_fraction(row.q),
            _decimal_of_fraction(mid),
            _width_str(hi - lo),
        ]))
    return "\n".join(lines) + "\n"


def verify_report(m: int, max_den: int) -> dict:
    """Identity suite over every interior q with denominator <= max_den."""
    checks = 0
    violations = []

    def run(label, q, fn):
        nonlocal checks
        checks += 1
        try:
            fn()
        except (ArithmeticError, AssertionError, ValueError) as exc:
            violations.append({"q": _fraction_str(q), "check": label,
                               "detail": str(exc)})

    for q in farey.iter_reduced(max_den):
        d = digit_polynomial(m, q)

        def shape(d=d, q=q):
            assert d.is_monic(), "not monic"
            assert d.constant_term() == 1, "constant term != 1"
            assert d == reverse(d), "not reciprocal"
            assert d.degree == q.denominator + 1, "degree != den + 1"

        run("digit-shape", q, shape)

        def laws(q=q):
            zz = zigzag.build(m, q)
            strong = zigzag.strong_markov(zz)
            weak = zigzag.weak_markov(zz)
            d_ = zz.digit_poly
            assert strong.char_poly() == d_, "strong char poly != digit poly"
            expected = d_.shift_up(m - 1)
            assert weak.char_poly() == expected, "weak char poly != t^(m-1) D"
            sp = zigzag.signed_markov(zz).char_poly()
            chi_minus = d_.compose_neg().monic_normalized()
            assert sp in (d_, chi_minus), "signed char poly mismatch"
            invariants.surface_polynomials(m, q, zz=zz)
            invariants.singularity_report(m, q)
            perm = zz.permutation_type()
            n, k = zigzag.nk_of(q)
            assert perm.mapping == zigzag.permutation(m, n, k).mapping, \
                "spatial permutation mismatch"

        run("matrix-identities", q, laws)

        def transform(q=q):
            left, right = farey.parents(q)
            if farey.is_interior(left) and farey.is_interior(right):
                kneading.farey_concat(kneading.principal_kneading(m, left),
                                      kneading.principal_kneading(m, right),
                                      "first")
                kneading.farey_concat(kneading.principal_kneading(m, left),
                                      kneading.principal_kneading(m, right),
                                      "second")
            else:
                kneading.edge_body(m, q)

        run("transformation-laws", q, transform)

    scan = invariants.monotonicity_scan(m, max_den)
    checks += 1
    for q, reason in scan.violations:
        violations.append({"q": _fraction_str(q), "check": "monotonicity",
                           "detail": reason})
    return {"m": m, "max_den": max_den, "checks": checks,
            "violations": violations, "ok": not violations}


def burau_report(m: int, q: Fraction, word_text: str) -> dict:
    strands = q.denominator + 2
    word = burau_mod.BraidWord.parse(strands, word_text)
    verdict = burau_mod.match_digit(word, m, q)
    chi = burau_mod.symplectic_poly(word)
    return {
        "m": m,
        "q": _fraction_str(q),
        "strands": strands,
        "word": str(word),
        "symplectic_poly": chi.to_strings(),
        "digit_poly": digit_polynomial(m, q).to_strings(),
        "match": verdict,
    }


def info_text(report: dict) -> str:
    """Plain-text rendering of the info report."""
    lines = [
        f"modality {report['m']}, rotation parameter {report['q']}",
        f"kneading: {report['kneading']}",
        f"digit polynomial: {report['digit_poly_pretty']}",
        f"stretch factor: {report['lambda']['decimal']} "
        f"+- {report['lambda']['width']}",
        f"rotation at infinity: {report['rotation_at_infinity']} "
        f"({report['prongs_at_infinity']} prongs)",
        f"postcritical count: {report['postcritical_count']}",
        f"permutation: n={report['permutation']['n']} "
        f"k={report['permutation']['k']} ({report['permutation']['flavor']})",
        f"markov dimensions: strong {report['markov']['strong']['dim']}, "
        f"weak {report['markov']['weak']['dim']}",
        "symplectic polynomial coefficients: "
        + " ".join(report['surface_polynomials']['symplectic']),
        f"double cover: genus {report['double_cover']['genus']}, "
        f"{report['double_cover']['punctures']} punctures",
        "zeta prefix: " + " ".join(report['zeta_prefix']),
    ]
    return "\n".join(lines) + "\n"


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zigzaginv",
        description="Exact invariants of zig-zag interval maps")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_q=False):
        p.add_argument("--m", type=int, required=True, help="modality (>= 2)")
        if need_q:
            p.add_argument("--q", type=str, required=True,
                           help="rotation parameter a/b in (0, 1)")
        p.add_argument("--out", type=str, default=None, help="output path")
        p.add_argument("--format", choices=["json", "csv", "text"],
                       default=None, help="output format")

    p_info = sub.add_parser("info", help="full report for one map")
    common(p_info, need_q=True)
    p_info.add_argument("--order", type=int, default=4,
                        help="zeta prefix order (<= 12)")

    p_tree = sub.add_parser("tree", help="tree walk with law verification")
    common(p_tree)
    p_tree.add_argument("--depth", type=int, required=True)

    p_scan = sub.add_parser("scan", help="certified stretch factor scan")
    common(p_scan)
    p_scan.add_argument("--max-den", type=int, required=True)
    p_scan.add_argument("--plot", type=str, default=None,
                        help="also render the staircase figure to this file")

    p_verify = sub.add_parser("verify", help="run the identity suite")
    common(p_verify)
    p_verify.add_argument("--max-den", type=int, required=True)

    p_burau = sub.add_parser("burau", help="match a braid word")
    common(p_burau, need_q=True)
    p_burau.add_argument("--word", type=str, required=True,
                         help="comma-separated signed generators, e.g. 1,2,-1")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.m < 2:
            raise ValueError("modality must be at least 2")
        if args.command == "info":
            q = farey.parse_fraction(args.q)
            report = info_report(args.m, q, order=args.order)
            if args.format == "text":
                _emit(info_text(report), args.out)
            else:
                _emit(json.dumps(report, indent=2) + "\n", args.out)
            return 0
        if args.command == "tree":
            report = tree_report(args.m, args.depth)
            _emit(json.dumps(report, indent=2) + "\n", args.out)
            return 0 if report["violations"] == 0 else 1
        if args.command == "scan":
            report = scan_rows(args.m, args.max_den)
            if args.format == "json":
                payload = {
                    "m": args.m,
                    "rows": [[str(r.q), r.lam.decimal(12)] for r in report.rows],
                    "violations": [[_fraction_str(q), reason]
                                   for q, reason in report.violations],
                }
                _emit(json.dumps(payload, indent=2) + "\n", args.out)
            else:
                _emit(scan_csv(report), args.out)
            if args.plot:
                from .plotting import render_scan_figure
                render_scan_figure(report.rows, args.m, args.plot)
            return 0 if report.ok else 1
        if args.command == "verify":
            report = verify_report(args.m, args.max_den)
            _emit(json.dumps(report, indent=2) + "\n", args.out)
            return 0 if report["ok"] else 1
        if args.command == "burau":
            q = farey.parse_fraction(args.q)
            report = burau_report(args.m, q, args.word)
            _emit(json.dumps(report, indent=2) + "\n", args.out)
            return 0
        raise ValueError(f"unknown command {args.command}")
    except (ValueError, farey.NotInteriorError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
