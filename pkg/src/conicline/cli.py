"""Command-line front end.

Exit codes: 0 success / consistent, 1 a check failed (audit, comparison, or
certificate), 2 usage error. Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bigness as big
from . import catalog, fpgroup, paper_groups, vankampen
from .finite_groups import BATTERY, DEFAULT_BATTERY

USAGE_ERROR = 2
CHECK_FAILED = 1


def _die(msg: str) -> int:
    print(msg, file=sys.stderr)
    return USAGE_ERROR


def _battery_from(args) -> tuple[str, ...]:
    raw = getattr(args, "targets", None) or os.environ.get("CONICLINE_BATTERY")
    if not raw:
        return DEFAULT_BATTERY
    names = tuple(t.strip() for t in raw.split(",") if t.strip())
    unknown = [t for t in names if t not in BATTERY]
    if unknown:
        raise SystemExit(_die(f"unknown battery groups: {', '.join(unknown)}"))
    return names


def _load_overrides(path: str | None):
    if not path:
        return None
    with open(path) as fh:
        return json.load(fh)


def _build_bmf(args) -> catalog.BMF:
    overrides = _load_overrides(getattr(args, "ztilde_override", None))
    fam = args.family.upper()
    if fam == "C":
        if args.m is not None:
            raise SystemExit(_die("family C takes only --n"))
        if args.n is None or args.n < 1:
            raise SystemExit(_die("family C needs --n >= 1"))
        return catalog.bmf_cn(args.n)
    if fam == "T":
        n = args.n if args.n is not None else 0
        m = args.m if args.m is not None else 0
        if n == 0 and m == 0:
            return catalog.bmf_t00()
        if m == 0:
            return catalog.bmf_tn0(n, overrides)
        if n == 0:
            raise SystemExit(_die("T with m >= 1 requires n >= 1 "
                                  "(lines tangent to the second conic come first)"))
        return catalog.bmf_tnm(n, m, overrides)
    raise SystemExit(_die(f"unknown family {args.family!r} (expected C or T)"))


def _paper_presentation(args) -> vankampen.Presentation:
    fam = args.family.upper()
    if fam == "C":
        if args.n is None or args.n < 1:
            raise SystemExit(_die("family C needs --n >= 1"))
        return (paper_groups.presentation_cn_proj(args.n) if not args.affine
                else paper_groups.presentation_cn_affine(args.n))
    n = args.n if args.n is not None else 0
    m = args.m if args.m is not None else 0
    if args.affine:
        raise SystemExit(_die("the stated T-family presentations are projective"))
    if n == 0 and m == 0:
        return paper_groups.presentation_t00()
    if m == 0:
        return paper_groups.presentation_tn0(n)
    if n == 0:
        raise SystemExit(_die("T with m >= 1 requires n >= 1"))
    return paper_groups.presentation_tnm(n, m)


def _raw_presentation(args) -> vankampen.Presentation:
    bmf = _build_bmf(args)
    projective = not args.affine
    return vankampen.raw_presentation(bmf, projective=projective)


def _presentation_for(args) -> vankampen.Presentation:
    if getattr(args, "paper", False):
        return _paper_presentation(args)
    return _raw_presentation(args)


def cmd_bmf(args) -> int:
    bmf = _build_bmf(args)
    report = catalog.audit(bmf)
    if args.json:
        print(json.dumps({"bmf": catalog.bmf_to_json(bmf),
                          "audit": report.to_json()}, indent=2))
    else:
        print(f"family {bmf.family} n={bmf.n} m={bmf.m}: "
              f"{len(bmf.factors)} factors on {bmf.strand_count} strands")
        for f in bmf.factors:
            star = " (provisional)" if f.provisional else ""
            print(f"  [{f.sing_type.name.lower():9}] {f.origin}{star}")
        print(f"exponent sum {report.exponent_sum} "
              f"(expected {report.expected_exponent_sum}); counts {report.counts}")
        for c in report.checks:
            print(f"  check {c.name}: {'ok' if c.passed else 'FAIL'} {c.detail}")
        if report.provisional_factors:
            print("provisional (tilde) factors:",
                  "; ".join(report.provisional_factors), file=sys.stderr)
    return 0 if report.passed else CHECK_FAILED


def cmd_present(args) -> int:
    p = _presentation_for(args)
    if args.json:
        print(json.dumps(vankampen.presentation_to_json(p), indent=2))
    else:
        print(vankampen.presentation_text(p))
    return 0


def cmd_abelianize(args) -> int:
    p = _presentation_for(args)
    result = fpgroup.abelianization(p)
    out = {"free_rank": result.rank_free, "torsion": list(result.torsion),
           "invariant_factors": list(result.diagonal)}
    if args.json:
        print(json.dumps(out))
    else:
        print(f"free rank {result.rank_free}, torsion {list(result.torsion) or 'none'}")
    return 0


def cmd_fingerprint(args) -> int:
    p = _presentation_for(args)
    fp = fpgroup.fingerprint(p, _battery_from(args))
    if args.json:
        print(json.dumps(fp.to_json()))
    else:
        for name, count in fp.counts.items():
            print(f"{name}: {count}")
        for name in fp.skipped:
            print(f"{name}: skipped (too many generators)", file=sys.stderr)
    return 0


def cmd_compare(args) -> int:
    args.paper = False
    raw = _raw_presentation(args)
    paper = _paper_presentation(args)
    report = fpgroup.compare(raw, paper, _battery_from(args))
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        for name, (a, b) in report.per_target.items():
            print(f"{name}: raw {a} vs stated {b}")
        print(report.verdict)
    return 0 if report.consistent else CHECK_FAILED


def cmd_bigness(args) -> int:
    fam = args.family.upper()
    try:
        if fam == "C":
            cert = big.standard_certificate("C", args.n)
        else:
            cert = big.standard_certificate("T", args.n if args.n is not None else 0,
                                            args.m if args.m is not None else 0)
    except ValueError as exc:
        return _die(str(exc))
    report = big.certify_certificate(cert)
    if args.json:
        print(json.dumps(dict(cert.to_json(), checks=report.to_json()["checks"],
                              passed=report.passed), indent=2))
    else:
        for c in report.checks:
            print(f"{c.name}: {'ok' if c.passed else 'FAIL'} {c.detail}")
        print("certificate", "passes" if report.passed else "FAILS")
    return 0 if report.passed else CHECK_FAILED


def _add_common(sub):
    sub.add_argument("family", help="arrangement family: C or T")
    sub.add_argument("--n", type=int, default=None)
    sub.add_argument("--m", type=int, default=None)
    sub.add_argument("--json", action="store_true")
    sub.add_argument("--ztilde-override", metavar="FILE",
                     help="JSON file mapping factor origins to conjugator lists")


def _add_presentation_flags(sub):
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--raw", action="store_true",
                       help="raw van Kampen presentation (default)")
    group.add_argument("--paper", action="store_true",
                       help="the stated simplified presentation")
    sub.add_argument("--affine", action="store_true",
                     help="affine group (default is projective)")
    sub.add_argument("--projective", action="store_true",
                     help="projective group (the default; kept for clarity)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conicline",
        description="Braid monodromy factorizations of tangent conic-line "
                    "arrangements and their fundamental groups")
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("bmf", help="emit a factorization and its audit")
    _add_common(s)
    s.set_defaults(func=cmd_bmf)

    for name, fn in (("present", cmd_present), ("abelianize", cmd_abelianize),
                     ("fingerprint", cmd_fingerprint)):
        s = subs.add_parser(name)
        _add_common(s)
        _add_presentation_flags(s)
        if name == "fingerprint":
            s.add_argument("--targets", help="comma-separated battery, e.g. S3,A4")
        s.set_defaults(func=fn)

    s = subs.add_parser("compare", help="raw vs stated presentation fingerprints")
    _add_common(s)
    s.add_argument("--affine", action="store_true")
    s.add_argument("--targets", help="comma-separated battery, e.g. S3,A4")
    s.set_defaults(func=cmd_compare)

    s = subs.add_parser("bigness", help="build and verify a bigness certificate")
    _add_common(s)
    s.set_defaults(func=cmd_bigness)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "affine"):
        args.affine = False
    try:
        return args.func(args)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else USAGE_ERROR
    except ValueError as exc:
        return _die(str(exc))


if __name__ == "__main__":
    sys.exit(main())
