"""Command-line front end.

Usage::

    curvecheck check scheme.json [--format json] [--jobs 4]
    curvecheck local-form fixture.json
    curvecheck catalog [A3 --variant "x^{2n}-y^2"] [--max-index 8]
    curvecheck inertia matrix.txt

Exit codes: 0 success (CONSISTENT for ``check``), 1 PROHIBITED, 2 invalid input.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import warnings

from . import __version__
from .catalog import (
    catalog_form,
    catalog_milnor,
    catalog_types,
    has_fixture,
    parse_type,
    sector_notes,
)
from .checker import STATEMENTS, Verdict, check_theorem_a
from .errors import CurveCheckError, UnknownType
from .local import build_tilde_form, compute_qp, load_fixture
from .qform import format_rational, inertia, load_matrix
from .scheme import load_scheme

log = logging.getLogger("curvecheck")

EXIT_OK, EXIT_PROHIBITED, EXIT_INVALID = 0, 1, 2


def _use_color(stream) -> bool:
    if os.environ.get("NO_COLOR"):
        return False
    forced = os.environ.get("CURVECHECK_COLOR")
    if forced is not None:
        return forced not in ("", "0", "never", "no")
    return stream.isatty()


def _paint(text, code, stream=sys.stdout):
    return f"\033[{code}m{text}\033[0m" if _use_color(stream) else text


def _emit_json(obj):
    sys.stdout.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")


def _inertia_json(sig):
    return {"plus": sig.sigma_plus, "minus": sig.sigma_minus, "zero": sig.sigma_zero}


def cmd_check(args) -> int:
    scheme = load_scheme(args.input)
    log.info("loaded scheme: degree %d, %d regions, %d singular points",
             scheme.degree, len(scheme.regions), len(scheme.singular_points))
    report = check_theorem_a(scheme, jobs=args.jobs)
    if args.format == "json":
        _emit_json(report.to_json())
    else:
        out = []
        if scheme.description:
            out.append(scheme.description)
        out.append(f"degree {scheme.degree} (k = {scheme.k}), r = {scheme.r}, nu = {scheme.nu}")
        out.append("partition form:")
        out.append("  " + str(report.form).replace("\n", "\n  "))
        out.append(f"inertia (sigma+, sigma-, sigma0) = {report.sigma}")
        out.append(f"mu+ = {report.mu_plus}, mu- = {report.mu_minus}, chi(X_R) = {report.chi_XR}")
        out.append(f"b2+(Y) = {format_rational(report.b2_plus_Y)}, b2-(Y) = {format_rational(report.b2_minus_Y)}")
        out.append("")
        width = max(len(s) for s in STATEMENTS)
        out.append(f" #  {'inequality':<{width}}  {'lhs':>4}  {'rhs':>6}  holds")
        for i in range(4):
            mark = "yes" if report.holds[i] else _paint("NO", "31")
            out.append(
                f" {i + 1}  {STATEMENTS[i]:<{width}}  {report.lhs[i]:>4}  "
                f"{format_rational(report.rhs[i]):>6}  {mark}"
            )
        if report.petrovskii_lower_holds is not None:
            lo = "yes" if report.petrovskii_lower_holds else "NO"
            hi = "yes" if report.petrovskii_upper_holds else "NO"
            out.append(f"Petrovskii bounds: lower {lo}, upper {hi}")
        colour = "32" if report.verdict is Verdict.CONSISTENT else "31;1"
        out.append("verdict: " + _paint(report.verdict.value, colour))
        print("\n".join(out))
    return EXIT_OK if report.verdict is Verdict.CONSISTENT else EXIT_PROHIBITED


def cmd_local_form(args) -> int:
    fixture = load_fixture(args.input)
    qp = compute_qp(fixture)
    sig = inertia(qp)
    if args.format == "json":
        payload = {
            "mu": fixture.mu,
            "rho": fixture.rho,
            "delta": fixture.delta,
            "local_form": qp.to_json(),
            "inertia": _inertia_json(sig),
        }
        if args.verbose:
            payload["tilde_form"] = build_tilde_form(fixture).to_json()
        _emit_json(payload)
    else:
        print(f"mu = {fixture.mu}, rho = {fixture.rho}, delta = {fixture.delta}")
        if args.verbose:
            print("tilde form:")
            print("  " + str(build_tilde_form(fixture)).replace("\n", "\n  "))
        print("local form:")
        print("  " + str(qp).replace("\n", "\n  "))
        print(f"inertia {sig}")
    return EXIT_OK


def _catalog_entry(t):
    form = catalog_form(t)
    return t, form, inertia(form), catalog_milnor(t)


def cmd_catalog(args) -> int:
    if args.type:
        if args.variant is None:
            name = args.type.strip().upper()
            mu = int(name[1:]) if name[1:].isdigit() else 0
            types = [t for t in catalog_types(mu) if t.name == name]
            if not types:
                raise UnknownType(f"no catalog rows for {args.type!r}")
        else:
            types = [parse_type(args.type, args.variant)]
    else:
        types = list(catalog_types(args.max_index))
    entries = [_catalog_entry(t) for t in types]
    if args.format == "json":
        _emit_json([
            {
                "type": t.name,
                "family": t.family,
                "milnor_index": t.milnor_index,
                "variant": t.variant,
                "n": t.n,
                "rho": t.rho,
                "matrix": form.to_json(),
                "inertia": _inertia_json(sig),
                "milnor": {"mu_plus": mil[0], "mu_minus": mil[1]},
                "notes": sector_notes(t),
                "fixture": has_fixture(t),
            }
            for t, form, sig, mil in entries
        ])
        return EXIT_OK
    for t, form, sig, mil in entries:
        print(f"{t.name:<4} {t.variant}   (n = {t.n}, rho = {t.rho})" if t.n is not None
              else f"{t.name:<4} {t.variant}   (rho = {t.rho})")
        print("  " + str(form).replace("\n", "\n  "))
        print(f"  inertia {sig}, Milnor (mu+, mu-) = {mil}")
        if sector_notes(t):
            print(f"  note: {sector_notes(t)}")
    return EXIT_OK


def cmd_inertia(args) -> int:
    form = load_matrix(args.input)
    sig = inertia(form)
    if args.format == "json":
        _emit_json({"dim": form.dim, "inertia": _inertia_json(sig)})
    else:
        print(sig)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json"), default="human", help="output format")
    common.add_argument("-v", "--verbose", action="count", default=0, help="more detail on stderr")

    parser = argparse.ArgumentParser(
        prog="curvecheck",
        description="Partition forms and Arnold-Viro type prohibitions for real plane curve schemes.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="evaluate the four inequalities on a scheme file")
    p.add_argument("input", help="scheme file (JSON)")
    p.add_argument("--jobs", type=int, default=1, help="threads for per-point local forms")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("local-form", parents=[common], help="local form of a morsification fixture")
    p.add_argument("input", help="morsification fixture (JSON)")
    p.set_defaults(func=cmd_local_form)

    p = sub.add_parser("catalog", parents=[common], help="catalog matrices of simple singularities")
    p.add_argument("type", nargs="?", help="e.g. A3, D5, E7; omit to list every row")
    p.add_argument("--variant", help='defining polynomial of the sign case, e.g. "x^{2n}-y^2"')
    p.add_argument("--max-index", type=int, default=8, help="largest Milnor number listed (default 8)")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("inertia", parents=[common], help="inertia of a rational symmetric matrix file")
    p.add_argument("input", help="text file, one row per line, entries p/q or integers")
    p.set_defaults(func=cmd_inertia)
    return parser


def _show_warning(message, category, filename, lineno, file=None, line=None):
    print(f"warning: {message}", file=sys.stderr)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose > 1 else logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    with warnings.catch_warnings():
        warnings.showwarning = _show_warning
        try:
            return args.func(args)
        except CurveCheckError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INVALID
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
