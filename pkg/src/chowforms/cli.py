"""Command-line front end.

Subcommands: compute, incident, check, degenerate, implicitize, plucker.
Curve files are JSON documents

    {"n": 2, "d": 2, "coeffs": [["1","0","0"], ["0","1","0"], ["0","0","1"]]}

with n+1 rows of d+1 exact rationals ("p", "p/q", or plain integers); row i
lists component f_i's coefficients of z0^(d-j) z1^j for j = 0..d.

Exit codes: 0 success, 2 invalid input, 3 mathematical degeneracy (zero
biform, parametrization not birational), 4 internal cross-check failure.
Output is deterministic: fixed term order, fixed normalization, and the
sampling seed is printed whenever sampling is used.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .chow import CayleyBiform, cayley_biform, implicitize_plane_curve, incident, plucker_rewrite
from .curves import CurveMap, Plane
from .degeneration import boundary_factor_check, family_biform, join_family, limit_direction, normalize_attachment
from .oracle import check_curve, incident_oracle
from .polynomial import format_terms

__all__ = ["main", "entry"]


class InputError(Exception):
    """Invalid file, flag, or argument; maps to exit code 2."""


class DegenerateInput(Exception):
    """Mathematically degenerate input; maps to exit code 3."""


def _parse_rational(text, row: int, col: int) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise InputError(f"invalid rational at row {row} col {col}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"invalid rational at row {row} col {col}") from None


def load_curve(path: str) -> CurveMap:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(
            f"{path}: parse error at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(doc, dict):
        raise InputError(f"{path}: expected a JSON object")
    n, d, coeffs = doc.get("n"), doc.get("d"), doc.get("coeffs")
    if not isinstance(n, int) or not isinstance(d, int) or coeffs is None:
        raise InputError(f"{path}: need integer fields n, d and a coeffs array")
    if not isinstance(coeffs, list) or len(coeffs) != n + 1:
        raise InputError(f"{path}: coeffs must have {n + 1} rows")
    rows = []
    for i, row in enumerate(coeffs):
        if not isinstance(row, list) or len(row) != d + 1:
            raise InputError(f"{path}: row {i} must have {d + 1} entries")
        rows.append([_parse_rational(x, i, j) for j, x in enumerate(row)])
    try:
        return CurveMap.from_coeffs(rows)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def parse_plane(spec: str, n: int) -> Plane:
    halves = spec.split(";")
    if len(halves) != 2:
        raise InputError("plane must be 'u0,...,un;v0,...,vn'")
    covs = []
    for half in halves:
        parts = [p.strip() for p in half.split(",")]
        if len(parts) != n + 1:
            raise InputError(f"plane covectors must have {n + 1} entries")
        try:
            covs.append(tuple(Fraction(p) for p in parts))
        except (ValueError, ZeroDivisionError):
            raise InputError(f"invalid rational in plane spec {half!r}") from None
    try:
        return Plane(covs[0], covs[1])
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _biform_lines(ca: CayleyBiform, label: str = "biform") -> str:
    return f"{label} n={ca.n} d={ca.d}\n" + format_terms(ca.poly)


def _terms_json(poly) -> list[dict]:
    return [
        {"coeff": str(c), "exps": list(exps)}
        for exps, c in poly.sorted_terms()
    ]


def _warn_if_degenerate(f: CurveMap, seed: int) -> None:
    report = check_curve(f, rng=random.Random(seed))
    if not report.base_free:
        print("warning: parametrization has a base point", file=sys.stderr)
    elif not report.birational:
        print(
            f"warning: map degree onto image is {report.map_degree}, not 1",
            file=sys.stderr,
        )


def cmd_compute(args) -> int:
    f = load_curve(args.curve)
    _warn_if_degenerate(f, args.seed)
    ca = cayley_biform(f)
    if ca.is_zero:
        print("zero Cayley biform (base locus)", file=sys.stderr)
        return 3
    ca = ca.normalized()
    rep = plucker_rewrite(ca) if args.plucker else None
    if args.json:
        doc = {
            "n": ca.n,
            "d": ca.d,
            "variables": list(ca.poly.names),
            "terms": _terms_json(ca.poly),
        }
        if rep is not None:
            doc["plucker"] = {
                "variables": list(rep.poly.names),
                "canonical": rep.canonical,
                "terms": _terms_json(rep.poly),
            }
        print(json.dumps(doc, indent=2))
    else:
        print(_biform_lines(ca))
        if rep is not None:
            print(f"plucker canonical={'true' if rep.canonical else 'false'}")
            print(format_terms(rep.poly))
    return 0


def cmd_incident(args) -> int:
    f = load_curve(args.curve)
    plane = parse_plane(args.plane, f.n)
    verdicts = {}
    if args.method in ("chow", "both"):
        ca = cayley_biform(f)
        if ca.is_zero:
            raise DegenerateInput("zero Cayley biform (base locus)")
        verdicts["chow"] = incident(ca, plane)
    if args.method in ("oracle", "both"):
        try:
            verdicts["oracle"] = incident_oracle(f, plane)
        except ValueError as exc:
            raise DegenerateInput(str(exc)) from None
    if args.method == "both":
        print(f"chow: {_verdict(verdicts['chow'])}")
        print(f"oracle: {_verdict(verdicts['oracle'])}")
        if verdicts["chow"] == verdicts["oracle"]:
            print("AGREE")
            return 0
        print("DISAGREE")
        return 4
    print(_verdict(verdicts[args.method]))
    return 0


def _verdict(b: bool) -> str:
    return "INCIDENT" if b else "DISJOINT"


def cmd_check(args) -> int:
    f = load_curve(args.curve)
    report = check_curve(f, rng=random.Random(args.seed))
    doc = {
        "base_free": report.base_free,
        "map_degree": report.map_degree,
        "image_degree": report.image_degree,
        "in_U": report.birational,
        "seed": args.seed,
    }
    print(json.dumps(doc))
    return 0


def cmd_degenerate(args) -> int:
    f = load_curve(args.curve_f)
    g = load_curve(args.curve_g)
    if args.normalize_attachment:
        try:
            f = normalize_attachment(f, at=(1, 0))
            g = normalize_attachment(g, at=(0, 1))
        except ValueError as exc:
            raise InputError(str(exc)) from None
    _warn_if_degenerate(f, args.seed)
    _warn_if_degenerate(g, args.seed)
    try:
        family = join_family(f, g)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    fam = family_biform(family)
    if fam.is_zero:
        raise DegenerateInput("family biform is identically zero")
    if args.emit_eps_table:
        _write_eps_table(args.emit_eps_table, fam)
    limit = limit_direction(fam)
    ca_f = cayley_biform(f)
    ca_g = cayley_biform(g)
    if ca_f.is_zero or ca_g.is_zero:
        raise DegenerateInput("component Cayley biform is zero (base locus)")
    product = (ca_f * ca_g).normalized()
    factors = boundary_factor_check(limit, [ca_f, ca_g])
    print(_biform_lines(limit, label="limit"))
    print(_biform_lines(product, label="product"))
    print(f"FACTORS:{'yes' if factors else 'no'}")
    return 0 if factors else 4


def _write_eps_table(path: str, fam: CayleyBiform) -> None:
    parts = fam.poly.decompose("eps")
    lines = ["# eps_order\tmonomial\tcoeff"]
    for k in sorted(parts):
        for exps, c in parts[k].sorted_terms():
            mono = " ".join(
                f"{name}^{e}" for name, e in zip(parts[k].names, exps) if e
            )
            lines.append(f"{k}\t{mono or '1'}\t{c}")
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from None


def cmd_implicitize(args) -> int:
    f = load_curve(args.curve)
    if f.n != 2:
        raise InputError("implicitize needs a plane curve (n = 2)")
    report = check_curve(f, rng=random.Random(args.seed))
    if not report.birational:
        doc = {
            "base_free": report.base_free,
            "map_degree": report.map_degree,
            "image_degree": report.image_degree,
            "in_U": report.birational,
            "seed": args.seed,
        }
        print(json.dumps(doc))
        return 3
    poly = implicitize_plane_curve(f, rng=random.Random(args.seed))
    print(format_terms(poly))
    return 0


def cmd_plucker(args) -> int:
    f = load_curve(args.curve)
    _warn_if_degenerate(f, args.seed)
    ca = cayley_biform(f)
    if ca.is_zero:
        print("zero Cayley biform (base locus)", file=sys.stderr)
        return 3
    rep = plucker_rewrite(ca.normalized())
    print(f"plucker canonical={'true' if rep.canonical else 'false'}")
    print(format_terms(rep.poly))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chow",
        description="Exact Chow forms of rational curves: compute, test incidence, "
        "check parametrizations, implicitize, and degenerate.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print the normalized Chow biform of a curve")
    p.add_argument("curve")
    p.add_argument("--plucker", action="store_true", help="also print a Plucker rewrite")
    p.add_argument("--json", action="store_true", help="emit JSON instead of term lines")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("incident", help="test incidence with a codimension-2 plane")
    p.add_argument("curve")
    p.add_argument("--plane", required=True, help="'u0,...,un;v0,...,vn'")
    p.add_argument("--method", choices=["chow", "oracle", "both"], default="both")
    p.set_defaults(func=cmd_incident)

    p = sub.add_parser("check", help="base locus / map degree / image degree report")
    p.add_argument("curve")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("degenerate", help="join two curves and factor the limit biform")
    p.add_argument("curve_f")
    p.add_argument("curve_g")
    p.add_argument("--normalize-attachment", action="store_true")
    p.add_argument("--emit-eps-table", metavar="PATH")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_degenerate)

    p = sub.add_parser("implicitize", help="implicit equation of a plane curve")
    p.add_argument("curve")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_implicitize)

    p = sub.add_parser("plucker", help="Plucker rewrite of the normalized biform")
    p.add_argument("curve")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_plucker)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DegenerateInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    raise SystemExit(main())
