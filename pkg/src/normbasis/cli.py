"""Command-line front end producing JSON certificates and text summaries.

Subcommands: field-info, normal-basis, primitive-element, ideal-minima,
check-product, check-bounds.  Exit codes: 0 pass/success, 1 input error,
2 certified failure of a checked inequality, 3 NotGalois for normal-basis.
"""

from __future__ import annotations

import argparse
import datetime
import json
import re
import sys
from fractions import Fraction

from . import __version__
from . import embeddings as emb
from . import normal_basis as nb
from . import primitive as pe
from .errors import BadParameter, NormbasisError, NotGalois
from .exact import UniPoly, fr, fr_str
from .galois import compute_galois_action
from .ideals import ideal_from_generators, ideal_mul, ideal_norm, ring_of_integers
from .minima import check_corollary_bounds, check_product_inequality, successive_minima
from .numberfield import FieldSpec, NumberField, catalog_field, make_field

REPORT_SCHEMA = "normbasis/cli-report/1"

_TOKEN = re.compile(r"\s*(\d+/\d+|\d+|[x^*+()-])")


def parse_poly_text(text: str) -> UniPoly:
    """Integer-coefficient expressions in x with ^, *, +, - (e.g. "x^3-2")."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise BadParameter(f"cannot tokenize polynomial at {text[pos:]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    if not tokens:
        raise BadParameter("empty polynomial")

    coeffs: dict[int, Fraction] = {}
    i = 0

    def term(sign: int):
        nonlocal i
        coeff = Fraction(sign)
        power = 0
        saw = False
        while i < len(tokens):
            t = tokens[i]
            if t in "+-":
                break
            saw = True
            if t == "*":
                i += 1
                continue
            if t == "x":
                i += 1
                if i < len(tokens) and tokens[i] == "^":
                    i += 1
                    if i >= len(tokens) or not tokens[i].isdigit():
                        raise BadParameter("expected integer exponent after ^")
                    power += int(tokens[i])
                    i += 1
                else:
                    power += 1
            elif t[0].isdigit():
                coeff *= Fraction(t)
                i += 1
            else:
                raise BadParameter(f"unexpected token {t!r} in polynomial")
        if not saw:
            raise BadParameter("dangling sign in polynomial")
        coeffs[power] = coeffs.get(power, Fraction(0)) + coeff

    sign = 1
    if tokens[0] in "+-":
        sign = -1 if tokens[0] == "-" else 1
        i = 1
    term(sign)
    while i < len(tokens):
        sign = -1 if tokens[i] == "-" else 1
        if tokens[i] not in "+-":
            raise BadParameter(f"expected + or - at token {tokens[i]!r}")
        i += 1
        term(sign)
    deg = max(coeffs)
    return UniPoly([coeffs.get(k, Fraction(0)) for k in range(deg + 1)])


_CATALOG = re.compile(r"catalog:(\w+)\((-?\d+)\)")


def resolve_field(args) -> NumberField:
    """Build the field from --field (catalog tag or FieldSpec JSON file) or
    --poly text with optional --basis JSON matrix of "p/q" strings."""
    if args.field:
        m = _CATALOG.fullmatch(args.field)
        if m:
            return catalog_field(m.group(1), int(m.group(2)), precision=args.precision)
        try:
            with open(args.field) as fh:
                data = json.load(fh)
        except OSError as exc:
            raise BadParameter(f"cannot read field spec {args.field!r}: {exc}")
        poly = UniPoly([fr(c) for c in data["poly"]])
        basis = None
        if data.get("basis"):
            basis = [[fr(c) for c in row] for row in data["basis"]]
        spec = FieldSpec(poly, basis, label=data.get("label", "user field"),
                         maximal=bool(data.get("maximal", False)))
        return make_field(spec, precision=args.precision)
    if args.poly:
        poly = parse_poly_text(args.poly)
        if any(c.denominator != 1 for c in poly.coeffs):
            raise BadParameter("defining polynomial must have integer coefficients")
        basis = None
        if args.basis:
            basis = [[fr(c) for c in row] for row in json.loads(args.basis)]
        spec = FieldSpec(poly, basis, label=args.poly, maximal=False)
        return make_field(spec, precision=args.precision)
    raise BadParameter("one of --field or --poly is required")


def parse_ideal(field: NumberField, text: str):
    """Generators separated by ';', each a polynomial in x with rational
    coefficients (e.g. "1+x;2")."""
    gens = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        p = parse_poly_text(part)
        if p.degree >= field.n:
            raise BadParameter(f"generator {part!r} has degree >= field degree")
        coords = list(p.coeffs) + [Fraction(0)] * (field.n - len(p.coeffs))
        gens.append(field.element(coords))
    if not gens:
        raise BadParameter("empty ideal generator list")
    return ideal_from_generators(field, gens)


# ---------------------------------------------------------------------------
# subcommands: each returns (exit_code, report_dict, text_lines)

def _field_info(args, field, es):
    report = {
        "label": field.label,
        "poly": [fr_str(c) for c in field.f.coeffs],
        "degree": field.n,
        "signature": [field.r1, field.r2],
        "disc": field.disc,
        "basis": [[fr_str(c) for c in row] for row in field.basis],
        "order_relative": not field.basis_is_maximal,
    }
    lines = [f"field {field.label}: degree {field.n}, signature "
             f"({field.r1},{field.r2}), disc {field.disc}",
             f"order-relative: {report['order_relative']}"]
    return 0, report, lines


def _normal_basis(args, field, es):
    action = compute_galois_action(field, es)
    cert = nb.find_normal_basis(field, es, action, precision=args.precision,
                                exhaustive=args.exhaustive)
    report = cert.to_json(basis=field.basis)
    report["galois"] = action.to_json()
    if args.verify:
        with open(args.verify) as fh:
            saved = json.load(fh)
        saved_cert = saved.get("report", saved)
        saved_cert.pop("galois", None)
        nb.verify_certificate_json(field, es, action, saved_cert)
        fresh = dict(report)
        fresh.pop("galois", None)
        stable = json.dumps(saved_cert, separators=(",", ":")) == \
            json.dumps(fresh, separators=(",", ":"))
        report["verify"] = {"valid": True, "byte_stable": stable}
        if not stable:
            return 2, report, ["verify: certificate valid but NOT byte-stable"]
    lines = [f"alpha coords {tuple(int(c) if c.denominator == 1 else str(c) for c in cert.alpha.coords)}"
             f" from simplex point {cert.coords}",
             f"delta = {fr_str(cert.delta_value)} (nonzero: normal basis certified)",
             f"sup-norm bound n|D|^(1/n): status {cert.status}",
             f"lower bound q = {fr_str(cert.prop2.q)}, q^n >= |D|: {cert.prop2.passed}"]
    code = 0 if cert.status == "OK" and cert.prop2.passed else 2
    return code, report, lines


def _primitive_element(args, field, es):
    cert = pe.find_primitive_element(field, es, precision=args.precision,
                                     exhaustive=args.exhaustive)
    report = cert.to_json()
    if args.verify:
        with open(args.verify) as fh:
            saved = json.load(fh)
        saved_cert = saved.get("report", saved)
        pe.verify_certificate_json(field, es, saved_cert)
        stable = json.dumps(saved_cert, separators=(",", ":")) == \
            json.dumps(report, separators=(",", ":"))
        report["verify"] = {"valid": True, "byte_stable": stable}
        if not stable:
            return 2, report, ["verify: certificate valid but NOT byte-stable"]
    lines = [f"alpha coords {[fr_str(c) for c in cert.alpha.coords]}"
             f" from simplex point {cert.coords}",
             f"minpoly coeffs {[fr_str(c) for c in cert.minpoly.coeffs]}"
             f" (degree {cert.minpoly.degree} = n: primitive)",
             f"sup-norm bound (n-1)|D|^(1/n): status {cert.status}"]
    return (0 if cert.status == "OK" else 2), report, lines


def _ideal_minima(args, field, es):
    ideal = parse_ideal(field, args.ideal[0]) if args.ideal else ring_of_integers(field)
    result = successive_minima(field, es, ideal, precision=args.precision)
    report = {"ideal": ideal.to_json(),
              "norm": fr_str(ideal_norm(field, ideal)),
              "minima": result.to_json()}
    lines = [f"ideal norm {report['norm']}"] + [
        f"lambda_{i + 1} in [{j['lo']}, {j['hi']}]"
        for i, j in enumerate(report["minima"]["lambdas"])]
    return 0, report, lines


def _check_product(args, field, es):
    if not args.ideal or len(args.ideal) != 2:
        raise BadParameter("check-product needs --ideal twice (I then J)")
    if args.k is None or args.l is None:
        raise BadParameter("check-product needs --k and --l")
    ideal_i = parse_ideal(field, args.ideal[0])
    ideal_j = parse_ideal(field, args.ideal[1])
    rep = check_product_inequality(field, es, ideal_i, ideal_j, args.k, args.l,
                                   precision=args.precision)
    report = {"I": ideal_i.to_json(), "J": ideal_j.to_json(),
              "IJ": ideal_mul(field, ideal_i, ideal_j).to_json(),
              "check": rep.to_json()}
    lines = [f"lambda_{field.n}(IJ) <= lambda_{args.k}(I) lambda_{args.l}(J): "
             f"{'PASS' if rep.passed else 'FAIL'}"]
    return (0 if rep.passed else 2), report, lines


def _check_bounds(args, field, es):
    ideal = parse_ideal(field, args.ideal[0]) if args.ideal else ring_of_integers(field)
    rep = check_corollary_bounds(field, es, ideal, precision=args.precision)
    report = {"ideal": ideal.to_json(), "check": rep.to_json()}
    ok = rep.supnorm_pass and rep.minkowski_pass
    lines = [f"lambda_n^n <= (2/pi)^(2 r2) |D| N(I): "
             f"{'PASS' if rep.supnorm_pass else 'FAIL'}",
             f"prod lambda_i <= (2/pi)^r2 sqrt|D| N(I): "
             f"{'PASS' if rep.minkowski_pass else 'FAIL'}"]
    return (0 if ok else 2), report, lines


_COMMANDS = {
    "field-info": _field_info,
    "normal-basis": _normal_basis,
    "primitive-element": _primitive_element,
    "ideal-minima": _ideal_minima,
    "check-product": _check_product,
    "check-bounds": _check_bounds,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="normbasis",
        description="certified normal-basis generators, primitive elements, "
                    "and ideal-lattice minima")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--field", help="catalog:quadratic(d), catalog:cyclotomic(m), "
                                       "or path to a FieldSpec JSON file")
        p.add_argument("--poly", help='defining polynomial text, e.g. "x^3-2"')
        p.add_argument("--basis", help='integral basis, JSON matrix of "p/q" strings')
        p.add_argument("--ideal", action="append",
                       help='generators "g1;g2" (repeat for a second ideal)')
        p.add_argument("--k", type=int)
        p.add_argument("--l", type=int)
        p.add_argument("--precision", type=int, default=emb.DEFAULT_PRECISION)
        p.add_argument("--exhaustive", action="store_true")
        p.add_argument("--json", action="store_true", dest="json_out")
        p.add_argument("--verify", help="re-validate a saved certificate JSON file")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--output", help="write the JSON report to this file")
    return parser


def run(args) -> int:
    try:
        field = resolve_field(args)
        es = emb.compute_embeddings(field, precision=args.precision)
        code, report, lines = _COMMANDS[args.command](args, field, es)
    except NotGalois as exc:
        print(f"error: not a Galois field ({exc.found} automorphisms found, "
              f"{exc.degree} needed)", file=sys.stderr)
        return 3
    except (BadParameter, NormbasisError, ValueError, KeyError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    envelope = {
        "schema": REPORT_SCHEMA,
        "command": args.command,
        "seed": args.seed,
        "precision": args.precision,
        "exit": code,
        "report": report,
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
    }
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(envelope, fh, indent=2)
            fh.write("\n")
    if args.json_out:
        print(json.dumps(envelope, indent=2))
    else:
        for line in lines:
            print(line)
        print("PASS" if code == 0 else f"FAIL (exit {code})")
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
