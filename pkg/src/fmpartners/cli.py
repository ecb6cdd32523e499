"""Command-line front end exposing every library operation.

Exit codes: 0 when a report was produced, 1 on usage errors, 2 on
invalid input (also when the divisibility verifier finds a
counterexample), 3 when --strict was given and the result contains an
inconclusive component.  Identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bielliptic, elliptic, engine, lattices, mukai
from .errors import FMPartnersError, GroupTooLarge


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; the contract here reserves 2 for
    # invalid input, so route usage problems to exit code 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _load_json(source: str):
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError:
            text = source
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON ({exc}): {source!r}") from exc


def _lattice_arg(source: str) -> lattices.Lattice:
    data = _load_json(source)
    if isinstance(data, list):
        data = {"gram": data}
    try:
        return lattices.Lattice.from_dict(data)
    except (ValueError, TypeError) as exc:
        raise InputError(str(exc)) from exc


def _int_csv(text: str, expect: int | None = None) -> list[int]:
    try:
        values = [int(part.strip()) for part in text.split(",")]
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers: {text!r}") from exc
    if expect is not None and len(values) != expect:
        raise InputError(f"expected {expect} integers, got {len(values)}: {text!r}")
    return values


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"expected a rational p/q: {text!r}") from exc


def _gram_payload(lat: lattices.Lattice):
    return [list(row) for row in lat.gram]


# ---------------------------------------------------------------------------
# handlers: each returns (payload, inconclusive, exit_code)


def _cmd_lattice_info(args):
    lat = _lattice_arg(args.lattice)
    form = lattices.discriminant_form(lat)
    k = len(form.orders)
    units = [lattices._unit(k, i) for i in range(k)]
    if lat.is_even:
        q_values = [str(form.quadratic(u)) for u in units]
    else:
        q_values = None
    b_values = [[str(form.bilinear(u, w)) for w in units] for u in units]
    payload = {
        "rank": lat.rank,
        "determinant": lat.det,
        "signature": list(lattices.signature(lat)),
        "even": lat.is_even,
        "discriminant_group": list(form.orders),
        "two_elementary": lattices.is_two_elementary(lat),
        "discriminant_form": {
            "orders": list(form.orders),
            "q_generators": q_values,
            "b_generators": b_values,
        },
    }
    return payload, False, 0


def _cmd_lattice_genus_eq(args):
    l1 = _lattice_arg(args.first)
    l2 = _lattice_arg(args.second)
    try:
        same = lattices.same_genus(l1, l2, cap=args.cap)
    except GroupTooLarge as exc:
        return {"same_genus": None, "inconclusive": str(exc)}, True, 0
    return {"same_genus": same}, False, 0


def _cmd_lattice_isometric(args):
    l1 = _lattice_arg(args.first)
    l2 = _lattice_arg(args.second)
    verdict = lattices.isometric(l1, l2, radius=args.radius)
    payload = {
        "verdict": verdict.kind,
        "witness": ([list(row) for row in verdict.witness]
                    if verdict.witness else None),
        "reason": verdict.reason,
    }
    return payload, not verdict.decided, 0


def _cmd_lattice_overlattices(args):
    lat = _lattice_arg(args.lattice)
    try:
        found = lattices.overlattices(lat, even_only=args.even_only,
                                      cap=args.cap)
    except GroupTooLarge as exc:
        return {"overlattices": None, "inconclusive": str(exc)}, True, 0
    payload = {
        "count": len(found),
        "overlattices": [{"index": index, "gram": _gram_payload(m)}
                         for m, index in found],
    }
    return payload, False, 0


def _cmd_lattice_two_elementary(args):
    lat = _lattice_arg(args.lattice)
    return {"two_elementary": lattices.is_two_elementary(lat),
            "discriminant_group": list(lattices.discriminant_group(lat))}, False, 0


def _mukai_vector_csv(text: str, ns: lattices.Lattice,
                      epsilon: int) -> mukai.MukaiVector:
    values = _int_csv(text)
    if len(values) == 3 and ns.rank != 1 and values[1] == 0:
        # a lone middle 0 is shorthand for the zero divisor class
        return mukai.MukaiVector(values[0], (0,) * ns.rank, values[2], epsilon)
    if len(values) != ns.rank + 2:
        raise InputError(f"expected r,c1...,s with {ns.rank} c1 coordinates: "
                         f"{text!r}")
    return mukai.MukaiVector(values[0], tuple(values[1:-1]), values[-1],
                             epsilon)


def _cmd_mukai_pair(args):
    ns = _lattice_arg(args.ns)
    v1 = _mukai_vector_csv(args.v1, ns, args.epsilon)
    v2 = _mukai_vector_csv(args.v2, ns, args.epsilon)
    return {"pairing": mukai.mukai_pairing(v1, v2, ns)}, False, 0


def _cmd_mukai_vector(args):
    cd = mukai.ChernData(args.rank, tuple(_int_csv(args.c1)),
                         _fraction_arg(args.ch2))
    vec = mukai.mukai_vector(cd, args.epsilon, epsilon_sign=args.epsilon_sign)
    return {"r": vec.rank, "c1": list(vec.c1), "s": vec.s,
            "epsilon": vec.epsilon}, False, 0


def _chern_arg(source: str) -> mukai.ChernData:
    data = _load_json(source)
    try:
        return mukai.ChernData.from_dict(data)
    except (KeyError, ValueError, TypeError) as exc:
        raise InputError(f"bad Chern data {source!r}: {exc}") from exc


def _cmd_mukai_chi(args):
    e = _chern_arg(args.e)
    f = _chern_arg(args.f)
    data = _load_json(args.ambient)
    try:
        amb = mukai.IntersectionData.from_dict(data)
    except (KeyError, ValueError, TypeError) as exc:
        raise InputError(f"bad ambient data: {exc}") from exc
    return {"chi": mukai.euler_pairing_surface(e, f, amb)}, False, 0


def _cmd_mukai_consistency(args):
    e = _chern_arg(args.e)
    f = _chern_arg(args.f)
    ns = _lattice_arg(args.ns)
    amb = mukai.IntersectionData(ns, (0,) * ns.rank, 2 * args.epsilon)
    chi = mukai.euler_pairing_surface(e, f, amb)
    pairing = mukai.mukai_pairing(mukai.mukai_vector(e, args.epsilon),
                                  mukai.mukai_vector(f, args.epsilon), ns)
    return {"consistent": chi == -pairing, "chi": chi,
            "pairing": pairing}, False, 0


def _matrix_arg(text: str) -> elliptic.TransformMatrix:
    c, a, d, b = _int_csv(text, expect=4)
    return elliptic.TransformMatrix(((c, a), (d, b)))


def _cmd_elliptic_act(args):
    m = _matrix_arg(args.matrix)
    r, d = _int_csv(args.vector, expect=2)
    out = elliptic.fm_action(m, elliptic.RankDegree(r, d))
    return {"rank": out.rank, "degree": out.degree}, False, 0


def _cmd_elliptic_validate(args):
    m = _matrix_arg(args.matrix)
    surface = elliptic.EllipticSurfaceData(args.lam)
    return {"valid": elliptic.validate_transform(m, surface)}, False, 0


def _cmd_elliptic_partners(args):
    surface = elliptic.EllipticSurfaceData(args.lam,
                                           not args.kodaira_zero)
    residues, count = elliptic.enumerate_partners(surface)
    return {"residues": list(residues), "count": count,
            "count_is_upper_bound": True}, False, 0


def _cmd_bielliptic_pairing(args):
    a1, b1 = _int_csv(args.x, expect=2)
    a2, b2 = _int_csv(args.y, expect=2)
    value = bielliptic.num_pairing(bielliptic.NumClass(a1, b1),
                                   bielliptic.NumClass(a2, b2))
    return {"pairing": value}, False, 0


def _cmd_bielliptic_reduce(args):
    matrix, h = bielliptic.rank_reduction(args.rank, args.k, args.a)
    return {"matrix": [list(row) for row in matrix], "h": h}, False, 0


def _cmd_bielliptic_verify(args):
    try:
        t = bielliptic.BiellipticType(args.n, args.k)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    report = bielliptic.verify_divisibility_claim(t, args.bound)
    payload = {
        "checked": report.checked,
        "holds": report.holds,
        "counterexamples": [
            {"r": v.rank, "a": v.c1.a, "b": v.c1.b, "ch2": v.ch2}
            for v in report.counterexamples
        ],
    }
    return payload, False, (0 if report.holds else 2)


def _cmd_bielliptic_type(args):
    return {"valid": bielliptic.validate_type(args.n, args.k)}, False, 0


def _descriptor_arg(source: str) -> engine.SurfaceDescriptor:
    data = _load_json(source)
    if not isinstance(data, dict):
        raise InputError("surface descriptor must be a JSON object")
    return engine.SurfaceDescriptor.from_dict(data)


def _cmd_surface_partners(args):
    report = engine.fm_partner_report(_descriptor_arg(args.surface))
    return report.to_dict(), False, 0


def _cmd_surface_compare(args):
    report = engine.k3_abelian_obstruction(
        _descriptor_arg(args.first), _descriptor_arg(args.second),
        cap=args.cap, radius=args.radius)
    return report.to_dict(), report.has_inconclusive, 0


def _cmd_surface_budget(args):
    try:
        report = engine.finiteness_budget(_descriptor_arg(args.surface),
                                          cap=args.cap)
    except GroupTooLarge as exc:
        return {"overlattice_count": None, "inconclusive": str(exc)}, True, 0
    return report.to_dict(), False, 0


# ---------------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="fmpartners",
                     description="Lattice invariants and partner reports "
                                 "for minimal complex surfaces.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit machine-readable JSON")
    common.add_argument("--strict", action="store_true",
                        help="exit 3 when any result is inconclusive")
    common.add_argument("--cap", type=int, default=lattices.DEFAULT_CAP,
                        help="discriminant-group size cap for enumerations")
    common.add_argument("--radius", type=int, default=lattices.DEFAULT_RADIUS,
                        help="coordinate search radius for isometry tests")
    top = parser.add_subparsers(dest="group", required=True)

    lat = top.add_parser("lattice", help="lattice invariants").add_subparsers(
        dest="command", required=True)
    p = lat.add_parser("info", parents=[common])
    p.add_argument("lattice", help='{"gram": [[...]]} as file, inline JSON, or "-"')
    p.set_defaults(func=_cmd_lattice_info)
    p = lat.add_parser("genus-eq", parents=[common])
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_lattice_genus_eq)
    p = lat.add_parser("isometric", parents=[common])
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_lattice_isometric)
    p = lat.add_parser("overlattices", parents=[common])
    p.add_argument("lattice")
    p.add_argument("--even-only", action="store_true")
    p.set_defaults(func=_cmd_lattice_overlattices)
    p = lat.add_parser("two-elementary", parents=[common])
    p.add_argument("lattice")
    p.set_defaults(func=_cmd_lattice_two_elementary)

    muk = top.add_parser("mukai", help="Mukai vectors and pairings").add_subparsers(
        dest="command", required=True)
    p = muk.add_parser("pair", parents=[common])
    p.add_argument("--v1", required=True, help="r,c1...,s")
    p.add_argument("--v2", required=True, help="r,c1...,s")
    p.add_argument("--ns", required=True, help="lattice (file, JSON, or -)")
    p.add_argument("--epsilon", type=int, choices=(0, 1), default=1)
    p.set_defaults(func=_cmd_mukai_pair)
    p = muk.add_parser("vector", parents=[common])
    p.add_argument("--r", dest="rank", type=int, required=True)
    p.add_argument("--c1", required=True, help="comma-separated coordinates")
    p.add_argument("--ch2", required=True, help="integer or p/q")
    p.add_argument("--epsilon", type=int, choices=(0, 1), required=True)
    p.add_argument("--epsilon-sign", type=int, choices=(1, -1), default=1,
                   help="-1 flips the epsilon correction (comparison only)")
    p.set_defaults(func=_cmd_mukai_vector)
    p = muk.add_parser("chi", parents=[common])
    p.add_argument("--e", required=True, help='{"r":..,"c1":[..],"ch2":"p/q"}')
    p.add_argument("--f", required=True)
    p.add_argument("--ambient", required=True,
                   help='{"ns_gram":[[..]],"K":[..],"chiO":..}')
    p.set_defaults(func=_cmd_mukai_chi)
    p = muk.add_parser("consistency", parents=[common])
    p.add_argument("--e", required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--ns", required=True)
    p.add_argument("--epsilon", type=int, choices=(0, 1), required=True)
    p.set_defaults(func=_cmd_mukai_consistency)

    ell = top.add_parser("elliptic", help="elliptic surface partners").add_subparsers(
        dest="command", required=True)
    p = ell.add_parser("act", parents=[common])
    p.add_argument("--matrix", required=True, help="c,a,d,b (row-major)")
    p.add_argument("--v", dest="vector", required=True, help="rank,degree")
    p.set_defaults(func=_cmd_elliptic_act)
    p = ell.add_parser("validate", parents=[common])
    p.add_argument("--matrix", required=True, help="c,a,d,b (row-major)")
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.set_defaults(func=_cmd_elliptic_validate)
    p = ell.add_parser("partners", parents=[common])
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.add_argument("--kodaira-zero", action="store_true",
                   help="declare Kodaira dimension zero (out of scope)")
    p.set_defaults(func=_cmd_elliptic_partners)

    bie = top.add_parser("bielliptic", help="bielliptic sheaf classes").add_subparsers(
        dest="command", required=True)
    p = bie.add_parser("pairing", parents=[common])
    p.add_argument("--x", required=True, help="a,b")
    p.add_argument("--y", required=True, help="a,b")
    p.set_defaults(func=_cmd_bielliptic_pairing)
    p = bie.add_parser("reduce", parents=[common])
    p.add_argument("--r", dest="rank", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.set_defaults(func=_cmd_bielliptic_reduce)
    p = bie.add_parser("verify", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--bound", type=int, default=24)
    p.set_defaults(func=_cmd_bielliptic_verify)
    p = bie.add_parser("type", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_bielliptic_type)

    surf = top.add_parser("surface", help="partner reports").add_subparsers(
        dest="command", required=True)
    p = surf.add_parser("partners", parents=[common])
    p.add_argument("surface", help="surface descriptor (file, JSON, or -)")
    p.set_defaults(func=_cmd_surface_partners)
    p = surf.add_parser("compare", parents=[common])
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_surface_compare)
    p = surf.add_parser("budget", parents=[common])
    p.add_argument("surface")
    p.set_defaults(func=_cmd_surface_budget)

    return parser


def _render_human(payload, indent: int = 0) -> list[str]:
    lines = []
    pad = "  " * indent
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_render_human(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(f"{pad}  -")
                lines.extend(_render_human(item, indent + 2))
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: {json.dumps(value)}")
        else:
            lines.append(f"{pad}{key}: {value}")
    return lines


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload, inconclusive, code = args.func(args)
    except (InputError, FMPartnersError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(_render_human(payload)))
    if code:
        return code
    if inconclusive and args.strict:
        return 3
    return 0


def entry() -> None:
    raise SystemExit(main())
