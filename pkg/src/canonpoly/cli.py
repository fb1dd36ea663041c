"""Command-line front end.

Subcommands: field, orbits, count, density, enumerate, verify, decompose,
compose, invert.  Field specs are "p^e:m[:modulus]" with the modulus in
comma-separated prime-field coefficients, ascending degree; the base may
also be a plain prime power such as "4" for "2^2".  Exit status is 0 only
when nothing failed to validate or verify.
"""

import argparse
import json
import random
import sys

from . import census, monoid, polys
from .errors import Error, NotInvertible, TooLarge
from .gf import Field, PrimePoly, factor_prime_power, is_prime
from .orbits import OrbitTable


def parse_field_spec(text: str) -> tuple[int, int, int, PrimePoly | None]:
    parts = text.split(":")
    if len(parts) not in (2, 3):
        raise ValueError(f"field spec {text!r} is not p^e:m[:modulus]")
    base = parts[0]
    if "^" in base:
        p_text, e_text = base.split("^")
        p, e = int(p_text), int(e_text)
        if not is_prime(p) or e < 1:
            raise ValueError(f"{base!r} is not a prime power")
    else:
        p, e = factor_prime_power(int(base))
    m = int(parts[1])
    modulus = PrimePoly.from_text(parts[2]) if len(parts) == 3 else None
    return p, e, m, modulus


def format_field_spec(p: int, e: int, m: int, modulus: PrimePoly | None = None) -> str:
    base = f"{p}^{e}" if e > 1 else str(p)
    spec = f"{base}:{m}"
    if modulus is not None:
        spec += f":{modulus}"
    return spec


def _build(spec: str) -> Field:
    p, e, m, modulus = parse_field_spec(spec)
    return Field(p, e, m, modulus)


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def _int_list(text: str) -> list[int]:
    """Parse "3,5,7" or an inclusive range "2..13"."""
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(t) for t in text.split(",")]


def cmd_field(args) -> int:
    ctx = _build(args.spec)
    payload = {
        "spec": format_field_spec(ctx.p, ctx.e, ctx.m),
        "p": ctx.p,
        "e": ctx.e,
        "q": ctx.q,
        "m": ctx.m,
        "modulus": str(ctx.modulus),
        "element_count": str(ctx.element_count),
    }
    lines = [
        f"field: GF({ctx.q}^{ctx.m})" + (f" with q = {ctx.p}^{ctx.e}" if ctx.e > 1 else ""),
        f"p: {ctx.p}  e: {ctx.e}  q: {ctx.q}  m: {ctx.m}",
        f"modulus: {ctx.modulus}",
        f"elements: {ctx.element_count}",
    ]
    _emit(args, payload, lines)
    return 0


def cmd_orbits(args) -> int:
    ctx = _build(args.spec)
    table = OrbitTable(ctx)
    lines = []
    for k, cycles in table.orbits.items():
        for i, cycle in enumerate(cycles, start=1):
            elems = " ".join(f"({ctx.elements[idx]})" for idx in cycle)
            lines.append(f"k={k} cycle {i}: {elems}")
    _emit(args, table.to_json(), lines)
    return 0


def _count_lines(report: census.CensusReport) -> list[str]:
    lines = [
        f"q={report.q} m={report.m}",
        "pi: " + " ".join(
            f"k={k}:{n}"
            for k, n in zip(report.cycle_lengths, report.irreducible_counts)
        ),
        f"monoid order: {report.monoid_order}",
        f"unit group order: {report.unit_group_order}",
        f"preserving maps: {report.preserving_count}",
    ]
    if report.density is not None:
        lines.append(f"density: {report.density} ({float(report.density)})")
        lines.append(f"unit density: {report.unit_density} ({float(report.unit_density)})")
    if report.log_density is not None:
        lines.append(f"log density: {report.log_density!r}")
    return lines


def cmd_count(args) -> int:
    ctx = _build(args.spec)
    report = census.census_report(ctx.q, ctx.m)
    _emit(args, report.to_json(), _count_lines(report))
    return 0


def cmd_density(args) -> int:
    modes = [args.fixed_q is not None, args.fixed_p is not None, args.diagonal is not None]
    if sum(modes) > 1:
        print("error: choose at most one sweep mode", file=sys.stderr)
        return 2
    if not any(modes):
        if args.spec is None:
            print("error: need a field spec or a sweep mode", file=sys.stderr)
            return 2
        ctx = _build(args.spec)
        report = census.census_report(ctx.q, ctx.m)
        _emit(args, report.to_json(), _count_lines(report))
        return 0
    if args.fixed_q is not None:
        values = [p for p in _int_list(args.degrees) if is_prime(p)]
        rows = census.convergence_table("fixed_q", values, fixed=args.fixed_q)
    elif args.fixed_p is not None:
        values = _int_list(args.orders)
        rows = census.convergence_table("fixed_p", values, fixed=args.fixed_p)
    else:
        values = [p for p in _int_list(args.diagonal) if is_prime(p)]
        rows = census.convergence_table("diagonal", values)
    if args.json:
        print(json.dumps({"rows": [[q, p, v] for q, p, v in rows]}, indent=2))
    else:
        print(census.convergence_csv(rows), end="")
    return 0


def cmd_enumerate(args) -> int:
    ctx = _build(args.spec)
    table = OrbitTable(ctx)
    shape = monoid.MonoidShape.from_orbits(table)
    out = []
    for elem in monoid.enumerate_monoid(shape, bound=args.bound):
        if args.units and not monoid.is_invertible(elem):
            continue
        out.append(str(polys.interpolate(ctx, monoid.to_function(elem, table))))
    _emit(args, {"polynomials": out}, out)
    return 0


def cmd_verify(args) -> int:
    ctx = _build(args.spec)
    table = OrbitTable(ctx)
    shape = monoid.MonoidShape.from_orbits(table)
    rng = random.Random(args.seed)
    checks = []

    def check(name, ok, detail=""):
        checks.append({"name": name, "ok": bool(ok), "detail": detail})

    exhaustive = ctx.q**ctx.element_count <= args.bound
    if exhaustive:
        report = census.brute_force_census(ctx, bound=args.bound)
        check(
            "member count",
            report.observed_members == report.monoid_order,
            f"observed {report.observed_members}, formula {report.monoid_order}",
        )
        check(
            "unit count",
            report.observed_units == report.unit_group_order,
            f"observed {report.observed_units}, formula {report.unit_group_order}",
        )
        if report.observed_preserving is not None:
            check(
                "preserving count",
                report.observed_preserving == report.preserving_count,
                f"observed {report.observed_preserving}, formula {report.preserving_count}",
            )
    samples = args.samples
    elems = None
    if shape.order <= min(args.bound, 1 << 14):
        elems = list(monoid.enumerate_monoid(shape, bound=args.bound))
    if elems is not None and shape.order <= 256:
        pairs = ((a, b) for a in elems for b in elems)
    else:
        pairs = (
            (monoid.random_element(shape, rng), monoid.random_element(shape, rng))
            for _ in range(samples)
        )
    if elems is not None:
        roundtrip_pool = elems
    else:
        roundtrip_pool = [monoid.random_element(shape, rng) for _ in range(samples)]
    hom_ok = all(
        monoid.to_function(monoid.compose(a, b), table)
        == monoid.to_function(a, table).after(monoid.to_function(b, table))
        for a, b in pairs
    )
    check("realization is a homomorphism", hom_ok)
    rt_ok = all(
        monoid.from_function(monoid.to_function(a, table), table) == a
        for a in roundtrip_pool
    )
    check("abstract/concrete round trip", rt_ok)
    units = (
        [a for a in elems if monoid.is_invertible(a)]
        if elems is not None
        else [monoid.random_unit(shape, rng) for _ in range(samples)]
    )
    ident = monoid.identity(shape)
    inv_ok = all(
        monoid.compose(u, monoid.invert(u)) == ident
        and monoid.compose(monoid.invert(u), u) == ident
        for u in units
    )
    check("units have two-sided inverses", inv_ok)
    ok = all(c["ok"] for c in checks)
    mode = "exhaustive" if exhaustive else "sampled"
    if args.json:
        print(json.dumps({"mode": mode, "pass": ok, "checks": checks}, indent=2))
    else:
        for c in checks:
            status = "ok" if c["ok"] else "FAIL"
            detail = f" ({c['detail']})" if c["detail"] else ""
            print(f"{status}: {c['name']}{detail}")
        print(f"{'PASS' if ok else 'FAIL'} ({mode})")
    return 0 if ok else 1


def cmd_decompose(args) -> int:
    ctx = _build(args.spec)
    table = OrbitTable(ctx)
    poly = polys.FieldPoly.parse(ctx, args.poly)
    elem = monoid.from_function(polys.func_from_poly(ctx, poly), table)
    print(json.dumps(elem.to_json(), indent=2 if args.json else None))
    return 0


def cmd_compose(args) -> int:
    ctx = _build(args.spec)
    f = polys.FieldPoly.parse(ctx, args.poly)
    g = polys.FieldPoly.parse(ctx, args.other)
    result = polys.compose_polys(ctx, f, g)
    _emit(args, {"poly": str(result)}, [str(result)])
    return 0


def cmd_invert(args) -> int:
    ctx = _build(args.spec)
    table = OrbitTable(ctx)
    poly = polys.FieldPoly.parse(ctx, args.poly)
    func = polys.func_from_poly(ctx, poly)
    if not func.is_bijection():
        raise NotInvertible(f"{poly} is not a permutation")
    elem = monoid.from_function(func, table)
    inverse = polys.interpolate(ctx, monoid.to_function(monoid.invert(elem), table))
    _emit(args, {"poly": str(inverse)}, [str(inverse)])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="canonpoly",
        description="Finite fields, their q-power orbits, and the monoid of "
        "canonical subfield-preserving polynomials.",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument(
        "--bound",
        type=int,
        default=census.DEFAULT_BOUND,
        help="feasibility bound for exhaustive work",
    )
    parser.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("field", help="describe a field")
    sp.add_argument("spec")
    sp.set_defaults(func=cmd_field)

    sp = sub.add_parser("orbits", help="list q-power cycles with labels")
    sp.add_argument("spec")
    sp.set_defaults(func=cmd_orbits)

    sp = sub.add_parser("count", help="closed-form counts and densities")
    sp.add_argument("spec")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("density", help="densities, or a convergence sweep as CSV")
    sp.add_argument("spec", nargs="?")
    sp.add_argument("--fixed-q", type=int, help="sweep prime degrees at this field order")
    sp.add_argument("--degrees", default="3,5,7,11", help="degree list or a..b range")
    sp.add_argument("--fixed-p", type=int, help="sweep field orders at this prime degree")
    sp.add_argument("--orders", default="2,3,5,7", help="order list or a..b range")
    sp.add_argument("--diagonal", help="primes (list or a..b) used as both q and degree")
    sp.set_defaults(func=cmd_density)

    sp = sub.add_parser("enumerate", help="list every member polynomial")
    sp.add_argument("spec")
    sp.add_argument("--units", action="store_true", help="only invertible members")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", help="run the oracle and structure checks")
    sp.add_argument("spec")
    sp.add_argument("--samples", type=int, default=1000)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("decompose", help="polynomial to (sigma, shifts) data")
    sp.add_argument("spec")
    sp.add_argument("poly")
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("compose", help="compose two polynomials")
    sp.add_argument("spec")
    sp.add_argument("poly")
    sp.add_argument("other")
    sp.set_defaults(func=cmd_compose)

    sp = sub.add_parser("invert", help="invert a permutation member")
    sp.add_argument("spec")
    sp.add_argument("poly")
    sp.set_defaults(func=cmd_invert)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (Error, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2 if isinstance(exc, ValueError) else 1


if __name__ == "__main__":
    sys.exit(main())
