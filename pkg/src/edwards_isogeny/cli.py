"""Command-line interface.

Every command prints one JSON document (search-primes prints JSON
lines first) carrying the field-operation counters it consumed.  Exit
codes: 0 success, 1 domain error, 2 usage error.

Integers are accepted in decimal (negative allowed, reduced mod p) or
0x-prefixed hex.  Small-field outputs use the signed representative of
least magnitude for readability; fields wider than 64 bits switch to
bare hex strings.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .curve import AffinePoint, EdwardsCurve
from .errors import EdwardsError
from .field import FieldElement, OpCounter, PrimeField
from .isogeny import IsogenyChain, OddIsogeny, OddKernel
from .sidh import run_exchange
from .supersingular import (COMPLETE_4, QUADRATIC_8, SearchSpec,
                            search_sidh_primes, sidh_key_bits,
                            verify_reference_table)
from .xonly import XZPoint, eval_3_isog, eval_5_isog, get_3_isog, run_5_isog

_SIGNED_LIMIT_BITS = 64


def _parse_int(text: str) -> int:
    return int(text, 0)


def _parse_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'x,y', got {text!r}")
    return _parse_int(parts[0]), _parse_int(parts[1])


def _fmt(v):
    if isinstance(v, FieldElement):
        if v.field.p.bit_length() <= _SIGNED_LIMIT_BITS:
            return v.signed()
        return v.to_hex()
    if hasattr(v, "to_str"):
        return v.to_str()
    return v


def _fmt_point(P: AffinePoint):
    return [_fmt(P.x), _fmt(P.y)]


def _curve(args) -> EdwardsCurve:
    field = PrimeField(args.p)
    return EdwardsCurve(field, field(getattr(args, "a", 1)), field(args.d))


def _point(curve: EdwardsCurve, xy: tuple[int, int]) -> AffinePoint:
    return AffinePoint(curve.field(xy[0]), curve.field(xy[1]))


def _finish(payload: dict, field=None) -> dict:
    """Attach the counters accumulated on the command's own field."""
    if "counters" not in payload:
        ctx = field.counter if field is not None else OpCounter()
        payload["counters"] = ctx.as_dict()
    return payload


# ----------------------------------------------------------------------
# subcommand bodies
# ----------------------------------------------------------------------

def _cmd_classify(args):
    curve = _curve(args)
    return _finish({"class": curve.class_tag}, curve.field)


def _cmd_j(args):
    curve = _curve(args)
    return _finish({"j": _fmt(curve.j_invariant())}, curve.field)


def _cmd_points(args):
    curve = _curve(args)
    pts = curve.points()
    return _finish({"order": curve.order(),
                    "affine_count": len(pts),
                    "singular_count": curve.singular_count(),
                    "points": [_fmt_point(P) for P in pts]}, curve.field)


def _cmd_order(args):
    curve = _curve(args)
    n = curve.point_order(_point(curve, args.point))
    return _finish({"order": n}, curve.field)


def _cmd_isogeny(args):
    curve = _curve(args)
    gen = _point(curve, args.gen)
    phi = OddIsogeny(OddKernel.from_generator(gen, args.degree, curve))
    out = {"l": phi.degree,
           "kernel": [_fmt_point(P) for P in phi.kernel.points],
           "A": _fmt(phi.kernel.A),
           "d_prime": _fmt(phi.codomain_d),
           "codomain_class": phi.codomain.class_tag}
    if args.point is not None:
        out["image"] = _fmt_point(phi(_point(curve, args.point), args.mode))
    return _finish(out, curve.field)


def _cmd_chain(args):
    curve = _curve(args)
    gen = _point(curve, args.gen)
    degrees = [int(t) for t in args.degrees.split(",")]
    chain = IsogenyChain(curve, gen, degrees, mode=args.mode)
    out = {"degrees": degrees,
           "steps": [{"degree": s.degree,
                      "kernel": [_fmt_point(P) for P in s.kernel.points],
                      "d_prime": _fmt(s.codomain_d)} for s in chain.steps],
           "d_prime": _fmt(chain.codomain.d),
           "j": _fmt(chain.codomain.j_invariant())}
    if args.point is not None:
        out["image"] = _fmt_point(chain(_point(curve, args.point)))
    return _finish(out, curve.field)


def _cmd_search_primes(args):
    variant = COMPLETE_4 if args.variant == "complete" else QUADRATIC_8
    spec = SearchSpec(target_bits=args.bits, variant=variant,
                      window=args.window, bits_tolerance=args.tolerance)
    results = search_sidh_primes(spec)
    if args.limit is not None:
        results = results[: args.limit]
    for r in results:
        print(json.dumps(r.to_json()))
    return _finish({"count": len(results),
                    "target_bits": args.bits,
                    "target_key_bits": sidh_key_bits(args.bits)})


def _cmd_verify_table(args):
    rows = verify_reference_table(rounds=args.rounds)
    return _finish({"rows": rows,
                    "all_bits_match": all(r["bits_match"] for r in rows),
                    "all_prime": all(r["is_prime"] for r in rows),
                    "all_hex_match": all(r["hex_match"] for r in rows)})


def _cmd_sidh_demo(args):
    return run_exchange(args.m, args.n, seed=args.seed,
                        secret_a=args.secret_a, secret_b=args.secret_b)


def _cmd_opcount_bench(args):
    if args.op == "proj3":
        field = PrimeField(23)
        K1 = XZPoint.from_x(field(-10))      # order-3 abscissa on d = -1
        P = XZPoint.from_x(field(2))
        get_3_isog(K1)
        cod = field.counter.as_dict()
        eval_3_isog(P, K1)
        total = field.counter.as_dict()
        ev = {k: total[k] - cod[k] for k in total}
    else:
        field = PrimeField(19)
        d = field(-1)
        K1 = XZPoint.from_x(field(6))        # order-5 kernel: x(Q), x(2Q)
        K2 = XZPoint.from_x(field(-8))
        P = XZPoint.from_x(field(2))
        run_5_isog(P, K1, K2, d)
        total = field.counter.as_dict()
        with field.counting(OpCounter()) as ectx:
            eval_5_isog(P, K1, K2, d)
        ev = ectx.as_dict()
        cod = {k: total[k] - ev[k] for k in total}
    return {"op": args.op, **total,
            "breakdown": {"codomain": cod, "eval": ev},
            "counters": total}


# ----------------------------------------------------------------------
# dispatch
# ----------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="edwards-isogeny",
        description="Odd-degree isogenies of supersingular Edwards curves")
    sub = top.add_subparsers(dest="command", required=True)

    def curve_flags(p, with_a=True):
        p.add_argument("--p", type=_parse_int, required=True, help="field modulus")
        if with_a:
            p.add_argument("--a", type=_parse_int, default=1)
        p.add_argument("--d", type=_parse_int, required=True)

    c = sub.add_parser("classify", help="curve class from chi(a), chi(d)")
    curve_flags(c)
    c.set_defaults(func=_cmd_classify)

    c = sub.add_parser("j", help="j-invariant of E_{a,d}")
    curve_flags(c)
    c.set_defaults(func=_cmd_j)

    c = sub.add_parser("points", help="desk-scale point enumeration and order")
    curve_flags(c)
    c.set_defaults(func=_cmd_points)

    c = sub.add_parser("order", help="order of a point")
    curve_flags(c)
    c.add_argument("--point", type=_parse_pair, required=True)
    c.set_defaults(func=_cmd_order)

    c = sub.add_parser("isogeny", help="odd-degree isogeny from a kernel generator")
    curve_flags(c, with_a=False)
    c.add_argument("--degree", type=int, required=True)
    c.add_argument("--gen", type=_parse_pair, required=True)
    c.add_argument("--point", type=_parse_pair, default=None)
    c.add_argument("--mode", choices=("rational", "additive"), default="rational")
    c.set_defaults(func=_cmd_isogeny, a=1)

    c = sub.add_parser("chain", help="composition of 3-/5-isogenies")
    curve_flags(c, with_a=False)
    c.add_argument("--gen", type=_parse_pair, required=True)
    c.add_argument("--degrees", required=True, help="e.g. 3,3,5")
    c.add_argument("--point", type=_parse_pair, default=None)
    c.add_argument("--mode", choices=("rational", "additive"), default="rational")
    c.set_defaults(func=_cmd_chain, a=1)

    c = sub.add_parser("search-primes", help="search p = cof*3^m*5^n - 1")
    c.add_argument("--bits", type=int, required=True)
    c.add_argument("--window", type=int, default=8)
    c.add_argument("--tolerance", type=int, default=16)
    c.add_argument("--variant", choices=("complete", "quadratic"), default="complete")
    c.add_argument("--limit", type=int, default=None)
    c.set_defaults(func=_cmd_search_primes)

    c = sub.add_parser("verify-table1", help="recompute the built-in reference table")
    c.add_argument("--rounds", type=int, default=64)
    c.set_defaults(func=_cmd_verify_table)

    c = sub.add_parser("sidh-demo", help="desk-scale SIDH key exchange")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--secret-a", type=int, default=None)
    c.add_argument("--secret-b", type=int, default=None)
    c.set_defaults(func=_cmd_sidh_demo)

    c = sub.add_parser("opcount-bench", help="exact M/S counts of the x-only ops")
    c.add_argument("--op", choices=("proj3", "proj5"), required=True)
    c.set_defaults(func=_cmd_opcount_bench)

    # Let values like "-10,9" pass as arguments, not option strings.
    pair_matcher = re.compile(r"^-\d+")
    for parser in [top, *sub.choices.values()]:
        if hasattr(parser, "_negative_number_matcher"):
            parser._negative_number_matcher = pair_matcher

    return top


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        payload = args.func(args)
    except (EdwardsError, ValueError) as exc:
        print(json.dumps({"status": "error",
                          "code": type(exc).__name__,
                          "message": str(exc)}))
        return 1
    print(json.dumps({"status": "ok", **payload}))
    return 0


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
