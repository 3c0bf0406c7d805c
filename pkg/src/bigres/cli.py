"""Command-line front end: betti, resolve, classify, rees, complex, verify.

Exit codes: 0 success (for ``verify``: every checked identity holds), 1 domain
error with a diagnostic naming the failed precondition, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import bettimath as bm
from . import complexes as cx
from . import groebner, orders, resolution, singularity as sg
from .errors import BigresError
from .ring import Bidegree, RingSpec


def _fraction_arg(text: str) -> Fraction:
    if "." in text:
        raise argparse.ArgumentTypeError(
            f"decimal weight {text!r} rejected; use an exact fraction like 1/3"
        )
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad fraction {text!r}: {exc}") from None


def _weights_arg(text: str) -> list[Fraction]:
    return [_fraction_arg(part) for part in text.split(",") if part != ""]


def _int_list_arg(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _infer_n(poly_text: str) -> int:
    indices = [int(m) for m in re.findall(r"x(\d+)", poly_text)]
    if not indices:
        raise BigresError("no x<i> variables found in the polynomial")
    return max(indices)


def _make_input(args) -> sg.SingularityInput:
    weights = getattr(args, "weights", None)
    n = len(weights) if weights else _infer_n(args.poly)
    return sg.make_input(n, args.poly, weights)


def _ring_from_json(doc: dict) -> RingSpec:
    w = doc.get("w_weights")
    return RingSpec(
        tuple(doc["vars"]),
        tuple(int(v) for v in doc["f_weights"]),
        tuple(int(v) for v in doc["v_weights"]),
        tuple(Fraction(v) for v in w) if w is not None else None,
    )


def _load_ideal(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    ring = _ring_from_json(doc["ring"])
    return ring, [ring.parse(g) for g in doc["gens"]]


def _print_betti(table: resolution.BettiTable, as_json: bool) -> None:
    if as_json:
        print(json.dumps(table.to_json_dict()))
        return
    print("betti:", " ".join(str(r) for r in table.ranks))
    for i, level in enumerate(table.shifts):
        print(f"  shifts[{i}]:", " ".join(f"({n},{m})" for n, m in level))
    print("regularity_F:", table.regularity_F())


def _complex_report(c: resolution.FreeComplex, as_json: bool, label: str) -> None:
    c.check_dd()
    shifts = [[list(s.as_pair()) for s in c.module(i).shifts]
              for i in range(len(c.maps) + 1)]
    if as_json:
        print(json.dumps({
            "kind": label,
            "ranks": c.ranks(),
            "shifts": shifts,
            "d_compose_d_zero": True,
            "maps": [[[str(p) for p in row] for row in m.entries] for m in c.maps],
        }))
        return
    print(f"{label}: ranks", " ".join(str(r) for r in c.ranks()))
    for i, level in enumerate(shifts):
        print(f"  shifts[{i}]:", " ".join(f"({n},{m})" for n, m in level))
    print("d o d = 0: ok")


# --- verbs -----------------------------------------------------------------------------


def _cmd_betti(args) -> int:
    inp = _make_input(args)
    if inp.w is None:
        raise BigresError("betti requires --weights (quasi-homogeneous pipeline)")
    table = sg.betti_of_Nf(inp, max_length=args.max_length)
    _print_betti(table, args.json)
    return 0


def _cmd_resolve(args) -> int:
    ring, gens = _load_ideal(args.ideal)
    pres = resolution.presentation_of_quotient(gens)
    complex_ = resolution.resolve(pres, args.max_length or ring.nvars + 1)
    if args.minimal:
        complex_ = resolution.minimalize(complex_)
        table = resolution.betti_table(complex_)
        _print_betti(table, args.json)
    else:
        _complex_report(complex_, args.json, "resolution")
    return 0


def _cmd_classify(args) -> int:
    inp = _make_input(args)
    verdict = sg.classify_quasi_homogeneous(inp)
    doc = {
        "milnor": verdict.milnor,
        "tjurina": verdict.tjurina,
        "quasi_homogeneous": verdict.quasi_homogeneous,
        "method": verdict.method_note,
    }
    if args.json:
        print(json.dumps(doc))
    else:
        print(f"milnor: {verdict.milnor}")
        print(f"tjurina: {verdict.tjurina}")
        print(f"quasi_homogeneous: {verdict.quasi_homogeneous}")
    return 0


def _cmd_rees(args) -> int:
    inp = _make_input(args)
    kernel = sg.rees_kernel(inp, include_f=args.with_s)
    linear = sg.is_linear_type(kernel)
    if args.json:
        print(json.dumps({
            "kernel": [str(p) for p in kernel],
            "linear_type": linear,
        }))
    else:
        print("kernel generators (reduced Groebner basis):")
        for p in kernel:
            print("  ", p)
        print("linear_type:", linear)
    return 0


def _cmd_complex(args) -> int:
    if args.kind == "koszul":
        if not args.ideal:
            raise BigresError("complex --kind koszul needs --ideal FILE.json")
        _, gens = _load_ideal(args.ideal)
        c = cx.koszul(cx.KoszulSpec(tuple(gens)))
        _complex_report(c, args.json, "koszul")
        return 0
    if args.kind == "genkoszul":
        if not args.poly:
            raise BigresError("complex --kind genkoszul needs --poly")
        inp = _make_input(args)
        ring = sg.grfds_ring(inp.n, inp.w, with_s=False)
        derivs = [inp.f.diff(f"x{i+1}").cast(ring) for i in range(inp.n)]
        xi = [f"xi{i+1}" for i in range(inp.n)]
        spec = cx.GenKoszulSpec(cx.prop16_matrix(derivs, xi).A, t=args.t, q=args.q)
        c = cx.generalized_koszul(spec)
        _complex_report(c, args.json, f"K(A,{args.t})")
        return 0
    raise BigresError(f"unknown complex kind {args.kind!r}")


# --- verify ----------------------------------------------------------------------------


def _weights_for(n: int) -> list[str]:
    return ["1/3"] * n


def _corpus_input(n: int) -> sg.SingularityInput:
    f = "+".join(f"x{i+1}^3" for i in range(n))
    return sg.make_input(n, f, _weights_for(n))


def _verify_thm3(n: int) -> bool:
    table = sg.betti_of_Nf(_corpus_input(n))
    ok = table.betti_numbers() == bm.thm3_closed_form(n).as_list()
    return ok and table.regularity_F() == 0


def _dsfs_cone(n: int) -> resolution.FreeComplex:
    inp = _corpus_input(n)
    ring = sg.grfds_ring(n, inp.w, with_s=True)
    derivs = [inp.f.diff(f"x{i+1}").cast(ring) for i in range(n)]
    k0 = cx.eagon_northcott(derivs, [f"xi{i+1}" for i in range(n)])
    s_chi = ring.var("s") - sg.euler_symbol(inp, ring)
    return cx.mapping_cone(cx.multiplication_chain_map(k0, s_chi))


def _verify_dsfs(n: int) -> bool:
    minimal = resolution.minimalize(_dsfs_cone(n))
    return resolution.betti_table(minimal).betti_numbers() == \
        bm.dsfs_closed_form(n).as_list()


def _verify_M(n: int) -> bool:
    inp = _corpus_input(n)
    ring = sg.grfds_ring(n, inp.w, with_s=True)
    cone1 = _dsfs_cone(n)
    cone2 = cx.mapping_cone(cx.multiplication_chain_map(cone1, inp.f.cast(ring)))
    minimal = resolution.minimalize(cone2)
    return resolution.betti_table(minimal).betti_numbers() == \
        bm.M_closed_form(n).as_list()


def _quadric_input(n: int) -> sg.SingularityInput:
    f = "+".join(f"x{i+1}^2" for i in range(n))
    return sg.make_input(n, f, [Fraction(1, 2)] * n)


def _verify_en(n: int) -> bool:
    inp = _quadric_input(n)
    ring = sg.grfds_ring(n, inp.w, with_s=False)
    derivs = [inp.f.diff(f"x{i+1}") for i in range(n)]
    gens = sg._sij(derivs, ring, n)
    pres = resolution.presentation_of_quotient(gens)
    minimal = resolution.minimalize(resolution.resolve(pres, ring.nvars + 1))
    return resolution.betti_table(minimal).betti_numbers() == \
        bm.en_closed_form(n).as_list()


def _smooth_generators(n: int):
    """Commutative symbols of the smooth-case presentation: t - x1, xi1 + tau,
    xi2, ..., xin, in a ring with trivial V-grading (the claim is F-graded)."""
    names = tuple(f"x{i+1}" for i in range(n)) + ("t",) \
        + tuple(f"xi{i+1}" for i in range(n)) + ("tau",)
    f_w = (0,) * n + (0,) + (1,) * n + (1,)
    v_w = (0,) * (2 * n + 2)
    ring = RingSpec(names, f_w, v_w, None, orders.grevlex(2 * n + 2))
    gens = [ring.var("t") - ring.var("x1"), ring.var("xi1") + ring.var("tau")]
    gens += [ring.var(f"xi{i+1}") for i in range(1, n)]
    return ring, gens


def _verify_smooth(n: int) -> bool:
    ring, gens = _smooth_generators(n)
    pres = resolution.presentation_of_quotient(gens)
    minimal = resolution.minimalize(resolution.resolve(pres, ring.nvars + 1))
    want = bm.smooth_closed_form(n, 1).as_list()
    return resolution.betti_table(minimal).betti_numbers() == want


def _verify_exactness(n: int) -> bool:
    inp = _quadric_input(n)
    ring = sg.grfds_ring(n, inp.w, with_s=False)
    derivs = [inp.f.diff(f"x{i+1}").cast(ring) for i in range(n)]
    xi = [f"xi{i+1}" for i in range(n)]
    ts = (0, 1) if n >= 2 else (0,)
    for t in ts:
        spec = cx.GenKoszulSpec(cx.prop16_matrix(derivs, xi).A, t=t)
        c = cx.generalized_koszul(spec)
        for pos in range(1, len(c.maps) + 1):
            if not resolution.homology_is_zero(c, pos):
                return False
    return True


_VERIFIERS = {
    "thm3": _verify_thm3,
    "dsfs": _verify_dsfs,
    "M": _verify_M,
    "en": _verify_en,
    "smooth": _verify_smooth,
    "exactness": _verify_exactness,
}


def _cmd_verify(args) -> int:
    fn = _VERIFIERS[args.check]
    all_ok = True
    for n in args.n:
        ok = fn(n)
        all_ok = all_ok and ok
        print(f"{'PASS' if ok else 'FAIL'} verify {args.check} n={n}")
    return 0 if all_ok else 1


# --- argument parsing --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bigres",
        description="Minimal bigraded free resolutions and Betti invariants "
                    "of hypersurface singularity modules.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("betti", help="Betti table of the bigraded module of f")
    p.add_argument("--poly", required=True)
    p.add_argument("--weights", type=_weights_arg, required=True)
    p.add_argument("--max-length", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_betti)

    p = sub.add_parser("resolve", help="resolve an ideal from a JSON file")
    p.add_argument("--ideal", required=True)
    p.add_argument("--minimal", action="store_true")
    p.add_argument("--max-length", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_resolve)

    p = sub.add_parser("classify", help="Milnor/Tjurina classification")
    p.add_argument("--poly", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("rees", help="kernel of the Rees-algebra map phi_f")
    p.add_argument("--poly", required=True)
    p.add_argument("--weights", type=_weights_arg, default=None)
    p.add_argument("--with-s", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_rees)

    p = sub.add_parser("complex", help="build an explicit complex")
    p.add_argument("--kind", choices=["koszul", "genkoszul"], required=True)
    p.add_argument("--ideal", default=None)
    p.add_argument("--poly", default=None)
    p.add_argument("--weights", type=_weights_arg, default=None)
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--q", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_complex)

    p = sub.add_parser("verify", help="cross-check computed against closed forms")
    p.add_argument("check", choices=sorted(_VERIFIERS))
    p.add_argument("--n", type=_int_list_arg, default=[2, 3])
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BigresError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
