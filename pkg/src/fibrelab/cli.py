"""Command-line front end.

Machine-readable output only on stdout (JSON, or CSV for scans); notes and
warnings on stderr.  Exit codes: 0 success, 1 domain error (reported as
``{"error": ...}``), 2 malformed input.  Identical invocations produce
byte-identical output; ``FIBRELAB_SEED`` overrides ``--seed`` when set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import curves, geography, linear_systems, pencils
from .polynomial import LiteralError, unipoly_from_literal

_SIGN_NOTE = ("note: singular-fibre contributions enter as e(F_s) - e(F), "
              "nonnegative and positive for nodal fibres; some printed forms "
              "of the fibre-sum formula carry the opposite sign.")


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _parse_poly(text: str):
    try:
        literal = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LiteralError(f"polynomial literal is not valid JSON: {exc}") from exc
    return unipoly_from_literal(literal)


def _load_params_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            obj = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise LiteralError(f"cannot read parameter file {path}: {exc}") from exc
    if not isinstance(obj, dict):
        raise LiteralError("parameter file must hold a JSON object")
    return obj


def _fraction_str(value: Fraction):
    return int(value) if value.denominator == 1 else str(value)


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def _run_construct(args) -> int:
    seed = int(os.environ.get("FIBRELAB_SEED", args.seed))
    if args.kind == "split":
        model = curves.construct_split(args.genus, seed)
    else:
        model = curves.construct_nodal(args.genus, args.nodes, seed)
    _emit(model.to_dict())
    return 0


def _run_classify(args) -> int:
    if args.file:
        params = _load_params_file(args.file)
        try:
            model = curves.HyperellipticModel.from_dict(params)
        except (KeyError, TypeError) as exc:
            raise LiteralError(f"model parameter file malformed: {exc}") from exc
    else:
        if args.f is None or args.genus is None:
            raise LiteralError("classify needs --genus and --f (or --file)")
        model = curves.HyperellipticModel(args.genus, _parse_poly(args.f))
    _emit(curves.classify(model).to_dict())
    return 0


def _run_pencil(args) -> int:
    if args.file:
        params = _load_params_file(args.file)
        try:
            g = int(params["g"])
            f0 = unipoly_from_literal(params["f0"])
            f1 = unipoly_from_literal(params["f1"])
        except (KeyError, TypeError) as exc:
            raise LiteralError(f"pencil parameter file malformed: {exc}") from exc
    else:
        if None in (args.genus, args.f0, args.f1):
            raise LiteralError("pencil needs --genus, --f0 and --f1 (or --file)")
        g, f0, f1 = args.genus, _parse_poly(args.f0), _parse_poly(args.f1)
    pencil = pencils.Pencil(g, f0, f1)
    summary = pencils.total_space_euler(pencil)
    print(_SIGN_NOTE, file=sys.stderr)
    if not summary.euler_exact:
        print("warning: a fibre has a worse-than-node singularity; "
              "e_total is a certified lower bound only.", file=sys.stderr)
    _emit({"pencil": pencil.to_dict(), "summary": summary.to_dict()})
    return 0


def _run_systems(args) -> int:
    def need(*names):
        missing = [n for n in names if getattr(args, n) is None]
        if missing:
            raise LiteralError(
                f"query {args.query!r} needs --{', --'.join(m.replace('_', '-') for m in missing)}")

    surface, query = args.surface, args.query
    if surface == "P1xP1":
        if query == "h0":
            need("a", "b")
            result = linear_systems.h0_p1xp1(linear_systems.Bidegree(args.a, args.b))
        elif query == "genus":
            need("a", "b")
            result = linear_systems.arithmetic_genus_p1xp1(
                linear_systems.Bidegree(args.a, args.b))
        elif query == "severi":
            need("a", "b", "nodes")
            result = linear_systems.severi_dimension(
                linear_systems.SeveriSpec(linear_systems.Bidegree(args.a, args.b), args.nodes))
        elif query == "prescribed-nodes":
            need("genus", "nodes")
            result = linear_systems.prescribed_nodes_dimension(args.genus, args.nodes)
        elif query == "hyperelliptic-bidegree":
            need("genus")
            d = linear_systems.hyperelliptic_bidegree(args.genus)
            result = {"a": d.a, "b": d.b}
        else:
            raise LiteralError(f"unknown P1xP1 query {query!r}")
    elif surface == "F_e":
        need("e")
        if query == "genus":
            need("a", "b")
            result = linear_systems.hirzebruch_genus(
                linear_systems.HirzebruchClass(args.e, args.a, args.b))
        elif query == "intersect":
            need("a", "b", "a2", "b2")
            result = linear_systems.hirzebruch_intersection(
                linear_systems.HirzebruchClass(args.e, args.a, args.b),
                linear_systems.HirzebruchClass(args.e, args.a2, args.b2))
        elif query == "effective":
            need("a", "b")
            result = linear_systems.hirzebruch_effective(
                linear_systems.HirzebruchClass(args.e, args.a, args.b))
        else:
            raise LiteralError(f"unknown F_e query {query!r}")
    else:  # DelPezzo1
        if query == "anticanonical-dim":
            need("r")
            result = linear_systems.delpezzo_anticanonical_dim(args.r)
        else:
            raise LiteralError(f"unknown DelPezzo1 query {query!r}")
    _emit({"surface": surface, "query": query, "result": result})
    return 0


def _invariants_from_args(args) -> geography.SurfaceInvariants:
    return geography.SurfaceInvariants(
        chi=args.chi, q=args.q, p_g=args.pg, K2=args.k2, e=args.e,
        g1=args.g1, g2=args.g2, epsilon=args.epsilon, d=getattr(args, "d", None))


def _run_invariants(args) -> int:
    op = args.operation
    if op == "noether-complete":
        _emit(geography.noether_complete(_invariants_from_args(args)).to_dict())
    elif op == "blow-up":
        _emit(geography.blow_up(_invariants_from_args(args), args.n).to_dict())
    elif op == "chi-bounds":
        _emit(geography.fibration_chi_bounds(_invariants_from_args(args)).to_dict())
    elif op == "xiao-validate":
        case = geography.XiaoCase.CASE_I if args.case == "i" else geography.XiaoCase.CASE_II
        _emit(geography.xiao_validate(_invariants_from_args(args), case).to_dict())
    elif op == "general-type":
        _emit(geography.general_type_checks(
            _invariants_from_args(args), args.minimal).to_dict())
    elif op == "elliptic-c2":
        c2, chi = geography.elliptic_c2(args.d)
        _emit({"c2": c2, "chi": chi})
    elif op == "slope":
        nu, verdict = geography.kodaira_slope(args.k2, args.c2)
        _emit({"slope": _fraction_str(nu), "verdict": verdict.value})
    else:  # hurwitz
        _emit({"bound": geography.hurwitz_bound(args.genus)})
    return 0


def _run_xiao_scan(args) -> int:
    rows = geography.xiao_admissible_scan(args.g2, args.chi_max)
    saw_eps0 = False
    if args.format == "csv":
        sys.stdout.write(geography.CSV_HEADER + "\n")
        for row in rows:  # streamed as computed
            saw_eps0 = saw_eps0 or "eps0" in row.flags
            sys.stdout.write(row.csv_row() + "\n")
    else:
        collected = []
        for row in rows:
            saw_eps0 = saw_eps0 or "eps0" in row.flags
            collected.append(row.to_dict())
        _emit({"g2": args.g2, "chi_max": args.chi_max, "rows": collected})
    if saw_eps0:
        print("note: rows flagged eps0 carry a weaker existence guarantee.",
              file=sys.stderr)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibrelab",
        description="Exact constructions of nodal hyperelliptic fibres, pencil "
                    "simulations, and surface-geography checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a seeded nodal or split model")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--kind", choices=["nodal", "split"], default="nodal")
    p.add_argument("--nodes", type=int, default=0, help="node count (nodal kind)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_run_construct)

    p = sub.add_parser("classify", help="classify a model y^2 = f(x)")
    p.add_argument("--genus", type=int)
    p.add_argument("--f", help="polynomial literal, ascending coefficients")
    p.add_argument("--file", help="JSON file with {genus, f}")
    p.set_defaults(handler=_run_classify)

    p = sub.add_parser("pencil", help="simulate a pencil (1-lam) f0 + lam f1")
    p.add_argument("--genus", type=int)
    p.add_argument("--f0")
    p.add_argument("--f1")
    p.add_argument("--file", help="JSON file with {g, f0, f1}")
    p.set_defaults(handler=_run_pencil)

    p = sub.add_parser("systems", help="linear-system dimension/genus calculators")
    p.add_argument("--surface", choices=["P1xP1", "F_e", "DelPezzo1"], required=True)
    p.add_argument("--query", required=True)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--a2", type=int)
    p.add_argument("--b2", type=int)
    p.add_argument("--e", type=int)
    p.add_argument("--nodes", type=int)
    p.add_argument("--genus", type=int)
    p.add_argument("--r", type=int)
    p.set_defaults(handler=_run_systems)

    p = sub.add_parser("invariants", help="surface-invariant identities and bounds")
    ops = p.add_subparsers(dest="operation", required=True)

    def add_inv_flags(sp, *, d_flag=False):
        sp.add_argument("--chi", type=int)
        sp.add_argument("--q", type=int)
        sp.add_argument("--pg", type=int)
        sp.add_argument("--k2", type=int)
        sp.add_argument("--e", type=int)
        sp.add_argument("--g1", type=int)
        sp.add_argument("--g2", type=int)
        sp.add_argument("--epsilon", type=int)
        if d_flag:
            sp.add_argument("--d", type=int)

    sp = ops.add_parser("noether-complete")
    add_inv_flags(sp, d_flag=True)
    sp.set_defaults(handler=_run_invariants)
    sp = ops.add_parser("blow-up")
    add_inv_flags(sp)
    sp.add_argument("--n", type=int, default=1)
    sp.set_defaults(handler=_run_invariants)
    sp = ops.add_parser("chi-bounds")
    add_inv_flags(sp)
    sp.set_defaults(handler=_run_invariants)
    sp = ops.add_parser("xiao-validate")
    add_inv_flags(sp)
    sp.add_argument("--case", choices=["i", "ii"], default="ii")
    sp.set_defaults(handler=_run_invariants)
    sp = ops.add_parser("general-type")
    add_inv_flags(sp)
    sp.add_argument("--minimal", action="store_true")
    sp.set_defaults(handler=_run_invariants)
    sp = ops.add_parser("elliptic-c2")
    sp.add_argument("--d", type=int, required=True)
    sp.set_defaults(handler=_run_invariants)
    sp = ops.add_parser("slope")
    sp.add_argument("--k2", type=int, required=True)
    sp.add_argument("--c2", type=int, required=True)
    sp.set_defaults(handler=_run_invariants)
    sp = ops.add_parser("hurwitz")
    sp.add_argument("--genus", type=int, required=True)
    sp.set_defaults(handler=_run_invariants)

    p = sub.add_parser("xiao-scan", help="stream admissible genus-2 (chi, eps, K2) tuples")
    p.add_argument("--g2", type=int, required=True)
    p.add_argument("--chi-max", dest="chi_max", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(handler=_run_xiao_scan)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except LiteralError as exc:
        _emit({"error": str(exc)})
        return 2
    except ValueError as exc:
        _emit({"error": str(exc)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
