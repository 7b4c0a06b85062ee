"""Command-line entry point: ``numindex <command> ...``.

Exit codes: 0 success, 2 precondition/schema error, 3 certification failure.
"""
from __future__ import annotations

import argparse
import logging
import sys

from . import attainment, index, io, operators, space, tensor
from .errors import CertificationFailure, PreconditionError
from .operators import Operator
from .space import EPS, PolytopeSpace
from .verify.sampling import DEFAULT_DENSITY

log = logging.getLogger("numindex")

GLOBAL_DEFAULTS = {"eps": EPS, "json": False, "allow_big": False, "symmetrize": False, "density": DEFAULT_DENSITY}


def _global_flags(parser: argparse.ArgumentParser) -> None:
    g = parser.add_argument_group("global options")
    g.add_argument("--eps", type=float, default=argparse.SUPPRESS, help=f"float tolerance (default {EPS:g})")
    g.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit a machine-readable report")
    g.add_argument("--allow-big", action="store_true", default=argparse.SUPPRESS, help="lift the n <= 3 cap on operator-space enumeration")
    g.add_argument("--symmetrize", action="store_true", default=argparse.SUPPRESS, help="complete asymmetric vertex files under negation")
    g.add_argument("--density", type=int, default=argparse.SUPPRESS, help="sphere mesh refinement level for sampled paths")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="numindex", description="Exact numerical-index toolkit for finite-dimensional real normed spaces.")
    _global_flags(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        p = sub.add_parser(name, **kw)
        _global_flags(p)
        return p

    p = add("space", help="inspect or dualize a space")
    p.add_argument("action", choices=["info", "dual"])
    p.add_argument("space")

    p = add("op", help="operator norm, numerical radius or numerical range")
    p.add_argument("action", choices=["norm", "radius", "range"])
    p.add_argument("space")
    p.add_argument("--matrix", required=True)

    p = add("dual-ball", help="extreme points of the w-dual ball")
    p.add_argument("action", choices=["extremes", "count"])
    p.add_argument("space")

    p = add("index", help="numerical index, exact or by search")
    p.add_argument("action", choices=["exact", "search"])
    p.add_argument("space")
    p.add_argument("--budget", type=int, default=index.DEFAULT_RESTARTS)
    p.add_argument("--seed", type=int, default=0)

    p = add("mcgregor", help="McGregor index-one criterion")
    p.add_argument("space")

    p = add("hulls", help="hull equalities for the w-dual and operator-dual balls")
    p.add_argument("space")

    p = add("bj", help="Birkhoff-James orthogonality for the numerical radius")
    p.add_argument("space")
    p.add_argument("--t", required=True, dest="t_matrix")
    p.add_argument("--w", required=True, action="append", dest="w_matrices")

    p = add("attain", help="numerical radius attainment set")
    p.add_argument("space")
    p.add_argument("--matrix", required=True)

    p = add("spear", help="is the identity a spear operator")
    p.add_argument("space")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _polytope(S) -> PolytopeSpace:
    if not isinstance(S, PolytopeSpace):
        raise PreconditionError(f"{S.name} is not a polytope space; this command is exact-only")
    return S


def _mode(T: Operator, args) -> dict:
    if T.exact:
        return {"mode": "exact"}
    return {"mode": "sampled", "density": args.density}


def run(args) -> tuple[dict, str]:
    """Execute one command; returns (report, human-readable text)."""
    S = io.parse_space(args.space, symmetrize=args.symmetrize)
    cmd = args.command

    if cmd == "space":
        if args.action == "info":
            info = {
                "name": S.name,
                "dim": S.dim,
                "kind": "polytope" if isinstance(S, PolytopeSpace) else "lp",
                "smooth": space.is_smooth_space(S),
                "strictly_convex": space.is_strictly_convex(S),
            }
            if isinstance(S, PolytopeSpace):
                info.update(vertex_count=len(S.vertices), facet_count=len(S.facets))
            else:
                info["p"] = S.p
            text = "\n".join(f"{k}: {v}" for k, v in info.items())
            return io.report("space info", S, {}, info), text
        D = space.dualize(S)
        return io.report("space dual", S, {}, D), io.dumps(io.space_to_dict(D)).rstrip()

    if cmd == "op":
        T = Operator(S, io.parse_matrix(args.matrix))
        inputs = {"matrix": T}
        prov = _mode(T, args)
        if args.action == "norm":
            val = operators.op_norm(T, args.density)
        elif args.action == "radius":
            val = operators.numerical_radius(T, args.density, args.eps)
        else:
            val = operators.numerical_range(T)
            rep = io.report("op range", S, inputs, val, provenance=prov)
            lines = [f"hull: [{io.jsonable(val.hull[0])}, {io.jsonable(val.hull[1])}]", f"radius: {io.jsonable(val.radius)}"]
            for f, (lo, hi) in val.facet_intervals:
                lines.append(f"  x*={io.jsonable(f)}: [{io.jsonable(lo)}, {io.jsonable(hi)}]")
            return rep, "\n".join(lines)
        return io.report(f"op {args.action}", S, inputs, val, provenance=prov), str(io.jsonable(val))

    S = _polytope(S)

    if cmd == "dual-ball":
        if args.action == "extremes":
            ext = tensor.extreme_dual_w(S, args.allow_big)
            cert = {"name": "polar vertex enumeration equals M", "passed": True}
            text = "\n".join(f"x={io.jsonable(tf.x)} xstar={io.jsonable(tf.xstar)}" for tf in ext)
            return io.report("dual-ball extremes", S, {}, list(ext), [cert]), text + f"\n{len(ext)} extreme functionals (certified)"
        c = tensor.count_extremes(S, args.allow_big)
        res = {"pair_count": c.pair_count, "formula_value": c.formula_value, "distinct_count": c.distinct_count, "ratio": c.ratio}
        return io.report("dual-ball count", S, {}, res), "\n".join(f"{k}: {io.jsonable(v)}" for k, v in res.items())

    if cmd == "index":
        if args.action == "exact":
            r = index.numerical_index_exact(S, args.allow_big)
            certs = []
            mc = index.mcgregor(S).index_one
            certs.append({"name": "index one iff McGregor", "passed": (r.value == 1) == mc})
            if not certs[0]["passed"]:
                raise CertificationFailure("exact index disagrees with the McGregor criterion")
            res = {"value": r.value, "witness": r.witness, "degenerate": r.degenerate}
            return io.report("index exact", S, {}, res, certs), f"n(X) = {io.jsonable(r.value)}"
        r = index.numerical_index_search(S, args.budget, args.seed)
        res = {"upper_bound": r.upper_bound, "argmin_operator": r.argmin_operator}
        prov = {"mode": "sampled", "seed": args.seed, "restarts": args.budget}
        return io.report("index search", S, {"budget": args.budget, "seed": args.seed}, res, provenance=prov), f"n(X) <= {r.upper_bound!r}"

    if cmd == "mcgregor":
        r = index.mcgregor(S)
        res = {"index_one": r.index_one}
        if r.witness:
            res["witness"] = {"x": r.witness[0], "xstar": r.witness[1], "value": r.witness[2]}
        text = f"index_one: {r.index_one}"
        if r.witness:
            text += f"\nwitness: x={io.jsonable(r.witness[0])} xstar={io.jsonable(r.witness[1])} value={io.jsonable(r.witness[2])}"
        return io.report("mcgregor", S, {}, res), text

    if cmd == "hulls":
        h = tensor.verify_hull_equality(S, args.allow_big)
        certs = [{"name": "w-dual ball equals co(M)", "passed": h.w_dual_eq}]
        if not h.w_dual_eq:
            raise CertificationFailure("polar of the w-ball differs from co(M)")
        return io.report("hulls", S, {}, h, certs), f"w_dual_eq: {h.w_dual_eq}\nop_dual_eq: {h.op_dual_eq}"

    if cmd == "bj":
        T = Operator(S, io.parse_matrix(args.t_matrix))
        W = [Operator(S, io.parse_matrix(m)) for m in args.w_matrices]
        r = attainment.bj_orthogonal_w(T, W)
        if r.orthogonal:
            cert = [{"x": p.x, "xstar": p.xstar, "sign": p.sign, "weight": c} for p, c in r.coefficients]
            res = {"orthogonal": True, "certificate": {"convex_weights": cert}}
            text = f"orthogonal: True ({len(cert)} attaining pairs)"
        else:
            res = {"orthogonal": False, "certificate": {"lambda": r.lam, "perturbed_radius": r.perturbed_radius}}
            text = f"orthogonal: False (lambda={io.jsonable(r.lam)}, w drops to {io.jsonable(r.perturbed_radius)})"
        return io.report("bj", S, {"t": T, "w": W}, res), text

    if cmd == "attain":
        T = Operator(S, io.parse_matrix(args.matrix))
        a = attainment.attainment_set(T)
        text = f"w(T) = {io.jsonable(a.radius)}\n" + "\n".join(
            f"x={io.jsonable(p.x)} xstar={io.jsonable(p.xstar)} sign={p.sign:+d}" for p in a.pairs)
        return io.report("attain", S, {"matrix": T}, a), text

    if cmd == "spear":
        r = index.spear_check_identity(S, args.trials, args.seed)
        res = {"holds": r.holds, "trials": r.trials, "witness": r.witness}
        text = f"identity is a spear: {r.holds}"
        if r.witness is not None:
            text += f"\nwitness A = {io.jsonable(r.witness)}"
        prov = {"mode": "exact", "seed": args.seed}
        return io.report("spear", S, {"trials": args.trials, "seed": args.seed}, res, provenance=prov), text

    raise PreconditionError(f"unknown command {cmd}")


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    for k, v in GLOBAL_DEFAULTS.items():
        if not hasattr(args, k):
            setattr(args, k, v)
    try:
        rep, text = run(args)
    except CertificationFailure as exc:
        print(f"certification failure: {exc}", file=sys.stderr)
        return 3
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(io.dumps(rep) if args.json else text + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
