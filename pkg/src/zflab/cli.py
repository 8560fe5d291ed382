"""Command line front end.

Graphs are given either as a file path (edge-list text or the JSON form) or
as a family spec:

    path:N cycle:N complete:N kbip:A,B circulant:N:S1,S2,...
    aztec:R ecg:T,K petersen:N,K cart:SPEC+SPEC

Examples: "circulant:8:1,3", "ecg:1,2", "cart:cycle:8+path:3".
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import certify as _certify
from . import equitable as _equitable
from . import forcing as _forcing
from . import graphs as _graphs
from . import redrule as _redrule
from . import structure as _structure
from .linalg import QQ, adjacency_matrix, parse_matrix


def parse_graph_spec(spec):
    if os.path.exists(spec):
        with open(spec) as fh:
            return _graphs.read_edge_list(fh.read())
    if spec.startswith("cart:"):
        left, sep, right = spec[5:].partition("+")
        if not sep:
            raise ValueError("cart needs two specs joined by '+'")
        return _graphs.cartesian_product(parse_graph_spec(left), parse_graph_spec(right))
    name, _, rest = spec.partition(":")
    args = [a for a in rest.split(":") if a] if rest else []
    if name == "path":
        return _graphs.path_graph(int(args[0]))
    if name == "cycle":
        return _graphs.cycle_graph(int(args[0]))
    if name == "complete":
        return _graphs.complete_graph(int(args[0]))
    if name == "kbip":
        a, b = (int(x) for x in args[0].split(","))
        return _graphs.complete_bipartite_graph(a, b)
    if name == "circulant":
        n = int(args[0])
        s = {int(x) for x in args[1].split(",")}
        return _graphs.circulant(n, s)
    if name == "aztec":
        return _graphs.aztec_diamond(int(args[0]))
    if name == "ecg":
        t, k = (int(x) for x in args[0].split(","))
        return _graphs.extended_cube(t, k)
    if name == "petersen":
        n, k = (int(x) for x in args[0].split(","))
        return _graphs.generalized_petersen(n, k)
    raise ValueError(f"cannot parse graph spec {spec!r}")


def _parse_vertex_list(text):
    return [int(tok) for tok in text.replace(",", " ").replace(":", " ").split()]


def _load_json_arg(arg):
    if os.path.exists(arg):
        with open(arg) as fh:
            return json.load(fh)
    return json.loads(arg)


def _emit(obj, args):
    print(json.dumps(obj, indent=2 if getattr(args, "pretty", False) else None))


def _emit_table(rows, args):
    """Aligned-column rendering of a list of flat dicts (all same keys)."""
    if not getattr(args, "table", False) or not rows:
        return
    keys = list(rows[0])
    cells = [[str(r[k]) for k in keys] for r in rows]
    widths = [max(len(k), *(len(c[i]) for c in cells)) for i, k in enumerate(keys)]
    print("  ".join(k.ljust(w) for k, w in zip(keys, widths)))
    for c in cells:
        print("  ".join(v.ljust(w) for v, w in zip(c, widths)))


def _cmd_zf(args):
    g = parse_graph_spec(args.graph)
    if args.zf_command == "closure":
        col = _forcing.zf_closure(g, _parse_vertex_list(args.set))
        _emit(
            {
                "colored": sorted(col.colored),
                "all_colored": col.all_colored,
                "forces": [list(f) for f in col.log],
            },
            args,
        )
        return 0
    res = _forcing.zero_forcing_number(
        g, size_hint=args.hint, assume_minimum=args.assume_hint
    )
    _emit(
        {
            "zf_number": res.zf_number,
            "witness": list(res.witness or ()),
            "forces": [list(f) for f in res.forces],
            "exact": res.is_exact,
        },
        args,
    )
    return 0


def _cmd_red(args):
    g = parse_graph_spec(args.graph)
    if args.red_command == "derive":
        cert = _redrule.derive_red_certificates(g)
        _emit([m.to_json_obj() for m in cert], args)
        return 0
    moves = [_redrule.RedMove.from_json_obj(o) for o in _load_json_arg(args.cert)]
    try:
        red = _redrule.apply_red_sequence(g, moves)
    except _redrule.RedCertificateError as exc:
        _emit({"ok": False, "failing_move": exc.index, "error": str(exc)}, args)
        return 1
    _emit({"ok": True, "red_set": red}, args)
    return 0


def _cmd_kappa(args):
    g = parse_graph_spec(args.graph)
    kw = _structure.vertex_connectivity(g)
    _emit({"kappa": kw.kappa, "separator": list(kw.separator)}, args)
    return 0


def _cmd_sap(args):
    g = parse_graph_spec(args.graph)
    if args.matrix:
        with open(args.matrix) as fh:
            a = parse_matrix(fh.read())
    else:
        a = adjacency_matrix(g, 0, QQ)
    rep = _structure.has_sap(a, g)
    out = {"has_sap": rep.has_sap, "violation_dim": rep.violation_dim}
    if rep.sample_violation is not None:
        out["sample_violation"] = [
            [str(x) for x in row] for row in rep.sample_violation.data
        ]
    _emit(out, args)
    return 0


def _cmd_equitable(args):
    g = parse_graph_spec(args.graph)
    if args.eq_command == "refine":
        initial = None
        if args.partition:
            initial = _load_json_arg(args.partition)["blocks"]
        part = _equitable.coarsest_equitable(g, initial)
        _emit({"blocks": [list(b) for b in part.blocks],
               "divisor": [list(r) for r in part.b]}, args)
        return 0
    blocks = _load_json_arg(args.partition)["blocks"]
    dm = _equitable.divisor_matrix(g, blocks)
    _emit({"divisor": [[int(x) for x in row] for row in dm.data]}, args)
    return 0


def _cmd_decompose(args):
    g = parse_graph_spec(args.graph)
    perm = _parse_vertex_list(args.perm)
    t0 = _parse_vertex_list(args.transversal) if args.transversal else None
    dec = _equitable.equitable_decomposition(g, perm, t0)
    out = {
        "orbit_size": dec.k,
        "exact": dec.exact,
        "transversals": [list(t) for t in dec.transversals],
    }
    if dec.exact:
        out["blocks"] = [[[str(x) for x in row] for row in b.data] for b in dec.blocks]
    else:
        out["blocks"] = [
            [[str(x) for x in row] for row in b] for b in dec.blocks
        ]
    out["block_spectra"] = [list(s.eigenvalues) for s in dec.block_spectra()]
    _emit(out, args)
    return 0


def _cmd_certify(args):
    g = parse_graph_spec(args.graph)
    primes = tuple(int(p) for p in args.primes.split(","))
    verdict = _certify.certify_universal_optimality(
        g, args.lam, primes, graph_id=args.graph
    )
    _emit(verdict.to_json_obj(), args)
    _emit_table(
        [
            {
                "graph": verdict.graph_id,
                "lambda": verdict.lam,
                "Z": verdict.z_number,
                "null_Q": verdict.nullity_q,
                **{f"null_{p}": v for p, v in verdict.nullities_mod_p.items()},
                "verdict": "Certified" if verdict.certified else "NotCertified",
            }
        ],
        args,
    )
    return 0 if verdict.certified else 1


def _cmd_mr2(args):
    g = parse_graph_spec(args.graph)
    res = _certify.min_rank_gf2_exhaustive(g, target_rank=args.target_rank)
    out = {"min_rank_gf2": res.min_rank, "witness_diagonal": list(res.witness_diagonal)}
    if args.target_rank is not None:
        out["target_rank"] = args.target_rank
        out["target_attained"] = res.target_attained
    _emit(out, args)
    if args.target_rank is not None and not res.target_attained:
        return 1
    return 0


def _cmd_report(args):
    g = parse_graph_spec(args.graph)
    rep = _certify.parameter_report(g, graph_id=args.graph)
    obj = rep.to_json_obj()
    _emit(obj, args)
    _emit_table(
        [{k: v for k, v in obj.items() if k not in ("nullities_Q", "sandwich")}],
        args,
    )
    return 0 if rep.chain_consistent() else 1


def _cmd_conjecture(args):
    ranges = {}
    if args.family == "circ_l":
        ranges["l_values"] = tuple(range(3, args.lmax + 1, 2))
        ranges["k_values"] = tuple(range(1, args.kmax + 1))
    else:
        ranges["t_values"] = tuple(range(0, args.tmax + 1))
        ranges["r_values"] = tuple(range(1, args.rmax + 1))
    rows = _certify.conjecture_harness(args.family, **ranges)
    _emit(
        [
            {
                "instance": r.instance,
                "n": r.n,
                "nullity_Q": r.nullity_q,
                "Z": r.z_number,
                "nullities_mod_p": {str(p): v for p, v in r.nullities_mod_p.items()},
                "conjectured": r.conjectured,
                "status": r.status,
            }
            for r in rows
        ],
        args,
    )
    _emit_table(
        [
            {
                "instance": r.instance,
                "n": r.n,
                "null_Q": r.nullity_q,
                "Z": r.z_number,
                "conjectured": r.conjectured,
                "status": r.status,
            }
            for r in rows
        ],
        args,
    )
    return 0 if all(r.status != "fail" for r in rows) else 1


def build_parser():
    ap = argparse.ArgumentParser(prog="zflab", description=__doc__)
    ap.add_argument("--pretty", action="store_true", help="indent JSON output")
    ap.add_argument(
        "--table",
        action="store_true",
        help="also print an aligned text table (certify / report / conjecture)",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    zf = sub.add_parser("zf", help="zero forcing")
    zf_sub = zf.add_subparsers(dest="zf_command", required=True)
    zc = zf_sub.add_parser("closure")
    zc.add_argument("--graph", required=True)
    zc.add_argument("--set", required=True)
    zn = zf_sub.add_parser("number")
    zn.add_argument("--graph", required=True)
    zn.add_argument("--hint", type=int, default=None)
    zn.add_argument("--assume-hint", action="store_true",
                    help="treat the hint as a proven lower bound")
    zf.set_defaults(func=_cmd_zf)

    red = sub.add_parser("red", help="red color-change certificates")
    red_sub = red.add_subparsers(dest="red_command", required=True)
    rv = red_sub.add_parser("verify")
    rv.add_argument("--graph", required=True)
    rv.add_argument("--cert", required=True, help="JSON list of moves (inline or file)")
    rd = red_sub.add_parser("derive")
    rd.add_argument("--graph", required=True)
    red.set_defaults(func=_cmd_red)

    ka = sub.add_parser("kappa", help="vertex connectivity")
    ka.add_argument("--graph", required=True)
    ka.set_defaults(func=_cmd_kappa)

    sp = sub.add_parser("sap", help="Strong Arnold Property of a matrix in S(G)")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--matrix", default=None, help="matrix text file; default A(G)")
    sp.set_defaults(func=_cmd_sap)

    eq = sub.add_parser("equitable", help="equitable partitions")
    eq_sub = eq.add_subparsers(dest="eq_command", required=True)
    er = eq_sub.add_parser("refine")
    er.add_argument("--graph", required=True)
    er.add_argument("--partition", default=None, help='JSON {"blocks": [[...], ...]}')
    ed = eq_sub.add_parser("divisor")
    ed.add_argument("--graph", required=True)
    ed.add_argument("--partition", required=True)
    eq.set_defaults(func=_cmd_equitable)

    de = sub.add_parser("decompose", help="root-of-unity block decomposition")
    de.add_argument("--graph", required=True)
    de.add_argument("--perm", required=True, help="image list, e.g. '3,4,...,2'")
    de.add_argument("--transversal", default=None)
    de.set_defaults(func=_cmd_decompose)

    ce = sub.add_parser("certify", help="field-independence certification")
    ce.add_argument("--graph", required=True)
    ce.add_argument("--lambda", dest="lam", type=int, default=0)
    ce.add_argument("--primes", default="2,3,5")
    ce.set_defaults(func=_cmd_certify)

    mr = sub.add_parser("mr2", help="exhaustive GF(2) minimum rank")
    mr.add_argument("--graph", required=True)
    mr.add_argument("--target-rank", type=int, default=None)
    mr.set_defaults(func=_cmd_mr2)

    rp = sub.add_parser("report", help="assembled parameter report")
    rp.add_argument("--graph", required=True)
    rp.set_defaults(func=_cmd_report)

    co = sub.add_parser("conjecture", help="conjecture instance tables")
    co.add_argument("--family", choices=("circ_l", "ecg_tr"), required=True)
    co.add_argument("--lmax", type=int, default=5)
    co.add_argument("--kmax", type=int, default=2)
    co.add_argument("--tmax", type=int, default=2)
    co.add_argument("--rmax", type=int, default=2)
    co.set_defaults(func=_cmd_conjecture)

    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
