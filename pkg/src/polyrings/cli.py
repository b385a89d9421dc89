"""Command line front end.

Exit codes: 0 success, 1 input or validation problems, 2 internal
invariant violations (purity, bijection, cross-method disagreement).
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    ConsistencyError,
    DecompositionFailed,
    GroebnerUnverified,
    NotAFacet,
    NotPure,
    PolyominoError,
    TooLarge,
)
from .gorenstein import (
    is_gorenstein_convex,
    is_gorenstein_stack_corners,
    is_gorenstein_stack_subsets,
)
from .invariants import decompose, full_report, multiplicity_recursive
from .polyomino import (
    Polyomino,
    corners,
    has_monotone_paths,
    heights,
    is_column_convex,
    is_convex,
    is_row_convex,
    is_stack,
    parse,
    serialize,
)
from .srcomplex import build_complex, invariants_from_complex, facets
from .toric import inner_minors, leading_term, mono_str, var_str, variable_order, verify_groebner


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def _load(args) -> Polyomino:
    if (args.path is None) == (args.grid is None):
        raise PolyominoError("give exactly one input: a grid file path or --grid TEXT")
    if args.grid is not None:
        return parse(args.grid.replace("\\n", "\n"))
    if args.path == "-":
        return parse(sys.stdin.read())
    try:
        text = open(args.path, encoding="utf-8").read()
    except OSError as exc:
        raise PolyominoError(f"cannot read {args.path}: {exc}") from exc
    return parse(text)


def _vertex_list(vs) -> list[list[int]]:
    return [list(v) for v in sorted(vs)]


def cmd_check(p: Polyomino, args) -> int:
    convex = is_convex(p)
    stack = is_stack(p)
    if args.oracle and convex != has_monotone_paths(p):
        raise ConsistencyError("convexity and monotone-path test disagree")
    cs = corners(p)
    info = {
        "cells": len(p),
        "m": p.m,
        "n": p.n,
        "row_convex": is_row_convex(p),
        "column_convex": is_column_convex(p),
        "convex": convex,
        "stack": stack,
        "heights": list(heights(p)) if convex else None,
        "inside_corners": _vertex_list(cs["inside"]),
        "outside_corners": _vertex_list(cs["outside"]),
        "interior_corners": _vertex_list(cs["interior"]),
    }
    if args.json:
        _emit_json(info)
        return 0
    for key in ("cells", "m", "n", "row_convex", "column_convex", "convex", "stack"):
        print(f"{key}: {info[key]}")
    if info["heights"] is not None:
        print("heights:", " ".join(str(h) for h in info["heights"]))
    for key in ("inside_corners", "outside_corners", "interior_corners"):
        pts = " ".join(f"({i},{j})" for i, j in info[key])
        print(f"{key.replace('_', ' ')}: {pts}" if pts else f"{key.replace('_', ' ')}: none")
    return 0


def cmd_gorenstein(p: Polyomino, args) -> int:
    verdict = is_gorenstein_convex(p, args.max_subset_bits)
    if args.oracle and is_stack(p):
        sub = is_gorenstein_stack_subsets(p)
        cor = is_gorenstein_stack_corners(p)
        if not verdict.gorenstein == sub.gorenstein == cor:
            raise ConsistencyError(
                f"checker disagreement: convex={verdict.gorenstein} "
                f"level-sets={sub.gorenstein} corners={cor}"
            )
        if len(p.vertices) <= 24:
            ci = invariants_from_complex(build_complex(p))
            h = ci.h_vector
            if (h == h[::-1]) != verdict.gorenstein:
                raise ConsistencyError(
                    f"h-vector {h} palindromicity contradicts verdict {verdict.gorenstein}"
                )
    if args.json:
        payload = {
            "gorenstein": verdict.gorenstein,
            "method": verdict.method,
            "violation": None
            if verdict.violation is None
            else {
                "kind": verdict.violation.kind,
                "side": verdict.violation.subset.side,
                "subset": list(verdict.violation.subset.indices()),
                "observed": verdict.violation.observed,
                "required": verdict.violation.required,
            },
            "certificates": [
                {
                    "subset": list(c.subset.indices()),
                    "neighbors": list(c.neighbors.indices()),
                }
                for c in verdict.certificates
            ],
        }
        _emit_json(payload)
        return 0
    if verdict.gorenstein:
        print("Gorenstein")
        for c in verdict.certificates:
            print(f"certificate T={c.subset}, N_Y(T)={c.neighbors}")
    else:
        print(f"NOT Gorenstein; {verdict.violation}")
    return 0


def cmd_invariants(p: Polyomino, args) -> int:
    if args.oracle and is_stack(p) and len(p.vertices) > args.max_facet_vertices:
        raise PolyominoError(
            "oracle cross-check impossible: vertex count exceeds --max-facet-vertices"
        )
    rep = full_report(
        p,
        max_subset_bits=args.max_subset_bits,
        max_facet_vertices=args.max_facet_vertices,
    )
    if args.oracle and is_stack(p):
        from .polyomino import transpose

        q = transpose(p)
        if is_stack(q):
            flipped = multiplicity_recursive(q)
        else:
            try:
                flipped = invariants_from_complex(build_complex(q)).multiplicity
            except (GroebnerUnverified, TooLarge):
                flipped = None
        if flipped is not None and flipped != rep.multiplicity:
            raise ConsistencyError(
                f"multiplicity changes under transpose: {rep.multiplicity} vs {flipped}"
            )
        if rep.methods.get("a_invariant") == "complex" and p.m + p.n <= 14:
            from .bigraph import build_graph, max_disjoint_directed_cuts

            cuts, _ = max_disjoint_directed_cuts(build_graph(p))
            if cuts != -rep.a_invariant:
                raise ConsistencyError(
                    f"max disjoint directed cuts {cuts} vs -a = {-rep.a_invariant}"
                )
    if args.json:
        _emit_json(rep.to_dict())
        return 0
    print(f"box: [{rep.m}] x [{rep.n}]   d: {rep.d}")
    for name, value in (
        ("a-invariant", rep.a_invariant),
        ("regularity", rep.regularity),
        ("multiplicity", rep.multiplicity),
    ):
        tag = rep.methods[name.replace("-", "_")]
        print(f"{name}: {value if value is not None else 'unavailable'} [{tag}]")
    if rep.h_vector is not None:
        print("h-vector:", " ".join(str(x) for x in rep.h_vector))
    else:
        print("h-vector: unavailable")
    if rep.gorenstein is None:
        print("gorenstein: unavailable")
    else:
        print(f"gorenstein: {'yes' if rep.gorenstein else 'no'}")
    for note in rep.notes:
        print(f"note: {note}")
    return 0


def cmd_facets(p: Polyomino, args) -> int:
    c = build_complex(p)
    fs = facets(c, args.max_facet_vertices)
    if args.oracle:
        forb = c.forbidden
        verts = set(c.vertices)
        for f in fs:
            for pair in forb:
                if pair <= f:
                    raise ConsistencyError(f"facet contains a forbidden pair: {sorted(f)}")
            for v in verts - f:
                if not any(frozenset((v, u)) in forb for u in f):
                    raise ConsistencyError(f"facet is not maximal: {sorted(f)}")
        if is_stack(p) and multiplicity_recursive(p) != len(fs):
            raise ConsistencyError(
                f"facet count {len(fs)} vs recursion {multiplicity_recursive(p)}"
            )
    if args.json:
        _emit_json(
            {
                "d": c.d,
                "count": len(fs),
                "facets": [_vertex_list(f) for f in fs],
            }
        )
        return 0
    print(f"d: {c.d}   facets: {len(fs)}")
    for f in fs:
        print(" ".join(var_str(v) for v in sorted(f)))
    return 0


def cmd_decompose(p: Polyomino, args) -> int:
    dec = decompose(p)
    if args.oracle:
        whole = multiplicity_recursive(p)
        parts = multiplicity_recursive(dec.p1) + multiplicity_recursive(dec.p2)
        if whole != parts:
            raise ConsistencyError(f"e(P) = {whole} but e(P1) + e(P2) = {parts}")
        if len(p.vertices) <= args.max_facet_vertices:
            if len(facets(build_complex(p))) != whole:
                raise ConsistencyError("facet count disagrees with the recursion")
    if args.json:
        _emit_json(
            {
                "v": list(dec.v),
                "p1": {"cells": _vertex_list(dec.p1.cells), "grid": serialize(dec.p1)},
                "p2": {"cells": _vertex_list(dec.p2.cells), "grid": serialize(dec.p2)},
            }
        )
        return 0
    print(f"v: ({dec.v[0]},{dec.v[1]})")
    print("P1:")
    print(serialize(dec.p1))
    print("P2:")
    print(serialize(dec.p2))
    return 0


def cmd_groebner(p: Polyomino, args) -> int:
    order = variable_order(p)
    minors = inner_minors(p)
    verified = verify_groebner(p, order)
    if args.oracle and is_stack(p) and not verified:
        raise ConsistencyError("height order on a stack failed the Groebner check")
    if args.json:
        _emit_json(
            {
                "order": [list(v) for v in order.ranked],
                "advisory": order.advisory,
                "verified": verified,
                "minors": [
                    {
                        "corners": [list(mn.corners[0]), list(mn.corners[1])],
                        "leading": _vertex_list(leading_term(mn, order)),
                    }
                    for mn in minors
                ],
            }
        )
        return 0
    print("order:", " > ".join(var_str(v) for v in order.ranked))
    print(f"minors: {len(minors)}")
    for mn in minors:
        print(f"{mn}   lead {mono_str(leading_term(mn, order))}")
    print(f"groebner: {'verified' if verified else 'NOT a basis for this order'}")
    return 0


_COMMANDS = {
    "check": cmd_check,
    "gorenstein": cmd_gorenstein,
    "invariants": cmd_invariants,
    "facets": cmd_facets,
    "decompose": cmd_decompose,
    "groebner": cmd_groebner,
}


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="polyrings",
        description="Algebraic invariants of convex and stack polyominoes.",
    )
    sub = top.add_subparsers(dest="command", required=True)
    for name, fn in _COMMANDS.items():
        sp = sub.add_parser(name, help=fn.__doc__)
        sp.add_argument("path", nargs="?", help="grid or JSON cell file, '-' for stdin")
        sp.add_argument("--grid", help="inline grid text ('\\n' separates rows)")
        sp.add_argument("--json", action="store_true", help="machine readable output")
        sp.add_argument(
            "--oracle",
            action="store_true",
            help="run brute-force cross-checks, fail on disagreement",
        )
        sp.add_argument("--max-subset-bits", type=int, default=24)
        sp.add_argument("--max-facet-vertices", type=int, default=40)
        sp.set_defaults(func=fn)
    return top


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 1
        return 0 if code == 0 else 1
    try:
        p = _load(args)
        return args.func(p, args)
    except (ConsistencyError, NotPure, DecompositionFailed, NotAFacet) as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 2
    except PolyominoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
