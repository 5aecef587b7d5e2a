"""Command line surface: one subcommand per process, deterministic reports.

Every subcommand reads at most one manifest (see io.py for the format),
runs one construction or one check, and emits a report either as plain
text (--format human, the default) or as a JSON document (--format json).
Reports are assembled from sorted enumerations only, so equal inputs and
flags produce byte-identical output.

Exit codes:
  0  construction succeeded / all checks passed
  1  mathematical refutation found; the report carries a witness
  2  usage or validation error
  3  a size bound, dimension bound, or enumeration ceiling was exceeded

Construction subcommands (tw, tw2, groth, adj-comma) write the built
entity to --output as a manifest when the flag is given; checking and
measuring subcommands write their report there instead.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io as tio
from .adj import (check_split_adjunctions, comma_truncated, compat_graph,
                  connected_components, gap_dual, gaps_of, compose_ord,
                  ordinal_homs)
from .errors import (BoundExceeded, ExplosionGuard, InsufficientBound,
                     MalformedInput, NotCommutative, NotFiberedInSets,
                     ParameterMismatch)
from .fincat import FinCategory, twisted_arrow
from .groth import grothendieck, fiber_category, is_cocartesian, is_opfibered
from .homology import (ab_group, constant_diagram, derived_limit,
                       diagram_over_nerve, homology, quillen_cohomology)
from .groth import coinitiality_evidence
from .simplicial import nerve, normalized_chains, two_nerve
from .tw2 import pi_fiber_check, tw2

DEFAULT_MAX_DIM = 4
DEFAULT_MAX_SIZE = 8
FLAVOURS = ((0, 0), (0, 1), (1, 0), (1, 1))


def _show(x):
    """Stable one-line rendering of an identifier for human reports."""
    if isinstance(x, tuple):
        return "(" + ", ".join(_show(v) for v in x) + ")"
    return str(x)


def _enc(x):
    return tio.encode_id(x)


def _need_kind(kind, entity, wanted):
    if kind not in wanted:
        raise MalformedInput(
            f"subcommand needs a manifest of kind {' or '.join(wanted)}, "
            f"got {kind!r}")
    return entity


def _load(args, wanted):
    if not args.input:
        raise MalformedInput("--input is required for this subcommand")
    kind, entity = tio.load_path(args.input)
    return kind, _need_kind(kind, entity, wanted)


def _deloop(monoid):
    """One-object category with the monoid as its endomorphisms."""
    elems = monoid.elements
    src = {e: "*" for e in elems}
    comp = {(g, f): monoid.op[(g, f)] for g in elems for f in elems}
    return FinCategory(("*",), elems, src, dict(src),
                       {"*": monoid.unit}, comp)


def _simplicial_report(x):
    rows = []
    for k in range(x.dim + 1):
        level = x.level(k)
        nondeg = sum(1 for s in level if not x.is_degenerate(k, s))
        rows.append({"level": k, "simplices": len(level),
                     "nondegenerate": nondeg})
    rep = {"dim": x.dim, "levels": rows}
    if x.thin is not None and x.dim >= 2:
        rep["thin_2_simplices"] = len(x.thin)
    return rep


def _simplicial_lines(rep):
    lines = [f"truncated at dimension {rep['dim']}"]
    for row in rep["levels"]:
        lines.append(f"level {row['level']}: {row['simplices']} simplices"
                     f" ({row['nondegenerate']} nondegenerate)")
    if "thin_2_simplices" in rep:
        lines.append(f"thin 2-simplices: {rep['thin_2_simplices']}")
    return lines


def _two_category_sizes(tc):
    one = sum(len(h.objects) for h in tc.hom.values())
    two = sum(len(h.morphisms) for h in tc.hom.values())
    return {"objects": len(tc.objects), "one_cells": one, "two_cells": two}


# ---------------------------------------------------------------- validate

def cmd_validate(args):
    kind, entity = tio.load_path(args.input) if args.input else (None, None)
    if kind is None:
        raise MalformedInput("--input is required for this subcommand")
    stats = {}
    if kind == "category":
        stats = {"objects": len(entity.objects),
                 "morphisms": len(entity.morphisms)}
    elif kind == "two-category":
        stats = _two_category_sizes(entity)
    elif kind == "monoid":
        stats = {"elements": len(entity.elements),
                 "commutative": entity.is_commutative}
    elif kind == "ordmap":
        stats = {"flavour": [entity.x, entity.y],
                 "source": entity.n, "target": entity.m}
    elif kind == "functor":
        stats = {"dom_objects": len(entity.dom.objects),
                 "cod_objects": len(entity.cod.objects)}
    elif kind == "cat-valued-two-functor":
        stats = {"base_objects": len(entity.base.objects),
                 "values": {str(_enc(o)): len(c.objects)
                            for o, c in sorted(entity.value.items(),
                                               key=lambda kv: str(kv[0]))}}
    elif kind == "ab-diagram":
        cat, groups, maps = entity
        stats = {"objects": len(cat.objects), "groups": len(groups),
                 "edge_matrices": len(maps)}
    report = {"command": "validate", "kind": kind, "valid": True, **stats}
    lines = [f"kind: {kind}", "validation: OK"]
    for key in sorted(stats):
        lines.append(f"{key}: {stats[key]}")
    return 0, report, lines


# ------------------------------------------------------------ nerve family

def cmd_nerve(args):
    kind, entity = _load(args, ("category", "monoid"))
    cat = entity if kind == "category" else _deloop(entity)
    x = nerve(cat, args.max_dim, ceiling=args.ceiling)
    rep = {"command": "nerve", "max_dim": args.max_dim,
           **_simplicial_report(x)}
    return 0, rep, _simplicial_lines(rep)


def cmd_two_nerve(args):
    _, tc = _load(args, ("two-category",))
    x = two_nerve(tc, args.max_dim, ceiling=args.ceiling)
    rep = {"command": "two-nerve", "max_dim": args.max_dim,
           **_simplicial_report(x)}
    return 0, rep, _simplicial_lines(rep)


# ----------------------------------------------------------- constructions

def cmd_tw(args):
    _, cat = _load(args, ("category",))
    tw, _ = twisted_arrow(cat)
    if args.output:
        tio.dump_path(args.output, tio.to_document("category", tw))
    rep = {"command": "tw", "objects": len(tw.objects),
           "morphisms": len(tw.morphisms),
           "written": bool(args.output)}
    lines = [f"twisted arrow category: {rep['objects']} objects, "
             f"{rep['morphisms']} morphisms"]
    if args.output:
        lines.append(f"written to {args.output}")
    return 0, rep, lines


def cmd_tw2(args):
    _, tc = _load(args, ("two-category",))
    total, _ = tw2(tc, ceiling=args.ceiling or 2_000_000)
    if args.output:
        tio.dump_path(args.output, tio.to_document("two-category", total))
    sizes = _two_category_sizes(total)
    rep = {"command": "tw2", **sizes, "written": bool(args.output)}
    lines = [f"twisted 2-cell category: {sizes['objects']} objects, "
             f"{sizes['one_cells']} 1-cells, {sizes['two_cells']} 2-cells"]
    if args.output:
        lines.append(f"written to {args.output}")
    return 0, rep, lines


def cmd_groth(args):
    _, fv = _load(args, ("cat-valued-two-functor",))
    total, _ = grothendieck(fv)
    if args.output:
        tio.dump_path(args.output, tio.to_document("two-category", total))
    sizes = _two_category_sizes(total)
    rep = {"command": "groth", **sizes, "written": bool(args.output)}
    lines = [f"total 2-category: {sizes['objects']} objects, "
             f"{sizes['one_cells']} 1-cells, {sizes['two_cells']} 2-cells"]
    if args.output:
        lines.append(f"written to {args.output}")
    return 0, rep, lines


# ---------------------------------------------------------------- fibering

def cmd_opfibered(args):
    _, fv = _load(args, ("cat-valued-two-functor",))
    total, proj = grothendieck(fv)
    report = is_opfibered(proj)
    fibers = []
    lines = ["opfibered in categories: YES" if report.ok
             else "opfibered in categories: NO"]
    if not report.ok:
        for k, w, c in report.hom_failures:
            lines.append(f"  hom failure at {_show(k)}: witness {_show(w)}"
                         f" has {c} lifts")
        for x, f in report.lift_failures:
            lines.append(f"  no coCartesian lift of {_show(f)} at {_show(x)}")
    for a in sorted(fv.base.objects, key=_show):
        fib = fiber_category(total, proj, a)
        fibers.append({"base_object": _enc(a),
                       "objects": len(fib.objects),
                       "morphisms": len(fib.morphisms)})
        lines.append(f"fiber over {_show(a)}: {len(fib.objects)} objects, "
                     f"{len(fib.morphisms)} morphisms")
    rep = {"command": "opfibered", "ok": report.ok,
           "hom_failures": [[_enc(k), _enc(w), c]
                            for k, w, c in report.hom_failures],
           "lift_failures": [[_enc(x), _enc(f)]
                             for x, f in report.lift_failures],
           "fibers": fibers}
    return (0 if report.ok else 1), rep, lines


def cmd_cocartesian(args):
    _, fv = _load(args, ("cat-valued-two-functor",))
    total, proj = grothendieck(fv)
    rows, lines = [], []
    for x in sorted(total.objects, key=_show):
        for y in sorted(total.objects, key=_show):
            for e in sorted(total.hom[(x, y)].objects, key=_show):
                verdict = is_cocartesian(proj, x, y, e)
                rows.append({"src": _enc(x), "dst": _enc(y),
                             "one_cell": _enc(e), "cocartesian": verdict})
                mark = "yes" if verdict else "no "
                lines.append(f"  [{mark}] {_show(x)} -> {_show(y)} "
                             f"via {_show(e)}")
    n_yes = sum(1 for r in rows if r["cocartesian"])
    rep = {"command": "cocartesian", "one_cells": len(rows),
           "cocartesian": n_yes, "table": rows}
    lines.insert(0, f"{n_yes} of {len(rows)} 1-cells are coCartesian")
    return 0, rep, lines


# ----------------------------------------------------------- homological

def cmd_homology(args):
    kind, entity = _load(args, ("category", "monoid", "two-category"))
    if kind == "two-category":
        x = two_nerve(entity, args.max_dim, ceiling=args.ceiling)
    else:
        cat = entity if kind == "category" else _deloop(entity)
        x = nerve(cat, args.max_dim, ceiling=args.ceiling)
    groups = homology(normalized_chains(x))
    rep = {"command": "homology", "max_dim": args.max_dim,
           "groups": [g.pretty() for g in groups]}
    lines = [f"nerve truncated at dimension {args.max_dim}; homology is "
             f"certified up to degree {len(groups) - 1}"]
    for k, g in enumerate(groups):
        lines.append(f"H_{k} = {g.pretty()}")
    return 0, rep, lines


def cmd_dlim(args):
    _, (cat, groups, maps) = _load(args, ("ab-diagram",))
    a, _ = diagram_over_nerve(cat, args.max_dim, groups, maps)
    rlim = derived_limit(a)
    rep = {"command": "dlim", "max_dim": args.max_dim,
           "groups": [g.pretty() for g in rlim]}
    lines = [f"base nerve truncated at dimension {args.max_dim}; derived "
             f"limits certified up to degree {len(rlim) - 1}"]
    for k, g in enumerate(rlim):
        lines.append(f"R^{k} lim = {g.pretty()}")
    return 0, rep, lines


def _parse_degrees(text):
    try:
        lo_text, hi_text = text.split("..")
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise MalformedInput(
            f"--degrees wants LO..HI (for example -2..1), got {text!r}") from None
    if lo > hi:
        raise MalformedInput(f"--degrees range {text!r} is empty")
    return lo, hi


def cmd_quillen(args):
    kind, entity = _load(args, ("two-category", "category"))
    if args.coeff != "const-Z":
        raise MalformedInput(
            f"unsupported coefficient {args.coeff!r}; only const-Z is available")
    lo, hi = _parse_degrees(args.degrees)
    if kind == "two-category":
        x = two_nerve(entity, args.max_dim, ceiling=args.ceiling)
    else:
        x = nerve(entity, args.max_dim, ceiling=args.ceiling)
    a = constant_diagram(x, ab_group(1))
    out = quillen_cohomology(a, lo, hi)
    rep = {"command": "quillen", "coeff": args.coeff,
           "max_dim": args.max_dim, "degrees": [lo, hi],
           "groups": {str(n): out[n].pretty() for n in range(lo, hi + 1)}}
    lines = [f"Quillen cohomology with constant Z coefficients, "
             f"degrees {lo}..{hi}, nerve dimension {args.max_dim}"]
    for n in range(lo, hi + 1):
        lines.append(f"H^{n}_Q = {out[n].pretty()}")
    return 0, rep, lines


# ------------------------------------------------------------- coinitial

def cmd_coinitial(args):
    _, fun = _load(args, ("functor",))
    report = coinitiality_evidence(fun, args.max_dim)
    rows = []
    lines = [f"verdict: {report.verdict}"]
    for y, verdict, detail in sorted(report.per_object,
                                     key=lambda r: _show(r[0])):
        row = {"object": _enc(y), "verdict": verdict}
        extra = ""
        if verdict == "REFUTED":
            row["witness"] = {"degree": detail.degree,
                              "group": detail.group.pretty()}
            want = "Z" if detail.degree == 0 else "0"
            extra = (f" (H_{detail.degree} = {detail.group.pretty()}, "
                     f"expected {want})")
        elif verdict == "PROOF":
            row["certificate"] = {"kind": detail.kind,
                                  "object": _enc(detail.detail)}
            extra = f" ({detail.kind})"
        else:
            row["homology_checked_to"] = detail.detail
        rows.append(row)
        lines.append(f"  comma over {_show(y)}: {verdict}{extra}")
    rep = {"command": "coinitial", "max_dim": args.max_dim,
           "verdict": report.verdict, "per_object": rows}
    return (0 if report.ok else 1), rep, lines


# ------------------------------------------------------------ adjunction

def cmd_adj_sweep(args):
    bound = args.max_size
    failures = []
    shapes = []
    total = 0
    for x, y in FLAVOURS:
        for n in range(bound + 1):
            for m in range(bound + 1):
                maps = ordinal_homs(x, y, n, m, bound=bound)
                verified = 0
                for sigma in maps:
                    g = compat_graph(sigma)
                    want_v = n + m + 1 - x - y
                    want_e = n + m - x - y
                    good = (g.n_vertices == want_v
                            and len(g.edges) == want_e
                            and g.is_tree
                            and all(g.valency(j) == g.formula_valency(j)
                                    for j in range(m)))
                    if good:
                        verified += 1
                    else:
                        failures.append({
                            "flavour": [x, y], "n": n, "m": m,
                            "values": list(sigma.values),
                            "vertices": g.n_vertices, "edges": len(g.edges),
                            "tree": g.is_tree})
                if maps:
                    shapes.append({"flavour": [x, y], "n": n, "m": m,
                                   "maps": len(maps), "verified": verified})
                    total += len(maps)
    rep = {"command": "adj-sweep", "max_size": bound, "maps": total,
           "table": shapes, "failures": failures}
    lines = []
    if failures:
        lines.append(f"REFUTED: {len(failures)} of {total} maps fail")
        for f in failures:
            lines.append(f"  sigma {f['values']} at flavour {tuple(f['flavour'])}, "
                         f"n={f['n']}, m={f['m']}: {f['vertices']} vertices, "
                         f"{f['edges']} edges, tree={f['tree']}")
    else:
        lines.append(f"all sigma verified: tree, counts match "
                     f"({total} maps, sizes up to {bound})")
    lines.append("flavour   n  m   maps  verified")
    for s in shapes:
        lines.append(f"  ({s['flavour'][0]},{s['flavour'][1]})   "
                     f"{s['n']:2d} {s['m']:2d} {s['maps']:6d}    {s['verified']:6d}")
    return (1 if failures else 0), rep, lines


def cmd_adj_comma(args):
    _, sigma = _load(args, ("ordmap",))
    cat, proj = comma_truncated(args.kind, sigma, args.max_size,
                                ceiling=args.ceiling or 5_000_000)
    if args.output:
        tio.dump_path(args.output, tio.to_document("category", cat))
    comps = connected_components(cat)
    histogram = {}
    for o in cat.objects:
        histogram.setdefault(_show(proj[o]), 0)
    for o in cat.objects:
        histogram[_show(proj[o])] += 1
    rep = {"command": "adj-comma", "kind": args.kind,
           "max_size": args.max_size,
           "sigma": {"x": sigma.x, "y": sigma.y, "n": sigma.n,
                     "m": sigma.m, "values": list(sigma.values)},
           "objects": len(cat.objects), "morphisms": len(cat.morphisms),
           "components": sorted(len(c) for c in comps),
           "projection_histogram": {k: histogram[k]
                                    for k in sorted(histogram)},
           "written": bool(args.output)}
    lines = [f"comma category ({args.kind}) over sigma "
             f"{list(sigma.values)}: flavour ({sigma.x},{sigma.y}), "
             f"<{sigma.n}> -> <{sigma.m}>, bound {args.max_size}",
             f"objects: {rep['objects']}, morphisms: {rep['morphisms']}",
             f"zigzag components (sizes): {rep['components']}"]
    for k in sorted(histogram):
        lines.append(f"  projection {k}: {histogram[k]} objects")
    if args.output:
        lines.append(f"written to {args.output}")
    return 0, rep, lines


def cmd_pi_check(args):
    _, monoid = _load(args, ("monoid",))
    rows, failures, checked = [], [], 0
    for e in monoid.elements:
        for e2 in monoid.elements:
            report = pi_fiber_check(monoid, e, e2)
            checked += len(report.checked)
            rows.append({"pair": [_enc(e), _enc(e2)],
                         "contexts": len(report.checked),
                         "failures": [[_enc(b), _enc(x)]
                                      for b, x in report.failures]})
            failures.extend(report.failures)
    rep = {"command": "pi-check", "contexts": checked,
           "ok": not failures, "table": rows}
    lines = []
    if failures:
        lines.append(f"REFUTED: {len(failures)} fibers lack the designated "
                     f"terminal object")
    else:
        lines.append(f"every fiber has the designated terminal object "
                     f"({checked} contexts over {len(rows)} element pairs)")
    for row in rows:
        mark = "ok " if not row["failures"] else "BAD"
        lines.append(f"  [{mark}] pair ({_show(row['pair'][0])}, "
                     f"{_show(row['pair'][1])}): {row['contexts']} contexts")
    return (1 if failures else 0), rep, lines


def cmd_dual_check(args):
    bound = args.max_size
    failures = []
    checked_maps = 0
    count_rows = []
    for x, y in FLAVOURS:
        for n in range(bound + 1):
            gaps = gaps_of(x, y, n)
            want = n + 1 - x - y
            if len(gaps) != max(want, 0):
                failures.append({"what": "gap-count", "flavour": [x, y],
                                 "n": n, "got": len(gaps), "want": want})
            count_rows.append({"flavour": [x, y], "n": n, "gaps": len(gaps)})
    for x, y in FLAVOURS:
        for n in range(bound + 1):
            for m in range(bound + 1):
                maps = ordinal_homs(x, y, n, m, bound=bound)
                if not maps:
                    continue
                duals = [gap_dual(f) for f in maps]
                checked_maps += len(maps)
                if len(set(duals)) != len(maps):
                    failures.append({"what": "not-injective",
                                     "flavour": [x, y], "n": n, "m": m})
                back = ordinal_homs(1 - x, 1 - y, duals[0].n, duals[0].m,
                                    bound=bound + 2)
                if len(back) != len(maps):
                    failures.append({"what": "not-bijective",
                                     "flavour": [x, y], "n": n, "m": m,
                                     "got": len(back), "want": len(maps)})
                for f, fd in zip(maps, duals):
                    if gap_dual(fd) != f:
                        failures.append({"what": "not-involutive",
                                         "flavour": [x, y],
                                         "values": list(f.values)})
                for m2 in range(bound + 1):
                    for g in ordinal_homs(x, y, m, m2, bound=bound):
                        gd = gap_dual(g)
                        for f, fd in zip(maps, duals):
                            if gap_dual(compose_ord(g, f)) != compose_ord(fd, gd):
                                failures.append({"what": "not-contravariant",
                                                 "flavour": [x, y],
                                                 "f": list(f.values),
                                                 "g": list(g.values)})
    rep = {"command": "dual-check", "max_size": bound,
           "maps_checked": checked_maps, "gap_counts": count_rows,
           "failures": failures}
    lines = []
    if failures:
        lines.append(f"REFUTED: {len(failures)} duality failures")
        for f in failures[:20]:
            lines.append(f"  {json.dumps(f, sort_keys=True)}")
    else:
        lines.append(f"gap duality verified: counts, bijectivity on homs, "
                     f"contravariance, involution ({checked_maps} maps, "
                     f"sizes up to {bound})")
    return (1 if failures else 0), rep, lines


def cmd_split_adjoint_check(args):
    report = check_split_adjunctions(args.max_size, bound=4 * args.max_size)
    rep = {"command": "split-adjoint-check", "max_size": args.max_size,
           "checked": report.checked, "failures": report.failures}
    lines = []
    if report.ok:
        lines.append(f"both splitting adjunctions verified "
                     f"({report.checked} checks, sizes up to {args.max_size})")
    else:
        lines.append(f"REFUTED: {len(report.failures)} failures "
                     f"out of {report.checked} checks")
        for f in report.failures[:20]:
            lines.append(f"  {f}")
    return (0 if report.ok else 1), rep, lines


# ------------------------------------------------------------------ main

HANDLERS = {
    "validate": cmd_validate,
    "nerve": cmd_nerve,
    "two-nerve": cmd_two_nerve,
    "tw": cmd_tw,
    "tw2": cmd_tw2,
    "groth": cmd_groth,
    "opfibered": cmd_opfibered,
    "cocartesian": cmd_cocartesian,
    "homology": cmd_homology,
    "dlim": cmd_dlim,
    "quillen": cmd_quillen,
    "coinitial": cmd_coinitial,
    "adj-sweep": cmd_adj_sweep,
    "adj-comma": cmd_adj_comma,
    "pi-check": cmd_pi_check,
    "dual-check": cmd_dual_check,
    "split-adjoint-check": cmd_split_adjoint_check,
}

NEEDS_INPUT = {"validate", "nerve", "two-nerve", "tw", "tw2", "groth",
               "opfibered", "cocartesian", "homology", "dlim", "quillen",
               "coinitial", "adj-comma", "pi-check"}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tw2cat",
        description="Exact computations with finite 2-categories: twisted "
                    "2-cell categories, nerves, homology, derived limits "
                    "and walking-adjunction combinatorics.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in HANDLERS:
        p = sub.add_parser(name)
        if name in NEEDS_INPUT:
            p.add_argument("--input", required=True,
                           help="path to a manifest document")
        p.add_argument("--output", default=None,
                       help="write the artifact (constructions) or the "
                            "report (checks) to this path")
        size_default = 5 if name == "dual-check" else DEFAULT_MAX_SIZE
        p.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM,
                       help="simplicial truncation dimension (default 4)")
        p.add_argument("--max-size", type=int, default=size_default,
                       help="ordinal size / truncation bound "
                            f"(default {size_default})")
        p.add_argument("--ceiling", type=int, default=None,
                       help="enumeration ceiling guard")
        p.add_argument("--format", choices=("human", "json"),
                       default="human", help="report format")
        if name == "quillen":
            p.add_argument("--coeff", default="const-Z",
                           help="coefficient system (only const-Z)")
            p.add_argument("--degrees", default="-2..1",
                           help="degree range LO..HI (default -2..1)")
        if name == "adj-comma":
            p.add_argument("kind", choices=("gp", "pt", "spl"),
                           help="decoration flavour of the comma category")
    return parser


def _emit(args, code, report, lines):
    if args.format == "json":
        report["exit"] = code
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    else:
        text = "\n".join(lines) + "\n"
    wrote_artifact = report.get("written", False)
    if args.output and not wrote_artifact:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def _fuse_degree_flag(argv):
    """Let `--degrees -2..1` parse even though the value starts with a dash."""
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--degrees" and i + 1 < len(argv):
            out.append("--degrees=" + argv[i + 1])
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None):
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_fuse_degree_flag(list(argv)))
    handler = HANDLERS[args.command]
    try:
        code, report, lines = handler(args)
    except (MalformedInput, ParameterMismatch, NotCommutative) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (BoundExceeded, ExplosionGuard, InsufficientBound) as e:
        print(f"bound exceeded: {e}", file=sys.stderr)
        return 3
    except NotFiberedInSets as e:
        print(f"refuted: {e}", file=sys.stderr)
        return 1
    return _emit(args, code, report, lines)


if __name__ == "__main__":
    sys.exit(main())
