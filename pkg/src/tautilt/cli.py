"""Command-line front end.

Subcommands: info, check, phi, enumerate, report-2cy.  Exit codes follow
one convention everywhere: 0 for success or a consistent report, 1 when a
requested predicate fails or the report finds an obstruction, 2 for input
errors, 3 for truncated enumerations and internal assertion failures.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    MutationAmbiguousError,
    NotCompletableError,
    NotInFacError,
    NotSelfinjectiveError,
    NotSiltingError,
    NotSupportTauTiltingError,
    ParseError,
    RandomnessExhaustedError,
    TautiltError,
    TheoremViolationError,
)
from .modules import are_isomorphic, decompose, projective
from .pairs import (
    enumerate_nu_stable,
    enumerate_support_tau_tilting,
    is_nu_stable_pair,
    is_support_tau_minus_tilting,
    is_support_tau_tilting_pair,
    is_tau_rigid,
    make_pair,
    pair_to_complex,
)
from .textio import (
    algebra_json,
    canonical_complex_string,
    complex_json,
    module_expr_string,
    parse_algebra_file,
    parse_module_expr,
)
from .translate import (
    is_selfinjective,
    nakayama_permutation,
    nu_module,
    tau,
    tau_minus,
)

CHECK_FLAGS = ("tau-rigid", "support-tau-tilting", "tau-minus-tilting",
               "nu-stable", "tau-symmetric")


def _parse_pverts(text: str) -> tuple:
    if not text.strip():
        return ()
    try:
        verts = tuple(int(s) for s in text.split(","))
    except ValueError as exc:
        raise ParseError(f"bad vertex list {text!r}") from exc
    return verts


def _permutation_cycles(perm: dict) -> str:
    seen = set()
    out = []
    for v in sorted(perm):
        if v in seen:
            continue
        cyc = [v]
        seen.add(v)
        w = perm[v]
        while w != v:
            cyc.append(w)
            seen.add(w)
            w = perm[w]
        if len(cyc) > 1:
            out.append("(" + " ".join(str(u) for u in cyc) + ")")
    return "".join(out) if out else "id"


def _summand_classes_of(algebra, expr: str) -> tuple:
    """(total module, indecomposable parts, iso classes) of a parsed sum."""
    x = parse_module_expr(algebra, expr)
    parts = decompose(x)
    classes = []
    for part in parts:
        if not any(are_isomorphic(part, c) for c in classes):
            classes.append(part)
    return x, parts, classes


def cmd_info(args) -> int:
    algebra = parse_algebra_file(args.algebra, args.field_p)
    pdims = [projective(algebra, v).total_dim
             for v in range(1, algebra.num_vertices + 1)]
    selfinj = is_selfinjective(algebra)
    perm = nakayama_permutation(algebra) if selfinj else None
    if args.json:
        doc = {
            "algebra": algebra_json(algebra),
            "dimension": algebra.dim,
            "projective_dims": pdims,
            "selfinjective": selfinj,
            "nakayama_permutation":
                {str(v): perm[v] for v in sorted(perm)} if perm else None,
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"vertices: {algebra.num_vertices}")
        print("arrows: " + ", ".join(
            f"{a.name}:{a.source}->{a.target}" for a in algebra.quiver.arrows))
        print(f"field: p={algebra.field.p}")
        print(f"dimension: {algebra.dim}")
        print(f"projective dims: {pdims}")
        print(f"selfinjective: {'yes' if selfinj else 'no'}")
        if selfinj:
            print(f"nakayama permutation: {_permutation_cycles(perm)}")
    return 0


def cmd_check(args) -> int:
    algebra = parse_algebra_file(args.algebra, args.field_p)
    required = tuple(s.strip() for s in args.require.split(",") if s.strip())
    for name in required:
        if name not in CHECK_FLAGS:
            raise ParseError(f"unknown flag {name!r}; choose from "
                             + ", ".join(CHECK_FLAGS))
    selfinj = is_selfinjective(algebra)
    if "nu-stable" in required and not selfinj:
        raise NotSelfinjectiveError(
            "stability under the Nakayama functor needs a selfinjective "
            "algebra")
    pverts = _parse_pverts(args.pverts)
    x, parts, classes = _summand_classes_of(algebra, args.modules)
    basic = len(parts) == len(classes)
    pair = None
    if basic and len(classes) + len(pverts) <= algebra.num_vertices:
        pair = make_pair(algebra, classes, pverts)

    flags: dict = {"tau-rigid": is_tau_rigid(x)}
    flags["support-tau-tilting"] = (
        pair is not None and is_support_tau_tilting_pair(pair))
    flags["tau-minus-tilting"] = (
        basic and is_support_tau_minus_tilting(classes, algebra))
    if selfinj:
        if pair is not None:
            flags["nu-stable"] = is_nu_stable_pair(pair)
        else:
            flags["nu-stable"] = are_isomorphic(nu_module(x), x)
    else:
        flags["nu-stable"] = None
    flags["tau-symmetric"] = are_isomorphic(tau(x), tau_minus(x))

    ok = all(flags[name] for name in required)
    if args.json:
        doc = {
            "algebra": algebra_json(algebra),
            "modules": [module_expr_string(c) for c in classes],
            "projective_vertices": sorted(pverts),
            "basic": basic,
            "flags": flags,
            "required": list(required),
            "ok": ok,
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"basic: {'yes' if basic else 'no'}")
        for name in CHECK_FLAGS:
            value = flags[name]
            shown = "n/a" if value is None else ("yes" if value else "no")
            mark = " (required)" if name in required else ""
            print(f"{name}: {shown}{mark}")
        print(f"result: {'ok' if ok else 'failed'}")
    return 0 if ok else 1


def cmd_phi(args) -> int:
    algebra = parse_algebra_file(args.algebra, args.field_p)
    pverts = _parse_pverts(args.pverts)
    x, parts, classes = _summand_classes_of(algebra, args.modules)
    if len(parts) != len(classes):
        raise NotSupportTauTiltingError("the module part is not basic")
    pair = make_pair(algebra, classes, pverts)
    c = pair_to_complex(pair)
    if args.json:
        print(json.dumps({"algebra": algebra_json(algebra),
                          "complex": complex_json(c)}, indent=2))
    else:
        print("deg -1: " + (" + ".join(f"P({v})" for v in sorted(c.deg1)) or "0"))
        print("deg  0: " + (" + ".join(f"P({v})" for v in sorted(c.deg0)) or "0"))
        print("differential (rows act on deg -1 summands):")
        body = complex_json(c)["differential"]
        for row in body:
            print("  [" + ", ".join(row) + "]")
    return 0


def _enumeration_entries(algebra, args):
    """(status, list of (pair, complex)) for the requested filter."""
    selfinj = is_selfinjective(algebra)
    if args.filter == "nu-stable":
        pe = enumerate_nu_stable(algebra, args.cap, args.seed, args.threads)
        withnodes = sorted(pe.node_index.items(), key=lambda kv: kv[1])
        rows = [(pe.pairs[idx], pe.silting.node_complex(node), True, node)
                for node, idx in withnodes]
        return pe.status, pe.silting, rows, selfinj
    pe = enumerate_support_tau_tilting(algebra, args.cap, args.seed,
                                       args.threads)
    rows = []
    for node, idx in sorted(pe.node_index.items(), key=lambda kv: kv[1]):
        tilting = pe.silting.is_node_tilting(node)
        if args.filter == "tilting" and not tilting:
            continue
        rows.append((pe.pairs[idx], pe.silting.node_complex(node), tilting,
                     node))
    return pe.status, pe.silting, rows, selfinj


def cmd_enumerate(args) -> int:
    algebra = parse_algebra_file(args.algebra, args.field_p)
    if args.filter == "nu-stable" and not is_selfinjective(algebra):
        raise NotSelfinjectiveError(
            "the nu-stable filter needs a selfinjective algebra")
    status, silting, rows, selfinj = _enumeration_entries(algebra, args)
    entries = []
    for pair, c, tilting, node in rows:
        x = pair.module_sum()
        if selfinj:
            stable = silting.is_node_nu_stable(node)
        else:
            stable = None
        entry = {
            "modules": [module_expr_string(m) for m in pair.modules],
            "projective_vertices": sorted(pair.pverts),
            "complex": complex_json(c),
            "nu_stable": stable,
            "tilting": tilting,
        }
        entries.append(((x.total_dim, x.dim_vector(),
                         canonical_complex_string(c)), entry))
    entries.sort(key=lambda pe: pe[0])
    doc = {
        "algebra": algebra_json(algebra),
        "flag": status,
        "entries": [e for _, e in entries],
    }
    print(json.dumps(doc, indent=2))
    return 0 if status == "COMPLETE" else 3


def cmd_report_2cy(args) -> int:
    from .pairs import two_cy_obstruction_report

    algebra = parse_algebra_file(args.algebra, args.field_p)
    report = two_cy_obstruction_report(algebra, args.cap, args.seed,
                                       args.threads)
    doc = {
        "algebra": algebra_json(algebra),
        "checks": report.checks,
        "verdict": report.verdict,
        "details": report.details,
        "truncated": report.truncated,
    }
    print(json.dumps(doc, indent=2))
    if report.verdict == "CONSISTENT":
        return 0
    if report.verdict == "OBSTRUCTED":
        return 1
    return 3


def _add_common(sub, enumerating: bool):
    sub.add_argument("algebra", help="algebra file")
    sub.add_argument("--field-p", type=int, default=None,
                     help="override the coefficient prime")
    if enumerating:
        sub.add_argument("--cap", type=int, default=10000,
                         help="stop after this many items")
        sub.add_argument("--seed", type=int, default=0)
        sub.add_argument("--threads", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tautilt",
        description="Exact checks and enumerations for support tau-tilting "
                    "pairs over bound quiver algebras.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("info", help="algebra summary")
    _add_common(p, enumerating=False)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_info)

    p = subs.add_parser("check", help="predicate flags for a pair")
    _add_common(p, enumerating=False)
    p.add_argument("modules", help="module expression, e.g. 'S(1)+P(3)/<a3*a4>'")
    p.add_argument("--pverts", default="", help="complement vertices, e.g. 2,5")
    p.add_argument("--require", default="support-tau-tilting",
                   help="comma list of flags that must hold for exit 0")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = subs.add_parser("phi", help="two-term complex of a pair")
    _add_common(p, enumerating=False)
    p.add_argument("modules")
    p.add_argument("--pverts", default="")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_phi)

    p = subs.add_parser("enumerate", help="walk the mutation graph")
    _add_common(p, enumerating=True)
    p.add_argument("--filter", choices=("silting", "tilting", "nu-stable"),
                   default="silting")
    p.set_defaults(func=cmd_enumerate)

    p = subs.add_parser("report-2cy",
                        help="obstructions to being 2-Calabi-Yau tilted")
    _add_common(p, enumerating=True)
    p.set_defaults(func=cmd_report_2cy)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NotSupportTauTiltingError, NotSiltingError, NotCompletableError,
            NotInFacError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (TheoremViolationError, MutationAmbiguousError,
            RandomnessExhaustedError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, TautiltError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
