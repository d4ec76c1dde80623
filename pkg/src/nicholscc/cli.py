"""Command-line interface: `nicholscc <verb> ...`.

Node indices on the command line are 1-based.  Exit status is 0 when every
check passes, 1 on a failed check or a computation error, 2 on bad usage.
"""

import argparse
import json
import re
import sys

from . import catalog, nichols
from .braiding import (BraidingMatrix, DynkinDiagram, cartan_branches,
                       generalized_cartan, reflect, weyl_orbit)
from .charge import GramMatrix, solve_xi, verify_invariance
from .errors import NicholsCCError
from .exact import format_rational
from .report import Report, jsonable

__all__ = ["main", "run"]


class UsageError(Exception):
    pass


# input parsing

def _load(text):
    if text.startswith("@"):
        with open(text[1:]) as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        pass
    quoted = re.sub(r"(?<![\w\"/])(-?\d+(?:/\d+)?)(?![\w\"/])", r'"\1"', text)
    try:
        return json.loads(quoted)
    except json.JSONDecodeError:
        raise UsageError(f"cannot parse {text!r}") from None


def _dig(data, key, inner):
    """Accept a bare object, {key: object}, or a whole report (outputs first)."""
    if not isinstance(data, dict) or inner in data:
        return data
    if key in data:
        return data[key]
    for part in ("outputs", "inputs"):
        if isinstance(data.get(part), dict) and key in data[part]:
            return data[part][key]
    return data


def parse_braiding(text):
    data = _dig(_load(text), "braiding", "q")
    if isinstance(data, list):
        data = {"q": data}
    try:
        return BraidingMatrix.from_json(data)
    except (KeyError, ValueError, TypeError) as e:
        raise UsageError(f"bad braiding matrix: {e}") from None


def parse_diagram(text):
    """"q11,q22,m" (angles) for a rank-2 twist representative."""
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != 3:
        raise UsageError("--diagram expects q11,q22,monodromy")
    return BraidingMatrix.rank2(*parts)


def parse_gram(text):
    data = _dig(_load(text), "gram", "g")
    if isinstance(data, list):
        data = {"g": data}
    try:
        return GramMatrix.from_json(data)
    except (KeyError, ValueError, TypeError, ZeroDivisionError) as e:
        raise UsageError(f"bad Gram matrix: {e}") from None


def parse_params(items):
    out = {}
    for it in items or []:
        if "=" not in it:
            raise UsageError(f"parameter {it!r} is not name=value")
        k, v = it.split("=", 1)
        out[k.strip()] = _num(v.strip())
    return out


def _num(v):
    from fractions import Fraction
    f = Fraction(v)
    return int(f) if f.denominator == 1 else f


def _braiding_arg(args):
    if getattr(args, "braiding", None):
        return parse_braiding(args.braiding)
    if getattr(args, "diagram", None):
        return parse_diagram(args.diagram)
    if getattr(args, "item", None):
        return catalog.presentation_braiding(args.item, parse_params(args.param))
    raise UsageError("give --braiding, --diagram or --item with --param")


# verbs

def cmd_cartan(args):
    b = _braiding_arg(args)
    a = generalized_cartan(b)
    br = cartan_branches(b, a)
    return Report("cartan", {"braiding": b.to_json()}, {
        "cartan": [list(r) for r in a],
        "branches": {f"{i + 1},{j + 1}": v for (i, j), v in sorted(br.items())},
        "dynkin": DynkinDiagram.of(b).text(),
        "catalog_items": catalog.match_braiding(b) if b.theta == 2 else [],
    })


def cmd_reflect(args):
    b = _braiding_arg(args)
    k = args.k - 1
    if not 0 <= k < b.theta:
        raise UsageError(f"node {args.k} out of range 1..{b.theta}")
    r = reflect(b, k)
    return Report("reflect", {"braiding": b.to_json(), "k": args.k},
                  {"braiding": r.to_json(), "dynkin": DynkinDiagram.of(r).text(),
                   "cartan": [list(x) for x in generalized_cartan(r)]})


def cmd_orbit(args):
    b = _braiding_arg(args)
    orbit = weyl_orbit(b, cap=args.cap)
    return Report("orbit", {"braiding": b.to_json(), "cap": args.cap},
                  {"size": len(orbit), "classes": [c.to_json() for c in orbit]})


def cmd_charge(args):
    g = parse_gram(args.gram)
    sol = solve_xi(g)
    rep = Report("charge", {"gram": g.to_json()}, {"charge": sol.charge})
    if g.theta == 2:
        from .charge import central_charge_rank2
        rep.check("closed form agrees", sol.charge, central_charge_rank2(g))
    return rep


def cmd_solve(args):
    g = parse_gram(args.gram)
    sol = solve_xi(g)
    rep = Report("solve", {"gram": g.to_json()}, sol.to_json())
    b = g.braiding()
    try:
        a = generalized_cartan(b)
    except NicholsCCError as e:
        rep.outputs["cartan"] = f"{type(e).__name__}: {e}"
        return rep
    inv = verify_invariance(g, a, strict=False)
    rep.outputs["braiding"] = b.to_json()
    rep.outputs["cartan"] = [list(r) for r in a]
    rep.outputs["invariance"] = inv.to_json()
    if inv.expected_invariant:
        rep.check("charge invariant under reflections", True, inv.invariant)
        rep.check("reflected xi follows the y-formula", True, all(inv.y_ok.values()))
    return rep


def cmd_enumerate(args):
    bounds = {}
    if args.int is not None:
        bounds["int"] = args.int
    if args.order:
        lo, hi = (int(x) for x in args.order.split(","))
        bounds["order"] = (lo, hi)
    bounds.update(parse_params(args.bound))
    recs = catalog.enumerate_item(args.item, bounds)
    out = [catalog.record_json(r) for r in recs]
    rep = Report("enumerate", {"item": args.item, "bounds": bounds}, {"records": out})
    rep.check("recorded charges agree", 0, sum(bool(r["charge_mismatch"]) for r in recs))
    return rep


def cmd_catalog(args):
    if args.action == "list":
        items = [{"id": i, "conditions": catalog.get_item(i).conditions,
                  "cartan_type": catalog.get_item(i).cartan_type}
                 for i in catalog.item_ids()]
        return Report("catalog list", {}, {"items": items})
    if args.action == "show":
        if not args.id:
            raise UsageError("catalog show needs an item id")
        item = catalog.get_item(args.id)
        return Report("catalog show", {"id": args.id}, item.to_json())
    if args.action == "dump":
        data = catalog.catalog_json()
        if args.out:
            with open(args.out, "w") as fh:
                json.dump(data, fh, indent=2)
        return Report("catalog dump", {"out": args.out}, data if not args.out else {"written": args.out})
    raise UsageError(f"unknown catalog action {args.action}")


def cmd_nichols_dim(args):
    b = _braiding_arg(args)
    v = nichols.BraidedSpace(b, degree_cap=args.cap)
    dims = nichols.hilbert_series(v)
    finite = dims[-1] == 0
    out = {"dims": dims, "total": sum(dims) if finite else None,
           "status": "finite" if finite else f"cap {v.degree_cap} reached"}
    if args.hilbert:
        out["multidegrees"] = {",".join(map(str, d)): n
                               for d, n in sorted(nichols.multidegree_series(v).items())}
    rep = Report("nichols-dim", {"braiding": b.to_json(), "cap": v.degree_cap}, out)
    if finite:
        rep.check("Hilbert series palindromic", True, nichols.is_palindromic(dims))
    return rep


def cmd_relations(args):
    b = _braiding_arg(args)
    v = nichols.BraidedSpace(b, degree_cap=args.cap)
    if args.element:
        gens = args.element
    elif args.item:
        item = catalog.get_item(args.item)
        if item.presentation is None:
            from .errors import NoPresentation
            raise NoPresentation(f"item {args.item} has no recorded presentation")
        gens = item.presentation.generators(parse_params(args.param))
    else:
        raise UsageError("give --element or --item")
    rep = Report("relations", {"braiding": b.to_json(), "elements": gens})
    for gen in gens:
        rep.check(f"{gen} vanishes", True, nichols.vanishes_in_nichols(v, gen))
    if args.nestings:
        # every full bracketing of each flat word, reported without a verdict
        out = {}
        for gen in gens:
            word = _flat_word(gen)
            if word and len(word) > 2:
                out[gen] = {nichols.spec_text(n): nichols.vanishes_in_nichols(v, nichols.q_commutator(v, n))
                            for n in nichols.bracket_nestings(word)}
        rep.outputs["nestings"] = out
    return rep


def _flat_word(text):
    m = re.fullmatch(r"\[(\d(?:,\d)*)\]", text.replace(" ", ""))
    return [int(x) for x in m.group(1).split(",")] if m else None


def cmd_w3(args):
    from .freefield import verify_w3_generator
    return verify_w3_generator(args.p)


def cmd_coset(args):
    from .freefield import verify_coset_currents
    return verify_coset_currents(args.item, args.p, j=args.j, shift=args.shift)


def cmd_octuplet(args):
    from .freefield import OctupletFields, octuplet, octuplet_opes
    o = OctupletFields(args.p)
    rep = octuplet(args.p, o)
    if args.fields:
        rep.outputs["expressions"] = {n: o[n].to_json() for n in o.fields}
    if args.opes:
        sub = octuplet_opes(args.p, o)
        rep.checks += sub.checks
        rep.outputs["opes"] = sub.outputs
    return rep


def cmd_primary(args):
    from .freefield import primary_report
    return primary_report(args.item, args.p, args.weight)


def cmd_verify(args):
    from .suite import run_suite
    if args.suite != "paper":
        raise UsageError(f"unknown suite {args.suite}")
    only = [int(x) for x in args.only.split(",")] if args.only else None
    reports = run_suite(deep=args.deep, only=only)
    rep = Report("verify", {"suite": args.suite, "deep": args.deep})
    rep.outputs["criteria"] = [r.to_json() for r in reports]
    for r in reports:
        rep.check(r.command, True, r.ok)
    return rep


# parser

def _braiding_opts(p, item=True):
    p.add_argument("--braiding", help="braiding JSON, a bare matrix of angles, or @file")
    p.add_argument("--diagram", help="rank-2 shorthand q11,q22,monodromy")
    if item:
        p.add_argument("--item", help="catalog item (with --param name=value)")
        p.add_argument("--param", action="append", help="item parameter, e.g. p=3")


def build_parser():
    ap = argparse.ArgumentParser(prog="nicholscc", description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("cartan", help="generalized Cartan matrix of a braiding")
    _braiding_opts(p)
    p.set_defaults(fn=cmd_cartan)

    p = sub.add_parser("reflect", help="Weyl reflection at node k (1-based)")
    _braiding_opts(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=cmd_reflect)

    p = sub.add_parser("orbit", help="twist classes in the Weyl orbit")
    _braiding_opts(p)
    p.add_argument("--cap", type=int, default=64)
    p.set_defaults(fn=cmd_orbit)

    p = sub.add_parser("charge", help="central charge of a Gram matrix")
    p.add_argument("--gram", required=True)
    p.set_defaults(fn=cmd_charge)

    p = sub.add_parser("solve", help="xi, charge and reflection invariance of a Gram matrix")
    p.add_argument("--gram", required=True)
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("enumerate", help="scan an item's Gram family for admissible solutions")
    p.add_argument("--item", required=True)
    p.add_argument("--int", type=int, help="bound on |integer parameters|")
    p.add_argument("--order", help="lo,hi bounds on |p|")
    p.add_argument("--bound", action="append", help="per-parameter bound name=N")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("catalog", help="the rank-2 catalog")
    p.add_argument("action", choices=["list", "show", "dump"])
    p.add_argument("id", nargs="?")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_catalog)

    p = sub.add_parser("nichols-dim", help="Hilbert series and dimension of a Nichols algebra")
    _braiding_opts(p)
    p.add_argument("--cap", type=int, default=None, help="degree cap")
    p.add_argument("--hilbert", action="store_true", help="include multidegree dimensions")
    p.set_defaults(fn=cmd_nichols_dim)

    p = sub.add_parser("relations", help="check that elements vanish in the Nichols algebra")
    _braiding_opts(p)
    p.add_argument("--element", action="append", help='e.g. "[1,1,2]" or "[1,2]^3"')
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--nestings", action="store_true", help="also test every bracketing of flat words")
    p.set_defaults(fn=cmd_relations)

    p = sub.add_parser("w3", help="weight-3 generator of item 2.1")
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(fn=cmd_w3)

    p = sub.add_parser("coset", help="coset currents of items 2.2 and 3.1")
    p.add_argument("--item", required=True, choices=["2.2", "3.1"])
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--j", type=int, default=0)
    p.add_argument("--shift", type=int, default=0, help="shift k (negative control)")
    p.set_defaults(fn=cmd_coset)

    p = sub.add_parser("octuplet", help="the octuplet of W3 primaries")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--opes", action="store_true")
    p.add_argument("--fields", action="store_true", help="print the field expressions")
    p.set_defaults(fn=cmd_octuplet)

    p = sub.add_parser("primary", help="unique primary in a centralizer")
    p.add_argument("--item", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--weight", type=int, required=True)
    p.set_defaults(fn=cmd_primary)

    p = sub.add_parser("verify", help="run the acceptance battery")
    p.add_argument("--suite", default="paper")
    p.add_argument("--deep", action="store_true")
    p.add_argument("--only", help="comma-separated criterion numbers")
    p.set_defaults(fn=cmd_verify)
    return ap


def _text(rep):
    lines = [rep.text()] if rep.checks else [rep.command]
    for k, v in rep.outputs.items():
        if k == "criteria":
            continue
        lines.append(f"{k}: {_render(v)}")
    return "\n".join(lines)


def _render(v):
    v = jsonable(v)
    if isinstance(v, str):
        return v
    return json.dumps(v)


def run(argv, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(argv)
    as_json = "--json" in argv
    argv = [a for a in argv if a != "--json"]
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        rep = args.fn(args)
    except UsageError as e:
        print(f"usage error: {e}", file=err)
        return 2
    except (NicholsCCError, ValueError, ZeroDivisionError) as e:
        print(f"{type(e).__name__}: {e}", file=err)
        return 1
    if as_json:
        print(rep.dumps(), file=out)
    elif rep.command == "charge":
        print(f"c = {format_rational(rep.outputs['charge'])}", file=out)
    else:
        print(_text(rep), file=out)
    return 0 if rep.ok else 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
