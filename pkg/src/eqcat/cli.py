"""Command-line interface: ``eqcat <area> <command> [flags]``.

Exit status 0 when every check passes, 1 when some check fails (the report
names a witness), 2 on invalid input or any other error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import burnside, freeperm, nerve, operads, pqr
from .errors import EqcatError, UnknownCommand
from .report import Report

X_PRESETS = ("empty", "point", "regular", "two")

COMMANDS = {
    "group": ("info",),
    "gset": ("classify",),
    "burnside": ("marks", "tomdieck"),
    "verify": ("operad", "pairing", "catone", "cattwo", "fixedcat", "omega", "spans", "lambda",
               "obstruction"),
    "nerve": ("homology",),
}


def _global_flags():
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("global flags")
    g.add_argument("--group", help="preset name (%s) or JSON group file" % ", ".join(_preset_names()))
    g.add_argument("--gset", help="JSON G-set file")
    g.add_argument("--x", choices=X_PRESETS, help="built-in G-set instead of --gset")
    g.add_argument("--jmax", type=int)
    g.add_argument("--depth", type=int)
    g.add_argument("--samples", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--json", action="store_true", help="print the report as JSON")
    g.add_argument("--budget", type=int)
    return p


def _preset_names():
    from .groups import PRESET_NAMES
    return PRESET_NAMES


def build_parser():
    common = _global_flags()
    parser = argparse.ArgumentParser(prog="eqcat",
                                     description="Finite checks for equivariant categorical structures.")
    areas = parser.add_subparsers(dest="area", metavar="AREA")
    areas.required = True
    for area, cmds in COMMANDS.items():
        ap = areas.add_parser(area)
        sub = ap.add_subparsers(dest="command", metavar="COMMAND")
        sub.required = True
        for cmd in cmds:
            cp = sub.add_parser(cmd, parents=[common])
            if (area, cmd) == ("burnside", "marks"):
                cp.add_argument("--csv", action="store_true", help="CSV instead of aligned text")
            if (area, cmd) == ("verify", "fixedcat"):
                cp.add_argument("--pi", type=int, default=3, help="Pi = Sigma_n (default 3)")
            if (area, cmd) == ("verify", "pairing"):
                cp.add_argument("--cap", type=int, default=6, help="bound on (sum h)(sum i)")
            if (area, cmd) == ("nerve", "homology"):
                cp.add_argument("--category", default="group",
                                choices=("group", "chaotic", "discrete", "action"),
                                help="BG, chaotic or discrete on G's elements, or the action groupoid of X")
                cp.add_argument("--qmax", type=int, default=nerve.DEFAULT_QMAX)
                cp.add_argument("--dump-chains", metavar="DIR",
                                help="write boundary matrices as integer CSV files")
    return parser


# --------------------------------------------------------------------------
# inputs


def _read(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise EqcatError(f"cannot read {path}: {exc.strerror}") from None


def _group(args, default="C2"):
    from .groups import load_group, preset
    spec = args.group or default
    if spec in _preset_names():
        return preset(spec)
    return load_group(_read(spec))


def _x_sets(args, G, default=X_PRESETS):
    """The G-sets selected by --gset or --x, else ``default`` presets."""
    from .gsets import empty, load_gset, point, regular, trivial
    if args.gset:
        return [("file", load_gset(_read(args.gset), G))]
    make = {"empty": empty, "point": point, "regular": regular, "two": lambda G: trivial(G, 2)}
    names = [args.x] if args.x else list(default)
    return [(n, make[n](G)) for n in names]


def _opt(value, default):
    return default if value is None else value


# --------------------------------------------------------------------------
# commands


def cmd_group_info(args):
    from .groups import subgroup_classes
    G = _group(args)
    lines = [f"group {G.name}, order {G.order}", "elements: " + " ".join(G.elements),
             "subgroup classes (order, representative, |NH|, |WH|, conjugates):"]
    data = []
    for c in subgroup_classes(G):
        rep = [G.elements[x] for x in c.representative.member_indices]
        lines.append(f"  {c.order:3d}  {{{','.join(rep)}}}  {c.normalizer.order}  {c.weyl.order}  {len(c.members)}")
        data.append({"order": c.order, "representative": rep, "normalizer": c.normalizer.order,
                     "weyl": c.weyl.order, "conjugates": len(c.members)})
    return 0, "\n".join(lines), {"group": G.name, "order": G.order, "elements": list(G.elements),
                                 "classes": data}


def cmd_gset_classify(args):
    G = _group(args)
    out, data = [], []
    labels = burnside.class_labels(G)
    for name, X in _x_sets(args, G, default=("regular",)):
        b = burnside.burnside_class(X)
        terms = [f"{n}[G/{labels[i]}]" for i, n in enumerate(b.coefficients) if n]
        out.append(f"{name}: {X.size} points, {len(X.orbits)} orbits = " + (" + ".join(terms) or "0"))
        data.append({"gset": name, "size": X.size, "burnside": list(b.coefficients)})
    return 0, "\n".join(out), {"group": G.name, "classes": labels, "gsets": data}


def cmd_burnside_marks(args):
    G = _group(args)
    T = burnside.table_of_marks(G)
    rep = burnside.check_marks(G)
    table = burnside.marks_csv(G) if args.csv else burnside.marks_text(G)
    text = json.dumps(T, separators=(",", ":")) + "\n" + table + "\n" + rep.to_text()
    return (0 if rep.ok else 1), text, {"group": G.name, "classes": burnside.class_labels(G),
                                        "marks": T, "report": rep.to_dict()}


def cmd_burnside_tomdieck(args):
    G = _group(args)
    rep = Report("burnside tomdieck", {"group": G.name})
    lines, data = [], []
    labels = burnside.class_labels(G)
    for name, X in _x_sets(args, G, default=("empty", "point", "regular")):
        ranks, total, r = burnside.tom_dieck_pi0(G, X)
        rep.extend(r)
        lines.append(f"X = {name}: ranks " + ", ".join(f"{labels[i]}:{k}" for i, k in enumerate(ranks))
                     + f"; total {total}")
        data.append({"gset": name, "ranks": ranks, "total": total})
    out = rep.to_dict()
    out["results"] = data
    return (0 if rep.ok else 1), "\n".join(lines) + "\n" + rep.to_text(), out


def _run_report(rep):
    return (0 if rep.ok else 1), rep.to_text() + "\n" + rep.summary(), rep.to_dict()


def cmd_verify_operad(args):
    if args.group:
        G = _group(args)
        jmax = _opt(args.jmax, 3)
        op = operads.og_operad(G, jmax)
    else:
        jmax = _opt(args.jmax, 4)
        op = operads.barratt_eccles(jmax)
    return _run_report(operads.verify_operad(op, jmax, args.budget, args.samples, args.seed))


def cmd_verify_pairing(args):
    jmax = _opt(args.jmax, 3)
    P = operads.pairing_OG(_group(args), jmax) if args.group else operads.pairing_BE(jmax)
    kw = {"budget": args.budget} if args.budget else {}
    if args.samples:
        kw["samples"] = args.samples
    return _run_report(operads.verify_pairing(P, jmax=jmax, cap=args.cap, seed=args.seed, **kw))


def cmd_verify_catone(args):
    G = _group(args)
    jmax = _opt(args.jmax, 3)
    rep = Report("verify catone", {"group": G.name, "jmax": jmax})
    for _, X in _x_sets(args, G):
        for j in range(jmax + 1):
            rep.extend(freeperm.catone_check(G, X, j))
    return _run_report(rep)


def cmd_verify_cattwo(args):
    G = _group(args)
    jmax = _opt(args.jmax, 3)
    rep = Report("verify cattwo", {"group": G.name, "jmax": jmax})
    for _, X in _x_sets(args, G):
        rep.extend(freeperm.cattwo_check(G, X, jmax))
    return _run_report(rep)


def cmd_verify_fixedcat(args):
    from .groups import symmetric_group
    G = _group(args)
    kw = {"budget": args.budget} if args.budget else {}
    return _run_report(nerve.fixedcat_check(G, symmetric_group(args.pi), **kw))


def cmd_verify_omega(args):
    G = _group(args)
    jmax = _opt(args.jmax, 2)
    rep = Report("verify omega", {"group": G.name, "jmax": jmax})
    for _, X in _x_sets(args, G, default=("point", "regular")):
        rep.extend(pqr.omega_check(G, X, jmax, args.depth))
    return _run_report(rep)


def cmd_verify_spans(args):
    G = _group(args)
    jmax = _opt(args.jmax, 2)
    sets = [X for _, X in _x_sets(args, G, default=("point", "regular"))]
    return _run_report(freeperm.span_check(G, sets, jmax))


def cmd_verify_lambda(args):
    G = _group(args)
    depth = _opt(args.depth, pqr.DEFAULT_DEPTH)
    samples = _opt(args.samples, pqr.DEFAULT_SAMPLES)
    rep = Report("verify lambda", {"group": G.name, "depth": depth, "samples": samples, "seed": args.seed})
    rep.extend(pqr.verify_lambda(G, depth, samples, args.seed))
    rep.extend(pqr.unipq_check(G, _opt(args.jmax, 2), depth, samples, args.seed))
    X = _x_sets(args, G, default=("regular",))[0][1]
    rep.extend(pqr.verify_theta(G, X, depth, samples, args.seed))
    return _run_report(rep)


def cmd_verify_obstruction(args):
    if args.group or args.gset:
        raise EqcatError("verify obstruction takes no --group or --gset: it checks Q8 and its center")
    return _run_report(burnside.q8_obstruction())


def _nerve_category(args):
    from .fincat import chaotic, discrete, group_as_category
    G = _group(args)
    if args.category == "group":
        return group_as_category(G)
    if args.category == "chaotic":
        return chaotic(G.elements)
    if args.category == "discrete":
        return discrete(G.elements)
    return nerve.action_groupoid(_x_sets(args, G, default=("regular",))[0][1])


def cmd_nerve_homology(args):
    C = _nerve_category(args)
    budget = _opt(args.budget, nerve.DEFAULT_BUDGET)
    N = nerve.nerve_truncated(C, args.qmax, budget)
    H = nerve.homology(C, args.qmax, nerve=N)
    rep = nerve.check_simplicial_identities(N)
    lines = [f"category {C.name}: {C.n_objects} objects, {C.n_morphisms} morphisms",
             "simplices per level: " + " ".join(map(str, N.sizes()))]
    lines += [f"H_{q} = {h}" for q, h in enumerate(H)]
    lines.append(f"(degrees <= {args.qmax - 1}; higher degrees are affected by truncation)")
    out = rep.to_dict()
    out["homology"] = [{"degree": q, "rank": h.rank, "torsion": list(h.torsion)} for q, h in enumerate(H)]
    if args.dump_chains:
        paths = nerve.dump_chains(C, args.qmax, args.dump_chains, budget)
        lines.append("wrote " + " ".join(paths))
        out["boundary_files"] = paths
    return (0 if rep.ok else 1), "\n".join(lines) + "\n" + rep.to_text(), out


def dispatch(argv):
    """Run one command; returns ``(exit status, text, JSON-ready dict)``."""
    args = build_parser().parse_args(argv)
    fn = globals().get(f"cmd_{args.area}_{args.command}")
    if fn is None:
        raise UnknownCommand(f"{args.area} {args.command}")
    return fn(args), args


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        (code, text, data), args = dispatch(argv)
    except EqcatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(data, indent=2, default=str))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
