"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (bad structure, unparsable
input, unknown name, resource cap), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog
from .algebra import StructureError, format_table, is_quasi_trivial, orbit_decomposition, verify_biquandle, verify_quandle
from .cohomology import Cochain2, ResourceLimitError, is_cocycle2, parse_chi, parse_cochain, search_cocycles2
from .coloring import counting_invariant, enumerate_colorings
from .enhancement import InvariantTable, cocycle_invariant, invariant_table
from .links import DiagramError, enumerate_orientations, parse_pretzel
from .pretzel import classify, distinguishing_certificate


class UsageError(Exception):
    pass


def _cocycle(text: str, modulus):
    """A catalog cocycle name, ``n; (x,y)=c; ...`` text, or a chi sum with --mod."""
    if text in catalog.COCYCLES:
        return catalog.get_cocycle(text)
    if ";" in text:
        return parse_cochain(text)
    if modulus is None:
        raise UsageError("cocycle %r needs --mod" % text)
    return parse_chi(text, modulus)


def cmd_verify(args, out):
    X = catalog.get_structure(args.structure)
    if X.is_quandle:
        report = verify_quandle(X.under)
        kind = "kei" if report.kei else "quandle"
    else:
        report = verify_biquandle(X)
        kind = "biquandle"
    if report.valid:
        out.write("valid %s, %d elements\n" % (kind, len(X)))
        return 0
    out.write("invalid %s\n" % kind)
    for law, witness in report.violations:
        out.write("  %s fails at %s\n" % (law, tuple(w + 1 for w in witness)))
    return 1


def cmd_orbits(args, out):
    X = catalog.get_structure(args.structure)
    orb = orbit_decomposition(X)
    for i, o in enumerate(orb.orbits):
        out.write("O%d = {%s}\n" % (i + 1, ", ".join(X.label(x) if X.labels else str(x + 1) for x in o)))
    out.write("quasi-trivial: %s\n" % ("yes" if is_quasi_trivial(X) else "no"))
    return 0


def cmd_color(args, out):
    d = catalog.get_link(args.link)
    X = catalog.get_structure(args.structure)
    if args.seed_dump:
        cols = enumerate_colorings(d, X)
        with open(args.seed_dump, "w") as fh:
            for i, c in enumerate(cols):
                fh.write("# coloring %d\n" % (i + 1))
                fh.write(c.to_csv())
        out.write("%d\n" % len(cols))
    else:
        out.write("%d\n" % counting_invariant(d, X))
    return 0


def cmd_cocycles(args, out):
    X = catalog.get_structure(args.structure)
    if args.mod is None or args.mod < 2:
        raise UsageError("cocycles needs --mod n with n >= 2")
    found = search_cocycles2(
        X,
        args.mod,
        quasi_trivial=args.quasi_trivial,
        mod_coboundaries=args.mod_coboundaries,
        max_variables=args.max_variables,
    )
    for phi in found:
        out.write((phi.to_text() if args.csv else phi.to_chi()) + "\n")
    return 0


def cmd_invariant(args, out):
    d = catalog.get_link(args.link)
    X = catalog.get_structure(args.structure)
    phi = _cocycle(args.cocycle, args.mod)
    if not is_cocycle2(phi, X):
        sys.stderr.write("warning: the cochain is not a 2-cocycle of %s\n" % (X.name or args.structure))
    if args.all_orientations:
        seen = []
        for v in enumerate_orientations(d):
            p = str(cocycle_invariant(v, X, phi))
            if p not in seen:
                seen.append(p)
        out.write("\n".join(seen) + "\n")
    else:
        out.write("%s\n" % cocycle_invariant(d, X, phi))
    return 0


def cmd_classify(args, out):
    p = parse_pretzel(args.pretzel)
    h = classify(p)
    out.write("%s\nbranch %s\nN=%d E=%d\n" % (h.verdict.value, h.reason, h.component_count, h.even_count))
    if args.certificate and not h.trivial and h.component_count >= 2:
        cert = distinguishing_certificate(p)
        if cert is None:
            out.write("certificate: none found\n")
        else:
            out.write(
                "certificate: Z_%d[t^{+-1}]/(1-t)^2 colors %d vs %d for the unlink\n"
                % (cert.modulus, cert.link_count, cert.unlink_count)
            )
    return 0


def cmd_table(args, out):
    X = catalog.get_structure(args.structure)
    links = [s for s in args.links.split(",") if s]
    names = [s for s in args.cocycles.split(",") if s]
    cocycles = [(n, _cocycle(n, args.mod)) for n in names]
    diagrams = [(l, catalog.get_link(l)) for l in links]
    if args.all_orientations:
        cells = {}
        for l, d in diagrams:
            for cname, phi in cocycles:
                vals = []
                for v in enumerate_orientations(d):
                    s = str(cocycle_invariant(v, X, phi))
                    if s not in vals:
                        vals.append(s)
                cells[(l, cname)] = " | ".join(vals)
        table = InvariantTable(links, names, cells)
        if args.csv:
            out.write("link,cocycle,orientation_values\n")
            for l in links:
                for c in names:
                    out.write('%s,%s,"%s"\n' % (l, c, cells[(l, c)]))
        else:
            out.write(table.to_text())
        return 0
    table = invariant_table(diagrams, X, cocycles)
    out.write(table.to_csv() if args.csv else table.to_text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="linkhomotopy", description="Link-homotopy invariants from quasi-trivial quandles and biquandles.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check the axioms of a structure")
    p.add_argument("structure", help="catalog name or table file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orbits", help="orbit decomposition and quasi-triviality")
    p.add_argument("structure")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("color", help="count colorings of a link")
    p.add_argument("link")
    p.add_argument("structure")
    p.add_argument("--seed-dump", metavar="FILE", help="also write every coloring to FILE as CSV blocks")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("cocycles", help="search for 2-cocycles over Z_n")
    p.add_argument("structure")
    p.add_argument("--mod", type=int)
    p.add_argument("--quasi-trivial", action="store_true", help="restrict to cross-orbit support")
    p.add_argument("--mod-coboundaries", action="store_true", help="one representative per cohomology class")
    p.add_argument("--csv", action="store_true", help="print 'n; (x,y)=c' records instead of chi sums")
    p.add_argument("--max-variables", type=int, default=400)
    p.set_defaults(func=cmd_cocycles)

    p = sub.add_parser("invariant", help="cocycle-enhanced invariant of a link")
    p.add_argument("link")
    p.add_argument("structure")
    p.add_argument("cocycle", help="catalog name, 'n; (x,y)=c; ...', or a chi sum with --mod")
    p.add_argument("--mod", type=int)
    p.add_argument("--all-orientations", action="store_true")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("classify", help="link-homotopy triviality of a pretzel link")
    p.add_argument("pretzel", help="P(p1,...,pn)")
    p.add_argument("--certificate", action="store_true", help="search for a coloring certificate")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("table", help="invariant table over links and cocycles")
    p.add_argument("--links", default=",".join(catalog.TABLE_LINKS))
    p.add_argument("--structure", default="qt5")
    p.add_argument("--cocycles", default="phi1,phi2,phi3")
    p.add_argument("--mod", type=int)
    p.add_argument("--all-orientations", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_table)

    sub.add_parser("list", help="catalog names").set_defaults(func=cmd_list)
    return ap


def cmd_list(args, out):
    out.write("structures: %s\n" % ", ".join(catalog.STRUCTURE_NAMES))
    out.write("links: %s, U<n>, borromean, P(...), BR[...]\n" % ", ".join(sorted(catalog.link_codes())))
    out.write("cocycles: %s\n" % ", ".join("%s (%s)" % (c, catalog.cocycle_structure(c)) for c in catalog.COCYCLES))
    return 0


_DOMAIN_ERRORS = (
    (catalog.UnknownNameError, "unknown-name"),
    (StructureError, "invalid-structure"),
    (DiagramError, "invalid-diagram"),
    (ResourceLimitError, "resource-limit"),
    (OSError, "io"),
    (ValueError, "invalid-input"),
)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write("linkhomotopy: usage error: %s\n" % exc)
        return 2
    except tuple(e for e, _ in _DOMAIN_ERRORS) as exc:
        tag = next(t for e, t in _DOMAIN_ERRORS if isinstance(exc, e))
        sys.stderr.write("linkhomotopy: error (%s): %s\n" % (tag, exc))
        return 1


if __name__ == "__main__":
    sys.exit(main())
