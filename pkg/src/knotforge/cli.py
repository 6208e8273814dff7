"""knotforge command line interface.

Every subcommand prints a deterministic JSON report (machine interface)
followed by a short human summary on stderr-free stdout lines prefixed
with '#'.  The --convention flag flips the global mirror convention: the
default is the published one (sigma(K_m) = +2m); --convention tables
negates signatures and Xi values in reports.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import bounds as bounds_mod
from .catalog import CATALOG, by_name, km_braid, km_record
from .coloring import fox_colorings, surjective_colorings
from .diagram import DiagramError, PlanarDiagram, braid_closure, parse_pd
from .dihedral import branched_h1
from .family import km_diagram
from .goeritz import checkerboard, goeritz_data, gl_knot_signature, knot_determinant
from .hilden import lift_curve, sphere_cover, trisection_of_cover
from .seifert import (murasugi_bound, seifert_matrix, seifert_signature,
                      tristram_levine)
from .triplane import km_triplane, orientability, triplane_euler


def _emit(report, summary_lines, out=None):
    text = json.dumps(report, indent=2, sort_keys=True)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    for line in summary_lines:
        print("# " + line)


def _convention_sign(args):
    return -1 if getattr(args, "convention", "paper") == "tables" else 1


def _load_diagram(args) -> PlanarDiagram:
    if getattr(args, "pd", None):
        return parse_pd(args.pd)
    if getattr(args, "pd_file", None):
        with open(args.pd_file) as fh:
            return parse_pd(fh.read())
    if getattr(args, "braid", None):
        word = [int(x) for x in args.braid.split(",") if x.strip()]
        return braid_closure(word)
    if getattr(args, "knot", None):
        return by_name(args.knot).diagram()
    raise SystemExit("no diagram given: use --pd, --pd-file, --braid or --knot")


def cmd_color(args):
    d = _load_diagram(args)
    count, cols, basis = fox_colorings(d, args.p)
    surj = [c for c in cols if c.surjective]
    report = {"p": args.p, "count": count,
              "surjective_count": len(surj),
              "colorings": [c.to_json() for c in (cols if args.all else surj[:1])],
              "basis": [list(b) for b in basis],
              "convention": args.convention}
    _emit(report, [f"{count} Fox {args.p}-colorings, {len(surj)} surjective"],
          args.out)


def cmd_signature(args):
    d = _load_diagram(args)
    s = _convention_sign(args)
    sig = s * gl_knot_signature(d)
    report = {"signature": sig, "determinant": knot_determinant(d),
              "convention": args.convention}
    _emit(report, [f"sigma = {sig}, det = {report['determinant']}"], args.out)


def cmd_goeritz(args):
    d = _load_diagram(args)
    data = goeritz_data(d)
    report = data.to_json()
    report["convention"] = args.convention
    if args.convention == "tables":
        report["sigma_K"] = -report["sigma_K"]
    _emit(report, [f"sigma(G) = {data.sigma_G}, mu = {data.mu}, "
                   f"sigma(K) = {report['sigma_K']}"], args.out)


def cmd_seifert(args):
    d = _load_diagram(args)
    sd = seifert_matrix(d)
    report = sd.to_json()
    report["signature"] = _convention_sign(args) * seifert_signature(sd.matrix)
    report["convention"] = args.convention
    _emit(report, [f"genus {sd.genus}, sigma(V+V^T) = {report['signature']}"],
          args.out)


def cmd_tl(args):
    d = _load_diagram(args)
    sd = seifert_matrix(d)
    tl = tristram_levine(sd.matrix, args.p)
    s = _convention_sign(args)
    report = {"V": [list(r) for r in sd.matrix], "genus": sd.genus,
              "tl": {"p": args.p, "sigmas": [s * x for x in tl.signatures],
                     "nullities": list(tl.nullities)},
              "convention": args.convention}
    _emit(report, [f"TL signatures at p={args.p}: {report['tl']['sigmas']}"],
          args.out)


def cmd_dihedral_h1(args):
    d = _load_diagram(args)
    cols = surjective_colorings(d, args.p)
    if not cols:
        raise SystemExit(f"no surjective {args.p}-coloring exists")
    h = branched_h1(d, cols[0])
    report = h.to_json()
    report["p"] = args.p
    _emit(report, [f"H1(M) rank {h.rank}, torsion {list(h.torsion)}"], args.out)


def cmd_bounds(args):
    s = _convention_sign(args)
    if args.knot_km is not None:
        m = args.knot_km
        xi = bounds_mod.XiValue(s * (2 * m + 1), 3, "from_cover_signature")
        d, _ = km_diagram(m)
        cols = surjective_colorings(d, 3)
        h = branched_h1(d, cols[0])
        rep = bounds_mod.sharpness_report(s * 2 * m, xi, h.rank, True)
    else:
        xi = bounds_mod.XiValue(args.xi, args.p)
        if args.sigma is None:
            rep = bounds_mod.dihedral_genus_lower_bound(xi, args.rk_h1)
        else:
            rep = bounds_mod.sharpness_report(args.sigma, xi, args.rk_h1,
                                              args.definite)
    report = rep.to_json()
    report["convention"] = args.convention
    _emit(report, [f"bound = {rep.lower_bound_rational} "
                   f"(genus >= {rep.lower_bound_genus})",
                   f"slice-ribbon: {rep.slice_ribbon}"], args.out)


def cmd_km(args):
    m = args.m
    s = _convention_sign(args)
    d, white = km_diagram(m)
    sh = checkerboard(d, white_order=white)
    from .goeritz import goeritz_unreduced, goeritz_reduced, classical_precursor
    from .exact import symmetric_signature, char_poly
    U = goeritz_unreduced(d, sh)
    G = goeritz_reduced(U, 0)
    sig = gl_knot_signature(d)
    report = {
        "m": m,
        "crossings": len(d.crossings),
        "pd": d.to_pd_text(),
        "unreduced_goeritz": [list(r) for r in U],
        "reduced_goeritz": [list(r) for r in G],
        "char_poly_low_first": char_poly(G),
        "sigma_G": symmetric_signature(G).signature,
        "mu": sh.mu,
        "sigma": s * sig,
        "determinant": knot_determinant(d),
        "convention": args.convention,
    }
    if args.report == "full":
        xi = bounds_mod.XiValue(s * (2 * m + 1), 3, "from_cover_signature")
        cols = surjective_colorings(d, 3)
        h = branched_h1(d, cols[0])
        rep = bounds_mod.sharpness_report(s * 2 * m, xi, h.rank, True)
        report["xi"] = xi.to_json()
        report["rk_H1_M"] = h.rank
        report["bound"] = rep.to_json()
    _emit(report, [f"K_{m}: sigma = {report['sigma']}, det = {report['determinant']}"]
          + ([f"Xi_3 = {report['xi']['value']}, bound = {report['bound']['lower_bound_rational']}, "
              f"slice-ribbon: {report['bound']['slice_ribbon']}"]
             if args.report == "full" else []),
          args.out)


def cmd_triplane(args):
    tpd = km_triplane(args.n)
    chi, genus = triplane_euler(tpd)
    verdict, _ = orientability(tpd)
    report = tpd.to_json()
    report.update({"closure_components": list(tpd.closure_counts()),
                   "chi_F": chi, "genus_F": genus, "orientable": verdict,
                   "convention": args.convention})
    _emit(report, [f"b = {tpd.bridges}, closures {tpd.closure_counts()}, "
                   f"chi(F) = {chi}, genus {genus}, {verdict}"], args.out)


def cmd_cover(args):
    tpd = km_triplane(args.n)
    cov = sphere_cover(tpd.tangles[0].punctures, tpd.colors, tpd.p)
    report = {"n": args.n, "branch_points": len(cov.punctures),
              "genus": cov.genus(), "regular_genus": cov.regular_genus(),
              "convention": args.convention}
    if args.word:
        word = [int(x) for x in args.word.split(",") if x.strip()]
        cycles = lift_curve(cov, word)
        report["word_lifts"] = [list(c) for c in cycles]
    _emit(report, [f"Sigma_{args.n}: genus {report['genus']}, "
                   f"regular cover genus {report['regular_genus']}"], args.out)


def cmd_trisect(args):
    s = _convention_sign(args)
    tpd = km_triplane(args.n)
    tri = trisection_of_cover(tpd)
    xi = bounds_mod.xi_from_cover_signature(tri.signature, 3)
    report = tri.to_json()
    report.update({"n": args.n, "xi": s * xi.value,
                   "parity": bounds_mod.xi_parity_check(xi),
                   "convention": args.convention})
    _emit(report, [f"(g; k) = ({tri.g}; {','.join(map(str, tri.k))}), "
                   f"b2 = {tri.b2}, sigma(X) = {tri.signature}, "
                   f"Xi_3 = {report['xi']}"], args.out)


def cmd_ingest(args):
    rows = []
    with open(args.path) as fh:
        reader = csv.reader(fh)
        for row in reader:
            if not row or row[0].strip().startswith("#"):
                continue
            rows.append([c.strip() for c in row])
    records = []
    s = _convention_sign(args)
    for row in rows:
        entry = {"name": row[0]}
        try:
            d = parse_pd(row[1])
            entry["crossings"] = len(d.crossings)
            det = knot_determinant(d)
            entry["determinant"] = det
            if d.is_knot():
                entry["signature"] = s * gl_knot_signature(d)
            if len(row) > 2 and row[2]:
                entry["det_expected"] = int(row[2])
                entry["det_match"] = int(row[2]) == det
            if len(row) > 3 and row[3]:
                want = int(row[3])
                entry["signature_expected"] = want
                entry["signature_match"] = entry.get("signature") in (want, -want)
        except (DiagramError, ValueError) as e:
            entry["error"] = str(e)
        records.append(entry)
    report = {"records": records, "convention": args.convention}
    flagged = [r["name"] for r in records
               if r.get("det_match") is False or r.get("signature_match") is False
               or "error" in r]
    _emit(report, [f"{len(records)} records, {len(flagged)} flagged"
                   + (f": {', '.join(flagged)}" if flagged else "")], args.out)


def _add_diagram_args(sp):
    sp.add_argument("--pd", help="PD code text")
    sp.add_argument("--pd-file", help="file containing a PD code")
    sp.add_argument("--braid", help="comma-separated braid word")
    sp.add_argument("--knot", help="catalog knot name")


def main(argv=None):
    ap = argparse.ArgumentParser(prog="knotforge")
    ap.add_argument("--convention", choices=("paper", "tables"),
                    default="paper",
                    help="global mirror convention (default: paper, "
                         "sigma(K_m) = +2m)")
    ap.add_argument("--out", help="write the JSON report to this path")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("color", help="Fox p-colorings")
    _add_diagram_args(sp)
    sp.add_argument("--p", type=int, default=3)
    sp.add_argument("--all", action="store_true")
    sp.set_defaults(func=cmd_color)

    sp = sub.add_parser("signature", help="Gordon-Litherland signature")
    _add_diagram_args(sp)
    sp.set_defaults(func=cmd_signature)

    sp = sub.add_parser("goeritz", help="Goeritz matrices and mu")
    _add_diagram_args(sp)
    sp.set_defaults(func=cmd_goeritz)

    sp = sub.add_parser("seifert", help="Seifert matrix (braid closures)")
    _add_diagram_args(sp)
    sp.set_defaults(func=cmd_seifert)

    sp = sub.add_parser("tl", help="Tristram-Levine signatures")
    _add_diagram_args(sp)
    sp.add_argument("--p", type=int, default=3)
    sp.set_defaults(func=cmd_tl)

    sp = sub.add_parser("dihedral-h1", help="H1 of the dihedral branched cover")
    _add_diagram_args(sp)
    sp.add_argument("--p", type=int, default=3)
    sp.set_defaults(func=cmd_dihedral_h1)

    sp = sub.add_parser("bounds", help="Theorem-1-style genus bound report")
    sp.add_argument("--xi", type=int)
    sp.add_argument("--p", type=int, default=3)
    sp.add_argument("--rk-h1", type=int, default=0)
    sp.add_argument("--sigma", type=int)
    sp.add_argument("--definite", action="store_true")
    sp.add_argument("--km", dest="knot_km", type=int,
                    help="assemble all inputs automatically for K_m")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("km", help="K_m family golden data")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--report", choices=("goeritz", "full"), default="goeritz")
    sp.set_defaults(func=cmd_km)

    sp = sub.add_parser("triplane", help="K_m singular tri-plane diagram")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_triplane)

    sp = sub.add_parser("cover", help="dihedral cover of the bridge sphere")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--word", help="meridian word, comma-separated indices")
    sp.set_defaults(func=cmd_cover)

    sp = sub.add_parser("trisect", help="trisection of the branched cover")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_trisect)

    sp = sub.add_parser("ingest-table", help="validate a knot-table CSV")
    sp.add_argument("path")
    sp.set_defaults(func=cmd_ingest)

    args = ap.parse_args(argv)
    try:
        args.func(args)
    except (DiagramError, ValueError) as e:
        print(json.dumps({"error": str(e)}, sort_keys=True))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
