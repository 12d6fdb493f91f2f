"""Command-line entry point: ``bicover <command> ...``.

Exit codes: 0 success, 1 invalid certificate or failed check, 2 malformed
input file, 3 precondition violation, 4 search timeout.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .families import FAMILIES
from .graph import COVER, StructureError, complement, locality, verify
from .linalg import adjacency_matrix, rank_exact
from .reductions import extract_crown_partition, fold_crown_cover, localize_cover
from .solver import BicliqueOverflow, lower_bounds, solve
from .subcube import (
    cover_to_family,
    family_to_cover,
    pad_to_uniform,
    restrict_dominating,
)

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_PRECONDITION, EXIT_TIMEOUT = 0, 1, 2, 3, 4


class _Malformed(Exception):
    def __init__(self, path: str, err: formats.ParseError):
        super().__init__(f"{path}: {err}")


def _read(reader, path: str):
    try:
        return reader(path)
    except formats.ParseError as err:
        raise _Malformed(path, err) from None


def _emit(text: str, out: str | None) -> None:
    if out:
        formats.write_text(out, text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    if args.family not in FAMILIES:
        raise ValueError(f"unknown family {args.family!r}")
    make, certs = FAMILIES[args.family]
    g = make(args.param)
    formats.write_text(args.out, formats.format_graph(g))
    if args.cert:
        if args.cert not in certs:
            raise ValueError(f"family {args.family} has no certificate {args.cert!r}; "
                             f"choose from {', '.join(sorted(certs))}")
        cert_path = args.cert_out or str(Path(args.out).with_suffix(".cert"))
        formats.write_text(cert_path, formats.format_certificate(certs[args.cert](args.param)))
        print(f"wrote {args.out} and {cert_path}")
    else:
        print(f"wrote {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read(formats.read_graph, args.graph)
    cert = _read(formats.read_certificate, args.cert)
    verdict = verify(g, cert)
    if not verdict:
        print(f"invalid: {verdict.reason}")
        return EXIT_INVALID
    top = locality(cert, g.n).max
    if args.max_local is not None and top > args.max_local:
        print(f"invalid: locality {top} exceeds {args.max_local}")
        return EXIT_INVALID
    print(f"valid {cert.mode} of size {len(cert)}, locality {top}")
    return EXIT_OK


def cmd_solve(args) -> int:
    g = _read(formats.read_graph, args.graph)
    if args.measure == "rho":
        res = solve(complement(g), "bc", args.time_limit, args.workers)
    else:
        res = solve(g, args.measure, args.time_limit, args.workers)
    if not res.complete:
        lo, hi = res.bracket
        print(f"bracket [{lo}, {hi}]")
        return EXIT_TIMEOUT
    print(f"{args.measure} = {res.value}")
    if args.witness:
        if args.measure == "rho":
            text = formats.format_family(cover_to_family(g, res.witness))
        elif args.measure == "tau":
            text = formats.format_family(pad_to_uniform(cover_to_family(g, res.witness)))
        else:
            text = formats.format_certificate(res.witness)
        formats.write_text(args.witness, text)
    return EXIT_OK


def cmd_bound(args) -> int:
    g = _read(formats.read_graph, args.graph)
    measure = "bc" if args.measure == "rho" else args.measure
    target = complement(g) if args.measure == "rho" else g
    report = lower_bounds(target, measure)
    print(f"measure = {args.measure}")
    print(f"lower = {report.lower}")
    print(f"reason = {report.lower_reason}")
    return EXIT_OK


def cmd_rank(args) -> int:
    g = _read(formats.read_graph, args.graph)
    r = rank_exact(adjacency_matrix(g))
    print(f"rank = {r}")
    print(f"bp >= {-(-r // 2)}")
    return EXIT_OK


def cmd_convert(args) -> int:
    if args.subcubes_to_graph:
        fam = _read(formats.read_family, args.subcubes_to_graph)
        g, cert, dropped = family_to_cover(fam)
        _emit(formats.format_graph(g), args.out)
        if args.cert_out:
            formats.write_text(args.cert_out, formats.format_certificate(cert))
        if dropped:
            print(f"dropped {dropped} coordinate(s) with an empty side", file=sys.stderr)
    else:
        gpath, cpath = args.cover_to_subcubes
        g = _read(formats.read_graph, gpath)
        cert = _read(formats.read_certificate, cpath)
        _emit(formats.format_family(cover_to_family(g, cert)), args.out)
    return EXIT_OK


def cmd_transform(args) -> int:
    if args.localize:
        g = _read(formats.read_graph, args.localize[0])
        cert = _read(formats.read_certificate, args.localize[1])
        _emit(formats.format_certificate(localize_cover(g, cert)), args.out)
    elif args.extract_crown:
        m = _int_arg(args.extract_crown[0], "m")
        pi = _read(formats.read_certificate, args.extract_crown[1])
        ex = extract_crown_partition(m, pi)
        _emit(formats.format_certificate(ex.partition), args.out)
        if args.graph_out:
            formats.write_text(args.graph_out, formats.format_graph(ex.crown))
        print(f"t = {ex.t} (coordinate {ex.coordinate})", file=sys.stderr)
    elif args.fold_crown:
        t = _int_arg(args.fold_crown[0], "t")
        cert = _read(formats.read_certificate, args.fold_crown[1])
        res = fold_crown_cover(t, cert)
        _emit(formats.format_certificate(res.cover), args.out)
        print(f"folded locality {res.folded_max}, crown locality {res.original_max}",
              file=sys.stderr)
    elif args.pad:
        fam = _read(formats.read_family, args.pad)
        _emit(formats.format_family(pad_to_uniform(fam)), args.out)
    else:
        fam = _read(formats.read_family, args.restrict_dominating[0])
        idx = _int_arg(args.restrict_dominating[1], "idx")
        _emit(formats.format_family(restrict_dominating(fam, idx)), args.out)
    return EXIT_OK


def _int_arg(tok: str, name: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {tok!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bicover", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a family graph and optionally a certificate")
    g.add_argument("--family", required=True, choices=sorted(FAMILIES))
    g.add_argument("--param", required=True, type=int)
    g.add_argument("--cert", help="certificate name for the family")
    g.add_argument("--out", required=True, help="graph output path")
    g.add_argument("--cert-out", help="certificate path (default: OUT with .cert suffix)")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="check a certificate against a graph")
    v.add_argument("--graph", required=True)
    v.add_argument("--cert", required=True)
    v.add_argument("--max-local", type=int)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("solve", help="exact value of a measure")
    s.add_argument("--graph", required=True)
    s.add_argument("--measure", required=True, choices=["bc", "bp", "lbc", "lbp", "tau", "rho"])
    s.add_argument("--time-limit", type=float)
    s.add_argument("--witness", help="write the witness certificate or subcube family here")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_solve)

    b = sub.add_parser("bound", help="certified lower bound for a measure")
    b.add_argument("--graph", required=True)
    b.add_argument("--measure", required=True, choices=["bc", "bp", "lbc", "lbp", "tau", "rho"])
    b.set_defaults(func=cmd_bound)

    r = sub.add_parser("rank", help="exact adjacency rank and the partition bound")
    r.add_argument("--graph", required=True)
    r.set_defaults(func=cmd_rank)

    c = sub.add_parser("convert", help="switch between subcube families and covers")
    grp = c.add_mutually_exclusive_group(required=True)
    grp.add_argument("--subcubes-to-graph", metavar="F")
    grp.add_argument("--cover-to-subcubes", nargs=2, metavar=("G", "C"))
    c.add_argument("--out")
    c.add_argument("--cert-out", help="with --subcubes-to-graph: cover of the complement")
    c.set_defaults(func=cmd_convert)

    t = sub.add_parser("transform", help="apply a certificate or family reduction")
    grp = t.add_mutually_exclusive_group(required=True)
    grp.add_argument("--thm5", "--localize", dest="localize", nargs=2, metavar=("G", "C"),
                     help="localize a 2-local cover into a low-locality partition")
    grp.add_argument("--extract-crown", nargs=2, metavar=("m", "P"),
                     help="crown partition from a partition of the codim-2 graph")
    grp.add_argument("--fold-crown", nargs=2, metavar=("t", "C"),
                     help="fold a crown cover into a cover of K_t")
    grp.add_argument("--pad", metavar="F")
    grp.add_argument("--restrict-dominating", nargs=2, metavar=("F", "idx"))
    t.add_argument("--out")
    t.add_argument("--graph-out", help="with --extract-crown: write the crown graph")
    t.set_defaults(func=cmd_transform)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Malformed as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except (StructureError, ValueError, OSError, BicliqueOverflow) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
