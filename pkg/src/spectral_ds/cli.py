"""Command-line front end: ``spectral-ds <subcommand> ...``.

Graphs go in and come out as graph6.  ``--format`` selects text (default),
json (one object per line) or csv.  Exit status is 0 on success, 1 on a
domain error and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from . import constructions as cons
from . import enumeration as enum
from . import graph as gr
from . import invariants as inv
from . import spectra as sp
from .canon import canonical_form
from .errors import GraphArgumentError, SpectralDSError
from .graph6 import from_graph6, read_graph6_lines, to_graph6

# subcommand -> the library operations it exposes
COMMAND_TABLE: dict[str, tuple[str, ...]] = {
    "named": ("graph.make_named", "graph.kn_minus"),
    "transform": ("graph.complement", "graph.join", "graph.disjoint_union",
                  "canon.canonical_form", "graph6.to_graph6", "graph6.from_graph6"),
    "spectrum": ("spectra.char_poly", "spectra.closed_walks",
                 "spectra.integer_eigenvalue_multiplicity", "spectra.count_roots_greater_than",
                 "spectra.structure_check_one_positive"),
    "invariants": ("invariants.profile",),
    "counts": ("invariants.subgraph_counts", "invariants.brute_force_counts",
               "invariants.complement_triangles", "invariants.complement_4walks"),
    "cospectral": ("spectra.is_cospectral", "spectra.is_r_cospectral"),
    "enumerate": ("enumeration.generate_graphs", "enumeration.generate_by_edges"),
    "survey": ("enumeration.survey_kn_minus",),
    "ds-verify": ("enumeration.ds_verify",),
    "construct": ("constructions.join_pair", "constructions.union_pair",
                  "constructions.kn_minus_pair", "constructions.gm_switch",
                  "constructions.figure1_family", "constructions.path_mates"),
    "multiplicity-survey": ("enumeration.multiplicity_survey",),
}


class _Out:
    def __init__(self, fmt: str, quiet: bool, stream=None):
        self.fmt = fmt
        self.quiet = quiet
        self.stream = stream or sys.stdout

    def record(self, text: str, **data) -> None:
        """One data record: ``text`` in text mode, ``data`` otherwise."""
        if self.fmt == "json":
            self.stream.write(json.dumps(data, sort_keys=True) + "\n")
        elif self.fmt == "csv":
            self.stream.write(",".join(_csv_cell(v) for v in data.values()) + "\n")
        else:
            self.stream.write(text + "\n")

    def header(self, *names: str) -> None:
        if self.fmt == "csv":
            self.stream.write(",".join(names) + "\n")

    def note(self, text: str) -> None:
        """Human summary; text mode only, suppressed by --quiet."""
        if self.fmt == "text" and not self.quiet:
            self.stream.write(text + "\n")


def _csv_cell(value) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    return str(value)


def _jobs(value: int | None) -> int:
    if value is not None:
        return max(1, value)
    env = os.environ.get("SPECTRAL_DS_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise GraphArgumentError(f"SPECTRAL_DS_JOBS must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


def _graphs(args) -> list[gr.Graph]:
    graphs = [from_graph6(s) for s in args.graphs]
    if getattr(args, "file", None):
        with open(args.file) as fh:
            graphs.extend(read_graph6_lines(fh))
    return graphs


def _exactly(graphs: list[gr.Graph], count: int, what: str) -> list[gr.Graph]:
    if len(graphs) != count:
        raise GraphArgumentError(f"{what} needs exactly {count} graph(s), got {len(graphs)}")
    return graphs


def _bool(b: bool) -> str:
    return "true" if b else "false"


# -- handlers ---------------------------------------------------------------------------


def cmd_named(args, out: _Out) -> None:
    params = []
    for tok in args.params:
        try:
            params.append(int(tok))
        except ValueError:
            params.append(from_graph6(tok))
    if args.family == "union":
        g = gr.make_named("union", params)
    elif args.family == "join":
        g = gr.make_named("join", params)
    else:
        g = gr.make_named(args.family, *params)
    out.record(to_graph6(g), family=args.family, graph6=to_graph6(g))


def cmd_transform(args, out: _Out) -> None:
    graphs = _graphs(args)
    op = args.operation
    if op == "complement":
        results = [gr.complement(g) for g in graphs]
    elif op == "canonical":
        results = [canonical_form(g).graph() for g in graphs]
    elif op == "join":
        results = [gr.join(*_exactly(graphs, 2, "join"))]
    else:
        results = [gr.disjoint_union(*graphs)]
    for g in results:
        out.record(to_graph6(g), operation=op, graph6=to_graph6(g))


def cmd_spectrum(args, out: _Out) -> None:
    out.header("graph6", "charpoly")
    for g in _graphs(args):
        p = sp.char_poly(g)
        g6 = to_graph6(g)
        data = {"graph6": g6, "charpoly": p.text()}
        lines = [f"charpoly: {p.text()}"]
        if args.walks is not None:
            data["closed_walks"] = sp.closed_walks(g, args.walks)
            lines.append(f"closed {args.walks}-walks: {data['closed_walks']}")
        if args.multiplicity is not None:
            data["multiplicity"] = sp.integer_eigenvalue_multiplicity(g, args.multiplicity)
            lines.append(f"multiplicity of {args.multiplicity}: {data['multiplicity']}")
        if args.above is not None:
            data["roots_above"] = sp.count_roots_greater_than(p, Fraction(args.above))
            lines.append(f"roots > {args.above}: {data['roots_above']}")
        if args.structure:
            data["one_positive_structure"] = sp.structure_check_one_positive(g)
            lines.append(f"complete multipartite + isolated: {_bool(data['one_positive_structure'])}")
        if out.fmt == "text":
            out.record(lines[0])
            for extra in lines[1:]:
                out.record(extra)
            out.note(f"spectrum: {sp.spectrum_summary(p)}")
        else:
            out.record("", **data)


def cmd_invariants(args, out: _Out) -> None:
    out.header("graph6", "n", "m", "t", "w4", "mult_minus1")
    for g in _graphs(args):
        pr = inv.profile(g)
        out.record(f"{to_graph6(g)} {pr.csv_row()}", graph6=to_graph6(g), n=pr.n, m=pr.m,
                   t=pr.t, w4=pr.w4, mult_minus1=pr.mult_minus1)


def cmd_counts(args, out: _Out) -> None:
    out.header("graph6", "m", "m1", "m2", "m3", "m4", "t", "complement_t", "complement_w4")
    for g in _graphs(args):
        c = inv.brute_force_counts(g) if args.brute_force else inv.subgraph_counts(g)
        data = {"graph6": to_graph6(g), "m": c.m, "m1": c.m1, "m2": c.m2, "m3": c.m3,
                "m4": c.m4, "t": c.t, "complement_t": inv.complement_triangles(g),
                "complement_w4": inv.complement_4walks(g)}
        out.record(" ".join(f"{k}={v}" for k, v in data.items()), **data)


def cmd_cospectral(args, out: _Out) -> None:
    g, h = _exactly(_graphs(args), 2, "cospectral")
    if args.generalized:
        result = sp.is_r_cospectral(g, h)
        out.record(f"r-cospectral: {_bool(result)}", r_cospectral=result)
    else:
        result = sp.is_cospectral(g, h)
        out.record(f"cospectral: {_bool(result)}", cospectral=result)


def cmd_enumerate(args, out: _Out) -> None:
    if args.vertices is not None:
        stream = enum.generate_graphs(args.vertices, edges=args.edge_count)
    else:
        stream = enum.generate_by_edges(args.edges)
    count = 0
    for g in stream:
        out.record(to_graph6(g), graph6=to_graph6(g))
        count += 1
    out.note(f"# {count} graphs")


def cmd_survey(args, out: _Out) -> None:
    mode = "generalized" if args.generalized else "plain"
    report = enum.survey_kn_minus(args.n, args.deleted, mode, jobs=_jobs(args.jobs))
    if out.fmt == "csv":
        out.stream.write(report.csv() + "\n")
    elif out.fmt == "json":
        for c in report.classes:
            out.record("", key=c.key.text(), key_hash=enum.key_hash(c.key), size=c.size,
                       members=[to_graph6(g) for g in c.members])
    else:
        if args.quiet:
            for c in report.nontrivial:
                out.record(" ".join(to_graph6(g) for g in c.members))
        else:
            out.record(report.summary())
    if args.out_dir:
        report.write_class_files(args.out_dir)


def cmd_ds_verify(args, out: _Out) -> None:
    mode = "generalized" if args.generalized else "plain"
    for g in _graphs(args):
        mates = enum.ds_verify(g, mode, jobs=_jobs(args.jobs))
        out.note(f"# {to_graph6(g)}: {len(mates)} mate(s) ({mode})")
        for h in mates:
            out.record(to_graph6(h), graph=to_graph6(g), mate=to_graph6(h), mode=mode)


def _pair(graphs: Sequence[gr.Graph]) -> cons.CospectralPair:
    return cons.CospectralPair(graphs[0], graphs[1], cons.PairKind.R_COSPECTRAL)


def cmd_construct(args, out: _Out) -> None:
    which = args.construction
    if which in ("join-pair", "union-pair"):
        g1, g2, h1, h2 = _exactly(_graphs(args), 4, which)
        build = cons.join_pair if which == "join-pair" else cons.union_pair
        pair = build(_pair((g1, g2)), _pair((h1, h2)))
    elif which == "kn-minus-pair":
        pair = cons.kn_minus_pair(args.n, _pair(_exactly(_graphs(args), 2, which)))
    elif which == "gm-switch":
        (g,) = _exactly(_graphs(args), 1, which)
        try:
            vertices = [int(tok) for tok in args.set.split(",") if tok]
        except ValueError:
            raise GraphArgumentError(f"--set must be comma-separated integers, got {args.set!r}") from None
        h = cons.gm_switch(g, vertices)
        pair = cons.CospectralPair(g, h, cons.PairKind.R_COSPECTRAL)
    elif which == "figure1":
        pair = cons.figure1_family(args.ell)
    else:
        pair = cons.path_mates(args.m)
    out.record(pair.to_line(), left=to_graph6(pair.left), right=to_graph6(pair.right),
               kind=pair.kind.value)
    out.note(f"# isomorphic: {_bool(pair.is_isomorphic())}")


def cmd_multiplicity_survey(args, out: _Out) -> None:
    found = enum.multiplicity_survey(args.n, args.deficiency, jobs=_jobs(args.jobs))
    for g in found:
        out.record(to_graph6(g), graph6=to_graph6(g))
    out.note(f"# {len(found)} graphs with eigenvalue -1 of multiplicity {args.n - args.deficiency}; "
             f"classification confirmed")


# -- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--quiet", action="store_true", help="suppress the human summary")

    graphs_in = argparse.ArgumentParser(add_help=False)
    graphs_in.add_argument("graphs", nargs="*", metavar="GRAPH6")
    graphs_in.add_argument("--file", help="graph6 list file, one graph per line")

    jobs = argparse.ArgumentParser(add_help=False)
    jobs.add_argument("--jobs", type=int, default=None,
                      help="worker processes (default: $SPECTRAL_DS_JOBS or CPU count)")

    parser = argparse.ArgumentParser(prog="spectral-ds", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("named", parents=[common], help="build a named graph")
    p.add_argument("family", choices=sorted(gr._FAMILIES))
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_named)

    p = sub.add_parser("transform", help="complement, canonical form, join, union")
    ops = p.add_subparsers(dest="operation", required=True)
    for name in ("complement", "canonical", "join", "union"):
        ops.add_parser(name, parents=[common, graphs_in]).set_defaults(func=cmd_transform)

    p = sub.add_parser("spectrum", parents=[common, graphs_in], help="characteristic polynomial")
    p.add_argument("--walks", type=int, metavar="K", help="closed walks of length K")
    p.add_argument("--multiplicity", type=int, metavar="L", help="multiplicity of integer eigenvalue L")
    p.add_argument("--above", metavar="Q", help="count eigenvalues > rational Q")
    p.add_argument("--structure", action="store_true", help="complete multipartite + isolated check")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("invariants", parents=[common, graphs_in], help="n, m, t, w4, mult(-1)")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("counts", parents=[common, graphs_in], help="subgraph counts, complement formulas")
    p.add_argument("--brute-force", action="store_true")
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("cospectral", parents=[common, graphs_in], help="compare two spectra")
    p.add_argument("--generalized", action="store_true", help="also compare complements")
    p.set_defaults(func=cmd_cospectral)

    p = sub.add_parser("enumerate", parents=[common], help="isomorph-free generation")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--vertices", type=int, metavar="N")
    group.add_argument("--edges", type=int, metavar="M", help="M edges, no isolated vertices")
    p.add_argument("--edge-count", type=int, metavar="E", help="with --vertices: only E edges")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("survey", parents=[common, jobs], help="cospectral classes of K_n minus H")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--deleted", type=int, required=True)
    p.add_argument("--generalized", action="store_true")
    p.add_argument("--out-dir", help="write a graph6 file per nontrivial class")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("ds-verify", parents=[common, graphs_in, jobs], help="exhaustive cospectral mates")
    p.add_argument("--generalized", action="store_true")
    p.set_defaults(func=cmd_ds_verify)

    p = sub.add_parser("construct", help="cospectral constructions")
    kinds = p.add_subparsers(dest="construction", required=True)
    for name in ("join-pair", "union-pair"):
        kinds.add_parser(name, parents=[common, graphs_in], help="G1 G2 H1 H2")
    q = kinds.add_parser("kn-minus-pair", parents=[common, graphs_in], help="G1 G2")
    q.add_argument("--n", type=int, required=True)
    q = kinds.add_parser("gm-switch", parents=[common, graphs_in], help="G")
    q.add_argument("--set", required=True, help="vertex set, e.g. 0,1,2,3")
    q = kinds.add_parser("figure1", parents=[common])
    q.add_argument("--ell", type=int, default=0, help="pendant path length")
    q = kinds.add_parser("path-mates", parents=[common])
    q.add_argument("--m", type=int, default=2)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("multiplicity-survey", parents=[common, jobs], help="graphs with large mult(-1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--deficiency", type=int, choices=(1, 2, 3), required=True)
    p.set_defaults(func=cmd_multiplicity_survey)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = _Out(args.format, args.quiet)
    try:
        args.func(args, out)
    except SpectralDSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
