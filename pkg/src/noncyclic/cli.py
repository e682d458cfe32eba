"""Command-line entry point: ``noncyclic <subcommand> ...``.

Exit status: 0 success or PASS, 1 FAIL, 2 usage or input error, 3 INCONCLUSIVE.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog
from .classify import FAIL, INCONCLUSIVE, PASS, ClassifyLimits, records_from_json, records_to_json, sweep, verify_paper
from .genus import (certificate_from_json, certificate_to_json, default_budget, nonorientable_genus,
                    orientable_genus, verify_certificate)
from .graphs import build_noncyclic_graph, export_dot, graph_from_json, graph_to_json
from .groups import (count_cyclic_subgroups_of_order, count_elements_of_order, cyclicizer,
                     element_order_spectrum, is_cyclic_group)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3
_STATUS_EXIT = {PASS: EXIT_OK, FAIL: EXIT_FAIL, INCONCLUSIVE: EXIT_INCONCLUSIVE}


class InputError(Exception):
    """Bad target, unreadable file or malformed document."""


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def load_group(target: str):
    """A catalog name, or a path to a Cayley-table document."""
    if os.path.isfile(target):
        try:
            return catalog.ingest_cayley_table(_read_json(target))
        except ValueError as exc:
            raise InputError(f"{target}: {exc}") from None
    try:
        return catalog.get_group(target)
    except KeyError:
        raise InputError(f"unknown group {target!r} (see --list-groups)") from None


def load_graph(target: str):
    """A catalog name (its non-cyclic graph), a graph document or a Cayley table."""
    if os.path.isfile(target):
        doc = _read_json(target)
        if isinstance(doc, dict) and "edges" in doc:
            try:
                return graph_from_json(doc)
            except (ValueError, IndexError) as exc:
                raise InputError(f"{target}: {exc}") from None
    G = load_group(target)
    if is_cyclic_group(G):
        raise InputError(f"{G.name} is cyclic; its non-cyclic graph is empty")
    return build_noncyclic_graph(G)


def _budget(value):
    return default_budget() if value is None else value


def cmd_group_show(args, out):
    G = load_group(args.target)
    cyc = cyclicizer(G)
    spectrum = sorted(element_order_spectrum(G))
    out.write(f"group {G.name}: order {G.order}, {'abelian' if G.is_abelian() else 'non-abelian'}\n")
    out.write(f"element orders: {spectrum}\n")
    census = ", ".join(f"{k}:{count_elements_of_order(G, k)}" for k in spectrum)
    out.write(f"elements of each order: {census}\n")
    cyclic = ", ".join(f"{k}:{count_cyclic_subgroups_of_order(G, k)}" for k in spectrum)
    out.write(f"cyclic subgroups of each order: {cyclic}\n")
    names = sorted(G.element_names[g] for g in cyc)
    out.write(f"Cyc = {{{', '.join(names)}}}\n")
    if is_cyclic_group(G):
        out.write(f"cyclic group, |Cyc| = {len(cyc)}\n")
    else:
        out.write(f"{G.order - len(cyc)} vertices in Γ, |Cyc| = {len(cyc)}\n")
    return EXIT_OK


def cmd_graph_build(args, out):
    graph = load_graph(args.target)
    if args.dot:
        out.write(export_dot(graph, os.path.basename(args.target)))
    elif args.json:
        out.write(graph_to_json(graph))
    else:
        out.write(f"{graph.vertex_count} vertices, {graph.edge_count} edges\n")
        for u, v in graph.edges():
            out.write(f"{graph.labels[u]} -- {graph.labels[v]}\n")
    return EXIT_OK


def cmd_genus(args, out):
    graph = load_graph(args.target)
    orientable = not args.nonorientable
    if not graph.is_connected():
        raise InputError("graph is disconnected")
    search = orientable_genus if orientable else nonorientable_genus
    res = search(graph, max_k=args.max_k, budget=_budget(args.budget), workers=args.workers)
    kind = "orientable genus" if orientable else "nonorientable genus"
    if res.status == "exact":
        out.write(f"{kind} = {res.value}\n")
    else:
        why = "timeout" if res.status == "timeout" else f"no embedding up to {args.max_k}"
        out.write(f"{kind} >= {res.lower_bound} ({res.bound_provenance}; {why})\n")
    for k, outcome in res.levels:
        out.write(f"  level {k}: {outcome}\n")
    if res.certificate is not None and not args.no_cert:
        stem = os.path.splitext(os.path.basename(args.target))[0]
        path = args.cert_out or f"{stem}.{'orientable' if orientable else 'nonorientable'}.cert.json"
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(certificate_to_json(res.certificate, graph))
        out.write(f"certificate: {path}\n")
    if res.status == "timeout":
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_verify_cert(args, out):
    graph = load_graph(args.graph)
    try:
        with open(args.cert, encoding="utf-8") as fh:
            cert = certificate_from_json(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {args.cert}: {exc.strerror}") from None
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"malformed certificate {args.cert}: {exc}") from None
    ok, msg = verify_certificate(graph, cert, explain=True)
    kind = "orientable" if cert.orientable else "nonorientable"
    if ok:
        out.write(f"VALID: {kind} genus {cert.claimed_genus}, {cert.face_count} faces\n")
        return EXIT_OK
    out.write(f"INVALID: {msg}\n")
    return EXIT_FAIL


def cmd_classify(args, out):
    limits = ClassifyLimits(budget=_budget(args.budget), workers=args.workers)
    records = sweep(args.max_order, limits)
    text = records_to_json(records, include_timings=args.timings)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    for r in records:
        out.write(f"{r.group_name:12s} V={r.vertex_count:<3d} E={r.edge_count:<4d} "
                  f"genus {r.orientable_genus.verdict():14s} nonorientable {r.nonorientable_genus.verdict()}\n")
    if args.out:
        out.write(f"report: {args.out}\n")
    return EXIT_OK


def cmd_verify_paper(args, out):
    try:
        with open(args.report, encoding="utf-8") as fh:
            records = records_from_json(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {args.report}: {exc.strerror}") from None
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"malformed report {args.report}: {exc}") from None
    report = verify_paper(records)
    out.write(report.render())
    return _STATUS_EXIT[report.status]


def _nonnegative_float(text):
    value = float(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="noncyclic", description="Non-cyclic graphs of finite groups and their genus.")
    p.add_argument("--list-groups", action="store_true", help="list catalog group names and exit")
    sub = p.add_subparsers(dest="command")

    group = sub.add_parser("group", help="group information")
    gsub = group.add_subparsers(dest="action", required=True)
    show = gsub.add_parser("show", help="order, element orders, Cyc and counts")
    show.add_argument("target", help="catalog name or Cayley-table file")
    show.set_defaults(func=cmd_group_show)

    graph = sub.add_parser("graph", help="non-cyclic graph")
    grsub = graph.add_subparsers(dest="action", required=True)
    build = grsub.add_parser("build", help="build and export the graph")
    build.add_argument("target")
    fmt = build.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")
    build.set_defaults(func=cmd_graph_build)

    genus = sub.add_parser("genus", help="exact genus by search")
    genus.add_argument("target", help="catalog name, Cayley-table file or graph file")
    genus.add_argument("--nonorientable", action="store_true")
    genus.add_argument("--max-k", type=int, default=10)
    genus.add_argument("--budget", type=_nonnegative_float, default=None,
                       help="seconds (default: $NONCYC_BUDGET_SECS or 60)")
    genus.add_argument("--workers", type=_positive_int, default=1)
    genus.add_argument("--cert-out", default=None, help="certificate path")
    genus.add_argument("--no-cert", action="store_true", help="do not write a certificate")
    genus.set_defaults(func=cmd_genus)

    vc = sub.add_parser("verify-cert", help="check a certificate against a graph")
    vc.add_argument("graph", help="catalog name, Cayley-table file or graph file")
    vc.add_argument("cert")
    vc.set_defaults(func=cmd_verify_cert)

    cl = sub.add_parser("classify", help="classify every non-cyclic catalog group")
    cl.add_argument("--max-order", type=_positive_int, default=16)
    cl.add_argument("--out", default=None)
    cl.add_argument("--budget", type=_nonnegative_float, default=None)
    cl.add_argument("--workers", type=_positive_int, default=1)
    cl.add_argument("--timings", action="store_true", help="include timings in the report")
    cl.set_defaults(func=cmd_classify)

    vp = sub.add_parser("verify-paper", help="check the genus-one classification against a report")
    vp.add_argument("--report", required=True)
    vp.set_defaults(func=cmd_verify_paper)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.list_groups:
        for name in catalog.group_names():
            out.write(name + "\n")
        return EXIT_OK
    if args.command is None:
        parser.print_usage(err)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except catalog.CatalogError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
