"""Computes separating matchings and related certificates for graphs.

Graphs are read as graph6 strings from the command line or, failing that,
one per line from standard input. Every answer is one JSON document per
line on standard output."""

import argparse
import json
import sys
from typing import Any, Callable, Dict, Iterator, List

from . import (
    clawfree,
    corpora,
    family,
    generators,
    graph6,
    graphs,
    matchings,
    separation,
    util,
)

EXIT_SUCCESS = 0
EXIT_PARSE = 1
EXIT_PRECONDITION = 2

JSON = "json"
G6 = "g6"

# Precondition errors raised by the library.
_ERRORS = (
    clawfree.Error,
    corpora.Error,
    family.Error,
    generators.Error,
    graphs.Error,
    matchings.Error,
    separation.Error,
)


def _emit(document: Dict[str, Any]) -> None:
    print(json.dumps(document))


def _inputs(args: argparse.Namespace) -> Iterator[str]:
    if args.graph6:
        yield from args.graph6
        return
    for line in sys.stdin:
        line = line.strip()
        if line:
            yield line


def mms(graph: graphs.Graph) -> Dict[str, Any]:
    value, certificate = separation.mms_exact(graph)
    return {
        "mms": value,
        "certificate": certificate.to_json() if certificate else None,
    }


def decomposable(graph: graphs.Graph) -> Dict[str, Any]:
    found, certificate = separation.is_decomposable(graph)
    return {
        "decomposable": found,
        "certificate": certificate.to_json() if certificate else None,
    }


def certify(graph: graphs.Graph) -> Dict[str, Any]:
    """Certifies mms with the most specific construction that applies.

    Bridged cubic graphs get a matching through a bridge, claw-free cubic
    graphs a disconnecting perfect matching and members of F an almost
    2-factor; anything else falls back to the solver. The solver value is
    always reported alongside.

    Args:
        graph (graphs.Graph).

    Returns:
        Dict[str, Any].
    """
    value, certificate = separation.mms_exact(graph)
    document: Dict[str, Any] = {"mms": value}
    profile = graphs.classify_degrees(graph)
    if profile.is_cubic and graphs.bridges(graph):
        bridge = min(graphs.bridges(graph))
        built = separation.bridge_separating_matching(graph, bridge)
        document.update(method="bridge", certificate=built.to_json())
    elif profile.is_cubic and graph.n > 4 and not graphs.find_claws(graph):
        matching = clawfree.disconnecting_pm_clawfree(graph)
        document.update(method="clawfree", certificate=matching.to_json())
    elif profile.is_bicubic and (member := family.is_in_family_f(graph)):
        built = family.almost_two_factor(member)
        document.update(method="family_f", certificate=built.to_json())
    else:
        document.update(
            method="solver",
            certificate=certificate.to_json() if certificate else None,
        )
    return document


def contract(graph: graphs.Graph) -> Dict[str, Any]:
    contraction = graphs.contract_subdivided_paths(graph)
    return {
        "multigraph": contraction.contracted.to_text(),
        "edge_origin": [list(origin) for origin in contraction.edge_origin],
    }


def clawfree_pm(graph: graphs.Graph) -> Dict[str, Any]:
    return clawfree.certificate_json(graph)


def family_check(graph: graphs.Graph) -> Dict[str, Any]:
    member = family.is_in_family_f(graph)
    if member is None:
        return {"member": False}
    document = member.to_json()
    document["member"] = True
    document["almost_two_factor"] = family.almost_two_factor(member).to_json()
    return document


_PER_GRAPH: Dict[str, Callable[[graphs.Graph], Dict[str, Any]]] = {
    "mms": mms,
    "decomposable": decomposable,
    "certify": certify,
    "contract": contract,
    "clawfree-pm": clawfree_pm,
}


def _run_per_graph(
    command: Callable[[graphs.Graph], Dict[str, Any]], inputs: Iterator[str]
) -> int:
    for text in inputs:
        try:
            graph = graph6.parse_graph6(text)
        except graph6.ParseError as error:
            _emit(
                {
                    "error": "parse",
                    "reason": error.message,
                    "offset": error.offset,
                }
            )
            return EXIT_PARSE
        try:
            _emit(command(graph))
        except _ERRORS as error:
            _emit({"error": type(error).__name__, "reason": str(error)})
            return EXIT_PRECONDITION
    return EXIT_SUCCESS


def _write_graphs(
    corpus: List[graphs.Graph], out: str, output_format: str
) -> None:
    if out and output_format == G6:
        corpora.write_corpus(out, corpus)
        return
    sink = open(out, "w", encoding="utf-8") if out else sys.stdout
    try:
        for graph in corpus:
            if output_format == G6:
                graph6.write_graph6(sink, graph)
            else:
                print(
                    json.dumps(
                        {"graph6": graph6.emit_graph6(graph), "n": graph.n}
                    ),
                    file=sink,
                )
    finally:
        if out:
            sink.close()


def _generate(args: argparse.Namespace) -> int:
    spec = corpora.EnumerationSpec.from_argparse_args(args)
    corpus = list(generators.enumerate_graphs(spec))
    _write_graphs(corpus, args.out, args.format)
    return EXIT_SUCCESS


def _family_f(args: argparse.Namespace) -> int:
    if args.action == "check":
        return _run_per_graph(family_check, _inputs(args))
    members = family.generate_family_f(args.max_n)
    if args.format == G6:
        _write_graphs([member.graph for member in members], args.out, G6)
        return EXIT_SUCCESS
    sink = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        for member in members:
            print(json.dumps(member.to_json()), file=sink)
    finally:
        if args.out:
            sink.close()
    return EXIT_SUCCESS


def _funk_scan(args: argparse.Namespace) -> int:
    report = family.funk_scan(args.max_n)
    if args.out:
        report.write(args.out)
    else:
        print(report.to_json_line())
    return EXIT_SUCCESS


def _add_inputs(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "graph6",
        nargs="*",
        help="Graphs in graph6. Default: one per line on standard input.",
    )


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", help="Path to output file")
    parser.add_argument(
        "--format",
        choices=[G6, JSON],
        default=G6,
        help="Output format for graphs. Default: %(default)s.",
    )


def get_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=__doc__)
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name in _PER_GRAPH:
        _add_inputs(subparsers.add_parser(name))
    generate = subparsers.add_parser("generate")
    generate.add_argument(
        "--n", type=int, required=True, help="Number of vertices"
    )
    corpora.EnumerationSpec.add_argparse_args(generate)
    _add_output(generate)
    family_f = subparsers.add_parser("family-f")
    family_f.add_argument("action", choices=["generate", "check"])
    family_f.add_argument(
        "--max_n",
        "--max-n",
        dest="max_n",
        type=int,
        default=14,
        help="Largest member order to generate. Default: %(default)s.",
    )
    _add_inputs(family_f)
    _add_output(family_f)
    funk_scan = subparsers.add_parser("funk-scan")
    funk_scan.add_argument(
        "--max_n",
        "--max-n",
        dest="max_n",
        type=int,
        default=corpora.MAX_CUBIC_N,
        help="Largest order to scan. Default: %(default)s.",
    )
    funk_scan.add_argument(
        "--out", "--report", dest="out", help="Path to output JSON report"
    )
    return parser


def run_single(argv: List[str]) -> int:
    """Runs one subcommand.

    Args:
        argv (List[str]): arguments after the program name.

    Returns:
        int: the exit code.
    """
    args = get_parser().parse_args(argv)
    util.log_arguments(args)
    try:
        if args.command in _PER_GRAPH:
            return _run_per_graph(_PER_GRAPH[args.command], _inputs(args))
        if args.command == "generate":
            return _generate(args)
        if args.command == "family-f":
            return _family_f(args)
        return _funk_scan(args)
    except _ERRORS as error:
        _emit({"error": type(error).__name__, "reason": str(error)})
        return EXIT_PRECONDITION


def main() -> None:
    """Single-graph commands."""
    sys.exit(run_single(sys.argv[1:]))


if __name__ == "__main__":
    main()
