"""Claw-free cubic graphs: diamond structure and disconnecting matchings.

A connected bridgeless claw-free cubic graph is K4, a ring of diamonds, or
is obtained from a cubic multigraph by replacing every vertex with a
triangle and every edge with a string of diamonds. The multigraph itself is
never built; triangles, diamonds and the edges joining them are read off the
graph directly."""

from __future__ import annotations

import dataclasses
import itertools
import time
from typing import Any, Dict, FrozenSet, List, Tuple

from . import (
    corpora,
    generators,
    graph6,
    graphs,
    matchings,
    reports,
    separation,
)

K4 = "K4"
RING_OF_DIAMONDS = "ring_of_diamonds"
TRIANGLE_STRING_STRUCTURE = "triangle_string_structure"
BRIDGE = "bridge"
KINDS = [K4, RING_OF_DIAMONDS, TRIANGLE_STRING_STRUCTURE]


class Error(Exception):
    """Module-specific exception."""

    pass


class ClawError(Error):
    """The graph has an induced K1,3; witness is (center, leaves)."""

    def __init__(self, witness: Tuple[int, Tuple[int, int, int]]):
        super().__init__(f"Claw centered at {witness[0]}: {witness[1]}")
        self.witness = witness


class BridgeError(Error):
    """The graph has a bridge; witness is the edge."""

    def __init__(self, witness: graphs.Edge):
        super().__init__(f"Bridge {witness}")
        self.witness = witness


class NotCubicError(Error):
    """Some vertex has degree other than 3; witness is the vertex."""

    def __init__(self, witness: int, degree: int):
        super().__init__(f"Vertex {witness} has degree {degree}")
        self.witness = witness


@dataclasses.dataclass(frozen=True)
class Diamond:
    """An induced K4 - e.

    The central edge joins the two vertices of degree 3 inside the diamond;
    the two ends are its vertices of degree 2.
    """

    central: graphs.Edge
    ends: Tuple[int, int]

    @property
    def vertices(self) -> FrozenSet[int]:
        return frozenset((*self.central, *self.ends))

    @property
    def edges(self) -> FrozenSet[graphs.Edge]:
        a, b = self.central
        return frozenset(
            [self.central]
            + [graphs.normalize_edge(x, y) for x in (a, b) for y in self.ends]
        )


@dataclasses.dataclass(frozen=True)
class DiamondDecomposition:
    """Diamonds, triangles and the connectors between them.

    Args:
        kind (str): one of KINDS.
        diamonds (Tuple[Diamond, ...]).
        triangles (Tuple[Tuple[int, int, int], ...]).
        connectors (FrozenSet[graphs.Edge]): every edge inside no diamond
            and no triangle.
    """

    kind: str
    diamonds: Tuple[Diamond, ...] = ()
    triangles: Tuple[Tuple[int, int, int], ...] = ()
    connectors: FrozenSet[graphs.Edge] = frozenset()

    @property
    def pieces(self) -> List[FrozenSet[int]]:
        return [diamond.vertices for diamond in self.diamonds] + [
            frozenset(triangle) for triangle in self.triangles
        ]

    def edges(self) -> FrozenSet[graphs.Edge]:
        """Reassembles the edge set."""
        edges = set(self.connectors)
        for diamond in self.diamonds:
            edges.update(diamond.edges)
        for triangle in self.triangles:
            edges.update(
                graphs.normalize_edge(x, y)
                for x, y in itertools.combinations(triangle, 2)
            )
        return frozenset(edges)

    def to_json(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "diamonds": [
                {"central": list(diamond.central), "ends": list(diamond.ends)}
                for diamond in self.diamonds
            ],
            "triangles": [list(triangle) for triangle in self.triangles],
            "connectors": [list(edge) for edge in sorted(self.connectors)],
        }


def _require_cubic(graph: graphs.Graph) -> None:
    for vertex, degree in enumerate(graph.degrees):
        if degree != 3:
            raise NotCubicError(vertex, degree)
    if not graph.is_connected:
        raise Error("Graph is not connected")


def _require_clawfree(graph: graphs.Graph) -> None:
    claws = graphs.find_claws(graph)
    if claws:
        raise ClawError(claws[0])


def _find_diamonds(graph: graphs.Graph) -> List[Diamond]:
    diamonds = []
    for a, b in graph.edge_list:
        common = graph.neighbor_sets[a] & graph.neighbor_sets[b]
        if len(common) != 2:
            continue
        c, d = sorted(common)
        if graph.has_edge(c, d):
            continue
        diamonds.append(Diamond((a, b), (c, d)))
    covered = [v for diamond in diamonds for v in diamond.vertices]
    if len(set(covered)) != len(covered):
        raise Error("Diamonds overlap")
    return diamonds


def _find_triangles(
    graph: graphs.Graph, excluded: FrozenSet[int]
) -> List[Tuple[int, int, int]]:
    triangles = []
    covered = set(excluded)
    for vertex in range(graph.n):
        if vertex in covered:
            continue
        found = [
            (x, y)
            for x, y in itertools.combinations(graph.adjacency[vertex], 2)
            if graph.has_edge(x, y)
        ]
        if len(found) != 1 or covered.intersection(found[0]):
            raise Error(f"Vertex {vertex} is not in exactly one triangle")
        triangle = tuple(sorted((vertex, *found[0])))
        covered.update(triangle)
        triangles.append(triangle)
    return triangles


def diamond_decomposition(graph: graphs.Graph) -> DiamondDecomposition:
    """Splits a claw-free cubic bridgeless graph into diamonds and triangles.

    Args:
        graph (graphs.Graph): connected, cubic, bridgeless and claw-free.

    Raises:
        NotCubicError.
        BridgeError.
        ClawError.
        Error: if the structure is inconsistent.

    Returns:
        DiamondDecomposition.
    """
    _require_cubic(graph)
    found = sorted(graphs.bridges(graph))
    if found:
        raise BridgeError(found[0])
    _require_clawfree(graph)
    if graph.n == 4:
        return DiamondDecomposition(K4)
    diamonds = _find_diamonds(graph)
    in_diamonds = frozenset(
        v for diamond in diamonds for v in diamond.vertices
    )
    triangles = _find_triangles(graph, in_diamonds)
    kind = TRIANGLE_STRING_STRUCTURE if triangles else RING_OF_DIAMONDS
    decomposition = DiamondDecomposition(
        kind, tuple(diamonds), tuple(triangles)
    )
    inside = {
        edge
        for piece in decomposition.pieces
        for edge in graph.edges
        if edge[0] in piece and edge[1] in piece
    }
    decomposition = dataclasses.replace(
        decomposition, connectors=graph.edges - inside
    )
    if decomposition.edges() != graph.edges:
        raise Error("Decomposition does not reassemble the graph")
    return decomposition


def disconnecting_pm_clawfree(graph: graphs.Graph) -> matchings.Matching:
    """Builds a perfect matching whose removal disconnects the graph.

    With a bridge, any perfect matching through it works. Otherwise the
    connectors and the central edge of every diamond form a perfect
    matching; removing it leaves each triangle whole and turns each diamond
    into a 4-cycle.

    Args:
        graph (graphs.Graph): connected, cubic, claw-free, not K4.

    Raises:
        NotCubicError.
        ClawError.
        Error: on K4, or if the result fails validation.

    Returns:
        matchings.Matching.
    """
    _require_cubic(graph)
    _require_clawfree(graph)
    if graph.n == 4:
        raise Error("K4 has no disconnecting perfect matching")
    if graphs.bridges(graph):
        return separation.bridge_disconnecting_pm(graph)
    decomposition = diamond_decomposition(graph)
    matching = matchings.Matching(
        decomposition.connectors
        | {diamond.central for diamond in decomposition.diamonds}
    )
    matching.validate(graph)
    if not matching.is_perfect(graph):
        raise Error("Matching is not perfect")
    if not separation.is_separating(graph, matching):
        raise Error("Matching does not disconnect the graph")
    return matching


def structure_kind(graph: graphs.Graph) -> str:
    """The decomposition kind, or BRIDGE for a bridged graph."""
    if graphs.bridges(graph):
        return BRIDGE
    return diamond_decomposition(graph).kind


def clawfree_check(graph: graphs.Graph) -> reports.CheckItem:
    """Checks one connected claw-free cubic graph.

    K4 is skipped. Otherwise the constructed matching must be a perfect
    separating matching, and the solver must agree that mms is n/2.

    Args:
        graph (graphs.Graph).

    Returns:
        reports.CheckItem.
    """
    if graph.n == 4:
        return reports.CheckItem.skipped(K4)
    try:
        kind = structure_kind(graph)
        matching = disconnecting_pm_clawfree(graph)
    except Error as error:
        return reports.CheckItem.single(
            graph,
            False,
            "disconnecting perfect matching",
            str(error),
            type(error).__name__,
        )
    value, _ = separation.mms_exact(graph)
    return reports.CheckItem.single(
        graph,
        ok=value == graph.n // 2 == matching.size,
        expected=f"mms={graph.n // 2}",
        got=f"mms={value}",
        count=kind,
    )


def verify_clawfree_theorem(max_n: int) -> reports.VerificationReport:
    """Checks every connected claw-free cubic graph up to max_n.

    Args:
        max_n (int): at most corpora.MAX_CUBIC_N.

    Returns:
        reports.VerificationReport: with counts per structural kind.
    """
    start = time.perf_counter()
    item = sum(
        (
            clawfree_check(graph)
            for n in corpora.scan_sizes(corpora.CLAWFREE_CUBIC, max_n)
            for graph in generators.enumerate_graphs(
                corpora.EnumerationSpec(n, corpora.CLAWFREE_CUBIC)
            )
        ),
        reports.CheckItem(),
    )
    return reports.VerificationReport.from_item(
        "thm6",
        {"graph_class": corpora.CLAWFREE_CUBIC, "max_n": max_n},
        item,
        start,
    )


def certificate_json(graph: graphs.Graph) -> Dict[str, Any]:
    """The clawfree-pm output for one graph."""
    matching = disconnecting_pm_clawfree(graph)
    return {
        "graph6": graph6.emit_graph6(graph),
        "kind": structure_kind(graph),
        "certificate": matching.to_json(),
    }
