"""The exact solver against the brute-force oracle."""

from typing import Iterator

from .. import corpora, generators, graphs, reports, separation
from . import base

MAX_SUBCUBIC_N = 8
SAMPLES = 500


class OracleEquivalence(base.BaseTheorem):
    """mms_exact agrees with mms_oracle.

    Scans connected subcubic graphs up to MAX_SUBCUBIC_N vertices, then
    SAMPLES seeded random cubic graphs of even order from 4 to max_n.
    """

    theorem_id = "oracle"
    graph_class = corpora.SUBCUBIC
    min_n = 4
    default_max_n = 12
    max_max_n = 12

    def corpus(self, max_n: int) -> Iterator[graphs.Graph]:
        self.validate_max_n(max_n)
        for n in corpora.scan_sizes(
            corpora.SUBCUBIC, min(max_n, MAX_SUBCUBIC_N), 2
        ):
            yield from generators.connected_subcubic(n)
        orders = list(range(4, max_n + 1, 2))
        for sample in range(SAMPLES):
            yield generators.random_cubic(
                orders[sample % len(orders)], self.seed + sample
            )

    def check(self, graph: graphs.Graph) -> reports.CheckItem:
        value, _ = separation.mms_exact(graph)
        oracle = separation.mms_oracle(graph)
        return reports.CheckItem.single(
            graph,
            ok=value == oracle,
            expected=f"mms={oracle}",
            got=f"mms={value}",
            count=f"n={graph.n}",
        )

    def class_scanned(self, max_n: int):
        return {
            "graph_class": "subcubic+random_cubic",
            "max_n": max_n,
            "max_subcubic_n": min(max_n, MAX_SUBCUBIC_N),
            "samples": SAMPLES,
            "seed": self.seed,
        }
