"""Base theorem scan."""

from typing import Any, Dict, Iterator

from .. import corpora, generators, graphs, reports


class Error(Exception):
    """Module-specific exception."""

    pass


class BaseTheorem:
    """A claim checked graph by graph over a corpus.

    Subclasses set the class attributes and implement check; most also
    narrow the corpus. Instances are pickled out to workers, so they hold
    nothing but configuration.

    Args:
        seed (int): for theorems that sample graphs.
    """

    theorem_id: str
    graph_class: str = corpora.CUBIC
    min_n: int = 1
    default_max_n: int = corpora.MAX_CUBIC_N
    max_max_n: int = corpora.MAX_CUBIC_N

    def __init__(self, seed: int = 0):
        self.seed = seed

    def validate_max_n(self, max_n: int) -> None:
        if not self.min_n <= max_n <= self.max_max_n:
            raise Error(
                f"{self.theorem_id} scans up to n={self.max_max_n}, "
                f"not {max_n}"
            )

    def corpus(self, max_n: int) -> Iterator[Any]:
        """Yields the items to check.

        By default, every connected graph of the theorem's class.

        Args:
            max_n (int).

        Yields:
            Any: handed to check one at a time.
        """
        self.validate_max_n(max_n)
        for n in corpora.scan_sizes(self.graph_class, max_n, self.min_n):
            yield from generators.enumerate_graphs(
                corpora.EnumerationSpec(n, self.graph_class)
            )

    def check(self, item: Any) -> reports.CheckItem:
        raise NotImplementedError

    def class_scanned(self, max_n: int) -> Dict[str, Any]:
        return {
            "graph_class": self.graph_class,
            "max_n": max_n,
            "connected_only": True,
        }


def graph_of(item: Any) -> graphs.Graph:
    return item if isinstance(item, graphs.Graph) else item.graph
