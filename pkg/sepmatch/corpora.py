"""Corpus configuration and graph6 corpus files."""

import argparse
import dataclasses
import inspect
from typing import Iterable, Iterator, List

from . import graph6, graphs, util

CUBIC = "cubic"
SUBCUBIC = "subcubic"
BICUBIC = "bicubic"
CLAWFREE_CUBIC = "clawfree_cubic"
GRAPH_CLASSES = [CUBIC, SUBCUBIC, BICUBIC, CLAWFREE_CUBIC]
CUBIC_CLASSES = [CUBIC, BICUBIC, CLAWFREE_CUBIC]

MAX_CUBIC_N = 14
MAX_SUBCUBIC_N = 10


class Error(Exception):
    """Module-specific exception."""

    pass


@dataclasses.dataclass
class EnumerationSpec:
    """Configuration for an exhaustive corpus.

    Args:
        n (int): vertex count.
        graph_class (str, optional): one of GRAPH_CLASSES.
        connected_only (bool, optional): whether to skip disconnected
            graphs.
    """

    n: int
    graph_class: str = CUBIC
    connected_only: bool = True

    def __post_init__(self) -> None:
        # This is automatically called after initialization.
        if self.graph_class not in GRAPH_CLASSES:
            raise Error(f"Unknown graph class: {self.graph_class}")
        if self.n < 1:
            raise Error(f"Invalid vertex count: {self.n}")
        if self.is_cubic_class:
            if self.n % 2:
                raise Error(f"Cubic graphs have even order, not {self.n}")
            if self.n > MAX_CUBIC_N:
                raise Error(
                    f"Cubic corpora stop at n={MAX_CUBIC_N}, not {self.n}"
                )
        elif self.n > MAX_SUBCUBIC_N:
            raise Error(
                f"Subcubic corpora stop at n={MAX_SUBCUBIC_N}, not {self.n}"
            )

    @property
    def is_cubic_class(self) -> bool:
        return self.graph_class in CUBIC_CLASSES

    @classmethod
    def from_argparse_args(cls, args, **kwargs):
        """Creates an instance from CLI arguments."""
        params = vars(args)
        valid_kwargs = inspect.signature(cls.__init__).parameters
        spec_kwargs = {
            name: params[name] for name in valid_kwargs if name in params
        }
        spec_kwargs.update(**kwargs)
        return cls(**spec_kwargs)

    def to_json(self) -> dict:
        return dataclasses.asdict(self)

    @staticmethod
    def add_argparse_args(parser: argparse.ArgumentParser) -> None:
        """Adds corpus options to the argument parser.

        Args:
            parser (argparse.ArgumentParser).
        """
        parser.add_argument(
            "--graph_class",
            "--class",
            dest="graph_class",
            choices=GRAPH_CLASSES,
            default=CUBIC,
            help="Class of graphs to enumerate. Default: %(default)s.",
        )
        parser.add_argument(
            "--connected_only",
            action="store_true",
            default=True,
            help="Enumerate connected graphs only. Default: enabled.",
        )
        parser.add_argument(
            "--no_connected_only",
            action="store_false",
            dest="connected_only",
        )


def scan_sizes(graph_class: str, max_n: int, min_n: int = 1) -> List[int]:
    """Lists the orders a scan up to max_n visits.

    Raises:
        Error: if max_n is beyond the class bound.
    """
    bound = MAX_SUBCUBIC_N if graph_class == SUBCUBIC else MAX_CUBIC_N
    if max_n > bound:
        raise Error(f"{graph_class} scans stop at n={bound}, not {max_n}")
    if graph_class in CUBIC_CLASSES:
        return [n for n in range(max(min_n, 4), max_n + 1) if n % 2 == 0]
    return list(range(max(min_n, 1), max_n + 1))


def read_corpus(filename: str) -> Iterator[graphs.Graph]:
    """Yields graphs from a graph6 file."""
    with open(filename, "r") as source:
        yield from graph6.read_graph6(source)


def write_corpus(filename: str, corpus: Iterable[graphs.Graph]) -> int:
    """Writes graphs to a graph6 file, one per line.

    Returns:
        int: the number of graphs written.
    """
    count = 0
    with open(filename, "w", encoding="utf-8") as sink:
        for graph in corpus:
            graph6.write_graph6(sink, graph)
            count += 1
    util.log_info(f"Wrote {count} graphs to {filename}")
    return count
