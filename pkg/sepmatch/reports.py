"""Verification reports."""

from __future__ import annotations

import collections
import dataclasses
import json
import time
from typing import Any, Counter, Dict, List, Optional, Union

from . import graph6, graphs

ARTIFACT_VERSION = "0.1.0"

VERIFIED = "verified"
FAILED = "failed"


class Error(Exception):
    """Module-specific exception."""

    pass


def describe(graph: Union[graphs.Graph, graphs.Multigraph]) -> str:
    """graph6 for graphs, the text format for multigraphs."""
    if isinstance(graph, graphs.Multigraph):
        return graph.to_text()
    return graph6.emit_graph6(graph)


@dataclasses.dataclass(frozen=True)
class Failure:
    """A graph on which a check disagreed with its expected outcome."""

    graph6: str
    expected: str
    got: str

    def to_json(self) -> Dict[str, str]:
        return dataclasses.asdict(self)


@dataclasses.dataclass
class CheckItem:
    """Running totals for a scan, summable across workers.

    Args:
        checked (int): graphs examined.
        failures (List[Failure]).
        counts (Counter[str]): free-form tallies, e.g. per structural kind.
        records (List[Dict[str, Any]]): optional per-graph rows.
    """

    checked: int = 0
    failures: List[Failure] = dataclasses.field(default_factory=list)
    counts: Counter[str] = dataclasses.field(
        default_factory=collections.Counter
    )
    records: List[Dict[str, Any]] = dataclasses.field(default_factory=list)

    @classmethod
    def single(
        cls,
        graph: Union[graphs.Graph, graphs.Multigraph],
        ok: bool,
        expected: str = "",
        got: str = "",
        count: Optional[str] = None,
        record: Optional[Dict[str, Any]] = None,
    ) -> CheckItem:
        """The item for one checked graph.

        Args:
            graph (Union[graphs.Graph, graphs.Multigraph]).
            ok (bool): whether the check passed.
            expected (str, optional): recorded on failure.
            got (str, optional): recorded on failure.
            count (str, optional): a tally to bump.
            record (Dict[str, Any], optional): a row for the report.

        Returns:
            CheckItem.
        """
        item = cls(checked=1)
        if not ok:
            item.failures.append(Failure(describe(graph), expected, got))
        if count is not None:
            item.counts[count] += 1
        if record is not None:
            item.records.append(record)
        return item

    @classmethod
    def skipped(cls, count: Optional[str] = None) -> CheckItem:
        item = cls()
        if count is not None:
            item.counts[count] += 1
        return item

    @property
    def ok(self) -> bool:
        return not self.failures

    def __add__(self, other: CheckItem) -> CheckItem:
        """Adds two CheckItems by summing along all attributes.

        Args:
            other (CheckItem).

        Returns:
            CheckItem.
        """
        return CheckItem(
            self.checked + other.checked,
            self.failures + other.failures,
            self.counts + other.counts,
            self.records + other.records,
        )

    def __radd__(self, start_val: int) -> CheckItem:
        """Reverse add. Expects a zero-valued integer.

        Args:
            start_val (int): an initial value for calling the first add in an
                iterable. Expected to be 0.

        Returns:
            CheckItem.
        """
        if start_val != 0:
            raise Error(f"Cannot add {start_val!r} to a CheckItem")
        return CheckItem(
            self.checked,
            list(self.failures),
            collections.Counter(self.counts),
            list(self.records),
        )


@dataclasses.dataclass
class VerificationReport:
    """The outcome of one theorem scan.

    Failures are sorted so that a report does not depend on the order in
    which workers finished.
    """

    theorem_id: str
    class_scanned: Dict[str, Any]
    graphs_checked: int
    failures: List[Failure]
    runtime_ms: int
    artifact_version: str = ARTIFACT_VERSION
    counts: Dict[str, int] = dataclasses.field(default_factory=dict)
    records: List[Dict[str, Any]] = dataclasses.field(default_factory=list)

    @classmethod
    def from_item(
        cls,
        theorem_id: str,
        class_scanned: Dict[str, Any],
        item: CheckItem,
        start: float,
    ) -> VerificationReport:
        """Closes a scan.

        Args:
            theorem_id (str).
            class_scanned (Dict[str, Any]): the scanned class, as JSON.
            item (CheckItem): the summed totals.
            start (float): time.perf_counter() at the start of the scan.

        Returns:
            VerificationReport.
        """
        return cls(
            theorem_id=theorem_id,
            class_scanned=class_scanned,
            graphs_checked=item.checked,
            failures=sorted(
                item.failures,
                key=lambda failure: (len(failure.graph6), failure.graph6),
            ),
            runtime_ms=round((time.perf_counter() - start) * 1000),
            counts=dict(sorted(item.counts.items())),
            records=sorted(
                item.records,
                key=lambda record: (
                    len(record["graph6"]),
                    record["graph6"],
                ),
            ),
        )

    @property
    def status(self) -> str:
        return FAILED if self.failures else VERIFIED

    def to_json(self) -> Dict[str, Any]:
        document = {
            "theorem_id": self.theorem_id,
            "status": self.status,
            "class_scanned": self.class_scanned,
            "graphs_checked": self.graphs_checked,
            "failures": [failure.to_json() for failure in self.failures],
            "runtime_ms": self.runtime_ms,
            "artifact_version": self.artifact_version,
            "counts": self.counts,
        }
        if self.records:
            document["records"] = self.records
        return document

    def to_json_line(self) -> str:
        return json.dumps(self.to_json())

    def write(self, filename: str) -> None:
        with open(filename, "w", encoding="utf-8") as sink:
            json.dump(self.to_json(), sink, indent=2)
            sink.write("\n")
