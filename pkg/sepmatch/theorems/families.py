"""Bicubic graphs: the family F and 2-factor Hamiltonicity."""

from typing import Any, Dict, Iterator

from .. import corpora, family, graphs, reports, separation
from . import base


class FamilyTheorem(base.BaseTheorem):
    """Members of F have mms = n/2 - 1, except for four graphs.

    Members other than the four also get an almost 2-factor built along
    their trace, which must validate.
    """

    theorem_id = "thm5"
    graph_class = "family_f"
    default_max_n = 22
    max_max_n = 22

    def corpus(self, max_n: int) -> Iterator[family.FamilyFMember]:
        self.validate_max_n(max_n)
        yield from family.generate_family_f(max_n)

    def check(self, member: family.FamilyFMember) -> reports.CheckItem:
        graph = member.graph
        value, _ = separation.mms_exact(graph)
        index = family.recognize_exceptional_f(graph)
        if index is not None:
            low, high = family.EXCEPTIONAL_BOUNDS[index]
            return reports.CheckItem.single(
                graph,
                ok=low <= value <= high,
                expected=f"{low}<=mms<={high}",
                got=f"mms={value}",
                count=f"F{index}",
                record={
                    "graph6": reports.describe(graph),
                    "n": graph.n,
                    "exceptional": f"F{index}",
                    "mms": value,
                },
            )
        target = graph.n // 2 - 1
        try:
            certificate = family.almost_two_factor(member)
            constructed = not isinstance(certificate, family.ExceptionalF)
        except family.InvariantError as error:
            return reports.CheckItem.single(
                graph, False, "almost 2-factor", str(error), "invariant"
            )
        return reports.CheckItem.single(
            graph,
            ok=value == target and constructed,
            expected=f"mms={target}",
            got=f"mms={value}, almost_two_factor={constructed}",
            count="k33_chain" if member.is_k33_chain else "heawood",
        )

    def class_scanned(self, max_n: int) -> Dict[str, Any]:
        return {"graph_class": self.graph_class, "max_n": max_n}


class FunkConjecture(base.BaseTheorem):
    """Bicubic graphs are 2-factor Hamiltonian iff they lie in F."""

    theorem_id = "conj-funk"
    graph_class = corpora.BICUBIC

    def check(self, graph: graphs.Graph) -> reports.CheckItem:
        return family.funk_check(graph)
