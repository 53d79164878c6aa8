"""Claw-free cubic graphs other than K4 have a disconnecting perfect
matching."""

from .. import clawfree, corpora, graphs, reports
from . import base


class ClawfreeTheorem(base.BaseTheorem):
    theorem_id = "thm6"
    graph_class = corpora.CLAWFREE_CUBIC

    def check(self, graph: graphs.Graph) -> reports.CheckItem:
        return clawfree.clawfree_check(graph)
