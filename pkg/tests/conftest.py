"""Reusable fixtures."""

import pytest

from sepmatch import graph6, named


@pytest.fixture()
def prism():
    return named.prism()


@pytest.fixture()
def heawood():
    return named.heawood()


@pytest.fixture()
def make_cubic_corpus_file(tmp_path):
    path = tmp_path / "corpus.g6"
    with open(path, "w") as sink:
        for graph in (named.k4(), named.prism(), named.k33()):
            graph6.write_graph6(sink, graph)
    return path
