"""Shared fixtures: small graphs and the (session-scoped) block atlas."""

from __future__ import annotations

import pytest

from sdrd.atlas import build_atlas
from sdrd.graphs import parse_edge_list
from sdrd.reproduce import K4_EDGES, K33_EDGES, cubic_corpus_small


@pytest.fixture(scope="session")
def k4():
    return parse_edge_list(K4_EDGES)


@pytest.fixture(scope="session")
def k33():
    return parse_edge_list(K33_EDGES)


@pytest.fixture(scope="session")
def small_cubic_corpus():
    return cubic_corpus_small()


@pytest.fixture(scope="session")
def atlas():
    return build_atlas()
