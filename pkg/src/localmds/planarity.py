"""Planarity decision and pluggable graph-class predicates.

The fast tester applies the left-right planarity criterion over a DFS
orientation (networkx's implementation); it answers the boolean only and
never extracts an embedding, which is all this package needs. The test
suite validates it against an independent slow search for complete and
complete-bipartite subdivisions on small graphs.

Class predicates are assumed to describe isomorphism-closed, hereditary
graph classes; hereditarity is spot-checked, not enforced.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

import networkx as nx

from .graph import LabeledGraph


def is_planar(g: LabeledGraph) -> bool:
    """True iff g embeds in the plane (each component embedded independently)."""
    h = nx.Graph()
    h.add_nodes_from(g.labels)
    h.add_edges_from(g.edges())
    ok, _ = nx.check_planarity(h, counterexample=False)
    return ok


@dataclass(frozen=True)
class ClassPredicate:
    """Deterministic membership test for a hereditary graph class."""

    name: str
    test: Callable[[LabeledGraph], bool]
    hereditary: bool = True

    def __call__(self, g: LabeledGraph) -> bool:
        return self.test(g)


PLANAR = ClassPredicate("planar", is_planar)


def hereditary_spot_check(
    pred: ClassPredicate, g: LabeledGraph, *, samples: int = 8, seed: int = 0
) -> bool:
    """Spot-test hereditarity: membership must survive random vertex deletions.

    Vacuously true when g itself is outside the class.
    """
    if not pred.test(g):
        return True
    rng = random.Random(seed)
    for _ in range(samples):
        keep = frozenset(v for v in g.labels if rng.random() < 0.7)
        if not pred.test(g.induced(keep)):
            return False
    return True
