import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from localmds import GeneratorSpec, LabeledGraph, generate


def complete_graph(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> LabeledGraph:
    return LabeledGraph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def random_graph(n: int, p: float, rng: random.Random) -> LabeledGraph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return LabeledGraph.from_edges(n, edges)


def star(leaves: int) -> LabeledGraph:
    return LabeledGraph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def path(n: int) -> LabeledGraph:
    return generate(GeneratorSpec("path", {"n": n}))


def cycle(n: int) -> LabeledGraph:
    return generate(GeneratorSpec("cycle", {"n": n}))


def grid(rows: int, cols: int) -> LabeledGraph:
    return generate(GeneratorSpec("grid", {"rows": rows, "cols": cols}))


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
