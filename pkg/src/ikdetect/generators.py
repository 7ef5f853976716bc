"""Named graph families used by the CLI ``--gen`` flag and the test corpus."""

from __future__ import annotations

import random
import re
from itertools import combinations

from .graph import Graph


def complete(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def complete_multipartite(*parts: int) -> Graph:
    owner = [i for i, size in enumerate(parts) for _ in range(size)]
    n = len(owner)
    return Graph(n, tuple((u, v) for u, v in combinations(range(n), 2) if owner[u] != owner[v]))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def star(n: int) -> Graph:
    return Graph(n, tuple((0, i) for i in range(1, n)))


def wheel(n: int) -> Graph:
    """Hub 0 joined to a rim cycle on ``1..n-1``."""
    rim = [(i, i % (n - 1) + 1) for i in range(1, n)]
    return Graph(n, tuple(rim + [(0, i) for i in range(1, n)]))


def cube() -> Graph:
    return Graph(8, tuple((u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)))


def prism(k: int = 3) -> Graph:
    top = [(i, (i + 1) % k) for i in range(k)]
    bottom = [(k + i, k + (i + 1) % k) for i in range(k)]
    rungs = [(i, k + i) for i in range(k)]
    return Graph(2 * k, tuple(top + bottom + rungs))


def grid(rows: int, cols: int) -> Graph:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, tuple(edges))


def disjoint_triangles(bridge: bool = False) -> Graph:
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    if bridge:
        edges.append((2, 3))
    return Graph(6, tuple(edges))


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph(n, tuple(e for e in combinations(range(n), 2) if rng.random() < p))


def random_tree(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph(n, tuple((rng.randrange(i), i) for i in range(1, n)))


_FIXED = {
    "petersen": petersen,
    "cube": cube,
    "octahedron": lambda: complete_multipartite(2, 2, 2),
    "prism": prism,
    "two-triangles": disjoint_triangles,
    "bridged-triangles": lambda: disjoint_triangles(bridge=True),
}


def from_name(name: str) -> Graph:
    """Build a graph from a short name.

    ``k7`` is K7; ``k3311`` (two or more digits) is the complete multipartite
    graph with those part sizes; ``k3,3,1,1`` spells parts explicitly.
    Parametrised families use ``family:args``, e.g. ``cycle:5``,
    ``grid:3x3``, ``wheel:6``, ``complete:10``, ``random:8:0.4:1``.
    """
    key = name.strip().lower()
    if key in _FIXED:
        return _FIXED[key]()
    m = re.fullmatch(r"k(\d+(?:,\d+)*)", key)
    if m:
        body = m.group(1)
        if "," in body:
            return complete_multipartite(*map(int, body.split(",")))
        if len(body) == 1:
            return complete(int(body))
        return complete_multipartite(*map(int, body))
    family, _, args = key.partition(":")
    try:
        if family == "complete":
            return complete(int(args))
        if family == "cycle":
            return cycle_graph(int(args))
        if family == "path":
            return path_graph(int(args))
        if family == "star":
            return star(int(args))
        if family == "wheel":
            return wheel(int(args))
        if family == "prism":
            return prism(int(args))
        if family == "grid":
            r, c = args.split("x")
            return grid(int(r), int(c))
        if family == "tree":
            n, seed = args.split(":")
            return random_tree(int(n), int(seed))
        if family == "random":
            n, p, seed = args.split(":")
            return random_graph(int(n), float(p), int(seed))
    except ValueError as exc:
        raise ValueError(f"bad arguments for generator {name!r}") from exc
    raise ValueError(f"unknown generator {name!r}")
