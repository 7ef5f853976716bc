"""Simple graphs, their cycles, and how pairs of cycles meet."""

from __future__ import annotations

import enum
import hashlib
import re
from dataclasses import dataclass, field
from itertools import combinations


class GraphFormatError(ValueError):
    """Raised when graph text cannot be turned into a simple graph."""


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``.

    Edges are stored sorted by ``(min endpoint, max endpoint)`` so that an
    edge's index only depends on the edge set.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] = ()
    adjacency: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)
    edge_index: dict[tuple[int, int], int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphFormatError(f"edge ({u}, {v}) references a missing vertex")
            e = (min(u, v), max(u, v))
            if e in norm:
                raise GraphFormatError(f"duplicate edge {e}")
            norm.add(e)
        edges = tuple(sorted(norm))
        object.__setattr__(self, "edges", edges)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(self.n)))
        elif len(self.labels) != self.n:
            raise GraphFormatError("label table does not match vertex count")
        adj = [set() for _ in range(self.n)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "adjacency", tuple(frozenset(a) for a in adj))
        object.__setattr__(self, "edge_index", {e: i for i, e in enumerate(edges)})

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index

    def edge_id(self, u: int, v: int) -> int:
        return self.edge_index[(min(u, v), max(u, v))]

    def digest(self) -> str:
        """Hash of the indexed edge list; ties certificates to a graph."""
        text = f"{self.n}\n" + "".join(f"{u} {v}\n" for u, v in self.edges)
        return hashlib.sha256(text.encode()).hexdigest()

    def to_edge_list(self) -> str:
        return "".join(f"{self.labels[u]} {self.labels[v]}\n" for u, v in self.edges)


@dataclass(frozen=True)
class Cycle:
    """A simple cycle with its canonical traversal.

    ``vertices`` starts at the smallest vertex and continues toward the
    smaller of its two cycle neighbours.
    """

    id: int
    vertices: tuple[int, ...]
    edges: frozenset[int]
    edge_mask: int
    vertex_mask: int

    def __len__(self):
        return len(self.vertices)

    def directed_edges(self):
        """Yield ``(u, v)`` pairs in traversal order."""
        vs = self.vertices
        for i, u in enumerate(vs):
            yield u, vs[(i + 1) % len(vs)]

    def edge_signs(self, g: Graph) -> dict[int, int]:
        """+1 where the traversal runs low-to-high along an edge, -1 otherwise."""
        return {g.edge_id(u, v): (1 if u < v else -1) for u, v in self.directed_edges()}


class IntersectionKind(enum.Enum):
    EMPTY = "empty"
    CONNECTED = "nonempty-connected"
    DISCONNECTED = "nonempty-disconnected"


@dataclass(frozen=True)
class IntersectionClass:
    kind: IntersectionKind
    vertices: frozenset[int]
    edges: frozenset[int]


_LINE_RE = re.compile(r"^(\S+)\s+(\S+)$")


def _strip(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    """Parse an edge list (``u v`` per line) or a 0/1 adjacency matrix.

    With ``fmt="auto"`` a block of equal-length 0/1 rows, one per vertex,
    is read as a matrix; anything else as an edge list.
    """
    lines = list(_strip(text))
    if fmt == "auto":
        square = lines and all(re.fullmatch(r"[01]+", ln) and len(ln) == len(lines) for _, ln in lines)
        fmt = "matrix" if square and len(lines) > 1 else "edges"
    if fmt == "matrix":
        return _parse_matrix(lines)
    if fmt != "edges":
        raise ValueError(f"unknown graph format {fmt!r}")

    pairs = []
    for lineno, line in lines:
        m = _LINE_RE.match(line)
        if not m:
            raise GraphFormatError(f"line {lineno}: expected two vertex labels, got {line!r}")
        a, b = m.groups()
        if a == b:
            raise GraphFormatError(f"line {lineno}: loop at vertex {a!r}")
        pairs.append((lineno, a, b))

    names = {x for _, a, b in pairs for x in (a, b)}
    if all(x.isdigit() for x in names):
        order = sorted(names, key=int)
    else:
        order = []
        for _, a, b in pairs:
            for x in (a, b):
                if x not in order:
                    order.append(x)
    index = {x: i for i, x in enumerate(order)}

    seen = {}
    for lineno, a, b in pairs:
        u, v = index[a], index[b]
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {a} {b} (first on line {seen[key]})")
        seen[key] = lineno
    return Graph(len(order), tuple(seen), tuple(order))


def _parse_matrix(lines) -> Graph:
    # entries may be written compactly ("0110") or separated by blanks
    lines = [(lineno, "".join(row.split())) for lineno, row in lines]
    n = len(lines)
    edges = []
    for i, (lineno, row) in enumerate(lines):
        if len(row) != n or set(row) - {"0", "1"}:
            raise GraphFormatError(f"line {lineno}: expected {n} characters of 0/1")
        if row[i] == "1":
            raise GraphFormatError(f"line {lineno}: loop at vertex {i}")
        for j in range(i + 1, n):
            if row[j] != lines[j][1][i]:
                raise GraphFormatError(f"line {lineno}: matrix is not symmetric at ({i}, {j})")
            if row[j] == "1":
                edges.append((i, j))
    return Graph(n, tuple(edges))


def enumerate_cycles(g: Graph) -> list[Cycle]:
    """All simple cycles, sorted by (length, canonical vertex sequence)."""
    adj = [sorted(a) for a in g.adjacency]
    found = []
    for s in range(g.n):
        # cycles whose minimum vertex is s, walked away from s through larger vertices
        path = [s]
        on_path = {s}

        def extend(u):
            for w in adj[u]:
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    found.append(tuple(path))
                elif w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    extend(w)
                    path.pop()
                    on_path.discard(w)

        extend(s)

    found.sort(key=lambda vs: (len(vs), vs))
    cycles = []
    for cid, vs in enumerate(found):
        eids = frozenset(g.edge_id(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))
        cycles.append(
            Cycle(
                id=cid,
                vertices=vs,
                edges=eids,
                edge_mask=sum(1 << e for e in eids),
                vertex_mask=sum(1 << v for v in vs),
            )
        )
    return cycles


def is_chordless(g: Graph, c: Cycle) -> bool:
    for u, v in combinations(c.vertices, 2):
        if g.has_edge(u, v) and g.edge_id(u, v) not in c.edges:
            return False
    return True


def cycle_intersection(a: Cycle, b: Cycle) -> IntersectionClass:
    """Classify the subgraph shared by two distinct cycles.

    The shared subgraph is a proper subgraph of a cycle, hence a forest, so
    it is connected exactly when it has one more vertex than edges.
    """
    vs = frozenset(a.vertices) & frozenset(b.vertices)
    es = a.edges & b.edges
    if not vs:
        kind = IntersectionKind.EMPTY
    elif len(vs) - len(es) == 1:
        kind = IntersectionKind.CONNECTED
    else:
        kind = IntersectionKind.DISCONNECTED
    return IntersectionClass(kind, vs, es)


def nonadjacent_edge_pairs(g: Graph) -> list[tuple[int, int]]:
    """Pairs ``(k, l)``, ``k < l``, of edges with no common endpoint."""
    out = []
    for k, l in combinations(range(g.m), 2):
        if not set(g.edges[k]) & set(g.edges[l]):
            out.append((k, l))
    return out
