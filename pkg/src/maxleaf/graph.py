"""Simple undirected graph: representation, validation, parsing and serialization.

Vertices are dense 0-based integers. Two text formats are supported:

* edgelist -- header line "n m", then m lines "u v" with 0-based ids.
  Lines starting with '#' are comments.
* dimacs   -- "c" comment lines, one "p edge n m" line, then m lines
  "e u v" with 1-based ids (shifted to 0-based internally).

Graphs are immutable after construction and safe to share between
concurrent readers.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable


class GraphFormatError(ValueError):
    """Malformed graph text. Carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class Graph:
    """Adjacency-list graph with n vertices and m undirected edges.

    Adjacency order is preserved from the input (parsers keep file order,
    generators emit neighbors in ascending id order), which pins down every
    "arbitrary" choice made downstream. Rows are stored as tuples: a Graph
    never changes after construction.
    """

    __slots__ = ("n", "m", "adjacency")

    def __init__(self, n: int, adjacency: list[tuple[int, ...]]):
        self.n = n
        self.adjacency = [tuple(row) for row in adjacency]
        self.m = sum(len(a) for a in self.adjacency) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        # Route all entries through one id table so every occurrence of a
        # vertex id shares a single int object; on large graphs this cuts
        # the boxed-int footprint by ~8x and keeps traversals cache-friendly.
        ids = list(range(n))
        adjacency: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            adjacency[u].append(ids[v])
            adjacency[v].append(ids[u])
        return cls(n, adjacency)

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def edge_list(self) -> list[tuple[int, int]]:
        """All edges as sorted (u, v) pairs with u < v, in lexicographic order."""
        edges = []
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    edges.append((u, v))
        edges.sort()
        return edges

    def edge_set(self) -> set[tuple[int, int]]:
        return {(u, v) if u < v else (v, u)
                for u, nbrs in enumerate(self.adjacency) for v in nbrs}

    def validate(self) -> None:
        """Check symmetry, simplicity and edge-count consistency by direct scan."""
        n = self.n
        if len(self.adjacency) != n:
            raise ValueError("adjacency length differs from vertex count")
        half_edges = 0
        neighbor_sets = []
        for u, nbrs in enumerate(self.adjacency):
            seen = set()
            for v in nbrs:
                if not 0 <= v < n:
                    raise ValueError(f"vertex {u} has out-of-range neighbor {v}")
                if v == u:
                    raise ValueError(f"self-loop at vertex {u}")
                if v in seen:
                    raise ValueError(f"duplicate neighbor {v} in adjacency of {u}")
                seen.add(v)
            neighbor_sets.append(seen)
            half_edges += len(nbrs)
        for u in range(n):
            for v in neighbor_sets[u]:
                if u not in neighbor_sets[v]:
                    raise ValueError(f"asymmetric edge {u}-{v}")
        if half_edges != 2 * self.m:
            raise ValueError("edge count inconsistent with adjacency")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def is_connected(g: Graph) -> bool:
    """True iff a traversal from vertex 0 reaches all n vertices (true for n=1)."""
    if g.n <= 1:
        return True
    seen = bytearray(g.n)
    seen[0] = 1
    reached = 1
    queue = deque([0])
    adjacency = g.adjacency
    while queue:
        u = queue.popleft()
        for v in adjacency[u]:
            if not seen[v]:
                seen[v] = 1
                reached += 1
                queue.append(v)
    return reached == g.n


def _parse_int(token: str, what: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"{what} is not an integer: {token!r}", line) from None


def _add_edge(u: int, v: int, n: int, edges: list, seen: set, line: int, base: int) -> None:
    lo, hi = base, n - 1 + base
    if not (lo <= u <= hi and lo <= v <= hi):
        raise GraphFormatError(f"vertex id out of range [{lo}, {hi}]: {u} {v}", line)
    u -= base
    v -= base
    if u == v:
        raise GraphFormatError(f"self-loop at vertex {u + base}", line)
    key = (u, v) if u < v else (v, u)
    if key in seen:
        raise GraphFormatError(f"duplicate edge {u + base} {v + base}", line)
    seen.add(key)
    edges.append((u, v))


def _parse_edgelist(text: str) -> Graph:
    n = m = -1
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    header_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n < 0:
            if len(fields) != 2:
                raise GraphFormatError(f"expected header 'n m', got {line!r}", lineno)
            n = _parse_int(fields[0], "vertex count", lineno)
            m = _parse_int(fields[1], "edge count", lineno)
            if n < 1:
                raise GraphFormatError(f"vertex count must be >= 1, got {n}", lineno)
            if m < 0:
                raise GraphFormatError(f"edge count must be >= 0, got {m}", lineno)
            header_line = lineno
            continue
        if len(fields) != 2:
            raise GraphFormatError(f"expected edge 'u v', got {line!r}", lineno)
        u = _parse_int(fields[0], "vertex id", lineno)
        v = _parse_int(fields[1], "vertex id", lineno)
        if len(edges) == m:
            raise GraphFormatError(f"more than the declared {m} edges", lineno)
        _add_edge(u, v, n, edges, seen, lineno, base=0)
    if n < 0:
        raise GraphFormatError("missing 'n m' header line", 1)
    if len(edges) != m:
        raise GraphFormatError(
            f"declared {m} edges but found {len(edges)}", header_line)
    return Graph.from_edges(n, edges)


def _parse_dimacs(text: str) -> Graph:
    n = m = -1
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    problem_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n >= 0:
                raise GraphFormatError("duplicate 'p' line", lineno)
            if len(fields) != 4 or fields[1] != "edge":
                raise GraphFormatError(f"expected 'p edge n m', got {line!r}", lineno)
            n = _parse_int(fields[2], "vertex count", lineno)
            m = _parse_int(fields[3], "edge count", lineno)
            if n < 1:
                raise GraphFormatError(f"vertex count must be >= 1, got {n}", lineno)
            if m < 0:
                raise GraphFormatError(f"edge count must be >= 0, got {m}", lineno)
            problem_line = lineno
            continue
        if fields[0] == "e":
            if n < 0:
                raise GraphFormatError("'e' line before 'p edge' line", lineno)
            if len(fields) != 3:
                raise GraphFormatError(f"expected 'e u v', got {line!r}", lineno)
            u = _parse_int(fields[1], "vertex id", lineno)
            v = _parse_int(fields[2], "vertex id", lineno)
            if len(edges) == m:
                raise GraphFormatError(f"more than the declared {m} edges", lineno)
            _add_edge(u, v, n, edges, seen, lineno, base=1)
            continue
        raise GraphFormatError(f"unrecognized line {line!r}", lineno)
    if n < 0:
        raise GraphFormatError("missing 'p edge n m' line", 1)
    if len(edges) != m:
        raise GraphFormatError(
            f"declared {m} edges but found {len(edges)}", problem_line)
    return Graph.from_edges(n, edges)


FORMATS = ("edgelist", "dimacs")


def parse(text: str, fmt: str = "edgelist") -> Graph:
    """Parse a graph description; raises GraphFormatError with a line number."""
    if fmt == "edgelist":
        return _parse_edgelist(text)
    if fmt == "dimacs":
        return _parse_dimacs(text)
    raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")


def serialize(g: Graph, fmt: str = "edgelist") -> str:
    """Serialize with edges sorted; parse(serialize(g)) reproduces the edge set."""
    edges = g.edge_list()
    if fmt == "edgelist":
        lines = [f"{g.n} {g.m}"]
        lines.extend(f"{u} {v}" for u, v in edges)
    elif fmt == "dimacs":
        lines = [f"p edge {g.n} {g.m}"]
        lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    else:
        raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, tree_edges: Iterable[tuple[int, int]] | None = None) -> str:
    """DOT export. With tree_edges, tree edges are solid and the rest dashed."""
    tree = None
    if tree_edges is not None:
        tree = {(u, v) if u < v else (v, u) for u, v in tree_edges}
    lines = ["graph G {"]
    for u, v in g.edge_list():
        if tree is None or (u, v) in tree:
            lines.append(f"  {u} -- {v};")
        else:
            lines.append(f"  {u} -- {v} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"
