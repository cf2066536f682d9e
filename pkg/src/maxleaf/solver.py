"""Greedy tree expansion for maximum-leaf spanning trees in O(n + m) time.

The solver grows a tree from a start vertex of degree >= 2, always expanding
at the most promising tree vertex: first any vertex with >= 2 neighbors
outside the tree (a W2 expansion adds them all as leaves), then a vertex
whose single outside neighbor itself leads on to >= 2 new vertices (W1),
and only as a last resort the most recently added vertex with a single
outside neighbor (W0), which grows a path depth-first.

Scheduling uses two FIFO queues (w2, w1) and one LIFO stack (w0) over the
current leaves plus a per-vertex count of neighbors outside the tree, so a
whole run costs O(n + m) regardless of expansion order. Every tie is broken
deterministically (adjacency order), so identical inputs give identical runs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import Graph

W2, W1, W0 = "W2", "W1", "W0"


class DisconnectedGraphError(ValueError):
    """Input graph is not connected; no spanning tree exists."""


@dataclass(frozen=True)
class StartPolicy:
    """How the start vertex is chosen: first id of degree >= 2, the
    lowest-id maximum-degree vertex, or an explicit vertex."""

    kind: str                 # "first" | "maxdeg" | "explicit"
    vertex: int | None = None

    @classmethod
    def first_eligible(cls) -> "StartPolicy":
        return cls("first")

    @classmethod
    def max_degree(cls) -> "StartPolicy":
        return cls("maxdeg")

    @classmethod
    def explicit(cls, vertex: int) -> "StartPolicy":
        return cls("explicit", vertex)

    @classmethod
    def parse(cls, text: str) -> "StartPolicy":
        if text == "first":
            return cls.first_eligible()
        if text == "maxdeg":
            return cls.max_degree()
        if text.startswith("vertex:"):
            return cls.explicit(int(text.split(":", 1)[1]))
        raise ValueError(f"unknown start policy {text!r}")


@dataclass(frozen=True)
class ExpansionStep:
    """One tree expansion: all outside neighbors of center joined at once."""

    center: int
    case_label: str           # W2 | W1 | W0
    added: tuple[int, ...]    # in adjacency order of center


@dataclass(frozen=True)
class ExpansionTrace:
    """Replayable record of a run: start vertex plus the ordered steps.

    touches counts adjacency-list entries read during the run; it is the
    work-accounting instrument behind the linear-time contract.
    """

    start: int
    steps: tuple[ExpansionStep, ...]
    touches: int = 0


@dataclass(frozen=True)
class SpanningTree:
    root: int
    parent: tuple[int | None, ...]
    leaf_set: frozenset[int] = field(default_factory=frozenset)

    def edges(self) -> list[tuple[int, int]]:
        """Tree edges as sorted (u, v) pairs with u < v."""
        out = []
        for v, p in enumerate(self.parent):
            if p is not None:
                out.append((v, p) if v < p else (p, v))
        out.sort()
        return out


@dataclass(frozen=True)
class TreeCheck:
    """Verification outcome; falsy on failure, with a reason code."""

    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def leaf_count(t: SpanningTree) -> int:
    """Number of tree vertices of tree-degree exactly 1."""
    return len(t.leaf_set)


def pick_start(g: Graph, policy: StartPolicy) -> int:
    """Resolve the start vertex for a run; requires degree >= 2 when n >= 3."""
    n = g.n
    if policy.kind == "explicit":
        v = policy.vertex
        if v is None or not 0 <= v < n:
            raise ValueError(f"start vertex {v} out of range [0, {n})")
        if n >= 3 and g.degree(v) < 2:
            raise ValueError(
                f"start vertex {v} has degree {g.degree(v)} < 2")
        return v
    if n <= 2:
        return 0
    if policy.kind == "first":
        for v in range(n):
            if g.degree(v) >= 2:
                return v
        raise DisconnectedGraphError(
            "no vertex of degree >= 2: graph is disconnected")
    if policy.kind == "maxdeg":
        best = 0
        best_deg = g.degree(0)
        for v in range(1, n):
            d = g.degree(v)
            if d > best_deg:
                best, best_deg = v, d
        if best_deg < 2:
            raise DisconnectedGraphError(
                "no vertex of degree >= 2: graph is disconnected")
        return best
    raise ValueError(f"unknown start policy kind {policy.kind!r}")


def _finish_tree(n: int, root: int, parent: list[int | None]) -> SpanningTree:
    tree_degree = [0] * n
    for v, p in enumerate(parent):
        if p is not None:
            tree_degree[v] += 1
            tree_degree[p] += 1
    leaves = frozenset(v for v in range(n) if tree_degree[v] == 1)
    return SpanningTree(root, tuple(parent), leaves)


def tree(g: Graph, policy: StartPolicy | None = None) -> tuple[SpanningTree, ExpansionTrace]:
    """Build a spanning tree of the connected graph g by greedy expansion.

    Returns the tree plus the expansion trace. Deterministic for a fixed
    (graph, policy). Raises DisconnectedGraphError when g is disconnected.
    """
    if policy is None:
        policy = StartPolicy.first_eligible()
    n = g.n
    start = pick_start(g, policy)
    if n == 1:
        return _finish_tree(1, start, [None]), ExpansionTrace(start, ())

    adjacency = g.adjacency
    in_tree = bytearray(n)
    parent: list[int | None] = [None] * n
    # cnt[w] = number of neighbors of w outside the tree, for every w
    cnt = [len(a) for a in adjacency]
    # scan pointer per vertex: entries before it are known to be in the tree
    ptr = [0] * n
    w2: deque[int] = deque()
    w1: deque[int] = deque()
    w0: list[int] = []
    touches = 0
    spanned = 1
    steps: list[ExpansionStep] = []

    in_tree[start] = 1
    for w in adjacency[start]:
        cnt[w] -= 1
    touches += len(adjacency[start])

    def expand(u: int) -> tuple[int, ...]:
        nonlocal spanned, touches
        au = adjacency[u]
        added = []
        for i in range(ptr[u], len(au)):
            v = au[i]
            if not in_tree[v]:
                added.append(v)
        touches += len(au) - ptr[u]
        ptr[u] = len(au)
        for v in added:
            in_tree[v] = 1
            parent[v] = u
            w2.append(v)
            av = adjacency[v]
            for w in av:
                cnt[w] -= 1
            touches += len(av)
        spanned += len(added)
        return tuple(added)

    added = expand(start)
    if added:
        steps.append(ExpansionStep(start, W2 if len(added) >= 2 else W0, added))

    while spanned < n:
        if w2:
            u = w2.popleft()
            c = cnt[u]
            if c == 0:
                continue
            if c == 1:
                w1.append(u)
                continue
            steps.append(ExpansionStep(u, W2, expand(u)))
        elif w1:
            u = w1.popleft()
            if cnt[u] == 0:
                continue
            au = adjacency[u]
            i = ptr[u]
            while in_tree[au[i]]:
                i += 1
            touches += i - ptr[u] + 1
            ptr[u] = i
            v = au[i]
            # v joined next would itself have exactly one outside neighbor:
            # defer u to the depth-first stack instead of expanding now.
            if cnt[v] == 1:
                w0.append(u)
                continue
            steps.append(ExpansionStep(u, W1, expand(u)))
        elif w0:
            u = w0.pop()
            if cnt[u] == 0:
                continue
            steps.append(ExpansionStep(u, W0, expand(u)))
        else:
            raise DisconnectedGraphError(
                f"graph is disconnected: reached {spanned} of {n} vertices")

    return _finish_tree(n, start, parent), ExpansionTrace(start, tuple(steps), touches)


def verify_spanning_tree(g: Graph, t: SpanningTree) -> TreeCheck:
    """Check that t is a spanning tree of g: n-1 parent edges, all present
    in g, acyclic, connected, with a consistent leaf set."""
    n = g.n
    if len(t.parent) != n:
        return TreeCheck(False, "vertex-count-mismatch")
    if not 0 <= t.root < n:
        return TreeCheck(False, "root-out-of-range")
    if t.parent[t.root] is not None:
        return TreeCheck(False, "root-has-parent")
    edge_count = 0
    for v, p in enumerate(t.parent):
        if v == t.root:
            continue
        if p is None:
            return TreeCheck(False, "missing-parent")
        if not 0 <= p < n:
            return TreeCheck(False, "parent-out-of-range")
        if p not in g.adjacency[v]:
            return TreeCheck(False, "parent-edge-not-in-graph")
        edge_count += 1
    if edge_count != n - 1:
        return TreeCheck(False, "edge-count")
    # Root-reachability along parent links implies acyclic and spanning.
    state = bytearray(n)  # 0 unknown, 1 on current path, 2 done
    state[t.root] = 2
    for v in range(n):
        path = []
        x = v
        while state[x] == 0:
            state[x] = 1
            path.append(x)
            x = t.parent[x]  # type: ignore[assignment]
        if state[x] == 1:
            return TreeCheck(False, "cycle")
        for y in path:
            state[y] = 2
    tree_degree = [0] * n
    for v, p in enumerate(t.parent):
        if p is not None:
            tree_degree[v] += 1
            tree_degree[p] += 1
    if t.leaf_set != frozenset(v for v in range(n) if tree_degree[v] == 1):
        return TreeCheck(False, "leaf-set-mismatch")
    return TreeCheck(True)
