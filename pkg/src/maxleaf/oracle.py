"""Brute-force maximum-leaf spanning tree oracle for desk-scale graphs.

Spanning trees are enumerated by deciding each edge in lexicographic order:
the include branch is skipped when the edge would close a cycle, the exclude
branch when the remaining undecided edges can no longer connect the graph.
Every spanning tree is therefore visited exactly once, which makes the
enumeration count itself a testable quantity (n^(n-2) on complete graphs).

Intended for n <= 12 or so; a budget caps the number of trees examined.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certificate import Certificate, LemmaReport, certify
from .graph import Graph, is_connected
from .solver import (DisconnectedGraphError, SpanningTree, StartPolicy,
                     leaf_count, tree)

DEFAULT_BUDGET = 10 ** 8


@dataclass(frozen=True)
class OracleResult:
    opt_leaves: int
    witness: SpanningTree
    trees_examined: int
    budget_exhausted: bool = False


class _Budget(Exception):
    pass


def _tree_from_edges(n: int, edges: tuple[tuple[int, int], ...]) -> SpanningTree:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    parent: list[int | None] = [None] * n
    seen = bytearray(n)
    seen[0] = 1
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = 1
                parent[y] = x
                stack.append(y)
    leaves = frozenset(v for v in range(n) if len(adj[v]) == 1)
    return SpanningTree(0, tuple(parent), leaves)


def max_leaf_exact(g: Graph, budget: int = DEFAULT_BUDGET,
                   prune_bound: bool = False) -> OracleResult:
    """Enumerate all spanning trees of g and return a maximum-leaf witness.

    Ties are broken toward the lexicographically smallest edge set. With
    prune_bound=True, branches whose leaf potential cannot beat the incumbent
    are cut; this keeps the result identical but makes trees_examined smaller,
    so it stays off wherever the count matters.

    If more than `budget` trees exist, enumeration stops after `budget` of
    them and the result carries budget_exhausted=True.
    """
    n = g.n
    if not is_connected(g):
        raise DisconnectedGraphError("oracle requires a connected graph")
    if n == 1:
        return OracleResult(0, _tree_from_edges(1, ()), 1)

    edges = g.edge_list()
    m = len(edges)
    root = list(range(n))          # union-find without path splitting: n is tiny

    def find(x: int) -> int:
        while root[x] != x:
            x = root[x]
        return x

    deg = [0] * n
    chosen: list[tuple[int, int]] = []
    best_leaves = -1
    best_edges: tuple[tuple[int, int], ...] = ()
    trees = 0
    internal = 0                   # vertices with partial degree >= 2

    def remaining_connects(i: int) -> bool:
        # Can included edges plus edges[i:] still connect everything?
        scratch = root.copy()

        def sfind(x: int) -> int:
            while scratch[x] != x:
                x = scratch[x]
            return x

        comps = n - len(chosen)
        for u, v in edges[i:]:
            ru, rv = sfind(u), sfind(v)
            if ru != rv:
                scratch[ru] = rv
                comps -= 1
                if comps == 1:
                    return True
        return comps == 1

    def rec(i: int) -> None:
        nonlocal best_leaves, best_edges, trees, internal
        if len(chosen) == n - 1:
            if trees >= budget:
                raise _Budget   # a tree beyond the budget exists
            trees += 1
            leaves = sum(1 for d in deg if d == 1)
            et = tuple(chosen)
            if leaves > best_leaves or (leaves == best_leaves and et < best_edges):
                best_leaves = leaves
                best_edges = et
            return
        if m - i < n - 1 - len(chosen):
            return
        if prune_bound and n - internal < best_leaves:
            return
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru != rv:
            root[ru] = rv
            deg[u] += 1
            deg[v] += 1
            grew = (deg[u] == 2) + (deg[v] == 2)
            internal += grew
            chosen.append((u, v))
            rec(i + 1)
            chosen.pop()
            internal -= grew
            deg[u] -= 1
            deg[v] -= 1
            root[ru] = ru
        if remaining_connects(i + 1):
            rec(i + 1)

    exhausted = False
    try:
        rec(0)
    except _Budget:
        exhausted = True
    if best_leaves < 0:
        raise DisconnectedGraphError("no spanning tree found")
    return OracleResult(best_leaves, _tree_from_edges(n, best_edges), trees, exhausted)


@dataclass(frozen=True)
class CompareResult:
    """Algorithm-versus-optimum comparison on one instance."""

    alg_leaves: int
    opt_leaves: int
    ratio: float
    certificate_ok: bool
    bound_ok: bool
    certificate: Certificate | None = None
    lemmas: LemmaReport | None = None
    budget_exhausted: bool = False


def compare(g: Graph, policy: StartPolicy | None = None,
            budget: int = DEFAULT_BUDGET) -> CompareResult:
    """Run the greedy solver, the certificate pipeline and the exact oracle.

    bound_ok checks opt <= 2*alg - 1 (the approximation guarantee),
    certificate_ok checks opt <= upper_bound (soundness of the bound).
    Both checks are skipped in the degenerate regime n < 3.
    """
    t, trace = tree(g, policy)
    alg = leaf_count(t)
    cert = report = None
    if g.n >= 3:
        cert, report = certify(g, t, trace)
    result = max_leaf_exact(g, budget=budget)
    opt = result.opt_leaves
    ratio = opt / alg if alg else 1.0
    bound_ok = opt <= 2 * alg - 1 if g.n >= 2 else True
    certificate_ok = True
    if cert is not None:
        certificate_ok = opt <= cert.upper_bound and report.passed
    return CompareResult(alg, opt, ratio, certificate_ok, bound_ok,
                         cert, report, result.budget_exhausted)
