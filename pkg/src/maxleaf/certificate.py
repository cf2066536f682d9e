"""Machine-checkable quality certificate for a solver run.

Replaying an expansion trace assigns every vertex a rank: W2 expansions
propagate the center's rank to all added vertices, W1/W0 expansions give
the single added vertex a fresh maximum. Deleting tree edges between
differently ranked endpoints yields the rank forest F, whose components
are exactly the rank classes. From F we read off

    u_size       -- vertices of unique rank (singleton components),
    k            -- components with >= 3 vertices,
    upper_bound  -- n - u_size - k + 1,

an upper bound on the leaf count of EVERY spanning tree of the input, and
upper_bound <= 2 * leaves(T) - 1 gives the 2-approximation guarantee.

All structural facts the bound relies on are re-checked exhaustively: the
four lemma validators and the forest invariants pass on every correct run,
so any reported violation is an implementation-bug detector, never data.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .solver import ExpansionTrace, SpanningTree, W2


class CertificateError(ValueError):
    """An invariant that holds for all genuine runs failed: a bug signal."""


def assign_ranks(g: Graph, trace: ExpansionTrace) -> list[int]:
    """Replay a trace and return the per-vertex rank (>= 1 everywhere).

    Raises ValueError if the trace is inconsistent with g.
    """
    n = g.n
    if not 0 <= trace.start < n:
        raise ValueError(f"trace start {trace.start} out of range")
    rank = [0] * n
    rank[trace.start] = 1
    in_tree = bytearray(n)
    in_tree[trace.start] = 1
    max_rank = 1
    for step in trace.steps:
        u = step.center
        if not in_tree[u]:
            raise ValueError(f"trace expands at {u} before it joined the tree")
        if not step.added:
            raise ValueError(f"trace step at {u} adds no vertices")
        if step.case_label == W2 and len(step.added) < 2:
            raise ValueError(f"W2 step at {u} adds fewer than 2 vertices")
        if step.case_label != W2 and len(step.added) != 1:
            raise ValueError(f"{step.case_label} step at {u} adds {len(step.added)} vertices")
        neighbors = set(g.adjacency[u])
        for v in step.added:
            if v not in neighbors:
                raise ValueError(f"trace adds non-neighbor {v} at {u}")
            if in_tree[v]:
                raise ValueError(f"trace adds vertex {v} twice")
            in_tree[v] = 1
        if step.case_label == W2:
            for v in step.added:
                rank[v] = rank[u]
        else:
            max_rank += 1
            rank[step.added[0]] = max_rank
    if not all(in_tree):
        raise ValueError("trace does not span all vertices")
    return rank


@dataclass(frozen=True)
class RankForest:
    """The tree with edges between unequal ranks removed.

    components are sorted largest first (ties by smallest vertex);
    component_of and f_degree are per-vertex arrays.
    """

    components: tuple[tuple[int, ...], ...]
    component_of: tuple[int, ...]
    f_degree: tuple[int, ...]

    def singleton_count(self) -> int:
        return sum(1 for comp in self.components if len(comp) == 1)

    def big_component_count(self) -> int:
        return sum(1 for comp in self.components if len(comp) >= 3)

    def unique_rank_vertices(self) -> frozenset[int]:
        return frozenset(comp[0] for comp in self.components if len(comp) == 1)

    def forest_leaves(self) -> frozenset[int]:
        return frozenset(v for v, d in enumerate(self.f_degree) if d == 1)


def build_forest(g: Graph, t: SpanningTree, rank: list[int]) -> RankForest:
    """Delete tree edges with unequal endpoint ranks and split into components.

    Verifies the structural invariants every genuine run satisfies:
    components coincide with rank classes, no component has exactly two
    vertices, and a component with >= 3 vertices has at most one vertex of
    forest-degree exactly 2. Violations raise CertificateError.
    """
    n = g.n
    if len(t.parent) != n or len(rank) != n:
        raise ValueError("tree or rank size differs from graph")
    f_adj: list[list[int]] = [[] for _ in range(n)]
    for v, p in enumerate(t.parent):
        if p is not None and rank[v] == rank[p]:
            f_adj[v].append(p)
            f_adj[p].append(v)
    component_of = [-1] * n
    raw_components: list[list[int]] = []
    for v in range(n):
        if component_of[v] >= 0:
            continue
        comp = [v]
        component_of[v] = len(raw_components)
        stack = [v]
        while stack:
            x = stack.pop()
            for y in f_adj[x]:
                if component_of[y] < 0:
                    component_of[y] = len(raw_components)
                    comp.append(y)
                    stack.append(y)
        raw_components.append(sorted(comp))

    order = sorted(range(len(raw_components)),
                   key=lambda i: (-len(raw_components[i]), raw_components[i][0]))
    components = tuple(tuple(raw_components[i]) for i in order)
    remap = {old: new for new, old in enumerate(order)}
    component_of = [remap[c] for c in component_of]
    f_degree = [len(a) for a in f_adj]

    for comp in components:
        if len(comp) == 2:
            raise CertificateError(f"forest component of size 2: {comp}")
        if len(comp) >= 3:
            deg2 = [v for v in comp if f_degree[v] == 2]
            if len(deg2) > 1:
                raise CertificateError(
                    f"component {comp} has {len(deg2)} degree-2 vertices: {deg2}")
    # Components must be exactly the rank classes, in both directions.
    rank_of_comp: dict[int, int] = {}
    for idx, comp in enumerate(components):
        ranks_seen = {rank[v] for v in comp}
        if len(ranks_seen) != 1:
            raise CertificateError(f"component {comp} mixes ranks {ranks_seen}")
        r = ranks_seen.pop()
        if r in rank_of_comp:
            raise CertificateError(
                f"rank {r} split across components {rank_of_comp[r]} and {idx}")
        rank_of_comp[r] = idx

    return RankForest(components, tuple(component_of), tuple(f_degree))


@dataclass(frozen=True)
class Certificate:
    """Per-run quality guarantee: no spanning tree of the input has more
    than upper_bound leaves, and upper_bound <= 2 * leaf_count - 1."""

    u_size: int
    k: int
    upper_bound: int
    leaf_count: int

    @property
    def ratio_bound(self) -> float:
        return self.upper_bound / self.leaf_count


def compute_certificate(g: Graph, t: SpanningTree, f: RankForest) -> Certificate:
    """Derive (u_size, k, upper_bound, leaf_count) and check its invariants."""
    n = g.n
    if n < 3:
        raise ValueError(f"certificate needs n >= 3, got n={n}")
    u_size = f.singleton_count()
    k = f.big_component_count()
    upper_bound = n - u_size - k + 1
    leaves = len(t.leaf_set)
    cert = Certificate(u_size, k, upper_bound, leaves)

    if k < 1:
        raise CertificateError(f"expected k >= 1, got k={k}")
    big_total = sum(len(c) for c in f.components if len(c) >= 3)
    if n - u_size != big_total:
        raise CertificateError(
            f"n - u_size = {n - u_size} but big components hold {big_total} vertices")
    if upper_bound < leaves:
        raise CertificateError(
            f"upper_bound {upper_bound} below own leaf count {leaves}")
    if n - u_size > 2 * leaves + k - 2:
        raise CertificateError(
            f"n - u_size = {n - u_size} exceeds 2*leaves + k - 2 = {2 * leaves + k - 2}")
    if upper_bound > 2 * leaves - 1:
        raise CertificateError(
            f"upper_bound {upper_bound} exceeds 2*leaves - 1 = {2 * leaves - 1}")
    return cert


@dataclass(frozen=True)
class LemmaReport:
    """Witness lists per lemma check; all empty on a correct run."""

    local_degree: tuple[tuple[int, int, int], ...]      # u, v, w path witnesses
    upward_neighbor: tuple[tuple[int, int, int], ...]   # u with two higher nbrs
    branch_rank: tuple[tuple[int, int], ...]            # forest-internal u below v
    unique_over_leaf: tuple[tuple[int, int], ...]       # unique-rank u not above leaf v
    truncated: bool = False

    @property
    def passed(self) -> bool:
        return not (self.local_degree or self.upward_neighbor
                    or self.branch_rank or self.unique_over_leaf)

    def witness_counts(self) -> tuple[int, int, int, int]:
        return (len(self.local_degree), len(self.upward_neighbor),
                len(self.branch_rank), len(self.unique_over_leaf))


def check_lemmas(g: Graph, rank: list[int], f: RankForest,
                 max_path_checks: int = 10_000_000) -> LemmaReport:
    """Exhaustively check the four structural facts the bound rests on.

    1. local_degree: on a path u-v-w with u, v of unique rank and
       rank(u) < rank(v) < rank(w), v has graph-degree exactly 2.
    2. upward_neighbor: every vertex has at most one neighbor of higher rank.
    3. branch_rank: a forest vertex of forest-degree >= 2 has no neighbor
       of higher rank.
    4. unique_over_leaf: on an edge from a unique-rank vertex to a forest
       leaf, the unique-rank endpoint has the strictly higher rank.

    The length-2 path scan is capped at max_path_checks pair checks; the
    report is flagged truncated if the cap is hit.
    """
    unique = f.unique_rank_vertices()
    leaves_f = f.forest_leaves()
    f_degree = f.f_degree
    adjacency = g.adjacency

    local_degree = []
    truncated = False
    checks = 0
    # Contrapositive scan: only unique-rank centers of degree >= 3 can violate.
    for v in sorted(unique):
        if len(adjacency[v]) < 3:
            continue
        rv = rank[v]
        lower_unique = [u for u in adjacency[v] if u in unique and rank[u] < rv]
        if not lower_unique:
            continue
        higher = [w for w in adjacency[v] if rank[w] > rv]
        checks += len(lower_unique) * len(higher)
        if checks > max_path_checks:
            truncated = True
            break
        for u in lower_unique:
            for w in higher:
                local_degree.append((u, v, w))

    upward_neighbor = []
    for u in range(g.n):
        ru = rank[u]
        higher = [v for v in adjacency[u] if rank[v] > ru]
        if len(higher) > 1:
            upward_neighbor.append((u, higher[0], higher[1]))

    branch_rank = []
    unique_over_leaf = []
    for u, v in g.edge_list():
        if f_degree[u] >= 2 and rank[u] < rank[v]:
            branch_rank.append((u, v))
        if f_degree[v] >= 2 and rank[v] < rank[u]:
            branch_rank.append((v, u))
        if u in unique and v in leaves_f and rank[u] <= rank[v]:
            unique_over_leaf.append((u, v))
        if v in unique and u in leaves_f and rank[v] <= rank[u]:
            unique_over_leaf.append((v, u))

    return LemmaReport(tuple(local_degree), tuple(upward_neighbor),
                       tuple(branch_rank), tuple(unique_over_leaf), truncated)


def certify(g: Graph, t: SpanningTree, trace: ExpansionTrace) -> tuple[Certificate, LemmaReport]:
    """Full pipeline: ranks, forest, certificate, lemma checks."""
    rank = assign_ranks(g, trace)
    forest = build_forest(g, t, rank)
    cert = compute_certificate(g, t, forest)
    report = check_lemmas(g, rank, forest)
    return cert, report
