"""Level-by-level enumeration of sub-extremal triangle-free graphs.

A level holds, per isomorphism class, one triangle-free graph of a fixed
order with no k-sparse j-set and (in R mode) no k-dense i-set.  The step to
the next order attaches a new vertex to every independent set of every
member (which preserves triangle-freeness by construction), keeps a child
only when no forbidden set passes through the new vertex, and deduplicates
by canonical key.  Members are stored canonically labeled and sorted by key,
so levels are byte-stable regardless of worker count or merge order.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass

from . import _kernels
from .canon import CanonKey, canonical_graph
from .defect import (
    has_k_dense_set,
    has_k_dense_set_containing,
    has_k_sparse_set,
    has_k_sparse_set_containing,
)
from .errors import ConstructionError
from .graphs import Graph, VertexSet, add_vertex, is_triangle_free, single_vertex


@dataclass(frozen=True)
class ProblemSpec:
    """Search parameters: defect k, sparse size j, optional dense size i.

    ``i`` present selects R mode (both forbidden sets); absent selects
    T mode (sparse sets only).  The interesting regime has i, j >= k+2,
    but smaller j (down to 2) is accepted: for j <= k+1 every j-set is
    k-sparse and the search just bottoms out early.
    """

    k: int
    j: int
    i: int | None = None

    def __post_init__(self):
        if self.k < 0:
            raise ConstructionError(f"defect parameter k={self.k} < 0")
        if self.j < 2:
            raise ConstructionError(f"sparse set size j={self.j} < 2")
        if self.i is not None and self.i < 2:
            raise ConstructionError(f"dense set size i={self.i} < 2")

    @property
    def mode(self) -> str:
        return "T" if self.i is None else "R"


@dataclass(frozen=True)
class LevelSet:
    """One enumeration level: key-unique members of a common order."""

    order: int
    members: tuple[tuple[CanonKey, Graph], ...]

    def __len__(self) -> int:
        return len(self.members)

    def graphs(self) -> list[Graph]:
        return [g for _, g in self.members]


class LevelCardinalityExceeded(Exception):
    """Raised when a level outgrows the configured memory guard."""

    def __init__(self, order: int, limit: int):
        super().__init__(f"level at order {order} exceeds cardinality limit {limit}")
        self.order = order
        self.limit = limit


def verify_membership(g: Graph, spec: ProblemSpec) -> bool:
    """Full unrestricted check that g belongs to the level of its order.

    Used to validate external inputs and resumed checkpoints; the search
    itself only ever tests sets through the newly added vertex.
    """
    if not is_triangle_free(g):
        return False
    if has_k_sparse_set(g, spec.k, spec.j) is not None:
        return False
    if spec.i is not None and has_k_dense_set(g, spec.k, spec.i) is not None:
        return False
    return True


def find_forbidden_set(g: Graph, spec: ProblemSpec):
    """Why g fails membership: ("triangle"|"sparse"|"dense", mask), or None."""
    adj = g.adj
    for u in range(g.order):
        row = adj[u]
        rest = row >> (u + 1)
        base = u + 1
        while rest:
            low = rest & -rest
            w = base + low.bit_length() - 1
            common = row & adj[w]
            if common:
                x = (common & -common).bit_length() - 1
                return "triangle", (1 << u) | (1 << w) | (1 << x)
            rest ^= low
    witness = has_k_sparse_set(g, spec.k, spec.j)
    if witness is not None:
        return "sparse", witness.set
    if spec.i is not None:
        dense = has_k_dense_set(g, spec.k, spec.i)
        if dense is not None:
            return "dense", dense.set
    return None


def initial_level(spec: ProblemSpec) -> LevelSet:
    """The order-1 level: K1 (always a member for j, i >= 2)."""
    g = single_vertex()
    if not verify_membership(g, spec):
        return LevelSet(1, ())
    key, canon = canonical_graph(g)
    return LevelSet(1, ((key, canon),))


def surviving_extension_sets(g: Graph, spec: ProblemSpec) -> list[VertexSet]:
    """Independent sets of g whose extension survives the forbidden-set checks."""
    return _kernels.surviving_sets(g.adj, g.order, spec.k, spec.j, spec.i,
                                   spec.i is not None)


def extend_graph(g: Graph, spec: ProblemSpec) -> list[Graph]:
    """All surviving one-vertex extensions of g, in attachment-set order.

    Isomorphic children produced by different attachment sets are not
    deduplicated here; that happens during the level merge.
    """
    return [add_vertex(g, s) for s in surviving_extension_sets(g, spec)]


def reject_extension_slow(g: Graph, spec: ProblemSpec, s: VertexSet) -> bool:
    """Reference check for one extension, via the public search API only.

    True when the child formed by attaching a new vertex to ``s`` contains
    a forbidden set through that vertex.  Tests use this to pin the kernel.
    """
    child = add_vertex(g, s)
    v = g.order
    if has_k_sparse_set_containing(child, v, spec.k, spec.j) is not None:
        return True
    if spec.i is not None:
        if has_k_dense_set_containing(child, v, spec.k, spec.i) is not None:
            return True
    return False


def _extend_entries(args):
    """Worker task: canonical (key, adjacency) pairs for all surviving children."""
    adj, order, k, j, i = args
    out = []
    parent = Graph(order, adj)
    for s in _kernels.surviving_sets(adj, order, k, j, i, i is not None):
        key, canon = canonical_graph(add_vertex(parent, s))
        out.append((key, canon.adj))
    return out


def level_at(spec: ProblemSpec, order: int, *, workers: int = 1,
             max_cardinality: int | None = None) -> LevelSet:
    """The level of the given order, grown from K1 (empty once the search dies)."""
    level = initial_level(spec)
    while level.order < order and len(level) > 0:
        level = level_step(level, spec, workers=workers, max_cardinality=max_cardinality)
    if level.order < order:
        return LevelSet(order, ())
    return level


def level_step(level: LevelSet, spec: ProblemSpec, *, workers: int = 1,
               max_cardinality: int | None = None) -> LevelSet:
    """Extend every member by one vertex and deduplicate the next level.

    Output is identical for any ``workers`` value: children are keyed by
    canonical form, all writers of a key carry the same canonically labeled
    graph, and members are sorted by key at the end.
    """
    next_order = level.order + 1
    tasks = [(g.adj, g.order, spec.k, spec.j, spec.i) for _, g in level.members]
    merged: dict[CanonKey, tuple[int, ...]] = {}

    def absorb(entries) -> None:
        for key, adj in entries:
            merged.setdefault(key, adj)
        if max_cardinality is not None and len(merged) > max_cardinality:
            raise LevelCardinalityExceeded(next_order, max_cardinality)

    if workers <= 1 or len(tasks) < 2:
        for task in tasks:
            absorb(_extend_entries(task))
    else:
        with multiprocessing.Pool(processes=workers) as pool:
            for entries in pool.imap_unordered(_extend_entries, tasks,
                                               chunksize=max(1, len(tasks) // (workers * 8))):
                absorb(entries)

    members = tuple((key, Graph(next_order, adj))
                    for key, adj in sorted(merged.items()))
    return LevelSet(next_order, members)
