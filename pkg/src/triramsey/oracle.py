"""Brute-force ground truth for small orders.

Everything here trades time for independence: labeled-graph sweeps, orbit
marking under all vertex permutations, and plain subset enumeration.  None
of it shares logic with the production search, canonical labeling, or defect
modules, which is the point -- tests compare the two sides.
"""

from __future__ import annotations

import itertools

from .graphs import Graph

#: Hard order cap for the labeled sweep (2^{n(n-1)/2} masks, n! orbit work).
SWEEP_LIMIT = 8
#: Hard order cap for permutation-based isomorphism.
ISO_LIMIT = 9


def _edge_slots(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _permutation_slot_maps(n: int) -> list[list[int]]:
    """For every vertex permutation, where each edge slot lands."""
    slots = _edge_slots(n)
    position = {e: idx for idx, e in enumerate(slots)}
    maps = []
    for perm in itertools.permutations(range(n)):
        maps.append([position[(perm[u], perm[v])] if perm[u] < perm[v]
                     else position[(perm[v], perm[u])] for u, v in slots])
    return maps


def _mark_orbit(mask: int, slot_maps: list[list[int]], visited: bytearray) -> None:
    for slot_map in slot_maps:
        rest = mask
        image = 0
        while rest:
            low = rest & -rest
            image |= 1 << slot_map[low.bit_length() - 1]
            rest ^= low
        visited[image >> 3] |= 1 << (image & 7)


def _seen(mask: int, visited: bytearray) -> bool:
    return bool(visited[mask >> 3] >> (mask & 7) & 1)


def enumerate_all_triangle_free(n: int) -> list[Graph]:
    """One representative per isomorphism class of triangle-free order-n graphs.

    Sweeps every labeled graph by deciding edge slots high to low with
    triangle rejection, so triangle-free edge masks appear in ascending
    order; the first mask of each permutation orbit is kept (smallest
    labeled encoding) and the rest of the orbit is marked visited.
    Takes seconds up to n = 7 and a few minutes at the n = 8 cap.
    """
    if n > SWEEP_LIMIT:
        raise ValueError(f"labeled sweep refuses order {n} > {SWEEP_LIMIT}")
    if n < 0:
        raise ValueError("order must be non-negative")
    if n == 0:
        return [Graph(0, ())]
    slots = _edge_slots(n)
    slot_maps = _permutation_slot_maps(n)
    visited = bytearray((1 << len(slots)) // 8 + 1)
    rows = [0] * n
    reps: list[int] = []

    def sweep(slot: int, mask: int) -> None:
        if slot < 0:
            if not _seen(mask, visited):
                reps.append(mask)
                _mark_orbit(mask, slot_maps, visited)
            return
        sweep(slot - 1, mask)
        u, v = slots[slot]
        if not rows[u] & rows[v]:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            sweep(slot - 1, mask | 1 << slot)
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)

    sweep(len(slots) - 1, 0)

    graphs = []
    for mask in reps:
        adj = [0] * n
        for idx, (u, v) in enumerate(slots):
            if mask >> idx & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        graphs.append(Graph(n, tuple(adj)))
    return graphs


def count_graph_classes(n: int) -> int:
    """Number of isomorphism classes of all order-n graphs, by orbit marking."""
    if n > 6:
        raise ValueError(f"full-graph orbit count refuses order {n} > 6")
    if n <= 1:
        return 1
    slots = _edge_slots(n)
    slot_maps = _permutation_slot_maps(n)
    visited = bytearray((1 << len(slots)) // 8 + 1)
    classes = 0
    for mask in range(1 << len(slots)):
        if not _seen(mask, visited):
            classes += 1
            _mark_orbit(mask, slot_maps, visited)
    return classes


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    """Permutation search for an isomorphism; complete for order <= 9."""
    if g.order != h.order:
        return False
    n = g.order
    if n > ISO_LIMIT:
        raise ValueError(f"permutation search refuses order {n} > {ISO_LIMIT}")
    deg_g = g.degrees()
    deg_h = h.degrees()
    if sorted(deg_g) != sorted(deg_h):
        return False
    used = [False] * n
    image = [0] * n

    def assign(u: int) -> bool:
        if u == n:
            return True
        for x in range(n):
            if used[x] or deg_h[x] != deg_g[u]:
                continue
            if all((g.adj[u] >> w & 1) == (h.adj[x] >> image[w] & 1) for w in range(u)):
                used[x] = True
                image[u] = x
                if assign(u + 1):
                    return True
                used[x] = False
        return False

    return assign(0)


def brute_has_triangle(g: Graph) -> bool:
    return any(g.adj[a] >> b & 1 and g.adj[b] >> c & 1 and g.adj[a] >> c & 1
               for a, b, c in itertools.combinations(range(g.order), 3))


def brute_has_k_sparse_set(g: Graph, k: int, j: int) -> bool:
    """Exhaustive scan of all j-subsets for one inducing max degree <= k."""
    if j > g.order:
        return False
    for combo in itertools.combinations(range(g.order), j):
        mask = 0
        for v in combo:
            mask |= 1 << v
        if all((g.adj[v] & mask).bit_count() <= k for v in combo):
            return True
    return False


def brute_has_k_dense_set(g: Graph, k: int, i: int) -> bool:
    """Exhaustive scan of all i-subsets for one where each misses <= k."""
    if i > g.order:
        return False
    floor = i - 1 - k
    for combo in itertools.combinations(range(g.order), i):
        mask = 0
        for v in combo:
            mask |= 1 << v
        if all((g.adj[v] & mask).bit_count() >= floor for v in combo):
            return True
    return False


def brute_membership(g: Graph, k: int, j: int, i: int | None = None) -> bool:
    """Exhaustive version of the level membership predicate."""
    if brute_has_triangle(g):
        return False
    if brute_has_k_sparse_set(g, k, j):
        return False
    if i is not None and brute_has_k_dense_set(g, k, i):
        return False
    return True


def brute_alpha_k(g: Graph, k: int) -> int:
    for j in range(g.order, 0, -1):
        if brute_has_k_sparse_set(g, k, j):
            return j
    return 0


def matches_up_to_isomorphism(left: list[Graph], right: list[Graph]) -> bool:
    """True when the two lists hold the same isomorphism classes, 1:1."""
    if len(left) != len(right):
        return False
    remaining = list(range(len(right)))
    for g in left:
        for pos, idx in enumerate(remaining):
            if brute_isomorphic(g, right[idx]):
                del remaining[pos]
                break
        else:
            return False
    return True
