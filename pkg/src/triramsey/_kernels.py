"""Hot kernels for the level search: extension generation and child filtering.

Nearly all search time goes into enumerating the independent sets of a parent
graph and deciding, per child, whether the new vertex completes a forbidden
set.  When numba is importable these run as compiled kernels over int64
bitmask arrays; otherwise equivalent pure-Python paths produce identical
output, only slower.  Both paths are cross-checked by the test suite.

Masks stay below 2**33 (MAX_N + 1 bits), so int64 arithmetic never overflows.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        return wrap


@njit(cache=True)
def _popcount(x):
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    x = x + (x >> 8)
    x = x + (x >> 16)
    x = x + (x >> 32)
    return x & 0x7F


@njit(cache=True)
def _independent_sets(adj, n, buf):
    """Fill ``buf`` with every independent-set mask, ascending.

    Doubling over the vertices: after vertex v the prefix holds all
    independent subsets of {0..v}.  Returns the count, or -1 when ``buf``
    is too small (caller grows it and retries).
    """
    count = 1
    buf[0] = 0
    for v in range(n):
        row = adj[v]
        bit = np.int64(1) << v
        base = count
        for idx in range(base):
            s = buf[idx]
            if row & s == 0:
                if count >= buf.shape[0]:
                    return -1
                buf[count] = s | bit
                count += 1
    return count


@njit(cache=True)
def _exists_sparse_containing(adj, m, k, size, v):
    """True iff some k-sparse set of exactly ``size`` vertices contains v.

    Branch and bound over a candidate mask whose invariant is that every
    member can still join the chosen set; joins only ever raise internal
    degrees, so dropped candidates stay dropped.  Branch vertex is the
    highest-degree candidate; cand cardinality prunes short branches.
    """
    if size > m:
        return False
    if size <= 1:
        return True
    chosen = np.int64(1) << v
    # u can join {v} unless it is adjacent to v and k == 0.
    cand = np.int64(0)
    for u in range(m):
        if u != v and (adj[u] >> v & 1) <= k:
            cand |= np.int64(1) << u

    order = np.empty(m, np.int64)
    degs = np.empty(m, np.int64)
    for u in range(m):
        order[u] = u
        degs[u] = _popcount(adj[u])
    for a in range(1, m):
        key = order[a]
        kd = degs[key]
        b = a - 1
        while b >= 0 and degs[order[b]] < kd:
            order[b + 1] = order[b]
            b -= 1
        order[b + 1] = key

    stack_chosen = np.empty(2 * m + 4, np.int64)
    stack_cand = np.empty(2 * m + 4, np.int64)
    stack_chosen[0] = chosen
    stack_cand[0] = cand
    sp = 1
    while sp > 0:
        sp -= 1
        chosen = stack_chosen[sp]
        cand = stack_cand[sp]
        have = _popcount(chosen)
        if have + _popcount(cand) < size:
            continue
        u = -1
        for oi in range(m):
            cu = order[oi]
            if cand >> cu & 1:
                u = cu
                break
        bu = np.int64(1) << u
        stack_chosen[sp] = chosen
        stack_cand[sp] = cand & ~bu
        sp += 1
        new_chosen = chosen | bu
        if have + 1 == size:
            return True
        new_cand = cand & ~bu
        if _popcount(adj[u] & new_chosen) == k:
            new_cand &= ~adj[u]
        inside = adj[u] & chosen
        while inside:
            low = inside & -inside
            w = _popcount(low - 1)
            if _popcount(adj[w] & new_chosen) == k:
                new_cand &= ~adj[w]
            inside ^= low
        touched = new_cand & adj[u]
        while touched:
            low = touched & -touched
            x = _popcount(low - 1)
            if _popcount(adj[x] & new_chosen) > k:
                new_cand &= ~low
            touched ^= low
        stack_chosen[sp] = new_chosen
        stack_cand[sp] = new_cand
        sp += 1
    return False


@njit(cache=True)
def _filter_children(adj, n, sets, nsets, k, j, i, check_dense, keep):
    """keep[t] = 1 iff attaching a new vertex to sets[t] creates no forbidden set."""
    m = n + 1
    vbit = np.int64(1) << n
    child = np.empty(m, np.int64)
    comp = np.empty(m, np.int64)
    full = (np.int64(1) << m) - 1
    for t in range(nsets):
        s = sets[t]
        for u in range(n):
            if s >> u & 1:
                child[u] = adj[u] | vbit
            else:
                child[u] = adj[u]
        child[n] = s
        ok = not _exists_sparse_containing(child, m, k, j, n)
        if ok and check_dense:
            for u in range(m):
                comp[u] = full & ~child[u] & ~(np.int64(1) << u)
            ok = not _exists_sparse_containing(comp, m, k, i, n)
        keep[t] = 1 if ok else 0


# ---------------------------------------------------------------------------
# Pure-Python mirrors (used when numba is unavailable, and by agreement tests)
# ---------------------------------------------------------------------------


def independent_sets_py(adj: tuple[int, ...], n: int) -> list[int]:
    sets = [0]
    for v in range(n):
        row = adj[v]
        bit = 1 << v
        sets.extend([s | bit for s in sets if not row & s])
    return sets


def exists_sparse_containing_py(adj, m: int, k: int, size: int, v: int) -> bool:
    if size > m:
        return False
    if size <= 1:
        return True
    chosen = 1 << v
    cand = 0
    for u in range(m):
        if u != v and (adj[u] >> v & 1) <= k:
            cand |= 1 << u
    order = sorted(range(m), key=lambda u: (-adj[u].bit_count(), u))

    def dfs(chosen: int, cand: int, have: int) -> bool:
        if have + cand.bit_count() < size:
            return False
        u = next(cu for cu in order if cand >> cu & 1)
        bu = 1 << u
        new_chosen = chosen | bu
        if have + 1 == size:
            return True
        new_cand = cand & ~bu
        if (adj[u] & new_chosen).bit_count() == k:
            new_cand &= ~adj[u]
        inside = adj[u] & chosen
        while inside:
            low = inside & -inside
            w = low.bit_length() - 1
            if (adj[w] & new_chosen).bit_count() == k:
                new_cand &= ~adj[w]
            inside ^= low
        touched = new_cand & adj[u]
        while touched:
            low = touched & -touched
            x = low.bit_length() - 1
            if (adj[x] & new_chosen).bit_count() > k:
                new_cand &= ~low
            touched ^= low
        if dfs(new_chosen, new_cand, have + 1):
            return True
        return dfs(chosen, cand & ~bu, have)

    return dfs(chosen, cand, 1)


def _surviving_sets_py(adj, n, k, j, i, check_dense):
    full = (1 << (n + 1)) - 1
    vnew = n
    out = []
    for s in independent_sets_py(adj, n):
        child = [adj[u] | (1 << vnew) if s >> u & 1 else adj[u] for u in range(n)]
        child.append(s)
        if exists_sparse_containing_py(child, n + 1, k, j, vnew):
            continue
        if check_dense:
            comp = [full & ~child[u] & ~(1 << u) for u in range(n + 1)]
            if exists_sparse_containing_py(comp, n + 1, k, i, vnew):
                continue
        out.append(s)
    return out


def _surviving_sets_numba(adj, n, k, j, i, check_dense):
    rows = np.array(adj, dtype=np.int64) if n else np.empty(0, np.int64)
    cap = 1 << 12
    while True:
        buf = np.empty(cap, np.int64)
        count = _independent_sets(rows, n, buf)
        if count >= 0:
            break
        cap *= 4
    sets = buf[:count]
    keep = np.empty(count, np.uint8)
    _filter_children(rows, n, sets, count, k, j, i if i is not None else 0,
                     check_dense, keep)
    return [int(sets[t]) for t in range(count) if keep[t]]


def surviving_sets(adj: tuple[int, ...], n: int, k: int, j: int,
                   i: int | None, check_dense: bool) -> list[int]:
    """Independent sets S of the parent whose one-vertex extension survives.

    Ascending mask order; a set survives when the extended graph has no
    k-sparse j-set through the new vertex and (when ``check_dense``) no
    k-dense i-set through it either.
    """
    if HAVE_NUMBA:
        return _surviving_sets_numba(adj, n, k, j, i, check_dense)
    return _surviving_sets_py(adj, n, k, j, i, check_dense)
