"""Connected cubic graph generation and exact canonical forms.

:func:`canonical_form` computes an exact isomorphism certificate by
iterative partition refinement (vertex classes split on neighboring
class multisets) followed by backtracking individualization that
minimizes the relabeled adjacency bit string.  No hashing shortcuts:
equal bytes iff isomorphic.

:func:`enumerate_cubic` generates one representative per isomorphism
class of connected cubic graphs of a given (even) order.  It extends the
lowest-index degree-deficient vertex with neighbor sets in increasing
index order, draws fresh vertices lowest-first, and prunes any partial
graph whose attached part was already visited (compared by canonical
form), which keeps the search tree near one node per partial class.
Counts match the published connected cubic census (1, 2, 5, 19, 85,
509, 4060 for orders 4..16).

Generation is single-threaded; emitted graphs are immutable and may be
consumed by parallel workers.
"""

from __future__ import annotations

from .graph import Graph, GraphError, build_graph
from .graph6 import iter_graph6

_CANONICAL_N_LIMIT = 64


def _mask_bits(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _refine(n, nbrs, colors):
    """Stable partition refinement; color values are label-invariant."""
    ncolors = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in nbrs[v])))
            for v in range(n)
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [palette[sigs[v]] for v in range(n)]
        nnew = len(palette)
        if nnew == ncolors:
            return new
        colors = new
        ncolors = nnew


def _leaf_key(n, masks, colors):
    # colors form a bijection vertex -> position; pack the upper triangle
    # (column-major) of the relabeled adjacency matrix into one integer
    inv = [0] * n
    for v in range(n):
        inv[colors[v]] = v
    bits = 0
    for j in range(1, n):
        mj = masks[inv[j]]
        for i in range(j):
            bits = (bits << 1) | ((mj >> inv[i]) & 1)
    return bits


def _canonical_bits(n, masks):
    """Minimum relabeled adjacency bit string over consistent labelings."""
    if n == 0:
        return 0
    nbrs = [_mask_bits(masks[v]) for v in range(n)]
    best = None

    def descend(colors):
        nonlocal best
        cells = {}
        for v in range(n):
            cells.setdefault(colors[v], []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            key = _leaf_key(n, masks, colors)
            if best is None or key < best:
                best = key
            return
        tried = []
        for v in target:
            # transposition-equivalent vertices explore identical subtrees
            mv = masks[v]
            if any(
                masks[u] & ~(1 << v) == mv & ~(1 << u) for u in tried
            ):
                continue
            tried.append(v)
            split = [2 * c for c in colors]
            split[v] -= 1
            descend(_refine(n, nbrs, split))

    descend(_refine(n, nbrs, [0] * n))
    return best


def _graph_masks(g: Graph):
    return list(g.adj_masks())


def canonical_form(g: Graph) -> bytes:
    """Canonical certificate: vertex count plus relabeled adjacency bits.

    Equal for isomorphic graphs, distinct otherwise.  Limited to
    n <= 64 (backtracking over vertex classes; plenty for desk scale).
    """
    if g.n > _CANONICAL_N_LIMIT:
        raise GraphError(f"canonical_form limited to {_CANONICAL_N_LIMIT} vertices")
    bits = _canonical_bits(g.n, _graph_masks(g))
    nbits = g.n * (g.n - 1) // 2
    return bytes([g.n]) + int(bits).to_bytes((nbits + 7) // 8 or 1, "big")


def canonical_key(g: Graph):
    """Hashable form of :func:`canonical_form` (int pair, no packing)."""
    if g.n > _CANONICAL_N_LIMIT:
        raise GraphError(f"canonical_form limited to {_CANONICAL_N_LIMIT} vertices")
    return g.n, _canonical_bits(g.n, _graph_masks(g))


def enumerate_cubic(n: int):
    """Yield the connected cubic graphs of order ``n`` up to isomorphism.

    Odd orders are rejected (no cubic graph exists).  Practical through
    n = 16 on one core; intended desk scale is n <= 14.
    """
    if n % 2:
        raise GraphError(f"no cubic graph of odd order {n}")
    if n < 4:
        raise GraphError(f"smallest cubic graph has order 4, got {n}")
    yield from _generate_cubic(n)


def _generate_cubic(n):
    masks = [0] * n
    deg = [0] * n
    seen = set()
    found = []

    def add_edge(u, w):
        masks[u] |= 1 << w
        masks[w] |= 1 << u
        deg[u] += 1
        deg[w] += 1

    def remove_edge(u, w):
        masks[u] &= ~(1 << w)
        masks[w] &= ~(1 << u)
        deg[u] -= 1
        deg[w] -= 1

    def next_round(t):
        u = -1
        for v in range(t):
            if deg[v] < 3:
                u = v
                break
        if u < 0:
            if t == n:
                edges = [
                    (v, w)
                    for v in range(n)
                    for w in _mask_bits(masks[v])
                    if w > v
                ]
                found.append(build_graph(n, edges))
            return  # t < n: attached part saturated, rest unreachable
        complete(u, -1, t)

    def complete(u, last, t):
        if deg[u] == 3:
            key = _canonical_bits(t, masks[:t])
            if (t, key) in seen:
                return
            seen.add((t, key))
            next_round(t)
            return
        au = masks[u]
        for w in range(last + 1, t):
            if w != u and deg[w] < 3 and not (au >> w) & 1:
                add_edge(u, w)
                complete(u, w, t)
                remove_edge(u, w)
        if t < n:
            add_edge(u, t)
            complete(u, t, t + 1)
            remove_edge(u, t)

    next_round(1)
    return found


def filter_bipartite(graphs):
    """Pass through only the bipartite members of a graph stream."""
    from .graph import bipartition

    for g in graphs:
        if bipartition(g) is not None:
            yield g


def graphs_from_catalog(path, n=None, strict: bool = True):
    """Graphs from a graph6 catalog file, optionally filtered by order."""
    for g in iter_graph6(path, strict=strict):
        if n is None or g.n == n:
            yield g
