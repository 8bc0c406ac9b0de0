"""Simple undirected graphs with precomputed all-pairs distances.

Vertices are integers ``0..n-1``.  A :class:`Graph` is immutable after
construction and safe to share between threads or worker processes; all
mutating-style operations (:func:`subdivide`, permutations) return new
graphs.  Distances between vertices in different components are the
distinguished value :data:`INFINITE`, which compares greater than any
packing radius, so packing constraints across components are vacuous.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

INFINITE = float("inf")

_NAMED_FIXTURES = ("petersen", "k4", "fbip14", "f1p16", "g1222")


class GraphError(ValueError):
    """Raised for malformed graph input (bad edges, unknown fixture names)."""


class Graph:
    """Undirected simple graph with eager BFS distance matrix.

    Attributes:
        n: vertex count.
        edges: sorted tuple of edges, each edge a pair ``(u, v)`` with
            ``u < v``.
        adj: per-vertex sorted neighbor tuples.
        dist: ``n x n`` matrix of hop distances; ``INFINITE`` marks
            disconnected pairs.
    """

    __slots__ = ("n", "edges", "adj", "dist", "_adj_masks", "_ball_masks")

    def __init__(self, n, edges, adj, dist):
        self.n = n
        self.edges = edges
        self.adj = adj
        self.dist = dist
        self._adj_masks = None
        self._ball_masks = {}

    # -- basic queries ---------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> tuple:
        return tuple(len(nbrs) for nbrs in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def distance(self, u: int, v: int):
        return self.dist[u][v]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return all(d != INFINITE for d in self.dist[0])

    def adj_masks(self) -> list:
        """Neighbor sets as bitmasks (bit ``u`` set in mask ``v`` iff edge)."""
        if self._adj_masks is None:
            masks = [0] * self.n
            for u, v in self.edges:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            self._adj_masks = masks
        return self._adj_masks

    def ball_masks(self, radius: int) -> list:
        """Bitmask per vertex of all vertices within the given distance.

        The vertex itself is included.  Used by the solver for O(1)
        conflict tests against a slot's occupied region.
        """
        masks = self._ball_masks.get(radius)
        if masks is None:
            masks = [0] * self.n
            for v in range(self.n):
                m = 0
                row = self.dist[v]
                for u in range(self.n):
                    if row[u] <= radius:
                        m |= 1 << u
                masks[v] = m
            self._ball_masks[radius] = masks
        return masks

    def eccentricity(self, v: int):
        finite = [d for d in self.dist[v] if d != INFINITE]
        return max(finite) if finite else 0

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


@dataclass(frozen=True)
class GraphClass:
    """Structural summary of a graph.

    ``is_3_irregular`` means no two adjacent vertices both have degree 3.
    ``diameter`` is the maximum finite distance, or ``INFINITE`` when the
    graph is disconnected.
    """

    max_degree: int
    is_cubic: bool
    is_subcubic: bool
    is_3_irregular: bool
    is_bipartite: bool
    diameter: object


def _bfs_distances(n, adj, source):
    dist = [INFINITE] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        d = dist[v] + 1
        for w in adj[v]:
            if dist[w] == INFINITE:
                dist[w] = d
                queue.append(w)
    return dist


def build_graph(n: int, edges) -> Graph:
    """Validate an edge list and build a graph with its distance matrix.

    Rejects self-loops, duplicate edges and out-of-range endpoints; the
    error message names the offending pair.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    seen = set()
    norm = []
    for e in edges:
        u, v = e
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"endpoint out of range in edge ({u}, {v})")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"duplicate edge ({key[0]}, {key[1]})")
        seen.add(key)
        norm.append(key)
    norm.sort()
    adj_lists = [[] for _ in range(n)]
    for u, v in norm:
        adj_lists[u].append(v)
        adj_lists[v].append(u)
    adj = tuple(tuple(sorted(nbrs)) for nbrs in adj_lists)
    dist = tuple(tuple(_bfs_distances(n, adj, s)) for s in range(n))
    return Graph(n, tuple(norm), adj, dist)


def classify(g: Graph) -> GraphClass:
    """Compute degree bounds, 3-irregularity, bipartiteness and diameter."""
    degs = g.degrees()
    max_degree = max(degs) if degs else 0
    is_cubic = g.n > 0 and all(d == 3 for d in degs)
    is_subcubic = max_degree <= 3
    is_3_irregular = all(not (degs[u] == 3 and degs[v] == 3) for u, v in g.edges)

    # bipartiteness via 2-coloring BFS over every component
    side = [None] * g.n
    is_bipartite = True
    for s in range(g.n):
        if side[s] is not None:
            continue
        side[s] = 0
        queue = deque([s])
        while queue and is_bipartite:
            v = queue.popleft()
            for w in g.adj[v]:
                if side[w] is None:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    is_bipartite = False
                    break

    if g.n == 0:
        diameter = 0
    elif g.is_connected():
        diameter = max(max(row) for row in g.dist)
    else:
        diameter = INFINITE
    return GraphClass(
        max_degree=max_degree,
        is_cubic=is_cubic,
        is_subcubic=is_subcubic,
        is_3_irregular=is_3_irregular,
        is_bipartite=is_bipartite,
        diameter=diameter,
    )


def bipartition(g: Graph):
    """Return the two color classes of a bipartite graph, or None."""
    side = [None] * g.n
    for s in range(g.n):
        if side[s] is not None:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if side[w] is None:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    part0 = tuple(v for v in range(g.n) if side[v] == 0)
    part1 = tuple(v for v in range(g.n) if side[v] == 1)
    return part0, part1


def subdivide(g: Graph) -> Graph:
    """Replace every edge by a path of length two.

    Original vertices keep their indices ``0..n-1``; the subdivision
    vertex of the i-th edge (in the sorted edge order of ``g.edges``)
    gets index ``n + i``.  Distances between original vertices double.
    """
    n = g.n
    edges = []
    for i, (u, v) in enumerate(g.edges):
        w = n + i
        edges.append((u, w))
        edges.append((v, w))
    return build_graph(n + len(g.edges), edges)


def subdivision_vertex(g: Graph, u: int, v: int) -> int:
    """Index in ``subdivide(g)`` of the vertex splitting edge ``(u, v)``."""
    key = (u, v) if u < v else (v, u)
    return g.n + g.edges.index(key)


def relabel(g: Graph, perm) -> Graph:
    """Apply a vertex permutation (``perm[old] = new``) to a graph."""
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs at least 1 vertex, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return build_graph(10, edges)


def _fbip14() -> Graph:
    # 14-vertex bipartite cubic graph that admits a packing coloring with
    # radii (1,2,2,2,2,2) but none with (1,2,2,2,2,3).  Frozen labeling:
    # root 0, its neighbors 1-3, middle layer 4-9, bottom layer 10-13.
    edges = [
        (0, 1), (0, 2), (0, 3),
        (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9),
        (4, 10), (4, 11),
        (7, 12), (9, 13),
        (10, 6), (10, 8),
        (11, 7), (11, 9),
        (12, 5), (12, 8),
        (13, 5), (13, 6),
    ]
    return build_graph(14, edges)


# Coloring shown for fbip14 in its source drawing, as (slot per vertex)
# under the radii (1,2,2,2,2,2): slots 0..5 = 1,2a,2b,2c,2d,2e.
FBIP14_REFERENCE_COLORING = (0, 1, 2, 3, 0, 2, 1, 3, 4, 5, 5, 4, 0, 0)


def _f1p16() -> Graph:
    # 12-vertex cubic graph made of four triangles pairwise joined by a
    # perfect matching between them; diameter 3.  Not colorable with radii
    # (1,1,3,3,3): at most one vertex can carry a radius-3 color, and each
    # triangle needs a non-radius-1 vertex.
    x1, x2, y1, y2, x3, y3, v1, v2, w1, w2, v3, w3 = range(12)
    edges = [
        (x1, x2), (x2, x3), (x3, x1),
        (y1, y2), (y2, y3), (y3, y1),
        (v1, v2), (v2, v3), (v3, v1),
        (w1, w2), (w2, w3), (w3, w1),
        (x2, y1), (x1, v1), (y3, v2), (y2, w2), (x3, w1), (w3, v3),
    ]
    return build_graph(12, edges)


def _g1222() -> Graph:
    # Order-8 3-irregular graph: two degree-3 hubs (0 and 1), joined by a
    # 2-path through vertices 2-3, and two more 2-paths through 4-5 / 6-7.
    # Labeling: 0=x1, 1=y1, 2=x, 3=y, 4=x11, 5=y11, 6=x12, 7=y12.
    edges = [
        (0, 2), (2, 3), (3, 1),
        (0, 4), (4, 5), (5, 1),
        (0, 6), (6, 7), (7, 1),
    ]
    return build_graph(8, edges)


# Coloring shown for g1222 in its source drawing, as (slot per vertex)
# under the radii (1,2,2,2): slots 0..3 = 1,2a,2b,2c.
G1222_REFERENCE_COLORING = (1, 1, 3, 2, 2, 0, 0, 3)


def fig1_schematic_graph():
    """Concrete instance of the level-ordering schematic used in tests.

    Rooted at edge (0, 1): vertices 6, 7, 8 sit at level 2, vertices 9
    and 10 at level 3.  Vertices 7 and 8 are siblings (common parent 5);
    vertex 9's cousins are exactly 8 and 10.
    """
    x, y, a, b, c, d, z, w, v, u, vp = range(11)
    edges = [
        (x, y),
        (x, a), (x, b), (y, c), (y, d),
        (a, z), (d, w), (d, v),
        (z, w), (w, u), (z, vp),
    ]
    return build_graph(11, edges)


def named_graph(name: str) -> Graph:
    """Look up a fixture graph by name.

    Accepts ``petersen``, ``k4``, ``fbip14``, ``f1p16``, ``g1222`` and the
    parametric forms ``cycle(n)`` / ``path(n)``.
    """
    key = name.strip().lower()
    if key == "petersen":
        return petersen_graph()
    if key == "k4":
        return complete_graph(4)
    if key == "fbip14":
        return _fbip14()
    if key == "f1p16":
        return _f1p16()
    if key == "g1222":
        return _g1222()
    for prefix, builder in (("cycle", cycle_graph), ("path", path_graph)):
        if key.startswith(prefix + "(") and key.endswith(")"):
            body = key[len(prefix) + 1 : -1]
            try:
                return builder(int(body))
            except ValueError as exc:
                raise GraphError(f"bad size in fixture name {name!r}") from exc
    raise GraphError(f"unknown fixture graph {name!r}")
