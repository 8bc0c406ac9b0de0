"""Level orderings rooted at an edge, with sibling and cousin structure.

Rooting a connected graph at an edge ``xy`` partitions the vertices into
levels by distance to the edge.  The constructive coloring algorithms
color levels from the deepest down to level 1 and finish with ``x`` and
``y``, consulting two relaxations of the distance-2/3 conflict sets:

* two vertices are *siblings* when they are non-adjacent, lie on the
  same level ``i >= 1`` and share a neighbor one level down;
* two vertices at distance 3 are *cousins* when on every path of length
  3 between them some interior vertex adjacent to one of the two lies on
  a level strictly below both endpoints' levels.

A vertex can have several siblings (e.g. next to the root edge of a
triangular prism), so the full sets are exposed alongside the
single-sibling accessor.
"""

from __future__ import annotations

from .graph import Graph, GraphError


class LevelOrdering:
    """Levels, siblings and cousins of a connected graph rooted at an edge."""

    __slots__ = ("g", "root_edge", "level", "levels", "sibling_sets", "cousin_sets")

    def __init__(self, g: Graph, root_edge):
        x, y = root_edge
        if not g.has_edge(x, y):
            raise GraphError(f"({x}, {y}) is not an edge")
        if not g.is_connected():
            raise GraphError("level ordering requires a connected graph")
        self.g = g
        self.root_edge = (x, y)
        self.level = [min(g.dist[x][v], g.dist[y][v]) for v in range(g.n)]
        depth = max(self.level) if g.n else 0
        self.levels = [[] for _ in range(depth + 1)]
        for v in range(g.n):
            self.levels[self.level[v]].append(v)
        self.sibling_sets = self._compute_siblings()
        self.cousin_sets = self._compute_cousins()

    def _compute_siblings(self):
        g, level = self.g, self.level
        sets = [set() for _ in range(g.n)]
        for p in range(g.n):
            ups = [w for w in g.adj[p] if level[w] == level[p] + 1]
            for a in range(len(ups)):
                for b in range(a + 1, len(ups)):
                    u, v = ups[a], ups[b]
                    if not g.has_edge(u, v):
                        sets[u].add(v)
                        sets[v].add(u)
        return [frozenset(s) for s in sets]

    def _compute_cousins(self):
        g, level = self.g, self.level
        sets = [set() for _ in range(g.n)]
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if g.dist[u][v] != 3:
                    continue
                floor = min(level[u], level[v])
                ok = True
                for p in g.adj[u]:
                    if g.dist[p][v] != 2:
                        continue
                    for q in g.adj[v]:
                        if q != p and g.has_edge(p, q) and g.dist[u][q] == 2:
                            if level[p] >= floor and level[q] >= floor:
                                ok = False
                                break
                    if not ok:
                        break
                if ok:
                    sets[u].add(v)
                    sets[v].add(u)
        return [frozenset(s) for s in sets]

    # -- accessors ---------------------------------------------------------

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def siblings(self, v: int) -> frozenset:
        return self.sibling_sets[v]

    def sibling(self, v: int):
        """The sibling of ``v`` when unique, else the smallest, else None."""
        s = self.sibling_sets[v]
        return min(s) if s else None

    def cousins(self, v: int) -> frozenset:
        return self.cousin_sets[v]

    def are_siblings(self, u: int, v: int) -> bool:
        return v in self.sibling_sets[u]

    def are_cousins(self, u: int, v: int) -> bool:
        return v in self.cousin_sets[u]


def level_ordering(g: Graph, edge) -> LevelOrdering:
    """Build the :class:`LevelOrdering` of ``g`` rooted at ``edge``."""
    return LevelOrdering(g, edge)


def lowest_root_edge(g: Graph):
    """The lexicographically first edge (deterministic default root)."""
    if not g.edges:
        raise GraphError("graph has no edges")
    return g.edges[0]


def lowest_low_degree_root_edge(g: Graph):
    """First edge whose endpoints both have degree at most 2, if any."""
    for u, v in g.edges:
        if g.degree(u) <= 2 and g.degree(v) <= 2:
            return (u, v)
    return None
