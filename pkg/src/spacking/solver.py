"""Exact decision procedure for packing colorings.

A coloring assigns vertices to slots of a radius sequence; two vertices
may share slot ``i`` only at distance greater than the slot's radius.
:func:`decide` runs depth-first backtracking over a static vertex order,
checking slot feasibility in O(1) against per-slot bitmasks of blocked
vertices.  UNSAT is certified only by exhausted search; an optional node
budget yields an explicit ``unknown`` outcome instead.

Solver calls own their mutable search state, so any number of calls may
run concurrently on distinct graphs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .graph import Graph
from .sequences import SSequence, packing_family, prefix

SAT = "sat"
UNSAT = "unsat"
UNKNOWN = "unknown"


class SolverError(ValueError):
    """Raised for invalid solver input (bad slot indices and the like)."""


class SearchBudgetExceeded(RuntimeError):
    """Raised when a computation cannot finish within its node budget.

    ``lower_bound`` carries the best proven bound so far, when the
    computation has one (e.g. a partially scanned chromatic length).
    """

    def __init__(self, message, lower_bound=None, best=None):
        super().__init__(message)
        self.lower_bound = lower_bound
        self.best = best


@dataclass
class SearchStats:
    """Backtracking effort: node count, deepest level, wall time."""

    nodes: int = 0
    max_depth: int = 0
    elapsed: float = 0.0


@dataclass(frozen=True)
class Violation:
    """One broken packing constraint: both vertices, their slot, distance."""

    u: int
    v: int
    slot: int
    dist: object


@dataclass
class DecideResult:
    status: str
    coloring: object  # list of slot indices when SAT, else None
    stats: SearchStats

    def __bool__(self):
        return self.status == SAT


@dataclass
class Max123Result:
    size: int
    coloring: object  # partial assignment under radii (1, 2, 3)
    proven_optimal: bool


def verify_coloring(g: Graph, s: SSequence, assignment) -> list:
    """Check a (possibly partial) assignment; return all violations.

    ``assignment`` maps vertex index to slot index or None.  Slot indices
    outside the sequence raise :class:`SolverError`.
    """
    if len(assignment) != g.n:
        raise SolverError(
            f"assignment length {len(assignment)} != vertex count {g.n}"
        )
    k = len(s)
    by_slot = [[] for _ in range(k)]
    for v, slot in enumerate(assignment):
        if slot is None:
            continue
        if not 0 <= slot < k:
            raise SolverError(f"slot {slot} out of range for sequence {s}")
        by_slot[slot].append(v)
    violations = []
    for slot, members in enumerate(by_slot):
        radius = s[slot]
        for a in range(len(members)):
            u = members[a]
            row = g.dist[u]
            for b in range(a + 1, len(members)):
                v = members[b]
                if row[v] <= radius:
                    violations.append(Violation(u, v, slot, row[v]))
    return violations


def static_vertex_order(g: Graph) -> list:
    """Decreasing degree, then decreasing eccentricity, ties by index."""
    return sorted(range(g.n), key=lambda v: (-g.degree(v), -g.eccentricity(v), v))


def decide(g: Graph, s: SSequence, max_nodes=None) -> DecideResult:
    """Search for a packing coloring of ``g`` for the radius sequence ``s``.

    Returns SAT with a witness (which always passes
    :func:`verify_coloring`), UNSAT after exhaustive search, or UNKNOWN
    when ``max_nodes`` backtracking nodes were spent first.

    Slots sharing a radius are interchangeable, so the search only ever
    opens the first empty slot of each equal-radius run; this prunes the
    factorial blowup of sequences like (1,2,2,2,2,2,2) without changing
    the SAT/UNSAT answer.
    """
    t0 = time.perf_counter()
    stats = SearchStats()
    n = g.n
    if n == 0:
        stats.elapsed = time.perf_counter() - t0
        return DecideResult(SAT, [], stats)

    k = len(s)
    order = static_vertex_order(g)
    balls = [g.ball_masks(r) for r in s.terms]
    masks = [0] * k
    counts = [0] * k
    assignment = [None] * n
    terms = s.terms
    budget = max_nodes if max_nodes is not None else -1

    def search(pos):
        stats.nodes += 1
        if budget >= 0 and stats.nodes > budget:
            raise SearchBudgetExceeded(f"node budget {max_nodes} exceeded")
        if pos > stats.max_depth:
            stats.max_depth = pos
        if pos == n:
            return True
        v = order[pos]
        vbit = 1 << v
        for i in range(k):
            if counts[i]:
                if masks[i] & vbit:
                    continue
            elif i and terms[i] == terms[i - 1] and not counts[i - 1]:
                continue  # later empty slot of an equal-radius run
            assignment[v] = i
            saved = masks[i]
            masks[i] |= balls[i][v]
            counts[i] += 1
            if search(pos + 1):
                return True
            masks[i] = saved
            counts[i] -= 1
            assignment[v] = None
        return False

    try:
        found = search(0)
    except SearchBudgetExceeded:
        stats.elapsed = time.perf_counter() - t0
        return DecideResult(UNKNOWN, None, stats)
    stats.elapsed = time.perf_counter() - t0
    if found:
        return DecideResult(SAT, assignment, stats)
    return DecideResult(UNSAT, None, stats)


def chromatic_length(g: Graph, family: SSequence, max_nodes=None):
    """Smallest prefix length of ``family`` that colors ``g``.

    Returns None when even the full family fails ("exceeds family").
    Monotone in the prefix length, so the linear scan is exact.  Raises
    :class:`SearchBudgetExceeded` if any prefix decision comes back
    unknown.
    """
    for j in range(1, len(family) + 1):
        result = decide(g, prefix(family, j), max_nodes=max_nodes)
        if result.status == SAT:
            return j
        if result.status == UNKNOWN:
            raise SearchBudgetExceeded(
                f"undecided at prefix length {j}", lower_bound=j
            )
    return None


def packing_chromatic(g: Graph, max_nodes=None) -> int:
    """Least k such that ``g`` has a coloring for radii (1, 2, ..., k).

    Disconnected graphs are handled natively (cross-component
    constraints are vacuous), which equals the maximum over components.
    Always terminates: k = n suffices since every slot may hold a single
    vertex.  Raises :class:`SearchBudgetExceeded` with the proven lower
    bound when the budget runs out.
    """
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        result = decide(g, packing_family(k), max_nodes=max_nodes)
        if result.status == SAT:
            return k
        if result.status == UNKNOWN:
            raise SearchBudgetExceeded(
                f"undecided at k={k}", lower_bound=k
            )
    raise AssertionError("unreachable: (1..n) always colors a graph")


_MAX123 = SSequence((1, 2, 3))


def max_123_subset(g: Graph, max_nodes=None) -> Max123Result:
    """Most vertices coverable by disjoint 1-, 2- and 3-packings.

    Exact branch and bound; the witness passes :func:`verify_coloring`
    under radii (1, 2, 3).  With a node budget the best coloring found
    so far is returned with ``proven_optimal`` False.
    """
    n = g.n
    if n == 0:
        return Max123Result(0, [], True)
    order = static_vertex_order(g)
    balls = [g.ball_masks(r) for r in (1, 2, 3)]
    masks = [0, 0, 0]
    assignment = [None] * n
    best = {"size": 0, "coloring": [None] * n}
    nodes = 0
    budget = max_nodes if max_nodes is not None else -1

    def search(pos, covered):
        nonlocal nodes
        nodes += 1
        if budget >= 0 and nodes > budget:
            raise SearchBudgetExceeded("node budget exceeded", best=best["size"])
        if covered + (n - pos) <= best["size"]:
            return
        if pos == n:
            best["size"] = covered
            best["coloring"] = assignment.copy()
            return
        v = order[pos]
        vbit = 1 << v
        for i in range(3):
            if masks[i] & vbit:
                continue
            assignment[v] = i
            saved = masks[i]
            masks[i] |= balls[i][v]
            search(pos + 1, covered + 1)
            masks[i] = saved
            assignment[v] = None
        # leave v uncovered
        search(pos + 1, covered)

    try:
        search(0, 0)
        proven = True
    except SearchBudgetExceeded:
        proven = False
    return Max123Result(best["size"], best["coloring"], proven)


def coloring_to_json(s: SSequence, assignment) -> dict:
    """Witness wire format: ``{"sequence": [...], "assignment": [...]}``."""
    return {"sequence": list(s.terms), "assignment": list(assignment)}


def coloring_from_json(payload):
    """Inverse of :func:`coloring_to_json`; returns (sequence, assignment)."""
    s = SSequence(tuple(payload["sequence"]))
    assignment = [None if a is None else int(a) for a in payload["assignment"]]
    return s, assignment
