"""Structural queries: BFS levels, girth, bipartition, unique cycle and the
girth-5 neighbourhood properties used by the level-by-level labeler."""
from __future__ import annotations

import logging
import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, permutations

from .graph import Graph

log = logging.getLogger(__name__)

# girth of a forest; compares as +infinity in every threshold test
ACYCLIC = math.inf


class PreconditionError(ValueError):
    """An operation was called on a graph outside its hypotheses."""


class DisconnectedGraph(PreconditionError):
    pass


@dataclass(frozen=True)
class BfsTree:
    root: int
    parent: tuple  # parent[v] is None for the root
    level: tuple

    def levels(self) -> list[list[int]]:
        """Vertices grouped by distance from the root, ascending id within a level."""
        out = [[] for _ in range(max(self.level, default=-1) + 1)]
        for v, d in enumerate(self.level):
            out[d].append(v)
        return out

    def children(self, v: int) -> list[int]:
        return [w for w, p in enumerate(self.parent) if p == v]

    @property
    def height(self) -> int:
        return max(self.level, default=0)


@dataclass(frozen=True)
class UniqueCycle:
    cycle_vertices: tuple
    hanging_trees: dict = field(hash=False)


def distances_from(g: Graph, source: int) -> list:
    """Breadth-first distances; unreachable vertices get ``None``."""
    dist = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    return g.n == 0 or None not in distances_from(g, 0)


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [v for v, d in enumerate(distances_from(g, s)) if d is not None]
        for v in comp:
            seen[v] = True
        comps.append(comp)
    return comps


def bfs_tree(g: Graph, root: int) -> BfsTree:
    """BFS spanning tree from ``root``; neighbours are visited in ascending id."""
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} out of range")
    parent = [None] * g.n
    level = [None] * g.n
    level[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in sorted(g.neighbors(u)):
            if level[w] is None:
                level[w] = level[u] + 1
                parent[w] = u
                queue.append(w)
    if None in level:
        raise DisconnectedGraph(f"vertex {level.index(None)} unreachable from {root}")
    return BfsTree(root, tuple(parent), tuple(level))


def girth(g: Graph) -> float | int:
    """Length of a shortest cycle, or ``ACYCLIC`` for forests.

    One BFS per vertex; the first non-tree edge met from root ``s`` closes a
    cycle of length ``d(u) + d(w) + 1`` which is within one of the shortest
    cycle through ``s``, so the minimum over all roots is exact.
    """
    best = ACYCLIC
    for s in range(g.n):
        dist = [-1] * g.n
        par = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.neighbors(u):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    par[w] = u
                    queue.append(w)
                elif par[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def bipartition(g: Graph) -> tuple | None:
    """Side (0 or 1) per vertex, or ``None`` if ``g`` has an odd cycle."""
    side = [None] * g.n
    for s in range(g.n):
        if side[s] is not None:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if side[w] is None:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return tuple(side)


def unique_cycle(g: Graph) -> UniqueCycle | None:
    """Cycle and hanging trees of a connected graph with ``m <= n``.

    Returns ``None`` for trees.  The cycle starts at its lowest vertex and
    continues towards the smaller of that vertex's two cycle neighbours.
    """
    if not is_connected(g):
        raise DisconnectedGraph("graph is not connected")
    if g.m > g.n:
        raise PreconditionError(f"m={g.m} > n={g.n}: more than one cycle")
    if g.m < g.n:
        return None
    # peel leaves; what remains is the cycle
    deg = g.degrees()
    alive = [True] * g.n
    stack = [v for v in range(g.n) if deg[v] == 1]
    while stack:
        v = stack.pop()
        alive[v] = False
        for w in g.neighbors(v):
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    on_cycle = {v for v in range(g.n) if alive[v]}
    start = min(on_cycle)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = sorted(w for w in g.neighbors(cur) if w in on_cycle and w != prev)
        if prev is None:
            nxt = nxt[:1]
        if nxt[0] == start:
            break
        prev, cur = cur, nxt[0]
        order.append(cur)
    hanging = {}
    for x in order:
        members = {x}
        queue = deque([x])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in members and w not in on_cycle:
                    members.add(w)
                    queue.append(w)
        hanging[x] = frozenset(members)
    return UniqueCycle(tuple(order), hanging)


# ---------------------------------------------------------------------------
# neighbourhood properties of girth >= 5 graphs

OBSERVATION_SCHEMAS = {
    "i": "z; distinct x, y in N(z): N[x] & N[y] == {z}",
    "ii": "root z, level i; distinct x, y in L_i; x' in L_{i+1} & N(x); "
          "distinct y1, y2 in L_{i+1} & N(y); y1 in N(x') => y2 not in N(x')",
    "iii": "root v, level i; distinct x, y, z in L_i; x' in L_{i+1} & N(x), "
           "y1 in L_{i+1} & N(y), z1 in L_{i+1} & N(z); y1, z1 in N(x') => y1 not in N(z1)",
    "iv": "root z, level i; distinct x, y in L_i; distinct x' in L_{i+1} & N(x), "
          "y' in L_{i+1} & N(y): |L_{i+1} & N(x') & N(y')| <= 1",
    "v": "root z, level i; distinct x, y in L_i; x' in L_{i+1} & N(x), "
         "y' in L_{i+1} & N(y), x' ~ y' => N(x') & N(y') empty",
}


@dataclass
class ObservationReport:
    """Per-item outcome: ``violations[item]`` is ``None`` or the first failing tuple."""

    violations: dict
    schemas: dict = field(default_factory=lambda: dict(OBSERVATION_SCHEMAS))

    @property
    def passed(self) -> bool:
        return all(v is None for v in self.violations.values())

    def lines(self) -> list[str]:
        out = []
        for item, bad in self.violations.items():
            status = "pass" if bad is None else f"FAIL at {bad}"
            out.append(f"({item}) {status}  [{self.schemas[item]}]")
        return out


def _check_i(g):
    for z in range(g.n):
        for x, y in combinations(sorted(g.neighbors(z)), 2):
            if g.closed_neighborhood(x) & g.closed_neighborhood(y) != {z}:
                return (x, y, z)
    return None


def _level_sets(g, root):
    dist = distances_from(g, root)
    levels = {}
    for v, d in enumerate(dist):
        levels.setdefault(d, set()).add(v)
    return [levels.get(i, set()) for i in range(max(levels) + 2)]


def _check_ii(g, root, L):
    for i in range(len(L) - 1):
        nxt = L[i + 1]
        for x, y in permutations(sorted(L[i]), 2):
            for xp in sorted(g.neighbors(x) & nxt):
                for y1, y2 in permutations(sorted(g.neighbors(y) & nxt), 2):
                    if y1 in g.neighbors(xp) and y2 in g.neighbors(xp):
                        return (root, i, x, y, xp, y1, y2)
    return None


def _check_iii(g, root, L):
    for i in range(len(L) - 1):
        nxt = L[i + 1]
        for x, y, z in permutations(sorted(L[i]), 3):
            for xp in sorted(g.neighbors(x) & nxt):
                nxp = g.neighbors(xp)
                for y1 in sorted(g.neighbors(y) & nxt & nxp):
                    for z1 in sorted(g.neighbors(z) & nxt & nxp):
                        if y1 in g.neighbors(z1):
                            return (root, i, x, y, z, xp, y1, z1)
    return None


def _check_iv_v(g, root, L):
    bad_iv = bad_v = None
    for i in range(len(L) - 1):
        nxt = L[i + 1]
        for x, y in permutations(sorted(L[i]), 2):
            for xp in sorted(g.neighbors(x) & nxt):
                for yp in sorted(g.neighbors(y) & nxt):
                    common = g.neighbors(xp) & g.neighbors(yp)
                    if bad_iv is None and xp != yp and len(nxt & common) > 1:
                        bad_iv = (root, i, x, y, xp, yp)
                    if bad_v is None and yp in g.neighbors(xp) and common:
                        bad_v = (root, i, x, y, xp, yp)
    return bad_iv, bad_v


def check_observation(g: Graph) -> ObservationReport:
    """Exhaustively check the five neighbourhood properties on a connected
    graph of girth at least five.  Intended for small graphs (n <= 200)."""
    if not is_connected(g):
        raise DisconnectedGraph("graph is not connected")
    gr = girth(g)
    if gr < 5:
        raise PreconditionError(f"girth {gr} < 5")
    found = {"i": _check_i(g), "ii": None, "iii": None, "iv": None, "v": None}
    for root in range(g.n):
        L = _level_sets(g, root)
        if found["ii"] is None:
            found["ii"] = _check_ii(g, root, L)
        if found["iii"] is None:
            found["iii"] = _check_iii(g, root, L)
        if found["iv"] is None or found["v"] is None:
            iv, v = _check_iv_v(g, root, L)
            found["iv"] = found["iv"] or iv
            found["v"] = found["v"] or v
    report = ObservationReport(found)
    if not report.passed:
        log.error("neighbourhood property violated on a girth >= 5 graph: %s", report.lines())
    return report
