"""Automorphism groups by individualization-refinement.

Ordered partitions are handled as *colourings*: ``colors[v]`` is the index of
the cell holding ``v``.  Refinement keeps every split fragment inside its
parent's index range, so a vertex's cell index in any descendant partition
determines its cell in every ancestor.  This is what makes the leaf-to-leaf
maps below automatically colour-preserving.

Search layout follows the classic first-path scheme: descend once to a
discrete leaf, then walk back up the path.  At each level the vertices of the
target cell that are not yet known to be in the base point's orbit are tried;
a subtree search either finds an automorphism mapping the first leaf into
that subtree or proves none exists.  The product of the resulting orbit
lengths is the group order.
"""
from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph

DEFAULT_BUDGET = 10_000_000
MATERIALIZE_CAP = 1_000_000


class BudgetExceeded(RuntimeError):
    """Search node cap reached.  Never interpreted as a negative answer."""

    def __init__(self, message: str, nodes: int):
        super().__init__(message)
        self.nodes = nodes


def default_budget() -> int:
    return int(os.environ.get("DISTCOLOR_BUDGET", DEFAULT_BUDGET))


# ---------------------------------------------------------------------------
# permutations

def identity(n: int) -> tuple:
    return tuple(range(n))


def is_identity(p: Sequence[int]) -> bool:
    return all(i == x for i, x in enumerate(p))


def compose(p: Sequence[int], q: Sequence[int]) -> tuple:
    """Apply ``p`` first, then ``q``."""
    return tuple(q[x] for x in p)


def is_automorphism(g: Graph, p: Sequence[int]) -> bool:
    if sorted(p) != list(range(g.n)):
        return False
    adj = g.adjacency
    return all(p[v] in adj[p[u]] for u, v in g.edges)


def cycles(p: Sequence[int]) -> list[tuple]:
    """Non-trivial cycles of ``p``."""
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def format_perm(p: Sequence[int]) -> str:
    cs = cycles(p)
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cs) or "()"


# ---------------------------------------------------------------------------
# partitions

def cells_to_colors(n: int, cells: Iterable[Iterable[int]]) -> list[int]:
    colors = [-1] * n
    for i, cell in enumerate(cells):
        for v in cell:
            if colors[v] != -1:
                raise ValueError(f"vertex {v} in two cells")
            colors[v] = i
    if -1 in colors:
        raise ValueError(f"vertex {colors.index(-1)} in no cell")
    return colors


def colors_to_cells(colors: Sequence[int]) -> list[list[int]]:
    k = max(colors, default=-1) + 1
    cells = [[] for _ in range(k)]
    for v, c in enumerate(colors):
        cells[c].append(v)
    return cells


def _normalize(values: Sequence) -> list[int]:
    """Rank arbitrary sortable values to dense colours 0..k-1, order kept."""
    index = {x: i for i, x in enumerate(sorted(set(values)))}
    return [index[x] for x in values]


def _refine_colors(adj, colors: list[int]) -> list[int]:
    k = max(colors, default=-1) + 1
    while True:
        sig = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(len(colors))]
        new = _normalize(sig)
        k_new = max(new, default=-1) + 1
        if k_new == k:
            return colors
        colors, k = new, k_new


def refine(g: Graph, cells: Sequence[Sequence[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of the ordered partition ``cells``.

    Each round splits a cell by the multiset of neighbour cells; fragments
    take the parent's place, ordered by that multiset.
    """
    colors = cells_to_colors(g.n, cells)
    if any(not c for c in cells):
        raise ValueError("empty cell")
    return colors_to_cells(_refine_colors(g.adjacency, colors))


def _individualize(colors: list[int], v: int) -> list[int]:
    # v gets its own cell just before the rest of its old cell
    c = colors[v]
    return [x + 1 if (x > c or (x == c and u != v)) else x for u, x in enumerate(colors)]


def _target(colors: list[int]) -> int | None:
    counts = [0] * (max(colors) + 1)
    for x in colors:
        counts[x] += 1
    for i, s in enumerate(counts):
        if s > 1:
            return i
    return None


def _shape(colors):
    counts = [0] * (max(colors) + 1)
    for x in colors:
        counts[x] += 1
    return tuple(counts)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x != y:
            if y < x:
                x, y = y, x
            self.parent[y] = x


class _Search:
    def __init__(self, g: Graph, colors: list[int], budget: int):
        self.g = g
        self.adj = g.adjacency
        self.budget = budget
        self.nodes = 0
        self.root = colors

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"automorphism search exceeded {self.budget} nodes", self.nodes)

    def _child(self, colors, v):
        self._tick()
        return _refine_colors(self.adj, _individualize(colors, v))

    def _leaf_map(self, leaf):
        # leaf colour c of vertex v -> first-leaf vertex with colour c
        n = self.g.n
        perm = [0] * n
        for v in range(n):
            perm[self.first_leaf_inv[leaf[v]]] = v
        return tuple(perm)

    def _find_in_subtree(self, colors, depth):
        """Automorphism mapping the first leaf to some leaf below ``colors``."""
        if _shape(colors) != self.shapes[depth]:
            return None
        t = self.targets[depth]
        if t is None:
            perm = self._leaf_map(colors)
            adj = self.adj
            if all(perm[v] in adj[perm[u]] for u, v in self.g.edges):
                return perm
            return None
        for w in sorted(v for v, c in enumerate(colors) if c == t):
            found = self._find_in_subtree(self._child(colors, w), depth + 1)
            if found is not None:
                return found
        return None

    def run(self, stop_at_first: bool = False):
        self._tick()
        path = [_refine_colors(self.adj, list(self.root))]
        bases = []
        while True:
            t = _target(path[-1])
            if t is None:
                break
            b = min(v for v, c in enumerate(path[-1]) if c == t)
            bases.append(b)
            path.append(self._child(path[-1], b))
        self.shapes = [_shape(c) for c in path]
        self.targets = [_target(c) for c in path]
        leaf = path[-1]
        self.first_leaf_inv = [0] * self.g.n
        for v, c in enumerate(leaf):
            self.first_leaf_inv[c] = v

        n = self.g.n
        generators = []
        orbit_lengths = []
        uf = _UnionFind(n)
        for d in range(len(bases) - 1, -1, -1):
            node = path[d]
            b = bases[d]
            t = self.targets[d]
            failed = []
            for w in sorted(v for v, c in enumerate(node) if c == t):
                if w == b or uf.find(w) == uf.find(b):
                    continue
                if any(uf.find(w) == uf.find(f) for f in failed):
                    continue
                perm = self._find_in_subtree(self._child(node, w), d + 1)
                if perm is None:
                    failed.append(w)
                    continue
                generators.append(perm)
                if stop_at_first:
                    return generators, None
                for v in range(n):
                    uf.union(v, perm[v])
            root_b = uf.find(b)
            orbit_lengths.append(sum(1 for v in range(n) if uf.find(v) == root_b))
        order = 1
        for length in orbit_lengths:
            order *= length
        return generators, order


# ---------------------------------------------------------------------------
# groups

@dataclass(frozen=True)
class AutGroup:
    """Generators of a permutation group on ``0..n-1`` plus its order."""

    n: int
    generators: tuple
    order: int

    def elements(self, cap: int = MATERIALIZE_CAP) -> list[tuple]:
        """All group elements by closure under the generators.

        Raises ``ValueError`` when ``order > cap``; asserts the closure size
        matches ``order`` (an independent check on the search bookkeeping).
        """
        if self.order > cap:
            raise ValueError(f"group order {self.order} exceeds materialization cap {cap}")
        e = identity(self.n)
        seen = {e}
        queue = deque([e])
        while queue:
            p = queue.popleft()
            for s in self.generators:
                q = compose(p, s)
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        if len(seen) != self.order:
            raise AssertionError(f"closure has {len(seen)} elements, search reported {self.order}")
        return sorted(seen)


def automorphism_group(
    g: Graph, cells: Sequence[Sequence[int]] | None = None, budget: int | None = None
) -> AutGroup:
    """Automorphisms of ``g`` (optionally those preserving an ordered partition)."""
    if g.n < 1:
        raise ValueError("automorphism_group needs n >= 1")
    colors = [0] * g.n if cells is None else cells_to_colors(g.n, cells)
    search = _Search(g, colors, default_budget() if budget is None else budget)
    gens, order = search.run()
    return AutGroup(g.n, tuple(gens), order)


def orbits(group: AutGroup, n: int | None = None) -> list[list[int]]:
    """Orbit partition, cells sorted by smallest member."""
    n = group.n if n is None else n
    uf = _UnionFind(n)
    for p in group.generators:
        for v in range(n):
            uf.union(v, p[v])
    out = {}
    for v in range(n):
        out.setdefault(uf.find(v), []).append(v)
    return sorted(out.values())


def exists_color_preserving_nonidentity(
    g: Graph, labels: Sequence, budget: int | None = None
) -> tuple | None:
    """A non-identity automorphism ``p`` with ``labels[p[v]] == labels[v]``, or ``None``.

    ``labels`` may hold any mutually comparable values; the search starts from
    the partition into label classes.
    """
    if len(labels) != g.n:
        raise ValueError(f"labeling has {len(labels)} entries for n={g.n}")
    if g.n == 0:
        return None
    search = _Search(g, _normalize(labels), default_budget() if budget is None else budget)
    gens, _ = search.run(stop_at_first=True)
    return gens[0] if gens else None


def generators_preserve(h_group: AutGroup, g: Graph) -> bool:
    """True iff every generator of ``h_group`` is an automorphism of ``g``."""
    return first_violating_generator(h_group, g) is None


def first_violating_generator(h_group: AutGroup, g: Graph) -> tuple | None:
    if h_group.n != g.n:
        raise ValueError("group and graph sizes differ")
    for p in h_group.generators:
        if not is_automorphism(g, p):
            return p
    return None
