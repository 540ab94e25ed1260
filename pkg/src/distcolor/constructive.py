"""Constructive proper distinguishing labelings with at most Delta+1 labels.

* ``label_bipartite_girth6``: connected bipartite graphs of girth >= 6,
  labelled level by level from a BFS tree rooted at a maximum-degree vertex.
* ``label_rooted_tree``: sibling- and parent-distinct labels on a rooted tree.
* ``label_cycle``: at most four labels on C_n.
* ``label_unicyclic``: trees and connected graphs with exactly one cycle.
* ``transfer_to_spanning_subgraph``: reuse a labeling of G on a spanning
  subgraph H when every automorphism of H is one of G.

Every labeler verifies its output before returning it.  A failed check is a
``ConstructionDefect``, never a silently wrong labeling.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .autom import automorphism_group, first_violating_generator
from .graph import Graph
from .labeling import Labeling, is_proper, verify
from .structure import (
    DisconnectedGraph,
    PreconditionError,
    bfs_tree,
    bipartition,
    girth,
    is_connected,
    unique_cycle,
)


class ConstructionDefect(RuntimeError):
    """The construction failed where the underlying theorem says it cannot."""

    def __init__(self, message: str, state=None):
        super().__init__(message)
        self.state = state


class AlphabetTooSmall(PreconditionError):
    pass


@dataclass
class LevelAssignmentState:
    """Bookkeeping for labelling BFS level ``level_index`` given all earlier levels.

    ``groups`` maps each parent on the previous level to its BFS children;
    ``forbidden[w]`` holds the labels of ``w``'s previous-level neighbours and
    ``available[w]`` is ``{1..delta}`` minus that.  ``singleton_children[p]``
    lists the children whose only previous-level neighbour is ``p``; those
    must get pairwise distinct labels.  Children with two or more such
    neighbours are pinned by their neighbourhood alone.
    """

    level_index: int
    groups: dict = field(default_factory=dict)
    forbidden: dict = field(default_factory=dict)
    available: dict = field(default_factory=dict)
    singleton_children: dict = field(default_factory=dict)
    back_neighbors: dict = field(default_factory=dict)

    def empty(self) -> list[int]:
        return sorted(w for w, a in self.available.items() if not a)


def _level_state(g, tree, levels, f, i, delta) -> LevelAssignmentState:
    full = frozenset(range(1, delta + 1))
    prev = set(levels[i - 1])
    st = LevelAssignmentState(i)
    for p in levels[i - 1]:
        st.groups[p] = []
        st.singleton_children[p] = []
    for w in levels[i]:
        back = sorted(g.neighbors(w) & prev)
        st.back_neighbors[w] = back
        st.groups[tree.parent[w]].append(w)
        st.forbidden[w] = frozenset(f[u] for u in back)
        st.available[w] = full - st.forbidden[w]
        if len(back) == 1:
            st.singleton_children[back[0]].append(w)
    return st


def _assign_level(st: LevelAssignmentState, f: list) -> None:
    used = {p: set() for p in st.singleton_children}
    owner = {w: p for p, ws in st.singleton_children.items() for w in ws}
    for w in sorted(st.available):
        if w in owner:
            free = sorted(st.available[w] - used[owner[w]])
            if not free:
                raise ConstructionDefect(f"no distinct label left for sibling {w}", st)
            f[w] = free[0]
            used[owner[w]].add(free[0])
        else:
            f[w] = min(st.available[w])


def _saturated(st: LevelAssignmentState, f: Sequence, delta: int) -> list[int]:
    full = set(range(1, delta + 1))
    return [w for w, back in sorted(st.back_neighbors.items())
            if len(back) >= delta and full <= {f[u] for u in back}]


def _repair_previous_level(prev_st: LevelAssignmentState, st: LevelAssignmentState,
                           f: list, delta: int, node_cap: int = 200_000) -> int:
    """Relabel level ``prev_st.level_index`` to minimise the number of
    next-level vertices whose back neighbours carry every label ``1..delta``.

    Branch and bound, smallest domain first, singleton siblings kept
    distinct.  The current labels seed the incumbent.  Returns the number of
    such saturated vertices left (0 whenever a full repair exists).
    """
    full = frozenset(range(1, delta + 1))
    variables = sorted(prev_st.available)
    domain = {x: sorted(prev_st.available[x]) for x in variables}
    owner = {w: p for p, ws in prev_st.singleton_children.items() for w in ws}
    siblings = {x: [y for y in prev_st.singleton_children[owner[x]] if y != x]
                if x in owner else [] for x in variables}
    watch = {}
    for w, back in st.back_neighbors.items():
        if len(back) >= delta:
            for x in back:
                watch.setdefault(x, []).append(w)
    assign = {}
    best_cost = len(_saturated(st, f, delta))
    best = {x: f[x] for x in variables}
    nodes = 0

    def options(x):
        return [lab for lab in domain[x] if all(assign.get(y) != lab for y in siblings[x])]

    def closes(x):
        # watched vertices that become saturated once x is assigned
        out = 0
        for w in watch.get(x, ()):
            back = st.back_neighbors[w]
            if all(y in assign for y in back) and full <= {assign[y] for y in back}:
                out += 1
        return out

    def solve(cost):
        nonlocal nodes, best_cost, best
        nodes += 1
        if cost >= best_cost or nodes > node_cap:
            return
        free = [x for x in variables if x not in assign]
        if not free:
            best_cost, best = cost, dict(assign)
            return
        x = min(free, key=lambda y: (len(options(y)), y))
        for lab in options(x):
            assign[x] = lab
            solve(cost + closes(x))
            del assign[x]
            if best_cost == 0:
                return

    solve(0)
    for x, lab in best.items():
        f[x] = lab
    return best_cost


def _check_verified(g: Graph, f: Sequence[int], fixed=(), state=None) -> Labeling:
    report = verify(g, f, fixed=fixed)
    if not report.ok:
        raise ConstructionDefect(f"output failed verification: {report}", state)
    return Labeling(f)


@dataclass(frozen=True)
class LevelConstruction:
    """Output of the level-by-level labeler together with its BFS scaffold.

    ``zero_reused`` lists vertices that had every label ``1..Delta`` on their
    previous-level neighbours even after the previous level was relabelled;
    they carry the root's label 0 (the Heawood graph is the smallest case).
    """

    labeling: Labeling
    root: int
    tree: object
    zero_reused: tuple


def construct_bipartite_girth6(g: Graph) -> LevelConstruction:
    if not is_connected(g):
        raise DisconnectedGraph("graph is not connected")
    if bipartition(g) is None:
        raise PreconditionError("graph is not bipartite")
    if girth(g) < 6:
        raise PreconditionError(f"girth ≥ 6 required (girth={girth(g)})")
    delta = g.max_degree
    if delta < 3:
        raise PreconditionError(f"Δ ≥ 3 required (Δ={delta})")

    root = min(v for v in range(g.n) if g.degree(v) == delta)
    tree = bfs_tree(g, root)
    levels = tree.levels()
    f = [None] * g.n
    f[root] = 0
    for k, v in enumerate(levels[1], 1):
        f[v] = k

    prev_st = None
    zero_reused = []
    for i in range(2, len(levels)):
        st = _level_state(g, tree, levels, f, i, delta)
        if st.empty():
            if prev_st is None:
                raise ConstructionDefect("empty label set right below the root", st)
            _repair_previous_level(prev_st, st, f, delta)
            st = _level_state(g, tree, levels, f, i, delta)
        # No relabeling of the previous level frees these vertices; the
        # retired label 0 is the only one left inside the budget.  Whether
        # the root stays pinned is left to the final verification.
        stuck = st.empty()
        for w in stuck:
            del st.available[w]
            f[w] = 0
        zero_reused += stuck
        _assign_level(st, f)
        prev_st = st
    lab = _check_verified(g, f, state={"root": root, "levels": levels, "zero_reused": zero_reused})
    return LevelConstruction(lab, root, tree, tuple(zero_reused))


def label_bipartite_girth6(g: Graph) -> Labeling:
    """Proper distinguishing labeling with labels in ``{0..Delta}``.

    The root (lowest-id vertex of maximum degree) gets label 0, its
    neighbours get ``1..Delta`` in id order, and every later BFS level is
    labelled from ``{1..Delta}`` avoiding the labels of its previous-level
    neighbours, with siblings that hang off a single parent kept distinct.
    When some vertex sees all of ``1..Delta`` below it, the previous level is
    relabelled by backtracking; if that cannot help, the vertex gets 0.
    """
    return construct_bipartite_girth6(g).labeling


def _tree_children(g: Graph, root: int):
    tree = bfs_tree(g, root)
    children = [[] for _ in range(g.n)]
    order = sorted(range(g.n), key=lambda v: (tree.level[v], v))
    for v in order:
        if tree.parent[v] is not None:
            children[tree.parent[v]].append(v)
    return order, children


def label_rooted_tree(g: Graph, root: int, alphabet: Iterable[int],
                      root_label: int | None = None) -> Labeling:
    """Label a tree so every vertex differs from its parent and its siblings.

    Children are handled in ascending id and take the smallest alphabet
    labels other than the parent's.  ``root_label`` pins the root (it may lie
    outside ``alphabet``).  The result is checked to be proper and
    distinguishing with respect to automorphisms fixing ``root``.
    """
    if not is_connected(g) or g.m != g.n - 1:
        raise PreconditionError("graph is not a tree")
    alphabet = sorted(set(alphabet))
    order, children = _tree_children(g, root)
    f = [None] * g.n
    f[root] = alphabet[0] if root_label is None else root_label
    for u in order:
        pool = [x for x in alphabet if x != f[u]]
        if len(children[u]) > len(pool):
            raise AlphabetTooSmall(
                f"vertex {u} has {len(children[u])} children but only {len(pool)} labels differ from its own")
        for w, lab in zip(children[u], pool):
            f[w] = lab
    return _check_verified(g, f, fixed=(root,))


def _cycle_pattern(n: int) -> list[int]:
    if n == 3:
        return [0, 1, 2]
    # a unique 0 pins one vertex; 1 and 3 on its two sides kill the reflection
    return [0] + [1 if j % 2 else 2 for j in range(1, n - 1)] + [3]


def label_cycle(n: int) -> Labeling:
    """Proper distinguishing labeling of C_n with labels in ``{0,1,2,3}``."""
    if n < 3:
        raise PreconditionError("a cycle needs n >= 3")
    c = Graph(n, ((i, (i + 1) % n) for i in range(n)))
    f = _cycle_pattern(n)
    if verify(c, f).ok:
        return Labeling(f)
    if n <= 12:
        for cand in product(range(4), repeat=n):
            if is_proper(c, cand) and verify(c, cand).ok:
                return Labeling(cand)
    raise ConstructionDefect(f"no labeling of C_{n} with four labels found")


def _induced(g: Graph, vertices) -> tuple[Graph, list[int]]:
    vs = sorted(vertices)
    index = {v: i for i, v in enumerate(vs)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph(len(vs), edges), vs


def label_tree(g: Graph) -> Labeling:
    """Trees with Delta >= 1: label 0 on a maximum-degree root, then the
    rooted-tree rule over ``{1..Delta}``."""
    if not is_connected(g) or g.m != g.n - 1:
        raise PreconditionError("graph is not a tree")
    delta = g.max_degree
    root = min(v for v in range(g.n) if g.degree(v) == delta)
    f = label_rooted_tree(g, root, range(1, delta + 1), root_label=0)
    return _check_verified(g, f)


def label_unicyclic(g: Graph) -> Labeling:
    """At most Delta+1 labels for a connected graph with ``m <= n``.

    The cycle takes the four-label cycle pattern; each hanging tree is then
    labelled from ``{1..Delta}`` with its cycle vertex as a pinned root.
    """
    if not is_connected(g):
        raise DisconnectedGraph("graph is not connected")
    if g.m > g.n:
        raise PreconditionError(f"m ≤ n required (m={g.m}, n={g.n})")
    delta = g.max_degree
    if delta < 3:
        raise PreconditionError(f"Δ ≥ 3 required (Δ={delta})")
    uc = unique_cycle(g)
    if uc is None:
        return label_tree(g)

    f = [None] * g.n
    for x, lab in zip(uc.cycle_vertices, label_cycle(len(uc.cycle_vertices))):
        f[x] = lab
    alphabet = range(1, delta + 1)
    for x in uc.cycle_vertices:
        members = uc.hanging_trees[x]
        if len(members) == 1:
            continue
        sub, vs = _induced(g, members)
        local = label_rooted_tree(sub, vs.index(x), alphabet, root_label=f[x])
        for i, v in enumerate(vs):
            f[v] = local[i]
    lab = _check_verified(g, f, state={"cycle": uc.cycle_vertices})
    if lab.labels_used > delta + 1:
        raise ConstructionDefect(f"used {lab.labels_used} > Δ+1 labels")
    return lab


def label_auto(g: Graph) -> Labeling:
    """Pick the bipartite girth-6 labeler when it applies, else the
    unicyclic/tree one."""
    if (is_connected(g) and g.max_degree >= 3 and bipartition(g) is not None
            and girth(g) >= 6):
        return label_bipartite_girth6(g)
    if g.m <= g.n and g.max_degree >= 3:
        return label_unicyclic(g)
    raise PreconditionError(
        "no constructive method applies: need Δ ≥ 3 and either bipartite with girth ≥ 6 or m ≤ n")


@dataclass(frozen=True)
class TransferReport:
    hypothesis_holds: bool
    violating_generator: tuple | None
    proper_on_h: bool
    distinguishing_on_h: bool

    @property
    def ok(self) -> bool:
        return self.hypothesis_holds and self.proper_on_h and self.distinguishing_on_h


def transfer_to_spanning_subgraph(g: Graph, h: Graph, f: Sequence[int]) -> TransferReport:
    """Check whether a proper distinguishing labeling ``f`` of ``g`` carries
    over to the spanning subgraph ``h`` via ``Aut(h) ⊆ Aut(g)``."""
    if not h.is_spanning_subgraph_of(g):
        raise PreconditionError("h is not a spanning subgraph of g")
    on_g = verify(g, f)
    if not on_g.ok:
        raise PreconditionError(f"labeling is not proper distinguishing on g: {on_g}")
    bad = first_violating_generator(automorphism_group(h), g)
    on_h = verify(h, f)
    if bad is None and not on_h.ok:
        raise ConstructionDefect(f"Aut(h) ⊆ Aut(g) holds but the labeling fails on h: {on_h}")
    return TransferReport(bad is None, bad, on_h.proper, on_h.distinguishing)
