"""Simple undirected graphs, graph6 / DIMACS I/O and graph-family generators.

Vertices are always the dense integers ``0..n-1``.  Formats that count from
one (DIMACS) are shifted on read and write.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "GraphFormatError",
    "MissingProblemLine",
    "VertexOutOfRange",
    "SelfLoopError",
    "GenerationInfeasible",
    "SplitMix64",
    "FamilySpec",
    "FAMILIES",
    "parse_graph6",
    "to_graph6",
    "iter_graph6",
    "parse_dimacs",
    "to_dimacs",
    "generate",
]


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Edges are stored as sorted pairs ``(u, v)`` with ``u < v``.  Duplicate
    pairs collapse; self-loops and out-of-range endpoints raise ``ValueError``.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        norm = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        adj = [set() for _ in range(n)]
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    @property
    def adjacency(self) -> tuple:
        """Tuple of neighbour sets, indexed by vertex."""
        return self._adj

    def closed_neighborhood(self, v: int) -> frozenset:
        return self._adj[v] | {v}

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_spanning_subgraph_of(self, other: "Graph") -> bool:
        return self.n == other.n and self.edges <= other.edges

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __reduce__(self):
        return (Graph, (self.n, self.edge_list()))

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_list()})"


# ---------------------------------------------------------------------------
# graph6

class GraphFormatError(ValueError):
    """Malformed graph text.  ``offset`` is the byte offset (graph6) or the
    1-based line number (DIMACS) where the problem was detected."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)


class MissingProblemLine(GraphFormatError):
    pass


class VertexOutOfRange(GraphFormatError):
    pass


class SelfLoopError(GraphFormatError):
    pass


_G6_HEADER = ">>graph6<<"


def _g6_size_bytes(n: int) -> list[int]:
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    if n <= 68719476735:
        return [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    raise ValueError(f"graph too large for graph6: n={n}")


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 line (without trailing newline)."""
    out = _g6_size_bytes(g.n)
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        adj_j = g.neighbors(j)
        for i in range(j):
            acc = (acc << 1) | (i in adj_j)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out).decode("ascii")


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line.  Raises ``GraphFormatError`` with a byte offset."""
    s = text.strip("\r\n")
    base = 0
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
        base = len(_G6_HEADER)
    if not s:
        raise GraphFormatError("empty graph6 string", base)
    data = []
    for i, ch in enumerate(s):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise GraphFormatError(f"character {ch!r} outside graph6 range", base + i)
        data.append(c - 63)

    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise GraphFormatError("truncated 8-byte size header", base + len(data))
        n, pos = 0, 8
        for d in data[2:8]:
            n = (n << 6) | d
    else:
        if len(data) < 4:
            raise GraphFormatError("truncated 4-byte size header", base + len(data))
        n, pos = 0, 4
        for d in data[1:4]:
            n = (n << 6) | d
        if n < 63:
            raise GraphFormatError(f"long size header encodes small n={n}", base + 1)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise GraphFormatError(
            f"truncated bit stream: need {need} bytes, have {len(body)}", base + len(data)
        )
    if len(body) > need:
        raise GraphFormatError("trailing bytes after bit stream", base + pos + need)

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if need and nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise GraphFormatError("non-zero padding bits", base + pos + need - 1)
    return Graph(n, edges)


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Yield graphs from a graph6 stream, skipping blank lines."""
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


# ---------------------------------------------------------------------------
# DIMACS .col

def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS edge format.  Vertices are shifted to 0-based ids."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split()
        if not tok or tok[0] == "c":
            continue
        if tok[0] == "p":
            if n is not None:
                raise GraphFormatError("second problem line", lineno)
            if len(tok) != 4 or tok[1] not in ("edge", "col"):
                raise GraphFormatError(f"bad problem line {raw!r}", lineno)
            try:
                n = int(tok[2])
                int(tok[3])
            except ValueError:
                raise GraphFormatError(f"bad problem line {raw!r}", lineno) from None
            if n < 0:
                raise GraphFormatError("negative vertex count", lineno)
        elif tok[0] == "e":
            if n is None:
                raise MissingProblemLine("edge line before problem line", lineno)
            if len(tok) != 3:
                raise GraphFormatError(f"bad edge line {raw!r}", lineno)
            try:
                u, v = int(tok[1]), int(tok[2])
            except ValueError:
                raise GraphFormatError(f"bad edge line {raw!r}", lineno) from None
            for x in (u, v):
                if not 1 <= x <= n:
                    raise VertexOutOfRange(f"vertex {x} not in 1..{n}", lineno)
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"unknown line type {tok[0]!r}", lineno)
    if n is None:
        raise MissingProblemLine("no 'p edge' line")
    return Graph(n, edges)


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edge_list()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# generators

class GenerationInfeasible(ValueError):
    pass


_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 (Steele, Lea & Flood 2014).

    ``below(k)`` uses rejection sampling on the top bits so that the integer
    stream is exactly reproducible in any language with 64-bit arithmetic.
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        """Uniform integer in ``[0, k)``."""
        if k <= 0:
            raise ValueError("k must be positive")
        bits = max(1, (k - 1).bit_length())
        while True:
            r = self.next_u64() >> (64 - bits)
            if r < k:
                return r

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


FAMILIES = {
    # family: (number of params or None for variable, needs seed)
    "path": (1, False),
    "cycle": (1, False),
    "complete": (1, False),
    "complete_bipartite": (2, False),
    "complete_multipartite": (None, False),
    "star": (1, False),
    "heawood": (0, False),
    "petersen": (0, False),
    "random_tree": (1, True),
    "random_unicyclic": (1, True),
    "random_bipartite_girth6": (2, True),
}


@dataclass(frozen=True)
class FamilySpec:
    """Named graph family with integer parameters.

    ``star`` takes the number of leaves; ``random_bipartite_girth6`` takes
    ``[n, m]`` (vertex and edge counts).
    """

    family: str
    params: tuple = ()
    seed: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        arity, seeded = FAMILIES[self.family]
        if arity is None:
            if not self.params:
                raise ValueError(f"{self.family} needs at least one part size")
        elif len(self.params) != arity:
            raise ValueError(f"{self.family} takes {arity} parameter(s), got {len(self.params)}")
        if any(p < 1 for p in self.params):
            raise ValueError("all sizes must be >= 1")
        if seeded and self.seed is None:
            raise ValueError(f"{self.family} requires a seed")
        if self.seed is not None and not 0 <= self.seed <= _MASK64:
            raise ValueError("seed must be a 64-bit unsigned integer")


HEAWOOD_EDGES = tuple(
    [(i, (i + 1) % 14) for i in range(14)] + [(i, (i + 5) % 14) for i in range(0, 14, 2)]
)
PETERSEN_EDGES = tuple(
    [(i, (i + 1) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
)


def _random_tree_edges(n: int, rng: SplitMix64) -> list[tuple[int, int]]:
    # Pruefer decoding gives a uniform labelled tree.
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.below(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def _random_unicyclic(n: int, rng: SplitMix64) -> Graph:
    if n < 3:
        raise GenerationInfeasible("a unicyclic graph needs n >= 3")
    edges = _random_tree_edges(n, rng)
    present = {tuple(sorted(e)) for e in edges}
    while True:
        u, v = rng.below(n), rng.below(n)
        if u != v and (min(u, v), max(u, v)) not in present:
            return Graph(n, edges + [(u, v)])


def _random_bipartite_girth6(n: int, m: int, rng: SplitMix64, retries: int) -> Graph:
    if m < n - 1:
        raise GenerationInfeasible(f"m={m} < n-1: cannot be connected")
    tree = _random_tree_edges(n, rng)
    adj = [set() for _ in range(n)]
    for u, v in tree:
        adj[u].add(v)
        adj[v].add(u)
    side = [0] * n
    seen = [False] * n
    seen[0] = True
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                side[w] = 1 - side[u]
                stack.append(w)
    left = [v for v in range(n) if side[v] == 0]
    right = [v for v in range(n) if side[v] == 1]
    count = n - 1
    attempts = 0
    while count < m:
        if attempts >= retries:
            raise GenerationInfeasible(
                f"placed {count} of {m} edges after {retries} proposals"
            )
        attempts += 1
        if not right:
            break
        u = left[rng.below(len(left))]
        w = right[rng.below(len(right))]
        if w in adj[u]:
            continue
        # u-w closes a 4-cycle iff some neighbour of u is adjacent to some neighbour of w
        if any(adj[a] & adj[w] for a in adj[u]):
            continue
        adj[u].add(w)
        adj[w].add(u)
        count += 1
    if count < m:
        raise GenerationInfeasible(f"placed {count} of {m} edges")
    return Graph(n, ((u, w) for u in range(n) for w in adj[u] if u < w))


def generate(spec: FamilySpec, retries: int | None = None) -> Graph:
    """Build the graph described by ``spec``.  Pure in ``spec``."""
    p = spec.params
    fam = spec.family
    if fam == "path":
        return Graph(p[0], ((i, i + 1) for i in range(p[0] - 1)))
    if fam == "cycle":
        if p[0] < 3:
            raise GenerationInfeasible("cycle needs at least 3 vertices")
        return Graph(p[0], ((i, (i + 1) % p[0]) for i in range(p[0])))
    if fam == "complete":
        return Graph(p[0], ((i, j) for i in range(p[0]) for j in range(i + 1, p[0])))
    if fam in ("complete_bipartite", "complete_multipartite"):
        part = []
        for idx, size in enumerate(p):
            part += [idx] * size
        n = len(part)
        return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n) if part[i] != part[j]))
    if fam == "star":
        return Graph(p[0] + 1, ((0, i) for i in range(1, p[0] + 1)))
    if fam == "heawood":
        return Graph(14, HEAWOOD_EDGES)
    if fam == "petersen":
        return Graph(10, PETERSEN_EDGES)

    rng = SplitMix64(spec.seed)
    if fam == "random_tree":
        return Graph(p[0], _random_tree_edges(p[0], rng))
    if fam == "random_unicyclic":
        return _random_unicyclic(p[0], rng)
    if fam == "random_bipartite_girth6":
        n, m = p
        return _random_bipartite_girth6(n, m, rng, retries if retries is not None else 200 * m)
    raise AssertionError(fam)
