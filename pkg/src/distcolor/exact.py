"""Exact chi(G), D(G) and chi_D(G) by exhaustive search, and a scanner for
girth >= 5 graphs exceeding Delta+1.

Labelings are enumerated vertex by vertex with label-symmetry breaking (a
vertex may open at most one new label).  For the distinguishing quantities a
partial labeling is discarded as soon as some non-identity automorphism
fixes every unlabelled vertex and preserves the labels assigned so far: that
automorphism preserves every completion too.
"""
from __future__ import annotations

import json
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .autom import BudgetExceeded, automorphism_group, exists_color_preserving_nonidentity, orbits
from .constructive import ConstructionDefect, label_auto
from .graph import Graph, to_graph6
from .labeling import Labeling
from .structure import PreconditionError, girth, is_connected

DEFAULT_NODE_CAP = 5_000_000


class ExactBudgetExceeded(RuntimeError):
    """Enumeration node cap hit.  Carries what was proven before stopping."""

    def __init__(self, message, lower_bound: int, best: Labeling | None):
        super().__init__(message)
        self.lower_bound = lower_bound
        self.best = best


@dataclass(frozen=True)
class ExactResult:
    value: int
    witness: Labeling


class _Enumerator:
    def __init__(self, g: Graph, order: list[int], k: int, proper: bool,
                 distinguishing: bool, node_cap: int, aut_budget: int | None):
        self.g = g
        self.order = order
        self.k = k
        self.proper = proper
        self.distinguishing = distinguishing
        self.node_cap = node_cap
        self.aut_budget = aut_budget
        self.nodes = 0
        self.f = [None] * g.n

    def _dead(self) -> bool:
        # unlabelled vertices become private colours so they must stay fixed
        key = [(0, x) if x is not None else (1, v) for v, x in enumerate(self.f)]
        return exists_color_preserving_nonidentity(self.g, key, budget=self.aut_budget) is not None

    def run(self) -> list | None:
        return self._extend(0, 0)

    def _extend(self, depth: int, used: int):
        self.nodes += 1
        if self.nodes > self.node_cap:
            raise BudgetExceeded(f"labeling enumeration exceeded {self.node_cap} nodes", self.nodes)
        if depth == len(self.order):
            return list(self.f)
        v = self.order[depth]
        nbr_labels = {self.f[u] for u in self.g.neighbors(v)} if self.proper else ()
        for lab in range(min(used + 1, self.k)):
            if lab in nbr_labels:
                continue
            self.f[v] = lab
            if not (self.distinguishing and self._dead()):
                found = self._extend(depth + 1, max(used, lab + 1))
                if found is not None:
                    return found
            self.f[v] = None
        return None


def _search_order(g: Graph, start: int) -> list[int]:
    # BFS from start so each vertex tends to have labelled neighbours already
    seen = [False] * g.n
    out = []
    for s in [start] + list(range(g.n)):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            out.append(u)
            for w in sorted(g.neighbors(u)):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return out


def _find(g, k, proper, distinguishing, order, node_cap, aut_budget):
    e = _Enumerator(g, order, k, proper, distinguishing, node_cap, aut_budget)
    return e.run()


def _greedy(g: Graph) -> list[int]:
    f = [None] * g.n
    for v in range(g.n):
        taken = {f[u] for u in g.neighbors(v)}
        f[v] = next(c for c in range(g.n + 1) if c not in taken)
    return f


def chromatic_number(g: Graph, node_cap: int = DEFAULT_NODE_CAP) -> ExactResult:
    """Exact chi; vertices in ascending id, the first-fit colouring as the
    starting upper bound, then k is lowered until no k-colouring exists."""
    if g.n < 1:
        raise ValueError("n >= 1 required")
    best = _greedy(g)
    k = len(set(best))
    order = list(range(g.n))
    while k > 1:
        found = _find(g, k - 1, True, False, order, node_cap, None)
        if found is None:
            break
        best, k = found, len(set(found))
    return ExactResult(k, Labeling(best))


def _distinguishing_sweep(g, lo, hi, proper, known, node_cap, aut_budget):
    group = automorphism_group(g, budget=aut_budget)
    big = max(orbits(group), key=lambda o: (len(o), -o[0]))
    order = _search_order(g, big[0])
    for k in range(lo, hi):
        try:
            found = _find(g, k, proper, True, order, node_cap, aut_budget)
        except BudgetExceeded as exc:
            raise ExactBudgetExceeded(str(exc), k, known) from exc
        if found is not None:
            return ExactResult(k, Labeling(found))
    return ExactResult(hi, known)


def distinguishing_number(g: Graph, node_cap: int = DEFAULT_NODE_CAP,
                          aut_budget: int | None = None) -> ExactResult:
    """Exact D(G): fewest labels of a labeling fixed only by the identity."""
    if g.n < 1:
        raise ValueError("n >= 1 required")
    return _distinguishing_sweep(g, 1, g.n, False, Labeling(range(g.n)), node_cap, aut_budget)


def distinguishing_chromatic_number(g: Graph, node_cap: int = DEFAULT_NODE_CAP,
                                    aut_budget: int | None = None,
                                    constructive_bound: bool = True) -> ExactResult:
    """Exact chi_D(G).

    k runs upward from chi(G).  The upper end is ``n`` or, with
    ``constructive_bound``, the label count of a constructive labeling when
    one applies; reaching it returns that labeling without further search.
    """
    if g.n < 1:
        raise ValueError("n >= 1 required")
    chi = chromatic_number(g, node_cap).value
    known = Labeling(range(g.n))
    if constructive_bound:
        try:
            constructed = label_auto(g)
            if constructed.labels_used < known.labels_used:
                known = constructed
        except (PreconditionError, ConstructionDefect):
            pass
    return _distinguishing_sweep(g, chi, known.labels_used, True, known, node_cap, aut_budget)


# ---------------------------------------------------------------------------
# conjecture scan

@dataclass
class ScanReport:
    checked: int = 0
    counterexamples: list = field(default_factory=list)
    skipped: list = field(default_factory=list)
    max_gap: int | None = None
    entries: list = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps({"checked": self.checked, "counterexamples": self.counterexamples,
                           "skipped": self.skipped})

    def lines(self) -> list[str]:
        out = []
        for e in self.entries:
            if "chid" in e:
                flag = " COUNTEREXAMPLE" if e["chid"] > e["delta"] + 1 else ""
                out.append(f"{e['graph6']} n={e['n']} Δ={e['delta']} girth={e['girth']} "
                           f"χ_D={e['chid']}{flag}")
            else:
                out.append(f"{e['graph6']} n={e['n']} Δ={e['delta']} skipped: {e['reason']}")
        gap = "n/a" if self.max_gap is None else self.max_gap
        out.append(f"checked={self.checked} counterexamples={len(self.counterexamples)} "
                   f"skipped={len(self.skipped)} max_gap={gap}")
        return out


def _scan_one(args):
    g, node_cap, aut_budget = args
    entry = {"graph6": to_graph6(g), "n": g.n, "delta": g.max_degree}
    gr = girth(g)
    entry["girth"] = "inf" if gr == float("inf") else gr
    try:
        entry["chid"] = distinguishing_chromatic_number(g, node_cap, aut_budget).value
    except (ExactBudgetExceeded, BudgetExceeded) as exc:
        entry["reason"] = f"budget exceeded: {exc}"
    return entry


def _eligible(g: Graph, max_n: int) -> bool:
    return (1 <= g.n <= max_n and is_connected(g) and g.max_degree >= 3 and girth(g) >= 5)


def scan_conjecture(max_n: int, source: Iterable[Graph], workers: int = 1,
                    node_cap: int = DEFAULT_NODE_CAP, aut_budget: int | None = None) -> ScanReport:
    """Compute chi_D for every connected girth >= 5, Delta >= 3 graph of the
    stream with ``n <= max_n`` and collect those above Delta+1.

    Results are reported in input order whatever ``workers`` is.
    """
    jobs = [(g, node_cap, aut_budget) for g in source if _eligible(g, max_n)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            entries = list(pool.map(_scan_one, jobs))
    else:
        entries = [_scan_one(j) for j in jobs]
    report = ScanReport(entries=entries)
    for e in entries:
        if "chid" not in e:
            report.skipped.append({"graph6": e["graph6"], "reason": e["reason"]})
            continue
        report.checked += 1
        gap = e["delta"] + 1 - e["chid"]
        report.max_gap = gap if report.max_gap is None else max(report.max_gap, gap)
        if gap < 0:
            report.counterexamples.append({"graph6": e["graph6"], "n": e["n"],
                                           "delta": e["delta"], "chid": e["chid"]})
    return report
