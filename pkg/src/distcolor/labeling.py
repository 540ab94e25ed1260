"""Vertex labelings and the proper / distinguishing predicates."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .autom import exists_color_preserving_nonidentity, format_perm
from .graph import Graph


class LabelingSizeError(ValueError):
    pass


@dataclass(frozen=True)
class Labeling:
    """Non-negative integer label per vertex.  Label values are arbitrary;
    ``labels_used`` counts the distinct ones."""

    labels: tuple

    def __init__(self, labels: Iterable[int]):
        labels = tuple(int(x) for x in labels)
        if any(x < 0 for x in labels):
            raise ValueError("labels must be non-negative")
        object.__setattr__(self, "labels", labels)

    def __len__(self):
        return len(self.labels)

    def __getitem__(self, v):
        return self.labels[v]

    def __iter__(self):
        return iter(self.labels)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def labels_used(self) -> int:
        return len(set(self.labels))

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "labels": list(self.labels), "labels_used": self.labels_used})

    @classmethod
    def from_json(cls, text: str) -> "Labeling":
        doc = json.loads(text)
        if not isinstance(doc, dict) or "labels" not in doc:
            raise ValueError("labeling JSON needs a 'labels' array")
        lab = cls(doc["labels"])
        if "n" in doc and doc["n"] != lab.n:
            raise LabelingSizeError(f"'n'={doc['n']} but {lab.n} labels given")
        return lab


def _check_size(g: Graph, f: Sequence[int]):
    if len(f) != g.n:
        raise LabelingSizeError(f"labeling has {len(f)} entries, graph has {g.n} vertices")


def improper_edge(g: Graph, f: Sequence[int]) -> tuple | None:
    """First edge (in sorted order) whose endpoints share a label."""
    _check_size(g, f)
    for u, v in g.edge_list():
        if f[u] == f[v]:
            return (u, v)
    return None


def is_proper(g: Graph, f: Sequence[int]) -> bool:
    _check_size(g, f)
    return all(f[u] != f[v] for u, v in g.edges)


def _with_fixed(f: Sequence[int], fixed: Iterable[int]) -> list:
    # fixed vertices get private colours; label colours sort first
    key = [(0, x) for x in f]
    for v in fixed:
        key[v] = (1, v)
    return key


def preserving_automorphism(
    g: Graph, f: Sequence[int], fixed: Iterable[int] = (), budget: int | None = None
) -> tuple | None:
    """Witness for a non-distinguishing labeling, or ``None``.

    With ``fixed``, only automorphisms fixing those vertices are considered
    (the rooted-tree setting).
    """
    _check_size(g, f)
    return exists_color_preserving_nonidentity(g, _with_fixed(f, fixed), budget=budget)


def is_distinguishing(g: Graph, f: Sequence[int], fixed: Iterable[int] = (), budget: int | None = None) -> bool:
    return preserving_automorphism(g, f, fixed, budget) is None


@dataclass(frozen=True)
class VerifyReport:
    proper: bool
    distinguishing: bool
    labels_used: int
    bad_edge: tuple | None = None
    witness: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.proper and self.distinguishing

    def __str__(self):
        parts = [
            f"proper={'yes' if self.proper else 'no'}",
            f"distinguishing={'yes' if self.distinguishing else 'no'}",
            f"labels_used={self.labels_used}",
        ]
        if self.bad_edge is not None:
            parts.append(f"edge={self.bad_edge[0]}-{self.bad_edge[1]}")
        if self.witness is not None:
            parts.append(f"witness={format_perm(self.witness)}")
        return " ".join(parts)


def verify(g: Graph, f: Sequence[int], fixed: Iterable[int] = (), budget: int | None = None) -> VerifyReport:
    """Check both halves of "proper distinguishing" and report a witness for
    whichever fails."""
    bad = improper_edge(g, f)
    witness = preserving_automorphism(g, f, fixed, budget)
    return VerifyReport(bad is None, witness is None, len(set(f)), bad, witness)
