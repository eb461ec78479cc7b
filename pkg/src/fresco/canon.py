"""Delayed canonization of simplets.

Two simplets are compared by increasingly expensive tests: counting
invariants first, then isomorphism of their 1-skeletons, and finally the
canonical form of the colored bipartite incidence graph (simplet labels on
one side, maximal simplices on the other).

Canonical form byte layout (all integers unsigned, one byte unless noted)::

    n                      number of simplet labels
    m                      number of maximal simplices
    m records, sorted:     dim, then ceil(n/8) bytes little-endian bitmask
                           of the canonical labels in the simplex

The canonical labeling is the one whose record list is lexicographically
smallest among the leaves of the individualization-refinement tree.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Hashable, Sequence

from .simplet import Simplet

__all__ = [
    "BipartiteIncidence",
    "CanonicalForm",
    "Registry",
    "canonical_form",
    "canonical_labelings",
    "quick_reject",
    "skeleton_isomorphic",
    "to_bipartite",
]


# -- generic colored-graph machinery -------------------------------------


def _renumber(keys: Sequence[Hashable]) -> list[int]:
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def refine(colors: Sequence[int], adj: Sequence[Sequence[int]]) -> list[int]:
    """Color refinement to the coarsest equitable partition.

    New colors are ranks of (old color, neighbor color multiset), so the
    relative order of existing cells is kept and the result is equivariant.
    """
    cols = list(colors)
    ncells = len(set(cols))
    while True:
        sig = [(cols[v], tuple(sorted(cols[u] for u in adj[v]))) for v in range(len(cols))]
        new = _renumber(sig)
        k = len(set(new))
        cols = new
        if k == ncells:
            return cols
        ncells = k


def _individualize(colors: list[int], v: int) -> list[int]:
    c = colors[v]
    keys = [(col, 0 if (u == v or col != c) else 1) for u, col in enumerate(colors)]
    return _renumber(keys)


def canonical_labelings(colors: Sequence[Hashable], adj: Sequence[Sequence[int]]):
    """Yield the discrete colorings at the leaves of the search tree.

    Each yielded list maps node -> position. The tree branches on the
    smallest non-singleton cell (lowest color on ties), trying its members
    in ascending node order.
    """
    start = refine(_renumber(list(colors)), adj)
    stack = [start]
    n = len(start)
    while stack:
        cols = stack.pop()
        sizes: dict[int, int] = {}
        for c in cols:
            sizes[c] = sizes.get(c, 0) + 1
        if len(sizes) == n:
            yield cols
            continue
        target = min((s, c) for c, s in sizes.items() if s > 1)[1]
        cell = [v for v in range(n) if cols[v] == target]
        for v in reversed(cell):
            stack.append(refine(_individualize(cols, v), adj))


def _graph_certificate(colors: Sequence[Hashable], adj: Sequence[Sequence[int]]) -> tuple:
    best = None
    for pos in canonical_labelings(colors, adj):
        order = sorted(range(len(pos)), key=pos.__getitem__)
        cert = (
            tuple(colors[v] for v in order),
            tuple(sorted(tuple(sorted((pos[v], pos[u]))) for v in order for u in adj[v] if pos[u] > pos[v])),
        )
        if best is None or cert < best:
            best = cert
    return best


# -- simplet reductions ---------------------------------------------------


@dataclass(frozen=True)
class BipartiteIncidence:
    """Label nodes ``0..n-1`` then one node per maximal simplex."""

    num_left: int
    right: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def num_right(self) -> int:
        return len(self.right)

    def colors(self) -> list[tuple[int, int]]:
        """(side, dimension) per node; label nodes are (0, 0)."""
        return [(0, 0)] * self.num_left + [(1, len(s) - 1) for s in self.right]

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.num_left + len(self.right))]
        for v, r in self.edges:
            adj[v].append(r)
            adj[r].append(v)
        return adj


def to_bipartite(p: Simplet) -> BipartiteIncidence:
    n = p.num_vertices
    edges = tuple((v, n + i) for i, s in enumerate(p.maximal) for v in s)
    return BipartiteIncidence(n, p.maximal, edges)


@dataclass(frozen=True)
class CanonicalForm:
    data: bytes
    relabeling: tuple[int, ...] = field(compare=False)

    def hex(self) -> str:
        return self.data.hex()

    def __lt__(self, other: "CanonicalForm") -> bool:
        return self.data < other.data


def _encode(n: int, maximal: Sequence[tuple[int, ...]], relabel: Sequence[int]) -> bytes:
    width = (n + 7) // 8
    records = []
    for s in maximal:
        mask = 0
        for v in s:
            mask |= 1 << relabel[v]
        records.append(bytes([len(s) - 1]) + mask.to_bytes(width, "little"))
    records.sort()
    return bytes([n, len(maximal)]) + b"".join(records)


def canonical_form(p: Simplet) -> CanonicalForm:
    g = to_bipartite(p)
    n = g.num_left
    if n > 255:
        raise ValueError("simplets are limited to 255 labels")
    adj = g.adjacency()
    best: tuple[bytes, tuple[int, ...]] | None = None
    for pos in canonical_labelings(g.colors(), adj):
        # label nodes carry the smallest colors, so their positions are 0..n-1
        relabel = tuple(pos[:n])
        data = _encode(n, p.maximal, relabel)
        if best is None or data < best[0]:
            best = (data, relabel)
    assert best is not None
    return CanonicalForm(best[0], best[1])


def skeleton_certificate(p: Simplet) -> tuple:
    adj = [sorted(a) for a in p.skeleton_adj]
    return _graph_certificate([0] * p.num_vertices, adj)


# -- delayed comparison ---------------------------------------------------


def quick_reject(p1: Simplet, p2: Simplet) -> bool:
    """True when cheap invariants already prove the simplets distinct."""
    return (
        p1.num_vertices != p2.num_vertices
        or p1.dimension != p2.dimension
        or len(p1.simplices) != len(p2.simplices)
        or p1.dim_sequence != p2.dim_sequence
        or p1.degree_sequence != p2.degree_sequence
    )


def skeleton_isomorphic(p1: Simplet, p2: Simplet) -> bool:
    if p1.num_vertices != p2.num_vertices or len(p1.edges) != len(p2.edges):
        return False
    return skeleton_certificate(p1) == skeleton_certificate(p2)


class Registry:
    """Simplets generated so far, bucketed by their count sequences.

    Writes are serialized by an internal lock.
    """

    def __init__(self) -> None:
        self.buckets: dict[tuple, list[Simplet]] = {}
        self.canonizations = 0
        self.skeleton_checks = 0
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return sum(len(b) for b in self.buckets.values())

    def __iter__(self):
        for bucket in self.buckets.values():
            yield from bucket

    def _canon(self, p: Simplet) -> CanonicalForm:
        if "canonical" not in p.__dict__:
            self.canonizations += 1
        return p.canonical

    def find(self, p: Simplet) -> Simplet | None:
        for q in self.buckets.get(p.sequences(), ()):
            if quick_reject(p, q):
                continue
            self.skeleton_checks += 1
            if not skeleton_isomorphic(p, q):
                continue
            if self._canon(p) == self._canon(q):
                return q
        return None

    def register(self, p: Simplet) -> bool:
        """Insert ``p`` unless an isomorphic simplet is stored; True if fresh."""
        with self._lock:
            if self.find(p) is not None:
                return False
            self.buckets.setdefault(p.sequences(), []).append(p)
            return True
