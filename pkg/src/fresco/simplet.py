"""Simplets: small connected, downward-closed pattern complexes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import TYPE_CHECKING, Iterable, Optional

if TYPE_CHECKING:
    from .canon import CanonicalForm

Simplex = tuple[int, ...]


class InvalidSimplet(ValueError):
    pass


def faces(simplex: Iterable[int]) -> list[Simplex]:
    """All non-empty subsets of ``simplex``, including itself."""
    s = tuple(sorted(simplex))
    return [c for r in range(1, len(s) + 1) for c in combinations(s, r)]


def maximal_elements(simplices: Iterable[Simplex]) -> tuple[Simplex, ...]:
    sets = sorted({frozenset(s) for s in simplices}, key=len, reverse=True)
    kept: list[frozenset] = []
    for s in sets:
        if not any(s <= k for k in kept):
            kept.append(s)
    return tuple(sorted(tuple(sorted(s)) for s in kept))


@dataclass(frozen=True)
class OrbitPartition:
    orbit_of: tuple[int, ...]
    automorphisms: tuple[tuple[int, ...], ...]

    def orbit(self, v: int) -> tuple[int, ...]:
        o = self.orbit_of[v]
        return tuple(w for w, ow in enumerate(self.orbit_of) if ow == o)

    def classes(self) -> list[tuple[int, ...]]:
        seen: dict[int, list[int]] = {}
        for v, o in enumerate(self.orbit_of):
            seen.setdefault(o, []).append(v)
        return [tuple(vs) for vs in seen.values()]


class Simplet:
    """A pattern over labels ``0..num_vertices-1``.

    ``simplices`` holds the full downward-closed simplex set, each simplex a
    sorted tuple. ``parent`` is the simplet this one was expanded from; labels
    inherited from the parent keep their meaning.
    """

    def __init__(
        self,
        num_vertices: int,
        simplices: Iterable[Iterable[int]],
        parent: Optional["Simplet"] = None,
        validate: bool = True,
    ):
        self.num_vertices = num_vertices
        self.simplices: frozenset[Simplex] = frozenset(tuple(sorted(s)) for s in simplices)
        self.parent = parent
        if validate:
            self.validate()

    @classmethod
    def from_maximal(cls, num_vertices: int, maximal: Iterable[Iterable[int]], parent=None) -> "Simplet":
        closure: set[Simplex] = set()
        for s in maximal:
            closure.update(faces(s))
        return cls(num_vertices, closure, parent=parent)

    @classmethod
    def parse(cls, text: str) -> "Simplet":
        """Parse the ``0,1,2;2,3`` text form (maximal simplices)."""
        maximal = [tuple(int(x) for x in part.split(",")) for part in text.strip().split(";") if part]
        if not maximal:
            raise InvalidSimplet("empty simplet text")
        n = max(max(s) for s in maximal) + 1
        return cls.from_maximal(n, maximal)

    @classmethod
    def vertex(cls) -> "Simplet":
        return cls(1, [(0,)])

    def validate(self) -> None:
        n = self.num_vertices
        if n < 1:
            raise InvalidSimplet("simplet needs at least one vertex")
        for s in self.simplices:
            if not s or s[0] < 0 or s[-1] >= n:
                raise InvalidSimplet(f"simplex {s} uses labels outside 0..{n - 1}")
            if len(set(s)) != len(s):
                raise InvalidSimplet(f"simplex {s} repeats a label")
            if len(s) > 1:
                for f in combinations(s, len(s) - 1):
                    if f not in self.simplices:
                        raise InvalidSimplet(f"face {f} of {s} missing")
        for v in range(n):
            if (v,) not in self.simplices:
                raise InvalidSimplet(f"label {v} has no 0-simplex")
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self.skeleton_adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            raise InvalidSimplet("simplet is not connected through its 1-simplices")

    # -- derived data -------------------------------------------------------

    @cached_property
    def maximal(self) -> tuple[Simplex, ...]:
        return maximal_elements(self.simplices)

    @cached_property
    def dimension(self) -> int:
        return max(len(s) for s in self.simplices) - 1

    @cached_property
    def dim_sequence(self) -> tuple[int, ...]:
        counts = [0] * (self.dimension + 1)
        for s in self.simplices:
            counts[len(s) - 1] += 1
        return tuple(counts)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Per label, the number of member simplices containing it."""
        deg = [0] * self.num_vertices
        for s in self.simplices:
            for v in s:
                deg[v] += 1
        return tuple(deg)

    @property
    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees))

    @cached_property
    def skeleton_adj(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.num_vertices)]
        for s in self.simplices:
            if len(s) == 2:
                a, b = s
                adj[a].add(b)
                adj[b].add(a)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def edges(self) -> tuple[Simplex, ...]:
        return tuple(sorted(s for s in self.simplices if len(s) == 2))

    @cached_property
    def maximal_by_label(self) -> tuple[tuple[Simplex, ...], ...]:
        """Maximal members containing each label (the only ones the matcher checks)."""
        out: list[list[Simplex]] = [[] for _ in range(self.num_vertices)]
        for s in self.maximal:
            for v in s:
                out[v].append(s)
        return tuple(tuple(x) for x in out)

    @cached_property
    def orbits(self) -> OrbitPartition:
        return compute_orbits(self)

    @cached_property
    def canonical(self) -> "CanonicalForm":
        from .canon import canonical_form

        return canonical_form(self)

    def sequences(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self.dim_sequence, self.degree_sequence

    def to_text(self) -> str:
        """Maximal simplices under the canonical relabeling, e.g. ``0,1,2;2,3``."""
        relabel = self.canonical.relabeling
        maximal = sorted(tuple(sorted(relabel[v] for v in s)) for s in self.maximal)
        return ";".join(",".join(map(str, s)) for s in maximal)

    def raw_text(self) -> str:
        return ";".join(",".join(map(str, s)) for s in self.maximal)

    def __len__(self) -> int:
        return self.num_vertices

    def __repr__(self) -> str:
        return f"Simplet({self.raw_text()})"


def dimension(p: Simplet) -> int:
    return p.dimension


def sequences(p: Simplet) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return p.sequences()


def maximal_representation(p: Simplet) -> tuple[Simplex, ...]:
    return p.maximal


def orbits(p: Simplet) -> OrbitPartition:
    return p.orbits


def compute_orbits(p: Simplet) -> OrbitPartition:
    """Exact automorphism group by backtracking over label permutations.

    A label may only map to a label with the same simplex degree and
    1-skeleton degree; every maximal simplex whose labels are all assigned
    must map onto a member simplex.
    """
    n = p.num_vertices
    deg = p.degrees
    sdeg = [len(a) for a in p.skeleton_adj]
    members = p.simplices
    # check each maximal simplex once its highest label is assigned
    due: list[list[Simplex]] = [[] for _ in range(n)]
    for s in p.maximal:
        due[s[-1]].append(s)
    perm = [-1] * n
    used = [False] * n
    autos: list[tuple[int, ...]] = []

    def extend(v: int) -> None:
        if v == n:
            autos.append(tuple(perm))
            return
        for w in range(n):
            if used[w] or deg[w] != deg[v] or sdeg[w] != sdeg[v]:
                continue
            perm[v] = w
            if all(tuple(sorted(perm[x] for x in s)) in members for s in due[v]):
                used[w] = True
                extend(v + 1)
                used[w] = False
        perm[v] = -1

    extend(0)

    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in autos:
        for v, w in enumerate(a):
            rv, rw = find(v), find(w)
            if rv != rw:
                parent[max(rv, rw)] = min(rv, rw)
    return OrbitPartition(tuple(find(v) for v in range(n)), tuple(autos))
