"""Storage and indexing for the input simplicial complex.

A complex is kept as its maximal simplices only. Faces are never
materialized; membership of a vertex set is answered by intersecting the
posting lists of the vertex -> maximal-simplex inverted index.
"""

from __future__ import annotations

import hashlib
import io
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence, TextIO


class ParseError(ValueError):
    """Raised when a complex file cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _absorb(sets: Iterable[frozenset]) -> list[frozenset]:
    """Drop duplicates and sets contained in another set."""
    unique = sorted(set(sets), key=lambda s: (-len(s), sorted(s)))
    kept: list[frozenset] = []
    index: dict[int, list[int]] = {}
    for s in unique:
        postings = [index.get(v, ()) for v in s]
        smallest = min(postings, key=len)
        if any(s <= kept[i] for i in smallest):
            continue
        pos = len(kept)
        kept.append(s)
        for v in s:
            index.setdefault(v, []).append(pos)
    return kept


class ComplexStore:
    """Immutable simplicial complex backed by its maximal simplices.

    Vertices are remapped to the dense range ``0..num_vertices-1``;
    ``labels[i]`` holds the original id of dense vertex ``i``.
    """

    def __init__(self, maximal: Iterable[Iterable[int]], labels: Sequence[int] | None = None):
        sets = _absorb(frozenset(s) for s in maximal if s)
        if labels is None:
            originals = sorted({v for s in sets for v in s})
            remap = {v: i for i, v in enumerate(originals)}
            sets = [frozenset(remap[v] for v in s) for s in sets]
            labels = originals
        self.labels: tuple[int, ...] = tuple(labels)
        self._dense = {orig: i for i, orig in enumerate(self.labels)}
        n = len(self.labels)

        sets.sort(key=lambda s: (len(s), sorted(s)))
        self.maximal_simplices: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in sets)
        self._maxsets: tuple[frozenset, ...] = tuple(sets)

        postings: list[list[int]] = [[] for _ in range(n)]
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for mid, s in enumerate(self.maximal_simplices):
            for v in s:
                postings[v].append(mid)
                nbrs[v].update(s)
        # maximal simplices are already sorted by size, so each posting list is too
        self.vertex_index: tuple[tuple[int, ...], ...] = tuple(tuple(p) for p in postings)
        for v in range(n):
            nbrs[v].discard(v)
        self.neighbor_sets: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in nbrs)
        self.degrees: tuple[int, ...] = tuple(len(s) for s in self.neighbor_sets)
        self.dim = max((len(s) - 1 for s in self.maximal_simplices), default=-1)
        self._seed_cache: dict[int, frozenset[int]] = {}

    # -- construction ---------------------------------------------------

    @classmethod
    def from_simplices(cls, simplices: Iterable[Iterable[int]]) -> "ComplexStore":
        return cls([tuple(s) for s in simplices])

    @property
    def num_vertices(self) -> int:
        return len(self.labels)

    @property
    def vertices(self) -> range:
        return range(len(self.labels))

    def dense_id(self, original: int) -> int:
        return self._dense[original]

    def original_id(self, dense: int) -> int:
        return self.labels[dense]

    def to_original(self, vertices: Iterable[int]) -> list[int]:
        return sorted(self.labels[v] for v in vertices)

    def to_dense(self, vertices: Iterable[int]) -> set[int]:
        """Translate original ids; ids unknown to the store are dropped."""
        return {self._dense[v] for v in vertices if v in self._dense}

    # -- queries --------------------------------------------------------

    def is_simplex(self, vertices: Iterable[int]) -> bool:
        """True iff ``vertices`` (dense ids) lie in a common maximal simplex."""
        s = frozenset(vertices)
        if not s:
            raise ValueError("empty vertex set")
        n = len(self.labels)
        postings = []
        for v in s:
            if not 0 <= v < n:
                return False
            postings.append(self.vertex_index[v])
        if len(s) == 1:
            return True
        if len(s) == 2:
            a, b = s
            return b in self.neighbor_sets[a]
        shortest = min(postings, key=len)
        maxsets = self._maxsets
        size = len(s)
        for mid in shortest:
            m = maxsets[mid]
            if len(m) >= size and s <= m:
                return True
        return False

    def neighbors(self, u: int) -> frozenset[int]:
        return self.neighbor_sets[u]

    def seed_vertices(self, d: int) -> frozenset[int]:
        """Vertices of maximal simplices with at least ``d`` vertices."""
        if d < 1:
            raise ValueError("d must be >= 1")
        cached = self._seed_cache.get(d)
        if cached is None:
            cached = frozenset(v for s in self.maximal_simplices if len(s) >= d for v in s)
            self._seed_cache[d] = cached
        return cached

    def skeleton(self, n: int) -> "ComplexStore":
        """The ``n``-skeleton, as a store sharing this store's vertex ids."""
        if n < 1:
            raise ValueError("n must be >= 1")
        faces: list[tuple[int, ...]] = []
        for s in self.maximal_simplices:
            if len(s) <= n + 1:
                faces.append(s)
            else:
                faces.extend(combinations(s, n + 1))
        return ComplexStore(faces, labels=self.labels)

    # -- reporting ------------------------------------------------------

    @cached_property
    def num_edges(self) -> int:
        return sum(self.degrees) // 2

    @cached_property
    def num_triangles(self) -> int:
        triangles = set()
        for s in self.maximal_simplices:
            if len(s) >= 3:
                triangles.update(combinations(s, 3))
        return len(triangles)

    def counts(self) -> dict[str, int]:
        return {
            "vertices": self.num_vertices,
            "edges": self.num_edges,
            "triangles": self.num_triangles,
            "maximal_simplices": len(self.maximal_simplices),
            "max_dim": self.dim,
        }

    def dumps(self) -> str:
        """Serialize with original ids, one maximal simplex per line."""
        lines = sorted(tuple(sorted(self.labels[v] for v in s)) for s in self.maximal_simplices)
        return "".join(" ".join(map(str, s)) + "\n" for s in lines)

    def digest(self) -> str:
        return hashlib.sha256(self.dumps().encode()).hexdigest()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ComplexStore):
            return NotImplemented
        return self.labels == other.labels and self.maximal_simplices == other.maximal_simplices

    def __hash__(self) -> int:
        return hash((self.labels, self.maximal_simplices))

    def __repr__(self) -> str:
        return (
            f"ComplexStore(vertices={self.num_vertices}, "
            f"maximal={len(self.maximal_simplices)}, dim={self.dim})"
        )


def load_complex(source: TextIO | str) -> ComplexStore:
    """Parse a complex from a text stream (or a string of file contents).

    One simplex per line, vertices as whitespace-separated non-negative
    integers. Blank lines and lines starting with ``#`` are skipped.
    """
    if isinstance(source, str):
        source = io.StringIO(source)
    simplices = []
    for lineno, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            verts = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"not an integer list: {line!r}", lineno) from None
        if any(v < 0 for v in verts):
            raise ParseError("negative vertex id", lineno)
        if len(set(verts)) != len(verts):
            raise ParseError("repeated vertex in simplex", lineno)
        simplices.append(verts)
    if not simplices:
        raise ParseError("input contains no simplices")
    return ComplexStore(simplices)


def load_path(path: str) -> ComplexStore:
    with open(path, encoding="utf-8") as fh:
        return load_complex(fh)
