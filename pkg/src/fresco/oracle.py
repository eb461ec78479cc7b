"""Brute-force reference implementations for testing.

Nothing here imports the mining engine. Complexes are read through their
``maximal_simplices`` and simplets through ``num_vertices`` and
``simplices`` (or their maximal simplices), and every membership question is
answered from an explicit all-faces expansion.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterable, NamedTuple, Sequence

GUARD = 10**8


class OracleRefused(RuntimeError):
    pass


class Pattern(NamedTuple):
    num_vertices: int
    simplices: frozenset  # full downward closure, sorted tuples
    maximal: tuple

    def text(self) -> str:
        return ";".join(",".join(map(str, s)) for s in self.maximal)


def _closure(sets: Iterable[Iterable[int]]) -> frozenset:
    out = set()
    for s in sets:
        s = tuple(sorted(s))
        for r in range(1, len(s) + 1):
            out.update(combinations(s, r))
    return frozenset(out)


def _maximal(simplices: Iterable[tuple]) -> tuple:
    simplices = list(simplices)
    keep = [s for s in simplices if not any(len(t) > len(s) and set(s) <= set(t) for t in simplices)]
    return tuple(sorted(set(keep)))


def make_pattern(num_vertices: int, maximal: Iterable[Iterable[int]]) -> Pattern:
    closure = _closure(maximal)
    return Pattern(num_vertices, closure, _maximal(closure))


def _as_pattern(p) -> Pattern:
    if isinstance(p, Pattern):
        return p
    closure = _closure(p.simplices)
    return Pattern(p.num_vertices, closure, _maximal(closure))


def all_faces(store) -> frozenset:
    return _closure(store.maximal_simplices)


def _num_vertices(store) -> int:
    return len({v for s in store.maximal_simplices for v in s})


def oracle_embeddings(store, p) -> list[tuple[int, ...]]:
    """Every injective map (label i -> entry i) realizing all simplices of ``p``."""
    p = _as_pattern(p)
    faces = all_faces(store)
    vertices = sorted({v for s in store.maximal_simplices for v in s})
    k = p.num_vertices
    if len(vertices) ** k > GUARD:
        raise OracleRefused(f"{len(vertices)}^{k} maps exceed the guard")
    # check each simplex as soon as its largest label is placed
    due: list[list[tuple]] = [[] for _ in range(k)]
    for s in p.simplices:
        due[max(s)].append(s)
    out = []
    phi: list[int] = []

    def rec(i: int) -> None:
        if i == k:
            out.append(tuple(phi))
            return
        for u in vertices:
            if u in phi:
                continue
            phi.append(u)
            if all(tuple(sorted(phi[w] for w in s)) in faces for s in due[i]):
                rec(i + 1)
            phi.pop()

    rec(0)
    return out


def oracle_image_sets(store, p) -> list[set[int]]:
    p = _as_pattern(p)
    images: list[set[int]] = [set() for _ in range(p.num_vertices)]
    for emb in oracle_embeddings(store, p):
        for v, u in enumerate(emb):
            images[v].add(u)
    return images


def oracle_sup(store, p) -> int:
    return min(len(i) for i in oracle_image_sets(store, p))


def oracle_isomorphic(p1, p2) -> bool:
    p1, p2 = _as_pattern(p1), _as_pattern(p2)
    if p1.num_vertices != p2.num_vertices or len(p1.simplices) != len(p2.simplices):
        return False
    target = p2.simplices
    for perm in permutations(range(p1.num_vertices)):
        if all(tuple(sorted(perm[v] for v in s)) in target for s in p1.simplices):
            return True
    return False


def oracle_key(p) -> tuple:
    """Smallest relabeled maximal-simplex list over all label permutations."""
    p = _as_pattern(p)
    best = None
    for perm in permutations(range(p.num_vertices)):
        key = tuple(sorted(tuple(sorted(perm[v] for v in s)) for s in p.maximal))
        if best is None or key < best:
            best = key
    return (p.num_vertices, best)


def _connected(k: int, maximal: Sequence[tuple]) -> bool:
    adj = {v: set() for v in range(k)}
    for s in maximal:
        for a, b in combinations(s, 2):
            adj[a].add(b)
            adj[b].add(a)
    seen, stack = {0}, [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == k


def _antichains(k: int):
    subsets = [frozenset(c) for r in range(k, 1, -1) for c in combinations(range(k), r)]
    chosen: list[frozenset] = []

    def rec(i: int):
        if i == len(subsets):
            yield list(chosen)
            return
        yield from rec(i + 1)
        s = subsets[i]
        if not any(s <= c or c <= s for c in chosen):
            chosen.append(s)
            yield from rec(i + 1)
            chosen.pop()

    yield from rec(0)


def oracle_enumerate_simplets(max_size: int) -> list[Pattern]:
    """One representative per isomorphism class of simplets with at most
    ``max_size`` vertices, by enumerating antichains of label subsets."""
    if max_size > 5:
        raise OracleRefused("enumeration is limited to 5 vertices")
    classes: list[Pattern] = [make_pattern(1, [(0,)])]
    for k in range(2, max_size + 1):
        buckets: dict[tuple, list[Pattern]] = {}
        for chain in _antichains(k):
            if not chain:
                continue
            maximal = [tuple(sorted(s)) for s in chain]
            if set().union(*chain) != set(range(k)) or not _connected(k, maximal):
                continue
            p = make_pattern(k, maximal)
            inv = (
                tuple(sorted(len(s) for s in p.maximal)),
                tuple(sorted(sum(v in s for s in p.simplices) for v in range(k))),
            )
            bucket = buckets.setdefault(inv, [])
            if not any(oracle_isomorphic(p, q) for q in bucket):
                bucket.append(p)
        for inv in sorted(buckets):
            classes.extend(buckets[inv])
    return classes
