"""Generation of the simplet lattice through the widen and inflate rules."""

from __future__ import annotations

from itertools import combinations
from typing import NamedTuple

from .canon import Registry
from .simplet import Simplet, Simplex

WIDEN = "widen"
INFLATE = "inflate"


class Expansion(NamedTuple):
    simplet: Simplet
    rule: str
    added: Simplex


def widen(p: Simplet, v: int) -> Simplet:
    """Attach a fresh label to ``v`` through a new 1-simplex."""
    if not 0 <= v < p.num_vertices:
        raise ValueError(f"label {v} not in simplet")
    u = p.num_vertices
    return Simplet(u + 1, p.simplices | {(u,), (v, u)}, parent=p)


def face_index(p: Simplet) -> dict[Simplex, list[Simplex]]:
    """Map each codimension-1 face to the member simplices containing it."""
    index: dict[Simplex, list[Simplex]] = {}
    for s in sorted(p.simplices):
        if len(s) < 2:
            continue
        for f in combinations(s, len(s) - 1):
            index.setdefault(f, []).append(s)
    return index


def _closes_joist(p: Simplet, tau: Simplex) -> bool:
    return tau not in p.simplices and all(
        f in p.simplices for f in combinations(tau, len(tau) - 1)
    )


def find_joists(p: Simplet) -> list[Simplex]:
    """Simplices absent from ``p`` whose codimension-1 faces are all present.

    Missing 1-simplices come from a scan of label pairs. Higher simplices
    ``sigma + {w}`` are proposed through the face index: a member sharing a
    codimension-1 face ``f`` of ``sigma`` contributes its vertex outside
    ``f``. Every proposal is verified against the full face condition.
    """
    out: set[Simplex] = set()
    n = p.num_vertices
    for a, b in combinations(range(n), 2):
        if (a, b) not in p.simplices:
            out.add((a, b))
    index = face_index(p)
    for sigma in p.simplices:
        if len(sigma) < 2:
            continue
        sset = set(sigma)
        for f in combinations(sigma, len(sigma) - 1):
            for other in index.get(f, ()):
                extra = set(other) - sset
                if len(extra) != 1:
                    continue
                tau = tuple(sorted(sset | extra))
                if tau not in out and _closes_joist(p, tau):
                    out.add(tau)
    return sorted(out, key=lambda s: (len(s), s))


def inflate(p: Simplet, tau: Simplex) -> Simplet:
    tau = tuple(sorted(tau))
    if len(tau) < 2 or not _closes_joist(p, tau):
        raise ValueError(f"{tau} does not close a joist of {p!r}")
    return Simplet(p.num_vertices, p.simplices | {tau}, parent=p)


def expansions(p: Simplet, max_size: int, inflate_at_cap: bool = True) -> list[Expansion]:
    """All raw children of ``p``: widen by ascending anchor, then inflate."""
    children: list[Expansion] = []
    below_cap = p.num_vertices < max_size
    if below_cap:
        for v in range(p.num_vertices):
            child = widen(p, v)
            children.append(Expansion(child, WIDEN, (v, p.num_vertices)))
    if below_cap or inflate_at_cap:
        for tau in find_joists(p):
            children.append(Expansion(inflate(p, tau), INFLATE, tau))
    return children


def expand_all(p: Simplet, registry: Registry, max_size: int, inflate_at_cap: bool = True) -> list[Expansion]:
    """Children of ``p`` not isomorphic to anything already registered."""
    return [e for e in expansions(p, max_size, inflate_at_cap) if registry.register(e.simplet)]
