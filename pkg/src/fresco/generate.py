"""Seeded synthetic complexes, optionally with planted copies of a simplet."""

from __future__ import annotations

import random
from typing import Optional

from .simplet import Simplet


class InfeasibleParameters(ValueError):
    pass


def generate_complex(
    vertices: int,
    maximal: int,
    max_dim: int,
    seed: int = 0,
    min_dim: int = 1,
    dim_decay: float = 0.5,
    plant: Optional[str] = None,
    copies: int = 0,
) -> list[tuple[int, ...]]:
    """Random maximal simplices over vertices ``0..vertices-1``.

    Dimensions are drawn from ``min_dim..max_dim`` with weight
    ``dim_decay ** (d - min_dim)``. The ``maximal`` random simplices form an
    antichain among themselves. Planted copies of ``plant`` are placed on
    pairwise disjoint vertex sets and added on top, so every label of the
    planted simplet has at least ``copies`` distinct images.
    """
    if vertices < 1 or maximal < 0 or copies < 0:
        raise InfeasibleParameters("counts must be non-negative and vertices >= 1")
    if not 0 <= min_dim <= max_dim:
        raise InfeasibleParameters("need 0 <= min_dim <= max_dim")
    if max_dim + 1 > vertices:
        raise InfeasibleParameters(f"a {max_dim}-simplex needs {max_dim + 1} vertices")
    if not 0 < dim_decay:
        raise InfeasibleParameters("dim_decay must be positive")
    rng = random.Random(seed)
    out: list[tuple[int, ...]] = []

    if plant and copies:
        motif = Simplet.parse(plant)
        k = motif.num_vertices
        if k * copies > vertices:
            raise InfeasibleParameters(f"{copies} disjoint copies of a {k}-vertex simplet need {k * copies} vertices")
        pool = rng.sample(range(vertices), k * copies)
        for c in range(copies):
            host = pool[c * k:(c + 1) * k]
            for s in motif.maximal:
                out.append(tuple(sorted(host[v] for v in s)))

    dims = list(range(min_dim, max_dim + 1))
    weights = [dim_decay ** (d - min_dim) for d in dims]
    kept: list[frozenset] = []
    containing: dict[int, list[int]] = {}
    attempts = 0
    budget = 100 * maximal + 100
    while len(kept) < maximal:
        attempts += 1
        if attempts > budget:
            raise InfeasibleParameters(f"could not draw {maximal} distinct maximal simplices")
        d = rng.choices(dims, weights)[0]
        s = frozenset(rng.sample(range(vertices), d + 1))
        # comparable sets share a vertex with s
        near = {i for v in s for i in containing.get(v, ())}
        if any(s <= kept[i] or kept[i] <= s for i in near):
            continue
        for v in s:
            containing.setdefault(v, []).append(len(kept))
        kept.append(s)
    out.extend(tuple(sorted(s)) for s in kept)
    return out


def format_complex(simplices: list[tuple[int, ...]]) -> str:
    return "".join(" ".join(map(str, s)) + "\n" for s in simplices)
