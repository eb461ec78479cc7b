"""Depth-first frequent simplet mining over the widen/inflate lattice."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .canon import CanonicalForm, Registry
from .complex_store import ComplexStore
from .lattice import expand_all
from .matcher import ExamineOutcome, ImageSets, examine_decision, examine_exact
from .simplet import Simplet

log = logging.getLogger(__name__)

DECISION = "decision"
EXACT = "exact"


@dataclass(frozen=True)
class MiningConfig:
    tau: int
    max_size: int = 5
    min_dim: int = 1
    mode: str = DECISION
    timeout: Optional[float] = 0.5
    workers: int = 1
    inflate_at_cap: bool = True

    def __post_init__(self):
        if self.tau < 1:
            raise ValueError("tau must be >= 1")
        if self.max_size < 1:
            raise ValueError("max_size must be >= 1")
        if self.min_dim < 1:
            raise ValueError("min_dim must be >= 1")
        if self.mode not in (DECISION, EXACT):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass
class MinedSimplet:
    simplet: Simplet
    support: int
    exact: bool

    @property
    def canonical(self) -> CanonicalForm:
        return self.simplet.canonical

    @property
    def dimension(self) -> int:
        return self.simplet.dimension

    @property
    def size(self) -> int:
        return self.simplet.num_vertices

    def text(self) -> str:
        return self.simplet.to_text()


@dataclass
class Explored:
    """One examined lattice node: who generated it and what was decided."""

    simplet: Simplet
    parent: Simplet
    frequent: bool
    support: int


@dataclass
class MiningResult:
    config: MiningConfig
    entries: list[MinedSimplet] = field(default_factory=list)
    explored: list[Explored] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    level_times: dict[int, float] = field(default_factory=dict)

    def sorted_entries(self) -> list[MinedSimplet]:
        return sorted(self.entries, key=lambda e: (-e.dimension, -e.support, e.canonical.data))


@dataclass
class _Node:
    simplet: Simplet
    images: ImageSets
    noncandidates: ImageSets


class _Miner:
    def __init__(self, store: ComplexStore, cfg: MiningConfig):
        self.store = store
        self.cfg = cfg
        self.registry = Registry()
        self.result = MiningResult(cfg)
        self.pool = ThreadPoolExecutor(cfg.workers) if cfg.workers > 1 else None

    def examine(self, child: Simplet, parent: _Node) -> tuple[ExamineOutcome, float]:
        start = time.perf_counter()
        cfg = self.cfg
        if cfg.mode == EXACT:
            k = parent.simplet.num_vertices
            everything = frozenset(self.store.vertices)
            ui = [parent.images[v] if v < k else everything for v in range(child.num_vertices)]
            out = examine_exact(self.store, child, ui, cfg.tau)
        else:
            out = examine_decision(
                self.store, child, cfg.tau, parent.images, parent.noncandidates, cfg.timeout
            )
        return out, time.perf_counter() - start

    def expand(self, node: _Node) -> None:
        batch = expand_all(node.simplet, self.registry, self.cfg.max_size, self.cfg.inflate_at_cap)
        children = [e.simplet for e in batch]
        if not children:
            return
        if self.pool is not None and len(children) > 1:
            outcomes = list(self.pool.map(lambda c: self.examine(c, node), children))
        else:
            outcomes = [self.examine(c, node) for c in children]
        res = self.result
        frequent = []
        for child, (out, elapsed) in zip(children, outcomes):
            res.stats["examined"] += 1
            size = child.num_vertices
            res.level_times[size] = res.level_times.get(size, 0.0) + elapsed
            res.explored.append(Explored(child, node.simplet, out.frequent, out.support))
            if not out.frequent:
                res.stats["pruned"] += 1
                continue
            if child.dimension >= self.cfg.min_dim:
                exact = self.cfg.mode == EXACT
                support = out.support if exact else self.cfg.tau
                res.entries.append(MinedSimplet(child, support, exact))
            frequent.append(_Node(child, out.images, out.noncandidates or [set() for _ in out.images]))
        for f in frequent:
            self.expand(f)

    def run(self) -> MiningResult:
        res = self.result
        res.stats.update(examined=0, pruned=0, canonizations=0, skeleton_checks=0)
        started = time.perf_counter()
        n = self.store.num_vertices
        root = Simplet.vertex()
        self.registry.register(root)
        try:
            if n >= self.cfg.tau:
                self.expand(_Node(root, [set(self.store.vertices)], [set()]))
        finally:
            if self.pool is not None:
                self.pool.shutdown()
        res.stats["canonizations"] = self.registry.canonizations
        res.stats["skeleton_checks"] = self.registry.skeleton_checks
        res.stats["registered"] = len(self.registry)
        res.stats["frequent"] = len(res.entries)
        res.stats["wall_time"] = time.perf_counter() - started
        log.info("mined %d simplets (%d examined)", len(res.entries), res.stats["examined"])
        return res


def mine(store: ComplexStore, cfg: MiningConfig) -> MiningResult:
    """All simplets with at most ``max_size`` labels, dimension at least
    ``min_dim`` and support at least ``tau``.

    In exact mode each entry carries its exact support; in decision mode the
    support is reported as ``tau`` (a lower bound).
    """
    return _Miner(store, cfg).run()
