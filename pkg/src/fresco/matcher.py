"""Image-set computation for a simplet against a complex.

Occurrences are injective label -> vertex maps under which every simplex of
the simplet lands on a simplex of the complex. Extra simplices of the
complex on the matched vertices are tolerated (non-induced matching).

Two examination strategies are provided:

* :func:`examine_decision` answers "is SUP >= tau?" and stops as soon as
  each label has tau images. It inherits non-candidates from the parent
  simplet and gives each candidate a time budget, retrying timed-out
  candidates without a budget only when still needed.
* :func:`examine_exact` computes complete image sets, restricting the
  candidates of inherited labels to the parent's exact image sets.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from typing import Mapping, MutableMapping, Sequence

from .complex_store import ComplexStore
from .simplet import OrbitPartition, Simplet

ImageSets = list[set[int]]


class MatchStatus(enum.Enum):
    COMPLETE = "complete"
    PARTIAL = "partial"
    TIMED_OUT = "timed_out"


@dataclass
class ExamineOutcome:
    frequent: bool
    images: ImageSets | None = None
    noncandidates: ImageSets | None = None

    @property
    def support(self) -> int:
        if not self.frequent or self.images is None:
            return 0
        return min(len(i) for i in self.images)


def satisfies_constraints(
    store: ComplexStore, p: Simplet, m: Mapping[int, int], x: int, n: int
) -> bool:
    """Would assigning ``x -> n`` keep every simplex containing ``x`` realized?

    Only maximal members are checked; their faces follow by downward closure.
    """
    for sigma in p.maximal_by_label[x]:
        image = [m[w] for w in sigma if w != x and w in m]
        image.append(n)
        if not store.is_simplex(image):
            return False
    return True


@dataclass(frozen=True)
class _Step:
    label: int
    anchors: tuple[int, ...]
    # tuples of earlier labels that, with this label, must form a simplex;
    # only those with >= 2 earlier labels, since edges are covered by anchors
    constraints: tuple[tuple[int, ...], ...]


def dfs_order(p: Simplet, start: int) -> list[int]:
    """Preorder DFS of the 1-skeleton from ``start``, lower labels first."""
    order: list[int] = []
    seen: set[int] = set()

    def visit(v: int) -> None:
        seen.add(v)
        order.append(v)
        for w in sorted(p.skeleton_adj[v]):
            if w not in seen:
                visit(w)

    visit(start)
    return order


def _plan(p: Simplet, start: int) -> tuple[_Step, ...]:
    cache = p.__dict__.setdefault("_match_plans", {})
    steps = cache.get(start)
    if steps is None:
        order = dfs_order(p, start)
        pos = {v: i for i, v in enumerate(order)}
        built = []
        for i, x in enumerate(order[1:], start=1):
            anchors = tuple(w for w in order[:i] if w in p.skeleton_adj[x])
            cons = []
            for sigma in p.maximal_by_label[x]:
                earlier = tuple(w for w in sigma if w != x and pos[w] < i)
                if len(earlier) >= 2 and earlier not in cons:
                    cons.append(earlier)
            built.append(_Step(x, anchors, tuple(cons)))
        steps = tuple(built)
        cache[start] = steps
    return steps


def _search(
    store: ComplexStore,
    steps: Sequence[_Step],
    i: int,
    m: dict[int, int],
    used: set[int],
    deadline: float | None,
    ui: Sequence[set[int] | frozenset[int]] | None,
) -> MatchStatus:
    if deadline is not None and time.monotonic() >= deadline:
        return MatchStatus.TIMED_OUT
    if i == len(steps):
        return MatchStatus.COMPLETE
    step = steps[i]
    nbrs = store.neighbor_sets
    pools = sorted((nbrs[m[w]] for w in step.anchors), key=len)
    cands = set(pools[0]).intersection(*pools[1:]) if len(pools) > 1 else set(pools[0])
    if ui is not None:
        cands &= ui[step.label]
    cands -= used
    x = step.label
    for n in sorted(cands):
        if not all(store.is_simplex([m[w] for w in c] + [n]) for c in step.constraints):
            continue
        m[x] = n
        used.add(n)
        status = _search(store, steps, i + 1, m, used, deadline, ui)
        if status is MatchStatus.COMPLETE:
            return status
        del m[x]
        used.discard(n)
        if status is MatchStatus.TIMED_OUT:
            return status
    return MatchStatus.PARTIAL


def find_match(
    store: ComplexStore,
    p: Simplet,
    m: MutableMapping[int, int],
    timeout: float | None = None,
    ui: Sequence[set[int] | frozenset[int]] | None = None,
) -> tuple[MatchStatus, dict[int, int]]:
    """Complete the single-entry assignment ``m`` to a full occurrence.

    Labels are visited in DFS order of the 1-skeleton from the seeded
    label. ``ui`` optionally restricts each label's candidates.
    """
    if len(m) != 1:
        raise ValueError("find_match expects exactly one seeded label")
    deadline = None if timeout is None else time.monotonic() + timeout
    (v, u), = m.items()
    assignment = {v: u}
    status = _search(store, _plan(p, v), 0, assignment, {u}, deadline, ui)
    return status, assignment


def propagate(images: ImageSets, m: Mapping[int, int], orbits: OrbitPartition) -> ImageSets:
    """Record a complete assignment, shared across each label's orbit."""
    for w, u in m.items():
        for w2 in orbits.orbit(w):
            images[w2].add(u)
    return images


def _orbit_lists(p: Simplet) -> list[tuple[int, ...]]:
    return [p.orbits.orbit(v) for v in range(p.num_vertices)]


def _record(images: ImageSets, m: Mapping[int, int], orbit_lists) -> None:
    for w, u in m.items():
        for w2 in orbit_lists[w]:
            images[w2].add(u)


def examine_decision(
    store: ComplexStore,
    p: Simplet,
    tau: int,
    parent_images: Sequence[set[int]] | None = None,
    parent_noncandidates: Sequence[set[int]] | None = None,
    timeout: float | None = 0.5,
) -> ExamineOutcome:
    """Decide whether SUP(p) >= tau.

    ``parent_images`` and ``parent_noncandidates`` are indexed by the
    parent's labels; labels of ``p`` beyond them are fresh. Returned image
    sets may be truncated once a label reaches ``tau`` images.
    """
    n = p.num_vertices
    nparent = len(parent_noncandidates) if parent_noncandidates is not None else 0
    nc: ImageSets = [
        set(parent_noncandidates[v]) if v < nparent else set() for v in range(n)  # type: ignore[index]
    ]
    seed = store.seed_vertices(n)
    images: ImageSets = [set(seed) for _ in range(n)]
    orbit_lists = _orbit_lists(p)
    label_deg = [len(a) for a in p.skeleton_adj]
    degrees = store.degrees
    nimages = len(parent_images) if parent_images is not None else 0

    for v in range(n):
        found = images[v]
        if len(found) >= tau:
            continue
        bad = nc[v]
        cands = [u for u in store.vertices if u not in found and u not in bad]
        if v < nimages:
            prefer = parent_images[v]  # type: ignore[index]
            cands.sort(key=lambda u: u not in prefer)
        # every later image of v comes from this pool, so this bounds |I(v)|
        bound = len(cands) + len(found)
        if bound < tau:
            return ExamineOutcome(False, noncandidates=nc)
        failures = 0
        resume: list[int] = []
        for u in cands:
            if u in found:
                continue
            if degrees[u] < label_deg[v]:
                bad.add(u)
                failures += 1
            else:
                status, m = find_match(store, p, {v: u}, timeout=timeout)
                if status is MatchStatus.COMPLETE:
                    _record(images, m, orbit_lists)
                elif status is MatchStatus.TIMED_OUT:
                    resume.append(u)
                else:
                    bad.add(u)
                    failures += 1
            if bound - failures < tau:
                return ExamineOutcome(False, noncandidates=nc)
            if len(found) >= tau:
                break
        # second pass over timed-out candidates runs without a budget
        for u in resume:
            if len(found) >= tau:
                break
            if u in found:
                continue
            status, m = find_match(store, p, {v: u}, timeout=None)
            if status is MatchStatus.COMPLETE:
                _record(images, m, orbit_lists)
            else:
                bad.add(u)
                failures += 1
                if bound - failures < tau:
                    return ExamineOutcome(False, noncandidates=nc)
        if len(found) < tau:
            return ExamineOutcome(False, noncandidates=nc)
    return ExamineOutcome(True, images=images, noncandidates=nc)


def examine_exact(
    store: ComplexStore,
    p: Simplet,
    ui: Sequence[set[int] | frozenset[int]] | None,
    tau: int,
) -> ExamineOutcome:
    """Complete image sets of ``p``, or Infrequent as soon as SUP < tau is certain.

    ``ui[v]`` bounds the images of label ``v`` (the parent's exact image set
    for inherited labels, all vertices for the fresh one).
    """
    n = p.num_vertices
    all_vertices = frozenset(store.vertices)
    bounds = [all_vertices] * n if ui is None else list(ui)
    seed = store.seed_vertices(n)
    images: ImageSets = [set(seed) for _ in range(n)]
    orbit_lists = _orbit_lists(p)
    label_deg = [len(a) for a in p.skeleton_adj]
    degrees = store.degrees

    for v in sorted(range(n), key=lambda v: (len(bounds[v]), v)):
        found = images[v]
        cands = sorted(set(bounds[v]) - found)
        bound = len(cands) + len(found)
        if bound < tau:
            return ExamineOutcome(False)
        failures = 0
        for u in cands:
            if u in found:
                continue
            if degrees[u] < label_deg[v]:
                failures += 1
            else:
                status, m = find_match(store, p, {v: u}, ui=bounds)
                if status is MatchStatus.COMPLETE:
                    _record(images, m, orbit_lists)
                else:
                    failures += 1
            if bound - failures < tau:
                return ExamineOutcome(False)
    return ExamineOutcome(True, images=images)
