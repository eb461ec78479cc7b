import random
from itertools import permutations

from hypothesis import given, settings
from hypothesis import strategies as st

from fresco.canon import (
    Registry,
    canonical_form,
    quick_reject,
    skeleton_isomorphic,
    to_bipartite,
)
from fresco.lattice import widen
from fresco.oracle import oracle_enumerate_simplets, oracle_isomorphic
from fresco.simplet import Simplet

from conftest import closed_triangle, edge, bowtie, open_triangle, relabel, wedge


def test_quick_reject():
    assert quick_reject(open_triangle(), closed_triangle())
    assert not quick_reject(bowtie(), bowtie())
    assert quick_reject(wedge(), edge())


def test_skeleton_isomorphic():
    assert skeleton_isomorphic(open_triangle(), closed_triangle())
    assert not skeleton_isomorphic(wedge(), open_triangle())
    p = bowtie()
    assert skeleton_isomorphic(p, relabel(p, [4, 2, 0, 3, 1]))


def test_to_bipartite():
    g = to_bipartite(closed_triangle())
    assert (g.num_left, g.num_right, len(g.edges)) == (3, 1, 3)
    assert g.colors()[3:] == [(1, 2)]
    g = to_bipartite(open_triangle())
    assert (g.num_left, g.num_right, len(g.edges)) == (3, 3, 6)
    assert g.colors()[3:] == [(1, 1)] * 3
    g = to_bipartite(bowtie())
    assert (g.num_left, g.num_right, len(g.edges)) == (5, 4, 9)
    assert sorted(c for _, c in g.colors()[5:]) == [1, 1, 1, 2]


def test_bipartite_size_bounds():
    for p in oracle_enumerate_simplets(5):
        s = Simplet.from_maximal(p.num_vertices, p.maximal)
        g = to_bipartite(s)
        n = s.num_vertices
        assert g.num_left + g.num_right <= n * (n + 1) // 2 or n == 1
        assert len(g.edges) == sum(len(m) for m in s.maximal)


def test_canonical_form_invariance_small():
    p = bowtie()
    base = canonical_form(p)
    for perm in permutations(range(5)):
        assert canonical_form(relabel(p, perm)) == base
    assert canonical_form(open_triangle()) != canonical_form(closed_triangle())
    forms = {canonical_form(x).data for x in (wedge(), open_triangle(), closed_triangle())}
    assert len(forms) == 3


def test_canonical_form_deterministic_bytes():
    p = Simplet.parse("0,1,2;2,3;2,4;3,4")
    assert canonical_form(p).hex() == canonical_form(Simplet.parse("3,4;2,4;0,1,2;2,3")).hex()
    # byte layout: n, m, then sorted (dim, mask) records
    data = canonical_form(closed_triangle()).data
    assert data == bytes([3, 1, 2, 0b111])


def test_relabeling_reproduces_canonical_text():
    p = bowtie()
    q = relabel(p, [3, 1, 4, 0, 2])
    assert p.to_text() == q.to_text()
    assert p.to_text() == "0,1;0,2;1,2;2,3,4"


def test_registry_basic():
    reg = Registry()
    assert reg.register(edge())
    assert not reg.register(edge())
    e = edge()
    assert reg.register(widen(e, 0))
    assert not reg.register(widen(e, 1))


def test_registry_size_three_classes():
    reg = Registry()
    raw = [Simplet.vertex(), edge(), wedge(), Simplet.parse("0,1;0,2"), open_triangle(),
           Simplet.parse("0,2;1,2;0,1"), closed_triangle(), Simplet.parse("2,1,0")]
    fresh = [p for p in raw if reg.register(p)]
    assert [p.raw_text() for p in fresh] == ["0", "0,1", "0,1;1,2", "0,1;0,2;1,2", "0,1,2"]


simplet_texts = st.sampled_from([p for p in oracle_enumerate_simplets(5)])


@settings(max_examples=300, deadline=None)
@given(simplet_texts, st.randoms(use_true_random=False))
def test_quick_reject_and_canon_survive_relabeling(p, rnd):
    s = Simplet.from_maximal(p.num_vertices, p.maximal)
    perm = list(range(s.num_vertices))
    rnd.shuffle(perm)
    q = relabel(s, perm)
    assert not quick_reject(s, q)
    assert skeleton_isomorphic(s, q)
    assert canonical_form(s) == canonical_form(q)


def test_registry_agrees_with_oracle_on_shuffled_stream():
    classes = oracle_enumerate_simplets(4)
    rng = random.Random(3)
    stream = []
    for p in classes:
        s = Simplet.from_maximal(p.num_vertices, p.maximal)
        for _ in range(3):
            perm = list(range(s.num_vertices))
            rng.shuffle(perm)
            stream.append(relabel(s, perm))
    rng.shuffle(stream)
    reg = Registry()
    kept = [s for s in stream if reg.register(s)]
    assert len(kept) == len(classes)
    for i, a in enumerate(kept):
        for b in kept[i + 1:]:
            assert not oracle_isomorphic(a, b)
