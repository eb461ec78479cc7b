from itertools import permutations

import pytest

from fresco.simplet import InvalidSimplet, Simplet, dimension, maximal_representation, orbits, sequences

from conftest import A, B, C, D, E, closed_triangle, edge, bowtie, open_triangle, wedge


def brute_orbits(p):
    autos = [
        perm
        for perm in permutations(range(p.num_vertices))
        if {tuple(sorted(perm[v] for v in s)) for s in p.simplices} == p.simplices
    ]
    classes = {frozenset(a[v] for a in autos) for v in range(p.num_vertices)}
    return autos, classes


def test_dimension():
    assert dimension(Simplet.vertex()) == 0
    assert dimension(bowtie()) == 2
    assert dimension(Simplet.parse("0,1,2,3")) == 3


@pytest.mark.parametrize(
    "p, dims, degs",
    [
        (edge(), (2, 1), (2, 2)),
        (closed_triangle(), (3, 3, 1), (4, 4, 4)),
        (open_triangle(), (3, 3), (3, 3, 3)),
    ],
)
def test_sequences(p, dims, degs):
    assert sequences(p) == (dims, degs)


def test_degree_sequence_is_sorted():
    # wedge center sits in 3 simplices, the ends in 2
    assert wedge().degree_sequence == (2, 2, 3)
    assert wedge().degrees == (2, 3, 2)


def test_orbits_closed_triangle():
    part = orbits(closed_triangle())
    assert len(part.automorphisms) == 6
    assert len(part.classes()) == 1
    assert tuple(range(3)) in part.automorphisms


def test_orbits_sample():
    part = orbits(bowtie())
    assert sorted(part.classes()) == [(A, B), (C,), (D, E)]


def test_orbits_wedge():
    part = orbits(wedge())
    assert sorted(part.classes()) == [(0, 2), (1,)]


@pytest.mark.parametrize("text", ["0,1,2;2,3;2,4;3,4", "0,1;1,2;2,3;3,0", "0,1,2;1,2,3", "0,1;0,2;0,3;1,2"])
def test_orbits_match_permutation_search(text):
    p = Simplet.parse(text)
    autos, classes = brute_orbits(p)
    part = p.orbits
    assert sorted(part.automorphisms) == sorted(autos)
    assert {frozenset(c) for c in part.classes()} == classes
    for a in part.automorphisms:
        for s in p.simplices:
            assert tuple(sorted(a[v] for v in s)) in p.simplices


def test_maximal_representation():
    assert maximal_representation(closed_triangle()) == ((0, 1, 2),)
    assert maximal_representation(bowtie()) == ((A, B, C), (C, D), (C, E), (D, E))
    assert maximal_representation(wedge()) == ((0, 1), (1, 2))
    p = bowtie()
    assert Simplet.from_maximal(p.num_vertices, p.maximal).simplices == p.simplices


def test_validator_rejects_bad_simplets():
    with pytest.raises(InvalidSimplet):
        Simplet(3, [(0,), (1,), (2,), (0, 1)])  # label 2 disconnected
    with pytest.raises(InvalidSimplet):
        Simplet(3, [(0,), (1,), (2,), (0, 1), (1, 2), (0, 1, 2)])  # face (0, 2) missing
    with pytest.raises(InvalidSimplet):
        Simplet(2, [(0,), (0, 1)])  # label 1 has no 0-simplex
    with pytest.raises(InvalidSimplet):
        Simplet.parse("")


def test_text_forms():
    p = Simplet.parse("1,2;0,1")
    assert p.raw_text() == "0,1;1,2"
    assert p.to_text() == wedge().to_text()
