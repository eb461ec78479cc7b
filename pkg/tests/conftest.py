from __future__ import annotations

import random

import pytest

from fresco.complex_store import ComplexStore, load_complex
from fresco.simplet import Simplet

SAMPLE_TEXT = "1 2 3 7\n2 6\n2 7\n6 7\n2 4\n2 5\n4 5\n"

# labels A..E -> 0..4
A, B, C, D, E = range(5)

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def sample():
    return load_complex(SAMPLE_TEXT)


@pytest.fixture
def ktoy():
    return ComplexStore([[0, 1, 2], [2, 3], [3, 4], [2, 4]])


def edge() -> Simplet:
    return Simplet.parse("0,1")


def wedge() -> Simplet:
    return Simplet.parse("0,1;1,2")


def open_triangle() -> Simplet:
    return Simplet.parse("0,1;0,2;1,2")


def closed_triangle() -> Simplet:
    return Simplet.parse("0,1,2")


def bowtie() -> Simplet:
    # filled triangle ABC and hollow triangle CDE sharing C
    return Simplet.parse("0,1,2;2,3;2,4;3,4")


def random_complex(rng: random.Random, max_vertices: int = 12, max_maximal: int = 15, max_dim: int = 3) -> ComplexStore:
    n = rng.randint(4, max_vertices)
    m = rng.randint(1, max_maximal)
    sims = [rng.sample(range(n), rng.randint(1, min(max_dim + 1, n))) for _ in range(m)]
    return ComplexStore(sims)


def relabel(p: Simplet, perm) -> Simplet:
    return Simplet.from_maximal(p.num_vertices, [[perm[v] for v in s] for s in p.maximal])
