import random

import pytest

from fresco.complex_store import ComplexStore
from fresco.miner import DECISION, EXACT, MiningConfig, mine
from fresco.oracle import oracle_enumerate_simplets, oracle_key, oracle_sup

from conftest import closed_triangle, edge, open_triangle, random_complex, wedge


def keyed(result):
    return {oracle_key(e.simplet): e.support for e in result.entries}


def test_ktoy_exact_tau3(ktoy):
    res = mine(ktoy, MiningConfig(tau=3, max_size=3, mode=EXACT))
    want = {oracle_key(edge()): 5, oracle_key(wedge()): 5, oracle_key(open_triangle()): 5, oracle_key(closed_triangle()): 3}
    assert keyed(res) == want
    assert [e.support for e in res.sorted_entries()] == [3, 5, 5, 5]


def test_ktoy_decision_matches_exact_set(ktoy):
    dec = mine(ktoy, MiningConfig(tau=3, max_size=3, mode=DECISION))
    ex = mine(ktoy, MiningConfig(tau=3, max_size=3, mode=EXACT))
    assert set(keyed(dec)) == set(keyed(ex))
    assert all(e.support == 3 and not e.exact for e in dec.entries)


def test_ktoy_high_tau_high_dim_is_empty(ktoy):
    assert mine(ktoy, MiningConfig(tau=4, max_size=3, min_dim=2, mode=EXACT)).entries == []


def test_size_one_cap_yields_nothing(ktoy):
    res = mine(ktoy, MiningConfig(tau=1, max_size=1))
    assert res.entries == []
    assert res.stats["examined"] == 0


def test_tau_above_vertex_count(ktoy):
    res = mine(ktoy, MiningConfig(tau=ktoy.num_vertices + 1))
    assert res.entries == [] and res.stats["examined"] == 0


@pytest.mark.parametrize(
    "kwargs", [dict(tau=0), dict(tau=1, max_size=0), dict(tau=1, min_dim=0), dict(tau=1, mode="x"), dict(tau=1, workers=0)]
)
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        MiningConfig(**kwargs)


def test_min_dim_filters_output_only(ktoy):
    res = mine(ktoy, MiningConfig(tau=3, max_size=3, min_dim=2, mode=EXACT))
    assert keyed(res) == {oracle_key(closed_triangle()): 3}


def test_monotone_in_tau():
    rng = random.Random(17)
    for _ in range(15):
        store = random_complex(rng)
        prev = None
        for tau in range(1, store.num_vertices + 1):
            cur = set(keyed(mine(store, MiningConfig(tau=tau, max_size=4))))
            if prev is not None:
                assert cur <= prev
            prev = cur


def test_pruning_soundness():
    rng = random.Random(23)
    for _ in range(15):
        store = random_complex(rng)
        res = mine(store, MiningConfig(tau=2, max_size=4, mode=EXACT))
        verdict = {id(x.simplet): x.frequent for x in res.explored}
        for x in res.explored:
            if x.parent.num_vertices > 1:
                assert verdict[id(x.parent)], "child of an infrequent simplet was examined"
            assert oracle_sup(store, x.simplet) <= oracle_sup(store, x.parent)
        for e in res.entries:
            assert verdict[id(e.simplet)]


def test_matches_oracle_small_corpus():
    classes = [p for p in oracle_enumerate_simplets(4) if p.num_vertices > 1]
    rng = random.Random(31)
    for _ in range(10):
        store = random_complex(rng)
        sups = {oracle_key(p): oracle_sup(store, p) for p in classes}
        for tau in (1, 2, 3, 5):
            want = {k: s for k, s in sups.items() if s >= tau}
            assert keyed(mine(store, MiningConfig(tau=tau, max_size=4, mode=EXACT))) == want
            assert set(keyed(mine(store, MiningConfig(tau=tau, max_size=4)))) == set(want)


def test_cycle_graph():
    c5 = ComplexStore([[i, (i + 1) % 5] for i in range(5)])
    res = mine(c5, MiningConfig(tau=5, max_size=3, mode=EXACT))
    assert keyed(res) == {oracle_key(edge()): 5, oracle_key(wedge()): 5}


def test_star_graph():
    star = ComplexStore([[0, leaf] for leaf in range(1, 5)])
    res = mine(star, MiningConfig(tau=4, max_size=2, mode=EXACT))
    assert keyed(res) == {oracle_key(edge()): 5}
    # every wedge must use the centre as its middle label
    res = mine(star, MiningConfig(tau=2, max_size=3, mode=EXACT))
    assert keyed(res) == {oracle_key(edge()): 5}


def test_exact_supports_reproducible(sample):
    a = mine(sample, MiningConfig(tau=1, max_size=4, mode=EXACT))
    b = mine(sample, MiningConfig(tau=1, max_size=4, mode=EXACT))
    assert [(e.canonical, e.support) for e in a.sorted_entries()] == [(e.canonical, e.support) for e in b.sorted_entries()]


@pytest.mark.parametrize("mode", [DECISION, EXACT])
def test_worker_count_does_not_change_output(sample, mode):
    base = mine(sample, MiningConfig(tau=1, max_size=4, mode=mode))
    for workers in (2, 4):
        other = mine(sample, MiningConfig(tau=1, max_size=4, mode=mode, workers=workers))
        assert [(e.canonical, e.support) for e in other.sorted_entries()] == [
            (e.canonical, e.support) for e in base.sorted_entries()
        ]


def test_without_inflation_at_cap_misses_closed_triangle(ktoy):
    res = mine(ktoy, MiningConfig(tau=3, max_size=3, mode=EXACT, inflate_at_cap=False))
    assert set(keyed(res)) == {oracle_key(edge()), oracle_key(wedge())}


def test_stats_recorded(ktoy):
    res = mine(ktoy, MiningConfig(tau=3, max_size=3))
    for key in ("examined", "pruned", "canonizations", "skeleton_checks", "registered", "frequent", "wall_time"):
        assert key in res.stats
    assert res.stats["frequent"] == 4
    assert set(res.level_times) <= {2, 3}
