import math

import pytest

import coxspec

LEHMER = [1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]


@pytest.fixture(scope="module")
def store():
    st = coxspec.LevelStore()
    st.build_to(2)
    return st


def test_store_counts(store):
    assert store.built_depth() == 2
    assert store.class_count(1) == 1
    assert store.class_count(2) == 2
    reps = store.class_representatives(2)
    assert len(reps) == 2
    for rep in reps:
        assert store.s0_level(rep) == 2


def test_demazure_product(store):
    assert store.demazure_product([[1, 2, 3]], [[1, 2, 3]]) == []
    prod = store.demazure_product([[1, 2, 3]], [[4, 5, 6]])
    assert store.s0_level(prod) == 2


def test_charpoly_and_salem():
    cp = coxspec.charpoly([[1, 2, 3]], list(range(2, 11)) + [1])
    assert len(cp) == 12 and cp[0] == 1
    salem, cyc = coxspec.strip_cyclotomic(cp)
    assert coxspec.is_salem(salem)
    value, decimal = coxspec.largest_real_root(salem)
    assert decimal == "1.17628"
    assert salem == LEHMER

    sq = coxspec.minpoly_power(LEHMER, 2)
    v2, _ = coxspec.largest_real_root(sq)
    assert math.isclose(v2, value * value, rel_tol=1e-9)


def test_catalog_level_one(store):
    cat = coxspec.Catalog()
    n = cat.enumerate_level(store, 1)
    assert n == 11
    cat.mark_primitive()
    recs = [cat.record(i) for i in cat.level_indices(1)]
    assert [r["radius_str"] for r in recs][:2] == ["1.17628", "1.21639"]
    assert sum(r["primitive"] for r in recs) == 10
    mean, stddev = cat.gap_stats(1)
    assert 0.02 < mean < 0.03


def test_hilbert_metric():
    x = coxspec.default_basepoint()
    y = [5, 1, 2, 1, 1, 0, 1, 1, 1, 1, 1]
    d = coxspec.hilbert_distance(x, y)
    assert d > 0
    assert math.isclose(d, coxspec.hilbert_distance(y, x), rel_tol=1e-12)
    assert coxspec.hilbert_distance(x, x) == 0
    assert coxspec.displacement([[1, 2, 3]]) > 0


def test_verify_suite():
    results = coxspec.run_verify("salem")
    assert results and all(r["pass"] for r in results)
