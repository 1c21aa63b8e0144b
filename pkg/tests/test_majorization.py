
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from passivity_lab.majorization import (
    DimensionCapError,
    HoffmanDecomposition,
    InfeasibleError,
    NotMajorizedError,
    Partition,
    asymmetric_hoffman_majorizes,
    decompose_hoffman,
    enumerate_partitions,
    find_hoffman_matrix,
    hoffman_majorizes,
    hoffman_weights,
    is_asymmetric_hoffman_matrix,
    is_hoffman_matrix,
    is_nonincreasing_prob,
    majorizes,
    partition_matrix,
    project_simplex,
)
from passivity_lab.sampling import random_hoffman_matrix, random_hoffman_pair, random_passive


def tt(t):
    return np.array([[t, 1 - t], [1 - t, t]])


@pytest.mark.parametrize("v, expected", [
    ((1, 0, 0), True),
    ((1 / 3, 1 / 3, 1 / 3), True),
    ((0.2, 0.5, 0.3), False),
    ((0.6, 0.3), False),
    ((0.7, 0.4, -0.1), False),
])
def test_is_nonincreasing_prob(v, expected):
    assert is_nonincreasing_prob(v) == expected


@pytest.mark.parametrize("y, x, expected", [
    ((1, 0), (0.5, 0.5), True),
    ((0.5, 0.3, 0.2), (0.5, 0.3, 0.2), True),
    ((0.5, 0.3, 0.2), (0.6, 0.3, 0.1), False),
    ((0.2, 0.3, 0.5), (0.4, 0.3, 0.3), True),
])
def test_majorizes(y, x, expected):
    assert majorizes(y, x) == expected


def test_majorizes_length_mismatch():
    with pytest.raises(ValueError):
        majorizes([1, 0], [1, 0, 0])


def test_hoffman_majorizes_examples(rng):
    for d in range(2, 7):
        q = random_passive(d, rng)
        assert hoffman_majorizes(q, np.full(d, 1 / d))
        p = random_passive(d, rng)
        assert hoffman_majorizes(np.eye(d)[0], p)
    assert not hoffman_majorizes([0.5, 0.3, 0.2], [0.6, 0.2, 0.2])
    with pytest.raises(ValueError):
        hoffman_majorizes([0.2, 0.8], [0.5, 0.5])


@pytest.mark.parametrize("R, expected", [
    (np.eye(4), True),
    (tt(0.7), True),
    (tt(0.5), True),
    (tt(0.3), False),
    (np.full((3, 3), 1 / 3), True),
    # permutation matrices are doubly stochastic but reverse order
    (np.eye(3)[[1, 0, 2]], False),
])
def test_is_hoffman_matrix(R, expected):
    assert is_hoffman_matrix(R) == expected


def test_is_hoffman_matrix_rejects_non_square():
    with pytest.raises(ValueError):
        is_hoffman_matrix(np.ones((2, 3)) / 3)


def test_enumerate_partitions():
    assert [str(t) for t in enumerate_partitions(1)] == ["(0)"]
    assert [str(t) for t in enumerate_partitions(3)] == ["(0,1,2)", "(01,2)", "(0,12)", "(012)"]
    assert len(enumerate_partitions(5)) == 16
    assert len(set(enumerate_partitions(6))) == 32
    with pytest.raises(DimensionCapError):
        enumerate_partitions(13)
    assert len(enumerate_partitions(13, max_dim=13)) == 4096


def test_partition_cuts_round_trip():
    for tau in enumerate_partitions(5):
        assert Partition.from_cuts(tau.cuts) == tau
        assert sum(tau.sizes) == 5


def test_partition_matrix_examples():
    P = {str(t): t for t in enumerate_partitions(3)}
    expected = np.array([[.5, .5, 0], [.5, .5, 0], [0, 0, 1]])
    assert np.abs(partition_matrix(P["(01,2)"]) - expected).max() < 1e-15
    assert np.abs(partition_matrix(P["(0,1,2)"]) - np.eye(3)).max() < 1e-15
    assert np.abs(partition_matrix(P["(012)"]) - 1 / 3).max() < 1e-15


@pytest.mark.parametrize("d", range(1, 8))
def test_partition_matrices_are_hoffman(d):
    for tau in enumerate_partitions(d):
        assert is_hoffman_matrix(partition_matrix(tau))


def test_decompose_examples():
    dec = decompose_hoffman(np.eye(3))
    assert list(dec.weights.values()) == pytest.approx([1.0])
    assert next(iter(dec.weights)).sizes == (1, 1, 1)

    P = enumerate_partitions(3)
    R = 0.5 * partition_matrix(P[0]) + 0.5 * partition_matrix(P[3])
    dec = decompose_hoffman(R)
    assert np.abs(dec.matrix() - R).max() < 1e-9

    # 0.7 = a * 1 + (1 - a) * 0.5 gives a = 0.4
    dec = decompose_hoffman(tt(0.7))
    w = {str(t): v for t, v in dec.weights.items()}
    assert abs(w["(0,1)"] - 0.4) < 1e-9 and abs(w["(01)"] - 0.6) < 1e-9


def test_decompose_rejects_non_hoffman():
    with pytest.raises(InfeasibleError):
        decompose_hoffman(tt(0.3))
    with pytest.raises(InfeasibleError):
        decompose_hoffman(np.eye(3)[[1, 0, 2]])


@pytest.mark.parametrize("d", range(2, 8))
def test_decompose_round_trip(d, rng):
    for _ in range(20):
        R = random_hoffman_matrix(d, rng)
        assert is_hoffman_matrix(R)
        dec = decompose_hoffman(R, tol=1e-9)
        assert np.abs(dec.matrix() - R).max() < 1e-8
        assert abs(dec.total() - 1) < 1e-12
        assert min(dec.weights.values()) > 0


def test_decomposition_records_round_trip(rng):
    dec = decompose_hoffman(random_hoffman_matrix(4, rng))
    again = HoffmanDecomposition.from_records(dec.to_records())
    assert np.abs(again.matrix() - dec.matrix()).max() == 0
    for rec in dec.to_records():
        assert len(rec["cuts"]) == 3


def test_find_hoffman_matrix_examples():
    q = np.array([0.5, 0.3, 0.2])
    assert np.abs(find_hoffman_matrix(q, q) @ q - q).max() < 1e-9

    R = find_hoffman_matrix([0.6, 0.4], [0.8, 0.2])
    assert np.abs(R - tt(2 / 3)).max() < 1e-9

    p = np.array([0.4, 0.4, 0.2])
    R = find_hoffman_matrix(p, q)
    assert is_hoffman_matrix(R)
    assert np.abs(R @ q - p).max() < 1e-9

    with pytest.raises(NotMajorizedError):
        find_hoffman_matrix([0.6, 0.2, 0.2], q)


@pytest.mark.parametrize("d", range(2, 7))
def test_hoffman_pairs(d, rng):
    for _ in range(30):
        p, q = random_hoffman_pair(d, rng)
        assert hoffman_majorizes(q, p)
        R = find_hoffman_matrix(p, q)
        assert is_hoffman_matrix(R, 1e-8)
        assert np.abs(R @ q - p).max() < 1e-9
        p2, q2 = random_passive(d, rng), random_passive(d, rng)
        if not hoffman_majorizes(q2, p2):
            with pytest.raises(NotMajorizedError):
                hoffman_weights(p2, q2)


@pytest.mark.parametrize("d", range(2, 7))
def test_hoffman_matrices_preserve_order(d, rng):
    for _ in range(30):
        R = random_hoffman_matrix(d, rng)
        v = R @ random_passive(d, rng)
        assert is_nonincreasing_prob(v, 1e-12)


def test_hoffman_majorization_is_partial_order(rng):
    for _ in range(300):
        d = int(rng.integers(2, 6))
        a, b, c = (random_passive(d, rng) for _ in range(3))
        assert hoffman_majorizes(a, a)
        if hoffman_majorizes(a, b) and hoffman_majorizes(b, c):
            assert hoffman_majorizes(a, c)
        if hoffman_majorizes(a, b) and hoffman_majorizes(b, a):
            assert np.abs(a - b).max() < 1e-8
    # antisymmetry on an exactly tied pair
    assert hoffman_majorizes([0.5, 0.5], [0.5, 0.5])


sorted_prob = st.integers(2, 6).flatmap(
    lambda d: st.lists(st.floats(0.01, 1.0), min_size=d, max_size=d)
).map(lambda v: np.sort(np.array(v) / np.sum(v))[::-1])


@settings(max_examples=200, deadline=None)
@given(sorted_prob, st.data())
def test_orders_agree_on_sorted_vectors(q, data):
    w = data.draw(st.lists(st.floats(0.01, 1.0), min_size=q.size, max_size=q.size))
    p = np.sort(np.array(w) / np.sum(w))[::-1]
    assert majorizes(q, p) == hoffman_majorizes(q, p)


def test_simplex_projection():
    v = np.array([0.4, 0.9, -0.3])
    x = project_simplex(v)
    assert abs(x.sum() - 1) < 1e-12 and x.min() >= 0
    # brute-force oracle: minimise distance over a fine simplex grid
    grid = [np.array([i, j, 200 - i - j]) / 200 for i in range(201) for j in range(201 - i)]
    best = min(grid, key=lambda g: np.sum((g - v) ** 2))
    assert np.abs(best - x).max() < 1e-2


def test_asymmetric_hoffman(rng):
    q = np.array([0.5, 0.3, 0.2])
    D = asymmetric_hoffman_majorizes(q, q)
    assert D is not None and np.abs(D @ q - q).max() < 1e-9
    assert asymmetric_hoffman_majorizes([0.4, 0.4, 0.2], [0.6, 0.3, 0.1]) is None
    for d in range(2, 6):
        for _ in range(10):
            p, q = random_hoffman_pair(d, rng)
            assert is_asymmetric_hoffman_matrix(find_hoffman_matrix(p, q), 1e-8)
            D = asymmetric_hoffman_majorizes(q, p)
            assert D is not None
            assert np.abs(D @ q - p).max() < 1e-9


def test_asymmetric_hoffman_matrix_examples():
    assert is_asymmetric_hoffman_matrix(np.eye(3))
    assert is_asymmetric_hoffman_matrix(tt(0.6))
    assert not is_asymmetric_hoffman_matrix(tt(0.4))
    # a non-symmetric doubly stochastic matrix whose rows keep sorted vectors sorted
    D = np.array([[0.5, 0.5, 0.0], [0.3, 0.2, 0.5], [0.2, 0.3, 0.5]])
    assert is_asymmetric_hoffman_matrix(D) and not is_hoffman_matrix(D)
    for k in range(3):
        e = np.zeros(3)
        e[: k + 1] = 1 / (k + 1)
        assert np.all(np.diff(D @ e) <= 1e-12)
