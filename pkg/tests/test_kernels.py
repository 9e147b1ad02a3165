import itertools
import os
from unittest import mock

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mvpolytopes import _kernels as K

BACKENDS = ["numpy"] + (["numba"] if K._NUMBA_OK else [])


def brute_combinations(parts, target):
    """Reference: bounded product scan."""
    m = len(parts)
    caps = []
    for row in parts:
        cap = min(
            (t // r for r, t in zip(row, target) if r > 0),
            default=0,
        )
        caps.append(cap)
    out = []
    for c in itertools.product(*(range(k + 1) for k in caps)):
        if all(
            sum(c[l] * parts[l][j] for l in range(m)) == target[j]
            for j in range(len(target))
        ):
            out.append(c)
    return sorted(out)


def brute_box(bounds, ineqs):
    out = []
    for x in itertools.product(*(range(b + 1) for b in bounds)):
        if all(sum(q * v for q, v in zip(row, x)) >= 0 for row in ineqs):
            out.append(x)
    return sorted(out)


@pytest.mark.parametrize("backend", BACKENDS)
def test_combinations_frozen_a2(backend):
    parts = np.array([[1, 0], [1, 1], [0, 1]], dtype=np.int64)
    target = np.array([1, 1], dtype=np.int64)
    rows = K.enumerate_nonneg_combinations(parts, target, backend)
    assert rows.tolist() == [[0, 1, 0], [1, 0, 1]]
    assert K.count_nonneg_combinations(parts, target, backend) == 2


@pytest.mark.parametrize("backend", BACKENDS)
def test_combinations_empty_target(backend):
    parts = np.array([[1, 0], [0, 1]], dtype=np.int64)
    assert K.count_nonneg_combinations(parts, np.array([0, 0]), backend) == 1
    assert K.count_nonneg_combinations(parts, np.array([-1, 0]), backend) == 0


@pytest.mark.parametrize("backend", BACKENDS)
def test_box_frozen(backend):
    bounds = np.array([2, 2], dtype=np.int64)
    ineqs = np.array([[1, -1]], dtype=np.int64)  # x >= y
    pts = K.filter_box_points(bounds, ineqs, backend)
    assert pts.tolist() == [[0, 0], [1, 0], [1, 1], [2, 0], [2, 1], [2, 2]]


@settings(max_examples=60, deadline=None)
@given(
    st.integers(2, 4).flatmap(
        lambda r: st.tuples(
            st.lists(
                st.lists(st.integers(0, 3), min_size=r, max_size=r).filter(any),
                min_size=1,
                max_size=5,
            ),
            st.lists(st.integers(0, 6), min_size=r, max_size=r),
        )
    )
)
def test_combinations_match_bruteforce_and_each_other(parts_target):
    parts, target = parts_target
    p = np.array(parts, dtype=np.int64)
    t = np.array(target, dtype=np.int64)
    expected = brute_combinations(parts, target)
    for backend in BACKENDS:
        rows = K.enumerate_nonneg_combinations(p, t, backend)
        assert [tuple(r) for r in rows.tolist()] == expected
        assert K.count_nonneg_combinations(p, t, backend) == len(expected)


@settings(max_examples=40, deadline=None)
@given(
    st.integers(1, 3).flatmap(
        lambda r: st.tuples(
            st.lists(st.integers(0, 3), min_size=r, max_size=r),
            st.lists(
                st.lists(st.integers(-2, 2), min_size=r, max_size=r),
                min_size=0,
                max_size=4,
            ),
        )
    )
)
def test_box_matches_bruteforce_and_each_other(bounds_ineqs):
    bounds, ineqs = bounds_ineqs
    b = np.array(bounds, dtype=np.int64)
    q = np.array(ineqs, dtype=np.int64).reshape(len(ineqs), len(bounds))
    expected = brute_box(bounds, ineqs)
    for backend in BACKENDS:
        pts = K.filter_box_points(b, q, backend)
        assert [tuple(r) for r in pts.tolist()] == expected


def test_resolve_backend_env():
    with mock.patch.dict(os.environ, {K.BACKEND_ENV: "numpy"}):
        assert K.resolve_backend() == "numpy"
    with mock.patch.dict(os.environ, {K.BACKEND_ENV: "bogus"}):
        with pytest.raises(ValueError):
            K.resolve_backend()
    assert K.resolve_backend("auto") in ("numba", "numpy")


def test_get_backend_names():
    impl = K.get_backend("numpy")
    assert impl["name"] == "numpy"
    parts = np.array([[1, 0], [0, 1]], dtype=np.int64)
    assert impl["count_nonneg_combinations"](parts, np.array([1, 1])) == 1
