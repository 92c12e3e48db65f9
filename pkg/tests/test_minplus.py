import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import random_monotone
from paretosum.errors import ConfigError, ConvexityViolated, InvariantError, MonotonicityViolated
from paretosum.minplus import (
    CdxzConfig,
    MonotoneArray,
    RelevantRegion,
    cdxz_minplus,
    convex_minplus,
    convex_pruning_minplus,
    enhanced_minplus,
    in_relevant_region,
    lower_hull_approx,
    naive_minplus,
    poly_multiply_counts,
)


def brute_minplus(A, B):
    return [min(A[i] + B[k - i] for i in range(len(A)) if 0 <= k - i < len(B)) for k in range(len(A) + len(B) - 1)]


# -- naive / enhanced -------------------------------------------------------


@pytest.mark.parametrize(
    "A, B, C",
    [([5, 3, 1], [4, 2], [9, 7, 5, 3]), ([0], [0], [0]), ([2, 0, 0], [1, 1, 0], [3, 1, 1, 0, 0])],
)
def test_naive_examples(A, B, C):
    assert naive_minplus(A, B).values.tolist() == C


@given(
    st.lists(st.integers(-20, 20), min_size=1, max_size=12),
    st.lists(st.integers(-20, 20), min_size=1, max_size=12),
)
def test_naive_arbitrary_arrays(A, B):
    res = naive_minplus(A, B, want_witnesses=True)
    assert res.values.tolist() == brute_minplus(A, B)
    for k, i in enumerate(res.witnesses.tolist()):
        assert A[i] + B[k - i] == res.values[k]
        assert all(A[h] + B[k - h] > res.values[k] for h in range(max(0, k - len(B) + 1), i))


def test_enhanced_examples():
    assert enhanced_minplus([5, 3, 1], [4, 2]).values.tolist() == [9, 7, 5, 3]
    assert enhanced_minplus([7, 7, 7], [7, 7]).values.tolist() == [14, 14, 14, 14]
    with pytest.raises(MonotonicityViolated):
        enhanced_minplus([1, 2], [0])


def test_enhanced_fuzz():
    rng = np.random.default_rng(1)
    for _ in range(1000):
        A, B = random_monotone(rng), random_monotone(rng)
        ref = naive_minplus(A, B, want_witnesses=True)
        got = enhanced_minplus(A, B, want_witnesses=True)
        assert np.array_equal(got.values, ref.values)
        assert np.array_equal(got.witnesses, ref.witnesses)
        assert np.all(np.diff(got.values) <= 0)


def test_monotone_array():
    a = MonotoneArray(np.array([3, 3, 1]), 5)
    assert len(a) == 3 and np.asarray(a).tolist() == [3, 3, 1]
    with pytest.raises(MonotonicityViolated):
        MonotoneArray(np.array([1, 2]), 5)
    with pytest.raises(InvariantError):
        MonotoneArray(np.array([7, 2]), 5)


def small_monotone_arrays(max_len=4, max_val=4):
    vals = range(max_val + 1)
    for n in range(1, max_len + 1):
        for combo in itertools.combinations_with_replacement(vals, n):
            yield list(reversed(combo))


def test_backends_exhaustive_small():
    arrays = list(small_monotone_arrays())
    rng = np.random.default_rng(2)
    for A in arrays:
        for B in (arrays[int(rng.integers(len(arrays)))] for _ in range(3)):
            ref = brute_minplus(A, B)
            assert enhanced_minplus(A, B).values.tolist() == ref
            assert convex_pruning_minplus(A, B, base_threshold=1, debug=True).values.tolist() == ref
            for scale, prime in ((2, 2), (3, 3), (5, 2)):
                assert cdxz_minplus(A, B, CdxzConfig(scale, prime)).values.tolist() == ref


# -- convex ------------------------------------------------------------------


def test_convex_example():
    res = convex_minplus([4, 2, 1], [3, 1, 0])
    assert res.values.tolist() == [7, 5, 3, 2, 1]
    assert np.all(np.diff(res.witnesses) >= 0)
    assert convex_minplus([5], [8]).values.tolist() == [13]


def test_convex_rejects_nonconvex():
    with pytest.raises(ConvexityViolated):
        convex_minplus([0, 5, 6], [0])


def random_convex(rng, n):
    slopes = np.sort(rng.integers(-20, 20, size=n - 1))
    return np.concatenate(([int(rng.integers(0, 50))], slopes)).cumsum()


def test_convex_fuzz():
    rng = np.random.default_rng(3)
    for _ in range(500):
        A = random_convex(rng, int(rng.integers(1, 30)))
        B = random_convex(rng, int(rng.integers(1, 30)))
        res = convex_minplus(A.tolist(), B.tolist())
        assert res.values.tolist() == brute_minplus(A.tolist(), B.tolist())
        w = res.witnesses
        assert np.all(np.diff(w) >= 0)
        for k, i in enumerate(w.tolist()):
            assert A[i] + B[k - i] == res.values[k]


def test_convex_rationals():
    A = [Fraction(3), Fraction(3, 2), Fraction(1)]
    B = [Fraction(1, 3), Fraction(0)]
    assert convex_minplus(A, B).values.tolist() == brute_minplus(A, B)


def test_hull_examples():
    h = lower_hull_approx([5, 3, 1])
    assert h.hull_vertices.tolist() == [0, 2] and h.gamma == 0
    h = lower_hull_approx([4, 3, 0])
    assert h.hull_vertices.tolist() == [0, 2]
    assert h.value_at(1) == 2 and h.gamma == 1


def test_hull_sandwich():
    rng = np.random.default_rng(4)
    for _ in range(300):
        A = random_monotone(rng, 60, 200)
        h = lower_hull_approx(A)
        vals = [h.value_at(i) for i in range(len(A))]
        for i, v in enumerate(vals):
            assert v <= A[i] <= v + h.gamma
        for v0, v1, v2 in zip(vals, vals[1:], vals[2:]):
            assert v2 - v1 >= v1 - v0
        for i in h.hull_vertices.tolist():
            assert vals[i] == A[i]


def test_relevant_region_examples():
    A, B = [5, 3, 1], [4, 2]
    ha, hb = lower_hull_approx(A), lower_hull_approx(B)
    conv = convex_minplus(A, B)
    assert in_relevant_region(0, 1, ha, hb, conv)
    for k, i in enumerate(conv.witnesses.tolist()):
        assert in_relevant_region(i, k - i, ha, hb, conv)


def test_relevant_region_boundary():
    # find pairs exactly at C' + 2G and at C' + 2G + 1 and check both sides of the test
    rng = np.random.default_rng(5)
    seen_in = seen_out = 0
    for _ in range(300):
        A = random_convex(rng, int(rng.integers(2, 25)))
        B = random_convex(rng, int(rng.integers(2, 25)))
        ha, hb = lower_hull_approx(A), lower_hull_approx(B)
        conv = convex_minplus(A.tolist(), B.tolist())
        region = RelevantRegion(ha, hb)
        assert region.gamma == 1
        for i, j in itertools.product(range(len(A)), range(len(B))):
            gap = A[i] + B[j] - conv.values[i + j]
            if gap == 2:
                assert region.contains(i, j)
                seen_in += 1
            elif gap == 3:
                assert not region.contains(i, j)
                seen_out += 1
    assert seen_in and seen_out


# -- convex pruning ------------------------------------------------------------


def test_pruning_examples():
    assert convex_pruning_minplus([5, 3, 1], [4, 2]).values.tolist() == [9, 7, 5, 3]
    A = np.array([40, 30, 21, 13, 6, 0])
    B = np.array([25, 16, 9, 4, 1, 0])
    res = convex_pruning_minplus(A, B, base_threshold=1)
    assert res.values.tolist() == convex_minplus(A.tolist(), B.tolist()).values.tolist()


@pytest.mark.parametrize("threshold", [1, 2, 4, 64])
def test_pruning_fuzz(threshold):
    rng = np.random.default_rng(threshold)
    for _ in range(300):
        A, B = random_monotone(rng, 80), random_monotone(rng, 80)
        ref = naive_minplus(A, B, want_witnesses=True)
        got = convex_pruning_minplus(A, B, want_witnesses=True, base_threshold=threshold, debug=True)
        assert np.array_equal(got.values, ref.values)
        assert np.array_equal(got.witnesses, ref.witnesses)
        assert 0.0 <= got.pruned_fraction <= 1.0


def test_pruning_non_monotone():
    rng = np.random.default_rng(8)
    for _ in range(200):
        A = rng.integers(-30, 30, size=int(rng.integers(1, 40)))
        B = rng.integers(-30, 30, size=int(rng.integers(1, 40)))
        got = convex_pruning_minplus(A, B, want_witnesses=True, base_threshold=2, debug=True)
        ref = naive_minplus(A, B, want_witnesses=True)
        assert np.array_equal(got.values, ref.values)
        assert np.array_equal(got.witnesses, ref.witnesses)


def test_pruning_prunes_near_convex():
    i = np.arange(2000)
    A = (2000 - i) ** 2 // 2000 + (i % 3)
    B = (2000 - i) ** 2 // 1000 + (i % 2)
    res = convex_pruning_minplus(A, B)
    assert res.pruned_fraction > 0.5
    assert np.array_equal(res.values, naive_minplus(A, B).values)


# -- polynomial multiplication ---------------------------------------------------


def schoolbook(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@pytest.mark.parametrize("method", ["kronecker", "ntt", "sparse", "schoolbook", "auto"])
def test_poly_examples(method):
    assert poly_multiply_counts([1, 1], [1, 1], method).tolist() == [1, 2, 1]
    assert poly_multiply_counts([1, 0, 1], [1], method).tolist() == [1, 0, 1]
    assert poly_multiply_counts([0, 0], [1, 1, 1], method).tolist() == [0, 0, 0, 0]


@pytest.mark.parametrize("method", ["kronecker", "ntt", "sparse", "auto"])
def test_poly_fuzz(method):
    rng = np.random.default_rng(6)
    for _ in range(200):
        density = rng.uniform(0.01, 1.0)
        a = (rng.random(int(rng.integers(1, 257))) < density).astype(np.int64)
        b = (rng.random(int(rng.integers(1, 257))) < density).astype(np.int64)
        assert poly_multiply_counts(a, b, method).tolist() == schoolbook(a.tolist(), b.tolist())


@pytest.mark.parametrize("method", ["kronecker", "sparse"])
def test_poly_wide_coefficients(method):
    a = np.full(300, 70_000)
    b = np.full(200, 90_000)
    assert poly_multiply_counts(a, b, method).tolist() == schoolbook(a.tolist(), b.tolist())
    # beyond float precision the sparse path accumulates in integers
    a, b = np.array([2**30, 0, 2**30]), np.array([2**29, 2**29])
    assert poly_multiply_counts(a, b, method).tolist() == schoolbook(a.tolist(), b.tolist())


def test_poly_overflow_guards():
    with pytest.raises(ConfigError):
        poly_multiply_counts([10**6], [10**4], "ntt")
    with pytest.raises(ConfigError):
        poly_multiply_counts([2**40], [2**30], "kronecker")
    with pytest.raises(ConfigError):
        poly_multiply_counts([-1], [1])
    with pytest.raises(ConfigError):
        poly_multiply_counts([1], [1], "fft")


# -- CDXZ ------------------------------------------------------------------------


def test_cdxz_example():
    assert cdxz_minplus([9, 5, 1], [8, 4, 0], CdxzConfig(4, 2)).values.tolist() == [17, 13, 9, 5, 1]


def test_cdxz_scale_one_is_phase_one():
    A, B = [9, 5, 5, 1], [8, 4, 0]
    res = cdxz_minplus(A, B, CdxzConfig(1, 2), keep_scratch=True)
    assert res.values.tolist() == brute_minplus(A, B)
    assert res.extra["scratch"].C_scaled.tolist() == res.values.tolist()
    assert res.witnesses is None


@pytest.mark.parametrize("scale", [2, 4, 25])
@pytest.mark.parametrize("prime", [2, 3, 5])
def test_cdxz_fuzz(scale, prime):
    rng = np.random.default_rng(scale * 10 + prime)
    for _ in range(500):
        A, B = random_monotone(rng), random_monotone(rng)
        got = cdxz_minplus(A, B, CdxzConfig(scale, prime))
        assert np.array_equal(got.values, naive_minplus(A, B).values)


def test_cdxz_ntt_path():
    rng = np.random.default_rng(7)
    for _ in range(50):
        A, B = random_monotone(rng), random_monotone(rng)
        got = cdxz_minplus(A, B, CdxzConfig(4, 3), poly_method="ntt")
        assert np.array_equal(got.values, naive_minplus(A, B).values)


def test_cdxz_scratch_invariants():
    rng = np.random.default_rng(9)
    for _ in range(100):
        A, B = random_monotone(rng, 60), random_monotone(rng, 60)
        cfg = CdxzConfig(4, 3)
        res = cdxz_minplus(A, B, cfg, keep_scratch=True)
        sc = res.extra["scratch"]
        for b in (0, 1):
            diff = sc.counts[b] - sc.pseudo[b]
            assert diff.min() >= 0
            for k, s in enumerate(sc.s[b].tolist()):
                if s >= 0:
                    assert diff[k, s] > 0 and not diff[k, :s].any()


def test_cdxz_theoretical_config():
    cfg = CdxzConfig.theoretical(10_000, seed=1)
    assert cfg.scale == 7
    assert 40 <= cfg.prime <= 80
    assert all(cfg.prime % d for d in range(2, cfg.prime))
    assert CdxzConfig.theoretical(10_000, seed=1) == cfg
    assert CdxzConfig.theoretical(1).prime >= 2


def test_cdxz_errors():
    with pytest.raises(MonotonicityViolated):
        cdxz_minplus([1, 2], [0])
    with pytest.raises(ConfigError):
        CdxzConfig(0, 2)
    with pytest.raises(ConfigError):
        CdxzConfig(4, 1)
    with pytest.raises(ConfigError, match="scale <="):
        cdxz_minplus(np.arange(100, 0, -1), np.arange(100, 0, -1), CdxzConfig(25, 2), packed_budget=1000)
