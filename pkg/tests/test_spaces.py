import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from gengym import spaces
from gengym.spaces import Array, Discrete, Grid2D, Grid3D, Range, Record, SpaceError


def test_discrete_sampling_is_uniform():
    rng = random.Random(7)
    space = Discrete(2)
    n = 10_000
    ones = sum(spaces.sample(space, rng) for _ in range(n))
    # fair-coin count, 5 sigma band around n/2
    sigma = math.sqrt(n * 0.25)
    assert abs(ones - n / 2) < 5 * sigma


def test_grid2d_sample_shape():
    rng = random.Random(0)
    space = Grid2D(Discrete(2), 14, 14)
    value = spaces.sample(space, rng)
    assert len(value) == 14
    assert all(len(row) == 14 for row in value)
    assert all(v in (0, 1) for row in value for v in row)


def test_sampling_is_deterministic_per_seed():
    space = Record({"grid": Grid2D(Discrete(5), 4, 3), "n": Range(1, 9)})
    a = spaces.sample(space, random.Random(42))
    b = spaces.sample(space, random.Random(42))
    assert a == b


def test_contains_rejects_out_of_range():
    assert not spaces.contains(Range(0, 5), 6)
    assert spaces.contains(Range(0, 5), 5)


def test_contains_record():
    assert spaces.contains(Record({"x": Range(0, 10)}), {"x": 3})
    assert not spaces.contains(Record({"x": Range(0, 10)}), {"x": 11})
    assert not spaces.contains(Record({"x": Range(0, 10)}), {"y": 3})


def test_contains_rejects_shape_mismatch():
    space = Grid2D(Discrete(2), 14, 14)
    bad = [[0] * 14 for _ in range(13)]
    assert not spaces.contains(space, bad)


def test_contains_rejects_bools():
    assert not spaces.contains(Discrete(2), True)


def test_flatten_depth_first_order():
    space = Record({"a": Discrete(3), "b": Range(2, 4)})
    assert spaces.flatten(space, {"a": 1, "b": 4}) == [1, 4]


def test_flatten_unflatten_roundtrip():
    space = Record(
        {
            "grid": Grid2D(Discrete(6), 5, 4),
            "stack": Grid3D(Discrete(2), 3, 3, 2),
            "items": Array(Record({"t": Discrete(4), "x": Range(0, 6)}), 5),
        }
    )
    rng = random.Random(11)
    for _ in range(1000):
        v = spaces.sample(space, rng)
        flat = spaces.flatten(space, v)
        assert len(flat) == space.leaf_count
        assert spaces.unflatten(space, flat) == v


def test_unflatten_reports_leaf_index():
    with pytest.raises(SpaceError) as err:
        spaces.unflatten(Discrete(3), [5])
    assert err.value.leaf == 0

    space = Record({"a": Discrete(3), "b": Range(2, 4)})
    with pytest.raises(SpaceError) as err:
        spaces.unflatten(space, [1, 9])
    assert err.value.leaf == 1


def test_unflatten_rejects_length_mismatch():
    with pytest.raises(SpaceError):
        spaces.unflatten(Array(Discrete(2), 3), [0, 1])


def test_mutate_rate_zero_is_identity():
    space = Grid2D(Discrete(4), 6, 6)
    rng = random.Random(3)
    v = spaces.sample(space, rng)
    assert spaces.mutate(space, v, 0.0, rng) == v


def test_mutate_singleton_space_is_identity():
    space = Array(Discrete(1), 8)
    rng = random.Random(3)
    v = spaces.sample(space, rng)
    assert spaces.mutate(space, v, 1.0, rng) == v


def test_mutate_changed_leaf_count_matches_binomial_oracle():
    # Closed-form oracle: a leaf visibly changes when it is picked for
    # resampling (p=rate) and the fresh draw differs from the old symbol
    # (prob 1 - 1/k for Discrete(k)). Changed count is Binomial(n, rate*(1-1/k)).
    space = Grid2D(Discrete(2), 14, 14)
    n_leaves = 196
    rate = 0.05
    p_change = rate * (1 - 1 / 2)
    expected_mean = n_leaves * p_change
    per_trial_var = n_leaves * p_change * (1 - p_change)

    rng = random.Random(123)
    trials = 10_000
    base = spaces.sample(space, rng)
    base_flat = spaces.flatten(space, base)
    total_changed = 0
    for _ in range(trials):
        mutated = spaces.mutate(space, base, rate, rng)
        mut_flat = spaces.flatten(space, mutated)
        total_changed += sum(1 for x, y in zip(base_flat, mut_flat) if x != y)
    mean = total_changed / trials
    sigma_mean = math.sqrt(per_trial_var / trials)
    assert abs(mean - expected_mean) < 5 * sigma_mean


def test_mix_equal_parents_is_identity():
    space = Record({"g": Grid2D(Discrete(3), 4, 4)})
    rng = random.Random(5)
    v = spaces.sample(space, rng)
    assert spaces.mix(space, v, v, rng) == v


def test_mix_leaves_come_from_parents():
    space = Array(Range(0, 100), 32)
    rng = random.Random(6)
    a = spaces.sample(space, rng)
    b = spaces.sample(space, rng)
    for _ in range(50):
        child = spaces.mix(space, a, b, rng)
        assert all(c in (x, y) for c, x, y in zip(child, a, b))


def test_mix_two_leaf_combinations_are_equally_likely():
    # Exact multinomial oracle: 4 outcomes each with p=0.25 over 10^4 trials.
    space = Array(Discrete(2), 2)
    a, b = [0, 0], [1, 1]
    rng = random.Random(17)
    trials = 10_000
    counts = {(0, 0): 0, (0, 1): 0, (1, 0): 0, (1, 1): 0}
    for _ in range(trials):
        child = spaces.mix(space, a, b, rng)
        counts[tuple(child)] += 1
    sigma = math.sqrt(trials * 0.25 * 0.75)
    for combo, count in counts.items():
        assert abs(count - trials * 0.25) < 5 * sigma, combo


def leaf_spaces():
    return st.one_of(
        st.integers(1, 6).map(Discrete),
        st.tuples(st.integers(-5, 5), st.integers(0, 8)).map(lambda t: Range(t[0], t[0] + t[1])),
    )


def descriptors():
    return st.recursive(
        leaf_spaces(),
        lambda inner: st.one_of(
            st.tuples(inner, st.integers(1, 4)).map(lambda t: Array(*t)),
            st.tuples(inner, st.integers(1, 3), st.integers(1, 3)).map(lambda t: Grid2D(*t)),
            st.tuples(inner, st.integers(1, 2), st.integers(1, 2), st.integers(1, 2)).map(
                lambda t: Grid3D(*t)
            ),
            st.lists(st.tuples(st.text("abcd", min_size=1, max_size=3), inner), min_size=1, max_size=3, unique_by=lambda p: p[0]).map(Record),
        ),
        max_leaves=6,
    )


@settings(max_examples=200, deadline=None)
@given(descriptors(), st.integers(0, 2**32 - 1))
def test_space_laws_hold_for_random_descriptors(space, seed):
    rng = random.Random(seed)
    v = spaces.sample(space, rng)
    assert spaces.contains(space, v)
    assert spaces.unflatten(space, spaces.flatten(space, v)) == v
    assert spaces.mutate(space, v, 0.0, rng) == v
    w = spaces.sample(space, rng)
    mixed = spaces.mix(space, v, w, rng)
    assert spaces.contains(space, mixed)
    mixed_flat = spaces.flatten(space, mixed)
    v_flat, w_flat = spaces.flatten(space, v), spaces.flatten(space, w)
    assert all(m in (x, y) for m, x, y in zip(mixed_flat, v_flat, w_flat))
    mutated = spaces.mutate(space, v, 0.3, rng)
    assert spaces.contains(space, mutated)
