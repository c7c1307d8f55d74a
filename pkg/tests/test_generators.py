import pytest

from crossdock import (
    classify,
    degree_profile,
    gen_d2,
    gen_random,
    gen_tight,
    serialize_instance,
    TightParams,
)


def test_gen_random_p_zero():
    assert gen_random(5, 4, 0.0, seed=1).arcs == frozenset()


def test_gen_random_p_one():
    inst = gen_random(3, 4, 1.0, seed=1)
    assert len(inst.arcs) == 12


def test_gen_random_deterministic():
    a = gen_random(5, 5, 0.5, seed=7)
    b = gen_random(5, 5, 0.5, seed=7)
    assert serialize_instance(a) == serialize_instance(b)
    assert gen_random(5, 5, 0.5, seed=8) != a  # different seed, different draw


def test_gen_random_rejects_bad_sizes():
    with pytest.raises(ValueError):
        gen_random(0, 3, 0.5, seed=1)


def test_gen_d2_is_d2():
    for seed in range(30):
        inst = gen_d2(a_count=1 + seed % 6, b_count=3 + seed % 5, pendant_count=seed % 2, seed=seed)
        assert classify(inst).is_d2


def test_gen_d2_forced_smallest():
    inst = gen_d2(a_count=1, b_count=2, pendant_count=0, seed=99)
    assert inst.arcs == frozenset({(1, 1), (1, 2)})


def test_gen_d2_degree_sum():
    inst = gen_d2(a_count=6, b_count=7, pendant_count=2, seed=3)
    prof = degree_profile(inst)
    assert sum(prof.in_deg) == 12
    # the excluded B-operations really are pendant
    assert prof.in_deg[5] == 0 and prof.in_deg[6] == 0


def test_gen_d2_deterministic():
    assert gen_d2(6, 7, 2, seed=5) == gen_d2(6, 7, 2, seed=5)


def test_gen_d2_rejects_bad_params():
    with pytest.raises(ValueError):
        gen_d2(a_count=2, b_count=3, pendant_count=2, seed=1)


def test_tight_params_validation():
    with pytest.raises(ValueError):
        TightParams(k=2, l=3, s=3)  # k < l
    with pytest.raises(ValueError):
        TightParams(k=3, l=2, s=2)  # s < 3
    with pytest.raises(ValueError):
        TightParams(k=3, l=0, s=3)


def test_gen_tight_shape_and_degrees():
    k, l, s = 3, 2, 3
    tf = gen_tight(TightParams(k, l, s))
    assert tf.n == k + l + s and tf.m == 2 * k + s
    assert len(tf.arcs) == l * s + 2 * k + s == 15
    prof = degree_profile(tf)
    assert prof.out_deg == (2,) * k + (s,) * l + (1,) * s
    assert prof.in_deg == (1,) * (2 * k) + (l + 1,) * s


def test_gen_tight_certificate_small():
    from crossdock import compute_q, greedy_order, makespan, solve_exact, solve_greedy, bounds_report
    from fractions import Fraction

    for k, l, s in [(3, 2, 3), (3, 3, 3)]:
        tf = gen_tight(TightParams(k, l, s))
        if tf.n <= 9:
            assert solve_exact(tf).optimal_makespan == 2 * k + s + 1
        assert makespan(solve_greedy(tf)) == 2 * k + s + l + 1
        assert compute_q(tf, greedy_order(tf)) == l + 1
        rep = bounds_report(tf)
        assert Fraction(2 * k + s + l + 1, 2 * k + s + 1) == rep.ratio_bound
