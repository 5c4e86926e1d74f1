"""The seeded differential runner: determinism, fault detection, shrinking."""

import random

import equibezout.euler as euler_mod
from equibezout.euler import BundleSum, context_check
from equibezout.parsing import parse_bundles
from equibezout.verify import (
    check_instance,
    random_bundle_sum,
    run_verify,
    shrink,
)


def test_small_run_passes():
    summary = run_verify(seed=11, count=50)
    assert summary.ok
    assert summary.passed == 50
    assert str(summary) == "50/50 ok (seed 11)"


def test_zero_count_is_vacuous():
    summary = run_verify(seed=3, count=0)
    assert summary.ok
    assert summary.passed == 0


def test_deterministic_for_fixed_seed():
    a = run_verify(seed=77, count=30)
    b = run_verify(seed=77, count=30)
    assert a == b


def test_random_instances_are_context_valid():
    rng = random.Random(5)
    for _ in range(100):
        F = random_bundle_sum(rng, pmax=5, qmax=5, dmax=4)
        assert not context_check(F)
        assert 1 <= F.n < F.sp.p + F.sp.q


def test_fault_injection_is_caught_and_shrunk(monkeypatch):
    original = euler_mod.euler_closed

    def corrupted(F):
        out = original(F)
        return out.scale(3) if out else out

    monkeypatch.setattr(euler_mod, "euler_closed", corrupted)
    summary = run_verify(seed=5, count=50)
    assert not summary.ok
    assert "product_equals_closed" in summary.failure.failed
    assert summary.shrunk is not None
    assert "product_equals_closed" in summary.shrunk.failed
    # the minimized counterexample is a single bundle on a small space
    small_lines = parse_bundles(summary.shrunk.bundles)
    assert len(small_lines) == 1
    assert summary.shrunk.p <= summary.failure.p
    assert summary.shrunk.q <= summary.failure.q
    assert abs(small_lines[0].d) <= 1


def test_shrink_preserves_failure(monkeypatch):
    original = euler_mod.euler_closed

    def corrupted(F):
        out = original(F)
        return out.scale(3) if out else out

    monkeypatch.setattr(euler_mod, "euler_closed", corrupted)
    rng = random.Random(123)
    F = random_bundle_sum(rng, pmax=6, qmax=6, dmax=5)
    while not check_instance(F):
        F = random_bundle_sum(rng, pmax=6, qmax=6, dmax=5)
    small = shrink(F)
    assert check_instance(small)
    assert not context_check(small)
    assert small.n <= F.n


def test_check_instance_clean_on_known_good():
    good = BundleSum.make(
        euler_mod.ProjSpace(5, 5), [euler_mod.xO(2)] * 4
    )
    assert check_instance(good) == []
