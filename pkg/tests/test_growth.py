import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crystalrig.bijection import rc_from_lanes
from crystalrig.growth import (
    GrowthRejection,
    check_constraints,
    enumerate_next,
    is_valid,
    validate,
    validate_suffix,
)
from crystalrig.oracle import rc_graph, rc_membership
from crystalrig.partitions import max_rows
from crystalrig.rigged import RiggedConfiguration, RiggedPartition, apply_f, empty_rc
from helpers import partitions, random_sequence, rigged_partitions
from worked_examples import LANES_TWO, LANES_TWO_RC


def rp(*strings):
    return RiggedPartition(tuple(strings))


RANK5 = RiggedConfiguration(
    5,
    (
        rp((2, 0)),
        rp((3, 0), (2, 0)),
        rp((6, -5), (3, -3), (2, -2)),
        rp((5, 0), (2, 0)),
        rp((3, -1)),
    ),
)


def test_max_rows():
    assert max_rows(1, 7) == 1
    assert max_rows(7, 7) == 1
    assert max_rows(6, 10) == 5


def test_rank5_example_is_accepted():
    cert = validate(RANK5)
    assert cert.acon_n == 2
    assert cert.riggings() == RANK5
    assert rc_from_lanes(cert.sequence) == RANK5


def test_empty_is_accepted():
    cert = validate(empty_rc(4))
    assert cert.sequence.subintervals == ()


def test_two_rows_on_top_are_rejected():
    r = RiggedConfiguration(2, (rp(), rp((1, -1), (1, -1))))
    with pytest.raises(GrowthRejection) as info:
        validate(r)
    assert info.value.partition == 2
    assert info.value.constraint == "single_row"
    assert info.value.to_json() == {"valid": False, "at": {"partition": 2, "constraint": "single_row"}}


def test_unequal_riggings_on_equal_rows_are_rejected():
    r = RiggedConfiguration(3, (rp((2, -1)), rp((1, 0), (1, -1)), rp((1, 0))))
    with pytest.raises(GrowthRejection) as info:
        validate(r)
    assert info.value.constraint == "rigging_uniform"


def test_rigging_out_of_range_is_rejected():
    r = RiggedConfiguration(2, (rp(), rp((2, 1))))
    assert not is_valid(r)


def test_full_lanes_example_is_accepted():
    assert validate(LANES_TWO_RC).sequence == LANES_TWO


def test_shape_constraints():
    top = rp((3, -1))
    assert check_constraints(top, rp((5, 0), (2, 0)), 10, 10) == (True, [])
    # nothing added beneath the first row
    assert check_constraints(top, rp(), 10, 10)[0]
    ok, why = check_constraints(rp((3, 0), (1, 0)), rp(*[(1, 0)] * 4), 10, 10)
    assert not ok and why[0][0] == "column_bound"
    ok, why = check_constraints(top, rp((1, 0), (1, 0)), 2, 2)
    assert not ok and why[0][0] == "max_rows"


def test_enumerate_budget_zero():
    # without new boxes the only candidate shape is the last partition minus
    # its first row
    assert enumerate_next(3, [rp((2, -2))], 0) == [rp()]
    # riggings still range over the admissible acon values, not just zero
    assert enumerate_next(4, [rp((3, -2)), rp((1, -1), (1, -1))], 0) == [rp((1, 0)), rp((1, 1))]
    # a contributing top row needs boxes beneath it
    assert enumerate_next(5, [rp((3, -1)), rp((5, 0), (2, 0))], 0) == []


def test_enumerate_after_empty_top_gives_single_rows():
    out = enumerate_next(3, [rp()], 3)
    assert out
    assert all(len(p) <= 1 for p in out)


def test_enumerate_without_contributions_on_top():
    # rigging -3 on a three-box top row leaves no contributing box beneath it
    out = enumerate_next(4, [rp((3, -3))], 4)
    assert out
    for p in out:
        assert all(x >= -max(p.shape) for _, x in p.strings)
        assert len(p) <= 1


def brute_force_next(n, suffix, budget, slack=1):
    lam = suffix[-1]
    base = sum(lam.shape[1:])
    out = set()
    for size, p in rigged_partitions(base + budget, slack):
        if size < base:
            continue
        try:
            validate_suffix(n, suffix + [p])
        except GrowthRejection:
            continue
        out.add(p)
    return out


@pytest.mark.parametrize(
    "n, suffix, budget",
    [
        (3, [rp((2, -1))], 3),
        (3, [rp((2, -2))], 3),
        (4, [rp((3, -1)), rp((3, -1), (1, 0))], 2),
        (4, [rp((2, 0)), rp((2, -1), (1, 0))], 3),
        (5, [rp((3, -1)), rp((5, 0), (2, 0))], 3),
    ],
)
def test_enumerate_matches_brute_force(n, suffix, budget):
    assert set(enumerate_next(n, suffix, budget)) == brute_force_next(n, suffix, budget)


def test_enumerate_rejects_invalid_suffix():
    with pytest.raises(GrowthRejection):
        enumerate_next(3, [rp((1, -1), (1, -1))], 2)


def iterate_enumeration(n, total):
    """All configurations with at most ``total`` boxes grown from the top."""
    found = set()

    def rec(suffix, used):
        if len(suffix) == n:
            found.add(RiggedConfiguration(n, tuple(reversed(suffix))))
            return
        lam = suffix[-1]
        room = total - used - sum(lam.shape[1:])
        if room < 0:
            return
        for p in enumerate_next(n, suffix, room):
            rec(suffix + [p], used + p.size)

    for k in range(total + 1):
        for x in range(-k - 1, k + 2):
            top = rp((k, x)) if k else rp()
            if k == 0 and x:
                continue
            try:
                validate_suffix(n, [top])
            except GrowthRejection:
                continue
            rec([top], k)
    return found


@pytest.mark.parametrize("n, total", [(2, 5), (3, 4), (4, 3)])
def test_enumeration_reaches_the_crystal(n, total):
    assert iterate_enumeration(n, total) == set(rc_graph(n, total).nodes)


def perturbed(rng, r):
    """Nudge one rigging or move one box of a valid configuration."""
    parts = [list(p.strings) for p in r.partitions]
    a = rng.randrange(r.n)
    if parts[a] and rng.random() < 0.6:
        k = rng.randrange(len(parts[a]))
        l, x = parts[a][k]
        parts[a][k] = (l, x + rng.choice([-1, 1]))
    elif parts[a] and rng.random() < 0.5:
        k = rng.randrange(len(parts[a]))
        l, x = parts[a][k]
        parts[a][k] = (l + 1, x)
    else:
        parts[a].append((1, rng.randint(-2, 1)))
    return RiggedConfiguration(r.n, tuple(RiggedPartition(tuple(p)) for p in parts))


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10**6))
def test_validate_agrees_with_membership_oracle(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 5)
    r = rc_from_lanes(random_sequence(rng, n, 8))
    assert is_valid(r) and rc_membership(r)
    s = perturbed(rng, r)
    assert is_valid(s) == rc_membership(s)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6))
def test_certificate_riggings_and_row_bound(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 7)
    r = rc_from_lanes(random_sequence(rng, n, 15))
    cert = validate(r)
    assert cert.riggings() == r
    for a in range(1, n + 1):
        assert len(r[a]) <= max_rows(a, n)


def test_small_candidates_against_oracle():
    # every tuple of small rigged partitions at rank 2
    pool = list(rigged_partitions(3, 1))
    for (_, p), (_, q) in itertools.product(pool, pool):
        r = RiggedConfiguration(2, (p, q))
        assert is_valid(r) == rc_membership(r), r


def test_f_stays_valid():
    r = empty_rc(3)
    for a in [1, 2, 3, 2, 1, 3, 3, 2]:
        r = apply_f(r, a)
        assert is_valid(r)


def test_partitions_helper():
    assert len(list(partitions(6))) == 11
