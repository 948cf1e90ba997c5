"""Generators shared by the tests."""

import itertools

from crystalrig.bijection import rc_from_lanes
from crystalrig.cascading import CascadingSequence, LowerSubinterval
from crystalrig.growth import build_sequence, validate
from crystalrig.rigged import RiggedConfiguration, RiggedPartition


def roots(n):
    """All lower subintervals in cascading order."""
    return [LowerSubinterval(a, m) for m in range(n, 0, -1) for a in range(1, m + 1)]


def all_sequences(n, max_letters):
    """Every cascading sequence of rank n with at most ``max_letters`` letters."""
    rs = roots(n)

    def rec(k, budget):
        if k == len(rs):
            yield ()
            return
        size = len(rs[k])
        for copies in range(budget // size + 1):
            for rest in rec(k + 1, budget - copies * size):
                yield (rs[k],) * copies + rest

    for ivs in rec(0, max_letters):
        yield CascadingSequence(n, ivs)


def random_sequence(rng, n, max_len):
    ivs = []
    for _ in range(rng.randint(0, max_len)):
        m = rng.randint(1, n)
        ivs.append((rng.randint(1, m), m))
    ivs.sort(key=lambda x: (-x[1], x[0]))
    return CascadingSequence(n, ivs)


def partitions(k, largest=None):
    if largest is None:
        largest = k
    if k == 0:
        yield ()
        return
    for first in range(min(k, largest), 0, -1):
        for rest in partitions(k - first, first):
            yield (first,) + rest


def rigged_partitions(max_size, slack=0):
    """(size, rigged partition) for every shape up to ``max_size`` boxes and
    riggings between -length-slack and length+slack."""
    for k in range(max_size + 1):
        for shape in partitions(k):
            lengths = sorted(set(shape), reverse=True)
            options = [
                list(itertools.combinations_with_replacement(range(-L - slack, L + slack + 1), shape.count(L)))
                for L in lengths
            ]
            for choice in itertools.product(*options):
                strings = [(L, x) for L, xs in zip(lengths, choice) for x in xs]
                yield k, RiggedPartition(tuple(strings))


def candidate_configurations(n, max_boxes, slack=0):
    """All tuples of rigged partitions with at most ``max_boxes`` boxes in total."""
    pool = list(rigged_partitions(max_boxes, slack))

    def rec(a, left):
        if a == n:
            yield ()
            return
        for k, p in pool:
            if k <= left:
                for rest in rec(a + 1, left - k):
                    yield (p,) + rest

    for parts in rec(0, max_boxes):
        yield RiggedConfiguration(n, parts)


def procedure_instances(rng, count, ranks=(3, 9), max_len=25):
    """Procedure calls made while rebuilding random configurations.

    Each item is (kind, before, p, h, count, after).
    """
    out = []
    while len(out) < count:
        n = rng.randint(*ranks)
        rc = rc_from_lanes(random_sequence(rng, n, max_len))
        cert = validate(rc)
        build_sequence(n, rc[n].size, cert.steps, trace=lambda *call: out.append(call))
    return out[:count]


def procedure_failures(kind, before, p, h, count, after):
    """Postconditions of one box-adding call; returns the list of violations.

    Both procedures keep the (p-1)*-plateau and Lyndon properties, leave the
    partitions above p-1 alone (the contributing ones also fix the shape of
    partition p), and add ``count`` boxes in the expected columns of partition
    p-1 with the expected contributing flags.  A noncontributing call yields a
    (p, h, r)-plateau and a contributing one a (p, min(q, h+1), h)-plateau,
    with q and r the largest values valid for the input.  Below p every
    partition is the one above it minus its first row, with zero riggings.
    """
    from crystalrig.bijection import (
        PlateauKind,
        column_flags,
        is_lyndon,
        is_plateau,
        is_star_plateau,
        largest_q,
        largest_r,
    )
    from crystalrig.cascading import form_lanes
    from crystalrig.partitions import conjugate

    out = []
    lb, la = form_lanes(before), form_lanes(after)
    rb, ra = rc_from_lanes(before, lb), rc_from_lanes(after, la)
    q, r = largest_q(before, p, lb), largest_r(before, p, lb)
    if not is_star_plateau(after, p - 1, la):
        out.append("star plateau lost")
    for l in range(2, p):
        if not is_lyndon(after, l):
            out.append(f"not Lyndon for {l}")
        # below p each partition is the next one minus its first row, unrigged
        if ra[l - 1].shape != ra[l].shape[1:] or any(x for _, x in ra[l - 1].strings):
            out.append(f"partition {l - 1} is not partition {l} minus its first row")
    hb, ha = conjugate(rb[p - 1].shape), conjugate(ra[p - 1].shape)
    fb, fa = column_flags(lb, p - 1), column_flags(la, p - 1)
    contributing = kind != "noncontributing"
    if contributing:
        if not is_plateau(after, PlateauKind(p, min(q, h + 1), h), la):
            out.append("not a (p, min(q, h+1), h)-plateau")
        if ra[p].shape != rb[p].shape:
            out.append("partition p changed shape")
        fixed = range(p + 1, after.n + 1)
    else:
        if not is_plateau(after, PlateauKind(p, h, r), la):
            out.append("not a (p, h, r)-plateau")
        fixed = range(p, after.n + 1)
    if any(ra[x] != rb[x] for x in fixed):
        out.append("upper partition changed")
    if kind == "top_row" or h == 0:
        cols = list(range(len(hb), len(hb) + count))
    else:
        cols = [i for i, size in enumerate(hb) if size == h][:count]
    shape = list(hb) + [0] * (len(ha) - len(hb))
    flags = list(fb) + [False] * (len(ha) - len(fb))
    for i in cols:
        shape[i] += 1
        flags[i] = contributing
    if shape != ha:
        out.append(f"columns {hb} -> {ha}")
    if flags != fa:
        out.append(f"flags {fb} -> {fa}")
    return out


def colabel_changes(before, after, a):
    """(lost, gained) multisets of (length, colabel) in partition a between
    two configurations, after checking that every other partition keeps its
    strings' colabels exactly."""
    from collections import Counter

    def table(r, b):
        return Counter((l, r.vacancy(b, l) - x) for l, x in r[b].strings)

    for b in range(1, before.n + 1):
        if b != a and table(before, b) != table(after, b):
            raise AssertionError(f"colabels of partition {b} changed")
    old, new = table(before, a), table(after, a)
    return old - new, new - old
