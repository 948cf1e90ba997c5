"""Rigged configurations read off from lanes, plateaus, and the two box-adding
procedures used to rebuild a cascading sequence from a rigged configuration."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cascading import CascadingSequence, LowerSubinterval, form_lanes, phi
from .partitions import conjugate
from .rigged import RiggedConfiguration, RiggedPartition

INF = math.inf


class ProcedureError(ValueError):
    pass


def rc_from_lanes(seq, lanes=None):
    """Rigged configuration of a cascading sequence.

    Partition l has one column per lane of letter l.  A row of length r gets
    rigging  -#{i <= r : L_i(l) ends at a right endpoint}
             +#{i <= r : L_i(l-1) ends at a right endpoint}.
    """
    if lanes is None:
        lanes = form_lanes(seq)
    parts = []
    for l in range(1, seq.n + 1):
        heights = lanes.lane_lengths(l)
        rows = conjugate(heights)
        strings = [(r, -lanes.closed_lanes(l, r) + lanes.closed_lanes(l - 1, r)) for r in rows]
        parts.append(RiggedPartition(tuple(strings)))
    return RiggedConfiguration(seq.n, tuple(parts))


def psi(t):
    """Tableau to rigged configuration through its cascading sequence."""
    return rc_from_lanes(phi(t))


def box_annotation(seq, lanes=None):
    """Map (l, row, column) -> True for contributing boxes of partition l.

    Entry v of a subinterval sits in lane c at depth d, i.e. in column c and
    row d of partition v; it contributes exactly when it is the right endpoint.
    """
    if lanes is None:
        lanes = form_lanes(seq)
    out = {}
    for (b, j), (c, d) in lanes.position.items():
        iv = seq[b]
        out[(iv.head + j - 1, d, c)] = j == len(iv)
    return out


def column_flags(lanes, l):
    """For each column of partition l, whether its top box contributes."""
    return [lanes.ends_at_right_endpoint(l, i) for i in range(1, len(lanes.lane_lengths(l)) + 1)]


# plateaus


@dataclass(frozen=True)
class PlateauKind:
    """A (p, q, r)-plateau; q and r may be infinite."""

    p: int
    q: float = INF
    r: float = INF


def is_plateau(seq, kind, lanes=None):
    """Check the three plateau conditions for letter p.

    1. |L_i(p-1)| = |L_i(p)| - 1 for every lane L_i(p) with |L_i(p-1)| < q;
    2. no (p-1)-lane of length at most r ends at a right endpoint;
    3. no k-lane ends at a right endpoint for k < p-1.
    """
    if lanes is None:
        lanes = form_lanes(seq)
    p, q, r = kind.p, kind.q, kind.r
    if p < 2:
        raise ProcedureError("plateaus need p >= 2")
    top = lanes.lane_lengths(p)
    below = lanes.lane_lengths(p - 1)
    for i, size in enumerate(top, 1):
        lower = below[i - 1] if i <= len(below) else 0
        if lower < q and lower != size - 1:
            return False
    for i, size in enumerate(below, 1):
        if size <= r and lanes.ends_at_right_endpoint(p - 1, i):
            return False
    for k in range(1, p - 1):
        for i in range(1, len(lanes.lane_lengths(k)) + 1):
            if lanes.ends_at_right_endpoint(k, i):
                return False
    return True


def is_star_plateau(seq, p, lanes=None):
    """An m-plateau for every m in 2..p."""
    if lanes is None:
        lanes = form_lanes(seq)
    return all(is_plateau(seq, PlateauKind(m), lanes) for m in range(2, p + 1))


def is_lyndon(seq, l):
    """Every prefix has at least as many heads l as heads j, for each j < l."""
    counts = {}
    for iv in seq.subintervals:
        counts[iv.head] = counts.get(iv.head, 0) + 1
        if iv.head < l and counts[iv.head] > counts.get(l, 0):
            return False
    return True


def largest_r(seq, p, lanes=None):
    """Largest r (possibly infinite) with seq a (p, 0, r)-plateau, or None."""
    if lanes is None:
        lanes = form_lanes(seq)
    if not is_plateau(seq, PlateauKind(p, 0, 0), lanes):
        return None
    bad = [
        size
        for i, size in enumerate(lanes.lane_lengths(p - 1), 1)
        if lanes.ends_at_right_endpoint(p - 1, i)
    ]
    return min(bad) - 1 if bad else INF


def largest_q(seq, p, lanes=None):
    """Largest q (possibly infinite) meeting plateau condition 1 for letter p."""
    if lanes is None:
        lanes = form_lanes(seq)
    top = lanes.lane_lengths(p)
    below = lanes.lane_lengths(p - 1)
    q = INF
    for i, size in enumerate(top, 1):
        lower = below[i - 1] if i <= len(below) else 0
        if lower != size - 1:
            q = min(q, lower)
    return q


# box-adding procedures


def stretch_room(seq, p, h, lanes=None):
    """Columns of the (p-1)-st partition available beneath the stretch at height h.

    These are the columns of height exactly h; for h = 0 they are the columns
    past the first row of partition p-1 that still lie under partition p.
    """
    if lanes is None:
        lanes = form_lanes(seq)
    below = lanes.lane_lengths(p - 1)
    if h == 0:
        return max(0, len(lanes.lane_lengths(p)) - len(below))
    return sum(1 for size in below if size == h)


def _deleted_chain(seq, p, h, lanes):
    """Indices of the subintervals fixed before lengthening.

    Starting from every subinterval with head p-h-1, each chosen subinterval
    with head v claims the nearest unclaimed subinterval with head v+1 to its
    left.  A subinterval with head p-1 whose letter p opens a p-lane claims
    nothing.
    """
    heads = [iv.head for iv in seq.subintervals]
    chain = [b for b in range(len(heads)) if heads[b] == p - h - 1]
    fixed = set(chain)
    for v in range(p - h - 1, p):
        nxt = []
        taken = set()
        for b in chain:
            if v == p - 1 and seq[b + 1].tail >= p and lanes.lane_of(b + 1, 2)[1] == 1:
                continue
            k = b - 1
            while k >= 0 and not (heads[k] == v + 1 and k not in taken):
                k -= 1
            if k < 0:
                raise ProcedureError(f"no subinterval with head {v + 1} left of subinterval {b + 1}")
            taken.add(k)
            nxt.append(k)
        fixed |= taken
        chain = nxt
    return fixed


def add_noncontributing(seq, p, h, count, check=False):
    """Add ``count`` noncontributing boxes to partition p-1 beneath the stretch
    at height h, by lengthening subintervals with heads p-h, ..., p.

    After fixing the chain of subintervals found by the pairing scan, the
    first ``count`` remaining subintervals with each head v in p-h..p get the
    new head v-1.
    """
    if count < 0:
        raise ProcedureError("count must be nonnegative")
    if count == 0:
        return seq
    lanes = form_lanes(seq)
    if check:
        _require(is_star_plateau(seq, p - 1, lanes), f"input is not a {p - 1}*-plateau")
        _require(is_plateau(seq, PlateauKind(p, h + 1, h + 1), lanes), f"input is not a ({p}, {h + 1}, {h + 1})-plateau")
        _require(count <= stretch_room(seq, p, h, lanes), "count exceeds the stretch")
    fixed = _deleted_chain(seq, p, h, lanes)
    ivs = list(seq.subintervals)
    for v in range(p - h, p + 1):
        free = [b for b, iv in enumerate(ivs) if iv.head == v and b not in fixed]
        if len(free) < count:
            raise ProcedureError(f"only {len(free)} subintervals with head {v} can be lengthened")
        for b in free[:count]:
            ivs[b] = ivs[b].lengthened()
    return CascadingSequence(seq.n, tuple(ivs))


def add_contributing(seq, p, h, count, top_row=False, check=False):
    """Add ``count`` contributing boxes to partition p-1 beneath the stretch at
    height h by appending copies of (p-h-1, ..., p-1).

    With ``top_row`` the boxes extend the first row of partition p-1 and the
    appended subintervals are the singletons (p-1).
    """
    if count < 0:
        raise ProcedureError("count must be nonnegative")
    if count == 0:
        return seq
    if top_row:
        h = 0
    if check:
        lanes = form_lanes(seq)
        _require(is_star_plateau(seq, p - 1, lanes), f"input is not a {p - 1}*-plateau")
        _require(is_plateau(seq, PlateauKind(p, 0, h + 1), lanes), f"input is not a ({p}, 0, {h + 1})-plateau")
        if not top_row:
            _require(count <= stretch_room(seq, p, h, lanes), "count exceeds the stretch")
    iv = LowerSubinterval(p - h - 1, p - 1)
    return CascadingSequence(seq.n, seq.subintervals + (iv,) * count)


def _require(cond, message):
    if not cond:
        raise ProcedureError(message)


def seq_from_rc(rc):
    """Cascading sequence whose lanes give ``rc``; rejects configurations
    outside B(infinity) with a GrowthRejection."""
    from .growth import validate

    return validate(rc).sequence
