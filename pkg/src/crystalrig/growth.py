"""Deciding membership in B(infinity) by growing a rigged configuration from
its last partition downward, and enumerating admissible next partitions."""

from __future__ import annotations

from dataclasses import dataclass

from .bijection import ProcedureError, add_contributing, add_noncontributing, rc_from_lanes
from .cascading import CascadingSequence, LowerSubinterval
from .partitions import conjugate, max_rows, stretches
from .rigged import RiggedConfiguration, RiggedPartition


class GrowthRejection(ValueError):
    """Raised when a rigged configuration is not in B(infinity).

    ``partition`` is the index of the offending partition and ``constraint``
    a short name of the failed rule.
    """

    def __init__(self, partition, constraint, detail=""):
        super().__init__(f"partition {partition}: {constraint}" + (f" ({detail})" if detail else ""))
        self.partition = partition
        self.constraint = constraint
        self.detail = detail

    def to_json(self):
        return {"valid": False, "at": {"partition": self.partition, "constraint": self.constraint}}


@dataclass(frozen=True)
class StretchRecord:
    """How the boxes beneath one stretch of a partition's reduction split up.

    ``height`` is the stretch height after removing the first row (0 for the
    part of the first row that overhangs the second).  ``acon`` counts the
    columns of the next partition under the stretch that end in a contributing
    box; ``u`` and ``l`` are the boxes added in the first and second rows
    beneath it, of which ``ncb`` are noncontributing, ``cb1`` contributing in
    the first row and ``cb2`` contributing in the second.
    """

    start: int
    length: int
    height: int
    cb: int
    acon: int
    u: int
    l: int
    ncb: int
    cb1: int
    cb2: int
    left_height: int
    offset: int


@dataclass(frozen=True)
class StepRecord:
    """The passage from partition ``index`` to partition ``index - 1``."""

    index: int
    max_rows: int
    room: int
    stretches: tuple
    cb_prime: int


@dataclass(frozen=True)
class GrowthCertificate:
    n: int
    acon_n: int
    steps: tuple
    terminal: tuple
    sequence: CascadingSequence

    def riggings(self):
        """Rebuild every rigged partition from the contribution counts alone."""
        parts = {}
        for d, recs in [(s.index, s.stretches) for s in self.steps] + [(1, self.terminal)]:
            strings = []
            total = 0
            lengths = _lengths_from_records(recs)
            for rec, rows in zip(recs, lengths):
                total += -rec.cb + rec.acon
                strings += [(rec.start + rec.length - 1, total)] * rows
            parts[d] = RiggedPartition(tuple(strings))
        return RiggedConfiguration(self.n, tuple(parts.get(a, RiggedPartition()) for a in range(1, self.n + 1)))

    def to_json(self):
        return {
            "valid": True,
            "acon_n": self.acon_n,
            "steps": [
                {
                    "index": s.index,
                    "max_rows": s.max_rows,
                    "room": s.room,
                    "cb_prime": s.cb_prime,
                    "stretches": [vars(r) for r in s.stretches],
                }
                for s in self.steps
            ],
            "sequence": self.sequence.to_json()["subintervals"],
        }


def _lengths_from_records(recs):
    # number of rows whose right end is the stretch: heights drop between stretches
    out = []
    for k, rec in enumerate(recs):
        above = recs[k + 1].height if k + 1 < len(recs) else -1
        out.append(rec.height - above)
    return out


@dataclass
class _Walk:
    records: list
    flags: list
    terminal: tuple


def _stretch_data(part, flags, d, n, is_last):
    """Stretches of partition d with their contributing counts and acon values."""
    shape = part.shape
    for length in set(shape):
        if len(set(part.rigging_of_length(length))) > 1:
            raise GrowthRejection(d, "rigging_uniform", f"rows of length {length}")
    out = []
    prev = 0
    bound_rows = max_rows(d - 1, n) if d >= 2 else 0
    for start, length, height in stretches(shape):
        rig = part.rigging_of_length(start + length - 1)[0]
        cb = sum(1 for c in range(start, start + length) if flags[c - 1])
        acon = rig - prev + cb
        prev = rig
        top = length if (d >= 2 and height <= bound_rows) else 0
        if not 0 <= acon <= top:
            raise GrowthRejection(d, "acon_range", f"acon={acon} outside 0..{top}")
        out.append((start, length, height - 1, cb, acon))
    return out


def _shape_problems(lam, nxt, d, n):
    """(constraint, detail) pairs for the shape of partition d-1 against partition d."""
    out = []
    width = lam.shape[0] if lam else 0
    base = conjugate(lam.shape[1:])
    heights = conjugate(nxt.shape)
    for c in range(1, max(len(heights), len(base)) + 1):
        b = base[c - 1] if c <= len(base) else 0
        h = heights[c - 1] if c <= len(heights) else 0
        if h < b:
            out.append(("containment", f"column {c}"))
        elif h - b > (2 if c <= width else 1):
            out.append(("column_bound", f"column {c}"))
    if len(nxt) > max_rows(d - 1, n):
        out.append(("max_rows", f"{len(nxt)} rows, at most {max_rows(d - 1, n)}"))
    return out


def check_constraints(prev, nxt, m, n):
    """Shape checks of partition m-1 (``nxt``) against partition m (``prev``).

    Riggings are ignored.  Returns (ok, diagnostics) where each diagnostic is
    a (constraint, detail) pair.
    """
    problems = _shape_problems(prev, nxt, m, n)
    return not problems, problems


def _step(lam, nxt, flags, d, n):
    """Check partition d-1 against partition d and split the added boxes."""
    data = _stretch_data(lam, flags, d, n, False)
    problems = _shape_problems(lam, nxt, d, n)
    if problems:
        raise GrowthRejection(d - 1, *problems[0])
    width = lam.shape[0] if lam else 0
    heights = conjugate(nxt.shape)
    new_flags = [False] * len(heights)
    records = []
    offset = 0
    for start, length, h, cb, acon in data:
        cols = range(start, start + length)
        u = sum(1 for c in cols if c <= len(heights) and heights[c - 1] >= h + 1)
        l = sum(1 for c in cols if c <= len(heights) and heights[c - 1] >= h + 2)
        cb2 = l
        cb1 = acon - l
        ncb = u - cb1
        if cb1 < 0 or ncb < cb2:
            raise GrowthRejection(d - 1, "decomposition", f"stretch at column {start}")
        for k, c in enumerate(cols):
            if k < l or ncb <= k < u:
                new_flags[c - 1] = True
        left = heights[start - 2] if start >= 2 else 0
        records.append(StretchRecord(start, length, h, cb, acon, u, l, ncb, cb1, cb2, left, offset))
        offset += length
    for c in range(width + 1, len(heights) + 1):
        new_flags[c - 1] = True
    room = max_rows(d - 1, n) - (len(lam) - 1)
    step = StepRecord(d, max_rows(d - 1, n), room, tuple(records), max(0, len(heights) - width))
    return step, new_flags


def _walk(n, parts, lowest):
    """Run the checks from partition n down to ``lowest``.

    ``parts`` maps an index to its rigged partition.  The last partition only
    has its acon values bounded by what the next partition could supply.
    """
    top = parts[n]
    if len(top) > 1:
        raise GrowthRejection(n, "single_row")
    flags = [True] * top.size
    steps = []
    for d in range(n, lowest, -1):
        step, flags = _step(parts[d], parts[d - 1], flags, d, n)
        steps.append(step)
    data = _stretch_data(parts[lowest], flags, lowest, n, True)
    terminal = tuple(
        StretchRecord(s, ln, h, cb, acon, 0, 0, 0, 0, 0, 0, 0) for s, ln, h, cb, acon in data
    )
    return _Walk(steps, flags, terminal)


def build_sequence(n, top_size, steps, trace=None):
    """Run the box-adding procedures recorded in ``steps``.

    ``trace``, if given, is called as trace(kind, before, p, h, count, after)
    for every procedure call that adds at least one box.
    """
    seq = CascadingSequence(n, (LowerSubinterval(n, n),) * top_size)

    def run(kind, fn, p, h, count, **kw):
        nonlocal seq
        after = fn(seq, p, h, count, **kw)
        if trace is not None and count:
            trace(kind, seq, p, h, count, after)
        seq = after

    for step in steps:
        p = step.index
        for rec in step.stretches:
            run("noncontributing", add_noncontributing, p, rec.height, rec.ncb)
            run("contributing", add_contributing, p, rec.height + 1, rec.cb2)
            run("contributing", add_contributing, p, rec.height, rec.cb1)
        run("top_row", add_contributing, p, 0, step.cb_prime, top_row=True)
    return seq


def validate(rc):
    """Certificate that ``rc`` lies in B(infinity), or a GrowthRejection.

    Each partition is checked against the one above it: equal rows carry
    equal riggings, the riggings give every stretch an acon value inside its
    range, the next partition adds at most two boxes per column (one past the
    first row), respects the row bound, and splits into noncontributing and
    contributing boxes consistently with acon.  The sequence built from these
    counts must then give back ``rc`` exactly.
    """
    n = rc.n
    parts = {a: rc[a] for a in range(1, n + 1)}
    walk = _walk(n, parts, 1)
    try:
        seq = build_sequence(n, rc[n].size, walk.records)
    except (ProcedureError, ValueError) as exc:
        raise GrowthRejection(1, "procedure", str(exc))
    back = rc_from_lanes(seq)
    if back != rc:
        bad = next(a for a in range(n, 0, -1) if back[a] != rc[a])
        raise GrowthRejection(bad, "round_trip")
    acon_n = walk.records[0].stretches[0].acon if walk.records and walk.records[0].stretches else (
        walk.terminal[0].acon if walk.terminal else 0
    )
    return GrowthCertificate(n, acon_n, tuple(walk.records), walk.terminal, seq)


def is_valid(rc):
    try:
        validate(rc)
    except GrowthRejection:
        return False
    return True


def validate_suffix(n, suffix):
    """Check partitions n, n-1, ..., n-len(suffix)+1 given in that order.

    Returns the walk so the caller can extend it; raises GrowthRejection.
    """
    if not 1 <= len(suffix) <= n:
        raise ValueError("suffix length must be between 1 and n")
    parts = {n - k: p for k, p in enumerate(suffix)}
    return _walk(n, parts, n - len(suffix) + 1)


def _column_choices(base, width, limit, budget):
    """Column height vectors over ``base`` adding at most two boxes per column
    inside ``width`` and one past it, weakly decreasing, within the budget."""
    out = []
    end = max(width, len(base)) + budget

    def rec(c, prev, spent, acc):
        if c > end:
            out.append(acc)
            return
        b = base[c - 1] if c <= len(base) else 0
        for add in range(3 if c <= width else 2):
            h = b + add
            if h > prev or h > limit or spent + add > budget:
                continue
            if h == 0:
                out.append(acc)
            else:
                rec(c + 1, h, spent + add, acc + [h])

    rec(1, limit, 0, [])
    return out


def enumerate_next(n, suffix, budget):
    """All rigged partitions that can follow the suffix lambda_n, ..., lambda_{n-i}.

    Candidates add at most ``budget`` boxes to the last partition with its
    first row removed.  Their riggings range over every admissible acon value
    of their own stretches.
    """
    walk = validate_suffix(n, suffix)
    d = n - len(suffix) + 1
    if d == 1:
        return []
    lam = suffix[-1]
    width = lam.shape[0] if lam else 0
    base = conjugate(lam.shape[1:])
    limit = max_rows(d - 1, n)
    found = set()
    for heights in _column_choices(base, width, limit, budget):
        shape = conjugate(heights)
        bare = RiggedPartition(tuple((r, 0) for r in shape))
        try:
            _, flags = _step(lam, bare, walk.flags, d, n)
        except GrowthRejection:
            continue
        found |= _rigging_choices(shape, flags, d - 1, n)
    return sorted(found, key=lambda p: p.strings)


def _rigging_choices(shape, flags, d, n):
    sts = stretches(shape)
    bound_rows = max_rows(d - 1, n) if d >= 2 else 0
    ranges = []
    for start, length, height in sts:
        cb = sum(1 for c in range(start, start + length) if flags[c - 1])
        top = length if (d >= 2 and height <= bound_rows) else 0
        ranges.append((start + length - 1, cb, top))
    out = set()

    def rec(k, total, strings):
        if k == len(ranges):
            out.add(RiggedPartition(tuple(strings)))
            return
        row, cb, top = ranges[k]
        count = shape.count(row)
        for acon in range(top + 1):
            t = total - cb + acon
            rec(k + 1, t, strings + [(row, t)] * count)

    rec(0, 0, [])
    return out
