"""Cascading sequences of lower subintervals and the lane-forming procedure."""

from __future__ import annotations

from dataclasses import dataclass

from .tableaux import MarginallyLargeTableau


class CascadingError(ValueError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True)
class LowerSubinterval:
    """The run head, head+1, ..., tail.  Its last letter is the right endpoint."""

    head: int
    tail: int

    def __post_init__(self):
        if self.head < 1 or self.tail < self.head:
            raise CascadingError(f"bad subinterval ({self.head}, {self.tail})")

    @property
    def entries(self):
        return range(self.head, self.tail + 1)

    def __len__(self):
        return self.tail - self.head + 1

    def lengthened(self):
        """Prepend head-1."""
        return LowerSubinterval(self.head - 1, self.tail)

    def __repr__(self):
        return f"({self.head}..{self.tail})"


def _as_interval(x):
    if isinstance(x, LowerSubinterval):
        return x
    a, m = x
    return LowerSubinterval(int(a), int(m))


@dataclass(frozen=True)
class CascadingSequence:
    """A list of lower subintervals with weakly decreasing tails; among equal
    tails the heads weakly increase (lengths do not grow)."""

    n: int
    subintervals: tuple

    def __post_init__(self):
        ivs = tuple(_as_interval(x) for x in self.subintervals)
        object.__setattr__(self, "subintervals", ivs)
        for k, iv in enumerate(ivs):
            if iv.tail > self.n:
                raise CascadingError(f"subinterval {k + 1} exceeds n={self.n}", k)
            if k:
                prev = ivs[k - 1]
                if iv.tail > prev.tail:
                    raise CascadingError(f"tails increase at subinterval {k + 1}", k)
                if iv.tail == prev.tail and iv.head < prev.head:
                    raise CascadingError(f"length grows at subinterval {k + 1}", k)

    def __len__(self):
        return len(self.subintervals)

    def __getitem__(self, b):
        """1-based access to I_b."""
        return self.subintervals[b - 1]

    @property
    def flat(self):
        return tuple(v for iv in self.subintervals for v in iv.entries)

    def letters(self):
        return sum(len(iv) for iv in self.subintervals)

    def heads(self, v):
        """Indices b (1-based) with head v, in order."""
        return [b for b, iv in enumerate(self.subintervals, 1) if iv.head == v]

    @classmethod
    def from_flat(cls, n, word):
        """Split a flat word into maximal runs of consecutive letters.

        The split is forced: a letter m+1 after m must continue the run since
        tails never increase.
        """
        ivs = []
        for v in word:
            v = int(v)
            if ivs and v == ivs[-1][1] + 1:
                ivs[-1][1] = v
            else:
                ivs.append([v, v])
        return cls(n, tuple(LowerSubinterval(a, m) for a, m in ivs))

    def to_json(self):
        return {"n": self.n, "subintervals": [[iv.head, iv.tail] for iv in self.subintervals]}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["n"]), tuple(tuple(x) for x in data["subintervals"]))

    def pretty(self):
        return " ".join("(" + ",".join(map(str, iv.entries)) + ")" for iv in self.subintervals)


def validate(subintervals, n):
    """Build a cascading sequence or raise CascadingError naming the bad index."""
    return CascadingSequence(n, tuple(subintervals))


def phi(t):
    """Tableau to cascading sequence.

    For m = n down to 1 and i = 1, 2, ..., m: one copy of (i..m) per
    (m+1)-box in row i.
    """
    ivs = []
    for m in range(t.n, 0, -1):
        for i in range(1, m + 1):
            ivs += [LowerSubinterval(i, m)] * t.count(i, m)
    return CascadingSequence(t.n, tuple(ivs))


def phi_inverse(seq):
    """Each (i..m) is an (m+1)-box in row i; the diagonal boxes follow."""
    counts = {}
    for iv in seq.subintervals:
        key = (iv.head, iv.tail)
        counts[key] = counts.get(key, 0) + 1
    return MarginallyLargeTableau.from_counts(seq.n, counts)


@dataclass(frozen=True)
class LaneDecomposition:
    """Lanes of a cascading sequence.

    ``lanes[v]`` lists the lanes of letter v; lane i is ``lanes[v][i-1]``, a
    tuple of references (b, j) meaning entry j of subinterval b (1-based).
    """

    seq: CascadingSequence
    lanes: dict
    position: dict

    def lane_lengths(self, v):
        return [len(L) for L in self.lanes.get(v, ())]

    def lane(self, v, i):
        ls = self.lanes.get(v, ())
        return ls[i - 1] if i <= len(ls) else ()

    def lane_of(self, b, j):
        """(lane number, depth) of entry j of subinterval b."""
        return self.position[(b, j)]

    def is_right_endpoint(self, ref):
        b, j = ref
        return j == len(self.seq[b])

    def ends_at_right_endpoint(self, v, i):
        L = self.lane(v, i)
        return bool(L) and self.is_right_endpoint(L[-1])

    def lanes_of_length(self, v, length):
        """Lane numbers of letter v whose length is exactly ``length``."""
        return [i for i, L in enumerate(self.lanes.get(v, ()), 1) if len(L) == length]

    def closed_lanes(self, v, upto):
        """Number of lanes L_i(v), i <= upto, ending at a right endpoint."""
        ls = self.lanes.get(v, ())
        return sum(1 for i in range(1, min(upto, len(ls)) + 1) if self.ends_at_right_endpoint(v, i))


def form_lanes(seq):
    """Distribute every letter of the sequence into lanes.

    The head of a subinterval opens a new lane after the existing lanes of
    its letter.  Every later entry goes into lane d+1, where d is the largest
    index not above the previous entry's d with lane d strictly longer than
    lane d+1 (lane 0 counts as infinitely long).
    """
    lanes = {}
    position = {}
    for b, iv in enumerate(seq.subintervals, 1):
        d_prev = None
        for j, v in enumerate(iv.entries, 1):
            cols = lanes.setdefault(v, [])

            def size(k):
                return len(cols[k - 1]) if k <= len(cols) else 0

            if j == 1:
                d = len(cols)
            else:
                d = d_prev
                while d > 0 and not size(d) > size(d + 1):
                    d -= 1
            if d == len(cols):
                cols.append([])
            cols[d].append((b, j))
            position[(b, j)] = (d + 1, len(cols[d]))
            d_prev = d
    frozen = {v: tuple(tuple(L) for L in ls) for v, ls in lanes.items()}
    return LaneDecomposition(seq, frozen, position)
