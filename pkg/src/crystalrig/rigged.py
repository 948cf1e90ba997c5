"""Rigged configurations for B(infinity) in type A_n and their crystal operators."""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import conjugate
from .tableaux import cartan


class RiggedError(ValueError):
    pass


@dataclass(frozen=True)
class RiggedPartition:
    """A partition whose rows (strings) each carry an integer rigging.

    Strings are kept as (length, rigging) pairs sorted in decreasing order, so
    the first string is the top row.
    """

    strings: tuple = ()

    def __post_init__(self):
        strings = tuple(sorted(((int(l), int(x)) for l, x in self.strings), reverse=True))
        if any(l <= 0 for l, _ in strings):
            raise RiggedError("string lengths must be positive")
        object.__setattr__(self, "strings", strings)

    def __len__(self):
        return len(self.strings)

    def __bool__(self):
        return bool(self.strings)

    @property
    def shape(self):
        """Row lengths, weakly decreasing."""
        return [l for l, _ in self.strings]

    @property
    def size(self):
        return sum(l for l, _ in self.strings)

    def columns(self):
        return conjugate(self.shape)

    def multiplicity(self, j):
        return sum(1 for l, _ in self.strings if l == j)

    def row(self, k):
        """String k (1-based); the row just past the bottom is the empty (0, 0)."""
        if k == len(self.strings) + 1:
            return (0, 0)
        return self.strings[k - 1]

    def rigging_of_length(self, length):
        """Riggings of all strings of the given length."""
        return [x for l, x in self.strings if l == length]

    def to_json(self):
        return [[l, x] for l, x in self.strings]


@dataclass(frozen=True)
class RiggedConfiguration:
    n: int
    partitions: tuple

    def __post_init__(self):
        parts = tuple(p if isinstance(p, RiggedPartition) else RiggedPartition(tuple(p)) for p in self.partitions)
        if len(parts) != self.n:
            raise RiggedError(f"expected {self.n} rigged partitions, got {len(parts)}")
        object.__setattr__(self, "partitions", parts)

    def __getitem__(self, a):
        """1-based access to the a-th rigged partition."""
        return self.partitions[a - 1]

    def shapes(self):
        return [p.shape for p in self.partitions]

    def size(self):
        return sum(p.size for p in self.partitions)

    def weight(self):
        """Coefficients of alpha_1, ..., alpha_n."""
        return tuple(-p.size for p in self.partitions)

    def vacancy(self, a, i):
        return vacancy(self, a, i)

    def colabel(self, a, k):
        l, x = self[a].row(k)
        return vacancy(self, a, l) - x

    def to_json(self):
        return {"n": self.n, "partitions": [p.to_json() for p in self.partitions]}

    @classmethod
    def from_json(cls, data):
        n = int(data["n"])
        return cls(n, tuple(RiggedPartition(tuple(tuple(s) for s in p)) for p in data["partitions"]))

    def pretty(self):
        """One block per partition: vacancy on the left, rigging on the right."""
        out = []
        for a in range(1, self.n + 1):
            out.append(f"nu_{a}:" + (" (empty)" if not self[a] else ""))
            for l, x in self[a].strings:
                out.append(f"  {vacancy(self, a, l):>4} {'[]' * l} {x}")
        return "\n".join(out)

    def __str__(self):
        return self.pretty()


def empty_rc(n):
    return RiggedConfiguration(n, tuple(RiggedPartition() for _ in range(n)))


def _q(shape, i):
    return sum(min(i, l) for l in shape)


def vacancy(rc, a, i):
    """p_i^{(a)} = -sum_b A_ab sum_j min(i, j) m_j^{(b)}."""
    total = 0
    for b in (a - 1, a, a + 1):
        if 1 <= b <= rc.n:
            total += cartan(a, b) * _q(rc[b].shape, i)
    return -total


def shifted_vacancy(p, a, b, i, l):
    """Vacancy p_i^{(b)} after a box is added to a length-l row of partition a."""
    return p - cartan(a, b) if i > l else p


def _rebuild(rc, a, new_strings_a):
    """New configuration: partition a gets ``new_strings_a``, a list of
    [length, colabel-or-None, rigging-or-None].  Strings with a colabel get the
    rigging that keeps that colabel under the new vacancies."""
    shapes = [list(p.shape) for p in rc.partitions]
    shapes[a - 1] = sorted((s[0] for s in new_strings_a), reverse=True)
    probe = RiggedConfiguration(rc.n, tuple(RiggedPartition(tuple((l, 0) for l in sh)) for sh in shapes))
    parts = []
    for b in range(1, rc.n + 1):
        if b == a:
            items = new_strings_a
        elif abs(b - a) == 1:
            items = [[l, vacancy(rc, b, l) - x, None] for l, x in rc[b].strings]
        else:
            parts.append(rc[b])
            continue
        strings = []
        for l, co, x in items:
            strings.append((l, x if co is None else vacancy(probe, b, l) - co))
        parts.append(RiggedPartition(tuple(strings)))
    return RiggedConfiguration(rc.n, tuple(parts))


def apply_f(rc, a):
    """Kashiwara f_a.

    With x the smallest rigging of partition a: if the partition is empty or
    x > 0, add the string (1, -1); otherwise lengthen a longest string of
    rigging x by one box and give it rigging x - 1.  Every other string keeps
    its colabel.
    """
    if not 1 <= a <= rc.n:
        raise RiggedError(f"operator index {a} out of range 1..{rc.n}")
    strings = [[l, vacancy(rc, a, l) - x, None] for l, x in rc[a].strings]
    part = rc[a]
    x = min((s[1] for s in part.strings), default=None)
    if x is None or x > 0:
        strings.append([1, None, -1])
    else:
        l = max(s[0] for s in part.strings if s[1] == x)
        k = next(k for k, (ll, xx) in enumerate(part.strings) if ll == l and xx == x)
        strings[k] = [l + 1, None, x - 1]
    return _rebuild(rc, a, strings)


def apply_e(rc, a):
    """Kashiwara e_a; None for zero.

    With x the smallest rigging of partition a: zero if the partition is
    empty or x >= 0; otherwise shorten a shortest string of rigging x by one
    box and give it rigging x + 1, dropping it if it becomes empty.
    """
    if not 1 <= a <= rc.n:
        raise RiggedError(f"operator index {a} out of range 1..{rc.n}")
    part = rc[a]
    x = min((s[1] for s in part.strings), default=None)
    if x is None or x >= 0:
        return None
    strings = [[l, vacancy(rc, a, l) - xx, None] for l, xx in part.strings]
    l = min(s[0] for s in part.strings if s[1] == x)
    k = next(k for k in range(len(part.strings) - 1, -1, -1) if part.strings[k] == (l, x))
    if l == 1:
        del strings[k]
    else:
        strings[k] = [l - 1, None, x + 1]
    return _rebuild(rc, a, strings)


def epsilon(rc, a):
    k = 0
    while True:
        rc = apply_e(rc, a)
        if rc is None:
            return k
        k += 1


def phi_stat(rc, a):
    """phi_a = epsilon_a + <h_a, wt>."""
    w = rc.weight()
    return epsilon(rc, a) + sum(cartan(a, b) * w[b - 1] for b in range(1, rc.n + 1))


def stats(rc):
    """(weight, epsilon tuple, phi tuple)."""
    return (
        rc.weight(),
        tuple(epsilon(rc, a) for a in range(1, rc.n + 1)),
        tuple(phi_stat(rc, a) for a in range(1, rc.n + 1)),
    )


def fold_f(n, word):
    """Apply f along a flat word, first letter first, starting from the empty
    configuration."""
    rc = empty_rc(n)
    for a in word:
        rc = apply_f(rc, a)
    return rc
