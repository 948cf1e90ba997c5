"""Marginally large tableaux and their Kashiwara operators."""

from __future__ import annotations

from dataclasses import dataclass


class TableauError(ValueError):
    pass


@dataclass(frozen=True)
class MarginallyLargeTableau:
    """A marginally large tableau of type A_n.

    Row i (1-based) begins with i-boxes and holds entries in i..n+1.  The
    number of i-boxes in row i is one more than the length of row i+1, with
    an empty row n+1, so the whole tableau is fixed by the counts of
    non-diagonal entries.
    """

    n: int
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        _check(self.n, rows)

    @classmethod
    def from_counts(cls, n, counts):
        """Build from ``counts[(i, j)]``, the number of (j+1)-boxes in row i."""
        rows = [None] * (n + 2)
        rows[n + 1] = []
        for i in range(n, 0, -1):
            extra = []
            for j in range(i, n + 1):
                extra += [j + 1] * counts.get((i, j), 0)
            rows[i] = [i] * (len(rows[i + 1]) + 1) + extra
        return cls(n, tuple(tuple(r) for r in rows[1 : n + 1]))

    def count(self, i, j):
        """Number of (j+1)-boxes in row i."""
        return self.rows[i - 1].count(j + 1)

    def counts(self):
        return {
            (i, j): self.count(i, j)
            for i in range(1, self.n + 1)
            for j in range(i, self.n + 1)
            if self.count(i, j)
        }

    def weight(self):
        """Weight as coefficients of alpha_1, ..., alpha_n (all nonpositive).

        A (j+1)-box in row i contributes -(alpha_i + ... + alpha_j).
        """
        w = [0] * self.n
        for i in range(1, self.n + 1):
            for v in self.rows[i - 1]:
                for a in range(i, v):
                    w[a - 1] -= 1
        return tuple(w)

    def depth(self):
        return -sum(self.weight())

    def to_json(self):
        return {"n": self.n, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["n"]), tuple(tuple(r) for r in data["rows"]))

    def pretty(self):
        width = len(str(self.n + 1))
        return "\n".join(" ".join(str(v).rjust(width) for v in r) for r in self.rows)

    def __str__(self):
        return self.pretty()


def _check(n, rows):
    if n < 1:
        raise TableauError("rank must be at least 1")
    if len(rows) != n:
        raise TableauError(f"expected {n} rows, got {len(rows)}")
    for i, row in enumerate(rows, 1):
        if not row or row[0] != i:
            raise TableauError(f"row {i} must begin with an {i}-box")
        if any(a > b for a, b in zip(row, row[1:])):
            raise TableauError(f"row {i} is not weakly increasing")
        if row[-1] > n + 1:
            raise TableauError(f"row {i} has an entry above {n + 1}")
        below = len(rows[i]) if i < n else 0
        if row.count(i) != below + 1:
            raise TableauError(f"row {i} is not marginally large")
    # columns are strict automatically: row i+1 sits under the i-boxes of row i


def highest_weight(n):
    """The highest weight element: row i holds n-i+1 copies of i."""
    return MarginallyLargeTableau(n, tuple((i,) * (n - i + 1) for i in range(1, n + 1)))


def _reading_positions(rows):
    """Row reading word positions: bottom row first, each row left to right."""
    for r in range(len(rows) - 1, -1, -1):
        for c in range(len(rows[r])):
            yield r, c


def _unmatched(rows, i):
    """Unpaired i's and unpaired (i+1)'s of the reading word.

    An (i+1) pairs with a later i.  Unpaired i's all come before unpaired
    (i+1)'s.
    """
    opened = []
    lone = []
    for r, c in _reading_positions(rows):
        v = rows[r][c]
        if v == i + 1:
            opened.append((r, c))
        elif v == i:
            if opened:
                opened.pop()
            else:
                lone.append((r, c))
    return lone, opened


def tableau_f(rows, i):
    """Signature rule f_i on a semistandard tableau; None when it vanishes."""
    lone, _ = _unmatched(rows, i)
    if not lone:
        return None
    r, c = lone[-1]
    new = [list(x) for x in rows]
    new[r][c] = i + 1
    return new, (r, c)


def tableau_e(rows, i):
    """Signature rule e_i on a semistandard tableau; None when it vanishes."""
    _, opened = _unmatched(rows, i)
    if not opened:
        return None
    r, c = opened[0]
    new = [list(x) for x in rows]
    new[r][c] = i
    return new, (r, c)


def _is_large(rows):
    n = len(rows)
    for k in range(1, n + 1):
        below = len(rows[k]) if k < n else 0
        if rows[k - 1].count(k) <= below:
            return False
    return True


def apply_f(t, i):
    """Kashiwara f_i on a marginally large tableau."""
    if not 1 <= i <= t.n:
        raise TableauError(f"operator index {i} out of range 1..{t.n}")
    rows, _ = tableau_f(t.rows, i)
    if not _is_large(rows):
        # the changed box was the last i of row i: put a column 1..i in front of it
        for k in range(1, i + 1):
            rows[k - 1].insert(0, k)
    return MarginallyLargeTableau(t.n, tuple(tuple(r) for r in rows))


def apply_e(t, i):
    """Kashiwara e_i on a marginally large tableau; None for zero."""
    if not 1 <= i <= t.n:
        raise TableauError(f"operator index {i} out of range 1..{t.n}")
    res = tableau_e(t.rows, i)
    if res is None:
        return None
    rows, (r, c) = res
    if _is_large(rows) and rows[i - 1].count(i) > (len(rows[i]) if i < t.n else 0) + 1:
        # large but not marginally large: drop the column 1..i through the changed box
        assert r == i - 1
        for k in range(1, i + 1):
            rows[k - 1].remove(k)
    return MarginallyLargeTableau(t.n, tuple(tuple(x) for x in rows))


def epsilon(t, i):
    k = 0
    while True:
        t = apply_e(t, i)
        if t is None:
            return k
        k += 1


def phi_stat(t, i):
    """phi_i = epsilon_i + <h_i, wt>."""
    w = t.weight()
    pairing = sum(cartan(i, b) * w[b - 1] for b in range(1, t.n + 1))
    return epsilon(t, i) + pairing


def cartan(a, b):
    """Cartan matrix entry of type A."""
    if a == b:
        return 2
    return -1 if abs(a - b) == 1 else 0
