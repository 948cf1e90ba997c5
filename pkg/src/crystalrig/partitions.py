"""Small helpers for integer partitions stored as weakly decreasing row lengths."""

from __future__ import annotations


def conjugate(rows):
    """Column heights of the Young diagram with the given row lengths."""
    rows = [r for r in rows if r > 0]
    if not rows:
        return []
    return [sum(1 for r in rows if r >= c) for c in range(1, rows[0] + 1)]


def column_height(rows, col):
    """Height of column ``col`` (1-based); zero past the first row."""
    return sum(1 for r in rows if r >= col)


def drop_first_row(rows):
    """The partition with its first row removed."""
    return list(rows[1:])


def stretches(rows):
    """Stretches of a partition ordered from bottom to top.

    The stretch of row b is the part of row b with nothing beneath it.  Only
    rows strictly longer than the next row have a nonempty stretch.  Each entry
    is ``(first_column, length, height)`` with 1-based columns, where height is
    the row index b.
    """
    rows = [r for r in rows if r > 0]
    out = []
    for b in range(len(rows), 0, -1):
        below = rows[b] if b < len(rows) else 0
        if rows[b - 1] > below:
            out.append((below + 1, rows[b - 1] - below, b))
    return out


def max_rows(l, n):
    """Largest number of rows the l-th partition can have in type A_n."""
    return min(n - l + 1, l)
