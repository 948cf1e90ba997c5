"""Breadth-first crystal graphs for both models and a cross-check between them."""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field

from . import rigged, tableaux
from .bijection import psi

DEFAULT_NODE_LIMIT = 10**6


class NodeLimitExceeded(RuntimeError):
    pass


def node_limit():
    raw = os.environ.get("CRYSTAL_RIG_NODE_LIMIT")
    return int(raw) if raw else DEFAULT_NODE_LIMIT


@dataclass
class CrystalGraph:
    """Nodes reachable from the highest weight element by at most ``depth``
    applications of f.  Node ids are BFS order; edges are (u, a, v) for
    f_a(u) = v, kept only when both ends are in the graph."""

    n: int
    depth: int
    nodes: list = field(default_factory=list)
    index: dict = field(default_factory=dict)
    level: list = field(default_factory=list)
    edges: list = field(default_factory=list)

    def __len__(self):
        return len(self.nodes)

    def __contains__(self, x):
        return x in self.index

    def dump(self, serialize):
        lines = [f"{k}\t{serialize(x)}" for k, x in enumerate(self.nodes)]
        lines += [f"edge\t{u}\t{a}\t{v}" for u, a, v in self.edges]
        return "\n".join(lines)


def bfs(root, n, depth, apply_f, limit=None):
    if limit is None:
        limit = node_limit()
    g = CrystalGraph(n, depth)
    g.nodes.append(root)
    g.index[root] = 0
    g.level.append(0)
    queue = deque([0])
    while queue:
        u = queue.popleft()
        if g.level[u] == depth:
            continue
        for a in range(1, n + 1):
            y = apply_f(g.nodes[u], a)
            v = g.index.get(y)
            if v is None:
                if len(g.nodes) >= limit:
                    raise NodeLimitExceeded(f"more than {limit} nodes")
                v = len(g.nodes)
                g.nodes.append(y)
                g.index[y] = v
                g.level.append(g.level[u] + 1)
                queue.append(v)
            g.edges.append((u, a, v))
    return g


def mlt_graph(n, depth, limit=None):
    return bfs(tableaux.highest_weight(n), n, depth, tableaux.apply_f, limit)


def rc_graph(n, depth, limit=None):
    return bfs(rigged.empty_rc(n), n, depth, rigged.apply_f, limit)


@dataclass
class CrossCheckReport:
    ok: bool
    nodes: int
    edges: int
    mismatches: list

    def summary(self):
        state = "ok" if self.ok else f"{len(self.mismatches)} mismatches"
        return f"{self.nodes} nodes, {self.edges} edges: {state}"


def cross_check(g_mlt, g_rc, mapping=psi, limit=20):
    """Check that ``mapping`` sends the tableau graph onto the rigged
    configuration graph, node for node and edge for edge."""
    bad = []
    image = []
    for k, t in enumerate(g_mlt.nodes):
        r = mapping(t)
        image.append(r)
        if r not in g_rc.index:
            bad.append(("node", k, t, r))
        elif g_rc.level[g_rc.index[r]] != g_mlt.level[k]:
            bad.append(("level", k, t, r))
    if len(set(image)) != len(image):
        bad.append(("not injective", None, None, None))
    if len(g_mlt) != len(g_rc):
        bad.append(("size", len(g_mlt), len(g_rc), None))
    rc_edges = set(g_rc.edges)
    for u, a, v in g_mlt.edges:
        ru = g_rc.index.get(image[u])
        rv = g_rc.index.get(image[v])
        if (ru, a, rv) not in rc_edges:
            bad.append(("edge", (u, a, v), ru, rv))
    if len(g_mlt.edges) != len(g_rc.edges):
        bad.append(("edge count", len(g_mlt.edges), len(g_rc.edges), None))
    return CrossCheckReport(not bad, len(g_mlt), len(g_mlt.edges), bad[:limit])


def rc_membership(rc):
    """Exact B(infinity) membership by walking e-operators to the empty
    configuration and replaying the path with f.

    Any nonzero e_a stays inside the crystal, so a member always reaches the
    empty configuration; the replay rules out non-members that happen to get
    there too.
    """
    path = []
    x = rc
    while True:
        for a in range(1, rc.n + 1):
            y = rigged.apply_e(x, a)
            if y is not None:
                path.append(a)
                x = y
                break
        else:
            break
    if x != rigged.empty_rc(rc.n):
        return False
    for a in reversed(path):
        x = rigged.apply_f(x, a)
    return x == rc
