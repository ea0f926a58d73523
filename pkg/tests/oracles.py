"""Independent reference implementations used only by the tests.

Nothing here imports the search code under test; graphs are handled as
plain adjacency sets so a shared bug cannot hide on both sides.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx

from k25free.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(index), ((index[a], index[b]) for a, b in h.edges()))


def _adjacency(g: Graph) -> list[set[int]]:
    return [{u for u in range(g.n) if g.adj[v] >> u & 1} for v in range(g.n)]


def _connected(adj: list[set[int]], vs: frozenset) -> bool:
    start = next(iter(vs))
    seen, todo = {start}, [start]
    while todo:
        for u in adj[todo.pop()] & vs:
            if u not in seen:
                seen.add(u)
                todo.append(u)
    return len(seen) == len(vs)


def connected_subsets(g: Graph) -> list[frozenset]:
    """Every nonempty connected vertex subset, by brute force over all subsets."""
    adj = _adjacency(g)
    out = []
    for size in range(1, g.n + 1):
        for vs in combinations(range(g.n), size):
            fs = frozenset(vs)
            if _connected(adj, fs):
                out.append(fs)
    return out


def has_minor_bruteforce(host: Graph, pattern: Graph) -> bool:
    """Try every assignment of disjoint connected subsets to pattern vertices.

    Pattern vertices with equal neighbourhoods (apart from each other) are
    interchangeable, so their branch sets are taken with increasing minima.
    """
    adj = _adjacency(host)
    padj = _adjacency(pattern)
    h = pattern.n
    if h == 0:
        return True
    twins_before = [
        [i for i in range(j) if padj[i] - {j} == padj[j] - {i}] for j in range(h)
    ]
    subsets = connected_subsets(host)
    nbhd = {s: set().union(*(adj[v] for v in s)) for s in subsets}
    chosen: list[frozenset] = []

    def place(j: int, used: frozenset) -> bool:
        if j == h:
            return True
        if host.n - len(used) < h - j:
            return False
        for s in subsets:
            if s & used:
                continue
            if any(min(s) < min(chosen[i]) for i in twins_before[j]):
                continue
            if any(i < j and not (nbhd[s] & chosen[i]) for i in padj[j]):
                continue
            chosen.append(s)
            if place(j + 1, used | s):
                return True
            chosen.pop()
        return False

    return place(0, frozenset())


def vertex_connectivity_nx(g: Graph) -> int:
    if g.n == 1:
        return 0
    return nx.node_connectivity(to_nx(g))
