"""Vertex and edge connectivity by unit-capacity max-flow, plus brute-force oracles."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import CapabilityError, PreconditionError
from .graph import Graph, components, iter_bits, members, vset

MAX_BRUTEFORCE_CUT_VERTICES = 12
MAX_CYCLIC_CUT_EDGES = 60

_INF = 1 << 30


@dataclass(frozen=True)
class CutWitness:
    """A vertex or edge cut together with two vertex sets it separates."""

    kind: str  # "vertex-cut" or "edge-cut"
    members: tuple
    side_a: int
    side_b: int

    def to_json(self) -> dict:
        if self.kind == "edge-cut":
            cut = [list(e) for e in self.members]
        else:
            cut = list(self.members)
        return {"kind": self.kind, "members": cut, "sideA": members(self.side_a), "sideB": members(self.side_b)}

    def is_valid(self, g: Graph) -> bool:
        if not self.side_a or not self.side_b or self.side_a & self.side_b:
            return False
        if self.kind == "vertex-cut":
            rest = g.vertices & ~vset(self.members)
            if (self.side_a | self.side_b) & ~rest:
                return False
            return all(not (comp & self.side_a and comp & self.side_b) for comp in components(g, rest))
        cut = {(min(u, v), max(u, v)) for u, v in self.members}
        h = Graph.from_edges(g.n, (e for e in g.edges() if e not in cut))
        return all(not (comp & self.side_a and comp & self.side_b) for comp in components(h))


class _FlowNetwork:
    """Residual network with integer capacities; augmenting paths by BFS."""

    def __init__(self, size: int):
        self.cap: list[dict[int, int]] = [dict() for _ in range(size)]

    def add(self, a: int, b: int, c: int) -> None:
        self.cap[a][b] = self.cap[a].get(b, 0) + c
        self.cap[b].setdefault(a, 0)

    def max_flow(self, source: int, sink: int, cutoff: int = _INF) -> int:
        flow = 0
        while flow < cutoff:
            parent = {source: source}
            queue = deque([source])
            while queue and sink not in parent:
                a = queue.popleft()
                for b, c in self.cap[a].items():
                    if c > 0 and b not in parent:
                        parent[b] = a
                        queue.append(b)
            if sink not in parent:
                break
            b = sink
            while b != source:
                a = parent[b]
                self.cap[a][b] -= 1
                self.cap[b][a] += 1
                b = a
            flow += 1
        return flow

    def reachable(self, source: int) -> set[int]:
        seen = {source}
        queue = deque([source])
        while queue:
            a = queue.popleft()
            for b, c in self.cap[a].items():
                if c > 0 and b not in seen:
                    seen.add(b)
                    queue.append(b)
        return seen


def _split_network(g: Graph, s: int, t: int) -> _FlowNetwork:
    # vertex v -> in-node 2v, out-node 2v+1
    net = _FlowNetwork(2 * g.n)
    for v in range(g.n):
        net.add(2 * v, 2 * v + 1, _INF if v in (s, t) else 1)
    for u, v in g.edges():
        net.add(2 * u + 1, 2 * v, _INF)
        net.add(2 * v + 1, 2 * u, _INF)
    return net


def local_vertex_connectivity(g: Graph, s: int, t: int, cutoff: int = _INF) -> int:
    """Maximum number of internally disjoint s-t paths (s, t nonadjacent), capped at ``cutoff``."""
    if g.has_edge(s, t) or s == t:
        raise PreconditionError(f"{s} and {t} must be distinct and nonadjacent")
    return _split_network(g, s, t).max_flow(2 * s + 1, 2 * t, cutoff)


def _local_cut(g: Graph, s: int, t: int) -> tuple[list[int], int]:
    net = _split_network(g, s, t)
    net.max_flow(2 * s + 1, 2 * t)
    seen = net.reachable(2 * s + 1)
    cut = [v for v in range(g.n) if 2 * v in seen and 2 * v + 1 not in seen]
    return cut, sum(1 << (node // 2) for node in seen if node % 2) & ~vset(cut)


def _pairs_to_check(g: Graph):
    # Min-degree vertex u against every non-neighbour, then nonadjacent pairs inside N(u).
    degrees = g.degrees()
    u = min(range(g.n), key=lambda v: (degrees[v], v))
    for v in range(g.n):
        if v != u and not g.has_edge(u, v):
            yield u, v
    for x, y in combinations(g.neighbors(u), 2):
        if not g.has_edge(x, y):
            yield x, y


def vertex_connectivity(g: Graph) -> int:
    """Size of a smallest vertex cut; ``n - 1`` for complete graphs, 0 if disconnected."""
    if g.n < 1:
        raise PreconditionError("vertex connectivity needs at least one vertex")
    if g.m == g.n * (g.n - 1) // 2:
        return g.n - 1
    if len(components(g)) > 1:
        return 0
    best = min(g.degrees())
    for x, y in _pairs_to_check(g):
        best = min(best, local_vertex_connectivity(g, x, y, cutoff=best))
        if best == 0:
            break
    return best


def minimum_vertex_cut(g: Graph) -> Optional[CutWitness]:
    """A smallest vertex cut found by max-flow, or None for complete graphs."""
    if g.n < 1 or g.m == g.n * (g.n - 1) // 2:
        return None
    comps = components(g)
    if len(comps) > 1:
        return CutWitness("vertex-cut", (), comps[0], g.vertices & ~comps[0])
    best = None
    for x, y in _pairs_to_check(g):
        k = local_vertex_connectivity(g, x, y, cutoff=best[0] if best else _INF)
        if best is None or k < best[0]:
            best = (k, x, y)
    _, x, y = best
    cut, side_a = _local_cut(g, x, y)
    return CutWitness("vertex-cut", tuple(cut), side_a, g.vertices & ~side_a & ~vset(cut))


def is_k_connected(g: Graph, k: int) -> bool:
    """Exact test for ``vertex_connectivity(g) >= k`` without max-flow.

    A separator of size below ``k`` can be padded to size ``k - 1`` while
    two components survive, and the smaller of those has at most
    ``(n - k + 1) // 2`` vertices. So ``g`` fails iff some connected set of
    that size has fewer than ``k`` neighbours and misses some vertex with
    them. Cheap for the small graphs of exhaustive runs.
    """
    if k <= 0:
        return True
    n = g.n
    if n < k + 1:
        return False
    adj = g.adj
    if min(row.bit_count() for row in adj) < k:
        return False
    limit = (n - k + 1) // 2
    full = g.vertices

    def separated(sub: int, ext: int, closed: int, size: int, floor: int) -> bool:
        nbhd = closed & ~sub
        if nbhd.bit_count() < k and closed != full:
            return True
        if size == limit:
            return False
        while ext:
            low = ext & -ext
            ext ^= low
            w = adj[low.bit_length() - 1]
            if separated(sub | low, ext | (w & floor & ~closed), closed | w | low, size + 1, floor):
                return True
        return False

    for root in range(n):
        above = full & ~((2 << root) - 1)
        if separated(1 << root, adj[root] & above, adj[root] | 1 << root, 1, above):
            return False
    return True


def min_vertex_cut_bruteforce(g: Graph, k_max: int) -> Optional[CutWitness]:
    """Lexicographically least smallest vertex cut of size below ``k_max``.

    Enumerates subsets by increasing size; independent of the flow code.
    """
    if g.n > MAX_BRUTEFORCE_CUT_VERTICES:
        raise CapabilityError(f"brute-force cut search is limited to {MAX_BRUTEFORCE_CUT_VERTICES} vertices")
    for size in range(0, min(k_max, g.n - 1)):
        for cut in combinations(range(g.n), size):
            rest = g.vertices & ~vset(cut)
            comps = components(g, rest)
            if len(comps) >= 2:
                return CutWitness("vertex-cut", cut, comps[0], rest & ~comps[0])
    return None


def _edge_flow(g: Graph, s: int, t: int) -> _FlowNetwork:
    net = _FlowNetwork(g.n)
    for u, v in g.edges():
        net.add(u, v, 1)
        net.add(v, u, 1)
    net.max_flow(s, t)
    return net


def edge_connectivity(g: Graph) -> int:
    """Fewest edges whose removal disconnects ``g``; 0 if already disconnected."""
    if g.n < 2:
        raise PreconditionError("edge connectivity needs at least two vertices")
    if len(components(g)) > 1:
        return 0
    best = min(g.degrees())
    for t in range(1, g.n):
        net = _FlowNetwork(g.n)
        for u, v in g.edges():
            net.add(u, v, 1)
            net.add(v, u, 1)
        best = min(best, net.max_flow(0, t, cutoff=best))
    return best


def minimum_edge_cut(g: Graph) -> CutWitness:
    """A smallest edge cut with its two shores."""
    if g.n < 2:
        raise PreconditionError("edge cuts need at least two vertices")
    comps = components(g)
    if len(comps) > 1:
        return CutWitness("edge-cut", (), comps[0], g.vertices & ~comps[0])
    k = edge_connectivity(g)
    for t in range(1, g.n):
        net = _edge_flow(g, 0, t)
        side = vset(net.reachable(0))
        cut = tuple((u, v) for u, v in g.edges() if (side >> u & 1) != (side >> v & 1))
        if len(cut) == k:
            return CutWitness("edge-cut", cut, side, g.vertices & ~side)
    raise AssertionError("flow did not reproduce the edge connectivity")


def is_cyclically_4_edge_connected(g: Graph) -> tuple[bool, Optional[CutWitness]]:
    """3-edge-connected with no 3-edge cut leaving a cycle on both sides.

    A 3-edge removal counts as such a cut when it leaves exactly two
    components and each has at least as many edges as vertices.
    """
    if g.m > MAX_CYCLIC_CUT_EDGES:
        raise CapabilityError(f"cyclic edge-cut search is limited to {MAX_CYCLIC_CUT_EDGES} edges")
    if g.n < 2:
        return False, None
    if edge_connectivity(g) < 3:
        return False, minimum_edge_cut(g)
    edges = g.edges()
    for triple in combinations(range(len(edges)), 3):
        adj = list(g.adj)
        for k in triple:
            u, v = edges[k]
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        h = Graph._trusted(g.n, adj)
        comps = components(h)
        if len(comps) != 2:
            continue
        if all(_has_cycle(h, c) for c in comps):
            return False, CutWitness("edge-cut", tuple(edges[k] for k in triple), comps[0], comps[1])
    return True, None


def _has_cycle(g: Graph, comp: int) -> bool:
    n = comp.bit_count()
    m = sum((g.adj[v] & comp).bit_count() for v in iter_bits(comp)) // 2
    return m >= n
