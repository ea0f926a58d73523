"""Immutable simple graphs on at most 64 vertices.

Vertices are the integers ``0..n-1``. A vertex set is a plain ``int`` used
as a bit mask (bit ``v`` set means ``v`` is a member), so set algebra is a
handful of machine operations. Every operation returns a new graph; nothing
is mutated in place.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import CapabilityError, PreconditionError

MAX_VERTICES = 64
MAX_ISOMORPHISM_VERTICES = 16

VertexSet = int


def vset(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: VertexSet) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest(mask: VertexSet) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph.

    ``adj[v]`` is the bit mask of neighbours of ``v``. The constructor checks
    symmetry, the absence of loops and that no bit points past ``n``.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapabilityError(f"graphs are limited to {MAX_VERTICES} vertices, got {self.n}")
        if len(self.adj) != self.n:
            raise PreconditionError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise PreconditionError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise PreconditionError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise PreconditionError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def _trusted(cls, n: int, adj: Sequence[int]) -> "Graph":
        # Skips validation; callers guarantee the invariants.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_VERTICES:
            raise CapabilityError(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise PreconditionError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._trusted(n, adj)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls.from_edges(n, ())

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def neighborhood(g: Graph, s: VertexSet, closed: bool = False) -> VertexSet:
    """Union of the neighbourhoods of ``s``; open removes ``s`` itself, closed adds it."""
    union = 0
    for v in iter_bits(s):
        union |= g.adj[v]
    return union | s if closed else union & ~s


def induced_subgraph(g: Graph, keep: VertexSet) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``keep``; returns it with ``mapping[new] = old``."""
    mapping = tuple(members(keep & g.vertices))
    index = {old: new for new, old in enumerate(mapping)}
    adj = []
    for old in mapping:
        row = 0
        for u in iter_bits(g.adj[old] & keep):
            row |= 1 << index[u]
        adj.append(row)
    return Graph._trusted(len(mapping), adj), mapping


def delete_vertices(g: Graph, s: VertexSet) -> tuple[Graph, tuple[int, ...]]:
    """Remove ``s``; survivors keep their relative order.

    The second value maps each new index to its original vertex.
    """
    return induced_subgraph(g, g.vertices & ~s)


def contract_edge(g: Graph, u: int, v: int) -> tuple[Graph, tuple[int, ...]]:
    """Contract ``uv`` into the lower endpoint, dropping loops and parallel edges.

    Returns the contracted graph and ``mapping[old] = new`` for all ``n`` old
    vertices (both endpoints map to the merged vertex).
    """
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise PreconditionError(f"({u}, {v}) is not an edge")
    keep, gone = min(u, v), max(u, v)
    mapping = tuple(keep if w == gone else (w - 1 if w > gone else w) for w in range(g.n))
    edges = set()
    for a, b in g.edges():
        x, y = mapping[a], mapping[b]
        if x != y:
            edges.add((min(x, y), max(x, y)))
    return Graph.from_edges(g.n - 1, sorted(edges)), mapping


def reach(g: Graph, start: VertexSet, within: VertexSet) -> VertexSet:
    """Vertices of ``within`` reachable from ``start`` inside ``within``."""
    seen = start & within
    frontier = seen
    while frontier:
        grow = 0
        for v in iter_bits(frontier):
            grow |= g.adj[v]
        frontier = grow & within & ~seen
        seen |= frontier
    return seen


def is_connected_set(g: Graph, s: VertexSet) -> bool:
    """True when ``s`` is nonempty and induces a connected subgraph."""
    if not s:
        return False
    return reach(g, s & -s, s) == s


def components(g: Graph, within: Optional[VertexSet] = None) -> list[VertexSet]:
    """Connected components ordered by their smallest vertex."""
    rest = g.vertices if within is None else within & g.vertices
    out = []
    while rest:
        comp = reach(g, rest & -rest, rest)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return g.n == 0 or len(components(g)) == 1


def _refine(graphs: Sequence[Graph]) -> list[list[int]]:
    """Colour refinement run jointly so colours are comparable across graphs."""
    colors = [[row.bit_count() for row in g.adj] for g in graphs]
    n_classes = len({c for cs in colors for c in cs})
    while True:
        sigs = [
            [(cs[v], tuple(sorted(cs[u] for u in iter_bits(g.adj[v])))) for v in range(g.n)]
            for g, cs in zip(graphs, colors)
        ]
        palette = {sig: i for i, sig in enumerate(sorted({s for ss in sigs for s in ss}))}
        colors = [[palette[s] for s in ss] for ss in sigs]
        if len(palette) == n_classes:
            return colors
        n_classes = len(palette)


def is_isomorphic(g: Graph, h: Graph) -> Optional[tuple[int, ...]]:
    """Return an isomorphism ``f`` (``f[v]`` is the image of ``v``) or None.

    Candidates are restricted by colour refinement and tried in increasing
    order, so the result is the lexicographically least isomorphism.
    """
    if g.n > MAX_ISOMORPHISM_VERTICES or h.n > MAX_ISOMORPHISM_VERTICES:
        raise CapabilityError(f"isomorphism search is limited to {MAX_ISOMORPHISM_VERTICES} vertices")
    if g.n != h.n or g.m != h.m:
        return None
    cg, ch = _refine([g, h])
    if sorted(cg) != sorted(ch):
        return None
    n = g.n
    image = [-1] * n
    used = 0

    def extend(v: int) -> bool:
        nonlocal used
        if v == n:
            return True
        for w in range(n):
            if used >> w & 1 or ch[w] != cg[v]:
                continue
            ok = True
            for u in range(v):
                if g.has_edge(u, v) != h.has_edge(image[u], w):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used |= 1 << w
            if extend(v + 1):
                return True
            used &= ~(1 << w)
        image[v] = -1
        return False

    return tuple(image) if extend(0) else None


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))
