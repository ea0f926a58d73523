"""Named graphs, squares, line graphs and the squared-cycle embedding.

Canonical labelings produced by :func:`generate`:

* ``cycle n``: ``0..n-1`` in cyclic order.
* ``path n``: ``0..n-1`` along the path.
* ``complete n``: ``0..n-1``.
* ``complete_bipartite s t``: parts ``0..s-1`` and ``s..s+t-1``.
* ``prism``: triangles ``0,1,2`` and ``3,4,5`` with rungs ``i ~ i+3``.
* ``petersen``: outer 5-cycle ``0..4``, spokes ``i ~ i+5``, inner pentagram
  ``5+i ~ 5+(i+2) mod 5``.
* ``cube``: ``0..7`` as 3-bit strings, adjacent when they differ in one bit.
* ``octahedron``: ``K_{2,2,2}`` with antipodal pairs ``(0,1), (2,3), (4,5)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import CapabilityError, PreconditionError
from .graph import Graph, iter_bits

MAX_SQUARED_CYCLE_VERTICES = 18


def square(g: Graph) -> Graph:
    """Join every pair of vertices at distance one or two."""
    adj = []
    for v in range(g.n):
        row = g.adj[v]
        for u in iter_bits(g.adj[v]):
            row |= g.adj[u]
        adj.append(row & ~(1 << v))
    return Graph._trusted(g.n, adj)


def cycle(n: int) -> Graph:
    if n < 3:
        raise PreconditionError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise PreconditionError(f"a path needs at least 1 vertex, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> Graph:
    if n < 0:
        raise PreconditionError(f"negative vertex count {n}")
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(s: int, t: int) -> Graph:
    if s < 0 or t < 0:
        raise PreconditionError(f"part sizes must be nonnegative, got {s}, {t}")
    return Graph.from_edges(s + t, ((i, s + j) for i in range(s) for j in range(t)))


def prism() -> Graph:
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def petersen() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph.from_edges(10, edges)


def cube() -> Graph:
    return Graph.from_edges(8, ((v, v ^ (1 << b)) for v in range(8) for b in range(3) if v < v ^ (1 << b)))


def octahedron() -> Graph:
    return Graph.from_edges(6, ((i, j) for i in range(6) for j in range(i + 1, 6) if j != i + 1 or i % 2))


_FAMILIES = {
    "cycle": (cycle, 1),
    "path": (path, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "prism": (prism, 0),
    "petersen": (petersen, 0),
    "cube": (cube, 0),
    "octahedron": (octahedron, 0),
}


def generate(family: str, *params: int) -> Graph:
    """Build a named graph; see the module docstring for labelings."""
    try:
        builder, arity = _FAMILIES[family]
    except KeyError:
        raise PreconditionError(f"unknown family {family!r}") from None
    if len(params) != arity:
        raise PreconditionError(f"{family} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)


def cycle_square(n: int) -> Graph:
    """The square of the ``n``-cycle: ``i`` is adjacent to ``i±1`` and ``i±2`` mod ``n``."""
    if n < 5:
        raise PreconditionError(f"squared cycles are only built for n >= 5, got {n}")
    return Graph.from_edges(n, ((i, (i + d) % n) for i in range(n) for d in (1, 2)))


def line_graph(g: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Line graph of ``g`` and its vertex-to-edge correspondence.

    Vertex ``k`` of the result is the ``k``-th edge of ``g`` in lexicographic
    order.
    """
    edges = g.edges()
    incident = [0] * g.n
    for k, (u, v) in enumerate(edges):
        incident[u] |= 1 << k
        incident[v] |= 1 << k
    adj = [(incident[u] | incident[v]) & ~(1 << k) for k, (u, v) in enumerate(edges)]
    return Graph(len(edges), tuple(adj)), edges


def regularity(g: Graph) -> Optional[int]:
    if g.n == 0:
        return None
    degrees = set(g.degrees())
    return degrees.pop() if len(degrees) == 1 else None


def hamiltonian_square_cycle(g: Graph) -> Optional[list[int]]:
    """A Hamiltonian cycle ``H`` of ``g`` with ``square(H) == g``, or None.

    Backtracks from vertex 0, extending only along edges of ``g`` and checking
    the chord between every vertex and its second predecessor as soon as both
    are placed.
    """
    n = g.n
    if n > MAX_SQUARED_CYCLE_VERTICES:
        raise CapabilityError(f"squared-cycle recognition is limited to {MAX_SQUARED_CYCLE_VERTICES} vertices")
    if n < 3:
        return None
    if n >= 5 and regularity(g) != 4:
        return None
    adj = g.adj
    order = [0]

    def extend(used: int) -> bool:
        last = order[-1]
        if len(order) == n:
            if not adj[last] >> order[0] & 1:
                return False
            # wrap-around chords
            return bool(adj[order[-2]] >> order[0] & 1 and adj[last] >> order[1] & 1)
        for w in iter_bits(adj[last] & ~used):
            if len(order) >= 2 and not adj[order[-2]] >> w & 1:
                continue
            order.append(w)
            if extend(used | 1 << w):
                return True
            order.pop()
        return False

    if not extend(1):
        return None
    # every chord of square(order) lies in g; compare edge sets to rule out extras
    if square(Graph.from_edges(n, ((order[i], order[(i + 1) % n]) for i in range(n)))) != g:
        return None
    return order


def is_squared_cycle(g: Graph) -> Optional[int]:
    """``g.n`` if ``g`` is the square of one of its Hamiltonian cycles, else None."""
    return g.n if hamiltonian_square_cycle(g) is not None else None


@dataclass(frozen=True)
class FaceList:
    """Planar embedding certificate given as facial cycles of ``owner``."""

    owner: Graph
    faces: tuple[tuple[int, ...], ...] = field(default=())

    def violations(self) -> list[str]:
        problems = []
        count: dict[tuple[int, int], int] = {}
        for k, face in enumerate(self.faces):
            if len(face) < 3 or len(set(face)) != len(face):
                problems.append(f"face {k} is not a cycle of distinct vertices: {face}")
                continue
            for i, u in enumerate(face):
                v = face[(i + 1) % len(face)]
                if not self.owner.has_edge(u, v):
                    problems.append(f"face {k} uses non-edge ({u}, {v})")
                key = (min(u, v), max(u, v))
                count[key] = count.get(key, 0) + 1
        for e in self.owner.edges():
            if count.get(e, 0) != 2:
                problems.append(f"edge {e} lies on {count.get(e, 0)} faces, expected 2")
        euler = self.owner.n - self.owner.m + len(self.faces)
        if euler != 2:
            problems.append(f"Euler characteristic is {euler}, expected 2")
        return problems

    def is_valid(self) -> bool:
        return not self.violations()

    def to_json(self) -> list[list[int]]:
        return [list(face) for face in self.faces]


def squared_cycle_embedding(n: int) -> FaceList:
    """Facial cycles of the plane embedding of the even squared cycle.

    The even vertices bound one face and the odd vertices another, both of
    length ``n/2``; the ``n`` triangles ``{i, i+1, i+2}`` fill the annulus
    between them.
    """
    if n < 6 or n % 2:
        raise PreconditionError(f"the embedding is defined for even n >= 6, got {n}")
    faces = [tuple(range(0, n, 2)), tuple(range(1, n, 2))]
    faces += [(i, (i + 1) % n, (i + 2) % n) for i in range(n)]
    return FaceList(cycle_square(n), tuple(faces))
