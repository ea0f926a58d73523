"""Per-graph classification and constructive checks of the structural lemmas.

The characterised class is planar, 4-connected, K_{2,5}-minor-free graphs;
the claimed answer is exactly the squares of even cycles of length >= 6.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .connectivity import CutWitness, minimum_vertex_cut, vertex_connectivity
from .errors import CapabilityError, ClaimViolation, HypothesisError, NotApplicableError, PreconditionError
from .families import complete, complete_bipartite, cycle_square, is_squared_cycle, line_graph, regularity
from .graph import Graph, components, members, neighborhood, reach
from .graph6 import emit_graph6
from .minors import (
    MAX_HOST_VERTICES,
    MinorModel,
    find_complete_bipartite_minor,
    find_minor,
    is_planar,
    verify_minor_model,
)


def every_edge_in_triangle(g: Graph) -> tuple[bool, Optional[tuple[int, int]]]:
    """Whether each edge has a common neighbour; otherwise the first edge that does not."""
    for u, v in g.edges():
        if not g.adj[u] & g.adj[v]:
            return False, (u, v)
    return True, None


@dataclass
class PropertyReport:
    graph: Graph
    planar: bool
    four_connected: bool
    k25_minor_free: bool
    four_regular: bool
    every_edge_in_triangle: bool
    squared_even_cycle_ge6: Optional[int]
    vertex_connectivity: int
    planarity_obstruction: Optional[MinorModel] = None
    k25_model: Optional[MinorModel] = None
    separator: Optional[CutWitness] = None
    triangle_free_edge: Optional[tuple[int, int]] = None

    @property
    def hypotheses(self) -> bool:
        return self.planar and self.four_connected and self.k25_minor_free

    @property
    def conclusion(self) -> bool:
        return self.squared_even_cycle_ge6 is not None

    def to_json(self) -> dict:
        def model(m):
            return None if m is None else m.to_json()

        return {
            "graph6": emit_graph6(self.graph),
            "n": self.graph.n,
            "m": self.graph.m,
            "planar": self.planar,
            "four_connected": self.four_connected,
            "k25_minor_free": self.k25_minor_free,
            "four_regular": self.four_regular,
            "every_edge_in_triangle": self.every_edge_in_triangle,
            "squared_even_cycle_ge6": self.squared_even_cycle_ge6,
            "vertex_connectivity": self.vertex_connectivity,
            "witnesses": {
                "planarity_obstruction": model(self.planarity_obstruction),
                "k25_model": model(self.k25_model),
                "separator": None if self.separator is None else self.separator.to_json(),
                "triangle_free_edge": None if self.triangle_free_edge is None else list(self.triangle_free_edge),
            },
        }


def classify(g: Graph) -> PropertyReport:
    """Evaluate every predicate of the characterisation on ``g``, with witnesses."""
    if g.n > MAX_HOST_VERTICES:
        raise CapabilityError(f"classification is limited to {MAX_HOST_VERTICES} vertices")
    planar, obstruction = is_planar(g)
    kappa = vertex_connectivity(g) if g.n else 0
    separator = minimum_vertex_cut(g) if kappa < 4 else None
    k25 = find_complete_bipartite_minor(g, 2, 5)
    triangles, bad_edge = every_edge_in_triangle(g)
    sq = is_squared_cycle(g)
    return PropertyReport(
        graph=g,
        planar=planar,
        four_connected=kappa >= 4,
        k25_minor_free=k25 is None,
        four_regular=regularity(g) == 4,
        every_edge_in_triangle=triangles,
        squared_even_cycle_ge6=sq if sq is not None and sq % 2 == 0 and sq >= 6 else None,
        vertex_connectivity=kappa,
        planarity_obstruction=obstruction,
        k25_model=k25,
        separator=separator,
        triangle_free_edge=bad_edge,
    )


def _require_planar_4_connected(g: Graph) -> None:
    failed = []
    if g.n == 0 or vertex_connectivity(g) < 4:
        failed.append("not 4-connected")
    if not is_planar(g)[0]:
        failed.append("not planar")
    if failed:
        raise HypothesisError("input is " + " and ".join(failed))


def neighborhood_cut_witness(g: Graph, v: int) -> Optional[MinorModel]:
    """K_{3,|S|} model built when deleting N[v] disconnects ``g``.

    ``S`` is a minimal subset of N(v) separating two components of
    ``g - N[v]`` in ``g - v``; the three large branch sets are ``{v}`` and the
    two sides. Returns None when N[v] is not a cut set.
    """
    closed = neighborhood(g, 1 << v, closed=True)
    comps = components(g, g.vertices & ~closed)
    if len(comps) < 2:
        return None
    c1, c2 = comps[0], comps[1]
    base = g.vertices & ~(1 << v)
    sep = closed & ~(1 << v)
    for x in members(sep):
        trial = sep & ~(1 << x)
        if not reach(g, c1, base & ~trial) & c2:
            sep = trial
    rest = base & ~sep
    side1, side2 = reach(g, c1, rest), reach(g, c2, rest)
    singles = members(sep)
    pattern = complete_bipartite(3, len(singles))
    return MinorModel(g, pattern, (1 << v, side1, side2) + tuple(1 << x for x in singles))


@dataclass
class NeighborhoodCheck:
    vertex: int
    remainder_size: int
    remainder_components: int
    witness: Optional[MinorModel] = None

    @property
    def passed(self) -> bool:
        return self.remainder_components <= 1


@dataclass
class Lemma1Report:
    graph: Graph
    checks: list[NeighborhoodCheck] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "lemma": 1,
            "graph6": emit_graph6(self.graph),
            "holds": self.holds,
            # a witness would contradict planarity of the input
            "contradiction": not self.holds,
            "vertices": [
                {
                    "vertex": c.vertex,
                    "remainder_size": c.remainder_size,
                    "remainder_components": c.remainder_components,
                    "witness": None if c.witness is None else c.witness.to_json(),
                }
                for c in self.checks
            ],
        }


def lemma1_check(g: Graph) -> Lemma1Report:
    """For a planar 4-connected graph, confirm no closed neighbourhood is a cut set."""
    _require_planar_4_connected(g)
    report = Lemma1Report(g)
    for v in range(g.n):
        rest = g.vertices & ~neighborhood(g, 1 << v, closed=True)
        n_comps = len(components(g, rest))
        witness = neighborhood_cut_witness(g, v) if n_comps > 1 else None
        report.checks.append(NeighborhoodCheck(v, rest.bit_count(), n_comps, witness))
    return report


def _hypotheses(g: Graph) -> bool:
    return (
        g.n > 0
        and vertex_connectivity(g) >= 4
        and find_complete_bipartite_minor(g, 2, 5) is None
        and is_planar(g)[0]
    )


def lemma2_check(g: Graph) -> dict:
    """Planar, 4-connected and K_{2,5}-minor-free should force 4-regularity."""
    hyp = _hypotheses(g)
    regular = regularity(g) == 4
    return {"lemma": 2, "graph6": emit_graph6(g), "hypotheses": hyp, "four_regular": regular,
            "holds": not hyp or regular}


def lemma3_check(g: Graph) -> dict:
    """Planar, 4-connected and K_{2,5}-minor-free should put every edge in a triangle."""
    hyp = _hypotheses(g)
    ok, edge = every_edge_in_triangle(g)
    return {"lemma": 3, "graph6": emit_graph6(g), "hypotheses": hyp, "every_edge_in_triangle": ok,
            "triangle_free_edge": None if edge is None else list(edge), "holds": not hyp or ok}


@dataclass
class Lemma4Witness:
    cubic_graph: Graph
    edge: tuple[int, int]
    roles: dict[str, int]
    model: MinorModel

    def to_json(self) -> dict:
        return {"lemma": 4, "graph6": emit_graph6(self.cubic_graph), "applicable": True,
                "edge": list(self.edge), "roles": self.roles, "model": self.model.to_json()}


def lemma4_witness(h: Graph) -> Lemma4Witness:
    """K_{2,5} model in the line graph of a cubic 3-connected graph other than K_4.

    Picks the first edge ``uv`` lying in no triangle, names ``u``'s other
    neighbours ``x, y``, ``v``'s other neighbours ``w, z`` and ``w``'s other
    neighbours ``s, t``. In the line graph, ``{uv, vw}`` and everything
    outside N[uv, vw] are the two large branch sets and the five edges
    ``ux, uy, vz, ws, wt`` are the singletons.
    """
    if regularity(h) != 3:
        raise HypothesisError("input is not cubic")
    if h.n == 4:
        raise NotApplicableError("K_4 is excluded: its line graph is the octahedron")
    if vertex_connectivity(h) < 3:
        raise HypothesisError("input is not 3-connected")
    found = next(((u, v) for u, v in h.edges() if not h.adj[u] & h.adj[v]), None)
    if found is None:
        raise ClaimViolation("cubic 3-connected graph other than K_4 has every edge in a triangle", h)
    u, v = found
    x, y = members(h.adj[u] & ~(1 << v))
    w, z = members(h.adj[v] & ~(1 << u))
    s, t = members(h.adj[w] & ~(1 << v))
    lg, edges = line_graph(h)
    index = {e: k for k, e in enumerate(edges)}

    def e(a: int, b: int) -> int:
        return index[(min(a, b), max(a, b))]

    core = 1 << e(u, v) | 1 << e(v, w)
    singles = [e(u, x), e(u, y), e(v, z), e(w, s), e(w, t)]
    if neighborhood(lg, core) != sum(1 << k for k in singles):
        raise ClaimViolation("the five edges around uv, vw are not distinct", h)
    far = lg.vertices & ~neighborhood(lg, core, closed=True)
    model = MinorModel(lg, complete_bipartite(2, 5), (core, far) + tuple(1 << k for k in singles))
    problems = verify_minor_model(model)
    if problems:
        raise ClaimViolation("constructed K_{2,5} model is invalid: " + "; ".join(problems), h)
    roles = dict(u=u, v=v, w=w, x=x, y=y, z=z, s=s, t=t)
    return Lemma4Witness(h, (u, v), roles, model)


def odd_square_k5(n: int) -> MinorModel:
    """A K_5 model in the square of an odd cycle, found by search."""
    if n % 2 == 0 or not 5 <= n <= 15:
        raise PreconditionError(f"expected odd n in [5, 15], got {n}")
    model = find_minor(cycle_square(n), complete(5))
    if model is None:
        raise ClaimViolation(f"no K_5 minor in the square of C_{n}", cycle_square(n))
    return model
