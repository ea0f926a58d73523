"""Minor containment by explicit branch sets.

A model of a pattern ``H`` in a host ``G`` assigns each pattern vertex a
connected, nonempty set of host vertices (its branch set); the sets are
pairwise disjoint and every pattern edge is realised by at least one host
edge between the corresponding branch sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .errors import CapabilityError, ClaimViolation, PreconditionError
from .families import complete, complete_bipartite
from .graph import Graph, components, induced_subgraph, is_connected, is_connected_set, iter_bits, lowest, members
from .graph6 import emit_graph6

MAX_PATTERN_VERTICES = 8
MAX_HOST_VERTICES = 18
MAX_BIPARTITE_HOST_VERTICES = 32


@dataclass(frozen=True)
class MinorModel:
    host: Graph
    pattern: Graph
    branch_sets: tuple[int, ...]

    def to_json(self) -> dict:
        return {"pattern": emit_graph6(self.pattern), "branch_sets": [members(b) for b in self.branch_sets]}


def verify_minor_model(model: MinorModel) -> list[str]:
    """Every way ``model`` fails to certify a minor; empty when it is valid."""
    host, pattern, sets = model.host, model.pattern, model.branch_sets
    if len(sets) != pattern.n:
        raise PreconditionError(f"{len(sets)} branch sets for a pattern with {pattern.n} vertices")
    problems = []
    for a, b in enumerate(sets):
        if not b:
            problems.append(f"branch set {a} is empty")
        elif b & ~host.vertices:
            problems.append(f"branch set {a} contains vertices outside the host")
        elif not is_connected_set(host, b):
            problems.append(f"branch set {a} is not connected")
    for a, b in combinations(range(len(sets)), 2):
        if sets[a] & sets[b]:
            problems.append(f"branch sets {a} and {b} share vertices {members(sets[a] & sets[b])}")
    for a, b in pattern.edges():
        if not any(host.adj[v] & sets[b] for v in iter_bits(sets[a] & host.vertices)):
            problems.append(f"pattern edge ({a}, {b}) has no host edge between its branch sets")
    return problems


def _twin_predecessors(padj: list[int]) -> list[int]:
    # Interchangeable pattern vertices may be introduced in label order only.
    k = len(padj)

    def twins(a: int, b: int) -> bool:
        return padj[a] & ~(1 << b) == padj[b] & ~(1 << a)

    classes: list[list[int]] = []
    for b in range(k):
        for cls in classes:
            if all(twins(a, b) for a in cls):
                cls.append(b)
                break
        else:
            classes.append([b])
    prev = [-1] * k
    for cls in classes:
        for a, b in zip(cls, cls[1:]):
            prev[b] = a
    return prev


def _frontier_order(g: Graph) -> list[int]:
    """Greedy vertex order keeping few processed vertices with unprocessed neighbours."""
    n = g.n
    adj = g.adj
    degrees = g.degrees()
    first = min(range(n), key=lambda v: (degrees[v], v))
    order = [first]
    done = 1 << first
    pending = [row.bit_count() for row in adj]  # unprocessed neighbours per vertex
    for u in iter_bits(adj[first]):
        pending[u] -= 1
    while len(order) < n:
        frontier = sum(1 for u in order if pending[u])
        last_link = sum(1 << u for u in order if pending[u] == 1)
        best = None
        for w in range(n):
            if done >> w & 1:
                continue
            size = frontier - (adj[w] & last_link).bit_count() + (1 if adj[w] & ~done & ~(1 << w) else 0)
            key = (size, -(adj[w] & done).bit_count(), w)
            if best is None or key < best:
                best = key
        w = best[2]
        order.append(w)
        done |= 1 << w
        for u in iter_bits(adj[w]):
            pending[u] -= 1
    return order


class _BranchSetSearch:
    """Depth-first label assignment along a fixed vertex order.

    The state after each prefix is the labelling of the frontier (processed
    vertices that still have unprocessed neighbours), how those vertices are
    grouped into partial branch-set pieces, the labels already used and the
    pattern edges already realised. States proven dead are memoised.
    """

    def __init__(self, g: Graph, padj: list[int], allow_delete: bool):
        self.g = g
        self.k = k = len(padj)
        self.allow_delete = allow_delete
        self.prev_twin = _twin_predecessors(padj)
        self.all_labels = (1 << k) - 1
        self.edge_bit = [[0] * k for _ in range(k)]
        self.incident = [0] * k
        bit = 0
        for a in range(k):
            for b in iter_bits(padj[a] >> (a + 1) << (a + 1)):
                self.edge_bit[a][b] = self.edge_bit[b][a] = 1 << bit
                self.incident[a] |= 1 << bit
                self.incident[b] |= 1 << bit
                bit += 1

        n = g.n
        self.order = order = _frontier_order(g)
        self.frontiers: list[tuple[int, ...]] = []
        done = 0
        for i in range(n + 1):
            self.frontiers.append(tuple(u for u in order[:i] if g.adj[u] & ~done))
            if i < n:
                done |= 1 << order[i]
        self.nb_idx = []
        self.keep_idx = []
        for i, v in enumerate(order):
            frontier = self.frontiers[i]
            combined = frontier + (v,)
            self.nb_idx.append([j for j, u in enumerate(frontier) if g.has_edge(u, v)])
            self.keep_idx.append([combined.index(u) for u in self.frontiers[i + 1]])
        self.dead: set = set()
        self.labels = [-1] * n

    def run(self) -> Optional[list[int]]:
        if self._dfs(0, (), (), 0, 0):
            out = [-1] * self.g.n
            for i, v in enumerate(self.order):
                out[v] = self.labels[i]
            return out
        return None

    def _candidates(self, i: int, labs: tuple, used: int) -> list[int]:
        # Labels on the frontier are open; used labels absent from it are closed.
        nb = sorted({labs[j] for j in self.nb_idx[i] if labs[j] >= 0})
        open_labels = {lab for lab in labs if lab >= 0}
        fresh = [
            lab
            for lab in range(self.k)
            if not used >> lab & 1 and (self.prev_twin[lab] < 0 or used >> self.prev_twin[lab] & 1)
        ]
        out = nb + fresh + sorted(open_labels.difference(nb))
        if self.allow_delete:
            out.append(-1)
        return out

    def _dfs(self, i: int, labs: tuple, pcs: tuple, used: int, realized: int) -> bool:
        n = self.g.n
        if i == n:
            return used == self.all_labels
        key = (i, labs, pcs, used, realized)
        if key in self.dead:
            return False
        remaining = n - i - 1
        nb_idx = self.nb_idx[i]
        keep = self.keep_idx[i]
        width = len(labs)
        for lab in self._candidates(i, labs, used):
            new_used = used | (1 << lab if lab >= 0 else 0)
            if self.k - new_used.bit_count() > remaining:
                continue
            new_real = realized
            cpcs = list(pcs)
            if lab >= 0:
                row = self.edge_bit[lab]
                merge = set()
                for j in nb_idx:
                    other = labs[j]
                    if other == lab:
                        merge.add(pcs[j])
                    elif other >= 0:
                        new_real |= row[other]
                if merge:
                    cpcs = [width if p in merge else p for p in cpcs]
                cpcs.append(width)
            else:
                cpcs.append(-1)
            clab = labs + (lab,)

            alive = {}
            for idx in keep:
                if clab[idx] >= 0:
                    alive[cpcs[idx]] = clab[idx]
            alive_labels = set(alive.values())
            ok = True
            dying = {}
            for idx, p in enumerate(cpcs):
                if p >= 0 and p not in alive:
                    dying[p] = clab[idx]
            seen_dying = set()
            for p, q in dying.items():
                if q in alive_labels or q in seen_dying:
                    ok = False
                    break
                seen_dying.add(q)
                if new_real & self.incident[q] != self.incident[q]:
                    ok = False
                    break
            if not ok:
                continue

            new_labs = tuple(clab[idx] for idx in keep)
            relabel = {}
            new_pcs = []
            for pos_, idx in enumerate(keep):
                p = cpcs[idx]
                if p < 0:
                    new_pcs.append(-1)
                else:
                    new_pcs.append(relabel.setdefault(p, pos_))
            self.labels[i] = lab
            if self._dfs(i + 1, new_labs, tuple(new_pcs), new_used, new_real):
                return True
        self.dead.add(key)
        return False


def _check_limits(host: Graph, pattern: Graph) -> None:
    if pattern.n > MAX_PATTERN_VERTICES:
        raise CapabilityError(f"patterns are limited to {MAX_PATTERN_VERTICES} vertices")
    if host.n > MAX_HOST_VERTICES:
        raise CapabilityError(f"general minor search is limited to {MAX_HOST_VERTICES} host vertices")


def find_minor(host: Graph, pattern: Graph) -> Optional[MinorModel]:
    """Search for a model of ``pattern`` in ``host``; None when it is not a minor.

    For a connected pattern, any model inside one host component can be grown
    until its branch sets partition that component, so the search only
    enumerates partitions of single components. Disconnected patterns also
    allow vertices to be left out.
    """
    _check_limits(host, pattern)
    k = pattern.n
    if k == 0:
        return MinorModel(host, pattern, ())
    if k > host.n or pattern.m > host.m:
        return None

    degrees = pattern.degrees()
    by_label = sorted(range(k), key=lambda p: (-degrees[p], p))
    label_of = {p: lab for lab, p in enumerate(by_label)}
    padj = [sum(1 << label_of[q] for q in iter_bits(pattern.adj[p])) for p in by_label]

    if is_connected(pattern):
        pieces = [c for c in components(host) if c.bit_count() >= k]
        delete = False
    else:
        pieces = [host.vertices]
        delete = True
    for piece in pieces:
        sub, mapping = induced_subgraph(host, piece)
        if sub.m < pattern.m:
            continue
        labels = _BranchSetSearch(sub, padj, delete).run()
        if labels is None:
            continue
        sets = [0] * k
        for v, lab in enumerate(labels):
            if lab >= 0:
                sets[by_label[lab]] |= 1 << mapping[v]
        model = MinorModel(host, pattern, tuple(sets))
        if verify_minor_model(model):
            raise AssertionError(f"search produced an invalid model: {verify_minor_model(model)}")
        return model
    return None


def _components_within(adj: tuple[int, ...], allowed: int) -> list[int]:
    out = []
    while allowed:
        seen = frontier = allowed & -allowed
        while frontier:
            grow = 0
            while frontier:
                low = frontier & -frontier
                grow |= adj[low.bit_length() - 1]
                frontier ^= low
            frontier = grow & allowed & ~seen
            seen |= frontier
        out.append(seen)
        allowed &= ~seen
    return out


def _open_nbhd(adj: tuple[int, ...], s: int) -> int:
    out = 0
    while s:
        low = s & -s
        out |= adj[low.bit_length() - 1]
        s ^= low
    return out


def _connected_dominating(adj: tuple[int, ...], root: int, allowed: int, targets: int) -> Iterator[int]:
    """Connected sets with minimum ``root`` inside ``allowed`` adjacent to every target.

    Sets are grown without repetition and not extended once they reach all
    targets, so every inclusion-minimal such set is produced.
    """
    above = allowed & ~((2 << root) - 1)

    def grow(sub: int, ext: int, closed_nbhd: int) -> Iterator[int]:
        if closed_nbhd & targets == targets:
            yield sub
            return
        while ext:
            low = ext & -ext
            ext ^= low
            w = adj[low.bit_length() - 1]
            yield from grow(sub | low, ext | (w & above & ~closed_nbhd), closed_nbhd | w | low)

    start = 1 << root
    yield from grow(start, adj[root] & above, adj[root] | start)


def _disjoint_dominating(adj: tuple[int, ...], targets: int, count: int, allowed: int, min_root: int) -> Optional[list[int]]:
    """``count`` disjoint connected subsets of ``allowed``, each adjacent to all targets.

    Only components adjacent to every target can hold a set, and sets can be
    grown until they partition the components holding them. So the set with
    the smallest minimum may be taken to contain the least vertex of its
    component, and only component minima need to be tried as roots.
    """
    comps = [c for c in _components_within(adj, allowed) if _open_nbhd(adj, c) & targets == targets]
    if len(comps) >= count:
        return comps[:count]
    if count == 1 or not comps:
        return None
    region = 0
    for c in comps:
        region |= c
    for root in sorted(lowest(c) for c in comps):
        if root < min_root:
            continue
        for first in _connected_dominating(adj, root, region, targets):
            rest = _disjoint_dominating(adj, targets, count - 1, region & ~first, root + 1)
            if rest is not None:
                return [first] + rest
    return None


def _complete_bipartite_sets(host: Graph, s: int, t: int) -> Optional[list[int]]:
    adj = host.adj
    degrees = host.degrees()
    candidates = sorted((v for v in range(host.n) if degrees[v] >= s), key=lambda v: (-degrees[v], v))
    full = host.vertices
    for singles in combinations(candidates, t):
        chosen = 0
        for x in singles:
            chosen |= 1 << x
        rest = full & ~chosen
        if any((adj[x] & rest).bit_count() < s for x in singles):
            continue
        bigs = _disjoint_dominating(adj, chosen, s, rest, 0)
        if bigs is not None:
            return bigs + [1 << x for x in singles]
    return None


def has_complete_bipartite_minor(host: Graph, s: int, t: int) -> bool:
    """Existence-only form of :func:`find_complete_bipartite_minor`."""
    if s + t > host.n:
        return False
    return _complete_bipartite_sets(host, s, t) is not None


def find_complete_bipartite_minor(host: Graph, s: int, t: int) -> Optional[MinorModel]:
    """Search for ``K_{s,t}`` (s in {2, 3}) with single-vertex branch sets on the t side.

    Singletons are chosen first, highest degree first; then ``s`` disjoint
    connected sets, each adjacent to every singleton, are sought among the
    remaining vertices. The returned model uses the labeling of
    ``complete_bipartite(s, t)``.
    """
    if s not in (2, 3):
        raise PreconditionError(f"only s in {{2, 3}} is supported, got {s}")
    if t < s:
        raise PreconditionError(f"expected t >= s, got s={s}, t={t}")
    if host.n > MAX_BIPARTITE_HOST_VERTICES:
        raise CapabilityError(f"bipartite minor search is limited to {MAX_BIPARTITE_HOST_VERTICES} host vertices")
    if s + t > host.n:
        return None
    sets = _complete_bipartite_sets(host, s, t)
    if sets is None:
        return None
    model = MinorModel(host, complete_bipartite(s, t), tuple(sets))
    if verify_minor_model(model):
        raise AssertionError(f"search produced an invalid model: {verify_minor_model(model)}")
    return model


def is_planar(g: Graph) -> tuple[bool, Optional[MinorModel]]:
    """Planarity by excluded minors: planar iff neither K_5 nor K_{3,3} is a minor.

    On failure the obstruction model is returned, K_5 being tried first.
    """
    if g.n > MAX_HOST_VERTICES:
        raise CapabilityError(f"planarity testing is limited to {MAX_HOST_VERTICES} vertices")
    too_dense = g.n >= 3 and g.m > 3 * g.n - 6
    for pattern in (complete(5), complete_bipartite(3, 3)):
        model = find_minor(g, pattern)
        if model is not None:
            return False, model
    if too_dense:
        raise ClaimViolation("graph exceeds the planar edge bound but has no K5 or K3,3 minor", g)
    return True, None
