"""Exhaustive and stream-driven verification of the characterisation.

Internal mode walks every labeled graph on ``n <= n_max`` vertices with
minimum degree at least 4 (graphs below that degree are neither 4-connected
nor 4-regular, so both sides of the biconditional are false for them).
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Union

from .connectivity import is_k_connected
from .errors import CapabilityError, Graph6Error, IngestError
from .families import complete, is_squared_cycle
from .graph import Graph
from .graph6 import emit_graph6, parse_graph6
from .minors import MAX_HOST_VERTICES, find_minor, has_complete_bipartite_minor
from .theorem import PropertyReport, classify

log = logging.getLogger(__name__)

MAX_ENUMERATION_VERTICES = 8
PREFIX_BITS = 16


def edge_order(n: int) -> list[tuple[int, int]]:
    """Edge for each mask bit: bit ``i`` is the ``i``-th pair in graph6 column order."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def _masks(n: int, min_degree: int, prefix_bits: int = 0, prefix: int = 0, floor: int = 0) -> Iterator[int]:
    """Edge masks with every degree >= ``min_degree``, ascending.

    Bits are decided from the most significant down, ``0`` before ``1``; a
    branch is cut as soon as some vertex can no longer reach the degree
    bound. The top ``prefix_bits`` bits are forced to ``prefix``. With
    ``floor > 0`` the walk stops early and yields partial masks whose bits
    below ``floor`` are all zero.
    """
    edges = edge_order(n)
    total = len(edges)
    # touch[v][i]: edges with index < i incident to v
    touch = [[0] * (total + 1) for _ in range(n)]
    for i, (a, b) in enumerate(edges):
        for v in range(n):
            touch[v][i + 1] = touch[v][i] + (v == a or v == b)
    deg = [0] * n
    forced_from = total - prefix_bits

    def walk(i: int, mask: int) -> Iterator[int]:
        if i < floor:
            yield mask
            return
        a, b = edges[i]
        if i >= forced_from:
            options = (prefix >> (i - forced_from) & 1,)
        else:
            options = (0, 1)
        for bit in options:
            if bit:
                deg[a] += 1
                deg[b] += 1
                yield from walk(i - 1, mask | 1 << i)
                deg[a] -= 1
                deg[b] -= 1
            elif deg[a] + touch[a][i] >= min_degree and deg[b] + touch[b][i] >= min_degree:
                yield from walk(i - 1, mask)

    if min_degree > n - 1 and n > 0:
        return
    yield from walk(total - 1, 0)


def _graph_from_mask(n: int, edges: list[tuple[int, int]], mask: int) -> Graph:
    adj = [0] * n
    i = 0
    while mask:
        if mask & 1:
            a, b = edges[i]
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        mask >>= 1
        i += 1
    return Graph._trusted(n, adj)


def enumerate_graphs(n: int, min_degree: int = 0) -> Iterator[Graph]:
    """All labeled graphs on ``n`` vertices with minimum degree >= ``min_degree``.

    Produced in increasing order of the edge mask defined by :func:`edge_order`.
    """
    if n > MAX_ENUMERATION_VERTICES:
        raise CapabilityError(
            f"exhaustive enumeration is limited to {MAX_ENUMERATION_VERTICES} vertices; "
            "feed larger graphs as a graph6 stream instead"
        )
    edges = edge_order(n)
    for mask in _masks(n, min_degree):
        yield _graph_from_mask(n, edges, mask)


def hypotheses_hold(g: Graph) -> bool:
    """Planar, 4-connected and K_{2,5}-minor-free, cheapest test first.

    Planarity is decided by the same excluded minors as ``is_planar`` but
    with K_{3,3} through the singleton-side search, which is far quicker on
    the dense nonplanar graphs that dominate exhaustive runs.
    """
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    if not is_k_connected(g, 4):
        return False
    if has_complete_bipartite_minor(g, 2, 5) or has_complete_bipartite_minor(g, 3, 3):
        return False
    return find_minor(g, complete(5)) is None


def evaluate(g: Graph) -> tuple[bool, bool]:
    """(hypotheses, conclusion) for one graph."""
    sq = is_squared_cycle(g)
    return hypotheses_hold(g), sq is not None and sq % 2 == 0 and sq >= 6


@dataclass
class VerificationReport:
    n_range: tuple[int, int]
    graphs_examined: int = 0
    graphs_passing_hypotheses: int = 0
    counterexamples: list[tuple[str, PropertyReport]] = field(default_factory=list)
    elapsed: float = 0.0
    passing_by_n: dict[int, int] = field(default_factory=dict)
    passing: list[str] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return not self.counterexamples

    def merge(self, other: "VerificationReport") -> None:
        self.graphs_examined += other.graphs_examined
        self.graphs_passing_hypotheses += other.graphs_passing_hypotheses
        self.counterexamples.extend(other.counterexamples)
        for n, c in other.passing_by_n.items():
            self.passing_by_n[n] = self.passing_by_n.get(n, 0) + c
        self.passing.extend(other.passing)

    def record(self, g: Graph, keep_passing: bool) -> None:
        self.graphs_examined += 1
        hyp, concl = evaluate(g)
        if hyp:
            self.graphs_passing_hypotheses += 1
            self.passing_by_n[g.n] = self.passing_by_n.get(g.n, 0) + 1
            if keep_passing:
                self.passing.append(emit_graph6(g))
        if hyp != concl:
            g6 = emit_graph6(g)
            log.warning("counterexample %s (hypotheses=%s, squared even cycle=%s)", g6, hyp, concl)
            self.counterexamples.append((g6, classify(g)))

    def to_json(self) -> dict:
        out = {
            "n_range": list(self.n_range),
            "graphs_examined": self.graphs_examined,
            "graphs_passing_hypotheses": self.graphs_passing_hypotheses,
            "passing_by_n": {str(n): c for n, c in sorted(self.passing_by_n.items())},
            "counterexamples": [{"graph6": g6, "report": rep.to_json()} for g6, rep in self.counterexamples],
            "verified": self.verified,
            "elapsed": round(self.elapsed, 3),
        }
        if self.passing:
            out["passing"] = list(self.passing)
        return out


def _prefixes(n: int) -> tuple[int, list[int]]:
    total = n * (n - 1) // 2
    bits = min(PREFIX_BITS, total)
    return bits, [mask >> (total - bits) for mask in _masks(n, 4, floor=total - bits)]


def _run_chunk(task: tuple[int, int, list[int], bool]) -> VerificationReport:
    n, bits, prefixes, keep_passing = task
    edges = edge_order(n)
    part = VerificationReport((n, n))
    for prefix in prefixes:
        for mask in _masks(n, 4, bits, prefix):
            part.record(_graph_from_mask(n, edges, mask), keep_passing)
    return part


def verify_main_theorem(
    n_max: Optional[int] = None,
    stream: Union[str, Iterable[str], None] = None,
    jobs: int = 1,
    keep_passing: bool = False,
) -> VerificationReport:
    """Check hypotheses <=> conclusion on every enumerated or streamed graph.

    Exactly one of ``n_max`` (internal enumeration) or ``stream`` (a path or
    an iterable of graph6 lines) must be given.
    """
    if (n_max is None) == (stream is None):
        raise ValueError("give exactly one of n_max or stream")
    start = time.perf_counter()
    if n_max is not None:
        if n_max > MAX_ENUMERATION_VERTICES:
            raise CapabilityError(
                f"internal enumeration is limited to n <= {MAX_ENUMERATION_VERTICES}; use a graph6 stream"
            )
        report = VerificationReport((1, n_max))
        if jobs <= 1:
            for n in range(1, n_max + 1):
                report.merge(_run_chunk((n, 0, [0], keep_passing)))
        else:
            tasks = []
            for n in range(1, n_max + 1):
                bits, prefixes = _prefixes(n)
                step = max(1, len(prefixes) // (4 * jobs))
                tasks += [(n, bits, prefixes[k : k + step], keep_passing) for k in range(0, len(prefixes), step)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for part in pool.map(_run_chunk, tasks):
                    report.merge(part)
    else:
        report = _verify_stream(stream, keep_passing)
    report.elapsed = time.perf_counter() - start
    return report


def _verify_stream(stream: Union[str, Iterable[str]], keep_passing: bool) -> VerificationReport:
    if isinstance(stream, str):
        with open(stream, encoding="ascii", errors="surrogateescape") as fh:
            return _verify_lines(fh, keep_passing)
    return _verify_lines(stream, keep_passing)


def _verify_lines(lines: Iterable[str], keep_passing: bool) -> VerificationReport:
    report = VerificationReport((0, 0))
    lo = hi = None
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            g = parse_graph6(text)
        except Graph6Error as exc:
            raise IngestError(str(exc), lineno) from exc
        if g.n > MAX_HOST_VERTICES:
            raise IngestError(f"{g.n} vertices exceeds the classification limit of {MAX_HOST_VERTICES}", lineno)
        lo = g.n if lo is None else min(lo, g.n)
        hi = g.n if hi is None else max(hi, g.n)
        report.record(g, keep_passing)
    if lo is not None:
        report.n_range = (lo, hi)
    return report
