"""Header construction, forwarding simulation, and the exhaustive
false-positive oracle.

An edge is recognised by a header when its label is a bit-subset of the
header. Forwarding inspects only the labels of the current vertex's incident
edges, exactly as a header-routed switch would.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graphs import Graph, Path, _bfs_path_counts, shortest_path
from .labelling import EdgeLabel, Labelling


@dataclass(frozen=True)
class Header:
    """The bit vector a message carries: the union of its path's labels."""

    bits: int
    width: int


def encode_path(labelling: Labelling, path: Path) -> Header:
    """Bitwise OR of the labels along the path (all-zero for an empty path)."""
    bits = 0
    for eid in path.edges:
        bits |= labelling.masks[eid]
    return Header(bits, labelling.width)


def recognised(label: EdgeLabel, header: Header) -> bool:
    """True iff every set bit of the label is set in the header."""
    if label.width != header.width:
        raise ValueError(f"width mismatch: label {label.width}, header {header.width}")
    return label.bits & ~header.bits == 0


@dataclass(frozen=True)
class Forward:
    edge_id: int


@dataclass(frozen=True)
class Delivered:
    pass


@dataclass(frozen=True)
class Ambiguous:
    edge_ids: tuple[int, ...]


def next_hop(
    g: Graph,
    labelling: Labelling,
    header: Header,
    current: int,
    incoming: int | None = None,
) -> Forward | Delivered | Ambiguous:
    """Decide the next edge from the header alone.

    Candidates are the recognised incident edges except the one the message
    arrived on; one candidate forwards, none terminates, several is reported
    as ambiguous (sorted by edge id).
    """
    if labelling.width != header.width:
        raise ValueError(f"width mismatch: labelling {labelling.width}, header {header.width}")
    not_header = ~header.bits
    masks = labelling.masks
    candidates = [
        eid
        for _, eid in g.adjacency[current]
        if eid != incoming and masks[eid] & not_header == 0
    ]
    if not candidates:
        return Delivered()
    if len(candidates) == 1:
        return Forward(candidates[0])
    return Ambiguous(tuple(sorted(candidates)))


@dataclass(frozen=True)
class RoutingTrace:
    """Outcome of one simulated delivery.

    candidate_counts holds the number of recognised next edges at each
    visited vertex, including the terminal one.
    """

    visited: tuple[int, ...]
    outcome: str  # "delivered" | "ambiguous" | "dead-end" | "loop"
    at: int
    hop_count: int
    candidate_counts: tuple[int, ...]

    @property
    def delivered(self) -> bool:
        return self.outcome == "delivered"


def simulate_delivery(g: Graph, labelling: Labelling, source: int, destination: int) -> RoutingTrace:
    """Encode the shortest source-destination path and forward hop by hop.

    Zero candidates at the destination means delivery; anywhere else it is a
    dead end. A hop budget of |V| turns pathological walks into a "loop"
    outcome instead of running forever.
    """
    path = shortest_path(g, source, destination)
    header = encode_path(labelling, path)
    visited = [source]
    counts: list[int] = []
    current, incoming, hops = source, None, 0
    while True:
        step = next_hop(g, labelling, header, current, incoming)
        if isinstance(step, Delivered):
            counts.append(0)
            outcome = "delivered" if current == destination else "dead-end"
            return RoutingTrace(tuple(visited), outcome, current, hops, tuple(counts))
        if isinstance(step, Ambiguous):
            counts.append(len(step.edge_ids))
            return RoutingTrace(tuple(visited), "ambiguous", current, hops, tuple(counts))
        counts.append(1)
        u, v = g.edges[step.edge_id]
        current = v if current == u else u
        incoming = step.edge_id
        visited.append(current)
        hops += 1
        if hops > g.vertex_count:
            return RoutingTrace(tuple(visited), "loop", current, hops, tuple(counts))


# ---------------------------------------------------------------------------
# exhaustive verification


@dataclass
class VerificationReport:
    """What the brute-force oracle checked and every violation it found.

    A violation is a (u, v, edge_id) triple where the edge's recognised
    status disagreed with its membership in some shortest u-v path. The
    false_positives list is capped at fp_record_cap entries; fp_truncated
    says whether more existed. path_cap_hits counts pairs whose shortest
    paths were only partially enumerated.
    """

    path_cap: int
    fp_record_cap: int
    pairs_checked: int = 0
    paths_checked: int = 0
    subset_tests: int = 0
    false_positives: list[tuple[int, int, int]] = field(default_factory=list)
    fp_truncated: bool = False
    path_cap_hits: int = 0

    @property
    def ok(self) -> bool:
        return not self.false_positives and not self.fp_truncated and self.path_cap_hits == 0

    def summary(self) -> str:
        status = "ok" if self.ok else "VIOLATIONS"
        return (
            f"{status}: pairs={self.pairs_checked} paths={self.paths_checked} "
            f"subset_tests={self.subset_tests} false_positives={len(self.false_positives)}"
            f"{' (truncated)' if self.fp_truncated else ''} path_cap_hits={self.path_cap_hits}"
        )


def _pack_mask(mask: int, words: int) -> np.ndarray:
    return np.frombuffer(mask.to_bytes(words * 8, "little"), dtype="<u8")


def _pack_labelling(labelling: Labelling, words: int) -> np.ndarray:
    packed = np.zeros((labelling.edge_count, words), dtype=np.uint64)
    for eid, mask in enumerate(labelling.masks):
        packed[eid] = _pack_mask(mask, words)
    return packed


def verify_no_false_positives(
    g: Graph,
    labelling: Labelling,
    path_cap: int = 1000,
    fp_record_cap: int = 1000,
) -> VerificationReport:
    """Check [e] subset-of [S] <=> e in S for every edge e of the graph and
    every shortest path S of every unordered vertex pair.

    Paths are enumerated from per-source BFS predecessor structure; the
    subset tests run vectorised over all edges at once. Pairs with more than
    path_cap shortest paths are reported, not an error.
    """
    report = VerificationReport(path_cap=path_cap, fp_record_cap=fp_record_cap)
    edge_count = g.edge_count
    if edge_count == 0:
        return report
    if labelling.edge_count != edge_count:
        raise ValueError("labelling does not cover this graph's edges")
    words = max(1, (labelling.width + 63) // 64)
    packed = _pack_labelling(labelling, words)
    masks = labelling.masks
    adjacency = g._adjacency_by_vertex

    def record(u: int, v: int, eid: int) -> None:
        if len(report.false_positives) < fp_record_cap:
            report.false_positives.append((u, v, eid))
        else:
            report.fp_truncated = True

    for u in range(g.vertex_count):
        dist, _ = _bfs_path_counts(g, u)
        # predecessor lists by ascending vertex id, one BFS per source
        preds: list[list[tuple[int, int]]] = [[] for _ in range(g.vertex_count)]
        for w in range(g.vertex_count):
            if dist[w] > 0:
                preds[w] = [
                    (x, eid) for x, eid in adjacency[w] if dist[x] == dist[w] - 1
                ]

        for v in range(u + 1, g.vertex_count):
            if dist[v] < 0:
                continue
            report.pairs_checked += 1
            # walk the predecessor DAG backwards from v
            stack: list[tuple[int, list[int]]] = [(v, [])]
            produced = 0
            while stack:
                vertex, edge_ids = stack.pop()
                if vertex == u:
                    produced += 1
                    if produced > path_cap:
                        report.path_cap_hits += 1
                        break
                    report.paths_checked += 1
                    report.subset_tests += edge_count
                    header = 0
                    for eid in edge_ids:
                        header |= masks[eid]
                    outside = (packed & ~_pack_mask(header, words)).any(axis=1)
                    recognised_ids = np.nonzero(~outside)[0]
                    on_path = set(edge_ids)
                    for eid in recognised_ids:
                        if int(eid) not in on_path:
                            record(u, v, int(eid))
                    for eid in on_path:
                        if outside[eid]:
                            record(u, v, eid)
                    continue
                for x, eid in preds[vertex]:
                    stack.append((x, edge_ids + [eid]))
    return report
