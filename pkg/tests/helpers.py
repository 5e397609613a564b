"""Shared test oracles.

Everything here is deliberately independent of the library's own algorithms:
path enumeration is plain DFS over adjacency, and the exhaustive star check
packs bits and compares subsets on its own.
"""

from __future__ import annotations

import numpy as np

from bitpath import Graph, make_random_connected


def brute_force_shortest_paths(g: Graph, u: int, v: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All shortest u-v paths by exhaustive simple-path DFS (tiny graphs only),
    sorted by vertex sequence."""
    if u == v:
        return [((u,), ())]
    found: list[tuple[tuple[int, ...], tuple[int, ...]]] = []

    def walk(cur: int, vseq: list[int], eseq: list[int]) -> None:
        if cur == v:
            found.append((tuple(vseq), tuple(eseq)))
            return
        for nbr, eid in g.adjacency[cur]:
            if nbr not in vseq:
                vseq.append(nbr)
                eseq.append(eid)
                walk(nbr, vseq, eseq)
                vseq.pop()
                eseq.pop()

    walk(u, [u], [])
    if not found:
        return []
    shortest = min(len(es) for _, es in found)
    return sorted((vs, es) for vs, es in found if len(es) == shortest)


def brute_force_total_path_count(g: Graph) -> int:
    """Sum of shortest-path counts over all unordered vertex pairs."""
    total = 0
    for u in range(g.vertex_count):
        for v in range(u + 1, g.vertex_count):
            total += len(brute_force_shortest_paths(g, u, v))
    return total


def pack_masks(masks, width: int) -> np.ndarray:
    words = max(1, (width + 63) // 64)
    packed = np.zeros((len(masks), words), dtype=np.uint64)
    for i, mask in enumerate(masks):
        for w in range(words):
            packed[i, w] = (mask >> (64 * w)) & 0xFFFFFFFFFFFFFFFF
    return packed


def star_recognition_violations(masks, width: int) -> int:
    """Exhaustive subset-test oracle for a star labelling.

    Headers of every ordered edge pair (e, f) cover every leaf-to-leaf path
    (e != f) and every center-to-leaf path (e == f). Counts the (e, f, g)
    triples where "label g is a subset of the header" disagrees with
    g in {e, f}. Zero means no false positives and no false negatives.
    """
    n = len(masks)
    packed = pack_masks(masks, width)
    words = packed.shape[1]
    headers = packed[:, None, :] | packed[None, :, :]
    not_headers = ~headers
    ids = np.arange(n)
    violations = 0
    chunk = max(1, (1 << 21) // max(1, n * n * words))
    for g0 in range(0, n, chunk):
        g1 = min(n, g0 + chunk)
        outside = (packed[g0:g1][None, None, :, :] & not_headers[:, :, None, :]).any(axis=3)
        recognised = ~outside
        expected = (ids[g0:g1][None, None, :] == ids[:, None, None]) | (
            ids[g0:g1][None, None, :] == ids[None, :, None]
        )
        violations += int((recognised != expected).sum())
    return violations


def random_graph_corpus() -> list[Graph]:
    """The 100 seeded connected graphs (8..40 vertices) used by the
    bit-per-vertex property suites."""
    graphs = []
    for seed in range(100):
        n = 8 + (seed * 7) % 33
        p = 0.10 + 0.015 * (seed % 14)
        graphs.append(make_random_connected(n, p, seed))
    return graphs
