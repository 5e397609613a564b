"""Undirected simple graphs, deterministic generators, and shortest-path machinery.

Graphs are immutable after construction and safe to share between workers.
Vertex ids are 0..vertex_count-1; edge ids are positions in the edge list.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class EdgeListParseError(ValueError):
    """A malformed edge-list file; the message names the offending line."""


class NoPathError(ValueError):
    """Two vertices that are not connected were asked for a path."""


class TooManyPathsError(RuntimeError):
    """Shortest-path enumeration exceeded the caller-supplied cap."""


@dataclass(frozen=True)
class Path:
    """A simple path: vertices in visit order plus the edge ids joining them."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)

    def validate(self, g: "Graph") -> None:
        """Check the path is simple and consistent with g's edge list."""
        if len(self.vertices) != len(self.edges) + 1:
            raise ValueError("path needs exactly one more vertex than edges")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("path revisits a vertex")
        for (a, b), eid in zip(zip(self.vertices, self.vertices[1:]), self.edges):
            if set(g.edges[eid]) != {a, b}:
                raise ValueError(f"edge {eid} does not join vertices {a} and {b}")


class Graph:
    """Simple undirected graph.

    ``edges`` holds normalized (low, high) vertex pairs; ``adjacency[v]`` lists
    (neighbor, edge_id) pairs in increasing edge-id order.
    """

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]]):
        if vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        seen: set[tuple[int, int]] = set()
        normalized: list[tuple[int, int]] = []
        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(vertex_count)]
        for eid, (u, v) in enumerate(edges):
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge {eid}: vertex out of range: ({u}, {v})")
            if u == v:
                raise ValueError(f"edge {eid}: self-loop at vertex {u}")
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise ValueError(f"edge {eid}: duplicate edge {pair}")
            seen.add(pair)
            normalized.append(pair)
            adjacency[pair[0]].append((pair[1], eid))
            adjacency[pair[1]].append((pair[0], eid))
        self.vertex_count = vertex_count
        self.edges: tuple[tuple[int, int], ...] = tuple(normalized)
        self.adjacency: tuple[tuple[tuple[int, int], ...], ...] = tuple(
            tuple(a) for a in adjacency
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def __repr__(self) -> str:
        return f"Graph(vertices={self.vertex_count}, edges={self.edge_count})"

    @cached_property
    def _adjacency_by_vertex(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        # neighbors in ascending vertex id; fixes every BFS tie-break
        return tuple(tuple(sorted(a)) for a in self.adjacency)


# ---------------------------------------------------------------------------
# generators


def make_star(n: int) -> Graph:
    """Star with n edges: center 0, leaves 1..n, edge i-1 joining 0 and i."""
    if n < 1:
        raise ValueError("a star needs at least one edge")
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def make_complete(n: int) -> Graph:
    """Complete graph on n vertices, edges in lexicographic order."""
    if n < 1:
        raise ValueError("a complete graph needs at least one vertex")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def make_core_periphery(n: int) -> tuple[Graph, frozenset[int]]:
    """Complete core on vertices 0..n-1, each core vertex carrying n-1 leaves.

    Leaves of core vertex c are n + c*(n-1) .. n + (c+1)*(n-1) - 1, so
    |V| = n*n and |E| = C(n,2) + n*(n-1). Returns (graph, core vertex set).
    """
    if n < 2:
        raise ValueError("core-periphery construction needs n >= 2")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    leaf = n
    for c in range(n):
        for _ in range(n - 1):
            edges.append((c, leaf))
            leaf += 1
    return Graph(n * n, edges), frozenset(range(n))


def make_perfect_binary_tree(h: int) -> Graph:
    """Perfect binary tree of height h, heap-numbered from the root 0.

    Children of v are 2v+1 and 2v+2; edges appear in level order.
    """
    if h < 1:
        raise ValueError("height-0 tree has no edges to label")
    vertex_count = 2 ** (h + 1) - 1
    return Graph(vertex_count, [((v - 1) // 2, v) for v in range(1, vertex_count)])


def make_random_connected(vertex_count: int, edge_probability: float, seed: int) -> Graph:
    """Seeded Erdos-Renyi graph, redrawn until connected."""
    if vertex_count < 1:
        raise ValueError("need at least one vertex")
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    for attempt in range(10_000):
        rng = random.Random(f"{seed}:{attempt}")
        edges = [
            (u, v)
            for u in range(vertex_count)
            for v in range(u + 1, vertex_count)
            if rng.random() < edge_probability
        ]
        g = Graph(vertex_count, edges)
        if is_connected(g):
            return g
    raise ValueError(
        f"no connected draw in 10000 attempts (n={vertex_count}, p={edge_probability})"
    )


# ---------------------------------------------------------------------------
# edge-list text format: first line "V E", then E lines "u v"


def load_edge_list(text: str) -> Graph:
    """Parse the plain-text edge-list format; edge id = line order."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise EdgeListParseError("line 1: expected header 'V E'")
    head = lines[0].split()
    if len(head) != 2:
        raise EdgeListParseError("line 1: expected header 'V E'")
    try:
        vertex_count, edge_count = int(head[0]), int(head[1])
    except ValueError:
        raise EdgeListParseError("line 1: header values must be integers") from None
    if vertex_count < 0 or edge_count < 0:
        raise EdgeListParseError("line 1: header values must be non-negative")
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for i in range(edge_count):
        lineno = i + 2
        if i + 1 >= len(lines):
            raise EdgeListParseError(
                f"line {lineno}: expected {edge_count} edges, file ends after {i}"
            )
        parts = lines[i + 1].split()
        if len(parts) != 2:
            raise EdgeListParseError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(f"line {lineno}: endpoints must be integers") from None
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise EdgeListParseError(f"line {lineno}: vertex out of range: {u} {v}")
        if u == v:
            raise EdgeListParseError(f"line {lineno}: self-loop: {u} {v}")
        pair = (u, v) if u < v else (v, u)
        if pair in seen:
            raise EdgeListParseError(f"line {lineno}: duplicate edge: {u} {v}")
        seen.add(pair)
        edges.append((u, v))
    for j, extra in enumerate(lines[edge_count + 1 :], start=edge_count + 2):
        if extra.strip():
            raise EdgeListParseError(f"line {j}: unexpected trailing content")
    return Graph(vertex_count, edges)


def emit_edge_list(g: Graph) -> str:
    """Serialize a graph in the format load_edge_list parses."""
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# shortest paths


def bfs_distances(g: Graph, source: int) -> list[int]:
    """BFS hop counts from source; -1 marks unreachable vertices."""
    dist = [-1] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    adjacency = g._adjacency_by_vertex
    while queue:
        cur = queue.popleft()
        d = dist[cur] + 1
        for nbr, _ in adjacency[cur]:
            if dist[nbr] < 0:
                dist[nbr] = d
                queue.append(nbr)
    return dist


def is_connected(g: Graph) -> bool:
    if g.vertex_count == 0:
        return True
    return all(d >= 0 for d in bfs_distances(g, 0))


def shortest_path(g: Graph, u: int, v: int) -> Path:
    """One shortest u-v path; ties broken by BFS expanding neighbors in
    ascending vertex id, parent = first discoverer."""
    if not (0 <= u < g.vertex_count and 0 <= v < g.vertex_count):
        raise ValueError("endpoint out of range")
    if u == v:
        return Path((u,), ())
    parent: dict[int, tuple[int, int]] = {}  # vertex -> (previous vertex, edge id)
    dist = [-1] * g.vertex_count
    dist[u] = 0
    queue = deque([u])
    adjacency = g._adjacency_by_vertex
    while queue:
        cur = queue.popleft()
        if cur == v:
            break
        for nbr, eid in adjacency[cur]:
            if dist[nbr] < 0:
                dist[nbr] = dist[cur] + 1
                parent[nbr] = (cur, eid)
                queue.append(nbr)
    if dist[v] < 0:
        raise NoPathError(f"no path from {u} to {v}")
    vertices = [v]
    edge_ids = []
    cur = v
    while cur != u:
        prev, eid = parent[cur]
        vertices.append(prev)
        edge_ids.append(eid)
        cur = prev
    vertices.reverse()
    edge_ids.reverse()
    return Path(tuple(vertices), tuple(edge_ids))


def iter_shortest_paths(g: Graph, u: int, v: int) -> Iterator[Path]:
    """All shortest u-v paths, lexicographic by vertex sequence."""
    if not (0 <= u < g.vertex_count and 0 <= v < g.vertex_count):
        raise ValueError("endpoint out of range")
    dist_u = bfs_distances(g, u)
    if dist_u[v] < 0:
        raise NoPathError(f"no path from {u} to {v}")
    if u == v:
        yield Path((u,), ())
        return
    dist_v = bfs_distances(g, v)
    total = dist_u[v]
    adjacency = g._adjacency_by_vertex
    vertices = [u]
    edge_ids: list[int] = []

    def walk(cur: int) -> Iterator[Path]:
        if cur == v:
            yield Path(tuple(vertices), tuple(edge_ids))
            return
        here = dist_u[cur]
        for nbr, eid in adjacency[cur]:
            if dist_u[nbr] == here + 1 and dist_u[nbr] + dist_v[nbr] == total:
                vertices.append(nbr)
                edge_ids.append(eid)
                yield from walk(nbr)
                vertices.pop()
                edge_ids.pop()

    yield from walk(u)


def all_shortest_paths(g: Graph, u: int, v: int, cap: int | None = None) -> list[Path]:
    """Every shortest u-v path; raises TooManyPathsError past a caller cap."""
    paths: list[Path] = []
    for path in iter_shortest_paths(g, u, v):
        paths.append(path)
        if cap is not None and len(paths) > cap:
            raise TooManyPathsError(f"more than {cap} shortest paths from {u} to {v}")
    return paths


def _bfs_path_counts(g: Graph, source: int) -> tuple[list[int], list[int]]:
    """Distances plus exact shortest-path counts from source."""
    dist = [-1] * g.vertex_count
    ways = [0] * g.vertex_count
    dist[source] = 0
    ways[source] = 1
    queue = deque([source])
    adjacency = g._adjacency_by_vertex
    while queue:
        cur = queue.popleft()
        d = dist[cur] + 1
        for nbr, _ in adjacency[cur]:
            if dist[nbr] < 0:
                dist[nbr] = d
                queue.append(nbr)
            if dist[nbr] == d:
                ways[nbr] += ways[cur]
    return dist, ways


def count_shortest_paths(g: Graph) -> int:
    """Total number of shortest paths over all unordered vertex pairs.

    Exact integer arithmetic; counts overflow 64 bits for large graphs.
    """
    total = 0
    for u in range(g.vertex_count):
        dist, ways = _bfs_path_counts(g, u)
        if u == 0 and any(d < 0 for d in dist):
            raise ValueError("graph is disconnected")
        total += sum(ways[v] for v in range(u + 1, g.vertex_count))
    return total


def ceil_log2(count: int) -> int:
    """Smallest b with 2**b >= count, for count >= 1."""
    if count < 1:
        raise ValueError("count must be positive")
    return (count - 1).bit_length()


def theoretical_smallest_size(g: Graph) -> int:
    """Bits needed to distinguish the graph's shortest paths:
    ceil(log2(count_shortest_paths(g)))."""
    return ceil_log2(count_shortest_paths(g))
