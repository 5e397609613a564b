"""Random fixed-weight edge labels and their false-positive arithmetic.

This is the probabilistic baseline the constructive labellings are compared
against: every edge gets a uniformly random k-subset of the universe, so
subset tests can misfire with a calculable probability.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import NamedTuple

from .graphs import Graph
from .labelling import BitUniverse, Labelling


@dataclass(frozen=True)
class BloomParams:
    """Parameters of a random labelling experiment: universe size m, label
    weight k, encoded set size n (path length in edges), and the seed."""

    universe_size: int
    label_weight: int
    encoded_size: int
    seed: int

    def __post_init__(self):
        if not 1 <= self.label_weight <= self.universe_size:
            raise ValueError("label weight must satisfy 1 <= k <= universe size")
        if self.encoded_size < 1:
            raise ValueError("encoded set size must be positive")


def _draw_masks(rng: random.Random, edge_count: int, m: int, k: int) -> list[int]:
    masks = []
    for _ in range(edge_count):
        bits = 0
        for b in rng.sample(range(m), k):
            bits |= 1 << b
        masks.append(bits)
    return masks


def bloom_labelling(g: Graph, m: int, k: int, seed: int) -> Labelling:
    """Independent uniform k-subsets of {0..m-1}, one per edge in edge-id
    order; the same seed reproduces the labelling bit for bit."""
    if not 1 <= k <= m:
        raise ValueError("label weight must satisfy 1 <= k <= universe size")
    rng = random.Random(seed)
    names = tuple(f"bit {i}" for i in range(m))
    return Labelling(BitUniverse(m, names), _draw_masks(rng, g.edge_count, m, k))


def analytic_fpr(m: int, n: int, k: float) -> float:
    """The standard approximation (1 - e^(-k*n/m))^k; k may be real."""
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    if k <= 0:
        raise ValueError("label weight must be positive")
    return (1.0 - math.exp(-k * n / m)) ** k


def optimal_label_weight(m: int, n: int) -> float:
    """The weight (m/n) * ln 2 minimizing analytic_fpr for sets of size n."""
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    return m / n * math.log(2.0)


def optimal_label_weight_int(m: int, n: int) -> int:
    """optimal_label_weight rounded to the nearest usable integer (>= 1)."""
    return max(1, math.floor(optimal_label_weight(m, n) + 0.5))


def at_least_one_fp(per_edge_p: float, off_path_edges: int) -> float:
    """Probability that any of the independently-tested off-path edges is a
    false positive: 1 - (1-p)^count."""
    if not 0.0 <= per_edge_p <= 1.0:
        raise ValueError("probability must lie in [0, 1]")
    if off_path_edges < 0:
        raise ValueError("edge count must be non-negative")
    return 1.0 - (1.0 - per_edge_p) ** off_path_edges


def exact_two_label_fpr(m: int, k: int) -> float:
    """Exact probability that one uniform k-subset lies inside the union of
    two independent uniform k-subsets of {0..m-1}.

    Conditioning on the overlap j of the two on-path labels (hypergeometric)
    gives sum_j P(j) * C(2k-j, k) / C(m, k). This is what the star
    experiment converges to; analytic_fpr underestimates it noticeably for
    small m.
    """
    if not 1 <= k <= m:
        raise ValueError("label weight must satisfy 1 <= k <= universe size")
    total_labels = math.comb(m, k)
    total = 0
    for j in range(k + 1):
        overlap_ways = math.comb(k, j) * math.comb(m - k, k - j)
        union_size = 2 * k - j
        total += overlap_ways * math.comb(union_size, k)
    return total / (total_labels * total_labels)


class EmpiricalRate(NamedTuple):
    rate: float
    stderr: float


def empirical_fpr(star_n: int, m: int, k: int, trials: int, seed: int) -> EmpiricalRate:
    """Measure the off-path recognition rate on a star with star_n edges.

    Each trial draws a fresh seeded labelling (trial t uses the derived seed
    "{seed}:{t}", so results do not depend on how trials are scheduled),
    picks a random leaf-to-leaf path, and counts how many of the star_n - 2
    off-path edges the 2-edge header recognises. stderr is the pooled
    binomial standard error over trials * (star_n - 2) observations; shared
    headers correlate observations within a trial, so it is a floor.
    """
    if star_n < 3:
        raise ValueError("need star_n >= 3 for at least one off-path edge")
    if trials < 1:
        raise ValueError("trials must be positive")
    if not 1 <= k <= m:
        raise ValueError("label weight must satisfy 1 <= k <= universe size")
    hits = 0
    for t in range(trials):
        rng = random.Random(f"{seed}:{t}")
        masks = _draw_masks(rng, star_n, m, k)
        e1, e2 = rng.sample(range(star_n), 2)
        not_header = ~(masks[e1] | masks[e2])
        for gid in range(star_n):
            if gid != e1 and gid != e2 and masks[gid] & not_header == 0:
                hits += 1
    observations = trials * (star_n - 2)
    rate = hits / observations
    stderr = math.sqrt(rate * (1.0 - rate) / observations)
    return EmpiricalRate(rate, stderr)
