"""Communication graph, Metropolis weights, and graph-derived constants.

Graphs are undirected, connected, simple, with 1-based agent indices.
Edge weights follow the Metropolis rule ``w_ij = 1/(2(1 + max(d_i, d_j)))``
computed from local degrees only; the induced update matrix is doubly
stochastic and its deviation from the averaging projector has spectral
radius strictly below one on connected graphs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import AssumptionError


class Topology:
    """Undirected connected graph over agents ``1..M``."""

    def __init__(self, num_agents: int, edges):
        if num_agents < 1:
            raise ValueError("need at least one agent")
        canonical = []
        seen = set()
        for a, b in edges:
            a, b = int(a), int(b)
            if a == b:
                raise ValueError(f"self-loop at agent {a}")
            if not (1 <= a <= num_agents and 1 <= b <= num_agents):
                raise ValueError(f"edge ({a},{b}) outside 1..{num_agents}")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            canonical.append(key)
        self.num_agents = num_agents
        self.edges = sorted(canonical)
        self._neighbors = {i: set() for i in range(1, num_agents + 1)}
        for a, b in self.edges:
            self._neighbors[a].add(b)
            self._neighbors[b].add(a)
        if not self._connected():
            raise AssumptionError("graph is not connected")

    def _connected(self) -> bool:
        if self.num_agents == 1:
            return True
        seen = {1}
        stack = [1]
        while stack:
            for j in self._neighbors[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == self.num_agents

    @property
    def agents(self):
        return range(1, self.num_agents + 1)

    def neighbors(self, i: int) -> set:
        return set(self._neighbors[i])

    def closed_neighbors(self, i: int) -> set:
        """Neighbor set of ``i`` including ``i`` itself."""
        return self._neighbors[i] | {i}

    def degree(self, i: int) -> int:
        return len(self._neighbors[i])

    @property
    def max_degree(self) -> int:
        return max(self.degree(i) for i in self.agents)

    def __eq__(self, other):
        return (
            isinstance(other, Topology)
            and self.num_agents == other.num_agents
            and self.edges == other.edges
        )

    # -- file format: first line M, then one "i j" edge per line, 1-based --

    def save(self, path):
        with open(path, "w") as fh:
            fh.write(f"{self.num_agents}\n")
            for a, b in self.edges:
                fh.write(f"{a} {b}\n")

    @classmethod
    def load(cls, path) -> "Topology":
        with open(path) as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
        if not lines:
            raise ValueError(f"empty graph file: {path}")
        m = int(lines[0])
        edges = []
        for ln in lines[1:]:
            a, b = ln.split()
            edges.append((int(a), int(b)))
        return cls(m, edges)


def complete_graph(m: int) -> Topology:
    return Topology(m, [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)])


def path_graph(m: int) -> Topology:
    return Topology(m, [(i, i + 1) for i in range(1, m)])


def cycle_graph(m: int) -> Topology:
    edges = [(i, i + 1) for i in range(1, m)] + [(1, m)]
    return Topology(m, edges)


def ring_with_chords(m: int, k: int) -> Topology:
    """Agents on a cycle, each linked to the ``k/2`` nearest on each side.

    ``k >= 4`` guarantees that adjacent agents share a common neighbor.
    """
    if k % 2 != 0 or k < 2:
        raise ValueError("neighbor count k must be even and >= 2")
    if k >= m:
        return complete_graph(m)
    edges = set()
    for i in range(1, m + 1):
        for d in range(1, k // 2 + 1):
            j = (i - 1 + d) % m + 1
            edges.add((min(i, j), max(i, j)))
    return Topology(m, sorted(edges))


@dataclass(frozen=True)
class WeightTable:
    """Metropolis weights of a topology plus derived spectral constants."""

    topology: Topology
    weights: dict            # (i, j) sorted pair -> Fraction
    self_weights: dict       # i -> Fraction
    matrix: np.ndarray       # dense float W
    spectral_radius: float   # rho(W - (1/M) 11^T)
    deviation_norm: float    # ||W - I||_inf

    def weight(self, i: int, j: int) -> Fraction:
        if i == j:
            return self.self_weights[i]
        return self.weights[(min(i, j), max(i, j))]


def metropolis_weights(g: Topology) -> WeightTable:
    """Edge weights ``1/(2(1 + max(d_i, d_j)))``, exact rationals."""
    weights = {}
    for a, b in g.edges:
        weights[(a, b)] = Fraction(1, 2 * (1 + max(g.degree(a), g.degree(b))))
    self_weights = {}
    for i in g.agents:
        self_weights[i] = 1 - sum(
            weights[(min(i, j), max(i, j))] for j in g.neighbors(i)
        )
    m = g.num_agents
    W = np.zeros((m, m))
    for (a, b), w in weights.items():
        W[a - 1, b - 1] = W[b - 1, a - 1] = float(w)
    for i in g.agents:
        W[i - 1, i - 1] = float(self_weights[i])
    if m == 1:
        lam = 0.0
    else:
        dev = W - np.ones((m, m)) / m
        lam = float(np.abs(np.linalg.eigvalsh(dev)).max())
    dev_norm = float(np.abs(W - np.eye(m)).sum(axis=1).max())
    return WeightTable(g, weights, self_weights, W, lam, dev_norm)


def scaled_weights(wt: WeightTable, weight_scale: Fraction) -> dict:
    """Integer weights ``w_ij / weight_scale``; exact or an error.

    Divisibility is checked in rational arithmetic, never in floats.
    """
    weight_scale = Fraction(weight_scale)
    if weight_scale <= 0:
        raise ValueError("weight scale must be positive")
    out = {}
    for edge, w in wt.weights.items():
        ratio = w / weight_scale
        if ratio.denominator != 1:
            raise ValueError(
                f"weight {w} on edge {edge} is not an integer multiple of "
                f"the weight scale {weight_scale}"
            )
        out[edge] = int(ratio)
    return out


def natural_weight_scale(wt: WeightTable) -> Fraction:
    """Largest scale that makes every Metropolis weight an exact integer."""
    denom = 1
    for w in wt.weights.values():
        denom = denom * w.denominator // math.gcd(denom, w.denominator)
    num = 0
    for w in wt.weights.values():
        num = math.gcd(num, w.numerator * (denom // w.denominator))
    return Fraction(num, denom)


def two_hop_report(g: Topology) -> dict:
    """Two-hop neighborhood of every agent (always derivable in simulation)."""
    report = {}
    for i in g.agents:
        reach = g.closed_neighbors(i)
        for j in g.neighbors(i):
            reach |= g.closed_neighbors(j)
        report[i] = reach
    return report


# alias matching the operational name used in configuration validation
validate_two_hop = two_hop_report


def validate_common_neighbor(g: Topology) -> list:
    """Edges whose endpoints share no common neighbor (empty list = OK)."""
    bad = []
    for a, b in g.edges:
        if not (g.neighbors(a) & g.neighbors(b)):
            bad.append((a, b))
    return bad


def collusion_bound(g: Topology) -> int:
    """Largest tolerated coalition: ``min over edges |N_i+ ∩ N_j+| - 2``."""
    violations = validate_common_neighbor(g)
    if violations:
        raise AssumptionError(
            f"edges without a common neighbor: {violations}; "
            "the masking procedure would leak on these edges"
        )
    h = min(
        len(g.closed_neighbors(a) & g.closed_neighbors(b)) for a, b in g.edges
    ) - 2
    assert h >= 1
    return h


def message_count_per_iteration(g: Topology) -> tuple:
    """Exact share-distribution message count per round, and its bound.

    Counts every transmitted share (an agent's share kept for itself is
    not a message); masked state contributions are the standard
    ``2|E|`` messages on top and are not included here.
    """
    exact = sum(g.degree(i) for i in g.agents)
    for i in g.agents:
        for j in g.neighbors(i):
            exact += len(g.closed_neighbors(i) & g.neighbors(j))
    e = len(g.edges)
    bound = 2 * e + 2 * g.max_degree * e
    return exact, bound
