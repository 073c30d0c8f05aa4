"""Proximity and distance measures derived from the kernel Q_beta, the group
inverse of the Laplacian, and two independent verification oracles: exhaustive
spanning-rooted-forest enumeration and Monte-Carlo geometric random walks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, laplacian, lazy_transition

_ENUM_LIMIT = 10


def adjusted_forest_distance(q: np.ndarray, beta: float) -> np.ndarray:
    """Distance rho_ij = beta*(q_ii + q_jj - q_ij - q_ji).

    A metric for every beta > 0; converges to the resistance distance as
    beta grows. A triangle-inequality violation beyond 1e-9 indicates a
    broken kernel upstream and raises.
    """
    q = np.asarray(q, dtype=float)
    diag = np.diag(q)
    rho = beta * (diag[:, None] + diag[None, :] - q - q.T)
    np.fill_diagonal(rho, 0.0)
    _check_metric(rho, 1e-9)
    return rho


def log_forest_distance(q: np.ndarray) -> np.ndarray:
    """Distance d_ij = -ln(q_ij / sqrt(q_ii * q_jj)).

    Cutpoint additive: d_ij + d_jk = d_ik exactly when every path from i to k
    passes through j.
    """
    q = np.asarray(q, dtype=float)
    if np.any(q <= 0):
        raise ValueError("kernel has non-positive entries; graph not connected?")
    diag = np.diag(q)
    d = -np.log(q / np.sqrt(diag[:, None] * diag[None, :]))
    np.fill_diagonal(d, 0.0)
    return d


def group_inverse(l: np.ndarray) -> np.ndarray:
    """Group inverse H of the Laplacian: (L + J/N)^{-1} - J/N with J = 11^T.

    Satisfies H 1 = 0, LHL = L and HLH = H on connected graphs.
    """
    l = np.asarray(
        l.toarray() if hasattr(l, "toarray") else l, dtype=float
    )
    n = l.shape[0]
    j = np.full((n, n), 1.0 / n)
    return np.linalg.inv(l + j) - j


def resistance_distance(g: Graph) -> np.ndarray:
    """Effective resistance between all node pairs (weights = conductances)."""
    h = group_inverse(laplacian(g))
    diag = np.diag(h)
    rho = diag[:, None] + diag[None, :] - 2.0 * h
    np.fill_diagonal(rho, 0.0)
    return rho


def hub_augmented_graph(g: Graph, beta: float) -> Graph:
    """Append a hub node (index N) linked to every node with weight 1/beta.

    The adjusted forest distance on g equals the resistance distance between
    original nodes of this augmented graph.
    """
    if beta <= 0:
        raise ValueError("beta must be positive")
    hub = g.n_nodes
    edges = list(g.edges) + [(i, hub, 1.0 / beta) for i in range(g.n_nodes)]
    names = None
    if g.node_names is not None:
        names = tuple(g.node_names) + ("__hub__",)
    return Graph(n_nodes=g.n_nodes + 1, edges=tuple(edges), node_names=names)


@dataclass
class ForestCensus:
    """Total beta-weight of all spanning rooted forests and the N x N split
    by "node i lies in the tree rooted at j"."""

    total_weight: float
    rooted_weights: np.ndarray


def _acyclic_subsets(n_nodes: int, edges):
    """All acyclic edge subsets, each with its component partition.

    Yields (edge_indices, components) where components is a list of node
    lists. Backtracking with union-find; feasible up to ~10 nodes.
    """
    results = []
    m = len(edges)

    def find(parent, x):
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(idx, chosen, parent):
        if idx == m:
            comps: dict[int, list[int]] = {}
            for v in range(n_nodes):
                comps.setdefault(find(parent, v), []).append(v)
            results.append((tuple(chosen), list(comps.values())))
            return
        rec(idx + 1, chosen, parent)
        i, j, _ = edges[idx]
        ri, rj = find(parent, i), find(parent, j)
        if ri != rj:
            child = list(parent)
            child[ri] = rj
            chosen.append(idx)
            rec(idx + 1, chosen, child)
            chosen.pop()

    rec(0, [], list(range(n_nodes)))
    return results


def enumerate_rooted_forests(g: Graph, beta: float) -> ForestCensus:
    """Exhaustive spanning-rooted-forest census.

    A forest's beta-weight is the product of its edge weights, each
    multiplied by beta; each forest contributes once per rooting (one root
    per tree). The census reproduces the kernel: rooted_weights[i, j] /
    total_weight equals Q_beta[i, j].
    """
    if g.n_nodes > _ENUM_LIMIT:
        raise ValueError("forest enumeration limited to %d nodes" % _ENUM_LIMIT)
    edges = list(g.edges)
    total = 0.0
    rooted = np.zeros((g.n_nodes, g.n_nodes))
    for subset, comps in _acyclic_subsets(g.n_nodes, edges):
        w = 1.0
        for e in subset:
            w *= beta * edges[e][2]
        rootings = 1
        for comp in comps:
            rootings *= len(comp)
        total += w * rootings
        for comp in comps:
            # choices of roots in the other trees
            other = w * (rootings // len(comp))
            for i in comp:
                for j in comp:
                    rooted[i, j] += other
    return ForestCensus(total_weight=total, rooted_weights=rooted)


def monte_carlo_geometric_walk(
    g: Graph,
    tau: float,
    q: float,
    start: int,
    n_samples: int,
    rng_seed: int,
) -> np.ndarray:
    """Empirical distribution of a lazy walk stopped after a geometric number
    of steps.

    The walk uses the symmetric transition matrix I - tau*L; the step count
    is geometric with success probability q (support 0, 1, 2, ...). The
    distribution converges to row `start` of the kernel Q_beta with
    beta = tau*(1/q - 1).
    """
    if not 0 < q < 1:
        raise ValueError("q must lie strictly between 0 and 1")
    p_hat = lazy_transition(g, tau).toarray()
    cum = np.cumsum(p_hat, axis=1)
    cum[:, -1] = 1.0
    rng = np.random.default_rng(rng_seed)
    steps = rng.geometric(q, size=n_samples) - 1
    state = np.full(n_samples, start, dtype=np.int64)
    remaining = steps
    active = remaining > 0
    while active.any():
        idx = np.flatnonzero(active)
        u = rng.random(idx.size)
        rows = cum[state[idx]]
        state[idx] = (u[:, None] > rows).sum(axis=1)
        remaining = remaining - 1
        active = remaining > 0
    counts = np.bincount(state, minlength=g.n_nodes)
    return counts / n_samples


def is_cutpoint_triple(g: Graph, i: int, j: int, k: int) -> bool:
    """True when every path from i to k passes through j."""
    if j == i or j == k:
        return True
    if i == k:
        return False
    adj: list[list[int]] = [[] for _ in range(g.n_nodes)]
    for u, v, _ in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {i}
    stack = [i]
    while stack:
        v = stack.pop()
        if v == k:
            return False
        for w in adj[v]:
            if w != j and w not in seen:
                seen.add(w)
                stack.append(w)
    return True


@dataclass
class TransitionalMeasureReport:
    max_violation: float
    equality_mismatches: int
    n_triples: int

    @property
    def ok(self) -> bool:
        return self.max_violation <= 1e-12 and self.equality_mismatches == 0


def check_transitional_measure(q: np.ndarray, g: Graph) -> TransitionalMeasureReport:
    """Verify q_ij*q_jk <= q_ik*q_jj over all triples, with equality exactly
    on the triples where j separates i from k (checked exhaustively; graphs
    up to the enumeration limit)."""
    if g.n_nodes > _ENUM_LIMIT:
        raise ValueError("exhaustive triple check limited to %d nodes" % _ENUM_LIMIT)
    q = np.asarray(q, dtype=float)
    n = g.n_nodes
    lhs = q[:, :, None] * q.T[None, :, :]          # lhs[i,j,k] = q_ij * q_jk
    rhs = q[:, None, :] * np.diag(q)[None, :, None]  # rhs[i,j,k] = q_ik * q_jj
    max_violation = float((lhs - rhs).max())
    mismatches = 0
    n_triples = 0
    scale = np.abs(rhs).max()
    for i in range(n):
        for j in range(n):
            for k in range(n):
                n_triples += 1
                equal = abs(lhs[i, j, k] - rhs[i, j, k]) <= 1e-9 * scale
                if equal != is_cutpoint_triple(g, i, j, k):
                    mismatches += 1
    return TransitionalMeasureReport(max_violation, mismatches, n_triples)


def _check_metric(d: np.ndarray, tol: float) -> None:
    if np.any(d < -tol):
        raise ValueError("negative distance entry")
    if np.abs(d - d.T).max() > tol:
        raise ValueError("distance matrix not symmetric")
    # d_ik <= d_ij + d_jk for all triples
    slack = (d[:, None, :] - d[:, :, None] - d.T[None, :, :]).max()
    if slack > tol:
        raise ValueError("triangle inequality violated by %g" % slack)
