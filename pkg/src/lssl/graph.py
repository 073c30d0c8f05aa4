"""Undirected weighted graph representation and Laplacian-type operators.

The graph is the similarity structure every method in this package operates
on: nodes are data points, positive edge weights encode pairwise similarity.
Edges are stored once with i < j; node ids are dense in [0, n_nodes).
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp


class GraphError(ValueError):
    """Invalid graph data (bad weights, self-loops, malformed lines)."""


class DisconnectedGraphError(GraphError):
    """Input graph is not connected; carries the component sizes."""

    def __init__(self, component_sizes):
        self.component_sizes = sorted(component_sizes, reverse=True)
        super().__init__(
            "graph is disconnected; component sizes: %s" % self.component_sizes
        )


@dataclass(frozen=True)
class Graph:
    """Connected undirected weighted graph with dense node ids.

    ``edges`` holds each undirected edge exactly once as (i, j, w) with
    i < j and w > 0. ``node_names`` maps dense ids back to the labels used
    in the source file (None when nodes were already dense integers).
    """

    n_nodes: int
    edges: tuple = field(default_factory=tuple)
    node_names: tuple | None = None

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def degrees(self) -> np.ndarray:
        """Weighted degree vector d_i = sum_j a_ij."""
        d = np.zeros(self.n_nodes)
        for i, j, w in self.edges:
            d[i] += w
            d[j] += w
        return d

    def adjacency(self) -> sp.csr_matrix:
        """Symmetric weight matrix A in CSR form."""
        n = self.n_nodes
        if not self.edges:
            return sp.csr_matrix((n, n))
        ii, jj, ww = zip(*self.edges)
        rows = np.concatenate([ii, jj])
        cols = np.concatenate([jj, ii])
        vals = np.concatenate([ww, ww]).astype(float)
        return sp.csr_matrix((vals, (rows, cols)), shape=(n, n))

    def name_of(self, i: int) -> str:
        return self.node_names[i] if self.node_names is not None else str(i)


def _components(n_nodes, edges):
    """Union-find component labelling; returns list of component sizes."""
    parent = list(range(n_nodes))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j, _ in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    sizes = {}
    for v in range(n_nodes):
        r = find(v)
        sizes[r] = sizes.get(r, 0) + 1
    return list(sizes.values())


def load_edge_list(source, allow_disconnected: bool = False) -> Graph:
    """Parse a whitespace-separated "i j [w]" edge list into a Graph.

    ``source`` is a text stream or a path. '#' starts a comment, w defaults
    to 1, duplicate (i, j) lines have their weights summed. Node tokens are
    remapped to dense ids in first-appearance order; the original tokens are
    kept as node names. Self-loops, non-positive weights and (unless
    ``allow_disconnected``) disconnected inputs are rejected.
    """
    if isinstance(source, (str, bytes)) or hasattr(source, "__fspath__"):
        with open(source, "r", encoding="utf-8") as fh:
            return load_edge_list(fh, allow_disconnected=allow_disconnected)

    ids: dict[str, int] = {}
    weights: dict[tuple, float] = {}
    for lineno, raw in enumerate(source, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise GraphError("line %d: expected 'i j [w]', got %r" % (lineno, raw))
        u, v = parts[0], parts[1]
        try:
            w = float(parts[2]) if len(parts) == 3 else 1.0
        except ValueError:
            raise GraphError("line %d: bad weight %r" % (lineno, parts[2])) from None
        if w <= 0:
            raise GraphError("line %d: non-positive weight %g" % (lineno, w))
        if u == v:
            raise GraphError("line %d: self-loop at node %r" % (lineno, u))
        for tok in (u, v):
            if tok not in ids:
                ids[tok] = len(ids)
        i, j = ids[u], ids[v]
        if i == j:
            raise GraphError("line %d: self-loop at node %r" % (lineno, u))
        key = (min(i, j), max(i, j))
        weights[key] = weights.get(key, 0.0) + w

    n = len(ids)
    if n == 0:
        raise GraphError("empty edge list")
    edges = tuple(sorted((i, j, w) for (i, j), w in weights.items()))
    if not allow_disconnected:
        sizes = _components(n, edges)
        if len(sizes) > 1:
            raise DisconnectedGraphError(sizes)
    names = tuple(sorted(ids, key=ids.get))
    return Graph(n_nodes=n, edges=edges, node_names=names)


def serialize_edge_list(g: Graph) -> str:
    """Inverse of load_edge_list: load(serialize(g)) reproduces g exactly."""
    out = io.StringIO()
    for i, j, w in g.edges:
        out.write("%s %s %r\n" % (g.name_of(i), g.name_of(j), w))
    return out.getvalue()


def laplacian(g: Graph) -> sp.csr_matrix:
    """Combinatorial Laplacian L = D - A (row sums are zero)."""
    a = g.adjacency()
    return (sp.diags(g.degrees()) - a).tocsr()


def normalized_laplacian(g: Graph) -> sp.csr_matrix:
    """Symmetrically normalized Laplacian D^{-1/2} L D^{-1/2}."""
    d = g.degrees()
    if np.any(d <= 0):
        raise GraphError("isolated node: zero degree")
    dinv = sp.diags(1.0 / np.sqrt(d))
    return (dinv @ laplacian(g) @ dinv).tocsr()


def standard_transition(g: Graph) -> sp.csr_matrix:
    """Row-stochastic transition matrix P = D^{-1} A of the standard walk."""
    d = g.degrees()
    if np.any(d <= 0):
        raise GraphError("isolated node: zero degree")
    return (sp.diags(1.0 / d) @ g.adjacency()).tocsr()


def max_lazy_step(g: Graph) -> float:
    """Largest admissible step tau for the lazy transition matrix."""
    return 1.0 / g.degrees().max()


def lazy_transition(g: Graph, tau: float) -> sp.csr_matrix:
    """Symmetric transition matrix I - tau*L (lazy walk; nonzero diagonal).

    Requires tau <= 1/max_i d_i so the diagonal stays nonnegative.
    """
    if tau <= 0:
        raise GraphError("tau must be positive")
    tau_max = max_lazy_step(g)
    if tau > tau_max * (1 + 1e-12):
        raise GraphError(
            "tau=%g too large: maximal admissible tau is %g" % (tau, tau_max)
        )
    n = g.n_nodes
    return (sp.eye(n, format="csr") - tau * laplacian(g)).tocsr()
