"""Classification methods expressed uniformly as "apply a kernel to Y".

The core method solves (I + beta*L) F = Y; the heat-kernel variants apply a
matrix exponential; the generalized family covers the PageRank-style methods
and collapses onto the core method when the lazy-walk weight matrix is used.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg
import scipy.sparse as sp

from .graph import Graph, laplacian, lazy_transition, normalized_laplacian, standard_transition
from .solvers import (
    SolverSpec,
    cg_solve,
    cholesky_solve,
    expm_action,
    power_iteration_solve,
    rl_operator,
)

HEAT_KINDS = ("standard", "normalized", "pagerank")

# Below this size the auto solver takes the exact dense factorization.
_DENSE_AUTO_LIMIT = 512
_DENSE_GUARD = 5000


@dataclass
class KernelSpec:
    """Tagged method configuration used by the experiment harness and CLI.

    kind: "regularized-laplacian" (param beta), "heat-standard" /
    "heat-normalized" / "heat-pagerank" (param t), or "generalized"
    (params sigma, mu, weight_choice).
    """

    kind: str
    param: float
    sigma: float = 0.0
    weight_choice: object = "adjacency"
    solver: SolverSpec = field(default_factory=SolverSpec)


def _resolve_kind(spec: SolverSpec, n: int) -> str:
    if spec.kind != "auto":
        return spec.kind
    return "dense-cholesky" if n <= _DENSE_AUTO_LIMIT else "conjugate-gradient"


def regularized_laplacian_apply(
    g: Graph,
    beta: float,
    y: np.ndarray,
    solver: SolverSpec | None = None,
    return_report: bool = False,
):
    """Solve (I + beta*L) F = Y with the selected backend."""
    if beta <= 0:
        raise ValueError("beta must be positive")
    solver = solver or SolverSpec()
    kind = _resolve_kind(solver, g.n_nodes)
    if kind == "power-iteration":
        f, report = power_iteration_solve(g, beta, y, solver)
    elif kind == "conjugate-gradient":
        f, report = cg_solve(rl_operator(g, beta), y, solver)
    else:
        f = cholesky_solve(rl_operator(g, beta, dense=True), y)
        report = None
    return (f, report) if return_report else f


def heat_generator(g: Graph, kind: str) -> sp.csr_matrix:
    """Generator M of the heat kernel exp(-t*M) for the given variant."""
    if kind == "standard":
        return laplacian(g)
    if kind == "normalized":
        return normalized_laplacian(g)
    if kind == "pagerank":
        return (sp.eye(g.n_nodes, format="csr") - standard_transition(g)).tocsr()
    raise ValueError("unknown heat kernel kind %r" % kind)


def heat_kernel_apply(
    g: Graph, kind: str, t: float, y: np.ndarray, tol: float = 1e-10
) -> np.ndarray:
    """F = exp(-t*M) Y for the chosen Laplacian-type generator M."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    y = np.asarray(y, dtype=float)
    if t == 0:
        return y.copy()
    return expm_action(heat_generator(g, kind), t, y, tol=tol)


def generalized_ssl_apply(
    g: Graph,
    sigma: float,
    mu: float,
    weight_choice,
    y: np.ndarray,
) -> np.ndarray:
    """Generalized smoothing family with degree exponent sigma.

    weight_choice is "adjacency" (W = A, generalized degrees = graph degrees)
    or ("lazy", tau) for W = I - tau*L, whose generalized degree matrix is the
    identity; with the lazy choice the result is independent of sigma and
    equals the core method at beta = 2*tau/mu. The system is generally
    nonsymmetric and is solved densely.
    """
    if mu <= 0:
        raise ValueError("mu must be positive")
    y = np.asarray(y, dtype=float)
    n = g.n_nodes
    if weight_choice == "adjacency":
        w = g.adjacency().toarray()
        dprime = g.degrees()
    else:
        tag, tau = weight_choice
        if tag != "lazy":
            raise ValueError("weight_choice must be 'adjacency' or ('lazy', tau)")
        w = lazy_transition(g, tau).toarray()
        dprime = np.ones(n)
    scale = 2.0 / (2.0 + mu)
    core = dprime ** (-sigma)
    side = dprime ** (sigma - 1.0)
    m = np.eye(n) - scale * (core[:, None] * w * side[None, :])
    return (mu / (2.0 + mu)) * np.linalg.solve(m, y)


def kernel_matrix(g: Graph, beta: float) -> np.ndarray:
    """Dense kernel Q_beta = (I + beta*L)^{-1}.

    Symmetric, entry-wise positive on connected graphs, rows summing to one.
    Guarded to desk scale; classification never needs the full matrix.
    """
    if beta <= 0:
        raise ValueError("beta must be positive")
    if g.n_nodes > _DENSE_GUARD:
        raise ValueError("kernel_matrix limited to %d nodes" % _DENSE_GUARD)
    op = rl_operator(g, beta, dense=True)
    factor = scipy.linalg.cho_factor(op)
    return scipy.linalg.cho_solve(factor, np.eye(g.n_nodes))


def apply_kernel_spec(g: Graph, spec: KernelSpec, y: np.ndarray) -> np.ndarray:
    """Dispatch a KernelSpec to the matching method."""
    if spec.kind == "regularized-laplacian":
        return regularized_laplacian_apply(g, spec.param, y, spec.solver)
    if spec.kind.startswith("heat-"):
        return heat_kernel_apply(g, spec.kind[len("heat-"):], spec.param, y)
    if spec.kind == "generalized":
        return generalized_ssl_apply(g, spec.sigma, spec.param, spec.weight_choice, y)
    raise ValueError("unknown kernel kind %r" % spec.kind)
