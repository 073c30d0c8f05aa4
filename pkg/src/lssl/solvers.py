"""Numerical backends: linear solvers for (I + beta*L) and matrix-exponential
action by uniformization.

All solvers are pure functions of immutable inputs; columns of the right-hand
side are independent, so callers may parallelize over classes freely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg
import scipy.sparse as sp

from .graph import Graph, laplacian

SOLVER_KINDS = ("auto", "power-iteration", "conjugate-gradient", "dense-cholesky")


@dataclass
class SolverSpec:
    kind: str = "auto"
    tolerance: float = 1e-10
    max_iterations: int = 10000

    def __post_init__(self):
        if self.kind not in SOLVER_KINDS:
            raise ValueError("unknown solver kind %r" % self.kind)
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")


@dataclass
class SolveReport:
    iterations: int
    final_residual: float
    converged: bool


def power_iteration_solve(g: Graph, beta: float, y: np.ndarray, spec: SolverSpec):
    """Fixed-point iteration for F = (I + beta*L)^{-1} Y.

    Iterates F <- beta*(I+beta*D)^{-1} A F + (I+beta*D)^{-1} Y starting from
    F = Y. The iteration matrix is substochastic with spectral radius below
    one, so the scheme converges for every beta > 0, though slowly when
    beta*d_i is large. Stops when the relative max-norm change of F drops
    below spec.tolerance; on hitting max_iterations the report comes back
    with converged=False and the last iterate is returned.
    """
    if beta <= 0:
        raise ValueError("beta must be positive")
    y = np.asarray(y, dtype=float)
    a = g.adjacency()
    d = g.degrees()
    m_scale = (beta / (1.0 + beta * d))[:, None]
    c_scale = (1.0 / (1.0 + beta * d))[:, None]
    cy = c_scale * y
    f = y.copy()
    change = np.inf
    for it in range(1, spec.max_iterations + 1):
        f_next = m_scale * (a @ f) + cy
        denom = max(np.abs(f_next).max(), np.finfo(float).tiny)
        change = np.abs(f_next - f).max() / denom
        f = f_next
        if change <= spec.tolerance:
            return f, SolveReport(it, change, True)
    return f, SolveReport(spec.max_iterations, change, False)


def cg_solve(op, y: np.ndarray, spec: SolverSpec):
    """Conjugate gradients on an SPD operator, one run per column of y.

    Stops a column when ||r|| <= tolerance * ||b||. A non-positive curvature
    direction means the operator is not SPD and raises.
    """
    y = np.asarray(y, dtype=float)
    rhs = y[:, None] if y.ndim == 1 else y
    n, k = rhs.shape
    f = np.zeros_like(rhs)
    worst_iters = 0
    worst_res = 0.0
    converged = True
    for col in range(k):
        b = rhs[:, col]
        bnorm = np.linalg.norm(b)
        if bnorm == 0.0:
            continue
        x = np.zeros(n)
        r = b.copy()
        p = r.copy()
        rr = r @ r
        it = 0
        while math.sqrt(rr) > spec.tolerance * bnorm and it < spec.max_iterations:
            ap = op @ p
            pap = p @ ap
            if pap <= 0:
                raise ValueError("CG breakdown: operator is not positive definite")
            alpha = rr / pap
            x += alpha * p
            r -= alpha * ap
            rr_new = r @ r
            p = r + (rr_new / rr) * p
            rr = rr_new
            it += 1
        rel = math.sqrt(rr) / bnorm
        worst_iters = max(worst_iters, it)
        worst_res = max(worst_res, rel)
        if rel > spec.tolerance:
            converged = False
        f[:, col] = x
    if y.ndim == 1:
        f = f[:, 0]
    return f, SolveReport(worst_iters, worst_res, converged)


def cholesky_solve(op: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Dense Cholesky factor-solve; rejects non-SPD matrices."""
    op = np.asarray(op, dtype=float)
    y = np.asarray(y, dtype=float)
    try:
        factor = scipy.linalg.cho_factor(op)
    except scipy.linalg.LinAlgError as exc:
        raise ValueError("matrix is not positive definite: %s" % exc) from None
    return scipy.linalg.cho_solve(factor, y)


def rl_operator(g: Graph, beta: float, dense: bool = False):
    """The SPD operator I + beta*L, sparse by default."""
    if beta <= 0:
        raise ValueError("beta must be positive")
    op = sp.eye(g.n_nodes, format="csr") + beta * laplacian(g)
    return op.toarray() if dense else op.tocsr()


# Largest c*t handled by a single uniformization series; larger times are
# split into substeps so the Poisson weights never underflow.
_MAX_SEGMENT = 50.0


def expm_action(m, t: float, y: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """Apply exp(-t*M) to y by uniformization.

    M must be expressible as c*(I - S) with S entry-wise nonnegative, which
    holds for every Laplacian-type generator used here (nonpositive
    off-diagonal, c taken as the maximal diagonal entry). The Poisson-weighted
    series in S is truncated once the remaining tail mass is below tol; times
    with c*t beyond a safe segment length are handled by stepping, using the
    semigroup property.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    y = np.asarray(y, dtype=float)
    if t == 0:
        return y.copy()
    m = sp.csr_matrix(m)
    c = float(m.diagonal().max())
    if c <= 0:
        return y.copy()
    n = m.shape[0]
    s = sp.eye(n, format="csr") - m / c
    if s.nnz and s.data.min() < -1e-12 * c:
        raise ValueError("generator is not of the form c*(I - S) with S >= 0")

    n_steps = max(1, math.ceil(c * t / _MAX_SEGMENT))
    ct = c * t / n_steps
    step_tol = tol / n_steps
    f = y.copy()
    for _ in range(n_steps):
        weight = math.exp(-ct)
        total = weight
        term = f
        acc = weight * f
        k = 0
        while total < 1.0 - step_tol:
            k += 1
            term = s @ term
            weight *= ct / k
            total += weight
            acc = acc + weight * term
        f = acc
    return f
