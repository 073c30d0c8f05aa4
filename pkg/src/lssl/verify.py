"""Self-check battery behind the `lssl verify` subcommand.

Each check pits an implementation against an independent route (dense linear
algebra, combinatorial enumeration, Monte-Carlo sampling) or asserts a proved
identity of the kernel. All randomness is seeded; checks are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .graph import Graph, laplacian, lazy_transition
from .kernels import generalized_ssl_apply, kernel_matrix, regularized_laplacian_apply
from .proximity import (
    adjusted_forest_distance,
    check_transitional_measure,
    enumerate_rooted_forests,
    hub_augmented_graph,
    monte_carlo_geometric_walk,
    resistance_distance,
)
from .solvers import SolverSpec, cg_solve, cholesky_solve, expm_action, rl_operator


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str


def random_connected_graph(n: int, rng, extra_edges: int | None = None,
                           weights=(1.0,)) -> Graph:
    """Random tree plus extra random edges; always connected."""
    edges = {}
    for v in range(1, n):
        u = int(rng.integers(0, v))
        edges[(u, v)] = float(rng.choice(weights))
    if extra_edges is None:
        extra_edges = n
    for _ in range(extra_edges):
        u, v = rng.integers(0, n, size=2)
        u, v = int(u), int(v)
        if u != v:
            key = (min(u, v), max(u, v))
            edges.setdefault(key, float(rng.choice(weights)))
    return Graph(n_nodes=n, edges=tuple(sorted((i, j, w) for (i, j), w in edges.items())))


def _check(name, ok, detail):
    return CheckResult(name, bool(ok), detail)


def check_kernel_axioms(max_nodes=30, n_graphs=10, seed=7):
    rng = np.random.default_rng(seed)
    worst_row = worst_tri = 0.0
    worst_ego = -np.inf
    for _ in range(n_graphs):
        n = int(rng.integers(2, max_nodes + 1))
        g = random_connected_graph(n, rng)
        for beta in (0.1, 1.0, 10.0):
            q = kernel_matrix(g, beta)
            worst_row = max(worst_row, np.abs(q.sum(axis=1) - 1.0).max())
            diag = np.diag(q)
            # tri[i,j,k] = q_ji + q_jk - q_ik - q_jj  (must be <= 0)
            tri = q.T[:, :, None] + q[None, :, :] - q[:, None, :] - diag[None, :, None]
            worst_tri = max(worst_tri, float(tri.max()))
            off = q - np.diag(diag)
            worst_ego = max(worst_ego, float((off - diag[:, None]).max()))
    ok = worst_row < 1e-10 and worst_tri < 1e-12 and worst_ego < 0
    return _check(
        "kernel proximity axioms",
        ok,
        "row-sum dev %.2e, triangle slack %.2e" % (worst_row, worst_tri),
    )


def check_transitional(seed=11, n_graphs=5):
    rng = np.random.default_rng(seed)
    for _ in range(n_graphs):
        n = int(rng.integers(3, 9))
        g = random_connected_graph(n, rng)
        q = kernel_matrix(g, 1.0)
        rep = check_transitional_measure(q, g)
        if not rep.ok:
            return _check(
                "transitional measure",
                False,
                "violation %.2e, %d equality mismatches" % (rep.max_violation, rep.equality_mismatches),
            )
    return _check("transitional measure", True, "all triples consistent")


def check_forest_oracle(seed=13, n_graphs=8):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_graphs):
        n = int(rng.integers(2, 7))
        g = random_connected_graph(n, rng, weights=(1.0, 2.0))
        for beta in (0.5, 1.0, 2.0):
            census = enumerate_rooted_forests(g, beta)
            q = kernel_matrix(g, beta)
            worst = max(worst, np.abs(census.rooted_weights / census.total_weight - q).max())
    return _check("forest enumeration oracle", worst < 1e-12, "max dev %.2e" % worst)


def check_hub_identity(seed=17, n_graphs=10):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_graphs):
        n = int(rng.integers(2, 11))
        g = random_connected_graph(n, rng)
        beta = float(rng.uniform(0.2, 5.0))
        rho = adjusted_forest_distance(kernel_matrix(g, beta), beta)
        rho_hub = resistance_distance(hub_augmented_graph(g, beta))[:n, :n]
        worst = max(worst, np.abs(rho - rho_hub).max())
    return _check("hub-graph resistance identity", worst < 1e-9, "max dev %.2e" % worst)


def check_sigma_collapse(seed=19, n_graphs=5):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_graphs):
        n = int(rng.integers(2, 31))
        g = random_connected_graph(n, rng)
        tau = 0.5 / g.degrees().max()
        mu = float(rng.uniform(0.5, 4.0))
        y = rng.random((n, 2))
        ref = regularized_laplacian_apply(g, 2 * tau / mu, y)
        for sigma in (-0.5, 0.0, 0.5, 1.0, 2.0):
            f = generalized_ssl_apply(g, sigma, mu, ("lazy", tau), y)
            worst = max(worst, np.abs(f - ref).max())
    return _check("sigma collapse onto core method", worst < 1e-10, "max dev %.2e" % worst)


def check_cross_solver(seed=23, n_graphs=5):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_graphs):
        n = int(rng.integers(2, 51))
        g = random_connected_graph(n, rng)
        beta = float(10 ** rng.uniform(-2, 2))
        y = rng.random((n, 2))
        spec = SolverSpec(kind="conjugate-gradient")
        f_cg, _ = cg_solve(rl_operator(g, beta), y, spec)
        f_ch = cholesky_solve(rl_operator(g, beta, dense=True), y)
        f_pw = regularized_laplacian_apply(
            g, beta, y, SolverSpec(kind="power-iteration", max_iterations=200000)
        )
        worst = max(worst, np.abs(f_cg - f_ch).max(), np.abs(f_pw - f_ch).max())
    return _check("cross-solver agreement", worst < 1e-6, "max dev %.2e" % worst)


def check_expm_oracle(seed=29, n_graphs=5):
    rng = np.random.default_rng(seed)
    worst = 0.0
    tol = 1e-10
    for _ in range(n_graphs):
        n = int(rng.integers(2, 21))
        g = random_connected_graph(n, rng)
        t = float(rng.uniform(0.1, 5.0))
        y = rng.random((n, 2))
        l = laplacian(g)
        ref = scipy.linalg.expm(-t * l.toarray()) @ y
        f = expm_action(l, t, y, tol=tol)
        worst = max(worst, np.abs(f - ref).max())
    return _check("matrix exponential vs dense oracle", worst < 10 * tol, "max dev %.2e" % worst)


def check_laplace_identity(seed=31):
    rng = np.random.default_rng(seed)
    g = random_connected_graph(12, rng)
    worst = 0.0
    for beta in (0.1, 1.0, 10.0):
        s = 1.0 / beta
        q = kernel_matrix(g, beta)
        resolvent = s * np.linalg.inv(s * np.eye(g.n_nodes) + laplacian(g).toarray())
        worst = max(worst, np.abs(q - resolvent).max())
    return _check("Laplace-transform identity", worst < 1e-10, "max dev %.2e" % worst)


def check_geometric_series(seed=37):
    rng = np.random.default_rng(seed)
    g = random_connected_graph(8, rng)
    tau = 0.9 / g.degrees().max()
    worst = 0.0
    for q_prob in (0.3, 0.6):
        beta = tau * (1.0 / q_prob - 1.0)
        p_hat = lazy_transition(g, tau).toarray()
        acc = np.zeros_like(p_hat)
        power = np.eye(g.n_nodes)
        k = 0
        while (1 - q_prob) ** k >= 1e-12:
            acc += q_prob * (1 - q_prob) ** k * power
            power = power @ p_hat
            k += 1
        worst = max(worst, np.abs(acc - kernel_matrix(g, beta)).max())
    return _check("geometric-walk series identity", worst < 1e-8, "max dev %.2e" % worst)


def check_monte_carlo(seed=41):
    g = Graph(n_nodes=2, edges=((0, 1, 1.0),))
    dist = monte_carlo_geometric_walk(g, tau=0.5, q=0.5, start=0,
                                      n_samples=200000, rng_seed=seed)
    tv = 0.5 * np.abs(dist - np.array([0.75, 0.25])).sum()
    return _check("Monte-Carlo geometric walk", tv < 0.005, "TV distance %.4f" % tv)


ALL_CHECKS = (
    check_kernel_axioms,
    check_transitional,
    check_forest_oracle,
    check_hub_identity,
    check_sigma_collapse,
    check_cross_solver,
    check_expm_oracle,
    check_laplace_identity,
    check_geometric_series,
    check_monte_carlo,
)


def run_all(max_nodes: int = 30) -> list:
    results = []
    for fn in ALL_CHECKS:
        if fn is check_kernel_axioms:
            results.append(fn(max_nodes=max_nodes))
        else:
            results.append(fn())
    return results
