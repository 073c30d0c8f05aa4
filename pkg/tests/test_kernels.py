import numpy as np
import pytest

from conftest import dense_inverse_kernel
from lssl.graph import Graph, laplacian, lazy_transition, max_lazy_step
from lssl.kernels import (
    KernelSpec,
    apply_kernel_spec,
    generalized_ssl_apply,
    heat_kernel_apply,
    kernel_matrix,
    regularized_laplacian_apply,
)
from lssl.solvers import SolverSpec
from lssl.verify import random_connected_graph


class TestRegularizedLaplacian:
    def test_k2_full_kernel(self, k2):
        f = regularized_laplacian_apply(k2, 1.0, np.eye(2))
        assert np.allclose(f, [[2 / 3, 1 / 3], [1 / 3, 2 / 3]], atol=1e-12)

    def test_small_beta_approaches_identity(self, triangle):
        y = np.eye(3)
        f = regularized_laplacian_apply(triangle, 1e-8, y)
        assert np.abs(f - y).max() < 1e-6

    def test_path_matches_dense_oracle(self, path3):
        y = np.array([1.0, 0.0, 0.0])
        f = regularized_laplacian_apply(path3, 1.0, y)
        assert np.allclose(f, dense_inverse_kernel(path3, 1.0)[0], atol=1e-12)

    def test_solver_backends_agree(self, lesmis):
        g, _ = lesmis
        y = np.zeros((g.n_nodes, 1))
        y[0] = 1
        fs = [
            regularized_laplacian_apply(g, 2.0, y, SolverSpec(kind=kind))
            for kind in ("conjugate-gradient", "dense-cholesky", "power-iteration")
        ]
        for f in fs[1:]:
            assert np.abs(f - fs[0]).max() < 1e-6

    def test_stationarity_condition(self):
        rng = np.random.default_rng(5)
        g = random_connected_graph(15, rng)
        y = rng.random((15, 3))
        beta = 2.5
        f = regularized_laplacian_apply(g, beta, y)
        residual = 2 * (f - y) + 2 * beta * (laplacian(g) @ f)
        assert np.abs(residual).max() < 1e-8

    def test_solution_minimizes_objective(self):
        rng = np.random.default_rng(7)
        g = random_connected_graph(10, rng)
        y = rng.random((10, 2))
        beta = 1.5
        l = laplacian(g).toarray()

        def objective(f):
            fit = ((f - y) ** 2).sum()
            smooth = sum(f[:, k] @ l @ f[:, k] for k in range(f.shape[1]))
            return fit + beta * smooth

        f_star = regularized_laplacian_apply(g, beta, y)
        base = objective(f_star)
        for _ in range(10):
            perturbed = f_star + rng.normal(scale=1e-3, size=f_star.shape)
            assert objective(perturbed) > base


class TestHeatKernels:
    def test_t_zero(self, triangle):
        y = np.eye(3)
        for kind in ("standard", "normalized", "pagerank"):
            assert np.array_equal(heat_kernel_apply(triangle, kind, 0.0, y), y)

    def test_k2_standard(self, k2):
        f = heat_kernel_apply(k2, "standard", 1.0, np.array([1.0, 0.0]), tol=1e-12)
        assert np.allclose(f, [(1 + np.exp(-2)) / 2, (1 - np.exp(-2)) / 2], atol=1e-10)

    def test_k2_pagerank_equals_standard(self, k2):
        # on K2 the walk generator I - P coincides with L
        f = heat_kernel_apply(k2, "pagerank", 1.0, np.array([1.0, 0.0]), tol=1e-12)
        assert np.allclose(f, [(1 + np.exp(-2)) / 2, (1 - np.exp(-2)) / 2], atol=1e-10)

    def test_rejects_negative_time(self, k2):
        with pytest.raises(ValueError):
            heat_kernel_apply(k2, "standard", -0.1, np.ones(2))

    def test_rejects_unknown_kind(self, k2):
        with pytest.raises(ValueError):
            heat_kernel_apply(k2, "fancy", 1.0, np.ones(2))

    def test_small_parameter_coincides_with_core_method(self):
        # both kernels are I - beta*L + O(beta^2); halving beta should
        # shrink the gap by about 4
        rng = np.random.default_rng(13)
        g = random_connected_graph(12, rng)
        y = rng.random((12, 2))

        def gap(beta):
            f_rl = regularized_laplacian_apply(g, beta, y)
            f_heat = heat_kernel_apply(g, "standard", beta, y, tol=1e-14)
            return np.abs(f_rl - f_heat).max()

        ratio = gap(1e-3) / gap(5e-4)
        assert 3 < ratio < 5

    def test_large_t_rank_one_collapse(self):
        # at very large t the heat kernel converges to a rank-one matrix,
        # so the class columns become collinear up to a constant shift and
        # carry no classification signal
        rng = np.random.default_rng(17)
        g = random_connected_graph(8, rng)
        y = np.zeros((8, 3))
        y[0, 0] = y[3, 1] = y[6, 2] = 1.0
        f = heat_kernel_apply(g, "standard", 1e3, y)
        centered = f - f.mean(axis=0, keepdims=True)
        s = np.linalg.svd(centered, compute_uv=False)
        assert s[0] < 1e-10 or s[1] / s[0] < 1e-6


class TestGeneralizedMethod:
    def test_lazy_weight_collapses_to_core_method(self, lesmis):
        g, _ = lesmis
        tau = 0.5 * max_lazy_step(g)
        mu = 1.5
        rng = np.random.default_rng(3)
        y = rng.random((g.n_nodes, 2))
        ref = regularized_laplacian_apply(g, 2 * tau / mu, y)
        for sigma in (0.0, 0.5, 1.0):
            f = generalized_ssl_apply(g, sigma, mu, ("lazy", tau), y)
            assert np.abs(f - ref).max() < 1e-10

    def test_sigma_independence_with_lazy_weight(self):
        rng = np.random.default_rng(31)
        g = random_connected_graph(20, rng)
        tau = 0.7 * max_lazy_step(g)
        y = rng.random((20, 3))
        outs = [
            generalized_ssl_apply(g, sigma, 2.0, ("lazy", tau), y)
            for sigma in (-0.5, 0.0, 0.5, 1.0, 2.0)
        ]
        for f in outs[1:]:
            assert np.abs(f - outs[0]).max() < 1e-10

    def test_huge_mu_reproduces_seeds(self, triangle):
        y = np.array([[1.0, 0.0], [0.0, 1.0], [0.0, 0.0]])
        f = generalized_ssl_apply(triangle, 0.0, 1e8, "adjacency", y)
        assert np.abs(f - y).max() < 1e-6

    def test_pagerank_variant_matches_dense_oracle(self, path3):
        mu = 0.5
        y = np.array([1.0, 0.0, 0.0])
        a = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=float)
        d = a.sum(axis=1)
        m = np.eye(3) - (2 / (2 + mu)) * a @ np.diag(1 / d)
        expected = (mu / (2 + mu)) * np.linalg.solve(m, y)
        f = generalized_ssl_apply(path3, 0.0, mu, "adjacency", y)
        assert np.allclose(f, expected, atol=1e-12)

    def test_rejects_nonpositive_mu(self, k2):
        with pytest.raises(ValueError):
            generalized_ssl_apply(k2, 0.0, 0.0, "adjacency", np.ones(2))


class TestKernelMatrix:
    def test_k2(self, k2):
        q = kernel_matrix(k2, 1.0)
        assert np.allclose(q, [[2 / 3, 1 / 3], [1 / 3, 2 / 3]], atol=1e-12)

    def test_rows_sum_to_one(self, lesmis):
        g, _ = lesmis
        q = kernel_matrix(g, 3.0)
        assert np.abs(q.sum(axis=1) - 1).max() < 1e-10

    def test_egocentrism(self, lesmis):
        g, _ = lesmis
        q = kernel_matrix(g, 1.0)
        diag = np.diag(q)
        off = q - np.diag(diag)
        assert (off < diag[:, None]).all()

    def test_symmetric_positive(self, triangle):
        q = kernel_matrix(triangle, 2.0)
        assert np.abs(q - q.T).max() < 1e-14
        assert q.min() > 0

    def test_size_guard(self):
        g = Graph(n_nodes=5001, edges=tuple((i, i + 1, 1.0) for i in range(5000)))
        with pytest.raises(ValueError, match="5000"):
            kernel_matrix(g, 1.0)

    def test_laplace_transform_identity(self):
        rng = np.random.default_rng(41)
        g = random_connected_graph(14, rng)
        for beta in (0.1, 1.0, 10.0):
            s = 1.0 / beta
            resolvent = s * np.linalg.inv(s * np.eye(14) + laplacian(g).toarray())
            assert np.abs(kernel_matrix(g, beta) - resolvent).max() < 1e-10

    def test_geometric_walk_series_identity(self):
        rng = np.random.default_rng(43)
        g = random_connected_graph(8, rng)
        tau = 0.8 * max_lazy_step(g)
        q_prob = 0.4
        beta = tau * (1 / q_prob - 1)
        p_hat = lazy_transition(g, tau).toarray()
        acc = np.zeros((8, 8))
        power = np.eye(8)
        k = 0
        while (1 - q_prob) ** k >= 1e-12:
            acc += q_prob * (1 - q_prob) ** k * power
            power = power @ p_hat
            k += 1
        assert np.abs(acc - kernel_matrix(g, beta)).max() < 1e-8


class TestKernelSpecDispatch:
    def test_dispatch_matches_direct_calls(self, triangle):
        y = np.eye(3)
        spec = KernelSpec(kind="regularized-laplacian", param=2.0)
        assert np.allclose(
            apply_kernel_spec(triangle, spec, y),
            regularized_laplacian_apply(triangle, 2.0, y),
        )
        spec = KernelSpec(kind="heat-standard", param=1.3)
        assert np.allclose(
            apply_kernel_spec(triangle, spec, y),
            heat_kernel_apply(triangle, "standard", 1.3, y),
        )
