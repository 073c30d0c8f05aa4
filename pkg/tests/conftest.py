import io

import numpy as np
import pytest

from lssl.graph import Graph, load_edge_list


@pytest.fixture
def k2():
    return Graph(n_nodes=2, edges=((0, 1, 1.0),))


@pytest.fixture
def path3():
    return load_edge_list(io.StringIO("0 1\n1 2\n"))


@pytest.fixture
def triangle():
    return load_edge_list(io.StringIO("0 1\n1 2\n0 2\n"))


@pytest.fixture(scope="session")
def lesmis():
    from lssl.experiments import bundled_lesmis

    return bundled_lesmis()


def dense_inverse_kernel(g, beta):
    """Independent dense oracle for (I + beta*L)^{-1} built from first
    principles (adjacency assembled by hand, numpy inverse)."""
    n = g.n_nodes
    a = np.zeros((n, n))
    for i, j, w in g.edges:
        a[i, j] += w
        a[j, i] += w
    l = np.diag(a.sum(axis=1)) - a
    return np.linalg.inv(np.eye(n) + beta * l)
