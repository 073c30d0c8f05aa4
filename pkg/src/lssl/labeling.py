"""Seed matrices, the argmax decision rule, seed-sampling strategies and
precision scoring."""

from __future__ import annotations

import numpy as np

from .graph import Graph


class LabelError(ValueError):
    """Invalid seed or ground-truth data."""


def load_labels(source) -> dict[str, int]:
    """Parse "node_id class_index" lines into a name -> class map.

    Rejects conflicting duplicate labellings; '#' starts a comment.
    """
    if isinstance(source, (str, bytes)) or hasattr(source, "__fspath__"):
        with open(source, "r", encoding="utf-8") as fh:
            return load_labels(fh)
    out: dict[str, int] = {}
    for lineno, raw in enumerate(source, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise LabelError("line %d: expected 'node class', got %r" % (lineno, raw))
        node, cls = parts[0], parts[1]
        try:
            k = int(cls)
        except ValueError:
            raise LabelError("line %d: bad class index %r" % (lineno, cls)) from None
        if k < 0:
            raise LabelError("line %d: negative class index" % lineno)
        if node in out and out[node] != k:
            raise LabelError(
                "line %d: node %r labelled with both class %d and %d"
                % (lineno, node, out[node], k)
            )
        out[node] = k
    if not out:
        raise LabelError("empty label file")
    return out


def resolve_labels(labels: dict[str, int], g: Graph) -> dict[int, int]:
    """Map a name -> class dict onto dense node ids of g."""
    if g.node_names is not None:
        index = {name: i for i, name in enumerate(g.node_names)}
    else:
        index = {str(i): i for i in range(g.n_nodes)}
    out = {}
    for name, k in labels.items():
        if name not in index:
            raise LabelError("labelled node %r not present in graph" % name)
        out[index[name]] = k
    return out


def build_label_matrix(seeds: dict[int, int], n_nodes: int, n_classes: int) -> np.ndarray:
    """0/1 seed matrix Y with Y[i, k] = 1 iff node i is a class-k seed.

    Every class must have at least one seed.
    """
    y = np.zeros((n_nodes, n_classes))
    for node, k in seeds.items():
        if not 0 <= node < n_nodes:
            raise LabelError("seed node %d out of range" % node)
        if not 0 <= k < n_classes:
            raise LabelError("seed class %d out of range" % k)
        y[node, k] = 1.0
    counts = y.sum(axis=0)
    if np.any(counts == 0):
        empty = np.flatnonzero(counts == 0).tolist()
        raise LabelError("classes without seeds: %s" % empty)
    return y


def classify(f: np.ndarray) -> np.ndarray:
    """Per-node argmax over classification functions; ties go to the
    smallest class index."""
    return np.argmax(np.asarray(f), axis=1)


def precision(
    predicted: np.ndarray,
    truth: np.ndarray,
    seeds: dict[int, int],
    include_seeds: bool = False,
) -> float:
    """Fraction of correctly classified nodes, excluding seeds by default."""
    predicted = np.asarray(predicted)
    truth = np.asarray(truth)
    if predicted.shape != truth.shape:
        raise LabelError("predicted and truth must cover the same nodes")
    mask = np.ones(len(truth), dtype=bool)
    if not include_seeds:
        mask[list(seeds)] = False
    if not mask.any():
        raise LabelError("no unlabelled nodes to score")
    return float((predicted[mask] == truth[mask]).mean())


def sample_seeds(
    truth: np.ndarray,
    g: Graph,
    strategy,
    per_class: int,
    rng_seed: int,
) -> dict[int, int]:
    """Draw per_class seed nodes for every class.

    strategy is "uniform" (uniform over each class) or ("high-degree", pool):
    uniform over the pool highest-degree nodes of the class, degree ties
    broken by ascending node id. Deterministic for a fixed rng_seed.
    """
    truth = np.asarray(truth)
    rng = np.random.default_rng(rng_seed)
    degrees = g.degrees()
    n_classes = int(truth.max()) + 1
    seeds: dict[int, int] = {}
    for k in range(n_classes):
        members = np.flatnonzero(truth == k)
        if members.size == 0:
            raise LabelError("class %d is empty in the ground truth" % k)
        if strategy == "uniform":
            pool = members
        else:
            tag, pool_size = strategy
            if tag != "high-degree":
                raise LabelError("strategy must be 'uniform' or ('high-degree', pool)")
            order = sorted(members, key=lambda v: (-degrees[v], v))
            pool = np.array(order[:pool_size])
        if per_class > pool.size:
            raise LabelError(
                "per_class=%d exceeds available pool (%d) for class %d"
                % (per_class, pool.size, k)
            )
        chosen = rng.choice(pool, size=per_class, replace=False)
        for node in chosen:
            seeds[int(node)] = k
    return seeds
