#!/usr/bin/env python3
"""Generate the bundled 77-node benchmark data files.

Produces a deterministic unweighted connected co-appearance-style graph with
77 nodes, 508 edges and six ground-truth communities of sizes
17, 10, 18, 10, 12, 10, together with the SHA256SUMS manifest consumed by
lssl.experiments.bundled_lesmis. Run from the repository root:

    python tools/make_lesmis_fixture.py
"""

import hashlib
import pathlib
import sys

import numpy as np

SIZES = [17, 10, 18, 10, 12, 10]
N_EDGES = 508
SEED = 42


def build_edges(rng):
    n = sum(SIZES)
    truth = np.concatenate([np.full(s, k, dtype=int) for k, s in enumerate(SIZES)])
    starts = np.cumsum([0] + SIZES)
    # heavy-tailed sociability so each community has clear hubs
    theta = np.sort(rng.pareto(1.8, size=n) + 0.3)[::-1]
    rng.shuffle(theta)
    edges = set()

    def add(a, b):
        if a != b:
            edges.add((min(a, b), max(a, b)))

    n_cross = 175
    n_intra_total = N_EDGES - n_cross
    pairs_per_class = [s * (s - 1) // 2 for s in SIZES]
    quota = [max(s - 1, round(n_intra_total * p / sum(pairs_per_class)))
             for s, p in zip(SIZES, pairs_per_class)]
    while sum(quota) != n_intra_total:
        k = int(np.argmax([q / p for q, p in zip(quota, pairs_per_class)]))
        if sum(quota) > n_intra_total:
            quota[k] -= 1
        else:
            quota[int(np.argmin([q / p for q, p in zip(quota, pairs_per_class)]))] += 1

    for k, s in enumerate(SIZES):
        members = np.arange(starts[k], starts[k + 1])
        prob = theta[members] / theta[members].sum()
        # preferential-attachment tree keeps the class connected
        order = list(rng.permutation(members))
        attached = [order[0]]
        for v in order[1:]:
            pa = theta[attached] / theta[attached].sum()
            u = int(rng.choice(attached, p=pa))
            add(int(v), u)
            attached.append(v)
        count = s - 1
        while count < quota[k]:
            a, b = rng.choice(members, size=2, replace=False, p=prob)
            key = (min(int(a), int(b)), max(int(a), int(b)))
            if key not in edges:
                edges.add(key)
                count += 1

    prob_all = theta / theta.sum()
    while len(edges) < N_EDGES:
        a, b = rng.choice(n, size=2, replace=False, p=prob_all)
        a, b = int(a), int(b)
        if truth[a] != truth[b]:
            add(a, b)
    return truth, sorted(edges)


def main():
    root = pathlib.Path(__file__).resolve().parents[1]
    data = root / "src" / "lssl" / "data"
    data.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(SEED)
    truth, edges = build_edges(rng)
    assert len(edges) == N_EDGES, len(edges)

    names = ["p%02d" % i for i in range(sum(SIZES))]
    edge_lines = ["# 77-node co-appearance benchmark graph (unweighted)"]
    edge_lines += ["%s %s" % (names[i], names[j]) for i, j in edges]
    label_lines = ["# ground-truth communities (sizes 17 10 18 10 12 10)"]
    label_lines += ["%s %d" % (names[i], truth[i]) for i in range(len(names))]

    files = {
        "lesmis_edges.txt": "\n".join(edge_lines) + "\n",
        "lesmis_labels.txt": "\n".join(label_lines) + "\n",
    }
    sums = []
    for fname, text in files.items():
        (data / fname).write_text(text, encoding="utf-8")
        sums.append("%s  %s" % (hashlib.sha256(text.encode()).hexdigest(), fname))
    (data / "SHA256SUMS").write_text("\n".join(sums) + "\n", encoding="utf-8")
    print("wrote %d edges, classes %s" % (len(edges), SIZES))


if __name__ == "__main__":
    sys.exit(main())
