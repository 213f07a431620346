"""Seeded random instances for test corpora.

Each generated instance contains at least one source-sink path and is
valid by construction.  Extra arcs are biased toward the source-to-sink
direction so that typical instances carry several competing routes
rather than a single path plus dead arcs.  The same `random.Random`
seed always yields the same corpus.
"""

from __future__ import annotations

import random

from .model import Instance


def random_instance(
    rng: random.Random,
    *,
    max_nodes: int = 8,
    max_arcs: int = 14,
    min_arcs: int = 3,
    k_choices: tuple[int, ...] = (1, 2),
    cap_choices: tuple[int, ...] = (1, 2, 3),
    forward_bias: float = 0.8,
) -> Instance:
    """One random multigraph instance within the given bounds."""
    n = rng.randint(3, max_nodes)
    source, sink = 0, n - 1
    middle = list(range(1, n - 1))
    rng.shuffle(middle)
    route = [source] + middle[: rng.randint(0, len(middle))] + [sink]
    arcs = [
        (route[i], route[i + 1], rng.choice(cap_choices))
        for i in range(len(route) - 1)
    ]
    # Position of each node along the backbone route; off-route nodes get
    # their index rank so "forward" still tends toward the sink.
    rank = {node: i for i, node in enumerate(route)}
    for node in range(n):
        rank.setdefault(node, rank[sink] if node == sink else max(1, node))
    m = rng.randint(max(min_arcs, len(arcs)), max(max_arcs, len(arcs)))
    while len(arcs) < m:
        tail = rng.randrange(n)
        head = rng.randrange(n)
        if tail == head:
            continue
        if rank[tail] > rank[head] and rng.random() < forward_bias:
            tail, head = head, tail
        arcs.append((tail, head, rng.choice(cap_choices)))
    k = rng.choice([k for k in k_choices if k <= len(arcs)] or [1])
    return Instance.build(n, arcs, source, sink, k)
