"""Shared fixtures and independent test oracles.

The oracles here deliberately take different routes than the library:
path label ORs are recomputed by walking explicit edge paths, multipartite
membership is re-decided through complement components, Bell numbers come
from the binomial recurrence instead of the Bell triangle, and topology
counts from the rooted series-reduced tree recurrence.  Agreement between
routes is what the tests assert.
"""

from __future__ import annotations

import random
from itertools import combinations
from math import comb

import pytest

from fitchgraph.graphs import SimpleGraph
from fitchgraph.tree import Edge, LabeledTree, edge_key


# -- independent oracles ----------------------------------------------------


def path_or_bruteforce(tree: LabeledTree, x: str, y: str) -> int:
    """Label OR along the x..y path, by explicit DFS path reconstruction."""
    a = tree.name_to_leaf[x]
    b = tree.name_to_leaf[y]
    stack = [(a, None, 0)]
    while stack:
        cur, came_from, acc = stack.pop()
        if cur == b:
            return int(acc > 0)
        for nxt, lab in tree.adjacency[cur].items():
            if nxt != came_from:
                stack.append((nxt, cur, acc + lab))
    raise AssertionError("no path found in a tree")


def fitch_bruteforce(tree: LabeledTree) -> SimpleGraph:
    """Undirected Fitch graph via per-pair path walks."""
    names = sorted(tree.leaf_names.values())
    edges = set()
    for x, y in combinations(names, 2):
        if path_or_bruteforce(tree, x, y):
            edges.add((x, y))
    return SimpleGraph(frozenset(names), frozenset(edges))


def directed_fitch_bruteforce(tree: LabeledTree) -> set[tuple[str, str]]:
    """Arc set via explicit root-to-leaf paths and pairwise LCA walks."""
    assert tree.root is not None
    paths: dict[int, list[int]] = {}

    def root_path(v: int) -> list[int]:
        if v not in paths:
            # DFS from root to v
            stack = [(tree.root, [tree.root])]
            while stack:
                cur, trail = stack.pop()
                if cur == v:
                    paths[v] = trail
                    break
                for nxt in tree.adjacency[cur]:
                    if len(trail) < 2 or nxt != trail[-2]:
                        stack.append((nxt, trail + [nxt]))
        return paths[v]

    arcs = set()
    leaves = sorted(tree.leaf_names)
    for a in leaves:
        for b in leaves:
            if a == b:
                continue
            pa, pb = root_path(a), root_path(b)
            common = 0
            while common < min(len(pa), len(pb)) and pa[common] == pb[common]:
                common += 1
            lca_to_b = pb[common - 1:]
            if any(tree.label(u, v) for u, v in zip(lca_to_b, lca_to_b[1:])):
                arcs.add((tree.leaf_names[a], tree.leaf_names[b]))
    return arcs


def multipartite_via_complement(g: SimpleGraph) -> bool:
    """Third route: complete multipartite iff complement components are cliques."""
    comp = g.complement()
    seen: set[str] = set()
    for start in g.vertices:
        if start in seen:
            continue
        component = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for w in comp.adjacency[v]:
                if w not in component:
                    component.add(w)
                    frontier.append(w)
        seen |= component
        for x, y in combinations(sorted(component), 2):
            if not comp.has_edge(x, y):
                return False
    return True


def bell_binomial(n: int) -> int:
    """Bell numbers by B(m+1) = sum_k C(m,k) B(k)."""
    bells = [1]
    while len(bells) <= n:
        m = len(bells) - 1
        bells.append(sum(comb(m, k) * bells[k] for k in range(m + 1)))
    return bells[n]


def series_reduced_rooted_count(m: int) -> int:
    """Rooted trees with m labeled leaves, every inner vertex >= 2 children.

    R(1) = 1; R(m) = sum over set partitions of the leaves into >= 2
    blocks of the product of R(block size).  The number of unrooted trees
    on n leaves with internal degrees >= 3 equals R(n - 1).
    """
    from fitchgraph.enumeration import set_partitions

    if m == 1:
        return 1
    total = 0
    for blocks in set_partitions([str(i) for i in range(m)]):
        if len(blocks) < 2:
            continue
        product = 1
        for b in blocks:
            product *= series_reduced_rooted_count(len(b))
        total += product
    return total


# -- random structure generators ---------------------------------------------


def random_tree(rng: random.Random, names: list[str], p_one: float = 0.4) -> LabeledTree:
    """Random unrooted topology by random leaf insertion, random labels."""
    assert len(names) >= 2
    edges: dict[Edge, int] = {edge_key(0, 1): rng.random() < p_one}
    leaf_names = {0: names[0], 1: names[1]}
    next_id = 2
    internal: list[int] = []
    for name in names[2:]:
        leaf = next_id
        next_id += 1
        if internal and rng.random() < 0.35:
            host = rng.choice(internal)
        else:
            u, v = rng.choice(sorted(edges))
            host = next_id
            next_id += 1
            lab = edges.pop(edge_key(u, v))
            edges[edge_key(u, host)] = lab
            edges[edge_key(host, v)] = rng.random() < p_one
            internal.append(host)
        edges[edge_key(host, leaf)] = rng.random() < p_one
        leaf_names[leaf] = name
    triples = [(u, v, int(lab)) for (u, v), lab in edges.items()]
    return LabeledTree.build(triples, leaf_names)


def random_graph(rng: random.Random, names: list[str], p: float) -> SimpleGraph:
    edges = frozenset(
        (x, y) for x, y in combinations(sorted(names), 2) if rng.random() < p
    )
    return SimpleGraph(frozenset(names), edges)


def subdivide_edge(tree: LabeledTree, e: Edge, lab1: int, lab2: int) -> LabeledTree:
    """Replace edge e by a path through a fresh degree-2 vertex."""
    u, v = edge_key(*e)
    assert tree.edge_labels[(u, v)] == (lab1 | lab2)
    mid = max(tree.vertices) + 1
    triples = [(a, b, lab) for (a, b), lab in tree.edge_labels.items() if (a, b) != (u, v)]
    triples += [(u, mid, lab1), (mid, v, lab2)]
    return LabeledTree.build(triples, dict(tree.leaf_names), root=tree.root)


# -- fixtures -----------------------------------------------------------------


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260810)


@pytest.fixture
def star3_all_zero() -> LabeledTree:
    """S3 with every edge labeled 0; center is vertex 0."""
    return LabeledTree.build(
        [(0, 1, 0), (0, 2, 0), (0, 3, 0)], {1: "a", 2: "b", 3: "c"}, root=0
    )


@pytest.fixture
def star3_one_edge() -> LabeledTree:
    """S3 with the edge to leaf a labeled 1."""
    return LabeledTree.build(
        [(0, 1, 1), (0, 2, 0), (0, 3, 0)], {1: "a", 2: "b", 3: "c"}, root=0
    )
