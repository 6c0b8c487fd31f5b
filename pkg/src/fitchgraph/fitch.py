"""Fitch graphs of edge-labeled trees.

The undirected Fitch graph of a tree joins two leaves whenever the path
between them crosses a 1-edge; the directed variant draws the arc (x, y)
whenever a 1-edge lies between lca(x, y) and y.  Ignoring arc directions
in the directed graph gives back the undirected one.

Both computations run one rooted traversal that counts 1-edges above each
vertex; a pair query then reduces to count arithmetic at the pair's least
common ancestor.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations, permutations

from .graphs import DirectedGraph, SimpleGraph
from .tree import LabeledTree


def _rooted_scan(tree: LabeledTree, root: int) -> tuple[dict[int, int], dict[int, int], dict[int, int]]:
    """BFS from *root*: (parent, depth, ones) with ones[v] = #1-edges on root..v."""
    parent = {root: root}
    depth = {root: 0}
    ones = {root: 0}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y, lab in tree.adjacency[x].items():
            if y not in parent:
                parent[y] = x
                depth[y] = depth[x] + 1
                ones[y] = ones[x] + lab
                queue.append(y)
    return parent, depth, ones


def _lca_from_scan(parent: dict[int, int], depth: dict[int, int], a: int, b: int) -> int:
    while depth[a] > depth[b]:
        a = parent[a]
    while depth[b] > depth[a]:
        b = parent[b]
    while a != b:
        a = parent[a]
        b = parent[b]
    return a


def _pick_root(tree: LabeledTree) -> int:
    if tree.root is not None:
        return tree.root
    internal = [v for v in tree.vertices if not tree.is_leaf(v)]
    if internal:
        return min(internal)
    return min(tree.vertices)  # at most two vertices, both leaves


def undirected_fitch(tree: LabeledTree) -> SimpleGraph:
    """Graph on the leaf names with {x, y} an edge iff the x-y path has a 1-edge.

    Works on rooted and unrooted trees alike; the result does not depend on
    the root.  A single-leaf tree yields the one-vertex graph.
    """
    root = _pick_root(tree)
    parent, depth, ones = _rooted_scan(tree, root)
    leaves = tree.leaves
    names = frozenset(tree.leaf_names.values())
    edges = set()
    for a, b in combinations(leaves, 2):
        w = _lca_from_scan(parent, depth, a, b)
        if ones[a] + ones[b] - 2 * ones[w] > 0:
            x, y = tree.leaf_names[a], tree.leaf_names[b]
            edges.add((x, y) if x < y else (y, x))
    return SimpleGraph(names, frozenset(edges))


def directed_fitch(tree: LabeledTree) -> DirectedGraph:
    """Digraph with arc (x, y) iff a 1-edge lies on the lca(x, y) .. y path."""
    if tree.root is None:
        raise ValueError("directed Fitch graph requires a root")
    parent, depth, ones = _rooted_scan(tree, tree.root)
    leaves = tree.leaves
    names = frozenset(tree.leaf_names.values())
    arcs = set()
    for a, b in permutations(leaves, 2):
        w = _lca_from_scan(parent, depth, a, b)
        if ones[b] - ones[w] > 0:
            arcs.add((tree.leaf_names[a], tree.leaf_names[b]))
    return DirectedGraph(names, frozenset(arcs))


def underlying_undirected(d: DirectedGraph) -> SimpleGraph:
    """Forget arc directions."""
    edges = frozenset((x, y) if x < y else (y, x) for x, y in d.arcs)
    return SimpleGraph(d.vertices, edges)
