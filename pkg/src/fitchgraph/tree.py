"""Edge-labeled trees and the elementary operations on them.

A :class:`LabeledTree` is an undirected tree whose every edge carries a
label in {0, 1} and whose degree-1 vertices (the leaves) carry unique
string names.  An optional root turns the tree into a rooted one; nothing
else changes.  All operations are pure: they take a tree and return a new
tree or a value, never mutating their input.

Vertex ids are opaque integers.  Leaf names are the identity that links
trees to the graphs computed from them, so every tree query that concerns
leaves speaks names, not ids.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Iterable, Mapping

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    """Normalize an unordered vertex pair to a canonical (min, max) tuple."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class LabeledTree:
    """A tree with {0,1} edge labels, named leaves, and an optional root.

    Fields
    ------
    vertices    : all vertex ids (kept explicit so the single-vertex tree,
                  which has no edges, is representable)
    edge_labels : map from normalized (min, max) vertex pairs to 0 or 1
    leaf_names  : map from leaf vertex id to its unique name
    root        : a vertex id, or None for an unrooted tree

    Instances are immutable; derived structure (adjacency) is cached on
    first use.  Use :func:`validate` to check the invariants of a tree
    assembled by hand.
    """

    vertices: frozenset[int]
    edge_labels: Mapping[Edge, int]
    leaf_names: Mapping[int, str]
    root: int | None = None

    @staticmethod
    def build(
        edges: Iterable[tuple[int, int, int]],
        leaf_names: Mapping[int, str],
        root: int | None = None,
    ) -> "LabeledTree":
        """Assemble a tree from (u, v, label) triples; vertices are inferred."""
        labels: dict[Edge, int] = {}
        verts: set[int] = set()
        for u, v, lab in edges:
            labels[edge_key(u, v)] = lab
            verts.add(u)
            verts.add(v)
        verts.update(leaf_names)
        return LabeledTree(frozenset(verts), labels, dict(leaf_names), root)

    @staticmethod
    def single(name: str) -> "LabeledTree":
        """The one-vertex tree (its only vertex is a leaf named *name*)."""
        return LabeledTree(frozenset({0}), {}, {0: name}, root=0)

    # -- derived structure -------------------------------------------------

    @cached_property
    def adjacency(self) -> dict[int, dict[int, int]]:
        """neighbor map: vertex -> {neighbor: edge label}."""
        adj: dict[int, dict[int, int]] = {v: {} for v in self.vertices}
        for (u, v), lab in self.edge_labels.items():
            adj[u][v] = lab
            adj[v][u] = lab
        return adj

    @cached_property
    def name_to_leaf(self) -> dict[str, int]:
        return {name: v for v, name in self.leaf_names.items()}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> Iterable[int]:
        return self.adjacency[v]

    def label(self, u: int, v: int) -> int:
        return self.edge_labels[edge_key(u, v)]

    def is_leaf(self, v: int) -> bool:
        return v in self.leaf_names

    @property
    def leaves(self) -> list[int]:
        return sorted(self.leaf_names)

    @property
    def leaf_name_set(self) -> frozenset[str]:
        return frozenset(self.leaf_names.values())

    def inner_edges(self) -> list[Edge]:
        """Edges with no leaf endpoint, sorted."""
        return sorted(
            e for e in self.edge_labels if not (self.is_leaf(e[0]) or self.is_leaf(e[1]))
        )


def validate(tree: LabeledTree) -> str | None:
    """Check every LabeledTree invariant.

    Returns None when the tree is valid, otherwise a description of the
    first violated invariant.  The checks run in a fixed order so the
    reported violation is deterministic.
    """
    if not tree.vertices:
        return "empty vertex set"
    for (u, v), lab in tree.edge_labels.items():
        if u == v:
            return f"self-loop at vertex {u}"
        if (u, v) != edge_key(u, v):
            return f"edge ({u}, {v}) is not normalized"
        if u not in tree.vertices or v not in tree.vertices:
            return f"edge ({u}, {v}) endpoint is not a vertex"
        if lab not in (0, 1):
            return f"edge label must be 0 or 1 (edge ({u}, {v}) has {lab!r})"
    # connectivity, then acyclicity
    start = next(iter(tree.vertices))
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in tree.adjacency[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    if len(seen) != len(tree.vertices):
        return "not connected"
    if len(tree.edge_labels) != len(tree.vertices) - 1:
        return "contains a cycle"
    # leaf naming
    if len(tree.vertices) == 1:
        only = next(iter(tree.vertices))
        if only not in tree.leaf_names:
            return f"unnamed leaf {only}"
    for v in tree.vertices:
        if tree.degree(v) == 1 and v not in tree.leaf_names:
            return f"unnamed leaf {v}"
    for v, name in tree.leaf_names.items():
        if v not in tree.vertices:
            return f"leaf name {name!r} on unknown vertex {v}"
        if tree.degree(v) > 1:
            return f"leaf name {name!r} on internal vertex {v}"
        if not name:
            return f"empty leaf name on vertex {v}"
    names = list(tree.leaf_names.values())
    if len(set(names)) != len(names):
        dup = next(n for n in names if names.count(n) > 1)
        return f"duplicate leaf name {dup!r}"
    if tree.root is not None and tree.root not in tree.vertices:
        return f"root {tree.root} is not a vertex"
    return None


def require_valid(tree: LabeledTree) -> None:
    """Raise ValueError if *tree* violates an invariant."""
    problem = validate(tree)
    if problem is not None:
        raise ValueError(f"invalid tree: {problem}")


def suppress_degree2(tree: LabeledTree) -> LabeledTree:
    """Remove every unnamed degree-2 vertex.

    Each maximal chain of degree-2 vertices is replaced by a single edge
    labeled with the OR of the replaced labels, so every leaf-to-leaf path
    keeps its label-OR.  The operation is idempotent.  If the root is one
    of the suppressed vertices the result is unrooted.

    Raises ValueError if a degree-2 vertex is named (suppressing it would
    delete a leaf).
    """
    for v in tree.vertices:
        if tree.degree(v) == 2 and tree.is_leaf(v):
            raise ValueError(f"cannot suppress leaf {tree.leaf_names[v]!r}")
    doomed = {v for v in tree.vertices if tree.degree(v) == 2}
    if not doomed:
        return tree
    # Walk each chain once, starting from a surviving endpoint.
    new_edges: dict[Edge, int] = {}
    for (u, v), lab in tree.edge_labels.items():
        if u in doomed or v in doomed:
            continue
        new_edges[(u, v)] = lab
    visited: set[int] = set()
    for start in tree.vertices:
        if start in doomed:
            continue
        for nxt in tree.adjacency[start]:
            if nxt not in doomed or nxt in visited:
                continue
            # follow the chain of degree-2 vertices away from start
            acc = tree.label(start, nxt)
            prev, cur = start, nxt
            while cur in doomed:
                visited.add(cur)
                a, b = tree.adjacency[cur]
                step = b if a == prev else a
                acc |= tree.label(cur, step)
                prev, cur = cur, step
            new_edges[edge_key(start, cur)] = acc
    survivors = tree.vertices - doomed
    root = tree.root if tree.root in survivors else None
    return LabeledTree(frozenset(survivors), new_edges, dict(tree.leaf_names), root)


def reroot(tree: LabeledTree, v: int) -> LabeledTree:
    """Return the same tree rooted at *v*.

    *v* must be a non-leaf vertex, except that trees with at most two
    vertices may be rooted anywhere.
    """
    if v not in tree.vertices:
        raise ValueError(f"root {v} is not a vertex")
    if len(tree.vertices) >= 3 and tree.is_leaf(v):
        raise ValueError("leaf root not allowed")
    return replace(tree, root=v)


def contract_edge(tree: LabeledTree, e: tuple[int, int]) -> LabeledTree:
    """Contract an inner edge, merging its endpoints.

    The merged vertex keeps the smaller of the two ids and inherits all
    other incident edges with their labels.  Contracting an edge incident
    to a leaf is refused: it would delete a vertex of the Fitch graph.
    """
    key = edge_key(*e)
    if key not in tree.edge_labels:
        raise ValueError(f"no edge {key} in tree")
    u, v = key
    if tree.is_leaf(u) or tree.is_leaf(v):
        raise ValueError("cannot contract leaf edge")
    keep, gone = (u, v) if u < v else (v, u)
    labels: dict[Edge, int] = {}
    for (a, b), lab in tree.edge_labels.items():
        if (a, b) == key:
            continue
        if a == gone:
            a = keep
        if b == gone:
            b = keep
        labels[edge_key(a, b)] = lab
    root = tree.root
    if root == gone:
        root = keep
    return LabeledTree(tree.vertices - {gone}, labels, dict(tree.leaf_names), root)


def _leaf_vertex(tree: LabeledTree, name: str) -> int:
    try:
        return tree.name_to_leaf[name]
    except KeyError:
        raise ValueError(f"unknown leaf name {name!r}") from None


def _path_vertices(tree: LabeledTree, a: int, b: int) -> list[int]:
    """The unique a..b path, endpoints included (BFS parent walk)."""
    parent: dict[int, int] = {a: a}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            break
        for y in tree.adjacency[x]:
            if y not in parent:
                parent[y] = x
                queue.append(y)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def path_label_or(tree: LabeledTree, x: str, y: str) -> int:
    """1 iff some edge on the unique path between leaves *x* and *y* is a 1-edge."""
    if x == y:
        raise ValueError("path_label_or requires two distinct leaves")
    a = _leaf_vertex(tree, x)
    b = _leaf_vertex(tree, y)
    path = _path_vertices(tree, a, b)
    return int(any(tree.label(p, q) for p, q in zip(path, path[1:])))


def lca(tree: LabeledTree, x: str, y: str) -> int:
    """Least common ancestor of leaves *x* and *y* in a rooted tree."""
    if tree.root is None:
        raise ValueError("lca requires a rooted tree")
    a = _leaf_vertex(tree, x)
    b = _leaf_vertex(tree, y)
    ancestors = set(_path_vertices(tree, tree.root, a))
    for v in reversed(_path_vertices(tree, tree.root, b)):
        if v in ancestors:
            return v
    raise AssertionError("disconnected tree slipped past validation")


def restrict_leaves(tree: LabeledTree, names: Iterable[str]) -> LabeledTree:
    """Restrict the tree to a subset of its leaves.

    Leaves outside *names* are deleted, unnamed vertices left with degree 1
    are pruned, and degree-2 vertices are suppressed.  Leaf-to-leaf path
    label ORs among the kept leaves are unchanged, which is what makes
    Fitch graphs a heritable family.
    """
    keep = set(names)
    unknown = keep - set(tree.leaf_names.values())
    if unknown:
        raise ValueError(f"unknown leaf name {sorted(unknown)[0]!r}")
    if not keep:
        raise ValueError("cannot restrict to an empty leaf set")
    verts = set(tree.vertices)
    labels = dict(tree.edge_labels)
    leaf_names = {v: n for v, n in tree.leaf_names.items() if n in keep}
    # Named leaves never enter the queue, so pruning cannot empty the tree.
    dead = deque(v for v in verts if tree.degree(v) <= 1 and v not in leaf_names)
    adj = {v: dict(tree.adjacency[v]) for v in verts}
    while dead:
        v = dead.popleft()
        if v not in verts:
            continue
        verts.discard(v)
        for w in adj[v]:
            del labels[edge_key(v, w)]
            del adj[w][v]
            if len(adj[w]) <= 1 and w not in leaf_names:
                dead.append(w)
        adj[v] = {}
    root = tree.root if tree.root in verts else None
    pruned = LabeledTree(frozenset(verts), labels, leaf_names, root)
    return suppress_degree2(pruned)
