"""Text formats: Newick with {0,1} labels, edge lists, and DOT export.

Newick carries the edge label of every non-root subtree in the
branch-length slot as a literal ``:0`` or ``:1``; anything else there is
rejected, not coerced.  Edge lists start with a ``vertices:`` line and
continue with one ``<name> <name>`` line per edge; ``#`` starts a comment.
All parsers raise :class:`ParseError` with a position on malformed input
and never anything else; serializers emit a canonical form (sorted, LF
line endings) so output is stable enough for golden files.
"""

from __future__ import annotations

from .graphs import DirectedGraph, SimpleGraph
from .tree import LabeledTree, validate

_NAME_STOP = set("():,;")


class ParseError(ValueError):
    """Malformed input, with the offset or line where parsing failed."""

    def __init__(self, message: str, pos: int | None = None, line: int | None = None):
        self.message = message
        self.pos = pos
        self.line = line
        where = ""
        if line is not None:
            where = f" (line {line})"
        elif pos is not None:
            where = f" (at offset {pos})"
        super().__init__(message + where)


def _normalize(text: str) -> str:
    return text.replace("\r\n", "\n").replace("\r", "\n")


# --------------------------------------------------------------------------
# Newick
# --------------------------------------------------------------------------


class _NewickParser:
    """Recursive-descent parser; every path out is a tree or a ParseError."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.next_id = 0
        self.edges: list[tuple[int, int, int]] = []
        self.leaf_names: dict[int, str] = {}
        self.name_positions: dict[str, int] = {}

    def error(self, message: str) -> ParseError:
        return ParseError(message, pos=self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fresh(self) -> int:
        v = self.next_id
        self.next_id += 1
        return v

    def read_name(self) -> str:
        start = self.pos
        while self.pos < len(self.text):
            c = self.text[self.pos]
            if c in _NAME_STOP or c.isspace():
                break
            self.pos += 1
        return self.text[start:self.pos]

    def parse(self) -> LabeledTree:
        self.skip_ws()
        root, name = self.parse_node()
        self.skip_ws()
        if self.peek() != ";":
            raise self.error("expected ';'")
        self.pos += 1
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("trailing characters after ';'")
        return self.finish(root, name)

    def parse_node(self) -> tuple[int, str]:
        """Returns (vertex id, trailing name); the name may be empty."""
        self.skip_ws()
        if self.peek() == "(":
            self.pos += 1
            node = self.fresh()
            while True:
                # a trailing name on a group child names a non-leaf node
                # (parent here plus its own children): ignored
                child, _ = self.parse_node()
                self.skip_ws()
                if self.peek() != ":":
                    raise self.error("missing edge label (expected ':0' or ':1')")
                self.pos += 1
                self.skip_ws()
                label_pos = self.pos
                label = self.read_name()
                if label not in ("0", "1"):
                    raise ParseError("edge label must be 0 or 1", pos=label_pos)
                self.edges.append((node, child, int(label)))
                self.skip_ws()
                if self.peek() == ",":
                    self.pos += 1
                    continue
                if self.peek() == ")":
                    self.pos += 1
                    break
                raise self.error("expected ',' or ')'")
            self.skip_ws()
            return node, self.read_name()
        name_pos = self.pos
        name = self.read_name()
        if not name:
            raise self.error("expected a leaf name or '('")
        node = self.fresh()
        self.register_name(node, name, name_pos)
        return node, ""

    def register_name(self, node: int, name: str, pos: int) -> None:
        if name in self.name_positions:
            raise ParseError(f"duplicate leaf name {name!r}", pos=pos)
        self.name_positions[name] = pos
        self.leaf_names[node] = name

    def finish(self, root: int, root_name: str) -> LabeledTree:
        degree: dict[int, int] = {v: 0 for v in range(self.next_id)}
        for u, v, _ in self.edges:
            degree[u] += 1
            degree[v] += 1
        if root_name and degree[root] <= 1:
            self.register_name(root, root_name, self.pos)
        for v, d in degree.items():
            # only the root can end up here: every other group node has
            # degree >= 2 and every bare token was named at parse time
            if d == 1 and v not in self.leaf_names:
                raise ParseError("root with a single child needs a name", pos=0)
        tree = LabeledTree.build(self.edges, self.leaf_names, root=root)
        problem = validate(tree)
        if problem is not None:
            raise ParseError(problem, pos=0)
        return tree


def parse_newick(text: str) -> LabeledTree:
    """Parse a Newick string into a rooted tree (root = outermost node)."""
    return _NewickParser(_normalize(text)).parse()


def serialize_newick(tree: LabeledTree) -> str:
    """Canonical Newick: children ordered by smallest descendant leaf name.

    Inner vertex names are omitted; an internal root is written as ``r``
    and a leaf root keeps its leaf name, so parsing the output reproduces
    the tree up to internal vertex ids.
    """
    if tree.root is None:
        raise ValueError("newick serialization requires a rooted tree")

    def min_leaf(v: int, parent: int | None) -> str:
        if tree.is_leaf(v):
            return tree.leaf_names[v]
        return min(
            min_leaf(w, v) for w in tree.adjacency[v] if w != parent
        )

    def render(v: int, parent: int | None) -> str:
        if tree.is_leaf(v) and (parent is not None or tree.degree(v) == 0):
            return tree.leaf_names[v]
        children = sorted(
            (w for w in tree.adjacency[v] if w != parent),
            key=lambda w: min_leaf(w, v),
        )
        inner = ",".join(f"{render(w, v)}:{tree.label(v, w)}" for w in children)
        return f"({inner})"

    body = render(tree.root, None)
    if tree.is_leaf(tree.root):
        if tree.degree(tree.root) == 0:
            return f"{body};"
        return f"{body}{tree.leaf_names[tree.root]};"
    return f"{body}r;"


# --------------------------------------------------------------------------
# Edge lists
# --------------------------------------------------------------------------


def parse_edgelist(text: str) -> SimpleGraph:
    """Parse the ``vertices:`` / edge-per-line format into a SimpleGraph."""
    vertices: list[str] | None = None
    edges: set[tuple[str, str]] = set()
    for lineno, raw in enumerate(_normalize(text).split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if vertices is None:
            if not line.startswith("vertices:"):
                raise ParseError("expected 'vertices:' header line", line=lineno)
            vertices = line[len("vertices:"):].split()
            if len(set(vertices)) != len(vertices):
                raise ParseError("duplicate vertex name", line=lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("expected two endpoint names", line=lineno)
        x, y = parts
        for end in (x, y):
            if end not in vertices:
                raise ParseError(f"unknown endpoint {end!r}", line=lineno)
        if x == y:
            raise ParseError(f"self-loop at {x!r}", line=lineno)
        key = (x, y) if x < y else (y, x)
        if key in edges:
            raise ParseError(f"duplicate edge {x} {y}", line=lineno)
        edges.add(key)
    if vertices is None:
        raise ParseError("empty input (expected 'vertices:' header)", line=1)
    return SimpleGraph(frozenset(vertices), frozenset(edges))


def serialize_edgelist(g: SimpleGraph) -> str:
    lines = ["vertices: " + " ".join(sorted(g.vertices))]
    lines += [f"{x} {y}" for x, y in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def serialize_arclist(d: DirectedGraph) -> str:
    """Arc-per-line rendering of a digraph (same layout as edge lists)."""
    lines = ["vertices: " + " ".join(sorted(d.vertices))]
    lines += [f"{x} {y}" for x, y in sorted(d.arcs)]
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# DOT export
# --------------------------------------------------------------------------


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(obj: SimpleGraph | DirectedGraph | LabeledTree) -> str:
    """Graphviz text for a graph, digraph, or labeled tree."""
    if isinstance(obj, SimpleGraph):
        lines = ["graph {"]
        lines += [f"  {_dot_quote(v)};" for v in sorted(obj.vertices)]
        lines += [f"  {_dot_quote(x)} -- {_dot_quote(y)};" for x, y in sorted(obj.edges)]
        lines.append("}")
        return "\n".join(lines) + "\n"
    if isinstance(obj, DirectedGraph):
        lines = ["digraph {"]
        lines += [f"  {_dot_quote(v)};" for v in sorted(obj.vertices)]
        lines += [f"  {_dot_quote(x)} -> {_dot_quote(y)};" for x, y in sorted(obj.arcs)]
        lines.append("}")
        return "\n".join(lines) + "\n"
    if isinstance(obj, LabeledTree):
        ids = {v: f"n{i}" for i, v in enumerate(sorted(obj.vertices))}
        lines = ["graph {"]
        for v in sorted(obj.vertices):
            label = obj.leaf_names.get(v, "")
            lines.append(f"  {ids[v]} [label={_dot_quote(label)}];")
        for (u, v), lab in sorted(obj.edge_labels.items()):
            lines.append(f"  {ids[u]} -- {ids[v]} [label={_dot_quote(str(lab))}];")
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise TypeError(f"cannot render {type(obj).__name__} as DOT")
