"""Fitch graphs of {0,1}-edge-labeled trees.

Compute the (un)directed Fitch graph of a tree, recognize complete
multipartite graphs with forbidden-subgraph witnesses, synthesize
canonical and minimal explaining trees, and exhaustively verify the whole
story on small leaf sets.  See the README for the file formats and the
``fitchgraph`` command-line tool.
"""

from .enumeration import (
    EnumerationReport,
    bell_number,
    enumerate_trees,
    minimum_tree_size,
    realizable_graphs,
    set_partitions,
    verify_characterization,
)
from .fitch import directed_fitch, underlying_undirected, undirected_fitch
from .graphs import DirectedGraph, SimpleGraph, complete_multipartite
from .io import (
    ParseError,
    parse_edgelist,
    parse_newick,
    serialize_edgelist,
    serialize_newick,
    to_dot,
)
from .recognition import ForbiddenWitness, Partition, recognize, recognize_bruteforce
from .synthesis import canonical_tree, explain, is_least_resolved, minimal_tree
from .tree import (
    LabeledTree,
    contract_edge,
    lca,
    path_label_or,
    reroot,
    restrict_leaves,
    suppress_degree2,
    validate,
)

__all__ = [
    "DirectedGraph",
    "EnumerationReport",
    "ForbiddenWitness",
    "LabeledTree",
    "ParseError",
    "Partition",
    "SimpleGraph",
    "bell_number",
    "canonical_tree",
    "complete_multipartite",
    "contract_edge",
    "directed_fitch",
    "enumerate_trees",
    "explain",
    "is_least_resolved",
    "lca",
    "minimal_tree",
    "minimum_tree_size",
    "parse_edgelist",
    "parse_newick",
    "path_label_or",
    "realizable_graphs",
    "recognize",
    "recognize_bruteforce",
    "reroot",
    "restrict_leaves",
    "serialize_edgelist",
    "serialize_newick",
    "set_partitions",
    "suppress_degree2",
    "to_dot",
    "undirected_fitch",
    "underlying_undirected",
    "validate",
    "verify_characterization",
]

__version__ = "0.1.0"
