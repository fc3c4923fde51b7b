__all__ = [
    "treefile", "report"
]

from .treefile import (parse_edgelist, format_edgelist, tree_from_json, tree_to_json,
                       to_dot, read_tree, write_tree)

from .report import envelope, dumps, to_csv


def loadtree(filename):
    """tree stored in `filename`, edge list or JSON by extension."""
    return read_tree(filename)
