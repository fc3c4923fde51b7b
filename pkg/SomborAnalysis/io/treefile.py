"""
tree file formats

edge list: first line "n", then one "u v" pair per line; blank lines and
lines starting with "#" are ignored.
JSON: {"n": int, "edges": [[u, v], ...]}
DOT: undirected graph text, rendering is left to graphviz.
"""

import json
import os

from ..errors import TreeFormatError
from ..tree import Tree
from .report import _save_json


def parse_edgelist(text):
    _lines = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    _lines = [line for line in _lines if line]
    if not _lines:
        raise TreeFormatError("empty edge list")

    try:
        n = int(_lines[0])
    except ValueError:
        raise TreeFormatError("first line must be the vertex count, got \"%s\"" % _lines[0])

    edges = []
    for lineno, line in enumerate(_lines[1:], start=2):
        _items = line.replace(",", " ").split()
        if len(_items) != 2:
            raise TreeFormatError("line %d: expected \"u v\", got \"%s\"" % (lineno, line))
        try:
            edges.append((int(_items[0]), int(_items[1])))
        except ValueError:
            raise TreeFormatError("line %d: labels must be integers, got \"%s\"" % (lineno, line))
    return Tree(n, tuple(edges))


def format_edgelist(tree):
    return "%d\n" % tree.n + "".join("%d %d\n" % (u, v) for u, v in tree.edges)


def tree_from_json(obj):
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except ValueError as err:
            raise TreeFormatError("invalid JSON: %s" % err)
    if not isinstance(obj, dict):
        raise TreeFormatError("JSON tree must be an object")
    # accept command output envelopes as well
    if "result" in obj and "n" not in obj:
        obj = obj["result"]
    if "tree" in obj and "n" not in obj:
        obj = obj["tree"]
    try:
        n = obj["n"]
        edges = tuple((u, v) for u, v in obj["edges"])
    except (KeyError, TypeError, ValueError) as err:
        raise TreeFormatError("JSON tree needs \"n\" and \"edges\": %s" % err)
    return Tree(n, edges)


def tree_to_json(tree):
    return tree.to_dict()


def to_dot(tree, name="T", sombor=None):
    '''
    DOT text of `tree`, nodes labelled with their degree.

    keyword arguments:
    - name: graph name [default: T]
    - sombor: value written as the graph label when given
    '''
    _lines = ["graph %s {" % name]
    if sombor is not None:
        _lines.append("  label=\"SO = %.9f\";" % sombor)
    for v, d in enumerate(tree.degrees):
        _lines.append("  %d [label=\"%d (d=%d)\"];" % (v, v, d))
    for u, v in tree.edges:
        _lines.append("  %d -- %d;" % (u, v))
    _lines.append("}")
    return "\n".join(_lines) + "\n"


def read_tree(filename):
    """load a tree from an edge-list file, or a JSON file when the name ends with .json."""
    with open(filename, "r") as _f:
        text = _f.read()
    if os.path.splitext(filename)[1].lower() == ".json":
        return tree_from_json(text)
    return parse_edgelist(text)


def write_tree(filename, tree, fmt="text"):
    if fmt == "json":
        return _save_json(filename, tree_to_json(tree))
    if fmt == "dot":
        text = to_dot(tree)
    else:
        text = format_edgelist(tree)
    with open(filename, "w") as _f:
        _f.write(text)
    return True
