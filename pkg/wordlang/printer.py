from .ast import ChainTwist, Commutator, Inverse, Power, SepTwist, VectorTwist, Word


def _atom(node) -> str:
    if isinstance(node, Word):
        return f"({print_word(node)})"
    return _node(node)


def _node(node) -> str:
    if isinstance(node, ChainTwist):
        return f"c{node.index}"
    if isinstance(node, VectorTwist):
        return "T[" + ",".join(str(x) for x in node.vector) + "]"
    if isinstance(node, SepTwist):
        return f"S{{{node.side_genus}}}"
    if isinstance(node, Power):
        return f"{_atom(node.base)}^{node.exponent}"
    if isinstance(node, Inverse):
        return f"{_atom(node.base)}'"
    if isinstance(node, Commutator):
        return f"[{print_word(node.left)}, {print_word(node.right)}]"
    if isinstance(node, Word):
        return _atom(node)
    raise TypeError(f"not a word node: {node!r}")


def print_word(word) -> str:
    """Canonical text of a word; top-level items are separated by single spaces"""
    if isinstance(word, Word):
        return " ".join(_node(item) for item in word.items)
    return _node(word)
