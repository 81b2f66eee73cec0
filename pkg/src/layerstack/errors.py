"""Exception hierarchy shared across layerstack."""


class LayerStackError(Exception):
    """Base class for all errors raised by layerstack."""


class ParseError(LayerStackError):
    def __init__(self, line, column, reason):
        self.line = line
        self.column = column
        self.reason = reason
        super().__init__(f"line {line}, column {column}: {reason}")


class MissingLayerAttribute(LayerStackError):
    def __init__(self, node_id, detail=""):
        self.node_id = node_id
        msg = f"node {node_id!r} has no layer"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class EmptyGraph(LayerStackError):
    def __init__(self):
        super().__init__("graph has no nodes")


class EmptyLayer(LayerStackError):
    def __init__(self, key=None):
        self.key = key
        super().__init__(f"layer {key!r} has no members")


class NonFinitePosition(LayerStackError):
    def __init__(self, node_id):
        self.node_id = node_id
        super().__init__(f"node {node_id!r} has a non-finite coordinate")


class SingleLayer(LayerStackError):
    def __init__(self, count):
        super().__init__(f"need at least 2 layers, got {count}")
