"""Exception hierarchy.

Every error carries the name of the module it originates from so the CLI can
report it without inspecting tracebacks.
"""


class PolytropeError(Exception):
    module = "polytropes"


class DimensionMismatch(PolytropeError):
    module = "trop_core"


class NegativeCycle(PolytropeError):
    module = "trop_core"


class SizeLimitExceeded(PolytropeError):
    module = "trop_core"


class InfiniteEntry(PolytropeError):
    module = "trop_core"


class Singular(PolytropeError):
    module = "exact_num"


class NotUnimodular(PolytropeError):
    module = "exact_num"


class InvalidPolytrope(PolytropeError):
    module = "polytrope"


class ZeroGamma(PolytropeError):
    module = "volume"


class NonSimple(PolytropeError):
    module = "volume"


class ObjectiveExhausted(PolytropeError):
    module = "volume"


class UnsupportedDimension(PolytropeError):
    module = "oracle"


class GenerationExhausted(PolytropeError):
    module = "gen"


class ParseError(PolytropeError):
    module = "cli"

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(loc + message)
        self.line = line
        self.column = column


class RaggedRows(ParseError):
    pass
