"""Exception hierarchy.

``InputError`` subclasses describe a bad form file or Gram matrix.
``PipelineAssertion`` subclasses mean a proven geometric fact failed to hold
on the computed data; on valid input that is a bug, never a user error.
"""


class VenkovError(Exception):
    pass


class InputError(VenkovError):
    pass


class DimensionMismatch(InputError, ValueError):
    pass


class NotSymmetric(InputError):
    pass


class NotPositiveDefinite(InputError):
    pass


class UnsupportedDimension(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            where += ": "
        super().__init__(where + message)


class DimensionTooSmall(VenkovError):
    pass


class BoxTooSmall(VenkovError):
    pass


class PipelineAssertion(VenkovError):
    pass


class UnboundedPolytope(PipelineAssertion):
    pass


class DualDimensionMismatch(PipelineAssertion):
    pass


class MinkowskiVenkovViolation(PipelineAssertion):
    pass


class UnclassifiableDual3Cell(PipelineAssertion):
    pass


class DegenerateTriple(PipelineAssertion):
    pass


class RedBlueConflict(PipelineAssertion):
    pass


class MissingRedEdge(PipelineAssertion):
    pass
