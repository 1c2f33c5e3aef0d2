"""Exception types raised across the package."""

from __future__ import annotations


class CactusError(Exception):
    """Base class for every error raised by this package."""


class InvalidEdge(CactusError, ValueError):
    pass


class InvalidVertex(CactusError, ValueError):
    pass


class DuplicateEdge(CactusError, ValueError):
    pass


class Disconnected(CactusError):
    pass


class NotCactus(CactusError):
    pass


class TooLarge(CactusError):
    pass


class MalformedGraph6(CactusError, ValueError):
    pass


class MalformedEdgeList(CactusError, ValueError):
    pass


class InvalidParams(CactusError, ValueError):
    pass


class DegenerateOperand(CactusError, ValueError):
    pass


# Transformation preconditions.
class TransformPreconditionError(CactusError, ValueError):
    pass


class NotCutEdge(TransformPreconditionError):
    pass


class PendantEndpoint(TransformPreconditionError):
    pass


class NotACycleBlock(TransformPreconditionError):
    pass


class NotEndBlock(TransformPreconditionError):
    pass


class CycleTooSmall(TransformPreconditionError):
    pass


class MaxNotAtV1(TransformPreconditionError):
    pass


class G2IsAPath(TransformPreconditionError):
    pass


class PathTooShort(TransformPreconditionError):
    pass
