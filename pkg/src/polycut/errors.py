"""Exception hierarchy shared by every polycut module."""

from __future__ import annotations


class GeometryError(Exception):
    """Base class for construction and verification failures."""


class EmptyResult(GeometryError):
    pass


class DegenerateResult(GeometryError):
    pass


class NonConvexInput(GeometryError):
    pass


class NotMidscribed(GeometryError):
    pass


class DepthOutOfRange(GeometryError, ValueError):
    pass


class InconsistentParams(GeometryError):
    pass


class SingularSystem(GeometryError):
    pass


class NoRootInBracket(GeometryError, ValueError):
    pass


class NonUniformResult(GeometryError):
    pass


class NotContained(GeometryError):
    pass


class NotProperSubset(GeometryError):
    pass


class MeshFormatError(ValueError):
    """Raised when a mesh file cannot be parsed; message carries the location."""
