"""Exception hierarchy.

Every error raised on bad input derives from :class:`GraceHomError`, which the
CLI maps to exit code 2.
"""


class GraceHomError(ValueError):
    pass


class FormatError(GraceHomError):
    """A text file could not be parsed."""


class LoopRejected(GraceHomError):
    pass


class VertexOutOfRange(GraceHomError):
    pass


class ColoringIncomplete(GraceHomError):
    pass


class InvalidColoring(GraceHomError):
    pass


class NotSetOrderedGraceful(GraceHomError):
    pass


class NotSetOrderedOddGraceful(GraceHomError):
    pass


class MappingIncomplete(GraceHomError):
    pass


class NotHomomorphism(GraceHomError):
    pass


class NotSubgraph(GraceHomError):
    pass


class SeedDisconnected(GraceHomError):
    pass


class StageMismatch(GraceHomError):
    pass


class FoldUndefined(GraceHomError):
    """A new vertex sits on an edge with no common neighbour to fold onto."""


class BadModulus(GraceHomError):
    pass


class BadIndex(GraceHomError):
    pass


class ArityMismatch(GraceHomError):
    pass


class DuplicateJoin(GraceHomError):
    pass


class BadJoinSpec(GraceHomError):
    pass


class EmptyElement(GraceHomError):
    pass


class RegistryRejected(GraceHomError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class MatrixInvalid(GraceHomError):
    pass


class NotBipartite(GraceHomError):
    pass


class LengthInfeasible(GraceHomError):
    pass
