"""Exception hierarchy shared by every ghspace module."""


class GHSpaceError(Exception):
    """Base class for all errors raised by ghspace."""


class ParseError(GHSpaceError, ValueError):
    """Input text or value could not be read as an exact rational / space."""


class MetricError(GHSpaceError, ValueError):
    """A matrix fails one of the metric axioms.

    ``witness`` is the lexicographically first offending index tuple.
    """

    def __init__(self, *witness, message=None):
        self.witness = tuple(witness)
        text = f"{type(self).__name__}({','.join(map(str, witness))})"
        if message:
            text = f"{text}: {message}"
        super().__init__(text)


class MalformedMatrix(MetricError):
    pass


class DuplicateLabel(MetricError):
    pass


class AsymmetricMatrix(MetricError):
    pass


class NonzeroDiagonal(MetricError):
    pass


class NonpositiveOffDiagonal(MetricError):
    pass


class TriangleViolation(MetricError):
    """``dist[i][k] > dist[i][j] + dist[j][k]``, reported as ``(i, k, j)``."""


class SinglePoint(GHSpaceError, ValueError):
    pass


class PerturbationTooLarge(GHSpaceError, ValueError):
    pass


class IndexOutOfRange(GHSpaceError, IndexError):
    pass


class NotACorrespondence(GHSpaceError, ValueError):
    pass


class NotIrreducible(GHSpaceError, ValueError):
    pass


class SizeCapExceeded(GHSpaceError, ValueError):
    pass


# the solver raises the same error under the name used by callers of the solver
SolverCapExceeded = SizeCapExceeded


class LengthMismatch(GHSpaceError, ValueError):
    pass


class NotStructurallyIsomorphic(GHSpaceError, ValueError):
    pass


class NotGeneric(GHSpaceError, ValueError):
    pass


class AnchorNotGeneric(NotGeneric):
    pass


class OutsideBall(GHSpaceError, ValueError):
    pass


class DegeneratePadding(GHSpaceError, ValueError):
    pass
