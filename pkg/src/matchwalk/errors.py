"""Exception types shared across the package."""


class MatchwalkError(Exception):
    """Base class for all domain errors raised by matchwalk."""


class MatchingTooLarge(MatchwalkError):
    """A t-matching on n+1 vertices needs 2t <= n+1."""


class NotAMatching(MatchwalkError):
    """Edge pairs share an endpoint (or an edge is a self-loop)."""


class InvalidArc(MatchwalkError):
    """Arc endpoints are equal or outside the vertex range."""


class ZeroMatching(MatchwalkError):
    """The operation needs at least one marked edge."""


class DegenerateLift(MatchwalkError):
    """Eigenvalues with |lambda| = 1 have no two-dimensional walk lift."""


class NonSymmetric(MatchwalkError):
    """A symmetric matrix was expected."""


class SingularSystem(MatchwalkError):
    """The absorbing-chain linear system could not be solved."""


class DegenerateFit(MatchwalkError):
    """Too few points, or non-positive values, for a log-log fit."""


class MissingMode(MatchwalkError):
    """The dataset lacks a column family required by the report."""


class InfeasibleGrid(MatchwalkError):
    """The requested matching size is infeasible somewhere on the grid."""
