"""Exception types shared across the library."""


class ClusteringError(Exception):
    """Base class for all clustagree errors."""


class ParseError(ClusteringError):
    """Malformed input file; message carries file and line context."""


class NegativeWeight(ClusteringError):
    pass


class DuplicateEntry(ClusteringError):
    pass


class EmptyClustering(ClusteringError):
    pass


class EmptyCluster(ClusteringError):
    pass


class EmptyGraph(ClusteringError):
    pass


class UniverseMismatch(ClusteringError):
    pass


class MissingGraph(ClusteringError):
    pass


class NotDisjoint(ClusteringError):
    pass


class NotCrisp(ClusteringError):
    pass


class DegeneratePrecisionRecall(ClusteringError):
    pass


class DegenerateEntropy(ClusteringError):
    pass


class ZeroDenominator(ClusteringError):
    pass


class ZeroTotal(ClusteringError):
    pass


class ZeroNF(ClusteringError):
    pass


class ZeroNorm(ClusteringError):
    pass


class NegativeCell(ClusteringError):
    pass


class CapExceeded(ClusteringError):
    pass


class TooLarge(ClusteringError):
    pass


class RequiresOverlappingMeasure(ClusteringError):
    pass
