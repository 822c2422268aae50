"""Exception types shared across the library.

Guard errors (TooLarge, TooMany, TooLargeForExactCheck, LemmaOutOfRange)
signal that an exact computation was refused, never that it was truncated.
"""


class TransportlabError(Exception):
    pass


class InvalidMargins(TransportlabError):
    """Margin data is malformed (negative entry, wrong shape, non-integer where required)."""


class Infeasible(TransportlabError):
    """The polytope is empty for the given margins."""


class TooLarge(TransportlabError):
    """Instance exceeds a size guard for exact enumeration."""


class TooLargeForExactCheck(TransportlabError):
    """Subset-sum genericity check refused: 2^p * 2^q too big."""


class TooMany(TransportlabError):
    """Enumeration would produce more objects than the guard allows."""


class NotInPolytope(TransportlabError):
    """A point claimed to lie in a polytope violates its margin equations."""


class LemmaOutOfRange(TransportlabError):
    """Facet characterization asked outside its hypothesis (p*q <= 4)."""


class Degenerate(TransportlabError):
    """Operation requires a non-degenerate instance; caller should perturb."""


class NotGeneric(TransportlabError):
    """Hyperplane passes through a cube vertex; side signatures undefined."""


class InvalidAlpha(TransportlabError):
    """Cost parameter outside (0, 1/p)."""


class BoundViolated(TransportlabError):
    """Encoded system is unbounded or the supplied entry bound is too small."""


class NeedMoreSamples(TransportlabError):
    """Interpolation needs at least dim+1 samples at distinct dilations."""


class WalkBudgetExceeded(TransportlabError):
    """Pivot walk exceeded its 4(p+q-2) budget; reported honestly, never truncated."""
