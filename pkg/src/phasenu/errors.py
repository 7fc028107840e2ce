"""Exception taxonomy shared across the package.

Every failure mode a caller can act on gets its own class; the CLI maps any
``PhasenuError`` to exit code 3 with the class name on stderr.
"""


class PhasenuError(Exception):
    """Base class for all solver-domain failures."""


class DegreeError(PhasenuError, ValueError):
    """A polynomial has the wrong degree for the requested operation."""


class BranchPointError(PhasenuError, ValueError):
    """Evaluation requested at the branch point z = 0 of a fractional or
    negative power."""


class DegenerateDiscriminant(PhasenuError):
    """The discriminant's K-dependence cancels; no K-quadratic to solve."""


class NotPerfectSquare(PhasenuError):
    """The radicand is not a perfect square for the supplied K."""


class NoBranch(PhasenuError):
    """No (K, sign) combination yields a decaying, weight-admissible tau."""


class AmbiguousBranch(PhasenuError):
    """The admissibility screen removed the preferred combination and more
    than one alternative survives."""


class UnsupportedSigma(PhasenuError, ValueError):
    """The closed-form factor requires sigma proportional to the variable."""


class CancellationFailure(PhasenuError):
    """The Rodrigues quotient did not reduce to a pure polynomial."""


class NoSignChange(PhasenuError):
    """The eigenvalue residual never changes sign on the scan interval."""


class UnsupportedBranch(PhasenuError, ValueError):
    """The requested coefficient-product branch has no closed form here."""


class UnsupportedRecovery(PhasenuError, ValueError):
    """The operator point does not degenerate to configuration space."""


class ForbiddenCombination(PhasenuError, ValueError):
    """Transform generators from both coefficient groups cannot be mixed."""


class WavefunctionDependentAngle(PhasenuError, ValueError):
    """The requested phase angle depends on the wavefunction itself and is
    not numerically evaluable from (r, p) alone."""


class GridTooCoarse(PhasenuError):
    """The radial grid cannot resolve the requested states."""
