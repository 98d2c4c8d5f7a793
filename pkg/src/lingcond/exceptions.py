"""Exception types shared across the package.

``NumericalError`` subclasses signal failures of the numerical machinery
(singular systems, infeasible assignments, degenerate whitening) as opposed
to caller mistakes, which raise plain ``ValueError``. The CLI maps the two
families to distinct exit codes.
"""


class NumericalError(RuntimeError):
    """A numerical procedure failed on otherwise well-formed input."""


class SingularModelError(NumericalError):
    """I - B (or a reduced block of it) is singular or numerically so."""


class WhiteningError(NumericalError):
    """Sample covariance is rank deficient; whitening is impossible."""


class NoAdmissiblePermutationError(NumericalError):
    """Every row permutation leaves a below-tolerance diagonal entry."""
