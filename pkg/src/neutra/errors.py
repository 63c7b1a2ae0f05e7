"""Exception hierarchy shared by every module."""


class NeutraError(Exception):
    """Base class; ``exit_code`` is what the CLI returns for it."""

    exit_code = 2


class RingMismatch(NeutraError):
    pass


class ShapeMismatch(NeutraError):
    pass


class NotAPolynomial(NeutraError):
    pass


class CapExceeded(NeutraError):
    exit_code = 3


class BudgetExceeded(NeutraError):
    exit_code = 3


class NotProperSubset(NeutraError):
    pass


class SubsetScalarsTooSmall(NeutraError):
    pass


class PartNotSubstructure(NeutraError):
    pass


class ModeUnsupported(NeutraError):
    pass


class NotGenerable(NeutraError):
    """The carrier is not closed, so no subset spans exactly onto it."""


class ScalarSetMismatch(NeutraError):
    pass


class NotTotal(NeutraError):
    pass


class NotInvertible(NeutraError):
    exit_code = 1

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SubspaceInvalid(NeutraError):
    pass


class PrerequisiteFailed(NeutraError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotSubset(NeutraError):
    pass


class NotSubsets(NeutraError):
    pass


class WorkspaceError(NeutraError):
    """Semantic problem in a parsed workspace (unknown name, duplicate...)."""


class InverseNotLinear(NeutraError):
    """A bijective map whose reversed table fails the map axioms."""

    exit_code = 1

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
