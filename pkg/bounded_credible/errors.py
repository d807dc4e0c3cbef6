class BoundedCredibleError(ValueError):
    pass


class DomainError(BoundedCredibleError):
    pass


class DistributionMisconfigurationError(BoundedCredibleError):
    pass


class InsufficientDataError(BoundedCredibleError):
    pass


class DegeneratePosteriorError(BoundedCredibleError):
    """1 - G(-t(x)) is too small for the truncated posterior to be evaluated"""


class FeasibilityError(BoundedCredibleError):
    pass


class UnsupportedModelError(BoundedCredibleError):
    pass


class UnknownModelError(BoundedCredibleError):
    pass


class UnknownSpendingError(BoundedCredibleError):
    pass


class SpendingValidationError(BoundedCredibleError):
    pass
