class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class PrecisionLossError(ArithmeticError):
    """A computed quantity is not resolved above its own error bound."""
