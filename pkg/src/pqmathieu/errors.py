"""Exception types shared across the library."""


class DomainError(ValueError):
    """A parameter lies outside the mathematical domain of the operation."""


class DivergenceError(DomainError):
    """The requested series or integral provably diverges."""


class IntegrandError(ArithmeticError):
    """The integrand returned a non-finite value at an interior node."""
