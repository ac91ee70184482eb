class DomainError(ValueError):
    """Raised when an input lies outside the domain of an operation."""
