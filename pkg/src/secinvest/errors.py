"""Exception hierarchy shared by all modules."""


class ModelError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ModelError):
    """An input value is outside its documented domain."""


class ContractError(ModelError):
    """A cross-argument precondition was violated."""


class NumericError(ModelError):
    """A numerical routine encountered a non-finite value."""


class ParseError(DomainError):
    """A scenario document failed to parse or validate."""
