class InvalidArgument(ValueError):
    """Malformed input: wrong length, non-binary entries, bad parameters."""


class DomainError(ValueError):
    """Well-formed input outside the domain of the operation.

    Raised e.g. when asking for the predecessor of the first vertex of a
    path, or applying a tree rewrite to a tree outside its source set.
    """


class UnderflowError(InvalidArgument):
    pass


class ResourceLimitError(RuntimeError):
    pass
