class InvariantError(RuntimeError):
    """A mathematical invariant failed; always a bug, never bad input."""


class InexactDivisionError(InvariantError):
    pass


class LaurentPhenomenonError(InvariantError):
    pass


class SeifertPathError(InvariantError):
    pass
