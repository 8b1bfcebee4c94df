"""Exception hierarchy shared by the library and the CLI."""


class NLieError(Exception):
    """Base class for every error raised by nlie."""


class ParameterError(NLieError, ValueError):
    """A parameter lies outside the range a formula or constructor accepts."""


class ArityMismatchError(ParameterError):
    """The number of bracket arguments, or two algebras' arities, disagree."""


class DimensionMismatchError(ParameterError):
    """A coefficient vector or matrix does not match the algebra dimension."""


class AlgebraFormatError(NLieError, ValueError):
    """An algebra description (JSON) could not be parsed."""


class UnsupportedAlgebraError(NLieError):
    """The algebra is outside the hypothesis of the requested computation."""


class NotNilpotentError(UnsupportedAlgebraError):
    """The lower central series does not reach zero."""


class TermCapExceededError(NLieError):
    """The free-algebra oracle would have to handle more terms than allowed."""

    def __init__(self, term_count: int, cap: int, weight: int):
        self.term_count = term_count
        self.cap = cap
        self.weight = weight
        super().__init__(
            f"weight {weight} needs at least {term_count} terms, "
            f"above the cap of {cap} (raise it with --term-cap or NLIE_TERM_CAP)"
        )
