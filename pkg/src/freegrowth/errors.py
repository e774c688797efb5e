"""Exception types shared across the package."""


class FreeGrowthError(Exception):
    pass


class AlphabetError(FreeGrowthError, ValueError):
    """A letter or word does not belong to the alphabet in use."""


class SizeCapExceeded(FreeGrowthError):
    """A product set grew past the configured element cap.

    ``reached`` is the largest exponent (or operand count) fully computed
    before the cap tripped, when known.
    """

    def __init__(self, message: str, cap: int, reached: int | None = None):
        super().__init__(message)
        self.cap = cap
        self.reached = reached


class PreconditionViolation(FreeGrowthError, ValueError):
    """The lemma being checked does not apply to the given input."""


class VerificationFailure(FreeGrowthError):
    """A lemma's conclusion failed on an input satisfying its hypotheses.

    ``instance`` carries whatever is needed to replay the counterexample.
    """

    def __init__(self, message: str, instance: dict | None = None):
        super().__init__(message)
        self.instance = instance or {}
