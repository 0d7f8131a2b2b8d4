"""Shared exception types."""


class NotFiniteTypeError(ValueError):
    """The quiver's Cartan form is not positive definite."""


class NonGenericChargeError(ValueError):
    """Two distinct positive roots were mapped to the same ray."""


class HypothesisNotMet(ValueError):
    """A certified step was requested outside its hypotheses."""


class InvariantViolation(RuntimeError):
    """A conclusion the engine's theory guarantees failed on actual data.

    This is a red-alert condition: it means either a bug in the engine or a
    counterexample to one of the facts the reduction machinery relies on.
    It is never caught and ignored internally.
    """
