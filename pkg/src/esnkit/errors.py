"""Exception hierarchy.

Axiom failures are *not* exceptions: checkers return a :class:`~esnkit.report.Report`
with a false verdict.  Exceptions are reserved for bad input and for results
that contradict a proven statement (which always means a bug here).
"""


class InputError(ValueError):
    """Malformed or out-of-range input, or a violated precondition."""


class SizeError(InputError):
    """A search-space guard was exceeded."""


class AxiomFailure(Exception):
    """Raised by constructors that cannot produce a value because an axiom fails.

    The failing report is attached as ``report``.
    """

    def __init__(self, report):
        super().__init__(report.summary())
        self.report = report


class InternalInconsistency(RuntimeError):
    """A derived object violates a law that holds for every valid input."""


class TheoremViolation(RuntimeError):
    """Two computations that a theorem says must agree did not."""
