"""Exception hierarchy shared by the library, the service, and the CLI.

Three coarse families map onto the CLI exit codes and HTTP statuses:
InputError (bad or malformed input, exit 1), PreconditionError (a method's
mathematical precondition does not hold for the given data, exit 2) and
GuardrailExceeded (a combinatorial size limit was hit without --force,
exit 3).
"""


class CyclographError(Exception):
    """Base class for all library errors."""


class InputError(CyclographError):
    """Malformed or inconsistent input (graphs, parameters, subsets)."""


class GraphFormatError(InputError):
    """Unparseable graph text or JSON; carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ParameterError(InputError):
    """Invalid root-of-unity parameter or shorthand."""


class UnknownVertex(InputError):
    """A vertex id does not exist in the graph."""


class UnknownEdge(InputError):
    """An edge id does not exist in the graph."""


class SizeMismatch(InputError):
    """A vertex subset has the wrong cardinality for the operation."""


class PreconditionError(CyclographError):
    """The operation's mathematical precondition fails for this input."""


class DivisionByZero(PreconditionError, ZeroDivisionError):
    """Division by the zero field element."""


class NotCoprime(PreconditionError):
    """The requested power map is not a field automorphism for this order."""


class NotRational(PreconditionError):
    """A rational value was required but the element is irrational."""


class NotAPower(PreconditionError):
    """The value is not an exact integer power of the requested base."""


class NotInSubfield(PreconditionError):
    """The element does not lie in the required subfield."""


class NotPrime(PreconditionError):
    """The conjugate-product counting method requires an odd prime."""


class VanishingComponent(PreconditionError):
    """A determinant vanished: the substructure has a vanishing unicyclic
    component (or is not all-regular), so the counting method does not apply."""


class NonIntegerSolution(PreconditionError):
    """Recovered counts are not non-negative integers."""


class NonIntegerResult(PreconditionError):
    """A value that must be a non-negative integer is not; for the counting
    formulas this signals an implementation bug rather than a user error."""


class NoCycle(CyclographError):
    """Internal inconsistency: a component classified unicyclic has no cycle."""


class GuardrailExceeded(CyclographError):
    """A combinatorial enumeration exceeds the desk-scale limit; pass
    force=True (CLI: --force) to run it anyway."""
