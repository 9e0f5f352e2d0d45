"""Exception hierarchy shared across the package.

The CLI maps these onto its exit codes: parse problems exit 2, bound
violations exit 3, failed verification suites exit 1.
"""


class QW22Error(Exception):
    """Base class for all package errors."""


class ArithmeticBoundError(QW22Error):
    """An exponent left the checked 64-bit window or an index passed the cap."""


class ProfileError(QW22Error):
    """Operands with mismatched variable profiles, or a generator the
    requested deformation profile does not support."""


class UnsupportedInverseError(QW22Error):
    """Negative power of something that is not an invertible monomial."""


class EvaluationDomainError(QW22Error):
    """Evaluation point outside the Laurent domain (q = 0, or p missing)."""


class ParseError(QW22Error):
    """Syntax error in the expression language; carries line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
