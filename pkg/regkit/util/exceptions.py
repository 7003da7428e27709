#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Exception classes for regkit"""


class RegkitError(Exception):
    """The root regkit exception class"""

    pass


class ParameterError(RegkitError):
    """Exception class for mal-formed inputs"""

    pass


class FieldError(RegkitError):
    """Exception class for invalid coefficient arithmetic"""

    pass


class DivisionByZeroError(FieldError, ZeroDivisionError):
    """Division (or inversion) by the zero element of a field"""

    pass


class RingMismatchError(RegkitError):
    """Operands live in different rings, modules or orders"""

    pass


class InhomogeneousError(RegkitError):
    """A graded-only computation received inhomogeneous data"""

    pass


class GroebnerError(RegkitError):
    """Exception class for failures inside the Groebner engine"""

    pass


class ResolutionError(RegkitError):
    """A computed resolution failed one of its structural checks"""

    pass


class CrossCheckError(RegkitError):
    """Two independent computations of the same invariant disagree.

    This is the signal that a structural theorem failed on concrete data,
    so the command line maps it to its own exit status.
    """

    pass


class ScriptError(RegkitError):
    """A diagnostic raised while parsing or running a session script.

    Parameters
    ----------
    code : str
        Diagnostic code, e.g. ``'E_UNDECLARED'``
    message : str
        Human readable description
    line, column : int or None
        1-based position of the offending token
    """

    def __init__(self, code, message, line=None, column=None):
        self.code = code
        self.line = line
        self.column = column
        self.message = message
        where = f" at {line}:{column}" if line is not None else ""
        super().__init__(f"{code}{where}: {message}")


class RegkitWarning(UserWarning):
    """Warnings for recoverable conditions (zero modules, re-minimalized input)"""

    pass
