"""Shared exception types.

PreconditionError marks bad input (CLI exit code 2); InternalCheckError
marks a failed cross-check of something the theory guarantees (exit 3).
"""


class PreconditionError(ValueError):
    pass


class InternalCheckError(RuntimeError):
    pass
