# coding=utf-8

"""
Provides a mapping from ordalab error codes to Python exceptions, and from
exceptions to process exit statuses.
"""

from ordalab.exceptions import *  # NOQA

MAPPING = {
    100: BadInput,                  # Unparseable literal
    101: InvalidMap,                # Breakpoints not increasing, slope not positive, tails discontinuous
    102: InvalidWord,               # Unknown generator or malformed exponent
    103: NotUnitInterval,           # Map moves points outside (0, 1)
    200: PreconditionViolation,     # Hypotheses of a construction fail
    201: FixedPointFree,            # Generator without fixed points
    202: DirectionMismatch,         # c and h translate in opposite directions
    203: SupportNotInterior,        # Support reaches 0 or 1
    204: CoverConstructionError,    # Alternating interval chain broke off
    300: LimitReached,              # Generic limit
    301: SearchBoundExceeded,       # m, n, p or q above the search bound
    302: SearchExhausted,           # Conjugator search depth reached
    303: ResourceLimit,             # Step budget used up
    400: CertificateViolation,      # Exact certificate check failed
}

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_ERROR = 2


def from_code(code):
    """
    Return the specific exception class for the given code, or
    OrdalabError if no specific exception class is available.

    @param code: The error code carried by an exception or a report.
    """
    if code in MAPPING:
        return MAPPING[code]
    else:
        return OrdalabError


def exit_status(exc):
    """
    Return the process exit status for an exception raised by an operation.

    >>> exit_status(CertificateViolation("inclusion fails"))
    1
    >>> exit_status(InvalidWord("n=3 7"))
    2
    """
    if isinstance(exc, CertificateViolation):
        return EXIT_VIOLATION
    return EXIT_ERROR
