# coding=utf-8

"""
Ordalab-specific exceptions.
"""


class OrdalabError(Exception):
    """Superclass for all of our exceptions."""

    def __init__(self, message, code=None):
        super(OrdalabError, self).__init__(message)
        self.code = code if code is not None else getattr(type(self), 'default_code', None)


class BadInput(OrdalabError):
    """An input literal could not be parsed or does not describe a valid object."""
    default_code = 100


class InvalidMap(BadInput):
    """A map literal violates the invariants of a piecewise linear homeomorphism."""
    default_code = 101


class InvalidWord(BadInput):
    """A group word is malformed or uses unknown generators."""
    default_code = 102


class NotUnitInterval(BadInput):
    """A map was expected to be supported in [0, 1]."""
    default_code = 103


class PreconditionViolation(OrdalabError):
    """The inputs do not satisfy the hypotheses of the requested construction."""
    default_code = 200


class FixedPointFree(PreconditionViolation):
    """A map that must fix some point has an empty fixed set."""
    default_code = 201


class DirectionMismatch(PreconditionViolation):
    """Two fixed point free maps translate in opposite directions; apply reverse() first."""
    default_code = 202


class SupportNotInterior(PreconditionViolation):
    """A map moves points too close to 0 or 1."""
    default_code = 203


class CoverConstructionError(PreconditionViolation):
    """The alternating chain of complement intervals could not be completed."""
    default_code = 204


class LimitReached(OrdalabError):
    """Some configured limit was reached."""
    default_code = 300


class SearchBoundExceeded(LimitReached):
    """A minimal exponent search passed its bound."""
    default_code = 301


class SearchExhausted(LimitReached):
    """A breadth first search ran out of depth without finding a word."""
    default_code = 302


class ResourceLimit(LimitReached):
    """A rewriting or evaluation procedure used up its step budget."""
    default_code = 303


class CertificateViolation(OrdalabError):
    """A certificate or postcondition failed its exact check."""
    default_code = 400
