# -*-  coding: utf-8 -*-
"""Exception hierarchy of logres."""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.


class LogresError(Exception):
    """ pass """
    pass


class ConfigurationError(LogresError):
    """ pass """
    pass


class PolySyntaxError(LogresError):
    """Malformed polynomial expression.

    Attributes:

    * ``position`` - zero based offset into the input text.
    """

    def __init__(self, position, message=None):
        self.position = position
        self.message = message
        super(PolySyntaxError, self).__init__(position, message)

    def __str__(self):
        return "syntax error at offset %d: %s" % (self.position, self.message)


class UnknownVariableError(LogresError):
    """Identifier is not one of the declared variables"""

    def __init__(self, name, position=None):
        self.name = name
        self.position = position
        super(UnknownVariableError, self).__init__(name, position)

    def __str__(self):
        return "unknown variable %r at offset %s" % (self.name, self.position)


class VariableIndexError(LogresError, IndexError):
    """Variable index out of range"""
    pass


class InvalidGermError(LogresError):
    """The polynomial does not define a reduced germ through the origin"""

    def __init__(self, reason):
        self.reason = reason
        super(InvalidGermError, self).__init__(reason)

    def __str__(self):
        return "invalid germ: %s" % self.reason


class ZeroDivisorError(LogresError):
    """A denominator is a zero divisor modulo h.

    Attributes:

    * ``denominator`` - the offending denominator.
    * ``witness`` - nonzero element ``w`` of O_D with ``w * denominator == 0``.
    """

    def __init__(self, denominator, witness):
        self.denominator = denominator
        self.witness = witness
        super(ZeroDivisorError, self).__init__(denominator, witness)

    def __str__(self):
        return "zero divisor %s (annihilated by %s)" % (self.denominator, self.witness)


class NoNonzerodivisorError(LogresError):
    """Trial budget exhausted while looking for a nonzerodivisor"""

    def __init__(self, budget, context=''):
        self.budget = budget
        self.context = context
        super(NoNonzerodivisorError, self).__init__(budget, context)

    def __str__(self):
        return "no nonzerodivisor found in %d trials %s" % (self.budget, self.context)


class UncertifiedMatrixError(LogresError):
    """Saito matrix without a verified determinant certificate"""
    pass


class EngineError(LogresError):
    """An internal certificate failed to verify"""
    pass


class PrecisionError(LogresError):
    """Branch jets are too short to decide a valuation"""

    def __init__(self, required, available):
        self.required = required
        self.available = available
        super(PrecisionError, self).__init__(required, available)

    def __str__(self):
        return "precision %s required, branch known to order %s" % (self.required,
                                                                   self.available)


class UnsupportedGermError(LogresError):
    """Germ is outside the class a procedure supports"""
    pass


class InvalidBranchError(LogresError):
    """Branch parametrization failed certification"""

    def __init__(self, reason, branch=None):
        self.reason = reason
        self.branch = branch
        super(InvalidBranchError, self).__init__(reason, branch)

    def __str__(self):
        if self.branch is None:
            return "invalid branch: %s" % self.reason
        return "invalid branch #%s: %s" % (self.branch, self.reason)


class InvalidFactorizationError(LogresError):
    """Supplied factors do not multiply to h up to a unit"""

    def __init__(self, reason):
        self.reason = reason
        super(InvalidFactorizationError, self).__init__(reason)

    def __str__(self):
        return "invalid factorization: %s" % self.reason


class GermMismatchError(LogresError):
    """Operands live over different germs"""
    pass


class ConsistencyError(LogresError):
    """A proven equivalence was violated by computed verdicts.

    Attributes:

    * ``record`` - the :class:`~logres.report.ConsistencyRecord` at fault.
    """

    def __init__(self, record):
        self.record = record
        super(ConsistencyError, self).__init__(record)

    def __str__(self):
        return "consistency failure in %s: %s" % (self.record.name, self.record.detail)


class CorpusError(LogresError):
    """Corpus selection or expectation failure"""
    pass


class NotLogarithmicError(LogresError):
    """A form or field fails the logarithmic condition"""
    pass
