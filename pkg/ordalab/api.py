# coding=utf-8

"""
Entry point for the ordalab library.
"""

import logging
import os

from ordalab.exceptions import BadInput, CertificateViolation
from ordalab.modules import MODULE_MAPPING
from ordalab.response import ERROR, Report, VIOLATION

log = logging.getLogger(__name__)

DEFAULTS = {
    'budget': 10 ** 6,
    'search_bound': 64,
    'semigroup_depth': 12,
    'group_depth': 6,
    'seed': 0,
}


def _get_module_name(module):
    """
    Return the module name.

    >>> from ordalab.modules import PingPongModule
    >>> _get_module_name(PingPongModule)
    'pingpong'

    >>> _get_module_name(OrdaLab)
    'ordalab'
    """
    name = module.__name__[:-6] if module.__name__.endswith('Module') else module.__name__
    return name.lower()


class OrdaLab(object):
    """
    Bound operations on left orderable groups. Holds the budgets, bounds,
    word check depths and seed shared by every module.
    """

    def __init__(self, budget=DEFAULTS['budget'], search_bound=DEFAULTS['search_bound'],
            semigroup_depth=DEFAULTS['semigroup_depth'], group_depth=DEFAULTS['group_depth'],
            seed=DEFAULTS['seed']):
        for name, value in (('budget', budget), ('search_bound', search_bound),
                            ('semigroup_depth', semigroup_depth), ('group_depth', group_depth)):
            if value < 1:
                raise BadInput('%s must be positive, got %r' % (name, value))

        self.budget = budget
        self.search_bound = search_bound
        self.semigroup_depth = semigroup_depth
        self.group_depth = group_depth
        self.seed = seed

        # Initialize and add all modules.
        for old_name, module in MODULE_MAPPING.items():
            name = _get_module_name(module)
            instance = module(self)
            setattr(self, name, instance)
            if old_name != name:
                setattr(self, old_name, instance)

    def request(self, command, inputs, result, certificate=None, status='ok', code=None):
        """Wrap the outcome of an operation into a Report."""
        report = Report(command, inputs, result, certificate=certificate, status=status, code=code)
        log.debug("%s %s -> %s", command, report.digest, status)
        return report

    def failure(self, command, inputs, exc):
        """The report for an operation that raised `exc`."""
        status = VIOLATION if isinstance(exc, CertificateViolation) else ERROR
        log.debug("%s failed: %s", command, exc)
        return Report(command, inputs, None, status=status, code=exc.code, message=str(exc))


def _get_env(key, default):
    value = os.environ.get('ORDALAB_' + key.upper())
    if value is None or value == '':
        return default
    try:
        return int(value)
    except ValueError:
        raise BadInput('ORDALAB_%s must be an integer, got %r' % (key.upper(), value))


def lab_factory(**overrides):
    """An OrdaLab configured from ORDALAB_* environment variables; keyword overrides win."""
    settings = dict((key, _get_env(key, default)) for key, default in DEFAULTS.items())
    settings.update((key, value) for key, value in overrides.items() if value is not None)
    return OrdaLab(**settings)
