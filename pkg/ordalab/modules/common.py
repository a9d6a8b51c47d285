# coding=utf-8

"""
Functionality useful in all the modules.
"""


class Module(object):
    """Superclass for all module classes."""

    def __init__(self, parent=None):
        self.parent = parent

    def request(self, command, inputs, result, **kwargs):
        """Alias for OrdaLab.request."""
        return self.parent.request(command, inputs, result, **kwargs)

    @property
    def config(self):
        """The facade holding budgets, bounds, depths and the seed."""
        return self.parent
