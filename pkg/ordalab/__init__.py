# coding=utf-8

"""
Exact computations with left orderable groups of piecewise linear maps and
braids.
"""

from ordalab.api import OrdaLab  # NOQA
