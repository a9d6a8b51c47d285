# coding=utf-8

"""
Runs the ordalab command line. Try `python -m ordalab braid trivial --word "n=3 1 2 1 -2 -1 -2"`.
"""

from ordalab.cli import main

main()
