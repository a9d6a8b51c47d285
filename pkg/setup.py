# coding=utf-8
import sys

cmdclass = {}

try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup
else:
    from setuptools.command.test import test as TestCommand

    class PyTest(TestCommand):
        def initialize_options(self):
            TestCommand.initialize_options(self)
            self.pytest_args = []

        def finalize_options(self):
            TestCommand.finalize_options(self)
            self.test_args = []
            self.test_suite = True

        def run_tests(self):
            # import here, cause outside the eggs aren't loaded
            import pytest
            errno = pytest.main(self.pytest_args)
            sys.exit(errno)

    cmdclass['test'] = PyTest


setup(
    name='ordalab',
    version='0.1.0',
    author='Antagonist B.V.',
    author_email='info@antagonist.nl',
    packages=['ordalab', 'ordalab.modules', 'ordalab.data'],
    license='LICENSE.rst',
    description='Exact certificates for left orderable groups of piecewise linear maps and braids',
    long_description=open('README.rst').read(),
    install_requires=[
        "lxml >= 3.3.5",
        "sympy >= 1.0",
    ],
    tests_require=[
        "Faker",
        "hypothesis",
        "pytest",
    ],
    entry_points={
        'console_scripts': ['ordalab = ordalab.cli:main'],
    },
    cmdclass=cmdclass,
)
