#!/usr/bin/env python
from setuptools import setup

packages = ['oodc', 'oodc.tests']

# get the version, this will assign __version__
exec(open('oodc/version.py').read())

# read the README.rst
try:
    with open('README.rst') as file:
        long_description = file.read()
except IOError:
    long_description = None

setup(
    name = 'oodc',
    version = __version__,
    description = 'A source-to-source compiler adding operator overloading to a Java subset.',
    long_description = long_description,
    license = 'BSD',
    packages = packages,
    package_data = {
        'oodc': ['stubs/*.mj'],
        'oodc.tests': ['fixtures/*.mj'],
    },
    zip_safe = False,   # the stub library is read from the package directory
    platforms = ['all'],
    setup_requires = ['pytest-runner'],
    install_requires = ['numpy', 'numpydoc', 'mpmath'],
    tests_require=['pytest'],
    entry_points = {
        'console_scripts': ['oodc=oodc.Cli:main'],
    },
    keywords='compiler operator overloading java desugaring',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Developers',
        'Topic :: Software Development :: Compilers',
        'License :: OSI Approved :: BSD License',
        'Programming Language :: Python :: 3',
    ],
)
