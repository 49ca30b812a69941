# PyPI setup file
#

from setuptools import setup, find_packages
from frobpow.version import __version__

with open('README.md', 'r') as f:
    long_description = f.read()

classifiers = [
    'Environment :: Console',
    'Programming Language :: Python :: 3.9',
    'Programming Language :: Python :: 3.10',
    'Programming Language :: Python :: 3.11',
    'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
    'Natural Language :: English',
    'Operating System :: OS Independent',
    'Topic :: Scientific/Engineering :: Mathematics'

]

setup(
    name='frobpow',
    packages=find_packages(exclude=['tests']),
    version=__version__,
    description='Exact Frobenius powers and critical exponents of monomial ideals in characteristic p.',
    long_description=long_description,
    long_description_content_type='text/markdown',
    python_requires='>=3.9',
    install_requires=[
        'numpy',
        'scipy',
        'matplotlib',
        'sympy',
    ],
    extras_require={
        'tests': ['pytest', 'hypothesis'],
    },
    entry_points={
        'console_scripts': [
            'frobpow = frobpow.__main__:main'
        ]
    },
    license='GPLv2',
    keywords=['commutative algebra', 'monomial ideals', 'frobenius', 'positive characteristic', ],
    classifiers=classifiers
)
