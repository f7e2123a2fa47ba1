# coding: utf-8

# setup.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from os.path import join, abspath, dirname
from setuptools import setup
from sys import version_info


if version_info < (3, 8):
    raise NotImplementedError("Sorry, you need at least Python 3.8")


import framer


install_requires = ['six', 'decorator', 'numpy', 'scipy',
                    'opencv-python-headless', 'PyYAML']

packages = ['framer',
            'framer.tensor',
            'framer.tensor._impl',
            'framer.tensor.tests',
            'framer.spectral',
            'framer.spectral.tests',
            'framer.loss',
            'framer.loss._impl',
            'framer.loss.tests',
            'framer.backbone',
            'framer.backbone._impl',
            'framer.backbone.tests',
            'framer.degradation',
            'framer.degradation._impl',
            'framer.degradation.tests',
            'framer.diffusion',
            'framer.diffusion.tests',
            'framer.data',
            'framer.data.tests',
            'framer.analysis',
            'framer.analysis.tests',
            'framer.harness',
            'framer.harness.tests',
            'framer.tests']


readme = open(join(dirname(abspath(__file__)), 'README.rst'))
long_description = readme.read()
readme.close()

test_require = ['pytest', 'coverage', 'hypothesis']

docs_require = ['sphinx']

dev_require = test_require + docs_require + ['ipython']

setup(
    name='framer',
    description='Frequency aligned self-distillation for diffusion '
                'super-resolution',
    author=framer.__author__,
    version=framer.__version__,
    packages=packages,
    package_data={'framer.harness': ['example.yaml']},
    license='MIT License',
    long_description=long_description,
    install_requires=install_requires,
    extras_require={
        'test': test_require,
        'docs': docs_require,
        'dev': dev_require,
    },
    entry_points={
        'console_scripts': ['framer = framer.cli:main'],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Image Processing',
    ],
)
