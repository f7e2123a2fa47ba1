# coding: utf-8

# framer/__init__.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

"""framer is a desk-scale kit for frequency-aligned self-distillation
of diffusion super-resolution models."""


__version__ = '0.1dev'
__author__ = 'the Framer developers'


from os import environ

from logging import getLogger, basicConfig

logger = getLogger('framer')

level = environ.get('FRAMER_LOG')
if level:
    basicConfig(level=int(level),
                format='%(asctime)s %(name)-12s %(thread)d %(message)s')

logger.debug('Imported main module')

from framer.util import Registry

registry = Registry({
    'band_radius': 0.2,
    'energy_eps': 1e-9,
    'dtype': 'float64',
    'image_size': 32})
"""Process wide defaults, see :class:`framer.util.Registry`"""

__all__ = ['registry', 'logger']
