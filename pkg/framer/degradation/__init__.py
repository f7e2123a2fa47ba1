# coding: utf-8

# framer/degradation/__init__.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

"""Two stage blur, resize, noise and compression degradation.

   Pairs are pure functions of ``(image, config, seed)``; all randomness
   comes from one :class:`numpy.random.Generator` consumed in a fixed
   order (crop, stage one, stage two, final sinc, final resize mode).

   >>> pair = make_pair(hr, DegradationConfig(), seed=3)
   >>> pair.lr.shape[1] * 4 == pair.hr.shape[1]
   True
"""

from logging import getLogger

import numpy as np


logger = getLogger('framer.degradation')


def sample_seeds(seed, count):
    """Independent per-sample seeds spawned from ``seed``."""
    children = np.random.SeedSequence(seed).spawn(count)

    return [int(child.generate_state(1)[0]) for child in children]


def make_pairs(images, config, seed):
    """:func:`make_pair` over ``images`` with spawned seeds."""
    images = list(images)
    seeds = sample_seeds(seed, len(images))
    logger.debug('Degrading {0} images from seed {1}'.format(len(images),
                                                              seed))

    return [make_pair(image, config, s) for image, s in zip(images, seeds)]


from framer.degradation.enum import kernel_kinds, resize_modes, directions
from framer.degradation.config import (StageConfig, FinalConfig,
                                       DegradationConfig, neutral_stage)
from framer.degradation._impl.kernel import (build_kernel, random_kernel,
                                             mesh_grid, sigma_matrix)
from framer.degradation._impl.noise import (gaussian_noise, poisson_noise,
                                            random_noise)
from framer.degradation._impl.jpeg import (jpeg_like, quality_table,
                                           block_dct, block_idct)
from framer.degradation._impl.pipeline import (PairSample, apply_stage,
                                               make_pair, filter_image,
                                               resize, random_resize)

__all__ = ['kernel_kinds', 'resize_modes', 'directions', 'StageConfig',
           'FinalConfig', 'DegradationConfig', 'neutral_stage',
           'build_kernel', 'random_kernel', 'mesh_grid', 'sigma_matrix',
           'gaussian_noise', 'poisson_noise', 'random_noise', 'jpeg_like',
           'quality_table', 'block_dct', 'block_idct', 'PairSample',
           'apply_stage', 'make_pair', 'make_pairs', 'sample_seeds',
           'filter_image', 'resize', 'random_resize']
