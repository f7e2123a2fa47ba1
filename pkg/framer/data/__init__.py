# coding: utf-8

# framer/data/__init__.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

"""High resolution image sources and degraded training batches.

   Sources are indexable collections of ``[3, H, W]`` images in ``[0, 1]``:
   :class:`SyntheticSource` needs no files, :class:`ImageDirectory` reads
   PNG, PPM and JPEG files. :class:`BatchSource` turns a source into
   batches that are a pure function of the step index, and
   :class:`Prefetcher` prepares them on a worker thread.
"""

from logging import getLogger


logger = getLogger('framer.data')


from framer.data.synthetic import (pink_noise, draw_shapes, synthetic_image,
                                   SyntheticSource)
from framer.data.io import read_image, write_image, ImageDirectory, \
    IMAGE_EXTENSIONS
from framer.data.batches import Batch, BatchSource, Prefetcher, open_source

__all__ = ['pink_noise', 'draw_shapes', 'synthetic_image', 'SyntheticSource',
           'read_image', 'write_image', 'ImageDirectory', 'IMAGE_EXTENSIONS',
           'Batch', 'BatchSource', 'Prefetcher', 'open_source']
