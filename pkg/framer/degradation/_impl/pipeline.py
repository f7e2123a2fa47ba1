# coding: utf-8

# framer/degradation/_impl/pipeline.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from collections import namedtuple
import math

import cv2
import numpy as np
from scipy import ndimage


INTERPOLATION = {'area': cv2.INTER_AREA, 'bilinear': cv2.INTER_LINEAR,
                 'bicubic': cv2.INTER_CUBIC}


def filter_image(img, kernel):
    """Correlate every channel of ``[C, H, W]`` with ``kernel``.

       Borders reflect without repeating the edge pixel, which also holds
       when the kernel exceeds the image.
    """
    return np.stack([ndimage.correlate(channel, kernel, mode='mirror')
                     for channel in img])


def resize(img, size, mode):
    """Resize ``[C, H, W]`` to ``size = (H', W')`` with OpenCV."""
    mode = resize_modes.cast(mode).name
    h, w = size
    if (h, w) == tuple(img.shape[1:]):
        return img.copy()

    hwc = np.ascontiguousarray(img.transpose(1, 2, 0))
    out = cv2.resize(hwc, (w, h), interpolation=INTERPOLATION[mode])
    if out.ndim == 2:
        out = out[:, :, None]

    return out.transpose(2, 0, 1)


def _mode(rng):
    return resize_modes.values[int(rng.integers(3))]


def random_resize(img, stage, rng):
    """Scale by a factor drawn for up, down or keep.

       Consumes ``rng`` in the order: direction, factor (unless kept),
       interpolation mode.
    """
    direction = directions.values[int(rng.choice(3, p=stage.resize_probs))]
    if direction == 'keep':
        return img

    lo, hi = stage.resize_range
    if direction == 'up':
        factor = rng.uniform(max(lo, 1.0), max(hi, 1.0))
    else:
        factor = rng.uniform(min(lo, 1.0), min(hi, 1.0))
    mode = _mode(rng)

    h, w = img.shape[1:]
    size = (max(1, int(round(h * factor))), max(1, int(round(w * factor))))

    return resize(img, size, mode)


def apply_stage(img, stage, rng):
    """One degradation round: blur, resize, noise, JPEG.

       :param img: ``[C, H, W]`` in ``[0, 1]``
       :param stage: :class:`framer.degradation.config.StageConfig`
       :param rng: :class:`numpy.random.Generator`, consumed step by step
         in the fixed order blur, resize, noise, compression
       :rtype: ``[C, H', W']`` clamped to ``[0, 1]``
    """
    img = np.asarray(img, dtype=np.float64)

    if rng.uniform() < stage.blur_prob:
        img = filter_image(img, random_kernel(stage, rng))

    img = np.clip(random_resize(img, stage, rng), 0.0, 1.0)
    img = random_noise(img, stage, rng)

    if rng.uniform() < stage.jpeg_prob:
        lo, hi = stage.jpeg_quality
        img = jpeg_like(img, int(rng.integers(lo, hi + 1)))

    return np.clip(img, 0.0, 1.0)


class PairSample(namedtuple('PairSample', 'hr lr lr_resized seed')):

    """High resolution crop with its degraded counterpart.

       ``lr_resized`` is ``lr`` upsampled back to the size of ``hr``.
    """


def _crop(hr, size, rng):
    h, w = hr.shape[1:]
    if h < size or w < size:
        msg = 'Image {0}x{1} smaller than crop size {2}'
        raise DataException(msg.format(h, w, size))

    top = int(rng.integers(h - size + 1))
    left = int(rng.integers(w - size + 1))

    return hr[:, top:top + size, left:left + size]


def make_pair(hr, config, seed):
    """Degrade ``hr`` into a training pair.

       :param hr: image ``[C, H, W]`` in ``[0, 1]``
       :param config: :class:`framer.degradation.config.DegradationConfig`
       :param seed: integer seed, the pair is a pure function of
         ``(hr, config, seed)``

       The crop is taken first, then both stages run, the final sinc
       filter (at ``final.sinc_prob``) and the downscale by ``scale``.
    """
    rng = np.random.default_rng(seed)
    hr = _crop(np.asarray(hr, dtype=np.float64), config.final.crop, rng)

    out = apply_stage(hr, config.stage1, rng)
    out = apply_stage(out, config.stage2, rng)

    final = config.final
    if rng.uniform() < final.sinc_prob:
        size = int(rng.choice(np.arange(min(7, final.kernel_size),
                                        final.kernel_size + 1, 2)))
        cutoff = rng.uniform(math.pi / 3, math.pi)
        out = filter_image(out, build_kernel('sinc', size, cutoff=cutoff))

    mode = final.resize_mode
    if mode == 'random':
        mode = _mode(rng)
    extent = final.crop // config.scale
    lr = np.clip(resize(out, (extent, extent), mode), 0.0, 1.0)
    if final.quantize:
        lr = np.round(lr * 255.0) / 255.0

    lr_resized = np.clip(resize(lr, hr.shape[1:], final.upscale_mode),
                         0.0, 1.0)

    return PairSample(hr, lr, lr_resized, seed)


from framer.util import DataException
from framer.degradation.enum import resize_modes, directions
from framer.degradation._impl.kernel import random_kernel, build_kernel
from framer.degradation._impl.noise import random_noise
from framer.degradation._impl.jpeg import jpeg_like
