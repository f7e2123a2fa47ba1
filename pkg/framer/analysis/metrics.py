# coding: utf-8

# framer/analysis/metrics.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from collections import namedtuple
import math

import numpy as np
from scipy import ndimage


#: PSNR reported for identical images
PSNR_CAP = 100.0


class MetricRow(namedtuple('MetricRow', 'image_id psnr ssim')):
    pass


def _pair(a, b, operation):
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise ShapeException(a.shape, b.shape, operation)

    return a, b


def psnr(a, b, peak=1.0):
    """Peak signal to noise ratio in dB, capped at :data:`PSNR_CAP`."""
    a, b = _pair(a, b, 'psnr')
    mse = np.mean((a - b) ** 2)
    if mse == 0:
        return PSNR_CAP

    return min(PSNR_CAP, 10.0 * math.log10(peak ** 2 / mse))


def ssim(a, b, peak=1.0, sigma=1.5, truncate=3.5):
    """Mean structural similarity with a Gaussian window.

       ``sigma=1.5`` and ``truncate=3.5`` give the usual ``11x11`` window;
       ``C1 = (0.01 peak)**2`` and ``C2 = (0.03 peak)**2``. Images are
       ``[H, W]`` or ``[C, H, W]``, channels are filtered independently.
    """
    a, b = _pair(a, b, 'ssim')
    if a.ndim not in (2, 3):
        msg = 'SSIM expects [H, W] or [C, H, W] images'
        raise ShapeException(a.shape, ('C', 'H', 'W'), msg)

    c1 = (0.01 * peak) ** 2
    c2 = (0.03 * peak) ** 2
    spread = (0, sigma, sigma) if a.ndim == 3 else sigma

    def blur(x):
        return ndimage.gaussian_filter(x, spread, truncate=truncate,
                                       mode='reflect')

    mu_a, mu_b = blur(a), blur(b)
    var_a = blur(a * a) - mu_a ** 2
    var_b = blur(b * b) - mu_b ** 2
    cov = blur(a * b) - mu_a * mu_b

    score = ((2 * mu_a * mu_b + c1) * (2 * cov + c2)) / \
        ((mu_a ** 2 + mu_b ** 2 + c1) * (var_a + var_b + c2))

    return float(score.mean())


def image_metrics(outputs, targets, peak=1.0, ids=None):
    """PSNR and SSIM of every output against its target.

       :rtype: list of :class:`MetricRow`
    """
    outputs = list(outputs)
    targets = list(targets)
    if len(outputs) != len(targets):
        raise ShapeException((len(outputs),), (len(targets),),
                             'image_metrics')
    ids = list(ids) if ids is not None else list(range(len(outputs)))

    return [MetricRow(i, psnr(o, t, peak), ssim(o, t, peak))
            for i, o, t in zip(ids, outputs, targets)]


from framer.util import ShapeException
