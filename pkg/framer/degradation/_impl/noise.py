# coding: utf-8

# framer/degradation/_impl/noise.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

import math

import numpy as np


LUMA = np.array([0.299, 0.587, 0.114])

# above this mean a normal draw replaces the Poisson one
POISSON_LIMIT = 1e4


def to_gray(img):
    """Luma of a ``[3, H, W]`` image as ``[1, H, W]``."""
    if img.shape[0] != 3:
        return img.mean(axis=0, keepdims=True)

    return np.tensordot(LUMA, img, axes=1)[None]


def gaussian_noise(img, sigma, gray, rng):
    """Additive white noise of ``sigma / 255``, shared by the channels
       when ``gray``."""
    shape = (1,) + img.shape[1:] if gray else img.shape

    return np.broadcast_to(rng.normal(0.0, sigma / 255.0, shape), img.shape)


def _scaled_poisson(values, rng):
    levels = np.clip(np.round(values * 255.0), 0, 255) / 255.0
    vals = 2 ** math.ceil(math.log2(max(len(np.unique(levels)), 2)))
    lam = levels * vals
    if lam.max() > POISSON_LIMIT:
        out = rng.normal(lam, np.sqrt(lam))
    else:
        out = rng.poisson(lam).astype(np.float64)

    return out / vals - levels


def poisson_noise(img, scale, gray, rng):
    """Shot noise of an 8-bit rendition of ``img`` times ``scale``.

       The photon count per unit intensity is the number of distinct
       levels rounded up to a power of two.
    """
    if gray:
        noise = _scaled_poisson(to_gray(img), rng)
    else:
        noise = _scaled_poisson(img, rng)

    return np.broadcast_to(noise * scale, img.shape)


def random_noise(img, stage, rng):
    """Apply the noise of ``stage``.

       Consumes ``rng`` in the order: apply decision, Gaussian decision,
       level (sigma or scale), gray decision, noise field.
    """
    if rng.uniform() >= stage.noise_prob:
        return img

    gaussian = rng.uniform() < stage.gauss_noise_prob
    if gaussian:
        level = rng.uniform(*stage.gauss_sigma)
    else:
        level = rng.uniform(*stage.poisson_scale)
    gray = rng.uniform() < stage.gray_noise_prob

    if gaussian:
        noise = gaussian_noise(img, level, gray, rng)
    else:
        noise = poisson_noise(img, level, gray, rng)

    return np.clip(img + noise, 0.0, 1.0)
