# coding: utf-8

# framer/tests/common.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

import os
from unittest import TestCase, skip, skipIf  # NOQA

import numpy as np


slow_tests = bool(os.environ.get('FRAMER_SLOW_TESTS'))


def slow(f):
    """Skip ``f`` unless ``FRAMER_SLOW_TESTS`` is set."""
    return skipIf(not slow_tests, 'FRAMER_SLOW_TESTS not set')(f)


def rng(seed=0):
    return np.random.default_rng(seed)


def pink_field(generator, size, channels=3):
    """Random field with 1/f amplitude spectrum scaled to [0, 1].

       Written independently of :mod:`framer.data` so spectral tests do
       not depend on the sample generator under test.
    """
    fy = np.fft.fftfreq(size)[:, None]
    fx = np.fft.fftfreq(size)[None, :]
    radius = np.sqrt(fx ** 2 + fy ** 2)
    radius[0, 0] = 1.0 / size
    out = np.empty((channels, size, size))
    for c in range(channels):
        phase = generator.uniform(0, 2 * np.pi, (size, size))
        field = np.real(np.fft.ifft2(np.exp(1j * phase) / radius))
        field -= field.min()
        out[c] = field / max(field.max(), 1e-12)

    return out


def naive_dft2(x):
    h, w = x.shape
    out = np.zeros((h, w), dtype=complex)
    for u in range(h):
        for v in range(w):
            for y in range(h):
                for z in range(w):
                    angle = -2j * np.pi * (u * y / float(h) + v * z / float(w))
                    out[u, v] += x[y, z] * np.exp(angle)

    return out


def naive_conv2d(x, k, pad=0):
    b, c, h, w = x.shape
    o, _, kh, kw = k.shape
    xp = np.pad(x, ((0, 0), (0, 0), (pad, pad), (pad, pad)))
    ho = h + 2 * pad - kh + 1
    wo = w + 2 * pad - kw + 1
    out = np.zeros((b, o, ho, wo))
    for n in range(b):
        for m in range(o):
            for y in range(ho):
                for z in range(wo):
                    total = 0.0
                    for ch in range(c):
                        for i in range(kh):
                            for j in range(kw):
                                total += k[m, ch, i, j] * xp[n, ch, y + i, z + j]
                    out[n, m, y, z] = total

    return out
