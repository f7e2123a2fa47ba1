# coding: utf-8

# framer/degradation/_impl/jpeg.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

import numpy as np
from scipy.fft import dctn, idctn


BLOCK = 8

LUMINANCE = np.array([
    [16, 11, 10, 16, 24, 40, 51, 61],
    [12, 12, 14, 19, 26, 58, 60, 55],
    [14, 13, 16, 24, 40, 57, 69, 56],
    [14, 17, 22, 29, 51, 87, 80, 62],
    [18, 22, 37, 56, 68, 109, 103, 77],
    [24, 35, 55, 64, 81, 104, 113, 92],
    [49, 64, 78, 87, 103, 121, 120, 101],
    [72, 92, 95, 98, 112, 100, 103, 99]], dtype=np.float64)


def quality_table(quality):
    """Luminance quantization table scaled the libjpeg way."""
    quality = int(quality)
    if not 1 <= quality <= 100:
        msg = 'JPEG quality must lie in [1, 100], got {0}'
        raise DomainException(msg.format(quality))

    scale = 5000 / quality if quality < 50 else 200 - 2 * quality
    table = np.floor((LUMINANCE * scale + 50) / 100)

    return np.clip(table, 1, 255)


def _blocks(channel):
    h, w = channel.shape
    ph, pw = -h % BLOCK, -w % BLOCK
    padded = np.pad(channel, ((0, ph), (0, pw)), mode='edge')
    bh, bw = padded.shape[0] // BLOCK, padded.shape[1] // BLOCK

    return padded.reshape(bh, BLOCK, bw, BLOCK).transpose(0, 2, 1, 3)


def block_dct(channel):
    """Orthonormal DCT-II of every ``8x8`` block of a 2-D array.

       Extents are padded to multiples of 8 by edge replication; the
       result has shape ``[H/8, W/8, 8, 8]``.
    """
    return dctn(_blocks(channel), axes=(2, 3), norm='ortho')


def block_idct(coefficients, shape):
    """Inverse of :func:`block_dct`, cropped to ``shape``."""
    blocks = idctn(coefficients, axes=(2, 3), norm='ortho')
    bh, bw = blocks.shape[:2]
    full = blocks.transpose(0, 2, 1, 3).reshape(bh * BLOCK, bw * BLOCK)

    return full[:shape[0], :shape[1]]


def jpeg_like(img, quality, table=None):
    """Quantization distortion of baseline JPEG without entropy coding.

       :param img: ``[C, H, W]`` in ``[0, 1]``
       :param quality: integer in ``[1, 100]``
       :param table: explicit ``8x8`` quantization table

       Every channel is level shifted, block transformed, quantized with
       the luminance table and reconstructed. There is no chroma
       subsampling.
    """
    if table is None:
        table = quality_table(quality)
    table = np.asarray(table, dtype=np.float64)

    out = np.empty_like(img, dtype=np.float64)
    for c, channel in enumerate(img):
        coefficients = block_dct(channel * 255.0 - 128.0)
        quantized = np.round(coefficients / table) * table
        out[c] = (block_idct(quantized, channel.shape) + 128.0) / 255.0

    return np.clip(out, 0.0, 1.0)


from framer.util import DomainException
